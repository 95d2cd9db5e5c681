"""The composition operator f -> f o phi on an atomic space, orbit norm
sequences, and finite-horizon irregular/semi-irregular vector evidence.

Limit statements about orbits (liminf of norms 0, limsup infinite) are not
decidable at a finite horizon; the evidence operations replace them with
explicit caller-supplied thresholds, and every report records the horizon it
was computed over.
"""

import enum
import math
from dataclasses import dataclass

from .errors import ContractViolation, SetExplosion
from .orlicz import SimpleFunction, indicator_norm, luxemburg_norm
from .space import DEFAULT_SET_CAP, AtomSet, iterated_preimage

INDICATOR_CHECK_REL_TOL = 1e-8


def apply(t, f):
    """Compose: (C f)(b) = f(forward(b)); support is the preimage of the
    support with zero values dropped (values are nonzero, so none arise)."""
    acc = {}
    for a, v in zip(f.support, f.values):
        for b in t.preimage(a):
            if b in acc:
                raise ContractViolation(
                    f"fibers overlap at atom {b}; preimage rule is not a "
                    "function inverse")
            acc[b] = v
    return SimpleFunction(sorted(acc), [acc[b] for b in sorted(acc)])


def apply_n(t, f, n, cap=DEFAULT_SET_CAP):
    """n-fold composition with a support-cardinality cap."""
    g = f
    for _ in range(n):
        g = apply(t, g)
        if len(g) > cap:
            raise SetExplosion(
                f"orbit support grew to {len(g)} atoms, cap is {cap}")
    return g


class Trend(enum.Enum):
    DECAYING = "decaying"
    GROWING = "growing"
    OSCILLATING = "oscillating"
    FLAT = "flat"


def classify_trend(norms, dead_band=0.05):
    """Deterministic trend label from the head/tail windows (first and last
    10% of the horizon, 5% dead band).

    Growth and decay compare window envelopes rather than bare means: an
    oscillation whose amplitude grows raises the tail mean without the whole
    tail sitting above the whole head, and should read as oscillating.
    """
    w = max(1, len(norms) // 10)
    head, tail = norms[:w], norms[-w:]
    mx, mn = max(norms), min(norms)
    if mx <= 0.0 or (mx - mn) <= dead_band * mx:
        return Trend.FLAT
    if min(tail) > max(head) * (1.0 + dead_band):
        return Trend.GROWING
    if max(tail) < min(head) * (1.0 - dead_band):
        return Trend.DECAYING
    return Trend.OSCILLATING


@dataclass(frozen=True)
class OrbitReport:
    """Gauge norms of the orbit f, Cf, C^2 f, ... up to the horizon."""

    horizon: int
    norms: tuple[float, ...]
    min_norm: float
    argmin: int
    max_norm: float
    argmax: int
    trend: Trend

    @classmethod
    def from_norms(cls, norms):
        norms = tuple(float(x) for x in norms)
        argmin = min(range(len(norms)), key=norms.__getitem__)
        argmax = max(range(len(norms)), key=norms.__getitem__)
        return cls(len(norms) - 1, norms, norms[argmin], argmin,
                   norms[argmax], argmax, classify_trend(norms))

    def as_dict(self):
        return {
            "horizon": self.horizon,
            "norms": list(self.norms),
            "min_norm": self.min_norm,
            "argmin": self.argmin,
            "max_norm": self.max_norm,
            "argmax": self.argmax,
            "trend": self.trend.value,
        }


def orbit_norms(phi, space, t, f, horizon, cap=DEFAULT_SET_CAP):
    """Iterate the composition operator and record the gauge norm at each
    step n = 0..horizon.

    For indicator vectors each entry is cross-checked against the closed-form
    indicator norm of the iterated preimage, which must be the exact same
    atom set as the orbit support.
    """
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    const = f.indicator_constant()
    base = AtomSet(f.support)
    norms = []
    g = f
    for n in range(horizon + 1):
        norm = luxemburg_norm(phi, space, g)
        if const is not None and not g.is_zero:
            expected_set = iterated_preimage(t, base, n, cap=cap)
            if AtomSet(g.support) != expected_set:
                raise ContractViolation(
                    f"orbit support at step {n} differs from the iterated "
                    "preimage")
            expected = abs(const) * indicator_norm(phi, space, expected_set)
            if abs(norm - expected) > INDICATOR_CHECK_REL_TOL * expected:
                raise ContractViolation(
                    f"indicator norm cross-check failed at step {n}: "
                    f"{norm} vs {expected}")
        norms.append(norm)
        if n < horizon:
            g = apply(t, g)
            if len(g) > cap:
                raise SetExplosion(
                    f"orbit support grew to {len(g)} atoms, cap is {cap}")
    return OrbitReport.from_norms(norms)


@dataclass(frozen=True)
class SemiIrregularEvidence:
    """Evidence that liminf of the orbit norms is 0 while limsup stays
    positive: a dip below eps anywhere plus a value above the floor in the
    tail half of the horizon (so the large witness is not an initial
    transient)."""

    witnessed: bool
    small_index: int
    large_index: int
    eps: float
    floor: float

    def as_dict(self):
        return {"witnessed": self.witnessed, "small_index": self.small_index,
                "large_index": self.large_index, "eps": self.eps,
                "floor": self.floor}


def semi_irregular_evidence(report, eps, floor):
    """Finite-horizon semi-irregularity witness on an orbit report."""
    if not eps < floor:
        raise ValueError("eps must be smaller than floor")
    norms = report.norms
    small_index = report.argmin
    tail_start = report.horizon // 2
    large_index = max(range(tail_start, len(norms)), key=norms.__getitem__)
    witnessed = norms[small_index] <= eps and norms[large_index] >= floor
    return SemiIrregularEvidence(witnessed, small_index, large_index,
                                 eps, floor)


@dataclass(frozen=True)
class IrregularEvidence:
    """Evidence that liminf of the orbit norms is 0 while the supremum blows
    up past the threshold; ``max_grows`` compares against a doubled-horizon
    report when the caller escalates."""

    witnessed: bool
    small_index: int
    large_index: int
    eps: float
    blowup: float
    max_grows: bool | None = None

    def as_dict(self):
        return {"witnessed": self.witnessed, "small_index": self.small_index,
                "large_index": self.large_index, "eps": self.eps,
                "blowup": self.blowup, "max_grows": self.max_grows}


def irregular_evidence(report, eps, blowup, doubled=None):
    """Finite-horizon irregular-vector witness on an orbit report."""
    if not eps > 0.0:
        raise ValueError("eps must be positive")
    witnessed = report.min_norm <= eps and report.max_norm >= blowup
    max_grows = None if doubled is None else doubled.max_norm > report.max_norm
    return IrregularEvidence(witnessed, report.argmin, report.argmax,
                             eps, blowup, max_grows)
