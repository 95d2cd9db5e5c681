"""Modulars and norms on the Orlicz space over an atomic measure space.

Only finitely supported functions are represented: every vector the chaos
criteria need (indicators and level-set combinations) is finitely supported,
and finite support keeps every modular an exact sum.

The Luxemburg (gauge) norm is computed by bisection on the nonincreasing map
k -> modular(f / k) against level 1.  The Orlicz norm is computed through
the equivalent one-dimensional convex minimization
``inf_{s>0} (1 + modular(s * f)) / s`` and validated against the sandwich
``N(f) <= |f| <= 2 N(f)`` rather than assumed.
"""

import math

import numpy as np

from . import kernels
from .errors import EmptySetError, UnboundedBracket
from .space import AtomSet, measure
from .young import BISECTION_REL_TOL

ORLICZ_NORM_REL_TOL = 1e-8


class SimpleFunction:
    """A finitely supported real function on atoms.

    ``support`` is strictly sorted and ``values`` holds the matching nonzero
    values; the zero function has empty support.
    """

    __slots__ = ("support", "values")

    def __init__(self, support=(), values=()):
        support = tuple(int(a) for a in support)
        values = tuple(float(v) for v in values)
        if len(support) != len(values):
            raise ValueError("support and values must have equal length")
        if any(b <= a for a, b in zip(support, support[1:])):
            raise ValueError("support must be strictly sorted")
        if any(v == 0.0 or not math.isfinite(v) for v in values):
            raise ValueError("values must be nonzero finite reals")
        object.__setattr__(self, "support", support)
        object.__setattr__(self, "values", values)

    def __setattr__(self, name, value):
        raise AttributeError("SimpleFunction is immutable")

    @classmethod
    def from_dict(cls, mapping):
        items = sorted((int(a), float(v)) for a, v in mapping.items()
                       if float(v) != 0.0)
        return cls([a for a, _ in items], [v for _, v in items])

    @classmethod
    def indicator(cls, atoms, value=1.0):
        atoms = AtomSet(atoms)
        return cls(atoms.atoms, [float(value)] * len(atoms))

    @property
    def is_zero(self):
        return not self.support

    def __len__(self):
        return len(self.support)

    def __eq__(self, other):
        return (isinstance(other, SimpleFunction)
                and self.support == other.support
                and self.values == other.values)

    def __hash__(self):
        return hash((self.support, self.values))

    def __repr__(self):
        return f"SimpleFunction({dict(zip(self.support, self.values))})"

    def value_at(self, a):
        try:
            return self.values[self.support.index(a)]
        except ValueError:
            return 0.0

    def as_dict(self):
        return dict(zip(self.support, self.values))

    def scale(self, c):
        c = float(c)
        if c == 0.0:
            return SimpleFunction()
        return SimpleFunction(self.support, [c * v for v in self.values])

    def add(self, other):
        acc = dict(zip(self.support, self.values))
        for a, v in zip(other.support, other.values):
            acc[a] = acc.get(a, 0.0) + v
        return SimpleFunction.from_dict(acc)

    def max_abs(self):
        return max((abs(v) for v in self.values), default=0.0)

    def indicator_constant(self):
        """The common value when all values coincide (an indicator multiple),
        else None."""
        if not self.values:
            return None
        c = self.values[0]
        return c if all(v == c for v in self.values) else None


def _arrays(space, f):
    values = np.array(f.values, dtype=np.float64)
    weights = np.array([space.weight(a) for a in f.support], dtype=np.float64)
    return values, weights


def modular(phi, space, f, k):
    """The modular at scale k: sum of Phi(|f(a)| / k) * weight(a)."""
    if not k > 0.0:
        raise ValueError("scale k must be positive")
    if f.is_zero:
        return 0.0
    values, weights = _arrays(space, f)
    return kernels.modular_sum(phi._code, phi._p, phi._kx, phi._ky, phi._ks,
                               phi.tail_slope, values, weights, 1.0 / k)


def luxemburg_norm(phi, space, f, rel_tol=BISECTION_REL_TOL):
    """Gauge norm inf{k > 0 : modular(f / k) <= 1}; 0 for the zero function.

    The returned k* satisfies modular(k*(1+tol)) <= 1 <= modular(k*(1-tol))
    whenever the modular is finite near the boundary.
    """
    if f.is_zero:
        return 0.0
    values, weights = _arrays(space, f)
    result = kernels.luxemburg_bisect(phi._code, phi._p, phi._kx, phi._ky,
                                      phi._ks, phi.tail_slope, values, weights,
                                      rel_tol)
    if result < 0.0:
        raise UnboundedBracket(
            "modular never exceeded 1; Young function data is degenerate")
    return result


def indicator_norm(phi, space, atom_set):
    """Closed-form gauge norm of an indicator: 1 / Phi^{-1}(1 / mu(F))."""
    mu = measure(space, atom_set)
    if mu == 0.0:
        raise EmptySetError("indicator norm needs a set of positive measure")
    return 1.0 / phi.generalized_inverse(1.0 / mu)


def orlicz_norm(phi, space, f, rel_tol=ORLICZ_NORM_REL_TOL):
    """Orlicz norm via scalar minimization of (1 + modular(s f)) / s over s.

    The objective is quasiconvex, so a golden-section search over log s after
    a doubling bracket finds the minimum; when the objective is still falling
    at the expansion guard (linear-growth tails) the boundary value is the
    infimum.
    """
    if f.is_zero:
        return 0.0
    values, weights = _arrays(space, f)

    def objective(s):
        rho = kernels.modular_sum(phi._code, phi._p, phi._kx, phi._ky,
                                  phi._ks, phi.tail_slope, values, weights, s)
        return (1.0 + rho) / s

    norm = luxemburg_norm(phi, space, f)
    b = 1.0 / norm
    ob = objective(b)
    a, c = 0.5 * b, 2.0 * b
    oa, oc = objective(a), objective(c)
    best = min(oa, ob, oc)
    for _ in range(1200):
        if oa < ob:
            c, oc = b, ob
            b, ob = a, oa
            a *= 0.5
            oa = objective(a)
            best = min(best, oa)
        elif oc < ob:
            a, oa = b, ob
            b, ob = c, oc
            c *= 2.0
            if c > 1e280:
                return best
            oc = objective(c)
            best = min(best, oc)
        else:
            break

    lo, hi = math.log(a), math.log(c)
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = hi - invphi * (hi - lo)
    x2 = lo + invphi * (hi - lo)
    g1, g2 = objective(math.exp(x1)), objective(math.exp(x2))
    best = min(best, g1, g2)
    while hi - lo > rel_tol:
        if g1 <= g2:
            hi, x2, g2 = x2, x1, g1
            x1 = hi - invphi * (hi - lo)
            g1 = objective(math.exp(x1))
            best = min(best, g1)
        else:
            lo, x1, g1 = x1, x2, g2
            x2 = lo + invphi * (hi - lo)
            g2 = objective(math.exp(x2))
            best = min(best, g2)
    return best
