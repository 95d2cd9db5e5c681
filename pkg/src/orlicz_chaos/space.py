"""Countable atomic measure spaces and measurable self-maps.

Sets are finite atom lists, so every measure is an exact sum and every
preimage is an exact enumeration.  Weight rules and map rules must be pure
(same input, same output); all types here are immutable and safe to share.

Quantified claims (sup over atoms, "for every set") are always evaluated
over an explicit window of atom indices that the caller supplies and every
report records.
"""

import math
from dataclasses import dataclass

from .errors import (ContractViolation, InfiniteFiber, InjectivityViolation,
                     SetExplosion)

DEFAULT_FIBER_CAP = 10**6
DEFAULT_SET_CAP = 10**7


class AtomSet:
    """An immutable finite set of atom indices, kept sorted and deduplicated."""

    __slots__ = ("atoms",)

    def __init__(self, atoms=()):
        object.__setattr__(self, "atoms", tuple(sorted({int(a) for a in atoms})))

    def __setattr__(self, name, value):
        raise AttributeError("AtomSet is immutable")

    def __iter__(self):
        return iter(self.atoms)

    def __len__(self):
        return len(self.atoms)

    def __contains__(self, a):
        return a in self.atoms

    def __eq__(self, other):
        return isinstance(other, AtomSet) and self.atoms == other.atoms

    def __hash__(self):
        return hash(self.atoms)

    def __repr__(self):
        return f"AtomSet({list(self.atoms)})"

    def union(self, other):
        return AtomSet(self.atoms + tuple(other))


class AtomicSpace:
    """A sigma-finite measure space whose atoms are (a subset of) the integers.

    ``weight`` maps an atom index to its strictly positive finite measure.
    ``atoms`` is an explicit finite domain, or None for the full integer
    line.  ``total`` declares a finite total measure when the space has one.
    """

    __slots__ = ("_weight", "atoms", "total")

    def __init__(self, weight, atoms=None, total=None):
        object.__setattr__(self, "_weight", weight)
        object.__setattr__(self, "atoms",
                           None if atoms is None else tuple(sorted(set(atoms))))
        object.__setattr__(self, "total", None if total is None else float(total))

    def __setattr__(self, name, value):
        raise AttributeError("AtomicSpace is immutable")

    @property
    def total_finite(self):
        return self.total is not None

    def contains(self, n):
        return self.atoms is None or n in self.atoms

    def weight(self, n):
        """Measure of the atom ``n``; validates the positivity contract."""
        if not self.contains(n):
            raise ContractViolation(f"atom {n} is outside the declared domain")
        try:
            w = float(self._weight(n))
        except KeyError:
            raise ContractViolation(f"atom {n} has no declared weight") from None
        if not (w > 0.0) or math.isinf(w):
            raise ContractViolation(
                f"atom {n} has non-positive or non-finite weight {w!r}")
        return w

    def check_partial_sums(self, window, rel_tol=1e-9):
        """Partial sums over a window must not exceed a declared total."""
        if self.total is None:
            return
        s = math.fsum(self.weight(a) for a in window if self.contains(a))
        if s > self.total * (1.0 + rel_tol):
            raise ContractViolation(
                f"partial sum {s} exceeds declared total {self.total}")


class Transformation:
    """A self-map of atom indices with exact per-atom preimage enumeration.

    ``forward`` is the map itself, ``preimage`` returns the finite fiber over
    an atom.  Consistency (b in fiber of a iff forward(b) == a) is checked on
    every queried fiber; a declared injective map must have fibers of size
    at most 1.
    """

    __slots__ = ("_forward", "_preimage", "injective", "fiber_cap")

    def __init__(self, forward, preimage, injective=False,
                 fiber_cap=DEFAULT_FIBER_CAP):
        object.__setattr__(self, "_forward", forward)
        object.__setattr__(self, "_preimage", preimage)
        object.__setattr__(self, "injective", bool(injective))
        object.__setattr__(self, "fiber_cap", int(fiber_cap))

    def __setattr__(self, name, value):
        raise AttributeError("Transformation is immutable")

    def forward(self, n):
        return int(self._forward(n))

    def preimage(self, a):
        fiber = tuple(sorted({int(b) for b in self._preimage(a)}))
        if len(fiber) > self.fiber_cap:
            raise InfiniteFiber(
                f"fiber over {a} has {len(fiber)} elements, cap is {self.fiber_cap}")
        for b in fiber:
            if self.forward(b) != a:
                raise ContractViolation(
                    f"preimage rule lists {b} over {a} but forward({b}) = "
                    f"{self.forward(b)}")
        if self.injective and len(fiber) > 1:
            raise InjectivityViolation(
                f"map declared injective but fiber over {a} is {fiber}")
        return fiber


# -- measure and set operations ----------------------------------------------


def measure(space, atom_set):
    """Exact measure of a finite atom set; 0 for the empty set."""
    return math.fsum(space.weight(a) for a in atom_set)


def preimage_set(t, atom_set):
    """Union of the fibers over the members, deduplicated and sorted."""
    acc = set()
    for a in atom_set:
        acc.update(t.preimage(a))
    return AtomSet(acc)


def iterated_preimage(t, atom_set, n, cap=DEFAULT_SET_CAP):
    """n-fold preimage; n = 0 returns the set unchanged."""
    if n < 0:
        raise ValueError("iteration count must be >= 0")
    current = atom_set if isinstance(atom_set, AtomSet) else AtomSet(atom_set)
    for _ in range(n):
        current = preimage_set(t, current)
        if len(current) > cap:
            raise SetExplosion(
                f"iterated preimage grew to {len(current)} atoms, cap is {cap}")
    return current


def forward_image(t, atom_set, n):
    """n-fold forward image {forward(a) : a in set}."""
    if n < 0:
        raise ValueError("iteration count must be >= 0")
    current = set(atom_set)
    for _ in range(n):
        current = {t.forward(a) for a in current}
    return AtomSet(current)


@dataclass(frozen=True)
class BoundednessReport:
    """Per-atom supremum of measure(fiber) / weight, with the maximizing atom.

    On an atomic space this per-atom supremum equals the supremum of
    mu(preimage(F)) / mu(F) over all finite sets drawn from the window, by
    additivity of the measure over disjoint fibers.
    """

    sup_ratio: float
    witness: int | None
    window_size: int


def boundedness_constant(space, t, window):
    """Boundedness diagnostic for the composition operator over a window."""
    window = list(window)
    if not window:
        raise ValueError("window must be nonempty")
    best = -math.inf
    witness = None
    for a in window:
        ratio = measure(space, t.preimage(a)) / space.weight(a)
        if ratio > best:
            best, witness = ratio, a
    return BoundednessReport(best, witness, len(window))


def check_nonsingularity(space, t, window):
    """Verify the strict-positivity contract on a window and its fibers.

    With strictly positive atom weights there are no nonempty null sets, so
    non-singularity is automatic once the contract holds; a violation
    surfaces as ContractViolation.
    """
    for a in window:
        space.weight(a)
        for b in t.preimage(a):
            space.weight(b)
    return True


# -- standard weight rules and maps ------------------------------------------


def geometric_weights(ratio):
    """w(n) = ratio^n over the integer line."""
    r = float(ratio)
    if not r > 0.0:
        raise ValueError("ratio must be positive")
    return lambda n: math.pow(r, n)


def table_weights(entries):
    """Explicit finite weight table; queries outside it violate the contract."""
    table = {int(k): float(v) for k, v in entries.items()}
    return lambda n: table[n]


def block_oscillating_weights(up_factor, down_factor, block_lengths):
    """Symmetric zig-zag weights: w depends on |n| through alternating blocks.

    Walking outward from 0, the weight is multiplied by ``up_factor`` at each
    step of an up block and divided by ``down_factor`` at each step of a down
    block.  Block lengths follow ``block_lengths``; once the list is
    exhausted each further block doubles the previous length, so the
    oscillation amplitude keeps growing with |n|.
    """
    u, d = float(up_factor), float(down_factor)
    lengths = [int(x) for x in block_lengths]
    if u <= 1.0 or d <= 1.0:
        raise ValueError("up and down factors must exceed 1")
    if not lengths or any(x <= 0 for x in lengths):
        raise ValueError("block lengths must be positive")
    lu, ld = math.log2(u), math.log2(d)

    def weight(n):
        m = abs(int(n))
        a = b = 0
        i = 0
        length = lengths[0]
        up = True
        while m > 0:
            step = min(length, m)
            if up:
                a += step
            else:
                b += step
            m -= step
            up = not up
            i += 1
            length = lengths[i] if i < len(lengths) else length * 2
        return math.pow(2.0, a * lu - b * ld)

    return weight


def shift_map(step=1):
    """The translation n -> n + step on the integer line (injective)."""
    k = int(step)
    return Transformation(lambda n: n + k, lambda a: (a - k,), injective=True)


def rotation_map(modulus):
    """The cyclic rotation n -> n + 1 (mod m) on m atoms (bijective)."""
    m = int(modulus)
    if m < 1:
        raise ValueError("modulus must be >= 1")
    return Transformation(lambda n: (n + 1) % m, lambda a: ((a - 1) % m,),
                          injective=True)


def table_map(mapping):
    """An explicit finite map given as {atom: image}; preimages by inversion."""
    fwd = {int(k): int(v) for k, v in mapping.items()}
    fibers = {}
    for b, a in fwd.items():
        fibers.setdefault(a, []).append(b)
    injective = all(len(f) == 1 for f in fibers.values())

    def forward(n):
        try:
            return fwd[n]
        except KeyError:
            raise ContractViolation(f"atom {n} is outside the map table") from None

    return Transformation(forward, lambda a: tuple(fibers.get(a, ())),
                          injective=injective)
