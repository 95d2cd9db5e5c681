"""Exception hierarchy.

Input-contract violations and runtime resource caps are kept distinct so the
CLI can map them to different exit codes (2 and 3 respectively).
"""


class OrliczChaosError(Exception):
    """Base class for all package errors."""


class ContractViolation(OrliczChaosError):
    """A declared invariant failed at runtime (bad weight, fiber mismatch...)."""


class ValidationError(OrliczChaosError):
    """A system definition failed validation; message carries the field path."""


class ParseError(OrliczChaosError):
    """A system definition file is not well-formed."""


class DegenerateSet(OrliczChaosError):
    """A set with zero or non-finite measure where positive finite is required."""


class EmptySetError(DegenerateSet):
    """Indicator norm of a zero-measure set requested."""


class InjectivityViolation(ContractViolation):
    """A map declared injective has a sampled fiber with more than one point."""


class NoSmallNorms(OrliczChaosError):
    """Orbit norms never set a new record low, so no candidate subsequence
    exists in the window; finite-horizon evidence against chaos for this
    vector."""


class UnboundedBracket(OrliczChaosError):
    """Bracketing failed below the overflow guard; the Young function data is
    bounded where it must grow."""


class InfiniteFiber(OrliczChaosError):
    """A preimage rule reported more elements than the fiber cap."""


class SetExplosion(OrliczChaosError):
    """An iterated set operation exceeded the cardinality cap."""
