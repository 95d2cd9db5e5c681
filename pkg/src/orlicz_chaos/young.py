"""Young functions: evaluation, generalized inverse, convex conjugate, and
growth-condition classification.

A Young function is convex, even, vanishes at 0 and tends to +infinity; it
may take the value +infinity.  Four parametric families are supported:

* ``power(p)``:           x -> |x|^p / p,  p > 1
* ``plain_power(p)``:     x -> |x|^p,      p >= 1
* ``exp_minus_one(a)``:   x -> exp(a|x|) - 1 - a|x|,  a > 0
* ``piecewise_convex``:   monotone convex piecewise-linear interpolation of
  knots starting at (0, 0), extended past the last knot with a declared tail
  slope (``math.inf`` makes the function jump to +infinity there)

Growth verdicts are grid evidence, never proofs: a doubling condition is a
universally quantified statement and a finite grid can only witness a
constant or exhibit a counterexample.
"""

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import UnboundedBracket

# Default tolerances: bisection and golden-section are two orders of
# magnitude tighter than the slacks used by property checks, so composed
# expressions stay well inside double precision.
BISECTION_REL_TOL = 1e-12
GOLDEN_REL_TOL = 1e-10
PROPERTY_SLACK = 1e-9
OVERFLOW_GUARD = 1e300

_EMPTY = np.empty(0, dtype=np.float64)


class YoungFunction:
    """A Young function with packed parameters for the evaluation kernels.

    Instances are immutable and safe to share across threads; all methods
    are pure.
    """

    __slots__ = ("family", "params", "knots", "tail_slope",
                 "_code", "_p", "_kx", "_ky", "_ks")

    def __init__(self, family, params=(), knots=(), tail_slope=0.0):
        params = tuple(float(v) for v in params)
        knots = tuple((float(x), float(y)) for x, y in knots)
        if family == "power":
            if len(params) != 1 or params[0] <= 1.0:
                raise ValueError("power family needs a single exponent p > 1")
            code, p = kernels.POWER, params[0]
        elif family == "plain_power":
            if len(params) != 1 or params[0] < 1.0:
                raise ValueError("plain_power family needs a single exponent p >= 1")
            code, p = kernels.PLAIN_POWER, params[0]
        elif family == "exp_minus_one":
            if len(params) != 1 or params[0] <= 0.0:
                raise ValueError("exp_minus_one family needs a single rate a > 0")
            code, p = kernels.EXP_MINUS_ONE, params[0]
        elif family == "piecewise":
            code, p = kernels.PIECEWISE, 0.0
            self._validate_knots(knots, tail_slope)
        else:
            raise ValueError(f"unknown Young function family: {family!r}")

        object.__setattr__(self, "family", family)
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "knots", knots)
        object.__setattr__(self, "tail_slope", float(tail_slope))
        object.__setattr__(self, "_code", code)
        object.__setattr__(self, "_p", p)
        if knots:
            xs = np.array([k[0] for k in knots], dtype=np.float64)
            ys = np.array([k[1] for k in knots], dtype=np.float64)
            slopes = np.diff(ys) / np.diff(xs) if len(knots) > 1 else _EMPTY
        else:
            xs = ys = slopes = _EMPTY
        object.__setattr__(self, "_kx", xs)
        object.__setattr__(self, "_ky", ys)
        object.__setattr__(self, "_ks", np.ascontiguousarray(slopes))

    @staticmethod
    def _validate_knots(knots, tail_slope):
        if not knots or knots[0] != (0.0, 0.0):
            raise ValueError("piecewise knots must start at (0, 0)")
        xs = [k[0] for k in knots]
        ys = [k[1] for k in knots]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ValueError("piecewise knot abscissae must be strictly increasing")
        if any(b < a for a, b in zip(ys, ys[1:])):
            raise ValueError("piecewise knot values must be nondecreasing")
        slopes = [(y2 - y1) / (x2 - x1)
                  for (x1, y1), (x2, y2) in zip(knots, knots[1:])]
        if any(b < a - 1e-15 for a, b in zip(slopes, slopes[1:])):
            raise ValueError("piecewise knots must be convex (nondecreasing slopes)")
        if not math.isinf(tail_slope):
            if slopes and tail_slope < slopes[-1] - 1e-15:
                raise ValueError("tail slope breaks convexity")
            if tail_slope <= 0.0:
                raise ValueError("tail slope must be positive so the function "
                                 "tends to infinity")

    def __setattr__(self, name, value):
        raise AttributeError("YoungFunction is immutable")

    def _key(self):
        return (self.family, self.params, self.knots, self.tail_slope)

    def __eq__(self, other):
        return isinstance(other, YoungFunction) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.family == "piecewise":
            return f"YoungFunction(piecewise, {len(self.knots)} knots, tail={self.tail_slope})"
        return f"YoungFunction({self.family}{self.params})"

    # -- evaluation ---------------------------------------------------------

    def eval(self, x):
        """Phi(|x|); 0 at 0, +inf legal."""
        return kernels.phi_eval(self._code, self._p, self._kx, self._ky,
                                self._ks, self.tail_slope, float(x))

    __call__ = eval

    def generalized_inverse(self, y):
        """inf{x >= 0 : Phi(x) > y}.

        Closed form for the power families, bracketing plus bisection on the
        nondecreasing map otherwise; flat segments resolve to their right
        endpoint (the supremum of the bisection's "<= y" side).
        """
        y = float(y)
        if y < 0.0:
            raise ValueError("generalized inverse needs y >= 0")
        if math.isinf(y):
            return math.inf
        if self.family == "power":
            p = self._p
            return math.pow(p * y, 1.0 / p)
        if self.family == "plain_power":
            return math.pow(y, 1.0 / self._p)
        return self._inverse_bisect(y)

    def _inverse_bisect(self, y):
        hi = 1.0
        while self.eval(hi) <= y:
            hi *= 2.0
            if hi > OVERFLOW_GUARD:
                raise UnboundedBracket(
                    f"no x with Phi(x) > {y} below the overflow guard")
        lo = 0.0
        while hi - lo > max(BISECTION_REL_TOL * hi, 5e-324):
            mid = 0.5 * (lo + hi)
            if self.eval(mid) <= y:
                lo = mid
            else:
                hi = mid
        return lo

    def complement(self, y):
        """Convex conjugate Psi(y) = sup{x|y| - Phi(x) : x >= 0}.

        Golden-section maximization of the concave objective after a
        doubling bracket search; +inf when the objective is detected
        unbounded above.
        """
        y = abs(float(y))
        if y == 0.0:
            return 0.0
        if math.isinf(y):
            return math.inf

        def g(x):
            return x * y - self.eval(x)

        # Expand a three-point bracket; a plateau (piecewise tail with slope
        # exactly y) counts as bracketed, persistent growth past the guard
        # means the sup is infinite.
        xa, xb = 0.0, 0.0
        gb = 0.0
        xc = 1.0
        while True:
            gc = g(xc)
            if gc < gb or (gc - gb) <= 1e-12 * abs(gc):
                break
            if xc > 1e200:
                return math.inf
            xa, xb, gb = xb, xc, gc
            xc *= 2.0

        lo, hi = xa, xc
        invphi = (math.sqrt(5.0) - 1.0) / 2.0
        x1 = hi - invphi * (hi - lo)
        x2 = lo + invphi * (hi - lo)
        g1, g2 = g(x1), g(x2)
        tol = GOLDEN_REL_TOL * (hi - lo)
        while hi - lo > tol:
            if g1 >= g2:
                hi, x2, g2 = x2, x1, g1
                x1 = hi - invphi * (hi - lo)
                g1 = g(x1)
            else:
                lo, x1, g1 = x1, x2, g2
                x2 = lo + invphi * (hi - lo)
                g2 = g(x2)
        return max(0.0, g1, g2, gb)


def power(p):
    """Phi(x) = |x|^p / p with p > 1."""
    return YoungFunction("power", (p,))


def plain_power(p):
    """Phi(x) = |x|^p with p >= 1."""
    return YoungFunction("plain_power", (p,))


def exp_minus_one(a):
    """Phi(x) = exp(a|x|) - 1 - a|x| with a > 0."""
    return YoungFunction("exp_minus_one", (a,))


def piecewise_convex(knots, tail_slope=None):
    """Piecewise-linear convex Young function through ``knots``.

    ``tail_slope`` extends the function past the last knot; ``None`` keeps
    the final segment slope, ``math.inf`` declares a finite-value range.
    """
    knots = tuple((float(x), float(y)) for x, y in knots)
    if tail_slope is None:
        if len(knots) < 2:
            raise ValueError("tail slope required with fewer than two knots")
        (x1, y1), (x2, y2) = knots[-2], knots[-1]
        tail_slope = (y2 - y1) / (x2 - x1)
    return YoungFunction("piecewise", (), knots, float(tail_slope))


# -- growth conditions ------------------------------------------------------


class GrowthCondition(enum.Enum):
    DELTA2 = "delta2"            # Phi(2x) <= K Phi(x)
    DELTA_PRIME = "delta_prime"  # Phi(xy) <= d Phi(x) Phi(y)
    NABLA_PRIME = "nabla_prime"  # Phi(bxy) >= Phi(x) Phi(y)


class GrowthVerdict(enum.Enum):
    WITNESSED_HOLDS = "witnessed_holds"
    WITNESSED_FAILS = "witnessed_fails"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class GrowthReport:
    """Grid evidence for a growth condition.

    ``constant`` is the smallest grid-witnessed K, d or b (within 1% for the
    bracketed case); ``counterexample`` is a concrete failing point when the
    verdict is WITNESSED_FAILS.  A verdict is never a proof.
    """

    condition: GrowthCondition
    is_global: bool
    constant: float | None
    x0: float
    grid_max: float
    verdict: GrowthVerdict
    counterexample: tuple | None = None

    @property
    def holds(self):
        return self.verdict is GrowthVerdict.WITNESSED_HOLDS


def _log_grid(lo, hi, points):
    return np.logspace(math.log10(lo), math.log10(hi), points)


def _profile_verdict(ratios, fail_threshold):
    """Shared verdict logic: a rising unbounded-looking ratio profile fails,
    a rising bounded one is inconclusive, otherwise the max ratio is the
    witnessed constant."""
    finite = [r for _, r in ratios if math.isfinite(r)]
    if not finite:
        return GrowthVerdict.INCONCLUSIVE, None, None
    constant = max(finite)
    arg = max(ratios, key=lambda t: t[1] if math.isfinite(t[1]) else -1.0)
    q = max(1, len(ratios) // 4)
    head = [r for _, r in ratios[:q] if math.isfinite(r)]
    tail = [r for _, r in ratios[-q:] if math.isfinite(r)]
    rising = bool(head and tail and min(tail) > max(head))
    if rising and constant > fail_threshold:
        return GrowthVerdict.WITNESSED_FAILS, constant, arg[0]
    if rising:
        return GrowthVerdict.INCONCLUSIVE, constant, None
    return GrowthVerdict.WITNESSED_HOLDS, constant, None


def check_growth(phi, condition, x0=0.0, grid_max=1e6, points=1200,
                 fail_threshold=1e6):
    """Grid evidence for a doubling/product growth condition beyond x0.

    The grid is log-spaced with at least ``points`` samples (pairs, for the
    two-variable conditions).  WITNESSED_HOLDS carries the smallest constant
    seen on the grid; WITNESSED_FAILS carries a counterexample point.
    """
    if points < 1000:
        raise ValueError("grid must have at least 1000 points")
    is_global = x0 == 0.0
    lo = max(x0, 1e-8)

    if condition is GrowthCondition.DELTA2:
        ratios = []
        for x in _log_grid(lo, grid_max, points):
            fx, f2x = phi.eval(x), phi.eval(2.0 * x)
            if fx == 0.0:
                if f2x > 0.0:
                    return GrowthReport(condition, is_global, None, x0,
                                        grid_max, GrowthVerdict.WITNESSED_FAILS,
                                        (x,))
                continue
            if math.isinf(fx):
                continue
            if math.isinf(f2x):
                return GrowthReport(condition, is_global, None, x0, grid_max,
                                    GrowthVerdict.WITNESSED_FAILS, (x,))
            ratios.append(((x,), f2x / fx))
        verdict, constant, arg = _profile_verdict(ratios, fail_threshold)
        return GrowthReport(condition, is_global, constant, x0, grid_max,
                            verdict, arg)

    side = max(32, math.isqrt(points) + 1)
    axis = _log_grid(lo, grid_max, side)

    if condition is GrowthCondition.DELTA_PRIME:
        ratios = []
        for x in axis:
            fx = phi.eval(x)
            for y in axis:
                fy = phi.eval(y)
                denom = fx * fy
                num = phi.eval(x * y)
                if denom == 0.0:
                    if num > 0.0:
                        return GrowthReport(condition, is_global, None, x0,
                                            grid_max,
                                            GrowthVerdict.WITNESSED_FAILS,
                                            (x, y))
                    continue
                if math.isinf(denom):
                    continue
                if math.isinf(num):
                    return GrowthReport(condition, is_global, None, x0,
                                        grid_max, GrowthVerdict.WITNESSED_FAILS,
                                        (x, y))
                ratios.append(((x, y), num / denom))
        ratios.sort(key=lambda t: t[0][0] * t[0][1])
        verdict, constant, arg = _profile_verdict(ratios, fail_threshold)
        return GrowthReport(condition, is_global, constant, x0, grid_max,
                            verdict, arg)

    if condition is GrowthCondition.NABLA_PRIME:
        targets = [(x, y, phi.eval(x) * phi.eval(y)) for x in axis for y in axis]

        def failing_pair(b):
            for x, y, rhs in targets:
                if not phi.eval(b * x * y) >= rhs:
                    return (x, y)
            return None

        hi = 1.0
        fail = failing_pair(hi)
        while fail is not None:
            hi *= 2.0
            if hi > 1e12:
                return GrowthReport(condition, is_global, None, x0, grid_max,
                                    GrowthVerdict.WITNESSED_FAILS, fail)
            fail = failing_pair(hi)
        lo_b = 0.5 * hi
        while failing_pair(lo_b) is None:
            hi = lo_b
            lo_b *= 0.5
            if lo_b < 1e-12:
                break
        while hi - lo_b > 0.01 * hi:
            mid = 0.5 * (lo_b + hi)
            if failing_pair(mid) is None:
                hi = mid
            else:
                lo_b = mid
        return GrowthReport(condition, is_global, hi, x0, grid_max,
                            GrowthVerdict.WITNESSED_HOLDS)

    raise ValueError(f"unknown growth condition: {condition!r}")


@dataclass(frozen=True)
class YoungInequalityReport:
    holds: bool
    min_slack: float
    worst_pair: tuple[float, float] | None


def check_young_inequality(phi, samples, tol=PROPERTY_SLACK):
    """Check x*y <= Phi(x) + Psi(y) on sampled nonnegative pairs.

    Returns the minimum slack Phi(x) + Psi(y) - x*y and the pair attaining
    it; equality is reached exactly on conjugate pairs.
    """
    min_slack = math.inf
    worst = None
    for x, y in samples:
        x, y = abs(float(x)), abs(float(y))
        psi = phi.complement(y)
        if math.isinf(psi):
            continue
        slack = phi.eval(x) + psi - x * y
        if slack < min_slack:
            min_slack, worst = slack, (x, y)
    return YoungInequalityReport(min_slack >= -tol, min_slack, worst)


@dataclass(frozen=True)
class NFunctionReport:
    at_zero: bool
    at_infinity: bool
    vanishes_only_at_zero: bool

    @property
    def is_n_function(self):
        return self.at_zero and self.at_infinity and self.vanishes_only_at_zero


def is_n_function(phi, lo=1e-8, hi=1e8, points=200):
    """Evidence that Phi(x)/x -> 0 at 0, -> inf at infinity, and Phi > 0 off 0.

    Log-grid thresholds: the ratio must fall below 1e-6 at the smallest grid
    point with a decreasing trend toward 0, exceed 1e6 at the largest with an
    increasing trend, and the sampled values must be positive.
    """
    zero_grid = _log_grid(lo, 1.0, points)
    inf_grid = _log_grid(1.0, hi, points)
    zero_ratios = [phi.eval(x) / x for x in zero_grid]
    inf_ratios = [phi.eval(x) / x for x in inf_grid]
    q = max(1, points // 4)
    at_zero = zero_ratios[0] < 1e-6 and max(zero_ratios[:q]) <= min(zero_ratios[-q:])
    at_infinity = inf_ratios[-1] > 1e6 and max(inf_ratios[:q]) <= min(inf_ratios[-q:])
    positive = all(phi.eval(x) > 0.0 for x in zero_grid) and \
        all(phi.eval(x) > 0.0 for x in inf_grid)
    return NFunctionReport(at_zero, at_infinity, positive)
