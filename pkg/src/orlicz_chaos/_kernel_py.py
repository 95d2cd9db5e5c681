"""Pure-Python evaluation kernels.

Fallback backend for the hot loops: scalar Young-function evaluation, the
modular sum, and the Luxemburg-norm bisection.  The compiled backend in
``_kernel.pyx`` mirrors this file expression for expression so both produce
bit-identical results; keep the two in sync when editing either.

Family codes: 0 = |x|^p / p, 1 = |x|^p, 2 = exp(a|x|) - 1 - a|x|,
3 = piecewise linear through knots (kx, ky) with segment slopes ks and a
final slope beyond the last knot (may be +inf).
"""

import math

_INF = math.inf

POWER = 0
PLAIN_POWER = 1
EXP_MINUS_ONE = 2
PIECEWISE = 3


def phi_eval(code, p, kx, ky, ks, tail_slope, x):
    """Evaluate the Young function at x (evenness applied, +inf legal)."""
    x = abs(x)
    if x == 0.0:
        return 0.0
    if math.isinf(x):
        return _INF
    if code == POWER:
        return math.pow(x, p) / p
    if code == PLAIN_POWER:
        return math.pow(x, p)
    if code == EXP_MINUS_ONE:
        ax = p * x
        if ax > 709.0:
            return _INF
        return math.expm1(ax) - ax
    # piecewise: knots ascend from (0, 0); binary search for the segment
    n = len(kx)
    last = n - 1
    if x >= kx[last]:
        if x == kx[last]:
            return ky[last]
        if math.isinf(tail_slope):
            return _INF
        return ky[last] + tail_slope * (x - kx[last])
    lo = 0
    hi = last
    while hi - lo > 1:
        mid = (lo + hi) >> 1
        if kx[mid] <= x:
            lo = mid
        else:
            hi = mid
    return ky[lo] + ks[lo] * (x - kx[lo])


def modular_sum(code, p, kx, ky, ks, tail_slope, values, weights, inv_k):
    """Sum of weight * phi(|value| * inv_k) over the support."""
    total = 0.0
    for i in range(len(values)):
        total += weights[i] * phi_eval(code, p, kx, ky, ks, tail_slope, values[i] * inv_k)
    return total


def luxemburg_bisect(code, p, kx, ky, ks, tail_slope, values, weights, rel_tol):
    """Luxemburg norm by bisection on k -> modular(f / k) against level 1.

    Returns -1.0 when the modular never exceeds 1 down to the underflow
    guard, which signals invalid Young-function data (bounded phi).
    """
    n = len(values)
    if n == 0:
        return 0.0
    vmax = 0.0
    for i in range(n):
        av = abs(values[i])
        if av > vmax:
            vmax = av
    k = vmax
    m = modular_sum(code, p, kx, ky, ks, tail_slope, values, weights, 1.0 / k)
    if m > 1.0:
        lo = k
        hi = 2.0 * k
        for _ in range(4096):
            m = modular_sum(code, p, kx, ky, ks, tail_slope, values, weights, 1.0 / hi)
            if m <= 1.0:
                break
            lo = hi
            hi = 2.0 * hi
    else:
        hi = k
        lo = 0.5 * k
        for _ in range(4096):
            if lo < 1e-300:
                return -1.0
            m = modular_sum(code, p, kx, ky, ks, tail_slope, values, weights, 1.0 / lo)
            if m > 1.0:
                break
            hi = lo
            lo = 0.5 * lo
        else:
            return -1.0
    while hi - lo > rel_tol * hi:
        mid = 0.5 * (lo + hi)
        m = modular_sum(code, p, kx, ky, ks, tail_slope, values, weights, 1.0 / mid)
        if m <= 1.0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)
