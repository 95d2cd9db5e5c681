# cython: language_level=3
"""Compiled evaluation kernels.

Mirror of ``_kernel_py.py`` (same family codes, same arithmetic, same
bisection bookkeeping) so the two backends produce bit-identical results.
Keep in sync when editing either.
"""

from libc.math cimport INFINITY, expm1, fabs, isinf, pow

cdef enum:
    C_POWER = 0
    C_PLAIN_POWER = 1
    C_EXP_MINUS_ONE = 2

POWER = 0
PLAIN_POWER = 1
EXP_MINUS_ONE = 2
PIECEWISE = 3


cdef inline double _phi(int code, double p, const double[::1] kx,
                        const double[::1] ky, const double[::1] ks,
                        double tail_slope, double x) noexcept nogil:
    cdef double ax
    cdef Py_ssize_t n, last, lo, hi, mid
    x = fabs(x)
    if x == 0.0:
        return 0.0
    if isinf(x):
        return INFINITY
    if code == POWER:
        return pow(x, p) / p
    if code == PLAIN_POWER:
        return pow(x, p)
    if code == EXP_MINUS_ONE:
        ax = p * x
        if ax > 709.0:
            return INFINITY
        return expm1(ax) - ax
    n = kx.shape[0]
    last = n - 1
    if x >= kx[last]:
        if x == kx[last]:
            return ky[last]
        if isinf(tail_slope):
            return INFINITY
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


cdef inline double _modular(int code, double p, const double[::1] kx,
                            const double[::1] ky, const double[::1] ks,
                            double tail_slope, const double[::1] values,
                            const double[::1] weights, double inv_k) noexcept nogil:
    cdef double total = 0.0
    cdef Py_ssize_t i
    for i in range(values.shape[0]):
        total += weights[i] * _phi(code, p, kx, ky, ks, tail_slope, values[i] * inv_k)
    return total


def phi_eval(int code, double p, const double[::1] kx, const double[::1] ky,
             const double[::1] ks, double tail_slope, double x):
    return _phi(code, p, kx, ky, ks, tail_slope, x)


def modular_sum(int code, double p, const double[::1] kx, const double[::1] ky,
                const double[::1] ks, double tail_slope,
                const double[::1] values, const double[::1] weights,
                double inv_k):
    return _modular(code, p, kx, ky, ks, tail_slope, values, weights, inv_k)


def luxemburg_bisect(int code, double p, const double[::1] kx,
                     const double[::1] ky, const double[::1] ks,
                     double tail_slope, const double[::1] values,
                     const double[::1] weights, double rel_tol):
    cdef Py_ssize_t n = values.shape[0]
    cdef double vmax, av, k, m, lo, hi, mid
    cdef Py_ssize_t i
    cdef int it
    if n == 0:
        return 0.0
    vmax = 0.0
    for i in range(n):
        av = fabs(values[i])
        if av > vmax:
            vmax = av
    k = vmax
    m = _modular(code, p, kx, ky, ks, tail_slope, values, weights, 1.0 / k)
    if m > 1.0:
        lo = k
        hi = 2.0 * k
        for it in range(4096):
            m = _modular(code, p, kx, ky, ks, tail_slope, values, weights, 1.0 / hi)
            if m <= 1.0:
                break
            lo = hi
            hi = 2.0 * hi
    else:
        hi = k
        lo = 0.5 * k
        found = False
        for it in range(4096):
            if lo < 1e-300:
                return -1.0
            m = _modular(code, p, kx, ky, ks, tail_slope, values, weights, 1.0 / lo)
            if m > 1.0:
                found = True
                break
            hi = lo
            lo = 0.5 * lo
        if not found:
            return -1.0
    while hi - lo > rel_tol * hi:
        mid = 0.5 * (lo + hi)
        m = _modular(code, p, kx, ky, ks, tail_slope, values, weights, 1.0 / mid)
        if m <= 1.0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)
