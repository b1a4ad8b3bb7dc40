# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting kernels.

Representation-count tables for positive definite binary and ternary forms:
out[m] = number of integer vectors v with f(v) = m (optionally restricted to
fixed coordinate parities), for every m up to a limit.  Exact int64
arithmetic throughout; discriminants are computed in factored form (never
as b^2-4ac with a huge c), and the dispatcher in ``kernels`` verifies
beforehand that every intermediate this module forms fits in 64 bits.
"""

import numpy as _np

from libc.math cimport sqrt


cdef inline long long _isqrt(long long v) noexcept nogil:
    cdef long long r
    if v <= 0:
        return 0
    r = <long long> sqrt(<double> v)
    while r > 0 and r * r > v:
        r -= 1
    while (r + 1) * (r + 1) <= v:
        r += 1
    return r


cdef inline long long _sym_bound(long long num, long long den) noexcept nogil:
    """floor(sqrt(num/den)) for num >= 0, den > 0: largest t with den*t^2 <= num."""
    return _isqrt(num / den)


cdef inline long long _floordiv(long long a, long long b) noexcept nogil:
    # b > 0
    cdef long long q = a / b
    if a % b != 0 and a < 0:
        q -= 1
    return q


cdef struct IRange:
    long long lo
    long long hi


cdef inline IRange _root_range(long long a, long long b, long long c,
                               long long d) noexcept nogil:
    """Integer interval where a*t^2 + b*t + c <= 0 (a > 0), with the
    discriminant d = b^2 - 4ac supplied by the caller in whatever factored
    form keeps it inside int64.  lo > hi when empty."""
    cdef IRange r
    cdef long long s, lo, hi
    if d < 0:
        r.lo = 1
        r.hi = 0
        return r
    s = _isqrt(d)
    lo = -_floordiv(b + s, 2 * a)
    hi = _floordiv(s - b, 2 * a)
    while a * (hi + 1) * (hi + 1) + b * (hi + 1) + c <= 0:
        hi += 1
    while lo <= hi and a * hi * hi + b * hi + c > 0:
        hi -= 1
    while a * (lo - 1) * (lo - 1) + b * (lo - 1) + c <= 0:
        lo -= 1
    while lo <= hi and a * lo * lo + b * lo + c > 0:
        lo += 1
    r.lo = lo
    r.hi = hi
    return r


cdef inline long long _align(long long lo, int parity) noexcept nogil:
    if parity < 0:
        return lo
    if (lo & 1) == parity:
        return lo
    return lo + 1


cdef void _diag_fill(long long c0, int p0, long long c1, int p1,
                     long long c2, int p2, long long limit,
                     long long[::1] out, long long[::1] pair) noexcept nogil:
    """Diagonal fast path: tabulate c0*u^2 + c1*v^2 into ``pair``, then
    shift-add it once per value of the sparsest axis (largest coefficient).
    Callers pass c0 <= c1 <= c2 and ``pair`` zeroed."""
    cdef long long u, v, w, off, m, base, vmax
    cdef long long umax = _sym_bound(limit, c0)
    cdef long long wmax = _sym_bound(limit, c2)
    cdef int ustep = 1 if p0 < 0 else 2
    cdef int vstep = 1 if p1 < 0 else 2
    cdef int wstep = 1 if p2 < 0 else 2

    u = _align(-umax, p0)
    while u <= umax:
        base = c0 * u * u
        vmax = _sym_bound(limit - base, c1)
        v = _align(-vmax, p1)
        while v <= vmax:
            pair[base + c1 * v * v] += 1
            v += vstep
        u += ustep
    w = _align(-wmax, p2)
    while w <= wmax:
        off = c2 * w * w
        for m in range(limit + 1 - off):
            out[m + off] += pair[m]
        w += wstep


cdef void _ternary_fill(long long q11, long long q22, long long q33,
                        long long q23, long long q13, long long q12,
                        long long limit, int px, int py, int pz,
                        long long[::1] out) noexcept nogil:
    cdef long long a2 = 4 * q11 * q22 - q12 * q12
    cdef long long b2 = 4 * q11 * q23 - 2 * q12 * q13
    cdef long long c2 = 4 * q11 * q33 - q13 * q13
    cdef long long e2 = 4 * a2 * c2 - b2 * b2
    cdef long long l16 = 16 * a2 * q11 * limit
    cdef IRange yr, xr
    cdef long long zmax, z, y, x, b1, c0, v, dy
    cdef int zstep = 1 if pz < 0 else 2
    cdef int ystep = 1 if py < 0 else 2
    cdef int xstep = 1 if px < 0 else 2

    zmax = _sym_bound(l16, e2)
    z = _align(-zmax, pz)
    while z <= zmax:
        # discriminant of a2 y^2 + b2 z y + (c2 z^2 - 4 q11 limit),
        # in the factored form that stays small: l16 - e2 z^2
        dy = l16 - e2 * z * z
        yr = _root_range(a2, b2 * z, c2 * z * z - 4 * q11 * limit, dy)
        y = _align(yr.lo, py)
        while y <= yr.hi:
            b1 = q12 * y + q13 * z
            c0 = q22 * y * y + q23 * y * z + q33 * z * z
            xr = _root_range(q11, b1, c0 - limit,
                             b1 * b1 - 4 * q11 * (c0 - limit))
            x = _align(xr.lo, px)
            while x <= xr.hi:
                v = (q11 * x + b1) * x + c0
                out[v] += 1
                x += xstep
            y += ystep
        z += zstep


cdef void _binary_fill(long long p11, long long p22, long long p12,
                       long long limit, int px, int py,
                       long long[::1] out) noexcept nogil:
    cdef long long a2 = 4 * p11 * p22 - p12 * p12
    cdef long long l4 = 4 * p11 * limit
    cdef IRange xr
    cdef long long ymax, y, x, b1, c0, v
    cdef int ystep = 1 if py < 0 else 2
    cdef int xstep = 1 if px < 0 else 2

    ymax = _sym_bound(l4, a2)
    y = _align(-ymax, py)
    while y <= ymax:
        b1 = p12 * y
        c0 = p22 * y * y
        # discriminant of p11 x^2 + b1 x + (c0 - limit) equals l4 - a2 y^2
        xr = _root_range(p11, b1, c0 - limit, l4 - a2 * y * y)
        x = _align(xr.lo, px)
        while x <= xr.hi:
            v = (p11 * x + b1) * x + c0
            out[v] += 1
            x += xstep
        y += ystep


def ternary_table(q11, q22, q33, q23, q13, q12, limit, px, py, pz):
    """Array r[m] = #{(x,y,z): f(x,y,z) = m, parities respected}, m <= limit."""
    arr = _np.zeros(limit + 1, dtype=_np.int64)
    cdef long long[::1] out = arr
    cdef long long[::1] pair
    cdef long long c11 = q11, c22 = q22, c33 = q33
    cdef long long c23 = q23, c13 = q13, c12 = q12, lim = limit
    cdef int fx = px, fy = py, fz = pz
    if c23 == 0 and c13 == 0 and c12 == 0:
        axes = sorted(((q11, px), (q22, py), (q33, pz)))
        (a0, f0), (a1, f1), (a2, f2) = axes
        pair_arr = _np.zeros(limit + 1, dtype=_np.int64)
        pair = pair_arr
        _diag_fill(a0, f0, a1, f1, a2, f2, lim, out, pair)
        return arr
    with nogil:
        _ternary_fill(c11, c22, c33, c23, c13, c12, lim, fx, fy, fz, out)
    return arr


def binary_table(p11, p22, p12, limit, px, py):
    """Array r[m] = #{(x,y): f(x,y) = m, parities respected}, m <= limit."""
    arr = _np.zeros(limit + 1, dtype=_np.int64)
    cdef long long[::1] out = arr
    cdef long long c11 = p11, c22 = p22, c12 = p12, lim = limit
    cdef int fx = px, fy = py
    with nogil:
        _binary_fill(c11, c22, c12, lim, fx, fy, out)
    return arr
