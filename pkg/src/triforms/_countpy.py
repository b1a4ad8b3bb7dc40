"""Pure-Python counting kernels (NumPy vectorized).

Fallback implementation of the table kernels in ``_countcore``; the two
must agree entry for entry.  Diagonal forms take a convolution fast path;
general forms walk the (y, z) ellipse with one vectorized x-row per pair.
All values stay inside int64 (the dispatcher in ``kernels`` guarantees the
inputs make that safe).
"""

from __future__ import annotations

from math import isqrt

import numpy as np

from ._intmath import align_parity, quad_root_range

_FLUSH = 1 << 18


def _axis_values(coeff: int, limit: int, parity: int) -> np.ndarray:
    """Values coeff*t^2 <= limit over integer t with optional parity."""
    m = isqrt(limit // coeff)
    ts = np.arange(-m, m + 1, dtype=np.int64)
    if parity >= 0:
        ts = ts[(ts & 1) == parity]
    return coeff * ts * ts


def _diag_table(coeffs, limit: int, parities) -> np.ndarray:
    out = np.zeros(limit + 1, dtype=np.int64)
    axes = sorted(zip(coeffs, parities), key=lambda cp: cp[0])
    # Pair the two cheapest axes densely; python-loop the sparsest one.
    va = _axis_values(axes[0][0], limit, axes[0][1])
    vb = _axis_values(axes[1][0], limit, axes[1][1])
    vc = _axis_values(axes[2][0], limit, axes[2][1])
    if va.size == 0 or vb.size == 0 or vc.size == 0:
        return out
    pair = (va[:, None] + vb[None, :]).ravel()
    pair = pair[pair <= limit]
    if pair.size == 0:
        return out
    base = np.bincount(pair, minlength=limit + 1)
    vals, mult = np.unique(vc, return_counts=True)
    for v, k in zip(vals.tolist(), mult.tolist()):
        out[v:] += k * base[: limit + 1 - v]
    return out


def ternary_table(q11, q22, q33, q23, q13, q12, limit, px, py, pz):
    """Array r[m] = #{(x,y,z): f(x,y,z) = m, parities respected}, m <= limit."""
    if q23 == 0 and q13 == 0 and q12 == 0:
        return _diag_table((q11, q22, q33), limit, (px, py, pz))

    out = np.zeros(limit + 1, dtype=np.int64)
    a2 = 4 * q11 * q22 - q12 * q12
    b2 = 4 * q11 * q23 - 2 * q12 * q13
    c2 = 4 * q11 * q33 - q13 * q13
    e2 = 4 * a2 * c2 - b2 * b2
    zlo, zhi = quad_root_range(e2, 0, -16 * a2 * q11 * limit)
    chunks = []
    pending = 0
    z = align_parity(zlo, pz)
    zstep = 1 if pz < 0 else 2
    while z <= zhi:
        ylo, yhi = quad_root_range(a2, b2 * z, c2 * z * z - 4 * q11 * limit)
        y = align_parity(ylo, py)
        ystep = 1 if py < 0 else 2
        while y <= yhi:
            b1 = q12 * y + q13 * z
            c0 = q22 * y * y + q23 * y * z + q33 * z * z
            xlo, xhi = quad_root_range(q11, b1, c0 - limit)
            xlo = align_parity(xlo, px)
            if xlo <= xhi:
                xs = np.arange(xlo, xhi + 1, 1 if px < 0 else 2, dtype=np.int64)
                vals = (q11 * xs + b1) * xs + c0
                chunks.append(vals)
                pending += vals.size
                if pending >= _FLUSH:
                    out += np.bincount(np.concatenate(chunks), minlength=limit + 1)
                    chunks = []
                    pending = 0
            y += ystep
        z += zstep
    if chunks:
        out += np.bincount(np.concatenate(chunks), minlength=limit + 1)
    return out


def binary_table(p11, p22, p12, limit, px, py):
    """Array r[m] = #{(x,y): f(x,y) = m, parities respected}, m <= limit."""
    out = np.zeros(limit + 1, dtype=np.int64)
    if p12 == 0:
        vx = _axis_values(p11, limit, px)
        vy = _axis_values(p22, limit, py)
        if vx.size == 0 or vy.size == 0:
            return out
        pair = (vx[:, None] + vy[None, :]).ravel()
        pair = pair[pair <= limit]
        if pair.size:
            out += np.bincount(pair, minlength=limit + 1)
        return out

    a2 = 4 * p11 * p22 - p12 * p12
    ylo, yhi = quad_root_range(a2, 0, -4 * p11 * limit)
    chunks = []
    pending = 0
    y = align_parity(ylo, py)
    ystep = 1 if py < 0 else 2
    while y <= yhi:
        b1 = p12 * y
        c0 = p22 * y * y
        xlo, xhi = quad_root_range(p11, b1, c0 - limit)
        xlo = align_parity(xlo, px)
        if xlo <= xhi:
            xs = np.arange(xlo, xhi + 1, 1 if px < 0 else 2, dtype=np.int64)
            vals = (p11 * xs + b1) * xs + c0
            chunks.append(vals)
            pending += vals.size
            if pending >= _FLUSH:
                out += np.bincount(np.concatenate(chunks), minlength=limit + 1)
                chunks = []
                pending = 0
        y += ystep
    if chunks:
        out += np.bincount(np.concatenate(chunks), minlength=limit + 1)
    return out
