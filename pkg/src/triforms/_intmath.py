"""Small exact integer helpers shared by the enumerators and kernels."""

from __future__ import annotations

from math import isqrt


def quad_root_range(a: int, b: int, c: int):
    """Integer interval [lo, hi] where a*t^2 + b*t + c <= 0, with a > 0.

    Returns (lo, hi) with lo > hi when the interval contains no integer.
    Exact: endpoints come from the integer square root of the discriminant
    with a one-step fixup against the quadratic itself.
    """
    d = b * b - 4 * a * c
    if d < 0:
        return 1, 0
    s = isqrt(d)
    two_a = 2 * a
    lo = -((b + s) // two_a)          # ceil((-b - sqrt(d)) / 2a)
    hi = (s - b) // two_a             # floor((-b + sqrt(d)) / 2a)
    while a * (hi + 1) * (hi + 1) + b * (hi + 1) + c <= 0:
        hi += 1
    while lo <= hi and a * hi * hi + b * hi + c > 0:
        hi -= 1
    while a * (lo - 1) * (lo - 1) + b * (lo - 1) + c <= 0:
        lo -= 1
    while lo <= hi and a * lo * lo + b * lo + c > 0:
        lo += 1
    return lo, hi


def align_parity(lo: int, parity: int) -> int:
    """Smallest t >= lo with t ≡ parity (mod 2); parity < 0 means no constraint."""
    if parity < 0:
        return lo
    return lo if (lo & 1) == parity else lo + 1
