"""Counting n = a*T_x + b*T_y + c*T_z over triangular numbers T_x = x(x-1)/2.

Two independent routes are provided and cross-checked by the test suite:
``t_direct`` / ``t_table`` enumerate triangular indices, while
``t_via_forms`` counts all-odd representations of ax^2+by^2+cz^2 = 8n+a+b+c
(the substitution u = 2x-1 turns one problem into the other).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

import numpy as np

from .counting import count_parity, count_table
from .forms import HypothesisError, RangeError, TernaryQuadForm, _as_int, check_target


def triangular_number(x) -> int:
    """T_x = x(x-1)/2; satisfies T_x = T_{1-x}."""
    x = _as_int(x, "index")
    if abs(x) > 2 * 10**9:
        raise RangeError(f"triangular index {x} out of supported range")
    return x * (x - 1) // 2


def index_range(bound: int):
    """Integer interval [lo, hi] of indices x with T_x <= bound (bound >= 0).

    Symmetric around 1/2: lo = 1 - hi.
    """
    hi = (1 + isqrt(1 + 8 * bound)) // 2
    while hi * (hi - 1) > 2 * bound:
        hi -= 1
    while (hi + 1) * hi <= 2 * bound:
        hi += 1
    return 1 - hi, hi


def triangular_values(bound: int):
    """All distinct triangular numbers <= bound, ascending.  Each value is
    hit by exactly two indices (x and 1-x)."""
    out = []
    x = 1
    while True:
        t = x * (x - 1) // 2
        if t > bound:
            return out
        out.append(t)
        x += 1


@dataclass(frozen=True)
class TriangularTriple:
    """Positive coefficients (a, b, c) with gcd(a, b, c) = 1."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        vals = tuple(_as_int(v, name) for v, name in
                     zip((self.a, self.b, self.c), "abc"))
        if any(v < 1 for v in vals):
            raise HypothesisError(f"coefficients must be positive, got {vals}")
        if gcd(gcd(vals[0], vals[1]), vals[2]) != 1:
            raise HypothesisError(f"gcd{vals} != 1; normalize the triple explicitly")
        object.__setattr__(self, "a", vals[0])
        object.__setattr__(self, "b", vals[1])
        object.__setattr__(self, "c", vals[2])

    @classmethod
    def of(cls, triple) -> "TriangularTriple":
        if isinstance(triple, cls):
            return triple
        return cls(*triple)

    def as_tuple(self):
        return (self.a, self.b, self.c)

    @property
    def shift(self) -> int:
        """S = a + b + c, the constant in the 8n + S correspondence."""
        return self.a + self.b + self.c

    def form(self) -> TernaryQuadForm:
        return TernaryQuadForm.diagonal(self.a, self.b, self.c)

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"


def t_direct(triple, n) -> int:
    """t(a,b,c;n) by enumerating triangular indices.

    Outer loops run over the full index ranges (so both branches x and 1-x
    are visited); the innermost coordinate is resolved by testing whether
    8m+1 is a perfect square, which contributes its two indices at once.
    """
    tt = TriangularTriple.of(triple)
    n = check_target(n)
    a, b, c = tt.as_tuple()
    total = 0
    zlo, zhi = index_range(n // c)
    for z in range(zlo, zhi + 1):
        rem_z = n - c * (z * (z - 1) // 2)
        ylo, yhi = index_range(rem_z // b)
        for y in range(ylo, yhi + 1):
            m = rem_z - b * (y * (y - 1) // 2)
            if m % a:
                continue
            u = 8 * (m // a) + 1
            s = isqrt(u)
            if s * s == u:
                total += 2
    return total


def t_via_forms(triple, n) -> int:
    """t(a,b,c;n) as the all-odd representation count of ax^2+by^2+cz^2 at
    8n + a + b + c."""
    tt = TriangularTriple.of(triple)
    n = check_target(n)
    return count_parity(tt.form(), 8 * n + tt.shift, (1, 1, 1))


def t_table(triple, n_max) -> np.ndarray:
    """t(a,b,c;n) for all n in [0, n_max], by convolving triangular series.

    Same enumeration principle as t_direct, vectorized: every triangular
    value carries weight 2 (its two indices)."""
    tt = TriangularTriple.of(triple)
    n_max = check_target(n_max, "n_max")
    coeffs = sorted(tt.as_tuple())
    pos = [np.array([s * t for t in triangular_values(n_max // s)], dtype=np.int64)
           for s in coeffs]
    out = np.zeros(n_max + 1, dtype=np.int64)
    pair = (pos[0][:, None] + pos[1][None, :]).ravel()
    pair = pair[pair <= n_max]
    if pair.size == 0:
        return out
    base = np.bincount(pair, minlength=n_max + 1)
    acc = np.zeros(n_max + 1, dtype=np.int64)
    for p in pos[2].tolist():
        acc[p:] += base[: n_max + 1 - p]
    np.multiply(acc, 8, out=out)
    return out


def t_table_via_forms(triple, n_max) -> np.ndarray:
    """Same values as t_table but through the all-odd form-count kernel."""
    tt = TriangularTriple.of(triple)
    n_max = check_target(n_max, "n_max")
    s = tt.shift
    tab = count_table(tt.form(), 8 * n_max + s, parity=(1, 1, 1))
    return tab[s::8].copy()
