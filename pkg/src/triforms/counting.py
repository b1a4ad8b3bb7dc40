"""Exact enumeration and counting of representations f(v) = n.

The single-target enumerator walks the solution ellipsoid with exact
integer bounds: outer coordinate ranges come from completing the square
(doubled-Gram discriminants), the innermost coordinate is solved by an
integer square root.  Output order is lexicographic by reversed coordinates
(z, y, x), which is the order the loops produce naturally.

Whole-table counting (r(f, m) for every m up to a limit) is delegated to
the kernel backends; see ``kernels``.
"""

from __future__ import annotations

from math import isqrt

from . import kernels
from .forms import (BinaryQuadForm, HypothesisError, LinearCongruence,
                    ParityClass, TernaryQuadForm, as_constraint, check_target)
from ._intmath import quad_root_range


def _iter_ternary(f: TernaryQuadForm, n: int):
    q11, q22, q33, q23, q13, q12 = f.coeffs()
    a2 = 4 * q11 * q22 - q12 * q12
    b2 = 4 * q11 * q23 - 2 * q12 * q13
    c2 = 4 * q11 * q33 - q13 * q13
    e2 = 4 * a2 * c2 - b2 * b2
    zlo, zhi = quad_root_range(e2, 0, -16 * a2 * q11 * n)
    for z in range(zlo, zhi + 1):
        ylo, yhi = quad_root_range(a2, b2 * z, c2 * z * z - 4 * q11 * n)
        for y in range(ylo, yhi + 1):
            b1 = q12 * y + q13 * z
            c0 = q22 * y * y + q23 * y * z + q33 * z * z - n
            d = b1 * b1 - 4 * q11 * c0
            if d < 0:
                continue
            s = isqrt(d)
            if s * s != d:
                continue
            if s == 0:
                if b1 % (2 * q11) == 0:
                    yield (-b1 // (2 * q11), y, z)
            else:
                for num in (-b1 - s, -b1 + s):
                    if num % (2 * q11) == 0:
                        yield (num // (2 * q11), y, z)


def _iter_binary(f: BinaryQuadForm, n: int):
    p11, p22, p12 = f.coeffs()
    a2 = 4 * p11 * p22 - p12 * p12
    ylo, yhi = quad_root_range(a2, 0, -4 * p11 * n)
    for y in range(ylo, yhi + 1):
        b1 = p12 * y
        c0 = p22 * y * y - n
        d = b1 * b1 - 4 * p11 * c0
        if d < 0:
            continue
        s = isqrt(d)
        if s * s != d:
            continue
        if s == 0:
            if b1 % (2 * p11) == 0:
                yield (-b1 // (2 * p11), y)
        else:
            for num in (-b1 - s, -b1 + s):
                if num % (2 * p11) == 0:
                    yield (num // (2 * p11), y)


def _prepare(form, n, constraints):
    n = check_target(n)
    form.require_positive_definite()
    cs = tuple(as_constraint(c, form.rank) for c in constraints)
    it = _iter_ternary(form, n) if form.rank == 3 else _iter_binary(form, n)
    if cs:
        return (v for v in it if all(c.satisfied(v) for c in cs)), n
    return it, n


def solutions(form, n, constraints=()):
    """All integer vectors v with form(v) = n meeting every constraint.

    Ternary output is sorted lexicographically by (z, y, x); binary by
    (y, x).
    """
    it, _ = _prepare(form, n, constraints)
    return list(it)


def count(form, n, constraints=()) -> int:
    """r(f, n), optionally restricted by parity/congruence constraints."""
    it, _ = _prepare(form, n, constraints)
    return sum(1 for _ in it)


def count_parity(form, n, parity) -> int:
    """r_d(f, n): representations with every coordinate in a fixed parity."""
    return count(form, n, (parity if isinstance(parity, ParityClass)
                           else ParityClass(tuple(parity)),))


def count_tilde(form: BinaryQuadForm, n) -> int:
    """All-odd representations of a diagonal binary form with x !≡ y (mod 4).

    For odd x, y the condition x !≡ y (mod 4) is equivalent to
    x + y ≡ 0 (mod 4), which is how it is enforced here.
    """
    if form.rank != 2 or not form.is_diagonal():
        raise HypothesisError("count_tilde requires a diagonal binary form")
    return count(form, n, (ParityClass((1, 1)), LinearCongruence((1, 1), 4, 0)))


def count_table(form, limit, parity=None):
    """Representation counts r(f, m) for all m in [0, limit] as an int64 array."""
    limit = check_target(limit, "limit")
    form.require_positive_definite()
    if parity is not None and not isinstance(parity, (ParityClass, tuple, list)):
        raise TypeError("parity must be a ParityClass or residue tuple")
    flags = None
    if parity is not None:
        pc = parity if isinstance(parity, ParityClass) else ParityClass(tuple(parity))
        as_constraint(pc, form.rank)
        flags = pc.residues
    if form.rank == 3:
        return kernels.ternary_table(form.coeffs(), limit, flags)
    return kernels.binary_table(form.coeffs(), limit, flags)
