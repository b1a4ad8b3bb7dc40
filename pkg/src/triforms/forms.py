"""Integral quadratic forms over Z with exact arithmetic.

Binary and ternary positive definite forms are stored with their literal
polynomial coefficients: the coefficient of a cross term such as xy is kept
whole (so ``4x^2+4y^2+8z^2+2xy`` has ``q12 == 2``), which makes the
associated symmetric Gram matrix half-integral.  Everything in this module
is exact integer (or doubled-integer) arithmetic; no floating point.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass

# Supported exact-arithmetic domain.  Inputs outside it raise RangeError so
# that the fixed-width compiled kernels can never overflow silently.
MAX_COEFF = 10**6
MAX_TARGET = 10**9


class RangeError(ValueError):
    """Input lies outside the supported exact-arithmetic domain."""


class InvalidFormError(ValueError):
    """The quadratic form is not positive definite (or is malformed)."""


class HypothesisError(ValueError):
    """A stated precondition on the inputs does not hold."""


class MapDomainError(ValueError):
    """A linear map was applied to a vector outside its domain."""


def _as_int(value, what: str) -> int:
    try:
        return operator.index(value)
    except TypeError:
        raise TypeError(f"{what} must be an integer, got {value!r}") from None


def _check_coeff(value, what: str) -> int:
    v = _as_int(value, what)
    if abs(v) > MAX_COEFF:
        raise RangeError(f"{what}={v} exceeds supported coefficient bound {MAX_COEFF}")
    return v


def check_target(n, what: str = "target") -> int:
    """Validate a representation target: an integer in [0, MAX_TARGET]."""
    v = _as_int(n, what)
    if v < 0:
        raise RangeError(f"{what} must be nonnegative, got {v}")
    if v > MAX_TARGET:
        raise RangeError(f"{what}={v} exceeds supported bound {MAX_TARGET}")
    return v


def _poly_str(terms) -> str:
    parts = []
    for coeff, mono in terms:
        if coeff == 0:
            continue
        mag = abs(coeff)
        body = mono if mag == 1 else f"{mag}{mono}"
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


@dataclass(frozen=True)
class TernaryQuadForm:
    """q11*x^2 + q22*y^2 + q33*z^2 + q23*yz + q13*xz + q12*xy."""

    q11: int
    q22: int
    q33: int
    q23: int = 0
    q13: int = 0
    q12: int = 0

    rank = 3

    def __post_init__(self):
        for name in ("q11", "q22", "q33", "q23", "q13", "q12"):
            object.__setattr__(self, name, _check_coeff(getattr(self, name), name))

    @classmethod
    def diagonal(cls, a, b, c) -> "TernaryQuadForm":
        return cls(a, b, c)

    @classmethod
    def from_literal(cls, text: str) -> "TernaryQuadForm":
        """Parse the compact literal ``"q11,q22,q33;q23,q13,q12"``."""
        try:
            diag_part, cross_part = text.strip().split(";")
            diag = [int(t) for t in diag_part.split(",")]
            cross = [int(t) for t in cross_part.split(",")]
        except ValueError:
            raise ValueError(f"bad form literal {text!r}: "
                             'expected "q11,q22,q33;q23,q13,q12"') from None
        if len(diag) != 3 or len(cross) != 3:
            raise ValueError(f"bad form literal {text!r}: "
                             'expected "q11,q22,q33;q23,q13,q12"')
        return cls(*diag, *cross)

    def to_literal(self) -> str:
        return (f"{self.q11},{self.q22},{self.q33};"
                f"{self.q23},{self.q13},{self.q12}")

    def coeffs(self):
        return (self.q11, self.q22, self.q33, self.q23, self.q13, self.q12)

    def is_diagonal(self) -> bool:
        return self.q23 == 0 and self.q13 == 0 and self.q12 == 0

    def evaluate(self, v) -> int:
        x, y, z = v
        return (self.q11 * x * x + self.q22 * y * y + self.q33 * z * z
                + self.q23 * y * z + self.q13 * x * z + self.q12 * x * y)

    __call__ = evaluate

    def doubled_gram(self):
        """2*Gram matrix; integral because cross coefficients are stored whole."""
        return ((2 * self.q11, self.q12, self.q13),
                (self.q12, 2 * self.q22, self.q23),
                (self.q13, self.q23, 2 * self.q33))

    def is_positive_definite(self) -> bool:
        # Leading principal minors of the doubled Gram matrix; their signs
        # agree with those of the rational Gram matrix.
        g = self.doubled_gram()
        d1 = g[0][0]
        d2 = g[0][0] * g[1][1] - g[0][1] * g[1][0]
        d3 = (g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
              - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
              + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]))
        return d1 > 0 and d2 > 0 and d3 > 0

    def require_positive_definite(self) -> None:
        if not self.is_positive_definite():
            raise InvalidFormError(f"form {self.to_literal()} is not positive definite")

    def substituted(self, rows) -> "TernaryQuadForm":
        """Return g with g(v) = f(M v), M given by integer matrix rows.

        Exact polynomial composition via the doubled Gram matrix.  Raises
        InvalidFormError if the result is no longer positive definite
        (which can only happen for singular M).
        """
        m = tuple(tuple(_as_int(e, "matrix entry") for e in row) for row in rows)
        if len(m) != 3 or any(len(r) != 3 for r in m):
            raise ValueError("substitution matrix must be 3x3")
        g = self.doubled_gram()
        # G' = M^T G M
        gm = [[sum(g[i][k] * m[k][j] for k in range(3)) for j in range(3)]
              for i in range(3)]
        gp = [[sum(m[k][i] * gm[k][j] for k in range(3)) for j in range(3)]
              for i in range(3)]
        for i in range(3):
            if gp[i][i] % 2:
                raise AssertionError("doubled Gram diagonal must stay even")
        out = TernaryQuadForm(gp[0][0] // 2, gp[1][1] // 2, gp[2][2] // 2,
                              gp[1][2], gp[0][2], gp[0][1])
        out.require_positive_definite()
        return out

    def poly_str(self) -> str:
        c = self.coeffs()
        return _poly_str(zip(c, ("x^2", "y^2", "z^2", "yz", "xz", "xy")))

    def __str__(self) -> str:
        return self.poly_str()


@dataclass(frozen=True)
class BinaryQuadForm:
    """p11*x^2 + p22*y^2 + p12*xy."""

    p11: int
    p22: int
    p12: int = 0

    rank = 2

    def __post_init__(self):
        for name in ("p11", "p22", "p12"):
            object.__setattr__(self, name, _check_coeff(getattr(self, name), name))

    def coeffs(self):
        return (self.p11, self.p22, self.p12)

    def is_diagonal(self) -> bool:
        return self.p12 == 0

    def evaluate(self, v) -> int:
        x, y = v
        return self.p11 * x * x + self.p22 * y * y + self.p12 * x * y

    __call__ = evaluate

    def doubled_gram(self):
        return ((2 * self.p11, self.p12), (self.p12, 2 * self.p22))

    def is_positive_definite(self) -> bool:
        return self.p11 > 0 and 4 * self.p11 * self.p22 - self.p12 * self.p12 > 0

    def require_positive_definite(self) -> None:
        if not self.is_positive_definite():
            raise InvalidFormError(f"binary form {self} is not positive definite")

    def poly_str(self) -> str:
        return _poly_str(zip(self.coeffs(), ("x^2", "y^2", "xy")))

    def __str__(self) -> str:
        return self.poly_str()


@dataclass(frozen=True)
class ParityClass:
    """Fixed residues mod 2 for every coordinate, e.g. (1,1,1) = all odd."""

    residues: tuple

    def __post_init__(self):
        r = tuple(_as_int(d, "parity residue") for d in self.residues)
        if len(r) not in (2, 3):
            raise ValueError("parity class must have 2 or 3 entries")
        if any(d not in (0, 1) for d in r):
            raise ValueError(f"parity residues must be 0 or 1, got {r}")
        object.__setattr__(self, "residues", r)

    def __len__(self):
        return len(self.residues)

    def satisfied(self, v) -> bool:
        return all((vi - di) % 2 == 0 for vi, di in zip(v, self.residues))


@dataclass(frozen=True)
class LinearCongruence:
    """coeffs . v == residue (mod modulus)."""

    coeffs: tuple
    modulus: int
    residue: int

    def __post_init__(self):
        c = tuple(_as_int(e, "congruence coefficient") for e in self.coeffs)
        if len(c) not in (2, 3):
            raise ValueError("congruence must have 2 or 3 coefficients")
        mod = _as_int(self.modulus, "modulus")
        if mod < 1:
            raise ValueError(f"modulus must be >= 1, got {mod}")
        res = _as_int(self.residue, "residue") % mod
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "modulus", mod)
        object.__setattr__(self, "residue", res)

    def satisfied(self, v) -> bool:
        return sum(c * x for c, x in zip(self.coeffs, v)) % self.modulus == self.residue


def as_constraint(obj, rank: int):
    """Normalize a constraint (a ParityClass, LinearCongruence, or plain
    residue tuple) and check it matches the form's rank."""
    if isinstance(obj, (ParityClass, LinearCongruence)):
        c = obj
    else:
        c = ParityClass(tuple(obj))
    n = len(c.residues) if isinstance(c, ParityClass) else len(c.coeffs)
    if n != rank:
        raise ValueError(f"constraint arity {n} does not match form rank {rank}")
    return c
