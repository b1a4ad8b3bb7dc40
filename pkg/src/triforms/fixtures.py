"""Hardcoded genus data, explicit linear maps, and eligible-triple tables.

Genus members and the bijections between their constrained representation
sets are fixed constants (computing genera from scratch is out of scope);
their correctness is established by the exhaustive checks in ``identities``
and the test suite, starting with exact Gram-matrix identities for every
value-preserving map.
"""

from __future__ import annotations

from dataclasses import dataclass

from .counting import solutions
from .forms import (BinaryQuadForm, LinearCongruence, MapDomainError,
                    ParityClass, TernaryQuadForm)


@dataclass(frozen=True)
class ExplicitLinearMap:
    """v -> (rows . v) / den, defined only where the division is exact."""

    rows: tuple
    den: int = 1

    def apply(self, v):
        if len(v) != len(self.rows[0]):
            raise ValueError(f"map expects vectors of length {len(self.rows[0])}")
        nums = tuple(sum(c * x for c, x in zip(row, v)) for row in self.rows)
        if any(num % self.den for num in nums):
            raise MapDomainError(f"{v} maps to a non-integral vector")
        return tuple(num // self.den for num in nums)

    __call__ = apply


@dataclass(frozen=True)
class ConstrainedRepSet:
    """R(form, target) intersected with parity/congruence constraints."""

    form: object
    target: int
    constraints: tuple = ()

    def elements(self):
        return solutions(self.form, self.target, self.constraints)


# --- maps behind the restricted-count lemmas (binary forms) ---------------

X2_3Y2 = BinaryQuadForm(1, 3)

PSI1 = ExplicitLinearMap(((1, 3), (-1, 1)))        # R_(1,0)(m) -> R~_(1,1)(4m)
PSI2 = ExplicitLinearMap(((1, 3), (-1, 1)))        # R_(0,1)(m) -> R~_(1,1)(4m)
PSI3 = ExplicitLinearMap(((1, 3), (-1, 1)), 2)     # R_(0,0)(m) -> R~_(1,1)(m)

CHI1 = ExplicitLinearMap(((1, -5), (3, 1)), 2)     # 3x^2+5y^2:  m -> 4m
CHI2 = ExplicitLinearMap(((3, -7), (1, 3)), 2)     # x^2+7y^2:   m -> 4m
CHI3 = ExplicitLinearMap(((1, 15), (-1, 1)), 2)    # x^2+15y^2:  m -> 4m

CHI_FORMS = {
    (3, 5): (BinaryQuadForm(3, 5), CHI1),
    (1, 7): (BinaryQuadForm(1, 7), CHI2),
    (1, 15): (BinaryQuadForm(1, 15), CHI3),
}


# --- genus fixtures for the even-n theorem ---------------------------------

@dataclass(frozen=True)
class GenusFixture:
    """One (a,b,c) case: genus members, the two auxiliary diagonal forms,
    and the four maps tying their representation numbers together at
    N = 16m + offset.

    phi1 maps {f1-solutions, dom_vec.v ≡ phi1_dom (mod 16)} onto
    {f2-solutions, cod_vec.v ≡ phi1_cod (mod 16)}; phi2 covers the other
    residue class.  phi3: R(aux1, N) -> R(f1, N); phi4: R(aux2, N) -> R(f3, N).
    """

    triple: tuple
    offset: int
    f1: TernaryQuadForm
    f2: TernaryQuadForm
    f3: TernaryQuadForm
    g1: TernaryQuadForm
    g2: TernaryQuadForm
    aux1: TernaryQuadForm
    aux2: TernaryQuadForm
    phi1: ExplicitLinearMap
    phi2: ExplicitLinearMap
    phi3: ExplicitLinearMap
    phi4: ExplicitLinearMap
    dom_vec: tuple
    cod_vec: tuple
    phi1_dom: int
    phi1_cod: int
    phi2_dom: int
    phi2_cod: int

    def target(self, m: int) -> int:
        return 16 * m + self.offset

    def forms(self):
        return {"f1": self.f1, "f2": self.f2, "f3": self.f3,
                "g1": self.g1, "g2": self.g2,
                "aux1": self.aux1, "aux2": self.aux2}

    def phi1_sets(self, m: int):
        n = self.target(m)
        dom = ConstrainedRepSet(self.f1, n, (LinearCongruence(self.dom_vec, 16, self.phi1_dom),))
        cod = ConstrainedRepSet(self.f2, n, (LinearCongruence(self.cod_vec, 16, self.phi1_cod),))
        return dom, cod

    def phi2_sets(self, m: int):
        n = self.target(m)
        dom = ConstrainedRepSet(self.f1, n, (LinearCongruence(self.dom_vec, 16, self.phi2_dom),))
        cod = ConstrainedRepSet(self.f2, n, (LinearCongruence(self.cod_vec, 16, self.phi2_cod),))
        return dom, cod

    def phi3_sets(self, m: int):
        n = self.target(m)
        return ConstrainedRepSet(self.aux1, n), ConstrainedRepSet(self.f1, n)

    def phi4_sets(self, m: int):
        n = self.target(m)
        return ConstrainedRepSet(self.aux2, n), ConstrainedRepSet(self.f3, n)


FIXTURE_1_2_15 = GenusFixture(
    triple=(1, 2, 15),
    offset=18,
    f1=TernaryQuadForm(4, 4, 8, 0, 0, 2),
    f2=TernaryQuadForm(4, 6, 6, 4, 2, 2),
    f3=TernaryQuadForm(2, 6, 12, 6, 2, 0),
    g1=TernaryQuadForm(4, 8, 18, 8, 4, 0),
    g2=TernaryQuadForm.diagonal(2, 10, 24),
    aux1=TernaryQuadForm.diagonal(8, 10, 24),
    aux2=TernaryQuadForm.diagonal(2, 24, 40),
    phi1=ExplicitLinearMap(((12, 4, 16), (-11, -1, 12), (1, -13, -4)), 16),
    phi2=ExplicitLinearMap(((4, 12, -16), (-13, 1, 4), (-1, -11, -12)), 16),
    phi3=ExplicitLinearMap(((0, 1, 2), (0, 1, -2), (1, 0, 0))),
    phi4=ExplicitLinearMap(((1, 0, 1), (0, 2, 1), (0, 0, -2))),
    dom_vec=(1, 3, -4),
    cod_vec=(1, -6, 2),
    phi1_dom=0, phi1_cod=0,
    phi2_dom=8, phi2_cod=8,
)

FIXTURE_1_15_18 = GenusFixture(
    triple=(1, 15, 18),
    offset=34,
    f1=TernaryQuadForm(4, 4, 72, 0, 0, 2),
    f2=TernaryQuadForm(4, 16, 22, 14, -2, 4),
    f3=TernaryQuadForm(6, 16, 16, -8, 6, 6),
    g1=TernaryQuadForm(4, 34, 34, 8, 4, 4),
    g2=TernaryQuadForm.diagonal(10, 18, 24),
    aux1=TernaryQuadForm.diagonal(10, 24, 72),
    aux2=TernaryQuadForm.diagonal(18, 24, 40),
    phi1=ExplicitLinearMap(((1, -5, -68), (-5, -7, 20), (-4, 4, -16)), 16),
    phi2=ExplicitLinearMap(((9, -5, -52), (3, 9, 4), (4, -4, 16)), 16),
    phi3=ExplicitLinearMap(((1, -2, 0), (1, 2, 0), (0, 0, 1))),
    phi4=ExplicitLinearMap(((1, 2, 0), (-1, 0, 1), (-1, 0, -1))),
    dom_vec=(3, 1, 4),
    cod_vec=(3, -1, 2),
    phi1_dom=0, phi1_cod=0,
    phi2_dom=8, phi2_cod=8,
)

FIXTURE_1_15_30 = GenusFixture(
    triple=(1, 15, 30),
    offset=46,
    f1=TernaryQuadForm(4, 4, 120, 0, 0, 2),
    f2=TernaryQuadForm(4, 16, 34, 14, -2, 4),
    f3=TernaryQuadForm(10, 16, 16, 8, 10, 10),
    g1=TernaryQuadForm(4, 46, 46, 32, 4, 4),
    g2=TernaryQuadForm.diagonal(6, 30, 40),
    aux1=TernaryQuadForm.diagonal(6, 40, 120),
    aux2=TernaryQuadForm.diagonal(24, 30, 40),
    phi1=ExplicitLinearMap(((7, -13, -4), (-3, 1, -44), (-4, -4, 16)), 16),
    phi2=ExplicitLinearMap(((9, -11, 20), (3, 7, 28), (-4, -4, 16)), 16),
    phi3=ExplicitLinearMap(((1, 2, 0), (-1, 2, 0), (0, 0, 1))),
    phi4=ExplicitLinearMap(((0, -1, -2), (1, 1, 0), (-1, 1, 0))),
    dom_vec=(3, -1, -4),
    cod_vec=(3, -1, 2),
    phi1_dom=0, phi1_cod=8,   # this case crosses residue classes
    phi2_dom=8, phi2_cod=0,
)

FIXTURES = {fx.triple: fx for fx in
            (FIXTURE_1_2_15, FIXTURE_1_15_18, FIXTURE_1_15_30)}


# --- the (1,1,27) case ------------------------------------------------------

THM4_FORM = TernaryQuadForm.diagonal(1, 1, 27)
THM4_G = TernaryQuadForm(8, 20, 29, 4, 8, 8)
THM4_H = TernaryQuadForm(2, 5, 27, 0, 0, 2)
THM4_PHI = ExplicitLinearMap(((1, 0, -7), (-1, -4, 1), (-1, 0, -1)))


def thm4_sets(n: int):
    """Domain A = {g = 8n+29, x even} and codomain
    B = {h = 4(8n+29), x odd, x+z ≡ 0 (mod 8)} of the (1,1,27) bijection."""
    target = 8 * n + 29
    dom = ConstrainedRepSet(THM4_G, target, (LinearCongruence((1, 0, 0), 2, 0),))
    cod = ConstrainedRepSet(THM4_H, 4 * target,
                            (LinearCongruence((1, 0, 0), 2, 1),
                             LinearCongruence((1, 0, 1), 8, 0)))
    return dom, cod


# --- eligible-triple tables -------------------------------------------------

# Triples whose diagonal form satisfies the two-fraction hypothesis.
TABLE1 = (
    (1, 1, 7), (1, 1, 15), (3, 3, 5), (1, 7, 7), (3, 5, 5), (1, 7, 15),
    (1, 9, 15), (1, 15, 15), (3, 5, 21), (1, 7, 49), (1, 15, 25), (3, 5, 35),
    (3, 5, 45), (1, 7, 105), (3, 5, 75), (1, 15, 105), (3, 21, 35),
    (1, 15, 225), (9, 15, 25), (5, 21, 35), (7, 15, 105),
)

# Triples of the shape (a, 3a, b), stored as printed.
TABLE2 = (
    (1, 3, 5), (1, 3, 7), (1, 3, 15), (1, 3, 21), (1, 5, 15), (1, 3, 45),
    (3, 5, 9), (1, 7, 21), (3, 5, 15), (3, 7, 21), (1, 15, 45), (5, 9, 15),
)

# Restricted-count lemma domains: residue classes of m per variant, and the
# target scaling between the two sides.
LEMMA31_VARIANTS = {
    "i": (ParityClass((1, 0)), 1, 4, 4),    # m ≡ 1 (mod 4): 2 r_(1,0)(m) = r_(1,1)(4m)
    "ii": (ParityClass((0, 1)), 3, 4, 4),   # m ≡ 3 (mod 4): 2 r_(0,1)(m) = r_(1,1)(4m)
    "iii": (ParityClass((0, 0)), 4, 8, 1),  # m ≡ 4 (mod 8): 2 r_(0,0)(m) = r_(1,1)(m)
}

LEMMA31_MAPS = {"i": PSI1, "ii": PSI2, "iii": PSI3}
