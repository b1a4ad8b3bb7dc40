"""Identity checks: restricted-count lemmas, the equality-classification
lemma over binary forms, the four main theorems, and the weighted genus
identity, all decided by exact counting.

Every check returns a plain bool; preconditions on the inputs raise
HypothesisError.  Batch scanning (whole n-ranges at once) lives in
``scans``; these entry points favor clarity over speed.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .counting import count, count_parity, solutions
from .fixtures import (FIXTURES, LEMMA31_VARIANTS, TABLE1, TABLE2, THM4_FORM,
                       X2_3Y2, ConstrainedRepSet, ExplicitLinearMap,
                       GenusFixture)
from .forms import BinaryQuadForm, HypothesisError, MapDomainError
from .triangular import TriangularTriple, t_direct

FRACTION_SET = (Fraction(1), Fraction(5, 3), Fraction(7), Fraction(15))


def table_triples(which: int):
    """The eligible triples, verbatim: 21 for table 1, 12 for table 2."""
    if which == 1:
        return list(TABLE1)
    if which == 2:
        return list(TABLE2)
    raise ValueError(f"no table {which!r}; choose 1 or 2")


# --- restricted-count lemmas -----------------------------------------------

def lemma31_check(variant: str, m: int) -> bool:
    """2 r_d(x^2+3y^2, m) = r_(1,1)(x^2+3y^2, scale*m) for the variant's
    parity class d and residue class of m."""
    if variant not in LEMMA31_VARIANTS:
        raise ValueError(f"variant must be one of i, ii, iii, got {variant!r}")
    parity, residue, modulus, scale = LEMMA31_VARIANTS[variant]
    if m < 1 or m % modulus != residue:
        raise HypothesisError(
            f"variant {variant} needs m ≡ {residue} (mod {modulus}), got {m}")
    lhs = 2 * count(X2_3Y2, m, (parity,))
    rhs = count_parity(X2_3Y2, scale * m, (1, 1))
    return lhs == rhs


def _require_lemma32_pair(a: int, b: int) -> None:
    if not (0 < a < b and a % 2 and b % 2 and gcd(a, b) == 1
            and (a + b) % 8 == 0):
        raise HypothesisError(
            f"need odd coprime a < b with a+b ≡ 0 (mod 8), got ({a},{b})")


def lemma32_check(a: int, b: int, m: int) -> bool:
    """r_(1,1)(ax^2+by^2, m) = r_(1,1)(ax^2+by^2, 4m) for 8 | m."""
    _require_lemma32_pair(a, b)
    if m % 8:
        raise HypothesisError(f"m must be divisible by 8, got {m}")
    f = BinaryQuadForm(a, b)
    return count_parity(f, m, (1, 1)) == count_parity(f, 4 * m, (1, 1))


def lemma32_counterexample_search(a: int, b: int, m_max: int):
    """Smallest m ≡ 0 (mod 8), m <= m_max, where the lemma-2 equality
    fails, or None.  (None for the three equality pairs.)"""
    _require_lemma32_pair(a, b)
    f = BinaryQuadForm(a, b)
    from .counting import count_table
    lo = count_table(f, m_max, parity=(1, 1))
    hi = count_table(f, 4 * m_max, parity=(1, 1))
    for m in range(8, m_max + 1, 8):
        if lo[m] != hi[4 * m]:
            return m
    return None


def lemma32_pairs(sum_max: int):
    """All admissible (a, b) with a+b <= sum_max."""
    out = []
    for s in range(8, sum_max + 1, 8):
        for a in range(1, (s + 1) // 2, 2):
            if a != s - a and gcd(a, s - a) == 1:
                out.append((a, s - a))
    return out


EQUALITY_PAIRS = ((3, 5), (1, 7), (1, 15))


# --- explicit maps ----------------------------------------------------------

def apply_map(lmap: ExplicitLinearMap, v):
    return lmap.apply(v)


def verify_bijection(lmap: ExplicitLinearMap, dom: ConstrainedRepSet,
                     cod: ConstrainedRepSet) -> bool:
    """True iff lmap maps dom into cod injectively and onto, decided by
    enumerating both finite sets.  A domain violation counts as failure."""
    dom_elems = dom.elements()
    cod_elems = set(cod.elements())
    images = []
    for v in dom_elems:
        try:
            images.append(lmap.apply(v))
        except MapDomainError:
            return False
    if len(set(images)) != len(images):
        return False
    return set(images) == cod_elems


# --- the four theorems ------------------------------------------------------

def fraction_hypothesis(triple) -> bool:
    """Two of the three fractions b/a, c/b, c/a lie in {1, 5/3, 7, 15}
    (and the triple is coprime but not (1,1,1))."""
    a, b, c = triple
    if (a, b, c) == (1, 1, 1) or gcd(gcd(a, b), c) != 1:
        return False
    fracs = (Fraction(b, a), Fraction(c, b), Fraction(c, a))
    return sum(f in FRACTION_SET for f in fracs) >= 2


def theorem1_check(triple, n: int) -> bool:
    """2 t(a,b,c;n) = r(f, 4N) - r(f, N) with N = 8n+a+b+c."""
    if not fraction_hypothesis(triple):
        raise HypothesisError(f"{triple} does not satisfy the two-fraction hypothesis")
    if n < 1:
        raise HypothesisError("n must be positive")
    tt = TriangularTriple.of(triple)
    f = tt.form()
    big_n = 8 * n + tt.shift
    return 2 * t_direct(tt, n) == count(f, 4 * big_n) - count(f, big_n)


def table2_roles(triple):
    """Recover (a, b) from a stored (a, 3a, b) row by finding the ratio-3
    pair; validates the theorem-2 hypothesis."""
    vals = tuple(triple)
    for p in sorted(set(vals)):
        if vals.count(p) >= 1 and 3 * p in vals:
            rest = list(vals)
            rest.remove(p)
            rest.remove(3 * p)
            b = rest[0]
            if p % 2 and b % 2 and gcd(p, b) == 1:
                fracs = {Fraction(b, p), Fraction(p, b),
                         Fraction(3 * p, b), Fraction(b, 3 * p)}
                if fracs & {Fraction(5, 3), Fraction(7), Fraction(15)}:
                    return p, b
    raise HypothesisError(f"{triple} is not an eligible (a, 3a, b) triple")


def theorem2_check(triple, n: int) -> bool:
    """2 t(a,3a,b;n) = 3 r(f, N) - r(f, 4N) with N = 8n+4a+b."""
    a, b = table2_roles(triple)
    if n < 1:
        raise HypothesisError("n must be positive")
    tt = TriangularTriple.of(triple)
    f = tt.form()
    big_n = 8 * n + 4 * a + b        # 4a + b == a + 3a + b == tt.shift
    return 2 * t_direct(tt, n) == 3 * count(f, big_n) - count(f, 4 * big_n)


def theorem3_check(triple, n: int, force: bool = False) -> bool:
    """2 t(a,b,c;n) = r(f, 4N) - r(f, N) for the three genus-fixture
    triples and even n.  Odd n is a precondition error unless force."""
    key = tuple(triple)
    if key not in FIXTURES:
        raise HypothesisError(f"{key} is not one of the fixture triples")
    if n < 1:
        raise HypothesisError("n must be positive")
    if n % 2 and not force:
        raise HypothesisError(f"n must be even (got {n}); pass force=True to evaluate anyway")
    tt = TriangularTriple.of(key)
    f = tt.form()
    big_n = 8 * n + tt.shift
    return 2 * t_direct(tt, n) == count(f, 4 * big_n) - count(f, big_n)


def theorem4_check(n: int, force: bool = False) -> bool:
    """2 t(1,1,27;n) = r(f, 4N) - r(f, N), N = 8n+29, for n !≡ 1 (mod 3)."""
    if n < 1:
        raise HypothesisError("n must be positive")
    if n % 3 == 1 and not force:
        raise HypothesisError(f"n must not be ≡ 1 (mod 3) (got {n}); "
                              "pass force=True to evaluate anyway")
    big_n = 8 * n + 29
    lhs = 2 * t_direct((1, 1, 27), n)
    return lhs == count(THM4_FORM, 4 * big_n) - count(THM4_FORM, big_n)


# --- weighted genus identity ------------------------------------------------

def siegel_identity_check(fixture: GenusFixture, m: int) -> bool:
    """At N = 16m+offset: the weighted identity
    r(f1) + 2 r(f2) + r(f3) = r(g1) + r(g2), together with the two
    sub-identities r(f1) = r(f2) and r(g2) = r(aux1) + r(aux2)."""
    if m < 0:
        raise HypothesisError("m must be nonnegative")
    n = fixture.target(m)
    r = {name: count(f, n) for name, f in fixture.forms().items()}
    return (r["f1"] + 2 * r["f2"] + r["f3"] == r["g1"] + r["g2"]
            and r["f1"] == r["f2"]
            and r["g2"] == r["aux1"] + r["aux2"])


# --- solution-pattern classification used in the theorem-1 argument ---------

def thm1_orientation(triple):
    """Reorder so a ≡ b ≡ -c (mod 8); exactly one such role split exists."""
    vals = tuple(triple)
    for i in range(3):
        c = vals[i]
        rest = tuple(vals[j] for j in range(3) if j != i)
        if (rest[0] - rest[1]) % 8 == 0 and (rest[0] + c) % 8 == 0:
            return (rest[0], rest[1], c)
    raise HypothesisError(f"{triple} admits no a ≡ b ≡ -c (mod 8) orientation")


def thm1_residue_patterns(triple):
    """The six admissible (ax^2, by^2, cz^2) mod 8 patterns for solutions
    of f = 4N, in the a ≡ b ≡ -c orientation."""
    a, b, c = thm1_orientation(triple)
    return (a, b, c), {
        (0, 0, 4), (0, 4, 0), (a % 8, 4, c % 8),
        (4, 0, 0), (4, b % 8, c % 8), (4, 4, 4),
    }


def thm1_pattern_check(triple, n: int) -> bool:
    """Every solution of f = 4N falls into one of the six patterns."""
    (a, b, c), patterns = thm1_residue_patterns(triple)
    tt = TriangularTriple.of((a, b, c))
    big_n = 8 * n + tt.shift
    for (x, y, z) in solutions(tt.form(), 4 * big_n):
        if (a * x * x % 8, b * y * y % 8, c * z * z % 8) not in patterns:
            return False
    return True
