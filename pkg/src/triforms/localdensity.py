"""The x^2 + y^2 + 6z^2 case: excluded residues, 2-adic densities, and the
ratio identity linking them to representation counts.

The 2-adic density alpha_2(f, 2^s t) for f = <1,1,6> has a four-branch
closed form in s and t mod 8; all values are dyadic rationals and every
comparison here is exact.
"""

from __future__ import annotations

from fractions import Fraction

from .counting import count
from .forms import HypothesisError, TernaryQuadForm, check_target
from .triangular import t_direct

FORM_116 = TernaryQuadForm.diagonal(1, 1, 6)


def two_adic_split(n: int):
    """n = 2^s * t with t odd; returns (s, t)."""
    n = check_target(n, "n")
    if n < 1:
        raise HypothesisError("n must be positive")
    s = 0
    while n % 2 == 0:
        n //= 2
        s += 1
    return s, n


def alpha2_116(s: int, t: int) -> Fraction:
    """alpha_2(<1,1,6>, 2^s t) for s >= 1 and odd t.

    The closed form is only stated for positive s (even targets); s = 0 is
    rejected rather than guessed.
    """
    if s < 1:
        raise HypothesisError("s must be >= 1 (odd targets are not covered)")
    if t % 2 == 0 or t < 1:
        raise HypothesisError(f"t must be a positive odd integer, got {t}")
    if s % 2 == 0:
        return 2 - Fraction(3, 2 ** (s // 2))
    if t % 8 == 1:
        return 2 - Fraction(1, 2 ** ((s - 1) // 2))
    if t % 8 == 5:
        return Fraction(2)
    return 2 - Fraction(3, 2 ** ((s + 1) // 2))


def alpha2_of(n: int) -> Fraction:
    """alpha_2(<1,1,6>, n) for even positive n."""
    return alpha2_116(*two_adic_split(n))


def siegel_ratio_check(n: int) -> bool:
    """r(f, 8n+8) * alpha2(2n+2) == 2 * alpha2(8n+8) * r(f, 2n+2), exactly.

    Cross-multiplied so the check also holds (vacuously) when both counts
    vanish.
    """
    if n < 1:
        raise HypothesisError("n must be positive")
    r_big = count(FORM_116, 8 * n + 8)
    r_small = count(FORM_116, 2 * n + 2)
    return (r_big * alpha2_of(2 * n + 2) ==
            2 * alpha2_of(8 * n + 8) * r_small)


def is_excluded_116(n: int) -> bool:
    """True iff n ≡ 2*3^(2r-1) - 1 (mod 3^(2r)) for some r >= 1.

    These are exactly the n with no representation.  The search stops once
    3^(2r) > 9(n+1): beyond that the residue itself exceeds n, so the
    congruence cannot hold.
    """
    n = check_target(n, "n")
    mod = 9
    while mod <= 9 * (n + 1):
        if n % mod == 2 * (mod // 3) - 1:
            return True
        mod *= 9
    return False


def representability_check_116(n: int) -> bool:
    """The representability criterion at n: a solution exists iff n is not
    excluded."""
    if n < 1:
        raise HypothesisError("n must be positive")
    return (t_direct((1, 1, 6), n) > 0) == (not is_excluded_116(n))
