from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from triforms.forms import HypothesisError
from triforms.localdensity import (FORM_116, alpha2_116, alpha2_of,
                                   is_excluded_116,
                                   representability_check_116,
                                   siegel_ratio_check, two_adic_split)
from triforms.triangular import t_direct


def test_alpha2_closed_form_values():
    assert alpha2_116(2, 1) == Fraction(1, 2)
    assert alpha2_116(3, 1) == Fraction(3, 2)
    assert alpha2_116(1, 5) == 2
    assert alpha2_116(1, 3) == Fraction(1, 2)      # 2 - 3*2^-1
    assert alpha2_116(1, 7) == Fraction(1, 2)
    assert alpha2_116(4, 9) == Fraction(5, 4)      # 2 - 3/4
    assert alpha2_116(5, 1) == Fraction(7, 4)      # 2 - 2^-2


def test_alpha2_rejects_out_of_domain():
    with pytest.raises(HypothesisError):
        alpha2_116(0, 3)
    with pytest.raises(HypothesisError):
        alpha2_116(2, 4)
    with pytest.raises(HypothesisError):
        alpha2_of(7)


def test_two_adic_split_examples():
    assert two_adic_split(8) == (3, 1)
    assert two_adic_split(18) == (1, 9)
    assert two_adic_split(7) == (0, 7)


@given(st.integers(1, 10**9))
def test_two_adic_split_roundtrip(n):
    s, t = two_adic_split(n)
    assert t % 2 == 1
    assert 2**s * t == n


def test_excluded_residues():
    assert is_excluded_116(5)            # 2*3 - 1 = 5 (mod 9)
    assert is_excluded_116(53)           # 2*27 - 1 = 53 (mod 81)
    assert is_excluded_116(14)           # 14 ≡ 5 (mod 9)
    assert not is_excluded_116(4)
    assert not is_excluded_116(0)
    assert is_excluded_116(53 + 81)
    # direct restatement: n excluded iff some 3^(2r) catches it
    for n in range(300):
        manual = any(n % 9**r == 2 * 3**(2 * r - 1) - 1
                     for r in range(1, 6))
        assert is_excluded_116(n) == manual, n


def test_excluded_matches_vanishing_t():
    for n in range(1, 1200):
        assert (t_direct((1, 1, 6), n) == 0) == is_excluded_116(n), n


def test_representability_examples():
    assert representability_check_116(5)
    assert representability_check_116(4)
    assert representability_check_116(14)
    assert t_direct((1, 1, 6), 5) == 0
    assert t_direct((1, 1, 6), 4) == 16   # sixteen index triples, cube-checked


def test_siegel_ratio_examples():
    assert siegel_ratio_check(1)
    assert siegel_ratio_check(4)
    assert siegel_ratio_check(5)
    for n in range(1, 200):
        assert siegel_ratio_check(n), n


def test_alpha2_strict_inequality():
    for n in range(1, 10**4 + 1):
        assert 2 * alpha2_of(8 * n + 8) > alpha2_of(2 * n + 2), n


def test_difference_reduction_116():
    from triforms.counting import count_table
    from triforms.triangular import t_table
    direct = t_table((1, 1, 6), 2000)
    big = count_table(FORM_116, 8 * 2000 + 8)
    diff = big[8::8][:2001] - big[2::2][:2001]
    assert (direct == diff).all()
