import pytest
from hypothesis import given
from hypothesis import strategies as st

from triforms.forms import (BinaryQuadForm, InvalidFormError, LinearCongruence,
                            ParityClass, RangeError, TernaryQuadForm,
                            as_constraint)

F135 = TernaryQuadForm.diagonal(1, 3, 5)
F1 = TernaryQuadForm(4, 4, 8, 0, 0, 2)


def test_evaluate_examples():
    assert F135((1, 1, 1)) == 9
    assert F135((0, 0, 0)) == 0
    assert F1((3, -1, 1)) == 42


def test_positive_definite_examples():
    assert TernaryQuadForm.diagonal(1, 1, 6).is_positive_definite()
    assert not TernaryQuadForm(1, 1, 1, 0, 0, -3).is_positive_definite()
    # genus member of the (1,15,18) case
    assert TernaryQuadForm(4, 34, 34, 8, 4, 4).is_positive_definite()


def test_require_positive_definite_raises():
    with pytest.raises(InvalidFormError):
        TernaryQuadForm(1, 1, 1, 0, 0, -3).require_positive_definite()


def test_coefficient_bound():
    with pytest.raises(RangeError):
        TernaryQuadForm.diagonal(10**7, 1, 1)


def test_substitute_hand_expansion():
    # f(x, x-2y, x-2z) for <1,1,6> -> 8x^2+4y^2+24z^2-4xy-24xz
    m = ((1, 0, 0), (1, -2, 0), (1, 0, -2))
    g = TernaryQuadForm.diagonal(1, 1, 6).substituted(m)
    assert g == TernaryQuadForm(8, 4, 24, 0, -24, -4)


def test_substitute_identity():
    ident = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert F1.substituted(ident) == F1


def test_substitute_recovers_aux_form():
    # f1(y+2z, y-2z, x) == 8x^2+10y^2+24z^2
    m = ((0, 1, 2), (0, 1, -2), (1, 0, 0))
    assert F1.substituted(m) == TernaryQuadForm.diagonal(8, 10, 24)


def test_substitute_singular_rejected():
    m = ((1, 0, 0), (1, 0, 0), (0, 0, 1))
    with pytest.raises(InvalidFormError):
        F135.substituted(m)


def test_literal_roundtrip():
    assert TernaryQuadForm.from_literal("1,3,5;0,0,0") == F135
    assert F1.to_literal() == "4,4,8;0,0,2"
    assert TernaryQuadForm.from_literal(F1.to_literal()) == F1
    with pytest.raises(ValueError):
        TernaryQuadForm.from_literal("1,3,5")
    with pytest.raises(ValueError):
        TernaryQuadForm.from_literal("1,3;0,0,0")


def test_poly_str():
    assert str(F1) == "4x^2 + 4y^2 + 8z^2 + 2xy"
    assert str(TernaryQuadForm(2, 6, 12, 6, 2, 0)) == "2x^2 + 6y^2 + 12z^2 + 6yz + 2xz"


def test_binary_form_basics():
    b = BinaryQuadForm(1, 3)
    assert b((2, 1)) == 7
    assert b.is_positive_definite()
    assert not BinaryQuadForm(1, 1, 5).is_positive_definite()
    assert str(BinaryQuadForm(3, 5)) == "3x^2 + 5y^2"


def test_parity_class_validation():
    assert ParityClass((1, 0, 1)).satisfied((3, 2, -1))
    assert not ParityClass((1, 0, 1)).satisfied((2, 2, 1))
    with pytest.raises(ValueError):
        ParityClass((2, 0, 1))
    with pytest.raises(ValueError):
        ParityClass((1,))


def test_linear_congruence():
    c = LinearCongruence((1, 3, -4), 16, 0)
    assert c.satisfied((1, 1, 1))
    assert not c.satisfied((1, 1, 0))
    # residue normalizes into [0, modulus)
    assert LinearCongruence((1, 0), 4, -1).residue == 3
    with pytest.raises(ValueError):
        LinearCongruence((1, 1), 0, 0)


def test_as_constraint_rank_mismatch():
    with pytest.raises(ValueError):
        as_constraint((1, 1), 3)


@st.composite
def pd_ternary(draw):
    diag = [draw(st.integers(1, 8)) for _ in range(3)]
    cross = [draw(st.integers(-4, 4)) for _ in range(3)]
    f = TernaryQuadForm(*diag, *cross)
    if not f.is_positive_definite():
        f = TernaryQuadForm(*diag)
    return f


@given(pd_ternary(),
       st.tuples(st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9)))
def test_positive_values_property(f, v):
    val = f(v)
    assert val >= 0
    assert (val == 0) == (v == (0, 0, 0))


@given(pd_ternary(),
       st.lists(st.integers(-3, 3), min_size=9, max_size=9),
       st.tuples(st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6)))
def test_substitution_soundness(f, entries, v):
    m = (tuple(entries[0:3]), tuple(entries[3:6]), tuple(entries[6:9]))
    mv = tuple(sum(m[i][j] * v[j] for j in range(3)) for i in range(3))
    try:
        g = f.substituted(m)
    except InvalidFormError:
        return
    assert g(v) == f(mv)


def test_substitution_soundness_100_seeded(rng_seed):
    import random
    rng = random.Random(rng_seed)
    done = 0
    while done < 100:
        f = TernaryQuadForm(rng.randint(1, 9), rng.randint(1, 9),
                            rng.randint(1, 9), rng.randint(-4, 4),
                            rng.randint(-4, 4), rng.randint(-4, 4))
        if not f.is_positive_definite():
            continue
        m = tuple(tuple(rng.randint(-5, 5) for _ in range(3)) for _ in range(3))
        v = tuple(rng.randint(-20, 20) for _ in range(3))
        mv = tuple(sum(m[i][j] * v[j] for j in range(3)) for i in range(3))
        try:
            g = f.substituted(m)
        except InvalidFormError:
            continue
        assert g(v) == f(mv)
        done += 1
