import pytest
from hypothesis import given, strategies as st

from twistknot.laurent import LaurentPoly

terms = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=6)
polys = terms.map(LaurentPoly)


def test_zero_coefficients_dropped():
    p = LaurentPoly({0: 1, 3: 0, -2: 4})
    assert p.terms == {0: 1, -2: 4}
    assert LaurentPoly({1: 0}).is_zero()


def test_render_ascending():
    assert str(LaurentPoly({2: 1, 1: -1, 0: 1})) == "1 - 1*t + 1*t^2"
    assert str(LaurentPoly()) == "0"
    assert str(LaurentPoly({-1: 2})) == "2*t^-1"


def test_normalized():
    p = LaurentPoly({-3: -1, -2: 1, -1: -1})
    n = p.normalized()
    assert n.min_exp == 0
    assert n.coeff(0) == 1
    assert n == LaurentPoly({0: 1, 1: -1, 2: 1})


def test_exact_division():
    a = LaurentPoly.from_coeffs([1, -1, 1])
    b = LaurentPoly.from_coeffs([1, 1])
    assert (a * b).divmod_exact(b) == a
    with pytest.raises(ArithmeticError):
        a.divmod_exact(LaurentPoly.from_coeffs([1, 2]))


def test_substitute_and_shift():
    p = LaurentPoly({1: 1, 2: 3})
    assert p.substitute(-1) == LaurentPoly({-1: 1, -2: 3})
    assert p.substitute(2) == LaurentPoly({2: 1, 4: 3})
    assert p.shift(-1) == LaurentPoly({0: 1, 1: 3})


def test_json_round_trip():
    p = LaurentPoly({-2: 3, 5: -1}, var="s")
    assert LaurentPoly.from_json(p.to_json()) == p
    assert p.to_json()["variable"] == "s"


def test_evaluate_exact():
    p = LaurentPoly({-1: 1, 1: 1})
    assert p(2) == 2 + 0.5


def test_palindromic():
    assert LaurentPoly.from_coeffs([1, -1, 1]).is_palindromic()
    assert not LaurentPoly.from_coeffs([1, -2]).is_palindromic()


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == 0


@given(polys, polys)
def test_division_inverts_multiplication(a, b):
    if b.is_zero():
        return
    assert (a * b).divmod_exact(b) == a


@given(polys)
def test_normalization_idempotent(a):
    if a.is_zero():
        return
    assert a.normalized().normalized() == a.normalized()
    assert (-a.shift(3)).normalized() == a.normalized()
