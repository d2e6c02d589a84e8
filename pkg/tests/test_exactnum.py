from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from cayleypow.exactnum import (
    ExactZeroDivision,
    QuadRat,
    RadicandMismatch,
    as_rational,
    binom,
    format_rational,
    multinomial,
    parse_rational,
    quad_arith,
    rat_arith,
    rat_pow,
)

from conftest import rationals


quads = st.builds(QuadRat, rationals, rationals, st.just(3))


def test_parse_and_format_round_trip():
    assert parse_rational("-3/6") == Fraction(-1, 2)
    assert parse_rational(" 7 ") == 7
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert format_rational(Fraction(4, 2)) == "2"


@pytest.mark.parametrize("bad", ["", "1/0", "x", "1.5.2"])
def test_parse_rejects_garbage(bad):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_rational(bad)


def test_zero_to_the_zero_is_one():
    assert rat_pow(0, 0) == 1
    assert rat_pow(Fraction(2, 3), -2) == Fraction(9, 4)
    with pytest.raises(ExactZeroDivision):
        rat_pow(0, -1)


def test_rat_arith_division_by_zero():
    assert rat_arith("div", 3, 4) == Fraction(3, 4)
    with pytest.raises(ZeroDivisionError):
        rat_arith("div", 1, 0)
    with pytest.raises(ValueError):
        rat_arith("mod", 1, 2)


def test_floats_are_refused():
    with pytest.raises(TypeError):
        as_rational(0.5)


def test_binom_zero_extension():
    assert binom(5, 2) == 10
    assert binom(3, 5) == 0
    assert binom(4, -1) == 0
    assert binom(-2, 1) == 0


@given(st.integers(1, 40), st.integers(1, 40))
def test_pascal_rule(n, r):
    assert binom(n, r) == binom(n - 1, r - 1) + binom(n - 1, r)


@given(st.lists(st.integers(0, 8), min_size=1, max_size=5))
def test_multinomial_is_product_of_binomials(parts):
    acc, prod = 0, 1
    for p in parts:
        acc += p
        prod *= binom(acc, p)
    assert multinomial(parts) == prod


def test_multinomial_rejects_negative_parts():
    with pytest.raises(ValueError):
        multinomial([2, -1])


@given(quads, quads, quads)
def test_quadratic_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x - x == QuadRat(0, 0)
    if x != QuadRat(0, 0):
        assert x * x.inverse() == QuadRat(1, 0)


@given(quads, quads)
def test_norm_is_multiplicative(x, y):
    assert (x * y).norm() == x.norm() * y.norm()


def test_quadrat_basics():
    r = QuadRat(2, 1)
    assert r * r.conjugate() == QuadRat(1, 0)
    assert r**-1 == QuadRat(2, -1)
    assert (r**0).is_rational()
    assert str(QuadRat(Fraction(1, 2), -3)) == "1/2+-3*sqrt(3)"


@given(quads)
def test_quadrat_string_round_trip(x):
    assert QuadRat.parse(str(x)) == x


def test_quadrat_errors():
    with pytest.raises(ValueError):
        QuadRat(1, 1, 4)
    with pytest.raises(RadicandMismatch):
        QuadRat(1, 1, 3) + QuadRat(1, 1, 2)
    with pytest.raises(ExactZeroDivision):
        QuadRat(0, 0).inverse()
    assert quad_arith("conj", QuadRat(1, 2)) == QuadRat(1, -2)
    assert quad_arith("mul", QuadRat(0, 1), QuadRat(0, 1)) == QuadRat(3, 0)
