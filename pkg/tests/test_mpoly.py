from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from cayleypow.exactnum import binom
from cayleypow.mpoly import (
    MPoly,
    PolyBudgetExceeded,
    complete_homogeneous,
    compositions,
    elem_sym,
    poly_eval,
)

from conftest import rationals


def _poly(nvars):
    mono = st.tuples(*[st.integers(0, 3)] * nvars)
    return st.dictionaries(mono, rationals, max_size=5).map(lambda t: MPoly(nvars, t))


points3 = st.lists(rationals, min_size=3, max_size=3)


def test_canonical_form_drops_zeros():
    p = MPoly(2, {(1, 0): 1, (0, 1): 0})
    q = MPoly(2, {(1, 0): 2}) - MPoly(2, {(1, 0): 1})
    assert p == q
    assert len(MPoly(2, {(1, 1): 3}) - MPoly(2, {(1, 1): 3})) == 0
    assert str(MPoly(3)) == "0"


def test_text_form():
    p = MPoly(3, {(2, 1, 0): 3, (0, 0, 1): Fraction(-1, 2)})
    assert str(p) == "3*x1^2*x2 - 1/2*x3"


def test_bad_monomials():
    with pytest.raises(ValueError):
        MPoly(2, {(1,): 1})
    with pytest.raises(ValueError):
        MPoly(2, {(1, -1): 1})
    with pytest.raises(ValueError):
        MPoly(2) + MPoly(3)


@given(_poly(3), _poly(3), points3)
def test_evaluation_is_a_ring_homomorphism(p, q, pt):
    assert poly_eval(p + q, pt) == poly_eval(p, pt) + poly_eval(q, pt)
    assert poly_eval(p * q, pt) == poly_eval(p, pt) * poly_eval(q, pt)


@given(_poly(2), st.integers(0, 4))
def test_pow_matches_repeated_products(p, e):
    expected = MPoly.constant(2, 1)
    for _ in range(e):
        expected = expected * p
    assert p.pow(e) == expected


@pytest.mark.parametrize("k", range(1, 5))
def test_elem_sym_is_permutation_invariant(k):
    for j in range(k + 1):
        e = elem_sym(k, j)
        assert len(e) == binom(k, j)
        for perm in permutations(range(k)):
            assert e.permute(perm) == e


@given(st.lists(rationals, min_size=1, max_size=4), rationals)
def test_product_of_linear_factors(xs, T):
    # prod (T - x_i) = sum_j (-1)^j e_j(x) T^(k-j)
    k = len(xs)
    lhs = Fraction(1)
    for x in xs:
        lhs *= T - x
    rhs = sum((-1) ** j * poly_eval(elem_sym(k, j), xs) * T ** (k - j) for j in range(k + 1))
    assert lhs == rhs


def test_compositions():
    assert list(compositions(2, 2)) == [(2, 0), (1, 1), (0, 2)]
    assert list(compositions(0, 0)) == [()]
    assert list(compositions(1, 0)) == []
    for n in range(6):
        for k in range(1, 5):
            assert len(list(compositions(n, k))) == binom(n + k - 1, k - 1)


def test_complete_homogeneous_and_budget():
    h = complete_homogeneous(3, 4)
    assert h.is_homogeneous() and h.degree() == 4
    assert len(h) == 15
    with pytest.raises(PolyBudgetExceeded):
        complete_homogeneous(6, 40, budget=1000)
    x = MPoly.variable(2, 0) + MPoly.variable(2, 1)
    with pytest.raises(PolyBudgetExceeded):
        x.pow(20, budget=5)
