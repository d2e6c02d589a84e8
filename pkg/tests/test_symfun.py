from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cayleypow.exactnum import binom, multinomial
from cayleypow.mpoly import complete_homogeneous, elem_sym, poly_eval
from cayleypow.symfun import (
    ExpTuple,
    a_seq,
    coeff_c,
    comp_count_check,
    exp_tuples,
    fib_signs,
    gen_fib,
    gen_fib_formula,
    hom_lhs,
    hom_lhs_enumerated,
    hom_lhs_table,
    thm1_rhs,
    thm1_rhs_symbolic,
)

from conftest import rationals


def _e(point):
    return [poly_eval(elem_sym(len(point), j), point) for j in range(1, len(point) + 1)]


def test_exp_tuples_small():
    assert [t.i for t in exp_tuples(3, 5)] == [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0)]
    assert [t.i for t in exp_tuples(1, 3)] == [()]
    assert all(t.weight <= 7 for t in exp_tuples(4, 7))


def test_exp_tuple_validation():
    with pytest.raises(ValueError):
        ExpTuple((3,), 5)
    with pytest.raises(ValueError):
        ExpTuple((-1,), 5)


def test_coeff_is_multinomial_of_parts():
    for t in exp_tuples(4, 9):
        assert coeff_c(t) == multinomial(t.parts)


def test_hom_lhs_dp_matches_enumeration():
    pt = [Fraction(1, 2), -3, Fraction(5, 7)]
    for n in range(7):
        assert hom_lhs(pt, n) == hom_lhs_enumerated(pt, n)
    assert hom_lhs([1, 2, 3], 2) == 25
    assert hom_lhs_table([], 3) == [1, 0, 0, 0]


@given(st.lists(rationals, min_size=1, max_size=5), st.integers(0, 14))
def test_expansion_equals_complete_homogeneous(point, n):
    assert thm1_rhs(_e(point), n) == hom_lhs(point, n)


@given(st.lists(rationals, min_size=1, max_size=5), st.integers(0, 20))
def test_recursion_agrees_with_expansion(s, n):
    assert a_seq(s, n)[n] == thm1_rhs(s, n)


@pytest.mark.parametrize("k,n", [(1, 5), (2, 6), (3, 5)])
def test_symbolic_expansion(k, n):
    assert thm1_rhs_symbolic(k, n) == complete_homogeneous(k, n)


def test_thm1_rhs_input_checks():
    with pytest.raises(ValueError):
        thm1_rhs([], 3)
    with pytest.raises(ValueError):
        thm1_rhs([1], -1)


def test_gen_fib():
    assert gen_fib(3, 7) == [1, 1, 2, 4, 7, 13, 24, 44]
    assert gen_fib(1, 5) == [1] * 6
    assert gen_fib(2, 6) == [1, 1, 2, 3, 5, 8, 13]
    for k in range(1, 6):
        seq = gen_fib(k, 25)
        assert [gen_fib_formula(k, n) for n in range(26)] == seq
        assert a_seq(fib_signs(k), 25) == seq


def test_gen_fib_validation():
    with pytest.raises(ValueError):
        gen_fib(0, 3)
    with pytest.raises(ValueError):
        gen_fib(2, -1)


def test_composition_count_uses_k_minus_one():
    r = comp_count_check(2, 3)
    assert r.passed and r.lhs == "4"
    assert "binom(4,2)=6 does not match" in r.note
    # the printed binomial coincides with the count only on a thin set
    assert comp_count_check(3, 0).passed
    for k in range(2, 6):
        for n in range(1, 12):
            assert comp_count_check(k, n).lhs == str(binom(n + k - 1, k - 1))
