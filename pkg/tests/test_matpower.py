import json
from fractions import Fraction
from random import Random

import pytest
from hypothesis import given, strategies as st

from cayleypow.matpower import (
    DimensionError,
    Matrix,
    adjugate,
    b0_forms,
    cayley_hamilton_residual,
    char_coeffs,
    companion3,
    cor1_power2,
    cor1_power2_printed,
    cor1_power3,
    determinant,
    mat_arith,
    pow_binary,
    pow_naive,
    power_closed_form,
    thm2_coeffs,
    thm3_rhs,
)
from cayleypow.symfun import hom_lhs

from conftest import rationals

FIB = Matrix.parse_inline("1,1;1,0")


def _rand(rng, k):
    return Matrix([[rng.randint(-9, 9) for _ in range(k)] for _ in range(k)])


def square(k):
    return st.lists(st.lists(rationals, min_size=k, max_size=k), min_size=k, max_size=k).map(Matrix)


def test_parse_inline_and_json_round_trip():
    A = Matrix.parse_inline("1, -1/2; 3, 0")
    assert A.entry(1, 2) == Fraction(-1, 2)
    assert A[1, 0] == 3
    assert Matrix.from_json(A.to_json()) == A
    assert json.loads(A.to_json()) == {"k": 2, "entries": [["1", "-1/2"], ["3", "0"]]}


@pytest.mark.parametrize("text", ['{"k": 3, "entries": [["1","2"],["3","4"]]}', '{"entries": []}', '{"k": 1}'])
def test_bad_json(text):
    with pytest.raises(ValueError):
        Matrix.from_json(text)


def test_ragged_and_mismatched():
    with pytest.raises(ValueError):
        Matrix([[1, 2], [3]])
    with pytest.raises(DimensionError):
        FIB.matmul(Matrix.identity(3))
    with pytest.raises(ValueError):
        mat_arith("pow", FIB, FIB)


@given(st.integers(0, 30), st.integers(0, 30))
def test_pow_binary_adds_exponents(m, n):
    A = Matrix([[2, -1, 0], [1, 1, 3], [0, -2, 1]])
    assert pow_binary(A, m + n) == pow_binary(A, m).matmul(pow_binary(A, n))


def test_pow_strategies_agree():
    rng = Random(3)
    for k in (2, 3, 4):
        A = _rand(rng, k)
        for n in (0, 1, 5, 17):
            assert pow_binary(A, n) == pow_naive(A, n)
    with pytest.raises(ValueError):
        pow_binary(FIB, -1)


@given(square(3))
def test_char_coeffs_and_cayley_hamilton(A):
    cc = char_coeffs(A)
    assert cc.s[0] == A.trace()
    assert cc.s[-1] == determinant(A)
    assert cayley_hamilton_residual(A, cc) == Matrix.zero(3)


@given(square(3))
def test_adjugate_identity(A):
    assert A.matmul(adjugate(A)) == Matrix.identity(3).scale(determinant(A))


def test_fibonacci_decomposition():
    dec = thm2_coeffs(char_coeffs(FIB), 10)
    assert dec.b == (34, 55)
    assert dec.reconstruct(FIB) == Matrix([[89, 55], [55, 34]])
    with pytest.raises(ValueError):
        thm2_coeffs(char_coeffs(FIB), 1)


def test_closed_form_matches_binary():
    rng = Random(11)
    for k in range(2, 6):
        for _ in range(5):
            A = _rand(rng, k)
            cc = char_coeffs(A)
            for n in (k, k + 1, 23):
                assert power_closed_form(A, n) == pow_binary(A, n)
                alt, short = b0_forms(cc.s, n)
                assert alt == short


def test_explicit_forms_for_small_matrices():
    rng = Random(5)
    for _ in range(10):
        A, B = _rand(rng, 3), _rand(rng, 2)
        for n in range(3, 15):
            assert cor1_power3(A, n) == pow_binary(A, n)
            assert cor1_power2(B, n) == pow_binary(B, n)


def test_printed_two_by_two_form_breaks_off_diagonal():
    B = Matrix([[1, 2], [3, 4]])
    good, printed = pow_binary(B, 4), cor1_power2_printed(B, 4)
    assert good != printed
    assert printed[0, 1] == -good[0, 1]


def test_thm3_forms():
    assert thm3_rhs(1, 2, 3, 2) == 25
    assert thm3_rhs(1, None, 2, 2, "y_eq_x") == 11 == hom_lhs([1, 1, 2], 2)
    assert thm3_rhs(2, None, None, 3, "all_eq") == hom_lhs([2, 2, 2], 3)
    C = companion3(1, 2, 3)
    for n in range(1, 12):
        assert pow_binary(C, n).entry(1, 2) == thm3_rhs(1, 2, 3, n - 1)
    with pytest.raises(ValueError):
        thm3_rhs(1, 1, 3, 2)
    with pytest.raises(ValueError):
        thm3_rhs(1, 2, 3, 2, "bogus")
