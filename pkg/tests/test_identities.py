from fractions import Fraction
from random import Random

import pytest

from cayleypow import identities as ids
from cayleypow.exactnum import QuadRat
from cayleypow.matpower import Matrix, companion3
from cayleypow.report import FAIL, PASS, SKIPPED, IdentityReport


def test_report_json_shape():
    r = IdentityReport.compare("x", {"A": Matrix([[1]]), "p": Fraction(1, 2)}, 3, 3, seed=7)
    assert list(r.to_dict()) == ["id", "params", "status", "lhs", "rhs", "note", "seed"]
    assert r.to_dict()["params"] == {"A": "[[1]]", "p": "1/2"}
    assert r.passed and not r.failed
    assert IdentityReport.compare("x", {}, 1, 2).status == FAIL
    assert IdentityReport.skipped("x", {}, "why").status == SKIPPED


def test_core_checks_pass():
    assert ids.check_thm1_symbolic(3, 5).passed
    assert ids.check_thm1_point([1, Fraction(-2, 3), 5], 9).passed
    assert ids.check_recursion([2, -1, Fraction(1, 3)], 12).passed
    assert ids.check_fib(4, 30).passed
    A = Matrix([[2, 1, 0], [-1, 3, 4], [0, 5, -2]])
    assert ids.check_thm2_power(A, 9).passed
    assert ids.check_cor1_power3(A, 9).passed
    assert ids.check_cor1_power2(Matrix([[1, 2], [3, 4]]), 7).passed
    assert ids.check_thm3(1, 2, 3, 6).passed
    assert ids.check_thm3(1, None, 2, 6, variant="y_eq_x").passed


def test_thm2_below_order_is_skipped():
    r = ids.check_thm2_power(companion3(1, 2, 3), 2)
    assert r.status == SKIPPED


def test_cor2_matrix_and_scalar():
    B = Matrix([[2, -1], [3, 5]])
    for theta in (Fraction(-2), Fraction(5, 3)):
        for n in (3, 10):
            assert ids.check_cor2_matrix(B, theta, n).passed
    assert ids.check_cor2_matrix(B, 1, 2).status == SKIPPED
    for theta in (-2, -1, 0, 1, Fraction(5, 3)):
        assert set(ids.cor2_scalar_residuals(theta, 40).values()) == {1}


def test_cor3_adjudication():
    assert set(ids.cor3_residuals(60).values()) == {1}
    assert ids.cor3_residuals(4, "printed")[4] == 11
    r = ids.check_cor3(50)
    assert r.passed and "n=4 with residual 11" in r.note
    with pytest.raises(ValueError):
        ids.cor3_c(5, "other")


def test_prop_items():
    reports = ids.check_prop_items(25)
    assert [r.status for r in reports] == [PASS] * 4
    assert ids.prop_i_recurrence(8) == [1, 1, 1, 0, -1, -2, -2, -1, 1]
    assert [ids.prop_ii_lhs(n) for n in range(6)] == [1, 1, 2, 2, 3, 3]
    assert ids.prop_iii_rhs(3).denominator == 1
    v = ids.prop_iv_rhs(7)
    assert isinstance(v, QuadRat) and v.is_rational() and v == ids.prop_iv_lhs(7)


def test_triple_sum_commuting_identity():
    A = Matrix([[1, 2, 0], [0, -1, 1], [3, 0, 2]])
    for n in range(0, 7):
        assert ids.check_prop2_commuting(A, 2, n).status in (PASS, SKIPPED)
    assert ids.check_prop2_commuting(A, 2, 5).passed


@pytest.mark.parametrize("variant,point", [
    ("general", [1, 2, 3]), ("y_to_x", [2, Fraction(-1, 3)]), ("z_to_x", [Fraction(3, 2)]), ("p_only", []),
])
def test_sec3_scalar_variants(variant, point):
    for n in range(0, 8):
        assert ids.check_sec3_scalar(point, Fraction(5, 2), n, variant).passed


def test_sec3_special_examples():
    assert ids.check_sec3_scalar([1], 1, 2, "z_to_x").rhs == "192"
    assert ids.check_sec3_special("mersenne", 1, 2).rhs == "108"
    for case in ids.SPECIAL_CASES:
        assert ids.check_sec3_special(case, 3, 6).passed
        assert ids.check_special_weights(case, 15).passed
    assert ids.check_sec3_special("mersenne", -2, 3).status == SKIPPED


def test_sec3_preconditions():
    assert ids.check_sec3_scalar([1, 1, 2], 1, 3, "general").status == SKIPPED
    with pytest.raises(ValueError):
        ids.check_sec3_scalar([1], 1, 3, "general")


def test_bernstein_values():
    f = ids.bernstein_recurrence(30)
    assert f[:13] == [ids.bernstein_direct(n) for n in range(13)]
    assert f[10] == 4 and f[3] == 0 and f[12] == 0
    state = ids.bernstein_f(200)
    assert state.zeros == [3, 12]
    assert state.thue_pairs == {(-1, 1), (4, -3)}


def test_bernstein_matrix_entries():
    assert ids.bernstein_matrix_check(60).passed


def test_thue_search_and_link():
    assert ids.thue_search(5) == {(4, -3), (-1, 1), (1, 0), (0, 1), (1, 1)}
    assert ids.thue_link_check(40).passed
    for x, y in ids.thue_search(10):
        assert ids.thue_form(x, y) == 1
