"""Seeded verification suites behind ``cayleypow verify``.

Every suite is a function ``(seed, trials, nmax) -> list[IdentityReport]``.
Sample counts default to the acceptance sizes and ``trials`` overrides all of
them at once; ``nmax`` is the Bernstein scan limit and is ignored elsewhere. Random draws come from ``random.Random`` seeded with a string
built from the run seed and the check name, so suites are reproducible
independently of one another and of execution order.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import identities as ids
from .exactnum import as_rational
from .matpower import (
    Matrix,
    adjugate,
    cayley_hamilton_residual,
    char_coeffs,
    companion3,
    determinant,
    low_powers,
    pow_binary,
    thm2_coeffs,
    thm3_rhs,
)
from .mpoly import elem_sym, poly_eval
from .report import FAIL, PASS, SKIPPED, IdentityReport
from .symfun import a_seq, comp_count_check, hom_lhs_table, thm1_rhs

DEFAULT_SEED = 0xC0FFEE
SUITES = ("theorem1", "matrixpowers", "corollaries", "commuting", "bernstein")


def rng_for(seed: int, name: str) -> random.Random:
    return random.Random(f"{seed}:{name}")


def rand_rational(rng: random.Random, lo: int = -20, hi: int = 20, exclude: Iterable = ()) -> Fraction:
    """Numerator and nonzero denominator uniform on [lo, hi]."""
    banned = {as_rational(v) for v in exclude}
    while True:
        den = 0
        while den == 0:
            den = rng.randint(lo, hi)
        value = Fraction(rng.randint(lo, hi), den)
        if value not in banned:
            return value


def rand_int_matrix(rng: random.Random, k: int, lo: int = -9, hi: int = 9) -> Matrix:
    return Matrix([[rng.randint(lo, hi) for _ in range(k)] for _ in range(k)])


def aggregate(id: str, params: dict, reports: Sequence[IdentityReport], seed=None, note: str = "") -> IdentityReport:
    """Fold a run of sub-checks into one report (fail wins, then pass)."""
    failed = [r for r in reports if r.status == FAIL]
    passed = [r for r in reports if r.status == PASS]
    if failed:
        first = failed[0]
        tail = f"{len(failed)} of {len(reports)} failed; first at {first.params}"
        return IdentityReport(id, params, FAIL, first.lhs, first.rhs, "; ".join(x for x in (note, tail, first.note) if x), seed)
    if not passed:
        reason = reports[0].note if reports else "no admissible inputs"
        return IdentityReport(id, params, SKIPPED, "", "", reason, seed)
    last = passed[-1]
    skipped = len(reports) - len(passed)
    tail = f"{len(passed)} checks" + (f", {skipped} skipped" if skipped else "")
    return IdentityReport(id, params, PASS, last.lhs, last.rhs, "; ".join(x for x in (note, tail) if x), seed)


# ---------------------------------------------------------------------------
# range checks reused by the acceptance tests
# ---------------------------------------------------------------------------

def thm1_point_checks(point: Sequence[Fraction], nmax: int, seed=None) -> IdentityReport:
    """h_n(point) against the expansion at e(point) for n = 1..nmax."""
    k = len(point)
    s = [poly_eval(elem_sym(k, j), point) for j in range(1, k + 1)]
    table = hom_lhs_table(point, nmax)
    subs = [IdentityReport.compare("thm1-numeric", {"n": n}, table[n], thm1_rhs(s, n)) for n in range(1, nmax + 1)]
    return aggregate("thm1-numeric", {"point": list(point), "nmax": nmax}, subs, seed)


def thm2_matrix_checks(A: Matrix, nmax: int = 60, seed=None) -> IdentityReport:
    """Reconstruction and both b_0 forms for every n in [k, nmax]."""
    cc = char_coeffs(A)
    a = a_seq(cc.s, nmax)
    powers = low_powers(A)
    subs = []
    for n in range(A.k, nmax + 1):
        dec = thm2_coeffs(cc, n, a)  # raises if the b_0 forms disagree
        subs.append(IdentityReport.compare("thm2-power", {"n": n}, dec.reconstruct(A, powers), pow_binary(A, n)))
    return aggregate("thm2-power", {"A": A, "nmax": nmax}, subs, seed)


def thm3_triple_checks(x: Fraction, y: Fraction, z: Fraction, nmax: int = 30, seed=None) -> IdentityReport:
    """thm3_rhs(., n-1) against the (1, 2) entry of companion3^n, n = 1..nmax."""
    A = companion3(x, y, z)
    power = Matrix.identity(3)
    subs = []
    for n in range(1, nmax + 1):
        power = power.matmul(A)
        subs.append(IdentityReport.compare("thm3", {"n": n}, thm3_rhs(x, y, z, n - 1, "distinct"), power.entry(1, 2)))
    return aggregate("thm3", {"x": x, "y": y, "z": z, "nmax": nmax}, subs, seed)


def thm3_limit_checks(x: Fraction, z: Fraction, nmax: int = 30, seed=None) -> list[IdentityReport]:
    h_xxz = hom_lhs_table([x, x, z], nmax)
    h_xxx = hom_lhs_table([x, x, x], nmax)
    limit = [IdentityReport.compare("thm3-y_eq_x", {"n": n}, thm3_rhs(x, None, z, n, "y_eq_x"), h_xxz[n]) for n in range(nmax + 1)]
    double = [IdentityReport.compare("thm3-all_eq", {"n": n}, thm3_rhs(x, None, None, n, "all_eq"), h_xxx[n]) for n in range(nmax + 1)]
    return [
        aggregate("thm3-y_eq_x", {"x": x, "z": z, "nmax": nmax}, limit, seed),
        aggregate("thm3-all_eq", {"x": x, "nmax": nmax}, double, seed),
    ]


def cor2_matrix_checks(B: Matrix, theta: Fraction, nmin: int = 3, nmax: int = 100, seed=None) -> IdentityReport:
    theta = as_rational(theta)
    t, d = B.trace(), determinant(B)
    s3 = (theta + t, theta * t + d, theta * d)
    a = [thm1_rhs(s3, m) for m in range(nmax + 1)]
    y = [ids.cor1_b(t, d, m) for m in range(nmax + 1)]
    ident = Matrix.identity(2)
    subs = []
    power = pow_binary(B, nmin - 1)
    for n in range(nmin, nmax + 1):
        power = power.matmul(B)
        lhs = B.scale(a[n - 1] - theta * a[n - 2]) + ident.scale(a[n] - (theta + t) * a[n - 1] + theta * a[n - 2] * t)
        rhs = B.scale(y[n - 1]) + ident.scale(y[n] - t * y[n - 1])
        rep = IdentityReport.compare("cor2-matrix", {"n": n}, lhs, rhs)
        if rep.passed and rhs != power:
            rep = IdentityReport("cor2-matrix", {"n": n}, FAIL, rep.lhs, rep.rhs, "sides agree but differ from B^n")
        subs.append(rep)
    return aggregate("cor2-matrix", {"B": B, "theta": theta, "nmin": nmin, "nmax": nmax}, subs, seed)


def prop_series(item: str, nmax: int) -> IdentityReport:
    """One of the closed-form sums (i)-(iv) checked for n = 0..nmax."""
    if item == "i":
        u = ids.prop_i_recurrence(nmax)
        subs = [IdentityReport.compare("prop-i", {"n": n}, ids.prop_i_lhs(n), u[n]) for n in range(nmax + 1)]
        note = "u_n = u_(n-1) - u_(n-3), u_0=u_1=u_2=1"
    elif item == "ii":
        subs = [IdentityReport.compare("prop-ii", {"n": n}, ids.prop_ii_lhs(n), (n + 2) // 2) for n in range(nmax + 1)]
        note = "floor((n+2)/2)"
    elif item == "iii":
        subs = []
        for n in range(nmax + 1):
            rhs = ids.prop_iii_rhs(n)
            rep = IdentityReport.compare("prop-iii", {"n": n}, Fraction(ids.prop_iii_lhs(n)), rhs)
            if rhs.denominator != 1:
                rep = IdentityReport("prop-iii", {"n": n}, FAIL, rep.lhs, rep.rhs, "not divisible by 9")
            subs.append(rep)
        note = "((3n+4) 2^(n+1) + (-1)^n) / 9, integral"
    elif item == "iv":
        subs = [_prop_iv(n) for n in range(nmax + 1)]
        note = "evaluated in Q(sqrt 3), irrational part vanishes"
    else:
        raise ValueError(f"unknown item {item!r}")
    return aggregate(f"prop-{item}", {"nmax": nmax}, subs, note=note)


def _prop_iv(n: int) -> IdentityReport:
    rhs = ids.prop_iv_rhs(n)
    ok = rhs.is_rational() and rhs == ids.prop_iv_lhs(n)
    return IdentityReport("prop-iv", {"n": n}, PASS if ok else FAIL, str(ids.prop_iv_lhs(n)), str(rhs))


def prop2_checks(A: Matrix, p: Fraction, nmax: int = 12, seed=None) -> IdentityReport:
    subs = [ids.check_prop2_commuting(A, p, n) for n in range(nmax + 1)]
    return aggregate("prop2-commuting", {"A": A, "p": p, "nmax": nmax}, subs, seed)


def sec3_scalar_checks(point, p, variant: str, nmax: int = 10, seed=None) -> IdentityReport:
    subs = [ids.check_sec3_scalar(point, p, n, variant) for n in range(1, nmax + 1)]
    return aggregate(f"sec3-{variant}", {"point": list(point), "p": p, "nmax": nmax}, subs, seed)


def sec3_special_checks(case: str, p, nmax: int = 10, g=1, h=2, seed=None) -> IdentityReport:
    subs = [ids.check_sec3_special(case, p, n, g, h) for n in range(1, nmax + 1)]
    params = {"case": case, "p": p, "nmax": nmax}
    if case == "gh":
        params.update(g=as_rational(g), h=as_rational(h))
    return aggregate(f"sec3-{case}", params, subs, seed)


# ---------------------------------------------------------------------------
# samplers for admissible inputs
# ---------------------------------------------------------------------------

def sample_prop2_input(rng: random.Random) -> tuple[Matrix, Fraction]:
    while True:
        A = rand_int_matrix(rng, 3)
        t, s, d = char_coeffs(A).s
        if d == 0:
            continue
        p = rand_rational(rng, exclude=(0, -t))
        if p**3 + p**2 * t + s * p + d != 0:
            return A, p


def sample_sec3_point(rng: random.Random, variant: str) -> tuple[list[Fraction], Fraction]:
    """Draw (point, p) until every denominator of ``variant`` is nonzero."""
    dims = {"general": 3, "y_to_x": 2, "z_to_x": 1, "p_only": 0}[variant]
    while True:
        point = [rand_rational(rng, exclude=(0,)) for _ in range(dims)]
        if len(set(point)) < dims:
            continue
        if variant == "general":
            trace = sum(point, Fraction(0))
        elif variant == "y_to_x":
            trace = 2 * point[0] + point[1]
        elif variant == "z_to_x":
            trace = 3 * point[0]
        else:
            trace = Fraction(0)
        return point, rand_rational(rng, exclude=(0, -trace))


def sample_special_input(rng: random.Random, case: str) -> tuple[Fraction, Fraction, Fraction]:
    g = rand_rational(rng, exclude=(0,)) if case == "gh" else Fraction(1)
    h = rand_rational(rng, exclude=(0,)) if case == "gh" else Fraction(2)
    excluded = {"unipotent": (0, -1), "fibonacci": (0, -1), "mersenne": (0, -1, -2), "gh": (0, -1, -g, -h)}[case]
    return rand_rational(rng, exclude=excluded), g, h


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

def suite_theorem1(seed: int = DEFAULT_SEED, trials: int | None = None, nmax: int | None = None) -> list[IdentityReport]:
    reports = [ids.check_thm1_symbolic(k, n) for k in (2, 3) for n in range(0, 9)]
    npoints = trials or 50
    top = 40
    for k in range(2, 7):
        rng = rng_for(seed, f"thm1-numeric-k{k}")
        for _ in range(npoints):
            point = [rand_rational(rng) for _ in range(k)]
            reports.append(thm1_point_checks(point, top, seed))
    for k in range(1, 7):
        reports.append(ids.check_fib(k, min(top, 40)))
    for k in range(2, 6):
        reports.extend(comp_count_check(k, n) for n in range(0, 31))
    return reports


def suite_matrixpowers(seed: int = DEFAULT_SEED, trials: int | None = None, nmax: int | None = None) -> list[IdentityReport]:
    reports = []
    count = trials or 100
    top = 60
    for k in (2, 3, 4, 5):
        rng = rng_for(seed, f"thm2-k{k}")
        for _ in range(count):
            A = rand_int_matrix(rng, k)
            reports.append(thm2_matrix_checks(A, top, seed))
            ch = cayley_hamilton_residual(A)
            reports.append(IdentityReport.compare("cayley-hamilton", {"A": A}, ch, Matrix.zero(k), seed=seed))
            reports.append(IdentityReport.compare(
                "adjugate", {"A": A}, A.matmul(adjugate(A)), Matrix.identity(k).scale(determinant(A)), seed=seed
            ))
            if k == 3:
                n = rng.randint(3, top)
                reports.append(ids.check_cor1_power3(A, n, seed))
            if k == 2:
                n = rng.randint(2, top)
                reports.append(ids.check_cor1_power2(A, n, seed))
    rng = rng_for(seed, "thm3")
    for _ in range(trials or 50):
        while True:
            x, y, z = (rand_rational(rng) for _ in range(3))
            if len({x, y, z}) == 3:
                break
        reports.append(thm3_triple_checks(x, y, z, 30, seed))
        if x != z:
            reports.extend(thm3_limit_checks(x, z, 30, seed))
    return reports


def suite_corollaries(seed: int = DEFAULT_SEED, trials: int | None = None, nmax: int | None = None) -> list[IdentityReport]:
    reports = []
    top = 100
    rng = rng_for(seed, "cor2-matrix")
    for _ in range(trials or 20):
        B = rand_int_matrix(rng, 2)
        theta = rand_rational(rng)
        reports.append(cor2_matrix_checks(B, theta, 3, top, seed))
    for theta in (-2, -1, 0, 1, Fraction(5, 3)):
        reports.append(ids.check_cor2_scalar(theta, top))
    reports.append(ids.check_cor3(200))
    reports.append(prop_series("i", 500))
    reports.append(prop_series("ii", 200))
    reports.append(prop_series("iii", 200))
    reports.append(prop_series("iv", 100))
    return reports


def suite_commuting(seed: int = DEFAULT_SEED, trials: int | None = None, nmax: int | None = None) -> list[IdentityReport]:
    reports = []
    count = trials or 10
    rng = rng_for(seed, "prop2")
    for _ in range(count):
        A, p = sample_prop2_input(rng)
        reports.append(prop2_checks(A, p, 12, seed))
    for variant in ids.SEC3_VARIANTS:
        rng = rng_for(seed, f"sec3-{variant}")
        for _ in range(count):
            point, p = sample_sec3_point(rng, variant)
            reports.append(sec3_scalar_checks(point, p, variant, 10, seed))
    for case in ids.SPECIAL_CASES:
        rng = rng_for(seed, f"sec3-{case}")
        for _ in range(count):
            p, g, h = sample_special_input(rng, case)
            reports.append(sec3_special_checks(case, p, 10, g, h, seed))
        reports.append(ids.check_special_weights(case, 30))
    return reports


def suite_bernstein(seed: int = DEFAULT_SEED, trials: int | None = None, nmax: int | None = None, bound: int = 50) -> list[IdentityReport]:
    top = nmax or 5000
    state = ids.bernstein_f(top)
    zeros_ok = state.zeros == [3, 12]
    reports = [IdentityReport(
        "bernstein-zeros", {"nmax": top}, PASS if zeros_ok or top < 12 else FAIL,
        " ".join(map(str, state.zeros)), "3 12" if top >= 12 else "3",
        "direct sums agree with f(n) = f(n-1) - f(n-3)",
    )]
    reports.append(ids.bernstein_matrix_check(min(max(top, 4), 200)))
    found = ids.thue_search(bound)
    expected = {(4, -3), (-1, 1), (1, 0), (0, 1), (1, 1)}
    reports.append(IdentityReport(
        "thue-search", {"bound": bound}, PASS if found == expected else FAIL,
        " ".join(map(str, sorted(found))), " ".join(map(str, sorted(expected))),
    ))
    reports.append(ids.thue_link_check(max(top, 5), bound, state))
    return reports


SUITE_FUNCS: dict[str, Callable[..., list[IdentityReport]]] = {
    "theorem1": suite_theorem1,
    "matrixpowers": suite_matrixpowers,
    "corollaries": suite_corollaries,
    "commuting": suite_commuting,
    "bernstein": suite_bernstein,
}


def run_suites(name: str, seed: int = DEFAULT_SEED, trials: int | None = None, nmax: int | None = None) -> list[IdentityReport]:
    if name == "all":
        names = list(SUITES)
    elif name in SUITE_FUNCS:
        names = [name]
    else:
        raise KeyError(name)
    reports = []
    for n in names:
        reports.extend(SUITE_FUNCS[n](seed, trials, nmax))
    return sorted(reports, key=IdentityReport.sort_key)
