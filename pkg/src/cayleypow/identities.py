"""Exact checks of the combinatorial identities derived from the power formulas.

Each ``check_*`` function evaluates both sides of one identity exactly and
returns an :class:`~cayleypow.report.IdentityReport`. Nothing here uses a
tolerance: a check passes only on exact Fraction (or QuadRat) equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .exactnum import QuadRat, Scalar, as_rational, binom
from .matpower import (
    Matrix,
    char_coeffs,
    companion3,
    cor1_a,
    cor1_b,
    cor1_power2,
    cor1_power2_printed,
    cor1_power3,
    pow_binary,
    thm2_coeffs,
    thm3_rhs,
)
from .mpoly import complete_homogeneous, elem_sym, poly_eval
from .report import FAIL, PASS, IdentityReport
from .symfun import a_seq, fib_signs, gen_fib, gen_fib_formula, hom_lhs, thm1_rhs, thm1_rhs_symbolic


# ---------------------------------------------------------------------------
# Expansion of h_n and the matrix power formulas
# ---------------------------------------------------------------------------

def check_thm1_symbolic(k: int, n: int) -> IdentityReport:
    lhs = complete_homogeneous(k, n)
    rhs = thm1_rhs_symbolic(k, n)
    return IdentityReport.compare("thm1-symbolic", {"k": k, "n": n}, lhs, rhs)


def check_thm1_point(point: Sequence[Scalar], n: int, seed=None) -> IdentityReport:
    point = [as_rational(v) for v in point]
    k = len(point)
    s = [poly_eval(elem_sym(k, j), point) for j in range(1, k + 1)]
    return IdentityReport.compare(
        "thm1-numeric", {"point": point, "n": n}, hom_lhs(point, n), thm1_rhs(s, n), seed=seed
    )


def check_recursion(s: Sequence[Scalar], n: int) -> IdentityReport:
    """The recursion's a(n) against the closed sum at the same s."""
    return IdentityReport.compare("thm1-recursion", {"s": list(s), "n": n}, a_seq(s, n)[n], thm1_rhs(s, n))


def check_fib(k: int, nmax: int) -> IdentityReport:
    rec = gen_fib(k, nmax)
    formula = [gen_fib_formula(k, n) for n in range(nmax + 1)]
    via_a = [int(v) for v in a_seq(fib_signs(k), nmax)]
    ok = rec == formula == via_a
    return IdentityReport(
        "fib", {"k": k, "nmax": nmax}, PASS if ok else FAIL,
        " ".join(map(str, rec)), " ".join(map(str, formula)),
        "" if rec == via_a else "recurrence and a_seq disagree",
    )


def check_thm2_power(A: Matrix, n: int, seed=None) -> IdentityReport:
    params = {"A": A, "n": n}
    if n < A.k:
        return IdentityReport.skipped("thm2-power", params, f"closed form needs n >= {A.k}", seed)
    dec = thm2_coeffs(char_coeffs(A), n)
    return IdentityReport.compare(
        "thm2-power", params, dec.reconstruct(A), pow_binary(A, n),
        note="b=" + ",".join(str(b) for b in dec.b), seed=seed,
    )


def check_cor1_power3(A: Matrix, n: int, seed=None) -> IdentityReport:
    params = {"A": A, "n": n}
    if A.k != 3 or n < 3:
        return IdentityReport.skipped("cor1-power3", params, "needs a 3x3 matrix and n >= 3", seed)
    t, s, d = char_coeffs(A).s
    lhs = cor1_power3(A, n)
    rhs = pow_binary(A, n)
    agree = cor1_a(t, s, d, n) == thm1_rhs((t, s, d), n)
    rep = IdentityReport.compare("cor1-power3", params, lhs, rhs, seed=seed)
    if not agree:
        return IdentityReport(rep.id, rep.params, FAIL, rep.lhs, rep.rhs, "a_n sum differs from h_n expansion", seed)
    return rep


def check_cor1_power2(B: Matrix, n: int, seed=None) -> IdentityReport:
    params = {"B": B, "n": n}
    if B.k != 2 or n < 2:
        return IdentityReport.skipped("cor1-power2", params, "needs a 2x2 matrix and n >= 2", seed)
    printed = cor1_power2_printed(B, n)
    oracle = pow_binary(B, n)
    note = "used b_(n-1) B + (b_n - t b_(n-1)) I; b_n I + b_(n-1) Adj(B) " + (
        "also matches" if printed == oracle else "does not match"
    )
    return IdentityReport.compare("cor1-power2", params, cor1_power2(B, n), oracle, note, seed)


def check_thm3(x: Scalar, y: Scalar | None, z: Scalar | None, n: int, variant: str = "distinct", seed=None) -> IdentityReport:
    """Rational form of h_n(x, y, z) against enumeration and the companion power.

    ``n`` here is the degree; the companion matrix is raised to n + 1.
    """
    x = as_rational(x)
    y = x if variant in ("y_eq_x", "all_eq") else as_rational(y)
    z = x if variant == "all_eq" else as_rational(z)
    params = {"x": x, "y": y, "z": z, "n": n, "variant": variant}
    try:
        closed = thm3_rhs(x, y, z, n, variant)
    except ValueError as exc:
        return IdentityReport.skipped("thm3", params, str(exc), seed)
    enum = hom_lhs([x, y, z], n)
    entry = pow_binary(companion3(x, y, z), n + 1).entry(1, 2)
    sums = cor1_a(x + y + z, x * y + x * z + y * z, x * y * z, n)
    ok = closed == enum == entry == sums
    return IdentityReport(
        "thm3", params, PASS if ok else FAIL, str(sums), str(closed),
        "" if ok else f"h_n={enum}, companion (1,2) entry={entry}", seed,
    )


# ---------------------------------------------------------------------------
# shifted and scalar forms built on k = 2 and k = 3
# ---------------------------------------------------------------------------

def cor2_a(theta: Fraction, t: Fraction, d: Fraction, n: int) -> Fraction:
    """a_n with (t, s, d) -> (theta + t, theta t + d, theta d)."""
    if n < 0:
        return Fraction(0)
    return thm1_rhs((theta + t, theta * t + d, theta * d), n)


def check_cor2_matrix(B: Matrix, theta: Scalar, n: int, seed=None) -> IdentityReport:
    params = {"B": B, "theta": theta, "n": n}
    if B.k != 2:
        raise ValueError("check_cor2_matrix needs a 2x2 matrix")
    if n < 3:
        return IdentityReport.skipped("cor2-matrix", params, "needs n >= 3", seed)
    theta = as_rational(theta)
    t, d = B.trace(), char_coeffs(B).s[1]
    a = {m: cor2_a(theta, t, d, m) for m in (n, n - 1, n - 2)}
    y = {m: cor1_b(t, d, m) for m in (n, n - 1)}
    ident = Matrix.identity(2)
    lhs = B.scale(a[n - 1] - theta * a[n - 2]) + ident.scale(a[n] - (theta + t) * a[n - 1] + theta * a[n - 2] * t)
    rhs = B.scale(y[n - 1]) + ident.scale(y[n] - t * y[n - 1])
    rep = IdentityReport.compare("cor2-matrix", params, lhs, rhs, seed=seed)
    if rep.passed and rhs != pow_binary(B, n):
        return IdentityReport(rep.id, rep.params, FAIL, rep.lhs, rep.rhs, "both sides agree but differ from B^n", seed)
    return rep


def cor2_scalar_b(theta: Scalar, n: int) -> Fraction:
    """sum (-1)^i C(i+j,j) C(n-i-2j,i+j) (theta+2)^(n-2i-3j) (1+2 theta)^i theta^j, with 0^0 = 1."""
    theta = as_rational(theta)
    return cor1_a(theta + 2, 1 + 2 * theta, theta, n)


def cor2_scalar_residuals(theta: Scalar, nmax: int) -> dict[int, Fraction]:
    theta = as_rational(theta)
    b = [cor2_scalar_b(theta, m) for m in range(nmax + 1)]
    return {n: b[n] - (theta + 1) * b[n - 1] + theta * b[n - 2] for n in range(3, nmax + 1)}


def check_cor2_scalar(theta: Scalar, nmax: int) -> IdentityReport:
    if nmax < 3:
        raise ValueError("nmax must be at least 3")
    res = cor2_scalar_residuals(theta, nmax)
    bad = {n: r for n, r in res.items() if r != 1}
    return IdentityReport(
        "cor2-scalar", {"theta": theta, "nmax": nmax}, FAIL if bad else PASS,
        "1" if not bad else str(next(iter(bad.values()))), "1",
        f"residual differs from 1 at n={sorted(bad)[:5]}" if bad else "",
    )


def cor3_c(n: int, form: str = "derived") -> int:
    """c_n = sum over 2i + 3j = n of C(i+j, j) times 3^i (-2)^j ("derived")
    or (-1)^i 2^i 3^j ("printed")."""
    total = 0
    for j in range(n // 3 + 1):
        rest = n - 3 * j
        if rest % 2:
            continue
        i = rest // 2
        if form == "derived":
            total += binom(i + j, j) * 3**i * (-2) ** j
        elif form == "printed":
            total += (-1) ** i * binom(i + j, j) * 2**i * 3**j
        else:
            raise ValueError(f"unknown form {form!r}")
    return total


def cor3_residuals(nmax: int, form: str = "derived") -> dict[int, int]:
    c = [cor3_c(m, form) for m in range(nmax + 1)]
    return {n: c[n] + c[n - 1] - 2 * c[n - 2] for n in range(3, nmax + 1)}


def check_cor3(nmax: int) -> IdentityReport:
    """Pass iff the theta = -2 summand satisfies c_n + c_(n-1) - 2 c_(n-2) = 1.

    The printed summand (-1)^i 2^i 3^j is evaluated too and its first
    failure is recorded in the note.
    """
    if nmax < 3:
        raise ValueError("nmax must be at least 3")
    derived = cor3_residuals(nmax, "derived")
    printed = cor3_residuals(nmax, "printed")
    bad = sorted(n for n, r in derived.items() if r != 1)
    printed_bad = sorted(n for n, r in printed.items() if r != 1)
    if printed_bad:
        first = printed_bad[0]
        pnote = f"printed summand (-1)^i 2^i 3^j fails first at n={first} with residual {printed[first]}"
    else:
        pnote = "printed summand (-1)^i 2^i 3^j also satisfies the recurrence"
    note = "summand 3^i (-2)^j from theta=-2 in the scalar case; " + pnote
    return IdentityReport(
        "cor3", {"nmax": nmax}, FAIL if bad else PASS,
        "1" if not bad else str(derived[bad[0]]), "1", note,
    )


# ---------------------------------------------------------------------------
# four closed-form sums (i)-(iv) from the k = 3 recursion
# ---------------------------------------------------------------------------

def prop_i_lhs(n: int) -> int:
    """sum_j (-1)^j C(n-2j, j); the outer index i does not occur in the summand."""
    return sum((-1) ** j * binom(n - 2 * j, j) for j in range(n // 3 + 1))


def prop_i_recurrence(nmax: int) -> list[int]:
    u = [1, 1, 1][: nmax + 1]
    for n in range(3, nmax + 1):
        u.append(u[n - 1] - u[n - 3])
    return u


def prop_ii_lhs(n: int) -> int:
    return sum(
        (-1) ** j * binom(i + j, j) * binom(n - i - 2 * j, i + j)
        for j in range(n // 3 + 1)
        for i in range((n - 3 * j) // 2 + 1)
    )


def prop_iii_lhs(n: int) -> int:
    return sum(binom(n - 2 * j, j) * (-4) ** j * 3 ** (n - 3 * j) for j in range(n // 3 + 1))


def prop_iii_rhs(n: int) -> Fraction:
    return Fraction((3 * n + 4) * 2 ** (n + 1) + (-1) ** n, 9)


def prop_iv_lhs(n: int) -> int:
    return sum(binom(n - 2 * j, j) * 3 ** (n - 3 * j) * (-2) ** j for j in range(n // 3 + 1))


def prop_iv_rhs(n: int) -> QuadRat:
    plus = QuadRat(1, 1, 3) ** (n + 1)
    minus = QuadRat(1, -1, 3) ** (n + 1)
    return (plus - minus) / QuadRat(0, 2, 3) + (plus + minus) / 6 - Fraction(1, 3)


def check_prop_items(n: int) -> list[IdentityReport]:
    if n < 0:
        raise ValueError("n must be nonnegative")
    reports = []
    u = prop_i_recurrence(n)[n]
    lhs_i = prop_i_lhs(n)
    via_h = thm1_rhs((1, 0, -1), n)
    ok = lhs_i == u == via_h
    reports.append(IdentityReport(
        "prop-i", {"n": n}, PASS if ok else FAIL, str(lhs_i), str(u),
        "u_n = u_(n-1) - u_(n-3), u_0=u_1=u_2=1 (s=(1,0,-1))" + ("" if lhs_i == via_h else f"; h_n expansion gives {via_h}"),
    ))
    reports.append(IdentityReport.compare("prop-ii", {"n": n}, prop_ii_lhs(n), (n + 2) // 2))
    rhs_iii = prop_iii_rhs(n)
    rep = IdentityReport.compare("prop-iii", {"n": n}, Fraction(prop_iii_lhs(n)), rhs_iii)
    if rhs_iii.denominator != 1:
        rep = IdentityReport(rep.id, rep.params, FAIL, rep.lhs, rep.rhs, "right side not divisible by 9")
    reports.append(rep)
    rhs_iv = prop_iv_rhs(n)
    lhs_iv = QuadRat(prop_iv_lhs(n), 0, 3)
    reports.append(IdentityReport(
        "prop-iv", {"n": n}, PASS if (rhs_iv.is_rational() and lhs_iv == rhs_iv) else FAIL,
        str(lhs_iv), str(rhs_iv), "" if rhs_iv.is_rational() else "irrational part does not vanish",
    ))
    return reports


# ---------------------------------------------------------------------------
# Triple sums from the commuting factorization of a 3x3 matrix
# ---------------------------------------------------------------------------

def _powers(base: Fraction, top: int) -> list[Fraction]:
    out = [Fraction(1)]
    for _ in range(top):
        out.append(out[-1] * base)
    return out


def triple_sum(n: int, term: Callable[[int, int, int], Fraction]) -> Fraction:
    """sum_{r=0}^{3n} sum_{j,k=0}^{n} C(n,j) C(n,k) C(j, r-j-k) term(j, k, r).

    C(j, r-j-k) vanishes unless j + k <= r <= 2j + k, so only that band of r
    is visited.
    """
    total = Fraction(0)
    for j in range(n + 1):
        cj = binom(n, j)
        for k in range(n + 1):
            ck = cj * binom(n, k)
            for r in range(j + k, 2 * j + k + 1):
                total += ck * binom(j, r - j - k) * term(j, k, r)
    return total


def prop2_coefficients(n: int, p: Fraction, t: Fraction, s: Fraction, d: Fraction) -> list[Fraction]:
    """Scalar weight of A^r, r = 0..3n, in the commuting-factor expansion of A^n."""
    X = -p * (p + t) ** 2 / d
    Y = -(p + t) / p
    Z = -1 / (p + t)
    Xp, Yp, Zp = _powers(X, n), _powers(Y, n), _powers(Z, 3 * n)
    coeffs = [Fraction(0)] * (3 * n + 1)
    for j in range(n + 1):
        for k in range(n + 1):
            base = binom(n, j) * binom(n, k) * Xp[j] * Yp[k]
            for r in range(j + k, 2 * j + k + 1):
                coeffs[r] += base * binom(j, r - j - k) * Zp[r]
    scale = (p * d / (p**3 + p**2 * t + s * p + d)) ** n
    return [scale * c for c in coeffs]


def check_prop2_commuting(A: Matrix, p: Scalar, n: int, seed=None) -> IdentityReport:
    p = as_rational(p)
    params = {"A": A, "p": p, "n": n}
    if A.k != 3:
        raise ValueError("check_prop2_commuting needs a 3x3 matrix")
    t, s, d = char_coeffs(A).s
    q = p**3 + p**2 * t + s * p + d
    if d == 0 or p == 0 or p == -t or q == 0:
        return IdentityReport.skipped("prop2-commuting", params, "needs d != 0, p not in {0, -t}, p^3+p^2 t+p s+d != 0", seed)
    coeffs = prop2_coefficients(n, p, t, s, d)
    total = Matrix.zero(3)
    power = Matrix.identity(3)
    for r, c in enumerate(coeffs):
        if r:
            power = power.matmul(A)
        if c:
            total = total + power.scale(c)
    return IdentityReport.compare("prop2-commuting", params, total, pow_binary(A, n), seed=seed)


SEC3_VARIANTS = ("general", "y_to_x", "z_to_x", "p_only")


def _sec3_sides(variant: str, point: Sequence[Fraction], p: Fraction, n: int) -> tuple[Fraction, Fraction] | str:
    """Both sides of one scalar identity, or the violated precondition."""
    sign = lambda j, k, r: -1 if (j + k + r) & 1 else 1  # noqa: E731
    if variant == "general":
        x, y, z = point
        if len({x, y, z}) < 3:
            return "x, y, z must be pairwise distinct"
        e1, e2, e3 = x + y + z, x * y + x * z + y * z, x * y * z
        if e3 == 0 or p == 0 or p + e1 == 0:
            return "needs xyz != 0, p != 0, p+x+y+z != 0"

        def N(r):
            return x * y * (x**r - y**r) - x * z * (x**r - z**r) + y * z * (y**r - z**r)

        X, Y = p * (p + e1) ** 2 / e3, (p + e1) / p
        lhs = triple_sum(n, lambda j, k, r: sign(j, k, r) * X**j * Y**k * N(r) / (p + e1) ** r)
        rhs = N(n) * ((p**3 + p**2 * e1 + p * e2 + e3) / (p * e3)) ** n
        return lhs, rhs
    if variant == "y_to_x":
        x, z = point
        if x == z or x == 0 or z == 0 or p == 0 or p + 2 * x + z == 0:
            return "needs x != z, xz != 0, p != 0, p+2x+z != 0"
        e1 = 2 * x + z

        def M(r):
            return r * x ** (r + 1) - x**r * z - r * x**r * z + z ** (r + 1)

        X, Y = p * (p + e1) ** 2 / (x**2 * z), (p + e1) / p
        lhs = triple_sum(n, lambda j, k, r: sign(j, k, r) * X**j * Y**k * M(r) / (p + e1) ** r)
        rhs = M(n) * ((p**3 + p**2 * e1 + p * (x**2 + 2 * x * z) + x**2 * z) / (p * x**2 * z)) ** n
        return lhs, rhs
    if variant == "z_to_x":
        (x,) = point
        if x == 0 or p == 0 or p + 3 * x == 0:
            return "needs x != 0, p != 0, p+3x != 0"
        X, Y = p * (p + 3 * x) ** 2 / x**3, (p + 3 * x) / p
        lhs = triple_sum(
            n, lambda j, k, r: sign(j, k, r) * X**j * Y**k * Fraction(r * (1 + r), 2) * x ** (r - 1) / (p + 3 * x) ** r
        )
        rhs = Fraction(n * (1 + n), 2) * x ** (n - 1) * ((p + x) ** 3 / (p * x**3)) ** n
        return lhs, rhs
    if variant == "p_only":
        if p == 0:
            return "needs p != 0"
        lhs = triple_sum(n, lambda j, k, r: sign(j, k, r) * p ** (j - k) * (p + 3) ** (2 * j + k - r) * Fraction(r * (1 + r), 2))
        rhs = Fraction(n * (1 + n), 2) * (p + 1) ** (3 * n) / p**n
        return lhs, rhs
    raise ValueError(f"unknown variant {variant!r}")


def check_sec3_scalar(point: Sequence[Scalar], p: Scalar, n: int, variant: str, seed=None) -> IdentityReport:
    point = [as_rational(v) for v in point]
    p = as_rational(p)
    expected = {"general": 3, "y_to_x": 2, "z_to_x": 1, "p_only": 0}
    if variant not in expected:
        raise ValueError(f"unknown variant {variant!r}")
    if len(point) != expected[variant]:
        raise ValueError(f"{variant} needs {expected[variant]} coordinates")
    params = {"point": point, "p": p, "n": n, "variant": variant}
    sides = _sec3_sides(variant, point, p, n)
    if isinstance(sides, str):
        return IdentityReport.skipped(f"sec3-{variant}", params, sides, seed)
    return IdentityReport.compare(f"sec3-{variant}", params, sides[0], sides[1], seed=seed)


SPECIAL_CASES = ("unipotent", "fibonacci", "mersenne", "gh")


def special_matrix(case: str, g: Scalar = 1, h: Scalar = 2) -> Matrix:
    """The block matrices whose power entries give the special weights."""
    if case == "unipotent":
        return Matrix([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    if case == "fibonacci":
        return Matrix([[1, 1, 0], [1, 0, 0], [0, 0, 1]])
    if case == "mersenne":
        return Matrix([[3, 1, 0], [-2, 0, 0], [0, 0, 1]])
    if case == "gh":
        g, h = as_rational(g), as_rational(h)
        return Matrix([[(g + h) / 2, (g - h) ** 2 / 4, 0], [1, (g + h) / 2, 0], [0, 0, 1]])
    raise ValueError(f"unknown case {case!r}")


def special_weight(case: str, r: int, g: Fraction = Fraction(1), h: Fraction = Fraction(2)) -> Fraction:
    """The entry of special_matrix(case)^r read by the identity: (1, 2) for the
    first three cases, twice the (1, 1) entry for ``gh``."""
    if case == "unipotent":
        return Fraction(r)
    if case == "fibonacci":
        return Fraction(0 if r == 0 else gen_fib(2, r - 1)[r - 1])
    if case == "mersenne":
        return Fraction(2**r - 1)
    if case == "gh":
        return g**r + h**r
    raise ValueError(f"unknown case {case!r}")


def check_sec3_special(case: str, p: Scalar, n: int, g: Scalar = 1, h: Scalar = 2, seed=None) -> IdentityReport:
    p, g, h = as_rational(p), as_rational(g), as_rational(h)
    params = {"case": case, "p": p, "n": n}
    if case == "gh":
        params.update(g=g, h=h)
    excluded = {
        "unipotent": {0, -1},
        "fibonacci": {0, -1},  # the golden-ratio exclusions cannot occur over Q
        "mersenne": {0, -1, -2},
        "gh": {0, -1, -g, -h},
    }
    if case not in excluded:
        raise ValueError(f"unknown case {case!r}")
    if p in excluded[case] or (case == "gh" and g * h == 0):
        return IdentityReport.skipped(f"sec3-{case}", params, f"p must avoid {sorted(excluded[case])}", seed)
    fib = [Fraction(0)] + [Fraction(v) for v in gen_fib(2, max(3 * n, 1))]

    def sgn(e):
        return -1 if e & 1 else 1

    if case == "unipotent":
        lhs = triple_sum(n, lambda j, k, r: sgn(j + k + r) * p ** (j - k) * (p + 3) ** (2 * j + k - r) * r)
        rhs = n * (1 + p) ** (3 * n) / p**n
    elif case == "fibonacci":
        lhs = triple_sum(n, lambda j, k, r: sgn(k + r) * p ** (j - k) * (p + 2) ** (2 * j + k - r) * fib[r])
        rhs = fib[n] * (1 + p) ** n * (-1 + p + p**2) ** n / (-p) ** n
    elif case == "mersenne":
        lhs = triple_sum(
            n, lambda j, k, r: sgn(j + k + r) * p ** (j - k) * (p + 4) ** (2 * j + k - r) * Fraction(1, 2**j) * (2**r - 1)
        )
        rhs = (2**n - 1) * ((1 + p) ** 2 * (p + 2) / (2 * p)) ** n
    else:
        tr = p + 1 + g + h
        lhs = triple_sum(
            n, lambda j, k, r: sgn(j + k + r) * p ** (j - k) * tr ** (2 * j + k - r) * (g**r + h**r) / (g * h) ** j
        )
        rhs = (g**n + h**n) * ((1 + p) * (g + p) * (h + p) / (g * h * p)) ** n
    return IdentityReport.compare(f"sec3-{case}", params, lhs, rhs, seed=seed)


def check_special_weights(case: str, rmax: int, g: Scalar = 1, h: Scalar = 2) -> IdentityReport:
    """Tie each special weight back to its block matrix power."""
    g, h = as_rational(g), as_rational(h)
    M = special_matrix(case, g, h)
    got, want = [], []
    power = Matrix.identity(3)
    for r in range(rmax + 1):
        if r:
            power = power.matmul(M)
        got.append(2 * power.entry(1, 1) if case == "gh" else power.entry(1, 2))
        want.append(special_weight(case, r, g, h))
    return IdentityReport.compare(f"sec3-{case}-weights", {"case": case, "rmax": rmax}, got, want)


# ---------------------------------------------------------------------------
# Zeros of f(n) = sum_j (-1)^j C(n-2j, j) and the cubic Thue equation
# ---------------------------------------------------------------------------

BERNSTEIN_MATRIX = Matrix([[1, 1, 0], [0, 0, 1], [-1, 0, 0]])


def thue_form(x: int, y: int) -> int:
    return x**3 + y**3 - x * y * y


def bernstein_direct(n: int) -> int:
    """f(n) by summing the binomials, stepping C(m, j) -> C(m-2, j+1) exactly."""
    if n < 0:
        return 0
    total, c, j, m = 0, 1, 0, n
    while True:
        total += -c if j & 1 else c
        if 3 * (j + 1) > n:
            return total
        c = c * ((m - j) * (m - j - 1) * (m - j - 2)) // ((j + 1) * m * (m - 1))
        j += 1
        m -= 2


def bernstein_recurrence(nmax: int) -> list[int]:
    f = [1, 1, 1][: nmax + 1]
    for n in range(3, nmax + 1):
        f.append(f[n - 1] - f[n - 3])
    return f


@dataclass
class BernsteinState:
    f: list[int]
    zeros: list[int] = field(default_factory=list)
    thue_pairs: set[tuple[int, int]] = field(default_factory=set)

    def value(self, m: int) -> int:
        """f(m), with f(m) = 0 for m < 0."""
        return self.f[m] if m >= 0 else 0


def linked_pair(state: BernsteinState, zero: int) -> tuple[int, int]:
    """The Thue solution attached to a zero f(n0) = 0, with n = n0 + 2."""
    n = zero + 2
    x, y = state.value(n - 1), state.value(n - 3)
    # F(f(n-1), f(n-3)) = (-1)^(n+1); F is odd, so flip for even n
    return (x, y) if n % 2 else (-x, -y)


def bernstein_f(nmax: int) -> BernsteinState:
    if nmax < 0:
        raise ValueError("nmax must be nonnegative")
    f = bernstein_recurrence(nmax)
    for n, v in enumerate(f):
        direct = bernstein_direct(n)
        if direct != v:
            raise ArithmeticError(f"f({n}): direct sum {direct} != recurrence {v}")
    state = BernsteinState(f, [n for n, v in enumerate(f) if v == 0])
    for z in state.zeros:
        if z + 1 <= nmax:
            pair = linked_pair(state, z)
            if thue_form(*pair) != 1:
                raise ArithmeticError(f"pair {pair} from zero {z} does not solve the Thue equation")
            state.thue_pairs.add(pair)
    return state


def bernstein_entry_matrix(f: Callable[[int], int], n: int) -> Matrix:
    return Matrix([
        [f(n), f(n - 1), f(n - 2)],
        [-f(n - 2), -f(n - 3), -f(n - 4)],
        [-f(n - 1), -f(n - 2), -f(n - 3)],
    ])


def bernstein_matrix_check(nmax: int) -> IdentityReport:
    """A^n against the f-entry matrix for 4 <= n <= nmax.

    Also records where f(n-2) A^2 + (f(n) - f(n-2)) A + (f(n) - f(n-1)) I
    fails; the A coefficient that does hold is f(n-1) - f(n-2).
    """
    if nmax < 4:
        raise ValueError("nmax must be at least 4")
    state = BernsteinState(bernstein_recurrence(nmax))
    f = state.value
    A = BERNSTEIN_MATRIX
    A2 = A.matmul(A)
    ident = Matrix.identity(3)
    bad, printed_bad, det_bad = [], [], []
    for n in range(4, nmax + 1):
        power = pow_binary(A, n)
        if power != bernstein_entry_matrix(f, n):
            bad.append(n)
        printed = A2.scale(f(n - 2)) + A.scale(f(n) - f(n - 2)) + ident.scale(f(n) - f(n - 1))
        corrected = A2.scale(f(n - 2)) + A.scale(f(n - 1) - f(n - 2)) + ident.scale(f(n) - f(n - 1))
        if printed != power:
            printed_bad.append(n)
        if corrected != power:
            bad.append(n)
        if _det3(power) != (-1) ** n:
            det_bad.append(n)
    note = []
    if printed_bad:
        note.append(f"A-coefficient f(n)-f(n-2) fails at {len(printed_bad)} of {nmax - 3} n (first n={printed_bad[0]}); f(n-1)-f(n-2) holds")
    if det_bad:
        note.append(f"det(A^n) != (-1)^n at n={det_bad[:5]}")
    status = FAIL if (bad or det_bad) else PASS
    return IdentityReport(
        "bernstein-matrix", {"nmax": nmax}, status,
        f"mismatch at {sorted(set(bad))[:5]}" if bad else "A^n", "f-entry matrix", "; ".join(note),
    )


def _det3(M: Matrix) -> Fraction:
    (a, b, c), (d, e, f), (g, h, i) = M.rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def thue_search(bound: int) -> set[tuple[int, int]]:
    """All (x, y) with |x|, |y| <= bound and x^3 + y^3 - x y^2 = 1."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    return {
        (x, y)
        for x in range(-bound, bound + 1)
        for y in range(-bound, bound + 1)
        if thue_form(x, y) == 1
    }


def thue_link_check(nmax: int, bound: int = 50, state: BernsteinState | None = None) -> IdentityReport:
    """Every zero of f with n = zero + 2 <= nmax gives a Thue solution in the box."""
    if nmax < 5:
        raise ValueError("nmax must be at least 5")
    state = state or BernsteinState(bernstein_recurrence(nmax))
    f = state.value
    zeros = [n for n in range(nmax - 1) if f(n) == 0]
    pairs = {}
    problems = []
    for z in zeros:
        n = z + 2
        det = -f(n - 1) ** 3 - f(n - 3) ** 3 + f(n - 1) * f(n - 3) ** 2
        if det != (-1) ** n:
            problems.append(f"determinant relation fails at n={n}")
        pair = linked_pair(state, z)
        pairs[z] = pair
        box = max(bound, abs(pair[0]), abs(pair[1]))
        if pair not in thue_search(box):
            problems.append(f"{pair} not found by search")
    return IdentityReport(
        "thue-link", {"nmax": nmax, "bound": bound}, FAIL if problems else PASS,
        " ".join(f"n0={z}->{p}" for z, p in pairs.items()), "solutions of x^3+y^3-xy^2=1",
        "; ".join(problems) or f"zeros {zeros}",
    )
