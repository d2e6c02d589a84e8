"""Complete homogeneous symmetric values from elementary symmetric data.

The identity at the heart of this package writes h_n(x_1, ..., x_k), the sum
of all degree-n monomials, as a weighted sum over index tuples
(i_2, ..., i_k) with 2*i_2 + ... + k*i_k <= n:

    h_n = sum c(i, n) * s_1^(i_1) * prod_j ((-1)^(j-1) * s_j)^(i_j),

where s_j = e_j(x), i_1 = n - (2*i_2 + ... + k*i_k) and c(i, n) is the
multinomial coefficient of (i_1, i_2, ..., i_k). Both sides obey the
order-k recursion a(n) = s_1 a(n-1) - s_2 a(n-2) + ... + (-1)^(k-1) s_k a(n-k).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterator, Sequence

from .exactnum import Scalar, as_rational, binom, multinomial
from .mpoly import DEFAULT_TERM_BUDGET, MPoly, PolyBudgetExceeded, compositions, complete_homogeneous, elem_sym
from .report import FAIL, PASS, IdentityReport


@dataclass(frozen=True)
class ExpTuple:
    """Index tuple (i_2, ..., i_k) at target degree n."""

    i: tuple[int, ...]
    n: int

    def __post_init__(self):
        if any(x < 0 for x in self.i):
            raise ValueError(f"negative index in {self.i}")
        if self.weight > self.n:
            raise ValueError(f"weight {self.weight} exceeds n = {self.n}")

    @property
    def k(self) -> int:
        return len(self.i) + 1

    @property
    def weight(self) -> int:
        return sum((j + 2) * e for j, e in enumerate(self.i))

    @property
    def slack(self) -> int:
        """i_1 = n - weight."""
        return self.n - self.weight

    @property
    def parts(self) -> tuple[int, ...]:
        return (self.slack,) + self.i


def exp_tuples(k: int, n: int) -> Iterator[ExpTuple]:
    """Valid index tuples, lexicographic in (i_2, ..., i_k)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    for raw in _raw_tuples(k, n):
        yield ExpTuple(raw, n)


def _raw_tuples(k: int, n: int, j: int = 2) -> Iterator[tuple[int, ...]]:
    if j > k:
        yield ()
        return
    for e in range(n // j + 1):
        for rest in _raw_tuples(k, n - j * e, j + 1):
            yield (e,) + rest


def coeff_c(t: ExpTuple) -> int:
    """(n - i_2 - 2 i_3 - ... - (k-1) i_k)! / (i_2! ... i_k! (n - weight)!)."""
    top = t.n - sum((j + 1) * e for j, e in enumerate(t.i))
    result = math.factorial(top) // math.factorial(t.slack)
    for e in t.i:
        result //= math.factorial(e)
    return result


def _common_scale(values: Sequence[Fraction]) -> int:
    return reduce(lambda a, b: a * b // math.gcd(a, b), (v.denominator for v in values), 1)


def thm1_rhs(s: Sequence[Scalar], n: int) -> Fraction:
    """Right-hand side of the h_n expansion at given symmetric values s_1..s_k.

    Every term has total weight n, so with D the lcm of the denominators of
    s the integers S_j = s_j * D^j give the sum as an integer over D^n.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    s = [as_rational(v) for v in s]
    k = len(s)
    if k < 1:
        raise ValueError("need at least one symmetric value")
    scale = _common_scale(s)
    ints = [int(v * scale ** (j + 1)) for j, v in enumerate(s)]
    weights = [ints[0]] + [(-1) ** j * ints[j] for j in range(1, k)]
    fact = [1] * (n + 1)
    for m in range(1, n + 1):
        fact[m] = fact[m - 1] * m
    # power tables: weights[0] up to n, weights[j] up to n // (j + 1)
    powers = []
    for j, w in enumerate(weights):
        table = [1]
        for _ in range(n // (j + 1)):
            table.append(table[-1] * w)
        powers.append(table)
    total = 0
    for raw in _raw_tuples(k, n):
        w = sum((j + 2) * e for j, e in enumerate(raw))
        slack = n - w
        c = fact[slack + sum(raw)] // fact[slack]
        term = powers[0][slack]
        for j, e in enumerate(raw):
            if e:
                c //= fact[e]
                term *= powers[j + 1][e]
        total += c * term
    return Fraction(total, scale**n)


def thm1_rhs_symbolic(k: int, n: int, budget: int = DEFAULT_TERM_BUDGET) -> MPoly:
    """The expansion with s_j replaced by e_j(x_1..x_k), multiplied out."""
    expected = binom(n + k - 1, k - 1)
    if expected > budget:
        raise PolyBudgetExceeded(f"h_{n} in {k} variables needs {expected} terms")
    e = [elem_sym(k, j) for j in range(1, k + 1)]
    signed = [e[0]] + [e[j].scale((-1) ** j) for j in range(1, k)]
    # cache powers of the signed symmetric polynomials
    cache: dict[tuple[int, int], MPoly] = {}

    def power(j: int, m: int) -> MPoly:
        key = (j, m)
        if key not in cache:
            cache[key] = MPoly.constant(k, 1) if m == 0 else power(j, m - 1).mul(signed[j], budget)
        return cache[key]

    total = MPoly(k)
    for t in exp_tuples(k, n):
        term = power(0, t.slack)
        for j, e in enumerate(t.i):
            if e:
                term = term.mul(power(j + 1, e), budget)
        total = total + term.scale(coeff_c(t))
    return total


def hom_lhs_table(point: Sequence[Scalar], nmax: int) -> list[Fraction]:
    """h_0..h_nmax at ``point``, summing compositions grouped by their last part."""
    pt = [as_rational(v) for v in point]
    scale = _common_scale(pt) if pt else 1
    xs = [int(v * scale) for v in pt]
    h = [1] + [0] * nmax  # zero variables: only the empty composition of 0
    for x in xs:
        xp = [1]
        for _ in range(nmax):
            xp.append(xp[-1] * x)
        h = [sum(xp[r] * h[m - r] for r in range(m + 1)) for m in range(nmax + 1)]
    return [Fraction(v, scale**m) for m, v in enumerate(h)]


def hom_lhs(point: Sequence[Scalar], n: int) -> Fraction:
    """h_n(point), the sum of x^r over all compositions r of n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return hom_lhs_table(point, n)[n]


def hom_lhs_enumerated(point: Sequence[Scalar], n: int) -> Fraction:
    """Literal enumeration of every composition; only for small k and n."""
    pt = [as_rational(v) for v in point]
    total = Fraction(0)
    for r in compositions(n, len(pt)):
        term = Fraction(1)
        for x, e in zip(pt, r):
            term *= x**e
        total += term
    return total


def a_seq(s: Sequence[Scalar], nmax: int) -> list[Fraction]:
    """a(0..nmax) from a(0) = 1, a(m < 0) = 0 and the order-k recursion."""
    if nmax < 0:
        raise ValueError("nmax must be nonnegative")
    s = [as_rational(v) for v in s]
    # same recursion on integers D^m a(m), D the lcm of the denominators
    scale = _common_scale(s)
    signed = [int((-1) ** j * v * scale ** (j + 1)) for j, v in enumerate(s)]
    a = [1]
    for m in range(1, nmax + 1):
        a.append(sum(w * a[m - 1 - j] for j, w in enumerate(signed) if m - 1 - j >= 0))
    return [Fraction(v, scale**m) for m, v in enumerate(a)]


def gen_fib(k: int, nmax: int) -> list[int]:
    """k-step Fibonacci numbers F_k(0..nmax) with F_k(0) = 1."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if nmax < 0:
        raise ValueError("nmax must be nonnegative")
    f = [1]
    for m in range(1, nmax + 1):
        f.append(sum(f[max(0, m - k) : m]))
    return f


def gen_fib_formula(k: int, n: int) -> int:
    """F_k(n) as the multinomial sum over index tuples."""
    return sum(multinomial(t.parts) for t in exp_tuples(k, n))


def fib_signs(k: int) -> list[int]:
    """s_1..s_k with (-1)^(j-1) s_j = 1, the k-step Fibonacci specialization."""
    return [(-1) ** j for j in range(k)]


def comp_count_check(k: int, n: int) -> IdentityReport:
    """Evaluate the all-ones specialization and compare it to both binomials.

    Passes when the evaluated sum equals the composition count
    binom(n+k-1, k-1); the note records whether binom(n+k-1, k) also matches.
    """
    # k^n * prod_j ((-1)^(j-1) k^-j binom(k, j))^(i_j), term by term as displayed
    total = Fraction(0)
    for t in exp_tuples(k, n):
        term = Fraction(k) ** n
        for j, e in enumerate(t.i, start=2):
            term *= (Fraction((-1) ** (j - 1) * binom(k, j), k**j)) ** e
        total += coeff_c(t) * term
    count = binom(n + k - 1, k - 1)
    printed = binom(n + k - 1, k)
    enumerated = hom_lhs([1] * k, n)
    status = PASS if total == count == enumerated else FAIL
    note = (
        f"sum={total}; composition count binom({n + k - 1},{k - 1})={count}; "
        f"binom({n + k - 1},{k})={printed} {'matches' if printed == total else 'does not match'}"
    )
    return IdentityReport(
        "composition-count", {"k": k, "n": n}, status, str(total), str(count), note
    )
