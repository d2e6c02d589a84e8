"""Exact square matrices and closed-form matrix powers.

For A with characteristic polynomial T^k - s_1 T^(k-1) + ... + (-1)^k s_k,
every power with n >= k collapses onto I, A, ..., A^(k-1):

    A^n = b_(k-1) A^(k-1) + ... + b_1 A + b_0 I,
    b_j = sum_{m=0}^{k-1-j} (-1)^m s_m a(n-j-m),   s_0 = 1,

with a(.) the sequence from :func:`cayleypow.symfun.a_seq`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactnum import Scalar, as_rational, binom, format_rational
from .symfun import a_seq


class DimensionError(ValueError):
    pass


class Matrix:
    """Immutable k x k matrix of Fractions."""

    __slots__ = ("rows", "k", "_integral")

    def __init__(self, rows: Sequence[Sequence[Scalar]]):
        rows = tuple(tuple(as_rational(x) for x in r) for r in rows)
        k = len(rows)
        if k < 1 or any(len(r) != k for r in rows):
            raise DimensionError("matrix must be square with k >= 1")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "_integral", all(x.denominator == 1 for r in rows for x in r))

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def _trusted(cls, rows, integral: bool) -> "Matrix":
        """Wrap rows that are already square tuples of Fractions."""
        m = object.__new__(cls)
        object.__setattr__(m, "rows", rows)
        object.__setattr__(m, "k", len(rows))
        object.__setattr__(m, "_integral", integral)
        return m

    @classmethod
    def _from_ints(cls, rows) -> "Matrix":
        return cls._trusted(tuple(tuple(Fraction(x) for x in r) for r in rows), True)

    @classmethod
    def identity(cls, k: int) -> "Matrix":
        return cls([[int(i == j) for j in range(k)] for i in range(k)])

    @classmethod
    def zero(cls, k: int) -> "Matrix":
        return cls([[0] * k for _ in range(k)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entry(self, i: int, j: int) -> Fraction:
        """One-based entry access, matching the (i, j) convention in formulas."""
        return self.rows[i - 1][j - 1]

    def _check(self, other: "Matrix"):
        if not isinstance(other, Matrix):
            raise TypeError(f"expected Matrix, got {type(other).__name__}")
        if other.k != self.k:
            raise DimensionError(f"dimension mismatch: {self.k} vs {other.k}")

    def __add__(self, other):
        self._check(other)
        rows = tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows))
        return Matrix._trusted(rows, self._integral and other._integral)

    def __sub__(self, other):
        self._check(other)
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.rows])

    def scale(self, factor: Scalar) -> "Matrix":
        f = as_rational(factor)
        rows = tuple(tuple(f * a for a in r) for r in self.rows)
        return Matrix._trusted(rows, self._integral and f.denominator == 1)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self.matmul(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def matmul(self, other: "Matrix") -> "Matrix":
        self._check(other)
        cols = list(zip(*other.rows))
        if self._integral and other._integral:
            # int fast path; Fraction gcds dominate otherwise
            left = [[x.numerator for x in r] for r in self.rows]
            right = [[x.numerator for x in c] for c in cols]
            return Matrix._from_ints([[sum(a * b for a, b in zip(r, c)) for c in right] for r in left])
        rows = tuple(tuple(sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols) for r in self.rows)
        return Matrix._trusted(rows, all(x.denominator == 1 for r in rows for x in r))

    __matmul__ = matmul

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(self.k)), Fraction(0))

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.rows)))

    def is_integral(self) -> bool:
        return self._integral

    def __eq__(self, other):
        if isinstance(other, Matrix):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.rows]

    def __repr__(self):
        body = "; ".join(",".join(format_rational(x) for x in r) for r in self.rows)
        return f"Matrix({body})"

    # serialization
    def to_json_obj(self) -> dict:
        return {"k": self.k, "entries": [[format_rational(x) for x in r] for r in self.rows]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj) -> "Matrix":
        try:
            k = int(obj["k"])
            entries = obj["entries"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed matrix object: {exc}") from None
        rows = [[as_rational(x) if not isinstance(x, str) else as_rational(x.strip()) for x in r] for r in entries]
        m = cls(rows)
        if m.k != k:
            raise DimensionError(f"declared k={k} but entries are {m.k}x{m.k}")
        return m

    @classmethod
    def from_json(cls, text: str) -> "Matrix":
        return cls.from_json_obj(json.loads(text))

    @classmethod
    def parse_inline(cls, text: str) -> "Matrix":
        """Rows separated by ';', entries by ',', e.g. ``"1,1;1,0"``."""
        rows = [[as_rational(x.strip()) for x in row.split(",")] for row in text.strip().split(";")]
        return cls(rows)


def mat_arith(op: str, lhs: Matrix, rhs) -> Matrix:
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs.matmul(rhs)
    if op == "scale":
        return lhs.scale(rhs)
    raise ValueError(f"unknown matrix operation {op!r}")


def pow_binary(A: Matrix, n: int) -> Matrix:
    """A^n by square-and-multiply."""
    if n < 0:
        raise ValueError("negative matrix powers are not supported")
    result = Matrix.identity(A.k)
    base = A
    while n:
        if n & 1:
            result = result.matmul(base)
        n >>= 1
        if n:
            base = base.matmul(base)
    return result


def pow_naive(A: Matrix, n: int) -> Matrix:
    if n < 0:
        raise ValueError("negative matrix powers are not supported")
    result = Matrix.identity(A.k)
    for _ in range(n):
        result = result.matmul(A)
    return result


def determinant(A: Matrix) -> Fraction:
    """Determinant by fraction Gaussian elimination."""
    m = [list(r) for r in A.rows]
    k = A.k
    det = Fraction(1)
    for c in range(k):
        pivot = next((r for r in range(c, k) if m[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, k):
            if m[r][c]:
                f = m[r][c] / m[c][c]
                for j in range(c, k):
                    m[r][j] -= f * m[c][j]
    return det


@dataclass(frozen=True)
class CharCoeffs:
    """s_1..s_k of det(T I - A) = T^k - s_1 T^(k-1) + ... + (-1)^k s_k."""

    s: tuple[Fraction, ...]

    @property
    def k(self) -> int:
        return len(self.s)

    def signed(self) -> tuple[Fraction, ...]:
        """s_0..s_k with s_0 = 1."""
        return (Fraction(1),) + self.s

    def poly_coeffs(self) -> list[Fraction]:
        """Coefficients of T^k, T^(k-1), ..., T^0."""
        return [(-1) ** j * v for j, v in enumerate(self.signed())]


def char_coeffs(A: Matrix) -> CharCoeffs:
    """Faddeev-LeVerrier recursion; divisions are by 1..k only."""
    k = A.k
    ident = Matrix.identity(k)
    coeffs = [Fraction(1)]  # c_k, c_(k-1), ... of det(T I - A)
    M = Matrix.zero(k)
    for m in range(1, k + 1):
        M = A.matmul(M) + ident.scale(coeffs[-1])
        coeffs.append(-A.matmul(M).trace() / m)
    return CharCoeffs(tuple((-1) ** j * coeffs[j] for j in range(1, k + 1)))


def cayley_hamilton_residual(A: Matrix, cc: CharCoeffs | None = None) -> Matrix:
    """A^k - s_1 A^(k-1) + ... + (-1)^k s_k I, which should be zero."""
    cc = cc or char_coeffs(A)
    total = Matrix.zero(A.k)
    power = Matrix.identity(A.k)
    coeffs = cc.poly_coeffs()  # T^k first
    for c in reversed(coeffs):
        total = total + power.scale(c)
        power = power.matmul(A)
    return total


def _minor(A: Matrix, i: int, j: int) -> Matrix:
    return Matrix([[x for c, x in enumerate(r) if c != j] for r_i, r in enumerate(A.rows) if r_i != i])


def adjugate(A: Matrix) -> Matrix:
    """Transpose of the cofactor matrix."""
    k = A.k
    if k == 1:
        return Matrix([[1]])
    cof = [[(-1) ** (i + j) * determinant(_minor(A, i, j)) for j in range(k)] for i in range(k)]
    return Matrix(cof).transpose()


def companion3(x: Scalar, y: Scalar, z: Scalar) -> Matrix:
    """3x3 matrix with characteristic roots x, y, z, in the layout whose
    (1, 2) entry of the n-th power is h_(n-1)(x, y, z)."""
    x, y, z = as_rational(x), as_rational(y), as_rational(z)
    return Matrix([[x + y + z, 1, 0], [-(x * y + x * z + y * z), 0, 1], [x * y * z, 0, 0]])


@dataclass(frozen=True)
class PowerDecomposition:
    """A^n = sum_j b[j] A^j."""

    b: tuple[Fraction, ...]
    n: int

    def reconstruct(self, A: Matrix, powers: Sequence[Matrix] | None = None) -> Matrix:
        """Evaluate sum_j b_j A^j; ``powers`` may supply A^0..A^(k-1)."""
        if A.k != len(self.b):
            raise DimensionError(f"decomposition has {len(self.b)} coefficients for a {A.k}x{A.k} matrix")
        if powers is None:
            powers = low_powers(A)
        total = Matrix.zero(A.k)
        for bj, power in zip(self.b, powers):
            total = total + power.scale(bj)
        return total


def low_powers(A: Matrix) -> list[Matrix]:
    """I, A, ..., A^(k-1)."""
    out = [Matrix.identity(A.k)]
    for _ in range(A.k - 1):
        out.append(out[-1].matmul(A))
    return out


def b0_forms(s: Sequence[Scalar], n: int, a: Sequence[Fraction] | None = None) -> tuple[Fraction, Fraction]:
    """The two expressions for b_0: the alternating sum and (-1)^(k-1) s_k a(n-k)."""
    s = [as_rational(v) for v in s]
    k = len(s)
    if a is None:
        a = a_seq(s, n)
    signed = [Fraction(1)] + s
    alternating = sum(((-1) ** m * signed[m] * a[n - m] for m in range(k)), Fraction(0))
    return alternating, (-1) ** (k - 1) * s[-1] * a[n - k]


def thm2_coeffs(s: CharCoeffs | Sequence[Scalar], n: int, a: Sequence[Fraction] | None = None) -> PowerDecomposition:
    """Coefficients b_0..b_(k-1) with A^n = sum_j b_j A^j.

    ``a`` may pass a precomputed a(0..N) with N >= n to avoid recomputing
    the recursion when sweeping n.
    """
    sv = s.s if isinstance(s, CharCoeffs) else tuple(as_rational(v) for v in s)
    k = len(sv)
    if n < k:
        raise ValueError(f"closed form needs n >= k (got n={n}, k={k})")
    if a is None:
        a = a_seq(sv, n)
    signed = (Fraction(1),) + sv
    b = tuple(
        sum(((-1) ** m * signed[m] * a[n - j - m] for m in range(k - j)), Fraction(0)) for j in range(k)
    )
    alt, short = b0_forms(sv, n, a)
    if not (alt == short == b[0]):
        raise ArithmeticError(f"b_0 forms disagree at n={n}: {alt} vs {short}")
    return PowerDecomposition(b, n)


def power_closed_form(A: Matrix, n: int) -> Matrix:
    """A^n through characteristic coefficients and the decomposition."""
    return thm2_coeffs(char_coeffs(A), n).reconstruct(A)


def cor1_a(t: Scalar, s: Scalar, d: Scalar, n: int) -> Fraction:
    """sum_{2i+3j<=n} (-1)^i C(i+j, j) C(n-i-2j, i+j) t^(n-2i-3j) s^i d^j."""
    t, s, d = as_rational(t), as_rational(s), as_rational(d)
    if n < 0:
        return Fraction(0)
    total = Fraction(0)
    for j in range(n // 3 + 1):
        for i in range((n - 3 * j) // 2 + 1):
            total += (
                (-1) ** i * binom(i + j, j) * binom(n - i - 2 * j, i + j)
                * t ** (n - 2 * i - 3 * j) * s**i * d**j
            )
    return total


def cor1_b(t: Scalar, d: Scalar, n: int) -> Fraction:
    """sum_i C(n-i, i) (-1)^i t^(n-2i) d^i."""
    t, d = as_rational(t), as_rational(d)
    if n < 0:
        return Fraction(0)
    return sum(((-1) ** i * binom(n - i, i) * t ** (n - 2 * i) * d**i for i in range(n // 2 + 1)), Fraction(0))


def cor1_power3(A: Matrix, n: int) -> Matrix:
    """A^n = a_(n-1) A + a_(n-2) Adj(A) + (a_n - t a_(n-1)) I for 3x3 A."""
    if A.k != 3:
        raise DimensionError("cor1_power3 needs a 3x3 matrix")
    if n < 3:
        raise ValueError("cor1_power3 needs n >= 3")
    t, s, d = char_coeffs(A).s
    a_n, a_n1, a_n2 = (cor1_a(t, s, d, m) for m in (n, n - 1, n - 2))
    return A.scale(a_n1) + adjugate(A).scale(a_n2) + Matrix.identity(3).scale(a_n - t * a_n1)


def cor1_power2(B: Matrix, n: int) -> Matrix:
    """B^n = b_(n-1) B + (b_n - t b_(n-1)) I for 2x2 B.

    The same b_n read as b_n I + b_(n-1) Adj(B) gets the sign of every
    off-diagonal entry wrong; see :func:`cor1_power2_printed`.
    """
    if B.k != 2:
        raise DimensionError("cor1_power2 needs a 2x2 matrix")
    if n < 2:
        raise ValueError("cor1_power2 needs n >= 2")
    t, d = char_coeffs(B).s
    b_n, b_n1 = cor1_b(t, d, n), cor1_b(t, d, n - 1)
    return B.scale(b_n1) + Matrix.identity(2).scale(b_n - t * b_n1)


def cor1_power2_printed(B: Matrix, n: int) -> Matrix:
    """b_n I + b_(n-1) Adj(B), kept for comparison only."""
    if B.k != 2:
        raise DimensionError("cor1_power2_printed needs a 2x2 matrix")
    t, d = char_coeffs(B).s
    return Matrix.identity(2).scale(cor1_b(t, d, n)) + adjugate(B).scale(cor1_b(t, d, n - 1))


THM3_VARIANTS = ("distinct", "y_eq_x", "all_eq")


def thm3_rhs(x: Scalar, y: Scalar | None, z: Scalar | None, n: int, variant: str = "distinct") -> Fraction:
    """Rational-function forms of h_n(x, y, z), h_n(x, x, z) and h_n(x, x, x)."""
    x = as_rational(x)
    if variant == "distinct":
        y, z = as_rational(y), as_rational(z)
        if x == y or x == z or y == z:
            raise ValueError("distinct variant needs pairwise distinct x, y, z")
        m = n + 1
        num = x * y * (x**m - y**m) - x * z * (x**m - z**m) + y * z * (y**m - z**m)
        return num / ((x - y) * (x - z) * (y - z))
    if variant == "y_eq_x":
        z = as_rational(z)
        if x == z:
            raise ValueError("y_eq_x variant needs x != z")
        num = x ** (n + 2) + n * x ** (n + 1) * (x - z) - 2 * x ** (n + 1) * z + z ** (n + 2)
        return num / (x - z) ** 2
    if variant == "all_eq":
        return Fraction((n + 1) * (n + 2), 2) * x**n
    raise ValueError(f"unknown variant {variant!r}")
