"""Sparse multivariate polynomials over the rationals.

A polynomial in k variables is a mapping from exponent tuples to nonzero
Fraction coefficients. Terms are kept in graded lexicographic order, which
fixes both equality and the text form, e.g. ``3*x1^2*x2 - 1/2*x3``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .exactnum import Scalar, as_rational, binom, format_rational

DEFAULT_TERM_BUDGET = 10**6

Monomial = tuple[int, ...]


class PolyBudgetExceeded(RuntimeError):
    pass


def _grlex_key(mono: Monomial):
    return (sum(mono), mono)


class MPoly:
    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, Scalar] | None = None):
        if nvars < 0:
            raise ValueError("negative variable count")
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != nvars:
                raise ValueError(f"monomial {mono} does not have {nvars} exponents")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            c = as_rational(coeff)
            if c:
                clean[mono] = clean.get(mono, Fraction(0)) + c
                if not clean[mono]:
                    del clean[mono]
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MPoly is immutable")

    # construction helpers
    @classmethod
    def constant(cls, nvars: int, value: Scalar) -> "MPoly":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MPoly":
        """The variable x_{index+1} (``index`` is zero-based)."""
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for {nvars} variables")
        mono = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, {mono: 1})

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def __len__(self):
        return len(self._terms)

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    # arithmetic
    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        return MPoly.constant(self.nvars, as_rational(other))

    def __add__(self, other):
        o = self._coerce(other)
        out = dict(self._terms)
        for mono, c in o._terms.items():
            out[mono] = out.get(mono, 0) + c
        return MPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def mul(self, other, budget: int = DEFAULT_TERM_BUDGET) -> "MPoly":
        o = self._coerce(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in o._terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                out[mono] = out.get(mono, 0) + c1 * c2
            if len(out) > budget:
                raise PolyBudgetExceeded(f"product exceeds {budget} terms")
        return MPoly(self.nvars, out)

    def __mul__(self, other):
        return self.mul(other)

    __rmul__ = __mul__

    def scale(self, factor: Scalar) -> "MPoly":
        f = as_rational(factor)
        return MPoly(self.nvars, {m: c * f for m, c in self._terms.items()})

    def pow(self, exponent: int, budget: int = DEFAULT_TERM_BUDGET) -> "MPoly":
        if exponent < 0:
            raise ValueError("negative polynomial exponent")
        result = MPoly.constant(self.nvars, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result.mul(base, budget)
            exponent >>= 1
            if exponent:
                base = base.mul(base, budget)
        return result

    def __pow__(self, exponent: int):
        return self.pow(exponent)

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == MPoly.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    def __call__(self, *point):
        return poly_eval(self, point)

    def permute(self, perm: Sequence[int]) -> "MPoly":
        """Substitute x_i -> x_{perm[i]} (zero-based)."""
        if sorted(perm) != list(range(self.nvars)):
            raise ValueError(f"{perm} is not a permutation of {self.nvars} variables")
        out = {}
        for mono, c in self._terms.items():
            new = [0] * self.nvars
            for i, e in enumerate(mono):
                new[perm[i]] += e
            out[tuple(new)] = c
        return MPoly(self.nvars, out)

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for mono, c in self.sorted_terms():
            factors = [
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(mono) if e
            ]
            mag = abs(c)
            if not factors:
                body = format_rational(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = format_rational(mag) + "*" + "*".join(factors)
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append(("- " if c < 0 else "+ ") + body)
        return " ".join(pieces)

    def __repr__(self):
        return f"MPoly({self.nvars}, {str(self)!r})"


def poly_eval(p: MPoly, point: Sequence[Scalar]) -> Fraction:
    if len(point) != p.nvars:
        raise ValueError(f"point has {len(point)} coordinates, polynomial has {p.nvars} variables")
    vals = [as_rational(v) for v in point]
    # cache powers per variable; monomial exponents repeat across terms
    cache: list[dict[int, Fraction]] = [{} for _ in vals]
    total = Fraction(0)
    for mono, c in p._terms.items():
        term = c
        for i, e in enumerate(mono):
            if e:
                pw = cache[i].get(e)
                if pw is None:
                    pw = cache[i][e] = vals[i] ** e
                term *= pw
        total += term
    return total


def elem_sym(k: int, j: int) -> MPoly:
    """Elementary symmetric polynomial e_j in k variables."""
    if not 0 <= j <= k:
        raise ValueError(f"elementary symmetric index {j} outside [0, {k}]")
    terms = {}
    for idx in combinations(range(k), j):
        terms[tuple(1 if i in idx else 0 for i in range(k))] = 1
    return MPoly(k, terms)


def compositions(n: int, k: int) -> Iterable[tuple[int, ...]]:
    """All k-tuples of nonnegative integers summing to n, in lex order."""
    if k == 0:
        if n == 0:
            yield ()
        return
    if k == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


def complete_homogeneous(k: int, n: int, budget: int = DEFAULT_TERM_BUDGET) -> MPoly:
    """h_n in k variables: every degree-n monomial with coefficient 1."""
    count = binom(n + k - 1, k - 1) if k else int(n == 0)
    if count > budget:
        raise PolyBudgetExceeded(f"h_{n} in {k} variables has {count} terms")
    return MPoly(k, {c: 1 for c in compositions(n, k)})
