"""Exact scalars: rationals, the quadratic field Q(sqrt m), and counting helpers.

Rationals are ``fractions.Fraction`` (always gcd-reduced, positive
denominator), integers are Python ``int``. ``QuadRat`` adds just enough of a
quadratic extension to evaluate expressions such as (1 + sqrt 3)^n exactly.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Union

Rational = Fraction
Scalar = Union[int, Fraction]


class ExactArithmeticError(ArithmeticError):
    """Base class for errors raised by exact arithmetic."""


class ExactZeroDivision(ExactArithmeticError, ZeroDivisionError):
    """Division by an exact zero (or a zero-norm quadratic element)."""


class RadicandMismatch(ExactArithmeticError, ValueError):
    pass


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction or rational string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise ValueError("empty rational string")
    num, sep, den = text.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"malformed rational {text!r}") from None
    if q == 0:
        raise ExactZeroDivision(f"zero denominator in {text!r}")
    return Fraction(p, q)


def format_rational(value: Scalar) -> str:
    """Render as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rat_pow(base: Scalar, exponent: int) -> Fraction:
    """Exact integer power with the convention 0**0 == 1."""
    base = as_rational(base)
    if exponent < 0 and base == 0:
        raise ExactZeroDivision("zero raised to a negative power")
    return base**exponent


def rat_arith(op: str, lhs: Scalar, rhs: Scalar | None = None) -> Fraction:
    """Dispatch one of add, sub, mul, div, neg, pow on exact rationals."""
    a = as_rational(lhs)
    if op == "neg":
        return -a
    if rhs is None:
        raise TypeError(f"{op} needs two operands")
    if op == "pow":
        if isinstance(rhs, Fraction):
            if rhs.denominator != 1:
                raise ValueError("pow needs an integer exponent")
            rhs = rhs.numerator
        return rat_pow(a, int(rhs))
    b = as_rational(rhs)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise ExactZeroDivision(f"{format_rational(a)} / 0")
        return a / b
    raise ValueError(f"unknown rational operation {op!r}")


def binom(n: int, r: int) -> int:
    """Binomial coefficient, zero outside 0 <= r <= n."""
    if n < 0 or r < 0 or r > n:
        return 0
    return math.comb(n, r)


def multinomial(parts: Iterable[int]) -> int:
    parts = list(parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    result = math.factorial(sum(parts))
    for p in parts:
        result //= math.factorial(p)
    return result


def _is_squarefree(m: int) -> bool:
    m = abs(m)
    d = 2
    while d * d <= m:
        if m % (d * d) == 0:
            return False
        d += 1
    return True


class QuadRat:
    """An element a + b*sqrt(m) of Q(sqrt m) for a fixed squarefree m.

    Ordinary ints and Fractions mix in freely as elements with b = 0.
    Mixing two different radicands raises ``RadicandMismatch``.
    """

    __slots__ = ("a", "b", "m")

    def __init__(self, a: Scalar = 0, b: Scalar = 0, m: int = 3):
        if m in (0, 1) or not _is_squarefree(m):
            raise ValueError(f"radicand {m} must be squarefree and not a square")
        object.__setattr__(self, "a", as_rational(a))
        object.__setattr__(self, "b", as_rational(b))
        object.__setattr__(self, "m", int(m))

    def __setattr__(self, name, value):
        raise AttributeError("QuadRat is immutable")

    def _coerce(self, other) -> "QuadRat":
        if isinstance(other, QuadRat):
            if other.m != self.m:
                raise RadicandMismatch(f"sqrt({self.m}) vs sqrt({other.m})")
            return other
        return QuadRat(as_rational(other), 0, self.m)

    def __add__(self, other):
        o = self._coerce(other)
        return QuadRat(self.a + o.a, self.b + o.b, self.m)

    __radd__ = __add__

    def __neg__(self):
        return QuadRat(-self.a, -self.b, self.m)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return QuadRat(
            self.a * o.a + self.m * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.m,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "QuadRat":
        return QuadRat(self.a, -self.b, self.m)

    def norm(self) -> Fraction:
        return self.a * self.a - self.m * self.b * self.b

    def inverse(self) -> "QuadRat":
        n = self.norm()
        if n == 0:
            raise ExactZeroDivision(f"{self} has zero norm")
        c = self.conjugate()
        return QuadRat(c.a / n, c.b / n, self.m)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            raise TypeError("QuadRat powers need an integer exponent")
        base = self if exponent >= 0 else self.inverse()
        e = abs(exponent)
        result = QuadRat(1, 0, self.m)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_rational(self) -> bool:
        return self.b == 0

    def __eq__(self, other):
        if isinstance(other, QuadRat):
            return (self.a, self.b, self.m) == (other.a, other.b, other.m)
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.m))

    def __str__(self):
        return f"{format_rational(self.a)}+{format_rational(self.b)}*sqrt({self.m})"

    def __repr__(self):
        return f"QuadRat({self})"

    @classmethod
    def parse(cls, text: str) -> "QuadRat":
        """Inverse of ``str``: ``"a+b*sqrt(m)"``."""
        text = text.replace(" ", "")
        head, sep, tail = text.partition("*sqrt(")
        if not sep or not tail.endswith(")"):
            raise ValueError(f"malformed quadratic element {text!r}")
        m = int(tail[:-1])
        # the separator is the last '+' that is not part of the exponent of b
        cut = head.rfind("+", 1)
        if cut < 0:
            raise ValueError(f"malformed quadratic element {text!r}")
        return cls(parse_rational(head[:cut]), parse_rational(head[cut + 1 :]), m)


def quad_arith(op: str, lhs: QuadRat, rhs=None) -> QuadRat:
    if op == "conj":
        return lhs.conjugate()
    if rhs is None:
        raise TypeError(f"{op} needs two operands")
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    if op == "div":
        return lhs / rhs
    if op == "pow":
        return lhs ** int(rhs)
    raise ValueError(f"unknown quadratic operation {op!r}")
