"""
Exact Gaussian rationals: complex numbers whose real and imaginary parts are
`fractions.Fraction` values. Every coefficient in formwell lives here.
"""

from enum import Enum
from fractions import Fraction
from typing import Union

from formwell.core.errors import DivisionByZero

RationalLike = Union[int, Fraction]


class ArithOp(str, Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"


def format_rational(q: Fraction) -> str:
    """Render `q` as "p/q", dropping "/q" when the denominator is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class GaussianRational:
    """
    Immutable a + bi with a, b rational.

    Fractions normalise on construction, so structural equality is value equality.
    """

    __slots__ = ("_re", "_im")

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        if isinstance(re, GaussianRational):
            re, im = re.re, re.im + Fraction(im)
        self._re = Fraction(re)
        self._im = Fraction(im)

    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def im(self) -> Fraction:
        return self._im

    @staticmethod
    def coerce(value: "ScalarLike") -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(value)
        raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")

    def is_zero(self) -> bool:
        return self._re == 0 and self._im == 0

    def is_real(self) -> bool:
        return self._im == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self._re, -self._im)

    def norm2(self) -> Fraction:
        return self._re * self._re + self._im * self._im

    def __add__(self, other: "ScalarLike") -> "GaussianRational":
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self._re + o._re, self._im + o._im)

    __radd__ = __add__

    def __sub__(self, other: "ScalarLike") -> "GaussianRational":
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self._re - o._re, self._im - o._im)

    def __rsub__(self, other: "ScalarLike") -> "GaussianRational":
        return -self + other

    def __mul__(self, other: "ScalarLike") -> "GaussianRational":
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(
            self._re * o._re - self._im * o._im,
            self._re * o._im + self._im * o._re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: "ScalarLike") -> "GaussianRational":
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        denom = o.norm2()
        if denom == 0:
            raise DivisionByZero(f"division of {self} by zero")
        num = self * o.conjugate()
        return GaussianRational(num._re / denom, num._im / denom)

    def __rtruediv__(self, other: "ScalarLike") -> "GaussianRational":
        return GaussianRational.coerce(other) / self

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self._re, -self._im)

    def __pow__(self, exponent: int) -> "GaussianRational":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only non-negative integer powers are exact")
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GaussianRational):
            return self._re == other._re and self._im == other._im
        if isinstance(other, (int, Fraction)):
            return self._im == 0 and self._re == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def to_complex(self) -> complex:
        return complex(float(self._re), float(self._im))

    def __repr__(self) -> str:
        return f"GaussianRational({format_rational(self._re)}, {format_rational(self._im)})"

    def __str__(self) -> str:
        if self._im == 0:
            return format_rational(self._re)
        imag = "i" if abs(self._im) == 1 else f"{format_rational(abs(self._im))}i"
        if self._re == 0:
            return imag if self._im > 0 else f"-{imag}"
        sign = "+" if self._im > 0 else "-"
        return f"{format_rational(self._re)}{sign}{imag}"


ScalarLike = Union[GaussianRational, int, Fraction]

ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)  # noqa: E741
HALF = GaussianRational(Fraction(1, 2))


def gr_arith(a: GaussianRational, b: GaussianRational, op: ArithOp) -> GaussianRational:
    """
    Exact field arithmetic.

    Raises:
        DivisionByZero: when `op` is DIV and `b` is zero.
    """
    op = ArithOp(op)
    if op is ArithOp.ADD:
        return a + b
    if op is ArithOp.SUB:
        return a - b
    if op is ArithOp.MUL:
        return a * b
    return a / b


def gr_conj(a: GaussianRational) -> GaussianRational:
    return a.conjugate()
