"""Exact complex-rational arithmetic.

Every weight, partition function, and correlation value in this package is a
``Scalar``: a complex number with rational real and imaginary parts.  All
arithmetic is exact; identities asserted elsewhere are exact equalities of
these values, never floating-point comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r}: {exc}") from None


def format_rational(value: Fraction) -> str:
    """Canonical ``"p/q"`` rendering (denominator always written)."""
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Scalar:
    """Exact complex number with rational components."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    @staticmethod
    def of(re, im=0) -> Scalar:
        return Scalar(Fraction(re), Fraction(im))

    def __add__(self, other: Scalar) -> Scalar:
        return Scalar(self.re + other.re, self.im + other.im)

    def __sub__(self, other: Scalar) -> Scalar:
        return Scalar(self.re - other.re, self.im - other.im)

    def __neg__(self) -> Scalar:
        return Scalar(-self.re, -self.im)

    def __mul__(self, other: Scalar) -> Scalar:
        if self.im == 0 and other.im == 0:
            return Scalar(self.re * other.re)
        return Scalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __truediv__(self, other: Scalar) -> Scalar:
        if other.is_zero():
            raise ZeroDivisionError("Scalar division by zero")
        if self.im == 0 and other.im == 0:
            return Scalar(self.re / other.re)
        d = other.re * other.re + other.im * other.im
        return Scalar(
            (self.re * other.re + self.im * other.im) / d,
            (self.im * other.re - self.re * other.im) / d,
        )

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def abs2(self) -> Fraction:
        """|z|^2 as an exact rational (used to compare magnitudes exactly)."""
        return self.re * self.re + self.im * self.im

    def __str__(self) -> str:
        if self.im == 0:
            return format_rational(self.re)
        return f"{format_rational(self.re)}+{format_rational(self.im)}i"

    def to_float(self) -> complex:
        return complex(self.re, self.im)


ZERO = Scalar()
ONE = Scalar(Fraction(1))
MINUS_ONE = Scalar(Fraction(-1))


def scalar_sum(values) -> Scalar:
    total = ZERO
    for v in values:
        total = total + v
    return total


def parse_scalar(text: str) -> Scalar:
    """Inverse of ``str(Scalar)``: ``"p/q"`` or ``"p/q+r/si"``."""
    text = text.strip()
    if text.endswith("i"):
        body = text[:-1]
        # split at the sign introducing the imaginary part (skip position 0)
        for pos in range(len(body) - 1, 0, -1):
            if body[pos] in "+-" and body[pos - 1] not in "/+-":
                re_part, im_part = body[:pos], body[pos:]
                if im_part in ("+", "-"):
                    im_part += "1"
                return Scalar(parse_rational(re_part), parse_rational(im_part))
        raise ParseError(f"bad scalar {text!r}")
    return Scalar(parse_rational(text))
