"""Exact scalars: rationals, Gaussian rationals and the deformation parameter.

Rationals are :class:`fractions.Fraction` (always reduced, positive
denominator).  :class:`GaussianRational` pairs two of them.  A
:class:`QParameter` fixes a rational ``s`` in (0, 1) and sets ``q = s**2``,
so every half-integer power of ``q`` is an integer power of ``s``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

__all__ = [
    "Fraction",
    "GaussianRational",
    "QParameter",
    "I",
    "ONE",
    "ZERO",
    "as_scalar",
    "format_rational",
    "parse_rational",
    "parse_half_integer",
]


def format_rational(x) -> str:
    """Render a rational as ``"p/q"`` (the denominator is always written)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise ValueError("empty rational")
    try:
        if "/" in text:
            p, q = text.split("/")
            value = Fraction(int(p), int(q))
        else:
            value = Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed rational {text!r}") from exc
    return value


def parse_half_integer(text) -> Fraction:
    """Parse ``k/2`` (or an integer) and insist the value is a half-integer."""
    value = parse_rational(text) if isinstance(text, str) else Fraction(text)
    if (2 * value).denominator != 1:
        raise ValueError(f"{text!r} is not a half-integer")
    return value


def _frac(x) -> Fraction:
    if type(x) is Fraction:
        return x
    return Fraction(x)


class GaussianRational:
    """An element ``re + i*im`` of Q(i), immutable and hashable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            re, im = re.re, re.im + _frac(im)
        self.re = _frac(re)
        self.im = _frac(im)

    @classmethod
    def _new(cls, re: Fraction, im: Fraction) -> "GaussianRational":
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    # -- serialisation ---------------------------------------------------
    def __str__(self):
        return f"{format_rational(self.re)}|{format_rational(self.im)}"

    def __repr__(self):
        if not self.im:
            return f"GaussianRational({self.re})"
        return f"GaussianRational({self.re}, {self.im})"

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        if "|" in text:
            re, im = text.split("|")
            return cls(parse_rational(re), parse_rational(im))
        return cls(parse_rational(text))

    # -- predicates ------------------------------------------------------
    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return not self.im

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, _RationalABC)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # ordering only makes sense for real values; used for positivity tests
    def _real_or_raise(self) -> Fraction:
        if self.im:
            raise ValueError(f"{self!r} is not real")
        return self.re

    def __lt__(self, other):
        return self._real_or_raise() < as_scalar(other)._real_or_raise()

    def __le__(self, other):
        return self._real_or_raise() <= as_scalar(other)._real_or_raise()

    def __gt__(self, other):
        return self._real_or_raise() > as_scalar(other)._real_or_raise()

    def __ge__(self, other):
        return self._real_or_raise() >= as_scalar(other)._real_or_raise()

    # -- arithmetic ------------------------------------------------------
    def conjugate(self) -> "GaussianRational":
        return GaussianRational._new(self.re, -self.im)

    def norm2(self) -> Fraction:
        """``|z|**2``, a nonnegative rational."""
        return self.re * self.re + self.im * self.im

    def __neg__(self):
        return GaussianRational._new(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        if type(other) is GaussianRational:
            return GaussianRational._new(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, _RationalABC)):
            return GaussianRational._new(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is GaussianRational:
            return GaussianRational._new(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, _RationalABC)):
            return GaussianRational._new(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, _RationalABC)):
            return GaussianRational._new(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if type(other) is GaussianRational:
            a, b, c, d = self.re, self.im, other.re, other.im
            if not b:
                if not d:
                    return GaussianRational._new(a * c, b)
                return GaussianRational._new(a * c, a * d)
            if not d:
                return GaussianRational._new(a * c, b * c)
            return GaussianRational._new(a * c - b * d, a * d + b * c)
        if isinstance(other, (int, _RationalABC)):
            return GaussianRational._new(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, _RationalABC)):
            if not other:
                raise ZeroDivisionError("division by zero scalar")
            other = _frac(other)
            return GaussianRational._new(self.re / other, self.im / other)
        if type(other) is not GaussianRational:
            return NotImplemented
        if not other.im:
            if not other.re:
                raise ZeroDivisionError("division by zero scalar")
            return GaussianRational._new(self.re / other.re, self.im / other.re)
        n = other.norm2()
        c, d = other.re, other.im
        a, b = self.re, self.im
        return GaussianRational._new((a * c + b * d) / n, (b * c - a * d) / n)

    def __rtruediv__(self, other):
        if isinstance(other, (int, _RationalABC)):
            return GaussianRational._new(_frac(other), Fraction(0)) / self
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("only integer powers are exact")
        if n < 0:
            return ONE / (self ** -n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result


ZERO = GaussianRational._new(Fraction(0), Fraction(0))
ONE = GaussianRational._new(Fraction(1), Fraction(0))
I = GaussianRational._new(Fraction(0), Fraction(1))


def as_scalar(x) -> GaussianRational:
    if type(x) is GaussianRational:
        return x
    if isinstance(x, complex):
        raise TypeError("floating-point complex values are not exact")
    if isinstance(x, float):
        raise TypeError("floating-point values are not exact")
    return GaussianRational(x)


@dataclass(frozen=True)
class QParameter:
    """The deformation parameter, given by ``s`` with ``q = s**2``."""

    s: Fraction

    def __post_init__(self):
        s = Fraction(self.s)
        object.__setattr__(self, "s", s)
        if not 0 < s < 1:
            raise ValueError(f"s must lie in (0, 1), got {s}")

    @classmethod
    def parse(cls, text: str) -> "QParameter":
        return cls(parse_rational(text))

    @property
    def q(self) -> Fraction:
        return self.s * self.s

    def spow(self, n: int) -> Fraction:
        """``s**n``, i.e. ``q**(n/2)``."""
        return self.s ** n

    def qpow(self, z) -> Fraction:
        """``q**z`` for a half-integer ``z``; anything else is rejected."""
        twice = Fraction(z) * 2
        if twice.denominator != 1:
            raise ValueError(f"q**{z} is not rational for rational s")
        return self.s ** int(twice)

    def __str__(self):
        return format_rational(self.s)
