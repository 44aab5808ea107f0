"""Exact arithmetic in the field Q(i) of Gaussian rationals.

Every coefficient in the library is a :class:`GaussianRational`, a pair of
arbitrary-precision rationals (real and imaginary part).  ``Fraction`` keeps
denominators positive and in lowest terms after every operation, so equality
is literal equality of normal forms and nothing is ever approximate.

The string codec used by the file formats lives here as well:
``"p/q"`` for rationals and ``"p/q+r/s*i"`` for complex values.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Rationalish = Union[int, Fraction]


class GaussianRational:
    """An element re + im*i of Q(i), immutable and hashable."""

    __slots__ = ("re", "im")

    def __init__(self, re: Rationalish = 0, im: Rationalish = 0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "GaussianRational":
        other = as_scalar(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other) -> "GaussianRational":
        other = as_scalar(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> "GaussianRational":
        return as_scalar(other) - self

    def __mul__(self, other) -> "GaussianRational":
        other = as_scalar(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "GaussianRational":
        other = as_scalar(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other) -> "GaussianRational":
        return as_scalar(other) / self

    def __pow__(self, k: int) -> "GaussianRational":
        if k < 0:
            return ONE / (self ** (-k))
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- structure ---------------------------------------------------------

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm2(self) -> Fraction:
        """|z|^2 = z * conj(z), always a nonnegative rational."""
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    # -- comparison / hashing ------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self) -> str:
        return format_scalar(self)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
MINUS_ONE = GaussianRational(-1)
HALF = GaussianRational(Fraction(1, 2))


def as_scalar(value) -> GaussianRational:
    """Coerce an int, Fraction or GaussianRational into Q(i)."""
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")


def _format_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _parse_fraction(text: str) -> Fraction:
    text = text.strip()
    if "/" not in text:
        return Fraction(int(text))
    num, den = text.split("/", 1)
    return Fraction(int(num), int(den))


def format_scalar(z: GaussianRational) -> str:
    """Canonical string form ``p/q+r/s*i`` (pure rationals print as ``p/q``)."""
    if z.im == 0:
        return _format_fraction(z.re)
    return f"{_format_fraction(z.re)}+{_format_fraction(z.im)}*i"


def parse_scalar(text: str) -> GaussianRational:
    """Parse ``p/q`` or ``p/q+r/s*i`` (the imaginary numerator may be signed)."""
    text = text.strip().replace(" ", "")
    if not text:
        raise ValueError("empty scalar string")
    if text.endswith("*i"):
        body = text[:-2]
        # Split real and imaginary addends at the '+' that separates them.
        # The imaginary numerator may itself carry a sign: "0/1+-1/1*i".
        cut = body.find("+", 1)
        if cut < 0:
            raise ValueError(f"malformed complex scalar {text!r}")
        return GaussianRational(_parse_fraction(body[:cut]), _parse_fraction(body[cut + 1 :]))
    return GaussianRational(_parse_fraction(text))
