"""Exact scalars: elements of Q(i) with Fraction real and imaginary parts.

No floating point anywhere.  Fraction keeps numerator/denominator coprime and
the denominator positive, so every GQ is automatically in reduced form.
"""
from __future__ import annotations

from fractions import Fraction


class GQ:
    """A Gaussian rational a + b*i with a, b in Q."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rational(q) -> "GQ":
        return GQ(q, 0)

    # -- predicates --------------------------------------------------------

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_rational(self) -> bool:
        return not self.im

    def is_integer(self) -> bool:
        return self.re.denominator == 1 and self.im.denominator == 1

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        return GQ(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        other = _coerce(other)
        return GQ(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return GQ(-self.re, -self.im)

    def __mul__(self, other):
        other = _coerce(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        return GQ(a * c - b * d, a * d + b * c)

    def __truediv__(self, other):
        other = _coerce(other)
        c, d = other.re, other.im
        n = c * c + d * d
        if not n:
            raise ZeroDivisionError("division by zero in Q(i)")
        a, b = self.re, self.im
        return GQ((a * c + b * d) / n, (b * c - a * d) / n)

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return _coerce(other) - self

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def conjugate(self) -> "GQ":
        return GQ(self.re, -self.im)

    def norm(self) -> Fraction:
        """The field norm re^2 + im^2 (a nonnegative rational)."""
        return self.re * self.re + self.im * self.im

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, GQ):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- formatting --------------------------------------------------------

    def __repr__(self):
        if not self.im:
            return f"GQ({self.re})"
        return f"GQ({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i"
        return f"{self.re}{'+' if self.im > 0 else '-'}{abs(self.im)}*i"


ZERO = GQ(0)
ONE = GQ(1)
I = GQ(0, 1)
MINUS_ONE = GQ(-1)
TWO = GQ(2)


def _coerce(x) -> GQ:
    if isinstance(x, GQ):
        return x
    if isinstance(x, (int, Fraction)):
        return GQ(x)
    raise TypeError(f"cannot coerce {type(x).__name__} into Q(i)")


def rational_str(q: Fraction) -> str:
    """Serialize a rational as "p" or "p/q" with positive denominator."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s) -> Fraction:
    """Parse "p/q" (or "p", or an int) into a Fraction."""
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        return Fraction(s)
    raise ValueError(f"not a rational string: {s!r}")


def gq_to_pair(z: GQ):
    return [rational_str(z.re), rational_str(z.im)]


def pair_to_gq(pair) -> GQ:
    re, im = pair
    return GQ(parse_rational(re), parse_rational(im))
