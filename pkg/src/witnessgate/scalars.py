"""Exact scalar arithmetic: rationals, Gaussian rationals, real quadratic surds.

All downstream decisions reduce to sign determinations in one of these
three domains, so everything here must be exact; floats appear only in
`to_float` conveniences.
"""
from __future__ import annotations

import math
import re
from enum import IntEnum
from typing import Union

from gmpy2 import mpq, mpz

Rat = mpq
RatLike = Union[int, mpq]


def Q(num, den=None) -> mpq:
    """Construct an exact rational (reduced, positive denominator)."""
    if isinstance(num, str):
        num = num.lstrip("+")
    if den is None:
        return mpq(num)
    return mpq(num, den)


QZERO = Q(0)
QONE = Q(1)


class Sign(IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


def rat_sign(x) -> Sign:
    if x > 0:
        return Sign.POSITIVE
    if x < 0:
        return Sign.NEGATIVE
    return Sign.ZERO


def sign_of(x) -> Sign:
    """Exact sign of a rational or QuadSurd."""
    if isinstance(x, QuadSurd):
        return x.sign()
    return rat_sign(x)


def is_square_rational(x) -> mpq | None:
    """Return the exact nonnegative square root of x if x is a rational square."""
    x = Q(x)
    if x < 0:
        return None
    p, q = mpz(x.numerator), mpz(x.denominator)
    sp, sq = math.isqrt(p), math.isqrt(q)
    if sp * sp == p and sq * sq == q:
        return Q(sp, sq)
    return None


def sqrt_upper_bound(x) -> mpq:
    """A rational upper bound on sqrt(x) for x >= 0 (not tight)."""
    x = Q(x)
    if x < 0:
        raise ValueError("negative radicand")
    p, q = mpz(x.numerator), mpz(x.denominator)
    # sqrt(p/q) = sqrt(p*q)/q <= (isqrt(p*q)+1)/q
    return Q(math.isqrt(p * q) + 1, q)


# ---------------------------------------------------------------------------
# scalar text grammar: `p/q`, `p/q+r/si`, `p/q-r/si`; integers allowed
# ---------------------------------------------------------------------------

_RAT = r"[+-]?\d+(?:/\d+)?"
_GAUSS_RE = re.compile(rf"^(?P<re>{_RAT})(?:(?P<im>[+-]\d+(?:/\d+)?)i)?$")
_PURE_IM_RE = re.compile(rf"^(?P<im>{_RAT})i$")


def parse_rational(text: str) -> mpq:
    """Parse `p/q` or integer shorthand."""
    text = text.strip()
    if not re.fullmatch(_RAT, text):
        raise ValueError(f"not a rational scalar: {text!r}")
    return Q(text)


def format_rational(x) -> str:
    return str(Q(x))


def parse_gauss(text: str):
    """Parse a Gaussian rational in the whitespace-free grammar."""
    text = text.strip().replace(" ", "")
    m = _PURE_IM_RE.match(text)
    if m:
        return GaussRational(QZERO, Q(m.group("im")))
    m = _GAUSS_RE.match(text)
    if m is None:
        raise ValueError(f"not a scalar: {text!r}")
    im = m.group("im")
    return GaussRational(Q(m.group("re")), Q(im) if im is not None else QZERO)


def format_gauss(z: "GaussRational") -> str:
    if z.im == 0:
        return format_rational(z.re)
    im = format_rational(z.im)
    if not im.startswith("-"):
        im = "+" + im
    return f"{format_rational(z.re)}{im}i"


class GaussRational:
    """An element of Q(i): re + im*i with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Q(re))
        object.__setattr__(self, "im", Q(im))

    def __setattr__(self, *a):
        raise AttributeError("GaussRational is immutable")

    @classmethod
    def parse(cls, text: str) -> "GaussRational":
        return parse_gauss(text)

    def __repr__(self):
        return f"GaussRational({self.re!r}, {self.im!r})"

    def __str__(self):
        return format_gauss(self)

    def __eq__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __add__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __sub__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussRational(self.re * other.re - self.im * other.im,
                             self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        n = other.abs2()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * other.conjugate() * GaussRational(Q(1) / n)

    def __rtruediv__(self, other):
        return _as_gauss(other) / self

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def abs2(self) -> mpq:
        """|z|^2, always an exact rational."""
        return self.re * self.re + self.im * self.im

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def real_part(self) -> mpq:
        return self.re

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))


def _as_gauss(x):
    if isinstance(x, GaussRational):
        return x
    if isinstance(x, (int, mpq)):
        return GaussRational(x)
    return NotImplemented


GZERO = GaussRational(0)
GONE = GaussRational(1)
GI = GaussRational(0, 1)


class RadicandMismatch(ValueError):
    """Raised when combining surds over different radicands."""


class QuadSurd:
    """a + b*sqrt(D) with a, b, D rational and D >= 0.

    Perfect-square radicands collapse eagerly to the rational form
    (b = 0, D = 0), so Q embeds canonically.  Two surds combine only when
    their radicands agree or either value is rational.
    """

    __slots__ = ("a", "b", "D")

    def __init__(self, a=0, b=0, D=0):
        a, b, D = Q(a), Q(b), Q(D)
        if D < 0:
            raise ValueError("radicand must be nonnegative")
        if b == 0 or D == 0:
            a, b, D = a, QZERO, QZERO
        else:
            root = is_square_rational(D)
            if root is not None:
                a, b, D = a + b * root, QZERO, QZERO
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "D", D)

    def __setattr__(self, *args):
        raise AttributeError("QuadSurd is immutable")

    @classmethod
    def sqrt(cls, D) -> "QuadSurd":
        return cls(0, 1, D)

    def __repr__(self):
        return f"QuadSurd({self.a!r}, {self.b!r}, {self.D!r})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        return f"{self.a}{'+' if self.b > 0 else '-'}{abs(self.b)}*sqrt({self.D})"

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def rational_value(self) -> mpq:
        if self.b != 0:
            raise ValueError("not a rational value")
        return self.a

    def _common_radicand(self, other: "QuadSurd") -> mpq:
        if self.b == 0:
            return other.D
        if other.b == 0:
            return self.D
        if self.D != other.D:
            raise RadicandMismatch(f"radicands differ: {self.D} vs {other.D}")
        return self.D

    def sign(self) -> Sign:
        """Exact sign of a + b*sqrt(D) by comparing a^2 against b^2 D."""
        a, b, D = self.a, self.b, self.D
        if b == 0:
            return rat_sign(a)
        if a == 0:
            return rat_sign(b)
        if a > 0 and b > 0:
            return Sign.POSITIVE
        if a < 0 and b < 0:
            return Sign.NEGATIVE
        cmp = rat_sign(a * a - b * b * D)
        if cmp == Sign.ZERO:
            return Sign.ZERO
        # a and b have opposite signs; the larger square wins
        if a > 0:
            return Sign.POSITIVE if cmp > 0 else Sign.NEGATIVE
        return Sign.NEGATIVE if cmp > 0 else Sign.POSITIVE

    def __bool__(self):
        return self.sign() != Sign.ZERO

    def __eq__(self, other):
        other = _as_surd(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() == Sign.ZERO

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.D))

    def __lt__(self, other):
        return (self - _as_surd(other)).sign() < 0

    def __le__(self, other):
        return (self - _as_surd(other)).sign() <= 0

    def __gt__(self, other):
        return (self - _as_surd(other)).sign() > 0

    def __ge__(self, other):
        return (self - _as_surd(other)).sign() >= 0

    def __add__(self, other):
        other = _as_surd(other)
        if other is NotImplemented:
            return NotImplemented
        D = self._common_radicand(other)
        return QuadSurd(self.a + other.a, self.b + other.b, D)

    __radd__ = __add__

    def __neg__(self):
        return QuadSurd(-self.a, -self.b, self.D)

    def __sub__(self, other):
        other = _as_surd(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_surd(other)
        if other is NotImplemented:
            return NotImplemented
        D = self._common_radicand(other)
        return QuadSurd(self.a * other.a + self.b * other.b * D,
                        self.a * other.b + self.b * other.a, D)

    __rmul__ = __mul__

    def inverse(self) -> "QuadSurd":
        """(a - b sqrt(D)) / (a^2 - b^2 D); exact for any nonzero value."""
        if self.b == 0:
            if self.a == 0:
                raise ZeroDivisionError("inverse of zero surd")
            return QuadSurd(Q(1) / self.a)
        n = self.a * self.a - self.b * self.b * self.D
        # n = 0 with b != 0 would force sqrt(D) rational, excluded by collapse
        return QuadSurd(self.a / n, -self.b / n, self.D)

    def __truediv__(self, other):
        other = _as_surd(other)
        if other is NotImplemented:
            return NotImplemented
        self._common_radicand(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _as_surd(other) / self

    def __abs__(self):
        return self if self.sign() >= 0 else -self

    def __pow__(self, n: int) -> "QuadSurd":
        if n < 0:
            return self.inverse() ** (-n)
        out = QuadSurd(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def to_float(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(float(self.D))

    def __float__(self):
        return self.to_float()

    def rational_upper_bound(self) -> mpq:
        """A rational u with self <= u."""
        if self.b == 0:
            return self.a
        s = sqrt_upper_bound(self.D)
        return self.a + self.b * s if self.b > 0 else self.a


def _as_surd(x):
    if isinstance(x, QuadSurd):
        return x
    if isinstance(x, (int, mpq)):
        return QuadSurd(x)
    return NotImplemented


def surd_sign(x: QuadSurd) -> Sign:
    return _as_surd(x).sign()


def as_field_scalar(x):
    """Coerce ints to mpq, leave mpq/QuadSurd untouched."""
    if isinstance(x, int):
        return Q(x)
    if isinstance(x, (mpq, QuadSurd)):
        return x
    raise TypeError(f"not a field scalar: {x!r}")


def scalar_to_float(x) -> float:
    if isinstance(x, QuadSurd):
        return x.to_float()
    return float(x)
