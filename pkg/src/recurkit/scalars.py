"""Exact Gaussian-rational scalars and an arbitrary-precision complex mode.

:class:`ExactScalar` is the field every exact computation in the package runs
over: complex numbers whose real and imaginary parts are rationals.
Internally a value is kept as ``(a + b*i) / d`` with integers ``a, b`` and a
positive integer ``d`` such that ``gcd(a, b, d) == 1``; the ``re`` and ``im``
properties expose the parts as reduced :class:`fractions.Fraction` objects.
A shared denominator keeps every operation on plain integers and makes the
integer kernels in :mod:`recurkit.kernels` directly applicable.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

import mpmath
from mpmath import libmp

from .errors import ZeroInverse

__all__ = [
    "ExactScalar",
    "ApproxScalar",
    "invert",
    "approximate",
    "as_scalar",
    "parse_scalar",
    "ZERO",
    "ONE",
    "I",
]


class ExactScalar:
    """Immutable element of the Gaussian rationals Q(i).

    >>> ExactScalar(Fraction(3, 2)) * ExactScalar(0, 1)
    ExactScalar('0', '3/2')
    """

    __slots__ = ("_a", "_b", "_d", "_hash")

    def __init__(self, re=0, im=0):
        re = _to_fraction(re)
        im = _to_fraction(im)
        d = re.denominator * im.denominator // math.gcd(re.denominator, im.denominator)
        a = re.numerator * (d // re.denominator)
        b = im.numerator * (d // im.denominator)
        self._a, self._b, self._d = a, b, d
        self._hash = None

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> ExactScalar:
        # caller guarantees d > 0 and gcd(a, b, d) == 1
        s = object.__new__(cls)
        s._a, s._b, s._d = a, b, d
        s._hash = None
        return s

    @classmethod
    def from_parts(cls, a: int, b: int, d: int = 1) -> ExactScalar:
        """Build ``(a + b*i) / d`` from integers, normalising."""
        if d == 0:
            raise ZeroInverse("zero denominator")
        if d < 0:
            a, b, d = -a, -b, -d
        if d != 1:
            g = math.gcd(a, b, d)
            if g != 1:
                a, b, d = a // g, b // g, d // g
        return cls._raw(a, b, d)

    # -- accessors ---------------------------------------------------------

    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    @property
    def parts(self) -> tuple[int, int, int]:
        """The normalised triple ``(a, b, d)`` with value ``(a + b*i) / d``."""
        return self._a, self._b, self._d

    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    def is_real(self) -> bool:
        return self._b == 0

    def is_integer(self) -> bool:
        return self._b == 0 and self._d == 1

    def conjugate(self) -> ExactScalar:
        return ExactScalar._raw(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        """Squared modulus ``re**2 + im**2``."""
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    def sort_key(self) -> tuple[Fraction, Fraction]:
        return (self.re, self.im)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a1, b1, d1 = self._a, self._b, self._d
        a2, b2, d2 = o._a, o._b, o._d
        if d1 == d2:
            if d1 == 1:
                return ExactScalar._raw(a1 + a2, b1 + b2, 1)
            return ExactScalar.from_parts(a1 + a2, b1 + b2, d1)
        return ExactScalar.from_parts(a1 * d2 + a2 * d1, b1 * d2 + b2 * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar._raw(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a1, b1, d1 = self._a, self._b, self._d
        a2, b2, d2 = o._a, o._b, o._d
        if b1 == 0 and b2 == 0:
            a, b = a1 * a2, 0
        else:
            a, b = a1 * a2 - b1 * b2, a1 * b2 + a2 * b1
        d = d1 * d2
        if d == 1:
            return ExactScalar._raw(a, b, 1)
        return ExactScalar.from_parts(a, b, d)

    __rmul__ = __mul__

    def inverse(self) -> ExactScalar:
        a, b, d = self._a, self._b, self._d
        n = a * a + b * b
        if n == 0:
            raise ZeroInverse("inverse of zero")
        return ExactScalar.from_parts(d * a, -d * b, n)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        if self._b == 0:
            return ExactScalar._raw(self._a ** n, 0, self._d ** n)
        # (a + bi)^n over Z[i] by squaring, then one normalisation
        ra, rb = 1, 0
        ba, bb = self._a, self._b
        k = n
        while k:
            if k & 1:
                ra, rb = ra * ba - rb * bb, ra * bb + rb * ba
            k >>= 1
            if k:
                ba, bb = ba * ba - bb * bb, 2 * ba * bb
        return ExactScalar.from_parts(ra, rb, self._d ** n)

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._a == o._a and self._b == o._b and self._d == o._d

    def __hash__(self):
        h = self._hash
        if h is None:
            if self._b == 0:
                h = hash(Fraction(self._a, self._d))
            else:
                h = hash((self._a, self._b, self._d))
            self._hash = h
        return h

    def __bool__(self):
        return not self.is_zero()

    # -- conversions -------------------------------------------------------

    def __complex__(self):
        return complex(self._a / self._d, self._b / self._d)

    def __repr__(self):
        return f"ExactScalar({str(self.re)!r}, {str(self.im)!r})"

    def __str__(self):
        re, im = self.re, self.im
        if im == 0:
            return str(re)
        if re == 0:
            return f"{_imag_str(im)}"
        sign = "+" if im > 0 else "-"
        return f"{re}{sign}{_imag_str(abs(im))}"


def _imag_str(x: Fraction) -> str:
    if x == 1:
        return "i"
    if x == -1:
        return "-i"
    return f"{x}*i"


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def _coerce(x):
    if isinstance(x, ExactScalar):
        return x
    if isinstance(x, int):
        return ExactScalar._raw(x, 0, 1)
    if isinstance(x, Fraction):
        return ExactScalar._raw(x.numerator, 0, x.denominator)
    return NotImplemented


def parse_scalar(text: str) -> ExactScalar:
    """Inverse of ``str``: ``"3/2"``, ``"i"``, ``"-2/3*i"``, ``"1-5*i"``."""
    s = text.replace(" ", "")
    if not s.endswith("i"):
        return ExactScalar(s)
    body = s[:-1]
    cut = max(body.rfind("+"), body.rfind("-"))
    re_part, im_part = (body[:cut], body[cut:]) if cut > 0 else ("0", body)
    if im_part.endswith("*"):
        im_part = im_part[:-1]
    if im_part in ("", "+", "-"):
        im_part += "1"
    try:
        return ExactScalar(re_part, im_part)
    except ValueError:
        raise ValueError(f"cannot parse scalar {text!r}") from None


def as_scalar(x) -> ExactScalar:
    """Coerce ints, Fractions, numeric strings and ``(re, im)`` pairs."""
    if isinstance(x, ExactScalar):
        return x
    if isinstance(x, tuple) and len(x) == 2:
        return ExactScalar(x[0], x[1])
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, (int, Fraction)) or isinstance(x, Rational):
        return ExactScalar(x)
    raise TypeError(f"cannot interpret {x!r} as an exact scalar")


ZERO = ExactScalar._raw(0, 0, 1)
ONE = ExactScalar._raw(1, 0, 1)
I = ExactScalar._raw(0, 1, 1)


def invert(s: ExactScalar) -> ExactScalar:
    """Exact multiplicative inverse; raises :class:`ZeroInverse` on zero."""
    return as_scalar(s).inverse()


class ApproxScalar:
    """Complex number with mpmath mantissas at a chosen binary precision.

    Binary operations run at the larger of the two operand precisions.
    """

    __slots__ = ("re", "im", "precision")

    def __init__(self, re, im=0, precision: int = 53):
        if precision < 1:
            raise ValueError("precision must be positive")
        with mpmath.workprec(precision):
            self.re = mpmath.mpf(re)
            self.im = mpmath.mpf(im)
        self.precision = precision

    @classmethod
    def from_mpc(cls, z, precision: int) -> ApproxScalar:
        z = mpmath.mpc(z)
        return cls(z.real, z.imag, precision)

    @property
    def value(self):
        return mpmath.mpc(self.re, self.im)

    def _binop(self, other, op):
        if isinstance(other, ApproxScalar):
            prec = max(self.precision, other.precision)
            ov = other.value
        elif isinstance(other, ExactScalar):
            prec = self.precision
            ov = approximate(other, max(prec, 24)).value
        elif isinstance(other, (int, Fraction, float, complex)):
            prec = self.precision
            ov = other if not isinstance(other, Fraction) else mpmath.mpf(other.numerator) / other.denominator
        else:
            return NotImplemented
        with mpmath.workprec(prec):
            return ApproxScalar.from_mpc(op(self.value, ov), prec)

    def __add__(self, other):
        return self._binop(other, lambda x, y: x + y)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binop(other, lambda x, y: x - y)

    def __rsub__(self, other):
        return self._binop(other, lambda x, y: y - x)

    def __mul__(self, other):
        return self._binop(other, lambda x, y: x * y)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._binop(other, lambda x, y: x / y)

    def __rtruediv__(self, other):
        return self._binop(other, lambda x, y: y / x)

    def __neg__(self):
        return ApproxScalar(-self.re, -self.im, self.precision)

    def __abs__(self):
        with mpmath.workprec(self.precision):
            return mpmath.fabs(self.value)

    def __eq__(self, other):
        if not isinstance(other, ApproxScalar):
            return NotImplemented
        return self.re == other.re and self.im == other.im and self.precision == other.precision

    def __hash__(self):
        return hash((self.re, self.im, self.precision))

    def __repr__(self):
        digits = max(1, int(self.precision * 0.30103))
        return (
            f"ApproxScalar({mpmath.nstr(self.re, digits)}, "
            f"{mpmath.nstr(self.im, digits)}, precision={self.precision})"
        )


def _round_rational(p: int, q: int, bits: int):
    return mpmath.mp.make_mpf(libmp.from_rational(p, q, bits, libmp.round_nearest))


def approximate(s: ExactScalar, bits: int) -> ApproxScalar:
    """Correctly rounded approximation of ``s`` with ``bits`` mantissa bits."""
    if bits < 24:
        raise ValueError("approximate() needs at least 24 bits")
    a, b, d = as_scalar(s).parts
    out = ApproxScalar.__new__(ApproxScalar)
    out.re = _round_rational(a, d, bits)
    out.im = _round_rational(b, d, bits)
    out.precision = bits
    return out
