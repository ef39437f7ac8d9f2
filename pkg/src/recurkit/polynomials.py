"""Dense univariate polynomials and rational functions over Q(i)."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from . import kernels
from .errors import BothZero, DuplicateRoot, PoleAtNode, ZeroPolynomial
from .scalars import ONE, ZERO, ExactScalar, as_scalar

__all__ = [
    "Polynomial",
    "RationalFunction",
    "expand_root_factors",
    "monic_gcd",
    "root_multiplicity",
    "taylor_truncate",
    "series_coefficients",
]


def _strip(cs: list) -> tuple:
    n = len(cs)
    while n and cs[n - 1].is_zero():
        n -= 1
    return tuple(cs[:n])


def _to_gauss(coeffs):
    """Common-denominator form: (re ints, im ints, D) with coeff = (re + im*i)/D."""
    D = 1
    for c in coeffs:
        d = c.parts[2]
        if D % d:
            D = D * d // math.gcd(D, d)
    re = []
    im = []
    for c in coeffs:
        a, b, d = c.parts
        m = D // d
        re.append(a * m)
        im.append(b * m)
    return re, im, D


class Polynomial:
    """Polynomial with :class:`ExactScalar` coefficients, ascending degree.

    The zero polynomial has no coefficients and degree ``-1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _strip([as_scalar(c) for c in coeffs])

    @classmethod
    def _from_scalars(cls, cs: list) -> Polynomial:
        p = object.__new__(cls)
        p.coeffs = _strip(cs)
        return p

    @classmethod
    def constant(cls, c) -> Polynomial:
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c=1) -> Polynomial:
        return cls._from_scalars([ZERO] * k + [as_scalar(c)])

    @classmethod
    def x(cls) -> Polynomial:
        return cls._from_scalars([ZERO, ONE])

    @classmethod
    def linear(cls, root) -> Polynomial:
        """``T - root``."""
        return cls._from_scalars([-as_scalar(root), ONE])

    # -- basic properties --------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> ExactScalar:
        return self.coeffs[-1] if self.coeffs else ZERO

    def coeff(self, k: int) -> ExactScalar:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == ONE

    def monic(self) -> Polynomial:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no monic associate")
        lc = self.coeffs[-1]
        if lc == ONE:
            return self
        inv = lc.inverse()
        return Polynomial._from_scalars([c * inv for c in self.coeffs])

    def __call__(self, z):
        acc = ZERO if isinstance(z, ExactScalar) or isinstance(z, (int, Fraction)) else 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def evaluate_approx(self, z):
        """Horner evaluation at an mpmath number (coefficients converted once)."""
        import mpmath

        acc = mpmath.mpc(0)
        for c in reversed(self.coeffs):
            a, b, d = c.parts
            acc = acc * z + mpmath.mpc(mpmath.mpf(a) / d, mpmath.mpf(b) / d)
        return acc

    def derivative(self, k: int = 1) -> Polynomial:
        cs = list(self.coeffs)
        for _ in range(k):
            cs = [c * i for i, c in enumerate(cs) if i > 0]
        return Polynomial._from_scalars(cs)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] = cs[i] + c
        return Polynomial._from_scalars(cs)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._from_scalars([-c for c in self.coeffs])

    def __sub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (ExactScalar, int, Fraction)):
            s = as_scalar(other)
            if s.is_zero():
                return Polynomial()
            return Polynomial._from_scalars([c * s for c in self.coeffs])
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        ar, ai, da = _to_gauss(self.coeffs)
        br, bi, db = _to_gauss(other.coeffs)
        cr, ci = kernels.convolve(ar, ai, br, bi)
        D = da * db
        return Polynomial._from_scalars(
            [ExactScalar.from_parts(r, i, D) for r, i in zip(cr, ci)]
        )

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Polynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        dd = other.degree
        if len(r) - 1 < dd:
            return Polynomial(), self
        inv = other.coeffs[-1].inverse()
        q = [ZERO] * (len(r) - dd)
        oc = other.coeffs
        for k in range(len(r) - 1 - dd, -1, -1):
            f = r[k + dd] * inv
            q[k] = f
            if f.is_zero():
                continue
            for j in range(dd + 1):
                r[k + j] = r[k + j] - f * oc[j]
        return Polynomial._from_scalars(q), Polynomial._from_scalars(r[:dd])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> Polynomial:
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("polynomial division is not exact")
        return q

    def compose(self, inner: Polynomial) -> Polynomial:
        """``self(inner(z))``."""
        acc = Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * inner + Polynomial._from_scalars([c])
        return acc

    def shift(self, c) -> Polynomial:
        """``self(z + c)`` via repeated synthetic division (Taylor shift)."""
        c = as_scalar(c)
        cs = list(self.coeffs)
        n = len(cs)
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                cs[j] = cs[j] + c * cs[j + 1]
        return Polynomial._from_scalars(cs)

    # -- comparison / display ---------------------------------------------

    def __eq__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial([{', '.join(repr(str(c)) for c in self.coeffs)}])"

    def __str__(self):
        return self.to_string()

    def to_string(self, var: str = "z") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            cs = str(c)
            if not c.is_real() and c.re != 0:
                cs = f"({cs})"
            if k == 0:
                terms.append(cs)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                if c == ONE:
                    terms.append(mono)
                elif c == -ONE:
                    terms.append(f"-{mono}")
                else:
                    terms.append(f"{cs}*{mono}")
        out = " + ".join(terms)
        return out.replace("+ -", "- ")


def _coerce_poly(x):
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (ExactScalar, int, Fraction)):
        return Polynomial._from_scalars([as_scalar(x)])
    return NotImplemented


def monic_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic greatest common divisor by the Euclidean algorithm."""
    if p.is_zero() and q.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def expand_root_factors(roots: Sequence) -> Polynomial:
    """Expand ``prod_j (T - gamma_j)**t_j`` for distinct ``gamma_j``."""
    seen = set()
    out = Polynomial([1])
    for gamma, t in roots:
        gamma = as_scalar(gamma)
        if gamma in seen:
            raise DuplicateRoot(f"root {gamma} listed twice")
        if t < 1:
            raise ValueError("multiplicities must be positive")
        seen.add(gamma)
        out = out * Polynomial.linear(gamma) ** t
    return out


def _synthetic_div(cs: Sequence[ExactScalar], gamma: ExactScalar):
    # divide by (T - gamma): returns quotient coeffs and remainder
    n = len(cs)
    q = [ZERO] * (n - 1)
    acc = ZERO
    for k in range(n - 1, 0, -1):
        acc = acc * gamma + cs[k]
        q[k - 1] = acc
    rem = acc * gamma + cs[0]
    return q, rem


def root_multiplicity(p: Polynomial, gamma) -> int:
    """Largest ``t`` with ``(T - gamma)**t`` dividing ``p``."""
    if p.is_zero():
        raise ZeroPolynomial("multiplicity in the zero polynomial is unbounded")
    gamma = as_scalar(gamma)
    cs = list(p.coeffs)
    t = 0
    while len(cs) > 1:
        q, rem = _synthetic_div(cs, gamma)
        if not rem.is_zero():
            break
        cs = q
        t += 1
    return t


class RationalFunction:
    """Quotient ``num / den`` kept in lowest terms.

    Normalisation: the monic gcd is divided out, then the pair is scaled so
    that ``den(0) == 1`` when ``den(0) != 0`` and ``den`` is monic otherwise.
    The zero function is stored as ``0 / 1``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _coerce_poly(num) if not isinstance(num, Polynomial) else num
        den = Polynomial([1]) if den is None else _coerce_poly(den)
        if den is NotImplemented or num is NotImplemented:
            raise TypeError("numerator and denominator must be polynomials")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = Polynomial(), Polynomial([1])
            return
        g = monic_gcd(num, den)
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
        c0 = den.coeff(0)
        scale = (c0 if not c0.is_zero() else den.leading()).inverse()
        self.num = num * scale
        self.den = den * scale

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> RationalFunction:
        return cls(p, Polynomial([1]))

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __call__(self, z):
        d = self.den(z)
        if isinstance(d, ExactScalar) and d.is_zero():
            raise PoleAtNode(f"pole at {z}")
        return self.num(z) / d

    def evaluate_approx(self, z):
        return self.num.evaluate_approx(z) / self.den.evaluate_approx(z)

    def __add__(self, other):
        other = _coerce_rf(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_coerce_rf(other))

    def __rsub__(self, other):
        return _coerce_rf(other) + (-self)

    def __mul__(self, other):
        other = _coerce_rf(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_rf(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            try:
                other = _coerce_rf(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num}) / ({self.den})"


def _coerce_rf(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    p = _coerce_poly(x)
    if p is NotImplemented:
        raise TypeError(f"cannot use {type(x).__name__} as a rational function")
    return RationalFunction(p)


def _series_divide(num: Sequence[ExactScalar], den: Sequence[ExactScalar], n: int) -> list:
    inv = den[0].inverse()
    out = []
    for k in range(n):
        acc = num[k] if k < len(num) else ZERO
        for j in range(1, min(k, len(den) - 1) + 1):
            acc = acc - den[j] * out[k - j]
        out.append(acc * inv)
    return out


def series_coefficients(g, n: int, z0=0) -> list:
    """First ``n`` Taylor coefficients of ``g`` at ``z0`` (exact series division)."""
    g = _coerce_rf(g)
    z0 = as_scalar(z0)
    num, den = g.num, g.den
    if not z0.is_zero():
        num, den = num.shift(z0), den.shift(z0)
    if den.coeff(0).is_zero():
        raise PoleAtNode(f"{z0} is a pole")
    return _series_divide(num.coeffs, den.coeffs, n)


def taylor_truncate(g, z0, t: int) -> Polynomial:
    """Unique polynomial of degree < ``t`` agreeing with ``g`` to order ``t`` at ``z0``."""
    if t < 1:
        raise ValueError("t must be positive")
    z0 = as_scalar(z0)
    coeffs = series_coefficients(g, t, z0)
    local = Polynomial._from_scalars(coeffs)
    if z0.is_zero():
        return local
    return local.shift(-z0)
