"""Coefficient sequences of twisted binary forms.

A family is given by ``alpha = (alpha_1..alpha_d)`` and nonzero twists
``eps = (eps_1..eps_d)``.  Its member of index ``a`` is

    F_a(X, Y) = prod_i (X - alpha_i eps_i**a Y) = sum_h (-1)**h U_h(a) X**(d-h) Y**h,

so ``U_h(a)`` is the ``h``-th elementary symmetric function of the
``alpha_i eps_i**a``.  It is a linear recurrence sequence in ``a`` whose
characteristic roots are the distinct ``h``-fold products of the twists.

When all twists equal ``eps0`` the set of products is ``{eps0**h}`` and the
relation is ``U_h(a + 1) = eps0**h U_h(a)``: the ``h``-th power, not ``eps0``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import EqualTwists, ZeroAlpha
from .polynomials import Polynomial, expand_root_factors
from .recurrences import RecurrentSequence, normalize_window, recurrence_from_poly, relation_holds
from .scalars import ONE, ZERO, ExactScalar, as_scalar

__all__ = [
    "TwistedFamily",
    "CoefficientSpec",
    "TwoBlockReport",
    "form_coefficients",
    "coefficient_table",
    "e_set",
    "coefficient_spec",
    "duality_check",
    "two_block_family",
    "uh_sequence",
]

SATISFIES_WINDOW = range(-5, 21)


@dataclass(frozen=True)
class TwistedFamily:
    alpha: tuple
    eps: tuple

    def __post_init__(self):
        alpha = tuple(as_scalar(x) for x in self.alpha)
        eps = tuple(as_scalar(x) for x in self.eps)
        if len(alpha) != len(eps) or not alpha:
            raise ValueError("alpha and eps must be nonempty and of equal length")
        if any(e.is_zero() for e in eps):
            raise ValueError("twists must be nonzero")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "eps", eps)

    @property
    def d(self) -> int:
        return len(self.eps)

    def eps_product(self) -> ExactScalar:
        out = ONE
        for e in self.eps:
            out = out * e
        return out


def _elementary(xs: Sequence[ExactScalar]) -> list:
    """``e_1..e_n`` by expanding ``prod_i (1 + x_i Y)`` one factor at a time."""
    e = [ONE]
    for x in xs:
        e = [ONE] + [e[k] + x * e[k - 1] for k in range(1, len(e))] + [x * e[-1]]
    return e[1:]


def _subset_sums(values: Sequence[ExactScalar], d: int) -> list:
    out = []
    for h in range(1, d + 1):
        acc = ZERO
        for idx in itertools.combinations(range(d), h):
            term = ONE
            for i in idx:
                term = term * values[i]
            acc = acc + term
        out.append(acc)
    return out


def form_coefficients(fam: TwistedFamily, a: int) -> list:
    """``U_1(a)..U_d(a)``, computed twice (symmetric functions and subset sums)."""
    xs = [al * e**a for al, e in zip(fam.alpha, fam.eps)]
    via_form = _elementary(xs)
    via_subsets = _subset_sums(xs, fam.d)
    if via_form != via_subsets:
        raise ArithmeticError(f"coefficient expansions disagree at a = {a}")
    return via_form


def coefficient_table(fam: TwistedFamily, window) -> dict:
    """``{a: [U_1(a)..U_d(a)]}`` over the window."""
    return {a: form_coefficients(fam, a) for a in normalize_window(window)}


def e_set(eps: Sequence, h: int) -> tuple:
    """Distinct ``h``-fold products of the twists, sorted; ``h = 0`` gives ``(1,)``."""
    out = set()
    for idx in itertools.combinations(range(len(eps)), h):
        p = ONE
        for i in idx:
            p = p * eps[i]
        out.add(p)
    return tuple(sorted(out, key=lambda x: x.sort_key()))


def _bound(d: int, h: int, m1: int) -> int:
    return min(math.comb(d, h), math.comb(m1 + h - 1, h), math.comb(m1 + d - h - 1, d - h))


@dataclass(frozen=True)
class CoefficientSpec:
    h: int
    e_set: tuple
    m: int
    charpoly: Polynomial
    bound: int


def coefficient_spec(fam: TwistedFamily, h: int, table: dict | None = None) -> CoefficientSpec:
    """Root set, order, characteristic polynomial and order bound for ``U_h``.

    Checks ``m_h = m_{d-h}``, the bound, and that the directly computed
    ``U_h`` obeys the recurrence on ``-5..20``.  ``table`` may supply
    precomputed values from :func:`coefficient_table`.
    """
    d = fam.d
    if not 1 <= h <= d:
        raise ValueError(f"h must lie in 1..{d}")
    es = e_set(fam.eps, h)
    m = len(es)
    m1 = len(e_set(fam.eps, 1))
    bound = _bound(d, h, m1)
    dual = len(e_set(fam.eps, d - h))
    if m != dual:
        raise AssertionError(f"m_{h} = {m} but m_{d - h} = {dual}")
    if m > bound:
        raise AssertionError(f"m_{h} = {m} exceeds the bound {bound}")
    charpoly = expand_root_factors([(x, 1) for x in es])
    rec = recurrence_from_poly(charpoly)
    lo, hi = SATISFIES_WINDOW.start, SATISFIES_WINDOW.stop - 1 + m
    if table is None or any(a not in table for a in range(lo, hi + 1)):
        table = coefficient_table(fam, (lo, hi))
    if not relation_holds(lambda a: table[a][h - 1], rec.c, SATISFIES_WINDOW):
        raise AssertionError(f"U_{h} does not satisfy its characteristic recurrence")
    return CoefficientSpec(h, es, m, charpoly, bound)


def duality_check(fam: TwistedFamily, h: int, window, table: dict | None = None) -> bool:
    """Bijection ``eta -> eps_1...eps_d / eta`` from ``E_h`` to ``E_{d-h}``, then the dual identity."""
    d = fam.d
    if not 1 <= h <= d - 1:
        raise ValueError(f"h must lie in 1..{d - 1}")
    prod = fam.eps_product()
    image = {prod / x for x in e_set(fam.eps, h)}
    if image != set(e_set(fam.eps, d - h)):
        return False
    if any(x.is_zero() for x in fam.alpha):
        raise ZeroAlpha("the dual identity needs every alpha_i != 0")
    window = normalize_window(window)
    if table is None:
        table = coefficient_table(fam, window)
    subsets = list(itertools.combinations(range(d), d - h))
    for a in window:
        row = table[a] if a in table else form_coefficients(fam, a)
        inv = [(al * e**a).inverse() for al, e in zip(fam.alpha, fam.eps)]
        acc = ZERO
        for idx in subsets:
            term = ONE
            for j in idx:
                term = term * inv[j]
            acc = acc + term
        if row[h - 1] != row[d - 1] * acc:
            return False
    return True


def uh_sequence(fam: TwistedFamily, h: int) -> RecurrentSequence:
    """``U_h`` as a recurrent sequence of order ``m_h``."""
    spec = coefficient_spec(fam, h)
    rec = recurrence_from_poly(spec.charpoly)
    return RecurrentSequence(rec, tuple(form_coefficients(fam, a)[h - 1] for a in range(spec.m)))


@dataclass(frozen=True)
class TwoBlockReport:
    d: int
    l: int
    eps: ExactScalar
    eta: ExactScalar
    e_sets: dict
    charpolys: dict
    bounds: dict
    ud1_product: Polynomial
    A: ExactScalar
    B: ExactScalar
    C: ExactScalar


def _block_products(eps, eta, l: int, d: int, k: int) -> set:
    """``{eps**i eta**(k-i)}`` over the admissible splits of ``k`` between the blocks."""
    return {eps**i * eta ** (k - i) for i in range(0, l + 1) if 0 <= k - i <= d - l}


def two_block_family(eps, eta, l: int, d: int, alpha: Sequence | None = None) -> TwoBlockReport:
    """Twists ``eps`` (``l`` times) then ``eta`` (``d - l`` times)."""
    eps, eta = as_scalar(eps), as_scalar(eta)
    if eps == eta:
        raise EqualTwists("eps and eta must differ")
    if eps.is_zero() or eta.is_zero():
        raise ValueError("twists must be nonzero")
    if d < 2 or not 1 <= l <= d - 1:
        raise ValueError("need d >= 2 and 1 <= l <= d - 1")
    alpha = [ONE] * d if alpha is None else list(alpha)
    fam = TwistedFamily(tuple(alpha), (eps,) * l + (eta,) * (d - l))
    table = coefficient_table(fam, (-5, 12))

    e_sets, charpolys, bounds = {}, {}, {}
    for k in sorted({1, 2, d - 1, d - 2}):
        if not 1 <= k <= d:
            continue
        spec = coefficient_spec(fam, k, table)
        if set(spec.e_set) != _block_products(eps, eta, l, d, k):
            raise AssertionError(f"E_{k} differs from the two-block description")
        e_sets[k] = spec.e_set
        charpolys[k] = spec.charpoly
        bounds[k] = (spec.m, spec.bound)

    prod = fam.eps_product()
    ud1_product = Polynomial([1])
    for e in fam.eps:
        ud1_product = ud1_product * Polynomial.linear(prod / e)
    if ud1_product % charpolys[d - 1] != Polynomial():
        raise AssertionError("the U_{d-1} product is not a multiple of its characteristic polynomial")

    # (T - eps^2)(T - eta^2) = T^2 - A T - B
    A = eps**2 + eta**2
    B = -(eps**2) * eta**2
    u2 = [table[a][1] for a in range(0, 3)]
    C = u2[2] - A * u2[1] - B * u2[0]
    for a in range(-5, 11):
        lhs = table[a + 2][1]
        if lhs != A * table[a + 1][1] + B * table[a][1] + C * (eps * eta) ** a:
            raise AssertionError(f"the two-block relation fails at a = {a}")
    return TwoBlockReport(d, l, eps, eta, e_sets, charpolys, bounds, ud1_product, A, B, C)
