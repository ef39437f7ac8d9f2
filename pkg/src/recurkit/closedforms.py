"""Closed forms ``u(a) = sum_j p_j(a) * gamma_j**a`` and the ring of sequences."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import mpmath

from .errors import (
    DegreeTooLarge,
    DenominatorMismatch,
    DuplicateRoot,
    RootMismatch,
    RootsDontSplit,
)
from .linalg import solve
from .polynomials import (
    Polynomial,
    RationalFunction,
    _to_gauss,
    expand_root_factors,
    monic_gcd,
    root_multiplicity,
    series_coefficients,
)
from .recurrences import (
    LinearRecurrence,
    RecurrentSequence,
    char_poly,
    recurrence_from_poly,
    terms,
)
from .scalars import ONE, ZERO, ExactScalar, as_scalar

__all__ = [
    "ClosedFormTerm",
    "ExponentialPolynomialSequence",
    "find_roots",
    "verify_roots",
    "power_basis_matrix",
    "solve_power_basis",
    "from_closed_form",
    "to_closed_form",
    "generating_function",
    "partial_fractions",
    "PartialFractionBlock",
    "seq_add",
    "seq_mul",
]


@dataclass(frozen=True)
class ClosedFormTerm:
    gamma: ExactScalar
    t: int
    p: Polynomial

    def __post_init__(self):
        object.__setattr__(self, "gamma", as_scalar(self.gamma))
        if not isinstance(self.p, Polynomial):
            object.__setattr__(self, "p", Polynomial(self.p))
        if self.t < 1:
            raise ValueError("multiplicity t must be positive")
        if self.p.degree >= self.t:
            raise ValueError(f"deg p = {self.p.degree} must be < t = {self.t}")


@dataclass(frozen=True)
class ExponentialPolynomialSequence:
    """Canonical closed form: zero terms dropped, terms sorted by root."""

    terms: tuple

    def __post_init__(self):
        ts = []
        for term in self.terms:
            if not isinstance(term, ClosedFormTerm):
                term = ClosedFormTerm(*term)
            ts.append(term)
        seen = set()
        for term in ts:
            if term.gamma.is_zero():
                raise ValueError("closed-form roots must be nonzero")
            if term.gamma in seen:
                raise DuplicateRoot(f"root {term.gamma} appears twice")
            seen.add(term.gamma)
        ts = sorted((x for x in ts if not x.p.is_zero()), key=lambda x: x.gamma.sort_key())
        object.__setattr__(self, "terms", tuple(ts))

    @property
    def roots(self) -> list:
        return [(x.gamma, x.t) for x in self.terms]

    @property
    def order(self) -> int:
        return sum(x.t for x in self.terms)

    def __call__(self, a: int) -> ExactScalar:
        acc = ZERO
        for x in self.terms:
            acc = acc + x.p(ExactScalar(a)) * x.gamma**a
        return acc


# -- roots over Q(i) -----------------------------------------------------------


def _gauss_round(z) -> tuple:
    return int(mpmath.nint(z.real)), int(mpmath.nint(z.imag))


def _numeric_roots(re: list, im: list, bits: int):
    """Approximate roots of ``sum (re_k + im_k i) z^k`` at ``bits`` precision, or None."""
    with mpmath.workprec(bits):
        coeffs = [mpmath.mpc(a, b) for a, b in zip(reversed(re), reversed(im))]
        try:
            return mpmath.polyroots(coeffs, maxsteps=200 + 20 * len(coeffs), extraprec=bits)
        except mpmath.libmp.NoConvergence:
            return None


def find_roots(p: Polynomial) -> list:
    """All roots of ``p`` in Q(i) with multiplicities; raise if ``p`` does not split.

    The square-free part is scaled to a primitive Z[i] polynomial with
    leading coefficient ``L``.  Any root ``x`` in Q(i) then has ``L*x`` in
    Z[i] (Gauss's lemma in the UFD Z[i]), so each numerical root is rounded
    to the nearest ``n / L`` and confirmed by exact evaluation.  Precision is
    raised until every root confirms or the budget runs out.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return []
    roots = []
    q = p
    k = 0
    while q.coeff(k).is_zero():
        k += 1
    if k:
        roots.append((ZERO, k))
        q = Polynomial(q.coeffs[k:])
    if q.degree > 0:
        s = q.exact_div(monic_gcd(q, q.derivative())) if q.degree > 1 else q
        re, im, _ = _to_gauss(s.coeffs)
        g = math.gcd(*re, *im)
        re = [x // g for x in re]
        im = [x // g for x in im]
        lead = ExactScalar.from_parts(re[-1], im[-1], 1)
        size = max(abs(x) for x in re + im).bit_length() * s.degree
        bits = max(96, 2 * size + 64)
        found = None
        for _ in range(4):
            approx = _numeric_roots(re, im, bits)
            if approx is not None:
                cands = set()
                with mpmath.workprec(bits):
                    L = mpmath.mpc(re[-1], im[-1])
                    for z in approx:
                        nx, ny = _gauss_round(L * z)
                        cands.add(ExactScalar.from_parts(nx, ny, 1) / lead)
                if len(cands) == s.degree and all(s(c).is_zero() for c in cands):
                    found = cands
                    break
            bits *= 2
        if found is None:
            raise RootsDontSplit(f"{p} does not split over Q(i)")
        roots.extend((c, root_multiplicity(q, c)) for c in found)
    return sorted(roots, key=lambda r: r[0].sort_key())


def verify_roots(p: Polynomial, roots: Sequence) -> list:
    """Normalise user-supplied roots and check they reproduce ``p`` exactly."""
    roots = [(as_scalar(g), int(t)) for g, t in roots]
    try:
        expanded = expand_root_factors(roots)
    except DuplicateRoot as exc:
        raise RootMismatch(str(exc)) from exc
    if p.is_zero() or expanded != p.monic():
        raise RootMismatch("supplied roots do not expand to the characteristic polynomial")
    return roots


def _roots_for(p: Polynomial, roots) -> list:
    return find_roots(p) if roots is None else verify_roots(p, roots)


# -- power basis ---------------------------------------------------------------


def power_basis_matrix(roots: Sequence, n: int) -> list:
    """Rows ``a = 0..n-1``, columns ``(j, i)``: ``a**i * gamma_j**a`` (``0**0 = 1``)."""
    rows = []
    for a in range(n):
        row = []
        for gamma, t in roots:
            ga = as_scalar(gamma) ** a
            for i in range(t):
                row.append(ga * (a**i))
        rows.append(row)
    return rows


def solve_power_basis(roots: Sequence, values: Sequence) -> list:
    """Coefficient polynomials ``p_j`` with ``values[a] = sum_j p_j(a) gamma_j**a``."""
    n = sum(t for _, t in roots)
    if len(values) != n:
        raise ValueError(f"need {n} values, got {len(values)}")
    v = solve(power_basis_matrix(roots, n), values) if n else []
    out = []
    k = 0
    for _, t in roots:
        out.append(Polynomial(v[k : k + t]))
        k += t
    return out


# -- conversions ---------------------------------------------------------------


def from_closed_form(eps: ExponentialPolynomialSequence) -> RecurrentSequence:
    """Recurrence with characteristic polynomial ``prod_j (T - gamma_j)**t_j``."""
    p = expand_root_factors(eps.roots)
    rec = recurrence_from_poly(p)
    return RecurrentSequence(rec, tuple(eps(a) for a in range(rec.order)))


def to_closed_form(seq: RecurrentSequence, roots=None) -> ExponentialPolynomialSequence:
    """Solve the change of basis from ``u(0..d-1)`` to the closed-form coefficients."""
    p = char_poly(seq.rec)
    roots = _roots_for(p, roots)
    polys = solve_power_basis(roots, list(seq.initial))
    return ExponentialPolynomialSequence(
        tuple(ClosedFormTerm(g, t, q) for (g, t), q in zip(roots, polys))
    )


def generating_function(seq: RecurrentSequence) -> RationalFunction:
    """``sum_{a >= 0} u(a) z**a`` as a reduced rational function."""
    c = seq.rec.c
    u = seq.initial
    d = seq.order
    num = []
    for j in range(d):
        acc = u[j]
        for i in range(1, j + 1):
            acc = acc - c[i - 1] * u[j - i]
        num.append(acc)
    den = [ONE] + [-ci for ci in c]
    return RationalFunction(Polynomial(num), Polynomial(den))


@dataclass(frozen=True)
class PartialFractionBlock:
    """``q[i]`` is the coefficient of ``1 / (1 - gamma z)**(i + 1)``."""

    gamma: ExactScalar
    q: tuple


def _one_minus(gamma: ExactScalar) -> Polynomial:
    return Polynomial([ONE, -gamma])


def partial_fractions(rf: RationalFunction, den_roots: Sequence) -> list:
    """Decompose ``rf`` over the factors ``(1 - gamma_j z)**t_j``."""
    den_roots = [(as_scalar(g), int(t)) for g, t in den_roots]
    if any(g.is_zero() for g, _ in den_roots):
        raise DenominatorMismatch("gamma = 0 gives no factor (1 - gamma z)")
    expected = Polynomial([1])
    for g, t in den_roots:
        expected = expected * _one_minus(g) ** t
    if rf.den != expected:
        raise DenominatorMismatch(f"denominator {rf.den} != {expected}")
    if rf.num.degree >= rf.den.degree:
        raise DegreeTooLarge("numerator degree must be below denominator degree")
    blocks = []
    cofactors = []
    for j, (g, t) in enumerate(den_roots):
        h = Polynomial([1])
        for k, (g2, t2) in enumerate(den_roots):
            if k != j:
                h = h * _one_minus(g2) ** t2
        cofactors.append(h)
        # substitute z = (1 - w) / g and expand N / H in w around w = 0
        z_of_w = Polynomial([g.inverse(), -g.inverse()])
        s = series_coefficients(RationalFunction(rf.num.compose(z_of_w), h.compose(z_of_w)), t)
        blocks.append(PartialFractionBlock(g, tuple(s[t - 1 - i] for i in range(t))))
    # clear denominators and compare numerators exactly
    total = Polynomial()
    for (g, t), h, blk in zip(den_roots, cofactors, blocks):
        for i, q in enumerate(blk.q):
            total = total + _one_minus(g) ** (t - 1 - i) * h * q
    if total != rf.num:
        raise ArithmeticError("partial fraction recombination failed")
    return blocks


# -- ring operations -----------------------------------------------------------


def seq_add(s1: RecurrentSequence, s2: RecurrentSequence) -> RecurrentSequence:
    """Termwise sum, annihilated by ``P1 * P2 / gcd(P1, P2)``."""
    p1, p2 = char_poly(s1.rec), char_poly(s2.rec)
    p = (p1 * p2).exact_div(monic_gcd(p1, p2))
    rec = recurrence_from_poly(p)
    n = rec.order
    a, b = terms(s1, 0, n - 1), terms(s2, 0, n - 1)
    return RecurrentSequence(rec, tuple(x + y for x, y in zip(a, b)))


def product_roots(roots1: Sequence, roots2: Sequence) -> list:
    """Roots ``gamma * gamma'`` with exponent ``t + t' - 1``; collisions keep the max."""
    merged: dict = {}
    for g1, t1 in roots1:
        for g2, t2 in roots2:
            key = as_scalar(g1) * as_scalar(g2)
            merged[key] = max(merged.get(key, 0), t1 + t2 - 1)
    return sorted(merged.items(), key=lambda r: r[0].sort_key())


def seq_mul(
    s1: RecurrentSequence, s2: RecurrentSequence, roots1=None, roots2=None
) -> RecurrentSequence:
    """Termwise product with characteristic polynomial built from root products."""
    r1 = _roots_for(char_poly(s1.rec), roots1)
    r2 = _roots_for(char_poly(s2.rec), roots2)
    rec = recurrence_from_poly(expand_root_factors(product_roots(r1, r2)))
    n = rec.order
    a, b = terms(s1, 0, n - 1), terms(s2, 0, n - 1)
    return RecurrentSequence(rec, tuple(x * y for x, y in zip(a, b)))
