"""Exponential polynomials ``F(z) = sum_j a_j(z) exp(gamma_j z)``.

The Taylor coefficients ``u(a) = F^(a)(0)`` form an exponential-polynomial
sequence in ``a``, which bounds the vanishing order of a nonzero ``F`` by
``sum_j (deg a_j + 1) - 1``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DuplicateRoot, IdenticallyZero, NonzeroShiftUnsupported
from .interpolation import NodeSystem, build_matrix
from .linalg import determinant
from .polynomials import Polynomial
from .scalars import ONE, ZERO, ExactScalar, as_scalar

__all__ = [
    "ExponentialPolynomialFunction",
    "taylor_coefficient_sequence",
    "vanishing_order",
    "derivative_matrix",
    "derivative_determinant_check",
    "exhaustive_vanishing_orders",
    "SweepResult",
]


def _falling(a: int, i: int) -> int:
    out = 1
    for k in range(i):
        out *= a - k
    return out


@dataclass(frozen=True)
class ExponentialPolynomialFunction:
    """Terms ``(a_j, gamma_j)``; zero polynomials are dropped on construction."""

    terms: tuple

    def __post_init__(self):
        ts = []
        seen = set()
        for a, g in self.terms:
            a = a if isinstance(a, Polynomial) else Polynomial(a)
            g = as_scalar(g)
            if g in seen:
                raise DuplicateRoot(f"exponent {g} repeated")
            seen.add(g)
            if not a.is_zero():
                ts.append((a, g))
        object.__setattr__(self, "terms", tuple(ts))

    @property
    def multiplicities(self) -> list:
        return [a.degree + 1 for a, _ in self.terms]

    @property
    def d(self) -> int:
        return sum(self.multiplicities)

    def is_zero(self) -> bool:
        return not self.terms

    def derivative_parts(self, z0, n: int) -> list:
        """For each term, ``sum_k C(n, k) a_j^(k)(z0) gamma_j**(n-k)``.

        ``F^(n)(z0)`` is the sum of these values times ``exp(gamma_j z0)``.
        """
        z0 = as_scalar(z0)
        out = []
        for a, g in self.terms:
            acc = ZERO
            for k in range(min(n, a.degree) + 1):
                acc = acc + a.derivative(k)(z0) * math.comb(n, k) * g ** (n - k)
            out.append((g, acc))
        return out

    def evaluate_approx(self, z):
        import mpmath

        acc = mpmath.mpc(0)
        for a, g in self.terms:
            ga, gb, gd = g.parts
            acc += a.evaluate_approx(z) * mpmath.exp(mpmath.mpc(mpmath.mpf(ga) / gd, mpmath.mpf(gb) / gd) * z)
        return acc


def taylor_coefficient_sequence(F: ExponentialPolynomialFunction, z0, count: int) -> list:
    """Derivatives ``F^(a)(z0)`` for ``a = 0..count-1`` (exact, ``z0 = 0`` only)."""
    if count < 1:
        raise ValueError("count must be positive")
    if not as_scalar(z0).is_zero():
        raise NonzeroShiftUnsupported("exact Taylor data only at z0 = 0")
    out = []
    for a in range(count):
        acc = ZERO
        for poly, g in F.terms:
            for i, aij in enumerate(poly.coeffs):
                if aij.is_zero() or a < i:
                    continue
                if g.is_zero():
                    if a == i:
                        acc = acc + aij * math.factorial(i)
                    continue
                acc = acc + aij * _falling(a, i) * g ** (a - i)
        out.append(acc)
    return out


def vanishing_order(F: ExponentialPolynomialFunction, z0=0, cap: int | None = None) -> int:
    """Order of the zero of ``F`` at ``z0``; never exceeds ``d - 1``."""
    if F.is_zero():
        raise IdenticallyZero("F has no nonzero terms")
    d = F.d
    cap = d if cap is None else cap
    if cap < d:
        raise ValueError(f"cap must be at least d = {d}")
    u = taylor_coefficient_sequence(F, z0, cap)
    for a, x in enumerate(u):
        if not x.is_zero():
            if a > d - 1:
                raise AssertionError(f"vanishing order {a} exceeds d - 1 = {d - 1}")
            return a
    raise AssertionError(f"u(0..{cap - 1}) vanish for nonzero F; the bound d - 1 = {d - 1} is violated")


def derivative_matrix(system: Sequence) -> list:
    """Rows ``a = 0..d-1``, columns ``(j, i)``: ``(d/dz)^a (z^i e^{gamma_j z})`` at 0."""
    system = [(as_scalar(g), int(t)) for g, t in system]
    d = sum(t for _, t in system)
    rows = []
    for a in range(d):
        row = []
        for g, t in system:
            for i in range(t):
                if a < i:
                    row.append(ZERO)
                elif g.is_zero():
                    row.append(ExactScalar(math.factorial(i)) if a == i else ZERO)
                else:
                    row.append(g ** (a - i) * _falling(a, i))
        rows.append(row)
    return rows


def derivative_determinant_check(system: Sequence) -> bool:
    """Whether the derivative matrix is nonsingular, cross-checked with ``det A``.

    The derivative matrix is the transpose of the confluent Vandermonde matrix
    with column ``(j, i)`` scaled by ``i!``.
    """
    nodes = NodeSystem(tuple(system))
    det = determinant(derivative_matrix(nodes.nodes))
    scale = ONE
    for _, t in nodes.nodes:
        for i in range(t):
            scale = scale * math.factorial(i)
    expected = determinant(build_matrix(nodes)) * scale
    if det != expected:
        raise ArithmeticError(f"derivative determinant {det} != {expected}")
    return not det.is_zero()


@dataclass
class SweepResult:
    structure: tuple
    cases: int
    max_order: int
    violations: int
    histogram: dict


def _block_grid(t: int, values: Sequence[int]) -> np.ndarray:
    # all coefficient vectors (a_0..a_{t-1}) with a_{t-1} != 0
    lead = [v for v in values if v != 0]
    rows = list(itertools.product(values, repeat=t - 1))
    grid = np.array([r + (x,) for r in rows for x in lead], dtype=np.int64)
    return grid.reshape(-1, t)


def exhaustive_vanishing_orders(
    structure: Sequence, values: Iterable[int] = range(-3, 4), chunk: int = 1 << 18
) -> SweepResult:
    """Vanishing orders at 0 for every integer coefficient choice.

    ``structure`` lists ``(gamma_j, t_j)`` with integer exponents; each
    ``a_j`` ranges over polynomials of exact degree ``t_j - 1`` with
    coefficients in ``values``.  Orders come from ``M @ v`` with ``M`` the
    exact derivative matrix, which is what :func:`taylor_coefficient_sequence`
    computes term by term.
    """
    values = list(values)
    structure = tuple((int(g), int(t)) for g, t in structure)
    d = sum(t for _, t in structure)
    M = np.array(
        [[int(x.re) for x in row] for row in derivative_matrix(structure)], dtype=np.int64
    )
    blocks = [_block_grid(t, values) for _, t in structure]
    sizes = [len(b) for b in blocks]
    total = math.prod(sizes)
    hist: dict = {}
    violations = 0
    max_order = -1
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk))
        parts = []
        for b, size in zip(reversed(blocks), reversed(sizes)):
            parts.append(b[idx % size])
            idx = idx // size
        V = np.concatenate(parts[::-1], axis=1)
        U = V @ M.T
        nz = U != 0
        has = nz.any(axis=1)
        violations += int((~has).sum())
        orders = nz.argmax(axis=1)[has]
        if orders.size:
            max_order = max(max_order, int(orders.max()))
            for k, n in zip(*np.unique(orders, return_counts=True)):
                hist[int(k)] = hist.get(int(k), 0) + int(n)
    if max_order > d - 1:
        violations += 1
    return SweepResult(structure, total, max_order, violations, hist)
