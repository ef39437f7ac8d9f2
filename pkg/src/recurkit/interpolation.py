"""Confluent Vandermonde matrices and Hermite interpolation over Q(i).

Nodes are given as pairs ``(gamma_j, t_j)``: the interpolant must match the
derivatives of order ``0..t_j-1`` at ``gamma_j``.  Three independent solvers
are provided and must agree exactly:

* :func:`hermite_interpolate` -- sum of ``h_j * T(p_j / h_j, gamma_j, t_j)``
  where ``h_j`` vanishes to order ``t_k`` at every other node;
* :func:`newton_interpolate` -- confluent divided differences;
* :func:`solve_interpolation` -- direct solve against :func:`build_matrix`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DuplicateRoot
from .linalg import determinant, solve
from .polynomials import Polynomial, RationalFunction, taylor_truncate
from .scalars import ONE, ZERO, ExactScalar, as_scalar

__all__ = [
    "NodeSystem",
    "HermiteData",
    "build_matrix",
    "determinant_formula",
    "vandermonde_determinant",
    "hermite_interpolate",
    "newton_interpolate",
    "newton_coefficients",
    "solve_interpolation",
    "derivative_values",
]


@dataclass(frozen=True)
class NodeSystem:
    nodes: tuple

    def __post_init__(self):
        nodes = tuple((as_scalar(g), int(t)) for g, t in self.nodes)
        seen = set()
        for g, t in nodes:
            if t < 1:
                raise ValueError("multiplicities must be positive")
            if g in seen:
                raise DuplicateRoot(f"node {g} repeated")
            seen.add(g)
        object.__setattr__(self, "nodes", nodes)

    @property
    def d(self) -> int:
        return sum(t for _, t in self.nodes)

    def offsets(self) -> list:
        """``s_j = t_1 + ... + t_{j-1}``."""
        out, s = [], 0
        for _, t in self.nodes:
            out.append(s)
            s += t
        return out

    def expanded(self) -> list:
        """Each node repeated ``t_j`` times."""
        return [g for g, t in self.nodes for _ in range(t)]


@dataclass(frozen=True)
class HermiteData:
    """``values[j][i]`` is the prescribed ``i``-th derivative at node ``j``."""

    system: NodeSystem
    values: tuple

    def __post_init__(self):
        if not isinstance(self.system, NodeSystem):
            object.__setattr__(self, "system", NodeSystem(self.system))
        vals = tuple(tuple(as_scalar(v) for v in row) for row in self.values)
        if len(vals) != len(self.system.nodes):
            raise ValueError("one value list per node required")
        for (g, t), row in zip(self.system.nodes, vals):
            if len(row) != t:
                raise ValueError(f"node {g} needs {t} values, got {len(row)}")
        object.__setattr__(self, "values", vals)


def build_matrix(system: NodeSystem) -> list:
    """Row ``s_j + i``, column ``k``: ``binom(k, i) * gamma_j**(k - i)``."""
    d = system.d
    rows = []
    for g, t in system.nodes:
        powers = [ONE]
        for _ in range(d):
            powers.append(powers[-1] * g)
        for i in range(t):
            rows.append([powers[k - i] * math.comb(k, i) if k >= i else ZERO for k in range(d)])
    return rows


def determinant_formula(system: NodeSystem) -> ExactScalar:
    """``prod_{i < j} (gamma_j - gamma_i)**(t_i t_j)``."""
    out = ONE
    nodes = system.nodes
    for j in range(len(nodes)):
        for i in range(j):
            out = out * (nodes[j][0] - nodes[i][0]) ** (nodes[i][1] * nodes[j][1])
    return out


def vandermonde_determinant(system: NodeSystem) -> ExactScalar:
    """Determinant of :func:`build_matrix` by elimination, checked against the product formula."""
    det = determinant(build_matrix(system))
    expected = determinant_formula(system)
    if det != expected:
        raise ArithmeticError(f"elimination gives {det}, product formula {expected}")
    return det


def _h(system: NodeSystem, j: int) -> Polynomial:
    gj = system.nodes[j][0]
    out = Polynomial([1])
    for k, (gk, tk) in enumerate(system.nodes):
        if k != j:
            inv = (gj - gk).inverse()
            out = out * Polynomial([-gk * inv, inv]) ** tk
    return out


def hermite_interpolate(data: HermiteData) -> Polynomial:
    """Interpolant of degree < d built node by node from truncated Taylor series."""
    f = Polynomial()
    system = data.system
    for j, ((g, t), eta) in enumerate(zip(system.nodes, data.values)):
        h = _h(system, j)
        # p_j(z) = sum_i eta_ij (z - g)**i / i!, written in powers of (z - g)
        local = Polynomial([eta[i] / math.factorial(i) for i in range(t)])
        p = local.shift(-g)
        f = f + h * taylor_truncate(RationalFunction(p, h), g, t)
    return f


def newton_coefficients(nodes: Sequence, derivs: Sequence[Sequence]):
    """Divided-difference coefficients for the confluent node sequence.

    ``nodes`` is the list of distinct nodes and ``derivs[j][i]`` the ``i``-th
    derivative at node ``j``.  Works for any field-like numbers (exact
    scalars or mpmath values).  Returns ``(expanded_nodes, coefficients)``.
    """
    z = []
    owner = []
    for j, row in enumerate(derivs):
        for _ in range(len(row)):
            z.append(nodes[j])
            owner.append(j)
    n = len(z)
    # column 0: f[z_k]; column m: f[z_k, ..., z_{k+m}]
    col = [derivs[owner[k]][0] for k in range(n)]
    coeffs = [col[0]] if n else []
    for m in range(1, n):
        nxt = []
        for k in range(n - m):
            if owner[k] == owner[k + m]:
                nxt.append(derivs[owner[k]][m] / math.factorial(m))
            else:
                nxt.append((col[k + 1] - col[k]) / (z[k + m] - z[k]))
        col = nxt
        coeffs.append(col[0])
    return z, coeffs


def newton_interpolate(data: HermiteData) -> Polynomial:
    """Interpolant in Newton form, expanded to monomials."""
    nodes = [g for g, _ in data.system.nodes]
    z, coeffs = newton_coefficients(nodes, data.values)
    f = Polynomial()
    for k in range(len(coeffs) - 1, -1, -1):
        # Horner on the nested Newton form
        f = f * Polynomial.linear(z[k]) + Polynomial([coeffs[k]])
    return f


def solve_interpolation(data: HermiteData) -> Polynomial:
    """Monomial coefficients from ``A b = (eta_ij / i!)``."""
    rhs = [eta[i] / math.factorial(i) for eta in data.values for i in range(len(eta))]
    if not rhs:
        return Polynomial()
    return Polynomial(solve(build_matrix(data.system), rhs))


def derivative_values(f: Polynomial, system: NodeSystem) -> tuple:
    """``f^(i)(gamma_j)`` for every node and ``i < t_j``."""
    return tuple(
        tuple(f.derivative(i)(g) for i in range(t)) for g, t in system.nodes
    )
