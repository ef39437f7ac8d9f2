"""Non-homogeneous form of a recurrence whose characteristic polynomial is ``P = Q R``.

With ``Q = T**m - b_1 T**(m-1) - ... - b_m`` and ``R = prod_j (T - gamma_j)**t_j``
the sequence obeys

    u(a + m) = b_1 u(a + m - 1) + ... + b_m u(a) + sum_j sum_i lambda_ij a**i gamma_j**a,

so it is fixed by ``u(0..m-1)`` together with the ``lambda_ij``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .closedforms import solve_power_basis
from .errors import DuplicateRoot, FactorizationMismatch
from .interpolation import NodeSystem, build_matrix
from .linalg import block_diag, identity
from .polynomials import Polynomial, expand_root_factors
from .recurrences import RecurrentSequence, char_poly, recurrence_from_poly, terms
from .scalars import ONE, ZERO, ExactScalar, as_scalar

__all__ = [
    "NonHomogeneousForm",
    "from_nonhomogeneous",
    "to_nonhomogeneous",
    "transition_matrix",
    "form_terms",
]


@dataclass(frozen=True)
class NonHomogeneousForm:
    """``b`` gives ``Q``; ``forcing`` lists ``(gamma, t, lambdas)``; ``head`` is ``u(0..m-1)``."""

    b: tuple
    forcing: tuple
    head: tuple

    def __post_init__(self):
        b = tuple(as_scalar(x) for x in self.b)
        head = tuple(as_scalar(x) for x in self.head)
        if len(head) != len(b):
            raise ValueError(f"head needs {len(b)} values, got {len(head)}")
        forcing = []
        seen = set()
        for gamma, t, lam in self.forcing:
            gamma, t = as_scalar(gamma), int(t)
            lam = tuple(as_scalar(x) for x in lam)
            if gamma.is_zero():
                raise ValueError("forcing roots must be nonzero")
            if gamma in seen:
                raise DuplicateRoot(f"forcing root {gamma} repeated")
            if t < 1 or len(lam) != t:
                raise ValueError(f"root {gamma} needs t = {t} >= 1 coefficients, got {len(lam)}")
            seen.add(gamma)
            forcing.append((gamma, t, lam))
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "head", head)
        object.__setattr__(self, "forcing", tuple(forcing))

    @property
    def m(self) -> int:
        return len(self.b)

    @property
    def d(self) -> int:
        return self.m + sum(t for _, t, _ in self.forcing)

    def q_poly(self) -> Polynomial:
        m = self.m
        cs = [ZERO] * (m + 1)
        cs[m] = ONE
        for i, bi in enumerate(self.b, start=1):
            cs[m - i] = -bi
        return Polynomial(cs)

    def r_roots(self) -> list:
        return [(g, t) for g, t, _ in self.forcing]

    def forcing_at(self, a: int) -> ExactScalar:
        acc = ZERO
        for gamma, _, lam in self.forcing:
            acc = acc + Polynomial(lam)(ExactScalar(a)) * gamma**a
        return acc


def form_terms(form: NonHomogeneousForm, lo: int, hi: int) -> list:
    """``u(lo..hi)`` by running the non-homogeneous relation itself in both directions."""
    m = form.m
    if hi < lo:
        return []
    vals = dict(enumerate(form.head))
    for a in range(0, hi - m + 1):
        acc = form.forcing_at(a)
        for i, bi in enumerate(form.b, start=1):
            acc = acc + bi * vals[a + m - i]
        vals[a + m] = acc
    if lo < 0:
        if m == 0:
            for a in range(lo, 0):
                vals[a] = form.forcing_at(a)
        else:
            bm = form.b[-1]
            if bm.is_zero():
                raise ValueError("Q(0) = 0: the relation cannot be run backwards")
            for a in range(-1, lo - 1, -1):
                acc = vals[a + m] - form.forcing_at(a)
                for i in range(1, m):
                    acc = acc - form.b[i - 1] * vals[a + m - i]
                vals[a] = acc / bm
    return [vals[a] for a in range(lo, hi + 1)]


def from_nonhomogeneous(form: NonHomogeneousForm) -> RecurrentSequence:
    """Homogeneous sequence with characteristic polynomial ``Q R``."""
    p = form.q_poly() * expand_root_factors(form.r_roots())
    rec = recurrence_from_poly(p)
    return RecurrentSequence(rec, tuple(form_terms(form, 0, rec.order - 1)))


def to_nonhomogeneous(seq: RecurrentSequence, q: Polynomial, r_roots: Sequence) -> NonHomogeneousForm:
    """Split ``seq`` along ``char_poly = Q R``; ``lambda`` comes from the residual sequence."""
    r_roots = [(as_scalar(g), int(t)) for g, t in r_roots]
    try:
        r = expand_root_factors(r_roots)
    except DuplicateRoot as exc:
        raise FactorizationMismatch(str(exc)) from exc
    if q.is_zero() or q.coeff(0).is_zero():
        raise FactorizationMismatch("Q must satisfy Q(0) != 0")
    if q * r != char_poly(seq.rec):
        raise FactorizationMismatch(f"Q R = {q * r} differs from the characteristic polynomial")
    m = q.degree
    b = tuple(-q.coeff(m - i) for i in range(1, m + 1))
    n = sum(t for _, t in r_roots)
    u = terms(seq, 0, m + n - 1)
    resid = []
    for a in range(n):
        acc = u[a + m]
        for i, bi in enumerate(b, start=1):
            acc = acc - bi * u[a + m - i]
        resid.append(acc)
    lams = solve_power_basis(r_roots, resid)
    forcing = tuple(
        (g, t, tuple(lam.coeff(i) for i in range(t))) for (g, t), lam in zip(r_roots, lams)
    )
    return NonHomogeneousForm(b, forcing, tuple(u[:m]))


def transition_matrix(q: Polynomial, r_roots: Sequence) -> list:
    """``I_m`` next to the confluent Vandermonde block of the roots of ``R``."""
    m = q.degree
    r_roots = [(as_scalar(g), int(t)) for g, t in r_roots]
    lower = build_matrix(NodeSystem(tuple(r_roots))) if r_roots else []
    return block_diag(identity(m), lower)
