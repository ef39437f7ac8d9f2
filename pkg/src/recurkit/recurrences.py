"""Linear recurrence sequences indexed by all of Z.

A :class:`LinearRecurrence` with coefficients ``c = (c_1, ..., c_d)`` encodes

    u(a + d) = c_1 u(a + d - 1) + ... + c_d u(a),

with ``c_d != 0`` so the relation can be run backwards as well.  A
:class:`RecurrentSequence` adds the initial values ``u(0), ..., u(d - 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from . import kernels
from .errors import InvalidRecurrence
from .linalg import matpow, solve_linear
from .polynomials import Polynomial, _to_gauss
from .scalars import ONE, ZERO, ExactScalar, as_scalar

__all__ = [
    "LinearRecurrence",
    "RecurrentSequence",
    "char_poly",
    "recurrence_from_poly",
    "eval_at",
    "terms",
    "companion_matrix",
    "companion_eval",
    "minimal_recurrence",
    "satisfies",
    "relation_holds",
    "normalize_window",
    "ITERATION_CUTOFF",
]

#: |a| up to this bound is evaluated by stepping the recurrence; beyond it
#: eval_at switches to binary powering of the companion matrix.
ITERATION_CUTOFF = 10_000


@dataclass(frozen=True)
class LinearRecurrence:
    c: tuple

    def __post_init__(self):
        c = tuple(as_scalar(x) for x in self.c)
        if c and c[-1].is_zero():
            raise InvalidRecurrence("last recurrence coefficient c_d must be nonzero")
        object.__setattr__(self, "c", c)

    @property
    def order(self) -> int:
        return len(self.c)

    def char_poly(self) -> Polynomial:
        return char_poly(self)

    def reversed(self) -> LinearRecurrence:
        """Recurrence satisfied by ``k -> u(d - 1 - k)``."""
        d = self.order
        if d == 0:
            return self
        inv = self.c[-1].inverse()
        return LinearRecurrence(tuple(-self.c[d - 1 - j] * inv for j in range(1, d)) + (inv,))


@dataclass(frozen=True)
class RecurrentSequence:
    rec: LinearRecurrence
    initial: tuple

    def __post_init__(self):
        if not isinstance(self.rec, LinearRecurrence):
            object.__setattr__(self, "rec", LinearRecurrence(self.rec))
        initial = tuple(as_scalar(x) for x in self.initial)
        if len(initial) != self.rec.order:
            raise InvalidRecurrence(
                f"need {self.rec.order} initial values, got {len(initial)}"
            )
        object.__setattr__(self, "initial", initial)

    @classmethod
    def of(cls, c: Iterable, initial: Iterable) -> RecurrentSequence:
        return cls(LinearRecurrence(tuple(c)), tuple(initial))

    @property
    def order(self) -> int:
        return self.rec.order

    def __getitem__(self, a: int) -> ExactScalar:
        return eval_at(self, a)

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.initial)


def char_poly(rec: LinearRecurrence) -> Polynomial:
    """``T**d - c_1 T**(d-1) - ... - c_d``."""
    d = rec.order
    coeffs = [ZERO] * (d + 1)
    coeffs[d] = ONE
    for i, ci in enumerate(rec.c, start=1):
        coeffs[d - i] = -ci
    return Polynomial(coeffs)


def recurrence_from_poly(p: Polynomial) -> LinearRecurrence:
    """Recurrence whose characteristic polynomial is the monic associate of ``p``."""
    p = p.monic()
    d = p.degree
    if d > 0 and p.coeff(0).is_zero():
        raise InvalidRecurrence("characteristic polynomial vanishes at 0")
    return LinearRecurrence(tuple(-p.coeff(d - i) for i in range(1, d + 1)))


# -- evaluation ---------------------------------------------------------------


def _integer_form(rec: LinearRecurrence, initial: Sequence[ExactScalar]):
    """Scale to a Z[i] recurrence: ``w(a) = E * D**a * u(a)``."""
    cr, ci, D = _to_gauss(rec.c)
    kr = []
    ki = []
    p = 1
    for r, i in zip(cr, ci):
        kr.append(r * p)
        ki.append(i * p)
        p *= D
    ur, ui, E = _to_gauss(initial)
    p = 1
    wr, wi = [], []
    for r, i in zip(ur, ui):
        wr.append(r * p)
        wi.append(i * p)
        p *= D
    return kr, ki, wr, wi, D, E


def _forward_terms(rec: LinearRecurrence, initial, n: int) -> list:
    if rec.order == 0 or n <= 0:
        return [ZERO] * max(n, 0)
    kr, ki, wr, wi, D, E = _integer_form(rec, initial)
    outr, outi = kernels.linear_terms(kr, ki, wr, wi, n)
    out = []
    den = E
    for r, i in zip(outr, outi):
        out.append(ExactScalar.from_parts(r, i, den))
        den *= D
    return out


def _forward_nth(rec: LinearRecurrence, initial, n: int) -> ExactScalar:
    if rec.order == 0:
        return ZERO
    kr, ki, wr, wi, D, E = _integer_form(rec, initial)
    r, i = kernels.linear_nth(kr, ki, wr, wi, n)
    return ExactScalar.from_parts(r, i, E * D**n)


def _backward_view(seq: RecurrentSequence):
    return seq.rec.reversed(), tuple(reversed(seq.initial))


def eval_at(seq: RecurrentSequence, a: int) -> ExactScalar:
    """Exact value ``u(a)`` for any integer ``a``."""
    d = seq.order
    if d == 0:
        return ZERO
    if 0 <= a < d:
        return seq.initial[a]
    if a >= 0:
        if a <= ITERATION_CUTOFF:
            return _forward_nth(seq.rec, seq.initial, a)
        return companion_eval(seq, a)
    rec, init = _backward_view(seq)
    k = d - 1 - a
    if -a <= ITERATION_CUTOFF:
        return _forward_nth(rec, init, k)
    return companion_eval(RecurrentSequence(rec, init), k)


def terms(seq: RecurrentSequence, lo: int, hi: int) -> list:
    """Values ``u(lo), ..., u(hi)`` (inclusive)."""
    if hi < lo:
        return []
    d = seq.order
    if d == 0:
        return [ZERO] * (hi - lo + 1)
    out = []
    if lo < 0:
        rec, init = _backward_view(seq)
        # v(k) = u(d - 1 - k); need u(lo..min(hi, -1))
        top = min(hi, -1)
        back = _forward_terms(rec, init, d - lo)
        out.extend(back[d - 1 - a] for a in range(lo, top + 1))
    if hi >= 0:
        start = max(lo, 0)
        fwd = _forward_terms(seq.rec, seq.initial, hi + 1)
        out.extend(fwd[start:])
    return out


def companion_matrix(rec: LinearRecurrence) -> list:
    """Matrix ``C`` with ``U(a + 1) = C U(a)``, ``U(a) = (u(a), ..., u(a+d-1))``."""
    d = rec.order
    m = [[ZERO] * d for _ in range(d)]
    for i in range(d - 1):
        m[i][i + 1] = ONE
    for j in range(d):
        m[d - 1][j] = rec.c[d - 1 - j]
    return m


def companion_eval(seq: RecurrentSequence, a: int) -> ExactScalar:
    """``u(a)`` for ``a >= 0`` as the first entry of ``C**a U(0)``."""
    if a < 0:
        raise ValueError("companion_eval needs a >= 0")
    d = seq.order
    if d == 0:
        return ZERO
    row = matpow(companion_matrix(seq.rec), a)[0]
    acc = ZERO
    for x, y in zip(row, seq.initial):
        acc = acc + x * y
    return acc


# -- structure ----------------------------------------------------------------


def minimal_recurrence(seq: RecurrentSequence) -> tuple[LinearRecurrence, Polynomial]:
    """Minimal-order recurrence of ``seq`` and its characteristic polynomial.

    The shifted windows ``(u(j), ..., u(j + d - 1))`` for ``j = 0..d`` determine
    the shifts of ``u`` inside the order-``d`` solution space, so the first
    window that depends linearly on its predecessors yields the relation.
    The zero sequence gets order 0 and characteristic polynomial 1.
    """
    d = seq.order
    if seq.is_zero():
        return LinearRecurrence(()), Polynomial([1])
    u = terms(seq, 0, 2 * d - 1)
    windows = [u[j : j + d] for j in range(d + 1)]
    for k in range(1, d + 1):
        # columns: w_{k-1}, ..., w_0 ; target w_k
        a = [[windows[k - 1 - i][row] for i in range(k)] for row in range(d)]
        sol = solve_linear(a, windows[k])
        if sol is not None:
            rec = LinearRecurrence(tuple(sol))
            return rec, char_poly(rec)
    raise AssertionError("no relation of order <= d found; recurrence data inconsistent")


def normalize_window(window) -> range:
    """Accept ``range`` objects or inclusive ``(lo, hi)`` pairs."""
    if isinstance(window, range):
        return window
    lo, hi = window
    return range(lo, hi + 1)


def relation_holds(u: Callable[[int], ExactScalar] | dict, c: Sequence, window) -> bool:
    """Whether ``u(a + k) = sum_i c_i u(a + k - i)`` for every ``a`` in ``window``."""
    window = normalize_window(window)
    get = u.__getitem__ if isinstance(u, dict) else u
    k = len(c)
    for a in window:
        acc = ZERO
        for i, ci in enumerate(c, start=1):
            acc = acc + ci * get(a + k - i)
        if acc != get(a + k):
            return False
    return True


def satisfies(seq: RecurrentSequence, candidate: LinearRecurrence, window) -> bool:
    """Exact check of the candidate relation at every index of ``window``."""
    window = normalize_window(window)
    if len(window) == 0:
        return True
    k = candidate.order
    lo, hi = min(window), max(window) + k
    vals = dict(zip(range(lo, hi + 1), terms(seq, lo, hi)))
    return relation_holds(vals, candidate.c, window)
