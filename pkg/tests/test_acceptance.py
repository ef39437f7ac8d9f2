"""Acceptance suite: ten end-to-end criteria, each reported as PASS or FAIL.

Random instances come from a seeded generator so every run checks the same
cases.  Run under pytest (the summary lines appear at the end of the session)
or directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import functools
import itertools
import math
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import mpmath
import sympy as sp

sys.path.insert(0, str(Path(__file__).parent))

import oracles as O  # noqa: E402
from recurkit.closedforms import (  # noqa: E402
    ExponentialPolynomialSequence,
    from_closed_form,
    seq_add,
    seq_mul,
    to_closed_form,
)
from recurkit.contour import contour_residual  # noqa: E402
from recurkit.exppoly import ExponentialPolynomialFunction, exhaustive_vanishing_orders, vanishing_order  # noqa: E402
from recurkit.interpolation import (  # noqa: E402
    HermiteData,
    NodeSystem,
    build_matrix,
    determinant_formula,
    hermite_interpolate,
    newton_interpolate,
    solve_interpolation,
)
from recurkit.linalg import determinant, determinant_gauss  # noqa: E402
from recurkit.nonhomogeneous import NonHomogeneousForm, form_terms, from_nonhomogeneous  # noqa: E402
from recurkit.polynomials import Polynomial, expand_root_factors  # noqa: E402
from recurkit.recurrences import (  # noqa: E402
    RecurrentSequence,
    char_poly,
    recurrence_from_poly,
    relation_holds,
    terms,
)
from recurkit.scalars import ExactScalar  # noqa: E402
from recurkit.twisted import (  # noqa: E402
    TwistedFamily,
    coefficient_spec,
    coefficient_table,
    duality_check,
    e_set,
    two_block_family,
)

P = Polynomial
SEED = 20240611

# criterion number -> (title, passed, seconds)
RESULTS: dict = {}


def criterion(n: int, title: str, budget: float | None = None):
    def wrap(fn):
        @functools.wraps(fn)
        def run():
            start = time.perf_counter()
            ok = False
            try:
                fn()
                elapsed = time.perf_counter() - start
                assert budget is None or elapsed < budget, f"took {elapsed:.1f} s, budget {budget} s"
                ok = True
            finally:
                RESULTS[n] = (title, ok, time.perf_counter() - start)

        return run

    return wrap


def summary_lines() -> list:
    out = []
    for n in sorted(RESULTS):
        title, ok, secs = RESULTS[n]
        out.append(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title} ({secs:.2f} s)")
    return out


# -- random instances ----------------------------------------------------------


def rand_rat(rng, bound):
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def rand_scalar(rng, bound=20, real=False):
    return ExactScalar(rand_rat(rng, bound), 0 if real else rand_rat(rng, bound))


def rand_nonzero(rng, bound=20):
    while True:
        x = rand_scalar(rng, bound)
        if not x.is_zero():
            return x


def rand_nodes(rng, max_d, bound=20, max_t=3, nonzero=False):
    budget = rng.randint(1, max_d)
    nodes, seen = [], set()
    while budget:
        g = rand_nonzero(rng, bound) if nonzero else rand_scalar(rng, bound)
        if g in seen:
            continue
        t = rng.randint(1, min(max_t, budget))
        seen.add(g)
        nodes.append((g, t))
        budget -= t
    return nodes


def rand_closed_form(rng, max_d=5, bound=6):
    roots = rand_nodes(rng, max_d, bound=bound, nonzero=True)
    return ExponentialPolynomialSequence(
        tuple((g, t, P([rand_scalar(rng, 9) for _ in range(t)])) for g, t in roots)
    )


def oracle_terms(seq: RecurrentSequence, lo: int, hi: int) -> list:
    ref = O.iterate(seq.rec.c, seq.initial, lo, hi)
    return [O.unq(ref[a]) for a in range(lo, hi + 1)]


# -- criteria ------------------------------------------------------------------


@criterion(1, "generalized Vandermonde determinant equals the product formula", budget=10)
def test_criterion_1_determinant_formula():
    rng = random.Random(SEED + 1)
    for _ in range(200):
        system = NodeSystem(rand_nodes(rng, 7, bound=20))
        m = build_matrix(system)
        expected = determinant_formula(system)
        assert determinant_gauss(m) == expected
        assert determinant(m) == expected


def _derivative_at(f: Polynomial, x: ExactScalar, i: int) -> ExactScalar:
    acc = ExactScalar(0)
    for k in range(len(f.coeffs) - 1, i - 1, -1):
        acc = acc * x + f.coeffs[k] * math.perm(k, i)
    return acc


@criterion(2, "three Hermite interpolation solvers agree", budget=20)
def test_criterion_2_interpolation():
    rng = random.Random(SEED + 2)
    for _ in range(100):
        system = NodeSystem(rand_nodes(rng, 8, bound=20))
        values = [[rand_scalar(rng, 20) for _ in range(t)] for _, t in system.nodes]
        data = HermiteData(system, values)
        f = hermite_interpolate(data)
        assert newton_interpolate(data) == f
        assert solve_interpolation(data) == f
        assert f.degree < system.d
        for (g, t), row in zip(system.nodes, values):
            assert [_derivative_at(f, g, i) for i in range(t)] == list(row)


@criterion(3, "closed-form round trip on -5..25")
def test_criterion_3_closed_form_round_trip():
    rng = random.Random(SEED + 3)
    for _ in range(100):
        roots = rand_nodes(rng, 5, bound=6, nonzero=True)
        rec = recurrence_from_poly(expand_root_factors(roots))
        seq = RecurrentSequence(rec, tuple(rand_scalar(rng, 9) for _ in range(rec.order)))
        want = oracle_terms(seq, -5, 25)
        back = from_closed_form(to_closed_form(seq))
        assert terms(back, -5, 25) == want
        back = from_closed_form(to_closed_form(seq, roots))
        assert terms(back, -5, 25) == want


@criterion(4, "ring operations termwise on -10..30 with announced characteristic polynomials")
def test_criterion_4_ring_operations():
    rng = random.Random(SEED + 4)
    for _ in range(50):
        e1, e2 = rand_closed_form(rng), rand_closed_form(rng)
        s1, s2 = from_closed_form(e1), from_closed_form(e2)
        a1, a2 = oracle_terms(s1, -10, 30), oracle_terms(s2, -10, 30)

        s = seq_add(s1, s2)
        assert terms(s, -10, 30) == [x + y for x, y in zip(a1, a2)]
        lcm = sp.lcm(O.to_expr(char_poly(s1.rec).coeffs), O.to_expr(char_poly(s2.rec).coeffs))
        lcm = sp.Poly(lcm, O.Z, domain=sp.QQ_I).monic()
        assert char_poly(s.rec) == P([O.unq(c) for c in reversed(lcm.all_coeffs())])
        assert relation_holds(dict(zip(range(-10, 31), terms(s, -10, 30))), s.rec.c, (-10, 30 - s.rec.order))

        m = seq_mul(s1, s2)
        assert terms(m, -10, 30) == [x * y for x, y in zip(a1, a2)]
        merged: dict = {}
        for g1, t1 in e1.roots:
            for g2, t2 in e2.roots:
                merged[g1 * g2] = max(merged.get(g1 * g2, 0), t1 + t2 - 1)
        announced = P([1])
        for g, t in merged.items():
            for _ in range(t):
                announced = announced * P([-g, 1])
        assert char_poly(m.rec) == announced
        assert relation_holds(dict(zip(range(-10, 31), terms(m, -10, 30))), m.rec.c, (-10, 30 - m.rec.order))


@criterion(5, "non-homogeneous three-way equivalence on -5..25")
def test_criterion_5_nonhomogeneous():
    rng = random.Random(SEED + 5)
    for _ in range(100):
        gamma, lam, u0 = rand_nonzero(rng, 10), rand_scalar(rng, 10), rand_scalar(rng, 10)
        # u(a + 1) = gamma u(a) + lam gamma^a, i.e. u(a) = (u0 + lam a / gamma) gamma^a
        forced = NonHomogeneousForm((gamma,), ((gamma, 1, (lam,)),), (u0,))
        closed = from_closed_form(ExponentialPolynomialSequence(((gamma, 2, P([u0, lam / gamma])),)))
        homog = RecurrentSequence(recurrence_from_poly(expand_root_factors([(gamma, 2)])), (u0, gamma * u0 + lam))
        want = oracle_terms(homog, -5, 25)
        assert form_terms(forced, -5, 25) == want
        assert terms(from_nonhomogeneous(forced), -5, 25) == want
        assert terms(closed, -5, 25) == want


def sweep_structures(pool=range(-3, 4), max_d=6):
    """Every set of distinct exponents from ``pool`` with block sizes summing to at most ``max_d``."""
    pool = list(pool)
    for k in range(1, max_d + 1):
        for gammas in itertools.combinations(pool, k):
            for ts in itertools.product(range(1, max_d - k + 2), repeat=k):
                if sum(ts) <= max_d:
                    yield tuple(zip(gammas, ts))


@criterion(6, "exponential-polynomial vanishing order at most d - 1, exhaustive")
def test_criterion_6_exhaustive_bound():
    structures = list(sweep_structures())
    assert len(structures) == 1715
    cases = violations = 0
    for structure in structures:
        res = exhaustive_vanishing_orders(structure, values=range(-3, 4))
        cases += res.cases
        violations += res.violations
        assert res.max_order <= sum(t for _, t in structure) - 1
    assert violations == 0
    assert cases == 69_125_868

    # the exact scalar route on a sample of the same cases
    rng = random.Random(SEED + 6)
    for _ in range(300):
        structure = rng.choice(structures)
        terms_ = []
        for g, t in structure:
            coeffs = [rng.randint(-3, 3) for _ in range(t - 1)] + [rng.choice([-3, -2, -1, 1, 2, 3])]
            terms_.append((P(coeffs), g))
        F = ExponentialPolynomialFunction(tuple(terms_))
        assert vanishing_order(F, 0) <= F.d - 1


TWIST_PAIRS = [(al, e) for al in (1, 2) for e in (1, -1, 2, -2, 3)]


@criterion(7, "twisted families d <= 5: expansions, recurrences, bounds, duality", budget=60)
def test_criterion_7_twisted_families():
    # every checked quantity is symmetric under permuting the (alpha_i, eps_i)
    # pairs together, so one family per multiset covers all orderings
    families = 0
    for d in range(1, 6):
        for pairs in itertools.combinations_with_replacement(TWIST_PAIRS, d):
            fam = TwistedFamily(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))
            table = coefficient_table(fam, (-5, 20 + d + 5))
            for h in range(1, d + 1):
                spec = coefficient_spec(fam, h, table)
                assert spec.m == len(e_set(fam.eps, d - h)) <= spec.bound
            for h in range(1, d):
                assert duality_check(fam, h, (-3, 10), table)
            families += 1
    assert families == 3002

    # a few ordered families checked without the symmetry reduction
    rng = random.Random(SEED + 7)
    for _ in range(20):
        pairs = [rng.choice(TWIST_PAIRS) for _ in range(rng.randint(2, 5))]
        fam = TwistedFamily(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))
        for h in range(1, fam.d + 1):
            coefficient_spec(fam, h)
        for h in range(1, fam.d):
            assert duality_check(fam, h, (-3, 10))


@criterion(8, "two-block example eps = 2, eta = 3, d = 4, l = 2")
def test_criterion_8_two_block():
    rep = two_block_family(2, 3, 2, 4)
    assert set(rep.e_sets[1]) == {2, 3}
    assert set(rep.e_sets[2]) == {4, 6, 9}
    assert set(rep.e_sets[3]) == {12, 18}
    assert rep.charpolys[1] == P([6, -5, 1])
    assert rep.charpolys[2] == P([-216, 114, -19, 1])
    assert rep.charpolys[3] == P([216, -30, 1])
    assert (rep.A, rep.B, rep.C) == (13, -36, -24)
    # U_2(a) = 4^a + 4 * 6^a + 9^a
    u2 = [4**a + 4 * 6**a + 9**a for a in range(13)]
    assert u2[:3] == [6, 37, 241]
    for a in range(0, 11):
        assert u2[a + 2] == rep.A * u2[a + 1] + rep.B * u2[a] + rep.C * 6**a


@criterion(9, "contour residual for e^z below 1e-9, non-increasing under doubling", budget=5)
def test_criterion_9_contour():
    F = ExponentialPolynomialFunction(((P([1]), 1),))
    r256 = contour_residual(F, [(0, 1)], Fraction(1, 2), radius=2, quad_points=256, bits=128).re
    r512 = contour_residual(F, [(0, 1)], Fraction(1, 2), radius=2, quad_points=512, bits=128).re
    assert r256 < mpmath.mpf(10) ** -9
    assert r512 <= r256


@criterion(10, "CLI golden files, Fibonacci eval(10) = 55 and exit codes")
def test_criterion_10_cli():
    import test_cli as C

    statuses = set()
    for name, argv, doc, status in C.CASES:
        code, out, err = C.invoke(argv, doc)
        assert code == status, (name, err)
        assert out == (C.GOLDEN / f"{name}.out").read_text(encoding="utf-8"), name
        if status and not err.startswith("usage:"):
            assert err == (C.GOLDEN / f"{name}.err").read_text(encoding="utf-8"), name
        statuses.add(status)
    assert statuses == {0, 1, 2}
    code, out, _ = C.invoke(["eval", "--at", "10", "--format", "text"], C.FIB)
    assert code == 0 and out == "55\n"


if __name__ == "__main__":
    failed = False
    tests = [v for k, v in globals().items() if k.startswith("test_criterion_")]
    for fn in sorted(tests, key=lambda f: int(f.__name__.split("_")[2])):
        try:
            fn()
        except Exception as exc:  # report and keep going
            failed = True
            print(f"{fn.__name__}: {type(exc).__name__}: {exc}", file=sys.stderr)
    print("\n".join(summary_lines()))
    sys.exit(1 if failed else 0)
