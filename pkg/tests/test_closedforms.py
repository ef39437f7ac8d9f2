from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

import oracles as O
from conftest import root_lists, scalars
from recurkit.closedforms import (
    ClosedFormTerm,
    ExponentialPolynomialSequence,
    find_roots,
    from_closed_form,
    generating_function,
    partial_fractions,
    product_roots,
    seq_add,
    seq_mul,
    to_closed_form,
)
from recurkit.errors import DegreeTooLarge, DenominatorMismatch, RootMismatch, RootsDontSplit
from recurkit.polynomials import Polynomial, RationalFunction, expand_root_factors, series_coefficients
from recurkit.recurrences import RecurrentSequence, char_poly, minimal_recurrence, recurrence_from_poly, satisfies, terms
from recurkit.scalars import I, ExactScalar

P = Polynomial
FIB = RecurrentSequence.of((1, 1), (0, 1))


def cf(*terms):
    return ExponentialPolynomialSequence(tuple(ClosedFormTerm(g, t, P(p)) for g, t, p in terms))


@st.composite
def closed_forms(draw, max_d=5, bound=6):
    roots = draw(root_lists(max_d=max_d, bound=bound))
    terms = []
    for g, t in roots:
        coeffs = draw(st.lists(scalars(bound), min_size=t, max_size=t))
        terms.append((g, t, coeffs))
    return cf(*terms)


def test_from_closed_form_examples():
    s = from_closed_form(cf((1, 2, [3, 2])))
    assert s.rec.c == (2, -1) and s.initial == (3, 5)
    s = from_closed_form(cf((2, 1, [1])))
    assert s.rec.c == (2,) and s.initial == (1,)
    s = from_closed_form(cf((2, 1, [1]), (1, 1, [-1])))
    assert s.rec.c == (3, -2) and s.initial == (0, 1)


def test_to_closed_form_examples():
    assert to_closed_form(RecurrentSequence.of((2, -1), (3, 5))) == cf((1, 2, [3, 2]))
    assert to_closed_form(RecurrentSequence.of((3, -2), (0, 1))) == cf((2, 1, [1]), (1, 1, [-1]))
    with pytest.raises(RootsDontSplit):
        to_closed_form(FIB)


def test_supplied_roots_are_verified():
    seq = RecurrentSequence.of((3, -2), (0, 1))
    assert to_closed_form(seq, [(1, 1), (2, 1)]) == cf((2, 1, [1]), (1, 1, [-1]))
    with pytest.raises(RootMismatch):
        to_closed_form(seq, [(1, 1), (3, 1)])


@given(root_lists(max_d=6, bound=8))
def test_find_roots_recovers_factorisation(roots):
    p = expand_root_factors(roots) * 7
    found = find_roots(p)
    assert sorted(found, key=lambda r: r[0].sort_key()) == sorted(roots, key=lambda r: r[0].sort_key())
    sym = sp.roots(sp.Poly(list(reversed(O.qs(p.coeffs))), O.Z, domain=O.QQ_I).as_expr(), O.Z)
    assert {O.sym(g): t for g, t in found} == sym


def test_find_roots_gaussian_mix():
    roots = [(I, 1), (ExactScalar(1, -1), 2), (ExactScalar(sp.Rational(1, 2).p, 0), 1)]
    assert set(find_roots(expand_root_factors(roots))) == set(roots)
    with pytest.raises(RootsDontSplit):
        find_roots(P([-1, -1, 1]))


@pytest.mark.parametrize("coeffs", [[-2, 0, 1], [-I, 0, 1], [1, 1, 1], [-1, 0, 0, 1, 5]])
def test_irreducible_pieces_do_not_split(coeffs):
    with pytest.raises(RootsDontSplit):
        find_roots(P(coeffs) * P([-3, 1]))


def test_find_roots_large_and_repeated():
    roots = [(ExactScalar(Fraction(1000003, 999983), Fraction(-7, 13)), 3), (ExactScalar(0, Fraction(1, 97)), 2), (ExactScalar(0), 1)]
    assert set(find_roots(expand_root_factors(roots) * Fraction(5, 11))) == set(roots)


@given(closed_forms())
def test_closed_form_round_trip(eps):
    seq = from_closed_form(eps)
    ref = {a: O.closed_form_value([(x.gamma, x.p.coeffs) for x in eps.terms], a) for a in range(-5, 26)}
    assert terms(seq, -5, 25) == [O.unq(ref[a]) for a in range(-5, 26)]
    back = to_closed_form(seq)
    assert back == eps


def test_generating_function_examples():
    assert generating_function(FIB) == RationalFunction(P([0, 1]), P([1, -1, -1]))
    assert generating_function(RecurrentSequence.of((1,), (1,))) == RationalFunction(P([1]), P([1, -1]))
    two = RecurrentSequence.of((3, -2), (0, 1))
    assert generating_function(two) == RationalFunction(P([0, 1]), P([1, -3, 2]))


@given(closed_forms(max_d=4, bound=4))
def test_generating_function_series(eps):
    seq = from_closed_form(eps)
    rf = generating_function(seq)
    assert series_coefficients(rf, 31) == terms(seq, 0, 30)
    # denominator divides prod (1 - gamma z)^t, with equality when nothing cancels
    full = P([1])
    for g, t in eps.roots:
        full = full * P([1, -g]) ** t
    assert (full % rf.den).is_zero()


def test_partial_fraction_examples():
    rf = RationalFunction(P([0, 1]), P([1, -3, 2]))
    blocks = partial_fractions(rf, [(2, 1), (1, 1)])
    assert [(b.gamma, b.q) for b in blocks] == [(2, (1,)), (1, (-1,))]
    assert partial_fractions(RationalFunction(P([1]), P([1, -1])), [(1, 1)])[0].q == (1,)
    assert partial_fractions(RationalFunction(P([1]), P([1, -2, 1])), [(1, 2)])[0].q == (0, 1)


def test_partial_fraction_errors():
    with pytest.raises(DenominatorMismatch):
        partial_fractions(RationalFunction(P([1]), P([1, -1])), [(2, 1)])
    with pytest.raises(DegreeTooLarge):
        partial_fractions(RationalFunction(P([0, 0, 1]), P([1, -1])), [(1, 1)])


def test_partial_fractions_against_apart():
    z = O.Z
    rf = RationalFunction(P([1, 2, 3]), P([1, -1]) ** 2 * P([1, 2]))
    blocks = partial_fractions(rf, [(1, 2), (-2, 1)])
    ours = sum(
        (O.sym(q) / (1 - O.sym(b.gamma) * z) ** (i + 1) for b in blocks for i, q in enumerate(b.q)),
        sp.Integer(0),
    )
    target = (1 + 2 * z + 3 * z**2) / ((1 - z) ** 2 * (1 + 2 * z))
    assert sp.simplify(ours - target) == 0
    assert sp.simplify(sp.apart(target, z) - ours) == 0


def test_seq_add_examples():
    s = seq_add(FIB, FIB)
    assert char_poly(s.rec) == char_poly(FIB.rec)
    one = RecurrentSequence.of((1,), (1,))
    s = seq_add(FIB, one)
    assert char_poly(s.rec) == char_poly(FIB.rec) * P([-1, 1])
    assert terms(s, 0, 8) == [1, 2, 2, 3, 4, 6, 9, 14, 22]
    zero = RecurrentSequence.of((3,), (0,))
    assert terms(seq_add(FIB, zero), -5, 20) == terms(FIB, -5, 20)


def test_seq_mul_examples():
    two = RecurrentSequence.of((2,), (1,))
    three = RecurrentSequence.of((3,), (1,))
    s = seq_mul(two, three)
    assert s.rec.c == (6,)
    lin = RecurrentSequence.of((2, -1), (1, 2))
    s = seq_mul(lin, two)
    assert char_poly(s.rec) == expand_root_factors([(2, 2)])
    assert s.rec.c == (4, -4)
    assert terms(s, 0, 10) == [(1 + a) * 2**a for a in range(11)]
    two_plus_one = RecurrentSequence.of((3, -2), (2, 3))
    s = seq_mul(two_plus_one, three)
    assert char_poly(s.rec) == expand_root_factors([(3, 1), (6, 1)])
    assert terms(s, 0, 20) == [(2**a + 1) * 3**a for a in range(21)]


def test_product_roots_merge():
    # 1*2 and 2*1 collide: keep the larger exponent
    merged = dict(product_roots([(1, 2), (2, 1)], [(1, 1), (2, 1)]))
    assert merged[ExactScalar(2)] == 2 and merged[ExactScalar(1)] == 2 and merged[ExactScalar(4)] == 1


@given(closed_forms(max_d=3, bound=4), closed_forms(max_d=3, bound=4))
def test_ring_operations(e1, e2):
    s1, s2 = from_closed_form(e1), from_closed_form(e2)
    a1, a2 = terms(s1, -10, 30), terms(s2, -10, 30)
    s = seq_add(s1, s2)
    assert terms(s, -10, 30) == [x + y for x, y in zip(a1, a2)]
    assert satisfies(s, s.rec, (-10, 30))
    m = seq_mul(s1, s2)
    assert terms(m, -10, 30) == [x * y for x, y in zip(a1, a2)]
    announced = recurrence_from_poly(expand_root_factors(product_roots(e1.roots, e2.roots)))
    assert m.rec == announced
    rec0, _ = minimal_recurrence(m)
    if rec0.order:
        assert satisfies(m, rec0, (-10, 30))
