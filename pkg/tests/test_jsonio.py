import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import node_systems, nonzero_scalars, root_lists, scalars
from recurkit import jsonio as J
from recurkit.closedforms import ClosedFormTerm, ExponentialPolynomialSequence, PartialFractionBlock
from recurkit.exppoly import ExponentialPolynomialFunction
from recurkit.interpolation import HermiteData, NodeSystem
from recurkit.nonhomogeneous import NonHomogeneousForm
from recurkit.polynomials import Polynomial, RationalFunction
from recurkit.recurrences import RecurrentSequence
from recurkit.scalars import ExactScalar
from recurkit.twisted import TwistedFamily, coefficient_spec, two_block_family

polys = st.lists(scalars(30), max_size=6).map(Polynomial)


def through_text(doc):
    return json.loads(J.dumps(doc))


def round_trip(encode, decode, value):
    assert decode(through_text(encode(value))) == value


@given(scalars(10**9))
def test_scalar(s):
    round_trip(J.encode_scalar, J.decode_scalar, s)
    doc = J.encode_scalar(s)
    assert set(doc) == {"re", "im"} and all("/" in v for v in doc.values())


@pytest.mark.parametrize(
    "doc, value",
    [
        (3, ExactScalar(3)),
        ("1-2*i", ExactScalar(1, -2)),
        ({"re": "1/2"}, ExactScalar(Fraction(1, 2))),
        ({"im": 4}, ExactScalar(0, 4)),
    ],
)
def test_scalar_shorthands(doc, value):
    assert J.decode_scalar(doc) == value


@pytest.mark.parametrize("doc", [True, 1.5, None, [], {"re": "1/0"}, {"re": "x"}, {"re": "1", "z": "2"}, {"re": 1.5}])
def test_scalar_malformed(doc):
    with pytest.raises(J.MalformedInput):
        J.decode_scalar(doc)


@given(polys)
def test_polynomial(p):
    round_trip(J.encode_polynomial, J.decode_polynomial, p)
    assert J.decode_polynomial(through_text(J.encode_polynomial(p))["coeffs"]) == p


@given(polys, polys.filter(lambda p: not p.is_zero()))
def test_rational(num, den):
    round_trip(J.encode_rational, J.decode_rational, RationalFunction(num, den))


def test_rational_zero_denominator():
    with pytest.raises(J.MalformedInput):
        J.decode_rational({"num": [1], "den": [0]})


@given(st.lists(st.lists(scalars(20), min_size=3, max_size=3), max_size=3))
def test_matrix(m):
    round_trip(J.encode_matrix, J.decode_matrix, m)


@given(st.integers(1, 5).flatmap(lambda d: st.tuples(st.lists(scalars(20), min_size=d, max_size=d), st.lists(scalars(20), min_size=d, max_size=d))))
def test_sequence(data):
    c, init = data
    if c[-1].is_zero():
        c[-1] = ExactScalar(1)
    round_trip(J.encode_sequence, J.decode_sequence, RecurrentSequence.of(c, init))


@given(root_lists(max_d=6, bound=20))
def test_roots(roots):
    round_trip(J.encode_roots, J.decode_roots, list(roots))


@given(root_lists(max_d=6, bound=20), st.data())
def test_closed_form(roots, data):
    terms = [ClosedFormTerm(g, t, Polynomial(data.draw(st.lists(scalars(9), min_size=t, max_size=t)))) for g, t in roots]
    round_trip(J.encode_closed_form, J.decode_closed_form, ExponentialPolynomialSequence(tuple(terms)))


@given(root_lists(max_d=5), st.data())
def test_blocks(roots, data):
    blocks = [PartialFractionBlock(g, tuple(data.draw(st.lists(scalars(9), min_size=t, max_size=t)))) for g, t in roots]
    round_trip(J.encode_blocks, J.decode_blocks, blocks)


@given(node_systems(max_d=7), st.data())
def test_nodes_and_hermite(nodes, data):
    system = NodeSystem(nodes)
    round_trip(J.encode_nodes, J.decode_nodes, system)
    values = [data.draw(st.lists(scalars(9), min_size=t, max_size=t)) for _, t in nodes]
    round_trip(J.encode_hermite, J.decode_hermite, HermiteData(system, values))


@given(st.lists(scalars(9), max_size=3), root_lists(max_d=4), st.data())
def test_nonhomogeneous(b, roots, data):
    forcing = [(g, t, data.draw(st.lists(scalars(9), min_size=t, max_size=t))) for g, t in roots]
    head = data.draw(st.lists(scalars(9), min_size=len(b), max_size=len(b)))
    round_trip(J.encode_nonhomogeneous, J.decode_nonhomogeneous, NonHomogeneousForm(b, forcing, head))


@given(node_systems(max_d=6), st.data())
def test_exppoly_and_function_dispatch(nodes, data):
    terms = [(Polynomial(data.draw(st.lists(scalars(9), min_size=t, max_size=t))), g) for g, t in nodes]
    F = ExponentialPolynomialFunction(tuple(terms))
    round_trip(J.encode_exppoly, J.decode_exppoly, F)
    round_trip(J.encode_function, J.decode_function, F)
    p = Polynomial([1, 2])
    round_trip(J.encode_function, J.decode_function, p)
    round_trip(J.encode_function, J.decode_function, RationalFunction(p, Polynomial([1, -1])))
    with pytest.raises(J.MalformedInput):
        J.decode_function({"alpha": []})


@given(st.integers(1, 5).flatmap(lambda d: st.tuples(st.lists(scalars(6), min_size=d, max_size=d), st.lists(nonzero_scalars(6), min_size=d, max_size=d))))
def test_family_and_spec(data):
    fam = TwistedFamily(*data)
    round_trip(J.encode_family, J.decode_family, fam)
    round_trip(J.encode_spec, J.decode_spec, coefficient_spec(fam, 1))


def test_family_malformed():
    with pytest.raises(J.MalformedInput):
        J.decode_family({"alpha": [1], "eps": [0]})
    with pytest.raises(J.MalformedInput):
        J.decode_family({"alpha": [1, 2], "eps": [1]})


def test_report():
    round_trip(J.encode_report, J.decode_report, two_block_family(2, 3, 2, 4))
    round_trip(J.encode_report, J.decode_report, two_block_family(ExactScalar(1, 1), -1, 1, 5, [1, 2, 3, 4, 5]))


def test_dumps_is_canonical():
    doc = {"b": [1, {"z": 1, "a": 2}], "a": "x"}
    text = J.dumps(doc)
    assert text.endswith("}\n") and text.index('"a"') < text.index('"b"')
    assert J.dumps(json.loads(text)) == text
