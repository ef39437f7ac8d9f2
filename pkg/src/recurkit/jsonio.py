"""JSON encoding of every value type, with strict decoders.

Scalars are ``{"re": "p/q", "im": "p/q"}``; on input the shorthands ``"p"``,
``"p/q"``, ``"1+2*i"`` and JSON integers are also accepted.  Encoders emit
plain dicts and lists; :func:`dumps` fixes key order and layout so equal
values always give byte-identical text.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .closedforms import ClosedFormTerm, ExponentialPolynomialSequence, PartialFractionBlock
from .exppoly import ExponentialPolynomialFunction
from .interpolation import HermiteData, NodeSystem
from .nonhomogeneous import NonHomogeneousForm
from .polynomials import Polynomial, RationalFunction
from .recurrences import LinearRecurrence, RecurrentSequence
from .scalars import ExactScalar, parse_scalar
from .twisted import CoefficientSpec, TwistedFamily, TwoBlockReport


class MalformedInput(ValueError):
    """Input that does not match the expected JSON shape."""


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def _need(doc, key, kind=None):
    if not isinstance(doc, dict) or key not in doc:
        raise MalformedInput(f"missing field {key!r}")
    value = doc[key]
    if kind is not None and not isinstance(value, kind):
        raise MalformedInput(f"field {key!r} must be a {kind.__name__}")
    return value


def _int(x, what="integer") -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise MalformedInput(f"{what} must be a JSON integer")
    return x


def _list(x, what="value") -> list:
    if not isinstance(x, list):
        raise MalformedInput(f"{what} must be a list")
    return x


# -- scalars -------------------------------------------------------------------


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def encode_scalar(s: ExactScalar) -> dict:
    return {"re": _frac(s.re), "im": _frac(s.im)}


def decode_scalar(doc) -> ExactScalar:
    try:
        if isinstance(doc, bool):
            raise MalformedInput("booleans are not scalars")
        if isinstance(doc, int):
            return ExactScalar(doc)
        if isinstance(doc, str):
            return parse_scalar(doc)
        if isinstance(doc, dict):
            if set(doc) - {"re", "im"}:
                raise MalformedInput(f"unexpected scalar fields {sorted(set(doc) - {'re', 'im'})}")
            re, im = doc.get("re", "0"), doc.get("im", "0")
            for part in (re, im):
                if isinstance(part, bool) or not isinstance(part, (str, int)):
                    raise MalformedInput("scalar parts must be strings or integers")
            return ExactScalar(Fraction(re), Fraction(im))
    except (ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, MalformedInput):
            raise
        raise MalformedInput(f"bad scalar {doc!r}") from None
    raise MalformedInput(f"bad scalar {doc!r}")


def encode_scalars(xs) -> list:
    return [encode_scalar(x) for x in xs]


def decode_scalars(doc, what="scalars") -> list:
    return [decode_scalar(x) for x in _list(doc, what)]


# -- polynomials -----------------------------------------------------------------


def encode_polynomial(p: Polynomial) -> dict:
    return {"coeffs": encode_scalars(p.coeffs)}


def decode_polynomial(doc) -> Polynomial:
    if isinstance(doc, list):
        return Polynomial(decode_scalars(doc))
    return Polynomial(decode_scalars(_need(doc, "coeffs"), "coeffs"))


def encode_rational(rf: RationalFunction) -> dict:
    return {"num": encode_polynomial(rf.num), "den": encode_polynomial(rf.den)}


def decode_rational(doc) -> RationalFunction:
    den = decode_polynomial(_need(doc, "den"))
    if den.is_zero():
        raise MalformedInput("zero denominator")
    return RationalFunction(decode_polynomial(_need(doc, "num")), den)


def encode_matrix(m) -> list:
    return [encode_scalars(row) for row in m]


def decode_matrix(doc) -> list:
    return [decode_scalars(row, "matrix row") for row in _list(doc, "matrix")]


# -- recurrences and closed forms ---------------------------------------------


def encode_sequence(seq: RecurrentSequence) -> dict:
    return {"c": encode_scalars(seq.rec.c), "initial": encode_scalars(seq.initial)}


def decode_sequence(doc) -> RecurrentSequence:
    c = decode_scalars(_need(doc, "c"), "c")
    initial = decode_scalars(_need(doc, "initial"), "initial")
    # InvalidRecurrence is a domain error and propagates unchanged
    return RecurrentSequence(LinearRecurrence(tuple(c)), tuple(initial))


def encode_roots(roots) -> list:
    return [{"gamma": encode_scalar(g), "t": int(t)} for g, t in roots]


def decode_roots(doc, what="roots") -> list:
    out = []
    for item in _list(doc, what):
        t = _int(_need(item, "t"), "t")
        if t < 1:
            raise MalformedInput("multiplicity t must be positive")
        out.append((decode_scalar(_need(item, "gamma")), t))
    return out


def encode_closed_form(eps: ExponentialPolynomialSequence) -> dict:
    return {
        "terms": [
            {"gamma": encode_scalar(x.gamma), "t": x.t, "p": encode_polynomial(x.p)} for x in eps.terms
        ]
    }


def decode_closed_form(doc) -> ExponentialPolynomialSequence:
    terms = []
    for item in _list(_need(doc, "terms"), "terms"):
        try:
            terms.append(
                ClosedFormTerm(
                    decode_scalar(_need(item, "gamma")),
                    _int(_need(item, "t"), "t"),
                    decode_polynomial(_need(item, "p")),
                )
            )
        except ValueError as exc:
            if isinstance(exc, MalformedInput) or type(exc) is not ValueError:
                raise
            raise MalformedInput(str(exc)) from None
    return ExponentialPolynomialSequence(tuple(terms))


def encode_blocks(blocks) -> dict:
    return {"blocks": [{"gamma": encode_scalar(b.gamma), "q": encode_scalars(b.q)} for b in blocks]}


def decode_blocks(doc) -> list:
    return [
        PartialFractionBlock(decode_scalar(_need(b, "gamma")), tuple(decode_scalars(_need(b, "q"), "q")))
        for b in _list(_need(doc, "blocks"), "blocks")
    ]


# -- interpolation ---------------------------------------------------------------


def encode_nodes(system: NodeSystem) -> dict:
    return {"nodes": encode_roots(system.nodes)}


def decode_nodes(doc) -> NodeSystem:
    return NodeSystem(tuple(decode_roots(_need(doc, "nodes"), "nodes")))


def encode_hermite(data: HermiteData) -> dict:
    return {
        "nodes": encode_roots(data.system.nodes),
        "values": [encode_scalars(row) for row in data.values],
    }


def decode_hermite(doc) -> HermiteData:
    system = decode_nodes(doc)
    values = [decode_scalars(row, "values row") for row in _list(_need(doc, "values"), "values")]
    if len(values) != len(system.nodes) or any(
        len(row) != t for row, (_, t) in zip(values, system.nodes)
    ):
        raise MalformedInput("values must give t_j derivatives for every node")
    return HermiteData(system, tuple(tuple(r) for r in values))


# -- non-homogeneous forms ------------------------------------------------------


def encode_nonhomogeneous(form: NonHomogeneousForm) -> dict:
    return {
        "b": encode_scalars(form.b),
        "forcing": [
            {"gamma": encode_scalar(g), "t": t, "lambda": encode_scalars(lam)} for g, t, lam in form.forcing
        ],
        "head": encode_scalars(form.head),
    }


def decode_nonhomogeneous(doc) -> NonHomogeneousForm:
    b = decode_scalars(_need(doc, "b"), "b")
    head = decode_scalars(_need(doc, "head"), "head")
    forcing = []
    for item in _list(_need(doc, "forcing"), "forcing"):
        forcing.append(
            (
                decode_scalar(_need(item, "gamma")),
                _int(_need(item, "t"), "t"),
                tuple(decode_scalars(_need(item, "lambda"), "lambda")),
            )
        )
    try:
        return NonHomogeneousForm(tuple(b), tuple(forcing), tuple(head))
    except ValueError as exc:
        if type(exc) is not ValueError:
            raise
        raise MalformedInput(str(exc)) from None


# -- exponential polynomials ----------------------------------------------------


def encode_exppoly(F: ExponentialPolynomialFunction) -> dict:
    return {"terms": [{"a": encode_polynomial(a), "gamma": encode_scalar(g)} for a, g in F.terms]}


def decode_exppoly(doc) -> ExponentialPolynomialFunction:
    terms = [
        (decode_polynomial(_need(item, "a")), decode_scalar(_need(item, "gamma")))
        for item in _list(_need(doc, "terms"), "terms")
    ]
    return ExponentialPolynomialFunction(tuple(terms))


def decode_function(doc):
    """Polynomial, rational function or exponential polynomial, told apart by their keys."""
    if isinstance(doc, dict):
        if "terms" in doc:
            return decode_exppoly(doc)
        if "num" in doc:
            return decode_rational(doc)
        if "coeffs" in doc:
            return decode_polynomial(doc)
    raise MalformedInput("function must carry 'terms', 'num'/'den' or 'coeffs'")


def encode_function(F) -> dict:
    if isinstance(F, ExponentialPolynomialFunction):
        return encode_exppoly(F)
    if isinstance(F, RationalFunction):
        return encode_rational(F)
    return encode_polynomial(F)


# -- twisted families -----------------------------------------------------------


def encode_family(fam: TwistedFamily) -> dict:
    return {"alpha": encode_scalars(fam.alpha), "eps": encode_scalars(fam.eps)}


def decode_family(doc) -> TwistedFamily:
    alpha = decode_scalars(_need(doc, "alpha"), "alpha")
    eps = decode_scalars(_need(doc, "eps"), "eps")
    try:
        return TwistedFamily(tuple(alpha), tuple(eps))
    except ValueError as exc:
        raise MalformedInput(str(exc)) from None


def encode_spec(spec: CoefficientSpec) -> dict:
    return {
        "h": spec.h,
        "e_set": encode_scalars(spec.e_set),
        "m_h": spec.m,
        "charpoly": encode_polynomial(spec.charpoly),
        "bound": spec.bound,
    }


def decode_spec(doc) -> CoefficientSpec:
    return CoefficientSpec(
        _int(_need(doc, "h")),
        tuple(decode_scalars(_need(doc, "e_set"))),
        _int(_need(doc, "m_h")),
        decode_polynomial(_need(doc, "charpoly")),
        _int(_need(doc, "bound")),
    )


def encode_report(r: TwoBlockReport) -> dict:
    return {
        "d": r.d,
        "l": r.l,
        "eps": encode_scalar(r.eps),
        "eta": encode_scalar(r.eta),
        "e_sets": {str(k): encode_scalars(v) for k, v in r.e_sets.items()},
        "charpolys": {str(k): encode_polynomial(v) for k, v in r.charpolys.items()},
        "bounds": {str(k): {"m": m, "bound": b} for k, (m, b) in r.bounds.items()},
        "ud1_product": encode_polynomial(r.ud1_product),
        "A": encode_scalar(r.A),
        "B": encode_scalar(r.B),
        "C": encode_scalar(r.C),
    }


def decode_report(doc) -> TwoBlockReport:
    return TwoBlockReport(
        _int(_need(doc, "d")),
        _int(_need(doc, "l")),
        decode_scalar(_need(doc, "eps")),
        decode_scalar(_need(doc, "eta")),
        {int(k): tuple(decode_scalars(v)) for k, v in _need(doc, "e_sets", dict).items()},
        {int(k): decode_polynomial(v) for k, v in _need(doc, "charpolys", dict).items()},
        {int(k): (_int(_need(v, "m")), _int(_need(v, "bound"))) for k, v in _need(doc, "bounds", dict).items()},
        decode_polynomial(_need(doc, "ud1_product")),
        decode_scalar(_need(doc, "A")),
        decode_scalar(_need(doc, "B")),
        decode_scalar(_need(doc, "C")),
    )
