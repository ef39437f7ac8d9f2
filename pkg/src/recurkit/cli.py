"""``recurkit`` command-line front end.

Every subcommand reads one JSON document (``--input FILE`` or ``--json TEXT``,
standard input otherwise) and writes JSON, or a human-readable rendering with
``--format text``.  Exit status: 0 on success, 1 on a domain error (the error
class name goes to standard error), 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction

import mpmath

from . import jsonio as J
from .closedforms import from_closed_form, generating_function, partial_fractions, seq_add, seq_mul, to_closed_form
from .contour import contour_residual
from .errors import RecurkitError
from .exppoly import taylor_coefficient_sequence, vanishing_order
from .interpolation import build_matrix, hermite_interpolate, newton_interpolate, vandermonde_determinant
from .nonhomogeneous import from_nonhomogeneous, to_nonhomogeneous
from .recurrences import eval_at, minimal_recurrence, terms
from .twisted import coefficient_spec, duality_check, form_coefficients, two_block_family

DEFAULT_BITS = 128


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message, self.format_usage())


def _window(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"window must look like A..B, got {text!r}") from None


def _default_bits() -> int:
    raw = os.environ.get("RECURKIT_PRECISION_BITS")
    if raw is None:
        return DEFAULT_BITS
    try:
        bits = int(raw)
    except ValueError:
        raise _UsageError(f"RECURKIT_PRECISION_BITS must be an integer, got {raw!r}") from None
    return bits


def _text_scalars(xs) -> str:
    return "\n".join(str(x) for x in xs)


# -- handlers: each returns (json document, text rendering) -------------------


def _eval(args, doc):
    seq = J.decode_sequence(doc)
    if args.window is not None:
        lo, hi = args.window
        vals = terms(seq, lo, hi)
        return {"lo": lo, "hi": hi, "values": J.encode_scalars(vals)}, _text_scalars(vals)
    if args.at is None:
        raise J.MalformedInput("eval needs --at or --window")
    v = eval_at(seq, args.at)
    return {"a": args.at, "value": J.encode_scalar(v)}, str(v)


def _minorder(args, doc):
    rec, p = minimal_recurrence(J.decode_sequence(doc))
    out = {"order": rec.order, "c": J.encode_scalars(rec.c), "charpoly": J.encode_polynomial(p)}
    return out, f"order {rec.order}\n{p.to_string('T')}"


def _closedform(args, doc):
    if args.direction == "to":
        seq = J.decode_sequence(_field(doc, "sequence") if "sequence" in doc else doc)
        roots = J.decode_roots(doc["roots"]) if "roots" in doc else None
        eps = to_closed_form(seq, roots)
        text = " + ".join(f"({x.p.to_string('a')})*({x.gamma})^a" for x in eps.terms) or "0"
        return J.encode_closed_form(eps), text
    seq = from_closed_form(J.decode_closed_form(doc))
    return J.encode_sequence(seq), _seq_text(seq)


def _seq_text(seq) -> str:
    return f"c = {[str(x) for x in seq.rec.c]}\ninitial = {[str(x) for x in seq.initial]}"


def _genfun(args, doc):
    rf = generating_function(J.decode_sequence(doc))
    return J.encode_rational(rf), str(rf)


def _partfrac(args, doc):
    rf = J.decode_rational(doc)
    blocks = partial_fractions(rf, J.decode_roots(_field(doc, "roots")))
    text = "\n".join(f"{b.gamma}: {[str(q) for q in b.q]}" for b in blocks)
    return J.encode_blocks(blocks), text


def _field(doc, key):
    if not isinstance(doc, dict) or key not in doc:
        raise J.MalformedInput(f"missing field {key!r}")
    return doc[key]


def _pair(doc):
    return J.decode_sequence(_field(doc, "left")), J.decode_sequence(_field(doc, "right"))


def _add(args, doc):
    seq = seq_add(*_pair(doc))
    return J.encode_sequence(seq), _seq_text(seq)


def _mul(args, doc):
    s1, s2 = _pair(doc)
    r1 = J.decode_roots(doc["left_roots"]) if "left_roots" in doc else None
    r2 = J.decode_roots(doc["right_roots"]) if "right_roots" in doc else None
    seq = seq_mul(s1, s2, r1, r2)
    return J.encode_sequence(seq), _seq_text(seq)


def _vandermonde(args, doc):
    system = J.decode_nodes(doc)
    if args.what == "matrix":
        m = build_matrix(system)
        return {"matrix": J.encode_matrix(m)}, "\n".join(" ".join(str(x) for x in row) for row in m)
    det = vandermonde_determinant(system)
    return {"det": J.encode_scalar(det)}, str(det)


def _interpolate(args, doc):
    data = J.decode_hermite(doc)
    f = hermite_interpolate(data) if args.method == "hermite" else newton_interpolate(data)
    return J.encode_polynomial(f), f.to_string("z")


def _contour(args, doc):
    F = J.decode_function(_field(doc, "F"))
    system = J.decode_nodes(doc)
    z = J.decode_scalar(_field(doc, "z"))
    bits = args.bits if args.bits is not None else _default_bits()
    if bits < 24:
        raise J.MalformedInput("--bits must be at least 24")
    res = contour_residual(F, system, z, args.radius, args.points, bits)
    digits = max(1, math.ceil(bits * math.log10(2)))
    text = mpmath.nstr(res.re, digits, strip_zeros=False, min_fixed=1, max_fixed=0)
    out = {
        "residual": text,
        "bits": bits,
        "points": args.points,
        "radius": f"{args.radius.numerator}/{args.radius.denominator}",
    }
    return out, text


def _nonhomog(args, doc):
    if args.direction == "from":
        seq = from_nonhomogeneous(J.decode_nonhomogeneous(doc))
        return J.encode_sequence(seq), _seq_text(seq)
    seq = J.decode_sequence(_field(doc, "sequence"))
    q = J.decode_polynomial(_field(doc, "q"))
    form = to_nonhomogeneous(seq, q, J.decode_roots(_field(doc, "r_roots"), "r_roots"))
    text = (
        f"b = {[str(x) for x in form.b]}\nhead = {[str(x) for x in form.head]}\n"
        + "\n".join(f"{g} (t={t}): {[str(x) for x in lam]}" for g, t, lam in form.forcing)
    )
    return J.encode_nonhomogeneous(form), text.rstrip()


def _exppoly(args, doc):
    F = J.decode_exppoly(doc)
    z0 = J.decode_scalar(args.z0)
    if args.what == "taylor":
        if args.count is None or args.count < 1:
            raise J.MalformedInput("taylor needs --count >= 1")
        vals = taylor_coefficient_sequence(F, z0, args.count)
        return {"values": J.encode_scalars(vals)}, _text_scalars(vals)
    k = vanishing_order(F, z0)
    return {"order": k, "bound": F.d - 1}, f"order {k} (bound {F.d - 1})"


def _need_h(args):
    if args.h is None:
        raise J.MalformedInput("--h is required")
    return args.h


def _twisted(args, doc):
    if args.what == "twoblock":
        alpha = J.decode_scalars(doc["alpha"], "alpha") if "alpha" in doc else None
        r = two_block_family(
            J.decode_scalar(_field(doc, "eps")),
            J.decode_scalar(_field(doc, "eta")),
            J._int(_field(doc, "l"), "l"),
            J._int(_field(doc, "d"), "d"),
            alpha,
        )
        text = "\n".join(
            f"E_{k} = {[str(x) for x in v]}  charpoly {r.charpolys[k].to_string('T')}" for k, v in r.e_sets.items()
        )
        return J.encode_report(r), f"{text}\nA = {r.A}\nB = {r.B}\nC = {r.C}"
    fam = J.decode_family(doc)
    if args.what == "coeffs":
        if args.at is None:
            raise J.MalformedInput("coeffs needs --at")
        vals = form_coefficients(fam, args.at)
        return {"a": args.at, "U": J.encode_scalars(vals)}, _text_scalars(vals)
    h = _need_h(args)
    if not 1 <= h <= fam.d:
        raise J.MalformedInput(f"--h must lie in 1..{fam.d}")
    if args.what == "spec":
        spec = coefficient_spec(fam, h)
        text = f"E_{h} = {[str(x) for x in spec.e_set]}\nm_{h} = {spec.m} (bound {spec.bound})\n{spec.charpoly.to_string('T')}"
        return J.encode_spec(spec), text
    if h > fam.d - 1:
        raise J.MalformedInput(f"duality needs --h in 1..{fam.d - 1}")
    lo, hi = args.window if args.window is not None else (-3, 10)
    ok = duality_check(fam, h, (lo, hi))
    return {"h": h, "lo": lo, "hi": hi, "holds": ok}, "holds" if ok else "fails"


# -- parser ---------------------------------------------------------------------


def _io_flags(p):
    src = p.add_mutually_exclusive_group()
    src.add_argument("--input", metavar="FILE", help="read the JSON document from FILE")
    src.add_argument("--json", metavar="TEXT", help="inline JSON document")
    p.add_argument("--format", choices=("json", "text"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="recurkit", description="Exact linear recurrence toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="u(a) for an integer a, or a window of terms")
    _io_flags(p)
    p.add_argument("--at", type=int)
    p.add_argument("--window", type=_window, metavar="A..B")
    p.set_defaults(handler=_eval)

    p = sub.add_parser("minorder", help="minimal recurrence and its characteristic polynomial")
    _io_flags(p)
    p.set_defaults(handler=_minorder)

    p = sub.add_parser("closedform", help="convert between recurrence and closed form")
    p.add_argument("direction", choices=("to", "from"))
    _io_flags(p)
    p.set_defaults(handler=_closedform)

    p = sub.add_parser("genfun", help="generating function")
    _io_flags(p)
    p.set_defaults(handler=_genfun)

    p = sub.add_parser("partfrac", help="partial fractions over (1 - gamma z)^t")
    _io_flags(p)
    p.set_defaults(handler=_partfrac)

    for name, fn in (("add", _add), ("mul", _mul)):
        p = sub.add_parser(name, help=f"termwise {'sum' if name == 'add' else 'product'} of two sequences")
        _io_flags(p)
        p.set_defaults(handler=fn)

    p = sub.add_parser("vandermonde", help="confluent Vandermonde matrix or determinant")
    p.add_argument("what", choices=("matrix", "det"))
    _io_flags(p)
    p.set_defaults(handler=_vandermonde)

    p = sub.add_parser("interpolate", help="Hermite interpolation")
    p.add_argument("method", choices=("hermite", "newton"))
    _io_flags(p)
    p.set_defaults(handler=_interpolate)

    p = sub.add_parser("contour", help="contour-integral residual of the interpolation formula")
    _io_flags(p)
    p.add_argument("--radius", type=_positive_fraction, default=_positive_fraction("2"))
    p.add_argument("--points", type=int, default=256)
    p.add_argument("--bits", type=int, default=None)
    p.set_defaults(handler=_contour)

    p = sub.add_parser("nonhomog", help="convert to or from the non-homogeneous form")
    p.add_argument("direction", choices=("to", "from"))
    _io_flags(p)
    p.set_defaults(handler=_nonhomog)

    p = sub.add_parser("exppoly", help="Taylor data and vanishing order of an exponential polynomial")
    p.add_argument("what", choices=("taylor", "order"))
    _io_flags(p)
    p.add_argument("--count", type=int)
    p.add_argument("--z0", default="0")
    p.set_defaults(handler=_exppoly)

    p = sub.add_parser("twisted", help="coefficient sequences of twisted binary forms")
    p.add_argument("what", choices=("coeffs", "spec", "duality", "twoblock"))
    _io_flags(p)
    p.add_argument("--at", type=int)
    p.add_argument("--h", type=int)
    p.add_argument("--window", type=_window, metavar="A..B")
    p.set_defaults(handler=_twisted)
    return parser


def _positive_fraction(text: str) -> Fraction:
    try:
        x = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None
    if x <= 0:
        raise argparse.ArgumentTypeError("radius must be positive")
    return x


def _read_document(args, stdin):
    if args.json is not None:
        text = args.json
    elif args.input is not None:
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise J.MalformedInput(f"cannot read {args.input}: {exc.strerror}") from None
    else:
        text = stdin.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise J.MalformedInput(f"invalid JSON: {exc.msg}") from None


def run(argv=None, stdout=None, stderr=None, stdin=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        doc = _read_document(args, stdin)
        out, text = args.handler(args, doc)
    except _UsageError as exc:
        if len(exc.args) > 1:
            stderr.write(exc.args[1])
        print(f"recurkit: error: {exc.args[0]}", file=stderr)
        return 2
    except RecurkitError as exc:
        print(f"{type(exc).__name__}: {exc}", file=stderr)
        return 1
    except (J.MalformedInput, ValueError, TypeError, KeyError) as exc:
        print(f"MalformedInput: {exc}", file=stderr)
        return 2
    stdout.write(J.dumps(out) if args.format == "json" else text + "\n")
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
