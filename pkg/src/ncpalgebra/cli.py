"""Command-line entry point ``ncp``.

Exit codes: 0 success, 1 verification failure, 2 parse error, 3 size guard
exceeded, 4 non-invertible character.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .algebra import AlgebraElement, TensorElement, coproduct_Delta, coproduct_delta, parse_element
from .characters import NAMED, invert_delta, named_character
from .errors import NcpError, ParseError
from .invariants import ALGORITHMS, antipode, lambda_invariant, phi0, phi_ncp
from .partition import enumerate_ncp, parse_partition
from .polynomial import HILBERT, MONOMIAL, RationalPolynomial
from . import series as ser
from .verify import SUITES, run_suite

FORMATS = ("text", "json", "csv")
INVARIANTS = ("phi", "lambda", "lambda-strict", "phi0")
CHARACTERS = tuple(sorted(NAMED)) + ("gamma",)
SCHEMA_VERSION = 1


def rational(x: Fraction | int) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# -- JSON payloads ---------------------------------------------------------------

def polynomial_json(p: RationalPolynomial) -> dict:
    return {"kind": "polynomial", "basis": p.basis, "coefficients": [rational(c) for c in p.coeffs], "text": str(p)}


def element_json(x: AlgebraElement) -> dict:
    return {
        "kind": "element",
        "terms": [{"coefficient": rational(c), "monomial": [str(f) for f in m]} for m, c in x.sorted_terms()],
        "text": str(x),
    }


def tensor_json(t: TensorElement) -> dict:
    return {
        "kind": "tensor",
        "terms": [
            {"coefficient": rational(c), "factors": [[str(f) for f in m] for m in key]}
            for key, c in t.sorted_terms()
        ],
        "text": t.render(ascii=True),
    }


def envelope(payload, command: str) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command, "result": payload}


# -- input helpers ---------------------------------------------------------------

def _inputs(args) -> list[str]:
    """The ``--partition`` value, or one partition per nonblank stdin line."""
    if getattr(args, "partition", None) is not None:
        return [args.partition]
    if getattr(args, "element", None) is not None:
        return [args.element]
    lines = [line.strip() for line in sys.stdin.read().splitlines()]
    items = [line for line in lines if line]
    if not items:
        raise ParseError("no input: pass --partition or feed partitions on stdin")
    return items


def _element_input(args, text: str) -> AlgebraElement:
    if getattr(args, "element", None) is not None:
        return parse_element(text)
    return AlgebraElement.of(parse_partition(text))


def _emit(args, results: list, command: str, text_of, json_of, csv_rows=None) -> None:
    fmt = args.format
    if fmt == "json":
        payload = [json_of(r) for r in results]
        out = envelope(payload[0] if len(payload) == 1 else {"kind": "batch", "items": payload}, command)
        print(json.dumps(out, ensure_ascii=False, sort_keys=True))
    elif fmt == "csv":
        if csv_rows is None:
            raise ParseError(f"csv output is not available for {command}")
        header, rows = csv_rows(results)
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        for r in results:
            print(text_of(r))


# -- commands --------------------------------------------------------------------

def cmd_enumerate(args) -> int:
    parts = enumerate_ncp(args.legs, args.blocks)
    if args.count:
        _emit(args, [len(parts)], "enumerate", str, lambda c: {"kind": "count", "value": c},
              lambda rs: (["count"], [[rs[0]]]))
        return 0
    if args.format == "json":
        print(json.dumps(envelope({"kind": "partitions", "items": [str(p) for p in parts]}, "enumerate"),
                         ensure_ascii=False, sort_keys=True))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["partition"])
        w.writerows([str(p)] for p in parts)
        sys.stdout.write(buf.getvalue())
    else:
        for p in parts:
            print(p)
    return 0


def _invariant_value(args, text: str) -> RationalPolynomial:
    x = _element_input(args, text)
    name = args.name
    if name == "phi":
        p = phi_ncp(x, args.algorithm)
    elif name == "lambda":
        p = lambda_invariant(x, strict=False)
    elif name == "lambda-strict":
        p = lambda_invariant(x, strict=True)
    else:
        p = phi0(x)
    return p.in_basis(args.basis)


def cmd_invariant(args) -> int:
    results = [_invariant_value(args, t) for t in _inputs(args)]

    def rows(rs):
        out = []
        for k, p in enumerate(rs):
            for i, c in enumerate(p.coeffs):
                out.append([k, i, c.numerator, c.denominator])
        return ["item", "coeff_index", "p", "q"], out

    _emit(args, results, "invariant", str, polynomial_json, rows)
    return 0


def cmd_character(args) -> int:
    ch = named_character(args.name, Fraction(args.q) if args.q is not None else None)
    if args.invert:
        ch = invert_delta(ch)
    results = [ch(_element_input(args, t)) for t in _inputs(args)]
    _emit(args, results, "character", rational,
          lambda v: {"kind": "rational", "value": rational(v)},
          lambda rs: (["item", "p", "q"], [[k, v.numerator, v.denominator] for k, v in enumerate(rs)]))
    return 0


def cmd_coproduct(args) -> int:
    cop = coproduct_Delta if args.which == "Delta" else coproduct_delta
    results = [cop(_element_input(args, t)) for t in _inputs(args)]
    _emit(args, results, "coproduct", lambda t: t.render(ascii=args.ascii), tensor_json)
    return 0


def cmd_antipode(args) -> int:
    results = [antipode(_element_input(args, t)) for t in _inputs(args)]
    _emit(args, results, "antipode", str, element_json)
    return 0


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.max_legs)
    if args.format == "json":
        print(json.dumps(envelope({"kind": "report", **report.as_dict()}, "verify"), ensure_ascii=False, sort_keys=True))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["id", "scope", "passed", "witness"])
        for c in report.checks:
            w.writerow([c.id, c.scope, int(c.passed), c.witness or ""])
        sys.stdout.write(buf.getvalue())
    else:
        print(report.render())
    return report.exit_status


def _parse_coeffs(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(t.strip()) for t in text.split(",") if t.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad coefficient list {text!r}") from None


def cmd_series(args) -> int:
    coeffs = _parse_coeffs(args.coeffs)
    order = args.order
    f = ser.FormalSeries(coeffs + (Fraction(0),) * max(0, order - 1 - len(coeffs)), max(order, len(coeffs) + 1))
    g = (ser.invert_ncp if args.method == "ncp" else ser.invert_oracle)(f, order)
    values = [Fraction(g.coefficient(p)) for p in range(1, order + 1)]
    _emit(
        args, [values], "series",
        lambda vs: ",".join(rational(v) for v in vs[1:]),
        lambda vs: {"kind": "series", "order": order, "coefficients": [rational(v) for v in vs]},
        lambda rs: (["power", "p", "q"], [[p, v.numerator, v.denominator] for p, v in enumerate(rs[0], 1)]),
    )
    return 0


def cmd_table(args) -> int:
    n = args.max_n
    if args.which == "a-in":
        t = ser.a_table(n)
        header = ["i", "n", "value"]
        rows = [[i, m, t[(i, m)]] for i in range(1, n + 1) for m in range(1, n + 1)]
    elif args.which == "p-n":
        t = ser.a_table(n)
        header = ["n", "coeff_index", "p", "q"]
        rows = []
        for m in range(1, n + 1):
            for i, c in enumerate(t.P(m).to_monomial().coeffs):
                rows.append([m, i, c.numerator, c.denominator])
    else:
        header = ["n", "p", "q"]
        rows = [[m, v.numerator, v.denominator] for m in range(1, n + 1) for v in [ser.lambda_ncp_Jn(m)]]
    if args.format == "json":
        print(json.dumps(envelope({"kind": "table", "table": args.which, "header": header, "rows": rows}, "table"),
                         sort_keys=True))
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        sys.stdout.write(buf.getvalue())
    return 0


# -- parser ----------------------------------------------------------------------

def _input_options(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--partition", help='partition such as "1,4|2|3" (default: read lines from stdin)')
    g.add_argument("--element", help='algebra element such as "2*(1|2) + -1*(1).(1)"')


def _invariant_parser(p: argparse.ArgumentParser) -> None:
    p.add_argument("name", choices=INVARIANTS)
    _input_options(p)
    p.add_argument("--algorithm", choices=ALGORITHMS, default="recurrence")
    p.add_argument("--basis", choices=(MONOMIAL, HILBERT), default=MONOMIAL)
    p.set_defaults(func=cmd_invariant)


def _character_parser(p: argparse.ArgumentParser) -> None:
    p.add_argument("name", choices=CHARACTERS)
    _input_options(p)
    p.add_argument("--q", help="parameter of gamma, a rational such as -1 or 1/3")
    p.add_argument("--invert", action="store_true", help="evaluate the inverse for the fusion convolution")
    p.set_defaults(func=cmd_character)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS, help="output format")
    common.add_argument("--ascii", action="store_true", default=argparse.SUPPRESS, help="write (x) instead of ⊗")

    parser = argparse.ArgumentParser(prog="ncp", description="Noncrossing partition algebra toolkit.", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list noncrossing partitions")
    p.add_argument("--legs", type=int, required=True)
    p.add_argument("--blocks", type=int)
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("eval", parents=[common], help="evaluate invariants, characters, coproducts, antipode")
    ev = p.add_subparsers(dest="kind", required=True)
    _invariant_parser(ev.add_parser("invariant", parents=[common]))
    _character_parser(ev.add_parser("character", parents=[common]))
    q = ev.add_parser("coproduct", parents=[common])
    q.add_argument("which", choices=("Delta", "delta"), nargs="?", default="Delta")
    _input_options(q)
    q.set_defaults(func=cmd_coproduct)
    q = ev.add_parser("antipode", parents=[common])
    _input_options(q)
    q.set_defaults(func=cmd_antipode)

    _invariant_parser(sub.add_parser("invariant", parents=[common], help="polynomial invariants"))
    _character_parser(sub.add_parser("character", parents=[common], help="named characters"))

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--max-legs", type=int, default=4)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("series", parents=[common], help="series tangent to the identity")
    sp = p.add_subparsers(dest="action", required=True)
    q = sp.add_parser("invert", parents=[common])
    q.add_argument("--coeffs", required=True, help="a1,a2,... for x + a1 x^2 + a2 x^3 + ...")
    q.add_argument("--order", type=int, required=True, help="highest power of x to compute")
    q.add_argument("--method", choices=("oracle", "ncp"), default="ncp")
    q.set_defaults(func=cmd_series)

    p = sub.add_parser("table", parents=[common], help="coefficient tables")
    p.add_argument("which", choices=("a-in", "p-n", "lambda-jn"))
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "format"):
        args.format = "csv" if args.command == "table" else "text"
    if not hasattr(args, "ascii"):
        args.ascii = False
    try:
        return args.func(args)
    except NcpError as exc:
        print(f"ncp: error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"ncp: error: {exc}", file=sys.stderr)
        return 2
    except KeyError as exc:
        print(f"ncp: error: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
