"""Command-line interface.

Subcommands: implicitize, locus, analyze, plot, catalog, serve. Canonical
polynomial text goes to stdout; diagnostics go to stderr as one line each.
Exit codes: 0 success, 1 usage or bad input, 2 computation failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import catalog
from .analysis import analyze_curve
from .elim import Deadline, implicitize
from .errors import CurveLabError, InputError
from .exprio import parse_polynomial
from .locus import antihyperbolism, compile_construction, hyperbolism
from .plotting import PlotScene, render_svg

_DEADLINE_DEFAULT = 60000
_SEED_DEFAULT = 20260826


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _parse_binding_value(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"binding value must be rational, got {text!r}") from None


def _parse_bind_csv(text):
    """Parse 'a=2,b=1' into {'a': Fraction(2), 'b': Fraction(1)}."""
    out = {}
    if not text:
        return out
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise InputError(f"bindings look like name=value, got {item!r}")
        name, _, value = item.partition("=")
        name = name.strip()
        if not name.isidentifier():
            raise InputError(f"binding name must be an identifier, got {name!r}")
        out[name] = _parse_binding_value(value.strip())
    return out


def _parse_param_options(items):
    """--param entries: bare names stay symbolic, name=value binds."""
    bindings = {}
    symbolic = []
    for item in items or []:
        if "=" in item:
            name, _, value = item.partition("=")
            if not name.isidentifier():
                raise InputError(f"parameter name must be an identifier, got {name!r}")
            bindings[name] = _parse_binding_value(value)
        else:
            if not item.isidentifier():
                raise InputError(f"parameter name must be an identifier, got {item!r}")
            symbolic.append(item)
    return bindings, symbolic


def _parse_line_option(text):
    """--line accepts 'x=<expr>' for a vertical line."""
    body = text.strip()
    if body.startswith("x") and "=" in body:
        head, _, expr = body.partition("=")
        if head.strip() == "x":
            return expr.strip()
    raise InputError(f"--line expects x=<rational or parameter>, got {text!r}")


def _load_point(source, bindings, line_expr, anti):
    """A catalog curve name (optionally transformed by a vertical line) or a
    construction-program file resolves to a parametric point."""
    if source in catalog.curve_names():
        if line_expr is not None:
            transform = antihyperbolism if anti else hyperbolism
            return transform(source, line_expr, bindings)
        if anti:
            raise InputError("--anti needs --line x=<expr>")
        return catalog.curve_point(source, bindings)
    if source in catalog.construction_names():
        if line_expr is not None or anti:
            raise InputError("--line/--anti apply to catalog curve names, not constructions")
        return compile_construction(catalog.construction_program(source), bindings)
    if os.path.exists(source):
        if line_expr is not None or anti:
            raise InputError("--line/--anti apply to catalog curve names, not program files")
        with open(source, "r", encoding="utf-8") as fh:
            return compile_construction(fh.read(), bindings)
    raise InputError(
        f"{source!r} is neither a catalog curve ({', '.join(catalog.curve_names())}) "
        "nor a readable construction file"
    )


def _check_deadline(ms):
    if not 100 <= ms <= 600000:
        raise InputError("deadline must be between 100 and 600000 milliseconds")
    return ms


def _cmd_implicitize(args):
    bindings, symbolic = _parse_param_options(args.param)
    line_expr = _parse_line_option(args.line) if args.line is not None else None
    point = _load_point(args.source, bindings, line_expr, args.anti)
    free = point.parameters()
    for name in symbolic:
        if name not in free:
            raise InputError(f"--param {name}: not a free parameter of this construction")
    _check_deadline(args.deadline_ms)
    result = implicitize(point, method=args.method,
                         deadline=Deadline(args.deadline_ms / 1000.0))
    if args.json:
        print(json.dumps(
            {"implicit": result.defining.canonical_text(), "provenance": result.provenance},
            indent=2,
        ))
    else:
        print(result.defining.canonical_text())
    return 0


def _cmd_locus(args):
    bindings = _parse_bind_csv(args.bind)
    if args.source in catalog.construction_names():
        point = compile_construction(catalog.construction_program(args.source), bindings)
    elif os.path.exists(args.source):
        with open(args.source, "r", encoding="utf-8") as fh:
            point = compile_construction(fh.read(), bindings)
    else:
        raise InputError(f"construction file not found: {args.source}")
    _check_deadline(args.deadline_ms)
    result = implicitize(point, method=args.method,
                         deadline=Deadline(args.deadline_ms / 1000.0))
    if args.json:
        print(json.dumps(
            {"implicit": result.defining.canonical_text(), "provenance": result.provenance},
            indent=2,
        ))
    else:
        print(result.defining.canonical_text())
    return 0


def _cmd_analyze(args):
    text = args.source
    if os.path.exists(text):
        with open(text, "r", encoding="utf-8") as fh:
            text = fh.read()
    F = parse_polynomial(text)
    bindings = _parse_bind_csv(args.bind)
    if bindings:
        from .poly import MultiPoly

        F = F.substitute({k: MultiPoly.const(v) for k, v in bindings.items()})
    report = analyze_curve(F, seed=args.seed)
    print(json.dumps(report, indent=2))
    return 0


def _cmd_plot(args):
    with open(args.scene, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    svg = render_svg(PlotScene.from_json(data))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return 0


def _cmd_catalog(args):
    if args.action == "list":
        for name in catalog.curve_names():
            doc = catalog.curve_document(name)
            params = ", ".join(
                f"{p.name}={p.default} [{p.min}..{p.max}]" for p in doc.params
            )
            print(f"{name}\t{params}" if params else name)
        for name in catalog.construction_names():
            print(f"{name}\t(construction)")
        return 0
    # show
    if args.name is None:
        raise InputError("catalog show needs a name")
    if args.name in catalog.curve_names():
        print(json.dumps(catalog.curve_document(args.name).to_json(), indent=2))
        return 0
    if args.name in catalog.construction_names():
        print(catalog.construction_source(args.name))
        return 0
    raise InputError(f"unknown catalog entry: {args.name!r}")


def _cmd_serve(args):
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="curvelab", description="Exact plane-curve laboratory")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("implicitize", help="implicit equation of a curve or transformed curve")
    p.add_argument("source", help="catalog curve name or construction-program file")
    p.add_argument("--line", default=None, help="vertical line x=<expr> for a hyperbolism")
    p.add_argument("--anti", action="store_true", help="use the inverse transform")
    p.add_argument("--param", action="append", default=[],
                   help="parameter binding name=value, or bare name to keep symbolic")
    p.add_argument("--method", default="auto",
                   choices=["auto", "groebner", "resultant", "both"])
    p.add_argument("--deadline-ms", type=int, default=_DEADLINE_DEFAULT)
    p.add_argument("--json", action="store_true", help="emit implicit + provenance as JSON")
    p.set_defaults(run=_cmd_implicitize)

    p = sub.add_parser("locus", help="implicit equation of a construction program's locus")
    p.add_argument("source", help="construction-program file")
    p.add_argument("--bind", default="", help="comma-separated bindings a=2,b=1")
    p.add_argument("--method", default="auto",
                   choices=["auto", "groebner", "resultant", "both"])
    p.add_argument("--deadline-ms", type=int, default=_DEADLINE_DEFAULT)
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=_cmd_locus)

    p = sub.add_parser("analyze", help="JSON report on an implicit curve")
    p.add_argument("source", help="polynomial text or a file containing it")
    p.add_argument("--bind", default="", help="comma-separated bindings a=2,b=1")
    p.add_argument("--seed", type=int, default=_SEED_DEFAULT)
    p.set_defaults(run=_cmd_analyze)

    p = sub.add_parser("plot", help="render a scene JSON file to SVG")
    p.add_argument("scene", help="scene JSON file")
    p.add_argument("-o", "--output", default=None, help="output SVG path (default stdout)")
    p.set_defaults(run=_cmd_plot)

    p = sub.add_parser("catalog", help="list or show catalog entries")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("name", nargs="?", default=None)
    p.set_defaults(run=_cmd_catalog)

    p = sub.add_parser("serve", help="start the HTTP JSON API")
    p.add_argument("--port", type=int, default=8787)
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(run=_cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1
    try:
        return args.run(args)
    except (InputError, FileNotFoundError, json.JSONDecodeError) as e:
        print(f"input error: {e}", file=sys.stderr)
        return 1
    except CurveLabError as e:
        print(f"computation error [{e.code}]: {e.message}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
