"""
Command-line interface.

    mpolykit mpoly GRAPH
    mpolykit index GRAPH --index NAME [--alpha K] [--method direct|operator|both]
    mpolykit gen {D,C,E} N  |  mpolykit gen G P Q   [--out FILE]
    mpolykit table2 {D,C,E} N
    mpolykit gutman SYSTEM
    mpolykit verify [--max-n N] [--max-pq P]

GRAPH and SYSTEM may be ``-`` for standard input. Every subcommand accepts
``--json``; those printing rationals also accept ``--decimal D``.

Exit status: 0 success, 1 mismatch, 2 usage or parse error, 3 computation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Callable, Sequence

from . import errors
from .bipoly import format_fraction
from .generators import FAMILIES, LatticeParams, bethe_c, bethe_d, bethe_e, lattice
from .graph import Graph, format_edge_list, m_polynomial, parse_edge_list
from .gutman import parse_system, solve
from .indices import INDEX_NAMES, PARAMETRIC, compute_direct, compute_via_operators, get_index
from .verify import run_all, table2_rows

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_COMPUTE = 0, 1, 2, 3

USAGE_ERRORS = (errors.ParseError, errors.GraphError, errors.InvalidParameter, errors.UnknownIndex,
                errors.OutOfRange, errors.UnsupportedIndex, errors.UnknownVertex)
COMPUTE_ERRORS = (errors.DivergentIntegral, errors.ExponentError, errors.UndefinedWeight,
                  errors.InvalidAlpha)


class Output:
    """Collects either text lines or one JSON document for a subcommand."""

    def __init__(self, args: argparse.Namespace, stream) -> None:
        self.as_json = getattr(args, "json", False)
        self.digits = getattr(args, "decimal", None)
        self.stream = stream

    def num(self, x: Fraction) -> str:
        if self.digits is None:
            return format_fraction(x)
        with localcontext() as ctx:
            ctx.prec = max(50, len(str(x.numerator)) + len(str(x.denominator)) + self.digits + 10)
            d = Decimal(x.numerator) / Decimal(x.denominator)
            return str(d.quantize(Decimal(1).scaleb(-self.digits), rounding=ROUND_HALF_EVEN))

    def emit(self, text: str, payload: dict) -> None:
        if self.as_json:
            self.stream.write(json.dumps(payload, sort_keys=True) + "\n")
        else:
            self.stream.write(text if text.endswith("\n") else text + "\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="ascii") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise errors.ParseError(f"cannot read {path}: {exc}") from None


def _load_graph(path: str) -> Graph:
    return parse_edge_list(_read(path))


def cmd_mpoly(args, out: Output) -> int:
    g = _load_graph(args.graph)
    p = m_polynomial(g)
    out.emit(str(p), {"mpoly": p.to_records(), "text": str(p),
                      "vertices": g.order(), "edges": g.size()})
    return EXIT_OK


def cmd_index(args, out: Output) -> int:
    if args.alpha is not None and args.index not in PARAMETRIC:
        raise errors.InvalidParameter(f"--alpha only applies to {', '.join(PARAMETRIC)}")
    idx = get_index(args.index, args.alpha)
    p = m_polynomial(_load_graph(args.graph))
    payload: dict = {"index": idx.label}
    if args.method == "direct":
        v = compute_direct(p, idx).value
        out.emit(out.num(v), {**payload, "direct": format_fraction(v)})
        return EXIT_OK
    if args.method == "operator":
        v = compute_via_operators(p, idx).value
        out.emit(out.num(v), {**payload, "operator": format_fraction(v)})
        return EXIT_OK
    a = compute_direct(p, idx).value
    b = compute_via_operators(p, idx).value
    sign = "=" if a == b else "!="
    out.emit(f"{out.num(a)} (direct) {sign} {out.num(b)} (operator)",
             {**payload, "direct": format_fraction(a), "operator": format_fraction(b), "agree": a == b})
    return EXIT_OK if a == b else EXIT_MISMATCH


def _int(s: str, what: str) -> int:
    try:
        return int(s, 10)
    except ValueError:
        raise errors.InvalidParameter(f"{what} must be an integer, got {s!r}") from None


def cmd_gen(args, out: Output) -> int:
    fam = args.family
    header = []
    if fam in FAMILIES:
        if len(args.params) != 1:
            raise errors.InvalidParameter(f"family {fam} takes one parameter n")
        n = _int(args.params[0], "n")
        if fam == "D":
            rg = bethe_d(n)
            g = rg.graph
            header = [f"D_{n}", f"root {rg.root}"]
        else:
            g = bethe_c(n) if fam == "C" else bethe_e(n)
            header = [f"{fam}_{n}"]
    elif fam == "G":
        if len(args.params) != 2:
            raise errors.InvalidParameter("family G takes two parameters p q")
        params = LatticeParams(_int(args.params[0], "p"), _int(args.params[1], "q"))
        g = lattice(params)
        header = [f"G({params.p},{params.q})"]
    else:
        raise errors.InvalidParameter(f"unknown family {fam!r}; expected D, C, E or G")
    text = format_edge_list(g, header)
    payload = {"family": fam, "params": args.params, "vertices": sorted(g.vertices),
               "edges": [list(e) for e in g.sorted_edges()]}
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(json.dumps(payload, sort_keys=True) + "\n" if out.as_json else text)
        return EXIT_OK
    if out.as_json:
        out.emit("", payload)
    else:
        out.stream.write(text)
    return EXIT_OK


def cmd_table2(args, out: Output) -> int:
    if args.family not in FAMILIES:
        raise errors.InvalidParameter(f"unknown family {args.family!r}")
    rows = table2_rows(args.family, args.n)
    width = max(len(name) for name, _, _ in rows)
    lines = [f"{name:<{width}}  formula {out.num(f)}  graph {out.num(v)}  {'match' if f == v else 'MISMATCH'}"
             for name, f, v in rows]
    payload = {"family": args.family, "n": args.n,
               "rows": [{"index": name, "formula": format_fraction(f), "graph": format_fraction(v),
                         "match": f == v} for name, f, v in rows]}
    out.emit("\n".join(lines), payload)
    return EXIT_OK if all(f == v for _, f, v in rows) else EXIT_MISMATCH


def cmd_gutman(args, out: Output) -> int:
    sol = solve(parse_system(_read(args.system)))
    payload = {"status": sol.status, "reason": sol.reason, "free": sol.free_variables,
               "values": {k: format_fraction(v) for k, v in sol.values.items()}}
    out.emit(sol.format(), payload)
    return EXIT_OK


def cmd_verify(args, out: Output) -> int:
    if args.max_n < 1 or args.max_pq < 1:
        raise errors.InvalidParameter("--max-n and --max-pq must be positive")
    checks = run_all(args.max_n, args.max_pq)
    failed = [c for c in checks if not c.ok]
    summary = f"{len(checks) - len(failed)}/{len(checks)} checks passed"
    out.emit("\n".join([c.line() for c in checks] + [summary]),
             {"checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks],
              "passed": len(checks) - len(failed), "total": len(checks)})
    return EXIT_MISMATCH if failed else EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    numeric = argparse.ArgumentParser(add_help=False)
    numeric.add_argument("--decimal", type=int, metavar="D",
                         help="print rationals rounded half-even to D digits")

    parser = _Parser(prog="mpolykit", description="M-polynomials and bond incident degree indices")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("mpoly", parents=[common], help="print the M-polynomial of a graph")
    p.add_argument("graph", help="edge-list file or - for stdin")
    p.set_defaults(func=cmd_mpoly)

    p = sub.add_parser("index", parents=[common, numeric], help="evaluate a BID index")
    p.add_argument("graph")
    p.add_argument("--index", required=True, choices=INDEX_NAMES)
    p.add_argument("--alpha", type=int)
    p.add_argument("--method", choices=("direct", "operator", "both"), default="direct")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("gen", parents=[common], help="emit a generated graph as an edge list")
    p.add_argument("family", help="D, C, E or G")
    p.add_argument("params", nargs="+", help="n for D/C/E; p q for G")
    p.add_argument("--out", help="write to FILE instead of stdout")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("table2", parents=[common, numeric],
                       help="closed-form indices of a Bethe cactus against the generated graph")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_table2)

    p = sub.add_parser("gutman", parents=[common], help="solve a degree bookkeeping system")
    p.add_argument("system", help="system file or - for stdin")
    p.set_defaults(func=cmd_gutman)

    p = sub.add_parser("verify", parents=[common], help="run the built-in oracle suite")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--max-pq", type=int, default=6)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    out = Output(args, stdout)
    handler: Callable[[argparse.Namespace, Output], int] = args.func
    try:
        return handler(args, out)
    except USAGE_ERRORS as exc:
        stderr.write(f"mpolykit {args.command}: {_msg(exc)}\n")
        return EXIT_USAGE
    except COMPUTE_ERRORS as exc:
        stderr.write(f"mpolykit {args.command}: {type(exc).__name__}: {_msg(exc)}\n")
        return EXIT_COMPUTE


def _msg(exc: Exception) -> str:
    # KeyError subclasses repr their argument
    return str(exc.args[0]) if exc.args else type(exc).__name__


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
