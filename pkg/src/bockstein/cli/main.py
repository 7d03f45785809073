"""Command-line entry point.

Exit codes: 0 success (any verdict, including open), 2 parse error,
3 validation or precondition error, 4 verification found violations.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from typing import List, Optional, Sequence

from bockstein.classifier import IntersectionQuery, Outcome, atlas, classify, classify_types, tuple_realizable
from bockstein.cli.evaluate import EvalError, evaluate
from bockstein.cli.parser import ParseError, parse_expression, parse_type_literal
from bockstein.errors import BocksteinError
from bockstein.theorems import UniverseConfig, verify_algebra, verify_typeminus

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_VIOLATIONS = 4


def _primes(text: str) -> List[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _nat(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)

    ap = argparse.ArgumentParser(
        prog="bockstein",
        description="Dimension types, Bockstein evaluation and stable-intersection verdicts.",
        parents=[fmt],
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[fmt], help="evaluate a type, dim, le or ev expression")
    p.add_argument("expr")

    p = sub.add_parser("classify", parents=[fmt], help="stable-intersection verdict from dimensions")
    p.add_argument("--dim-x", type=_nat, required=True)
    p.add_argument("--dim-y", type=_nat, required=True)
    p.add_argument("--dim-xy", type=_nat, required=True)
    p.add_argument("-n", type=_nat, required=True)

    p = sub.add_parser("classify-types", parents=[fmt], help="verdict from two dimension types")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("-n", type=_nat, required=True)

    p = sub.add_parser("verify", parents=[fmt], help="exhaustive law check over a bounded universe")
    p.add_argument("suite", choices=("typeminus", "algebra"))
    p.add_argument("--primes", type=_primes, default=[])
    p.add_argument("--max", type=_nat, required=True)

    p = sub.add_parser("atlas", parents=[fmt], help="verdicts for every feasible tuple up to max-n")
    p.add_argument("--max-n", type=_nat, required=True)

    p = sub.add_parser("realizable", parents=[fmt], help="search dimension types for a dimension triple")
    p.add_argument("--dim-x", type=_nat, required=True)
    p.add_argument("--dim-y", type=_nat, required=True)
    p.add_argument("--dim-xy", type=_nat, required=True)
    p.add_argument("--primes", type=_primes, default=[])
    p.add_argument("--max", type=_nat, required=True)
    return ap


class _Out:
    def __init__(self, fmt: str, stdout, stderr):
        self.fmt = fmt
        self.stdout = stdout
        self.stderr = stderr

    def emit(self, text: str, data: dict):
        if self.fmt == "json":
            self.stdout.write(json.dumps(data, sort_keys=True) + "\n")
        else:
            self.stdout.write(text + "\n")

    def error(self, code: int, kind: str, message: str, detail: str = ""):
        self.stderr.write(f"error: {message}\n")
        if detail:
            self.stderr.write(detail + "\n")
        if self.fmt == "json":
            self.stdout.write(json.dumps({"error": kind, "message": message}, sort_keys=True) + "\n")
        return code


def _verdict_text(v, dims=None) -> str:
    attr = ",".join(t.value for t in v.attribution)
    head = v.outcome.value + (f" [{attr}]" if attr else "")
    if dims is not None:
        head += f"  dims={dims[0]},{dims[1]},{dims[2]}"
    return f"{head}\n{v.note}"


def _cmd_eval(args, out: _Out) -> int:
    ast = parse_expression(args.expr)
    rec = evaluate(ast, args.expr)
    out.emit(rec.to_text(), {"kind": rec.kind, "expr": args.expr, "value": rec.payload})
    return EXIT_OK


def _cmd_classify(args, out: _Out) -> int:
    q = IntersectionQuery(args.dim_x, args.dim_y, args.dim_xy, args.n)
    v = classify(q)
    out.emit(_verdict_text(v), {"kind": "verdict", "n": args.n, **v.to_json()})
    if v.outcome is Outcome.INFEASIBLE:
        out.stderr.write(f"error: {v.note}\n")
        return EXIT_INVALID
    return EXIT_OK


def _cmd_classify_types(args, out: _Out) -> int:
    DX = parse_type_literal(args.x)
    DY = parse_type_literal(args.y)
    v, dims = classify_types(DX, DY, args.n)
    data = {"kind": "verdict", "n": args.n, "x": str(DX), "y": str(DY), **v.to_json()}
    out.emit(_verdict_text(v, dims), data)
    return EXIT_OK


def _cmd_verify(args, out: _Out) -> int:
    cfg = UniverseConfig(tuple(args.primes), args.max)
    report = (verify_typeminus if args.suite == "typeminus" else verify_algebra)(cfg)
    data = {"kind": "report", "primes": list(cfg.primes), "max": cfg.max_value, **report.to_json()}
    out.emit(report.to_text(), data)
    return EXIT_OK if report.passed else EXIT_VIOLATIONS


def _cmd_atlas(args, out: _Out) -> int:
    rows = atlas(args.max_n)
    if out.fmt == "json":
        data = {
            "kind": "atlas",
            "max_n": args.max_n,
            "rows": [
                {"dim_x": q.dim_x, "dim_y": q.dim_y, "dim_xy": q.dim_xy, "n": q.n,
                 "outcome": v.outcome.value, "attribution": [t.value for t in v.attribution]}
                for q, v in rows
            ],
        }
        out.emit("", data)
    else:
        lines = ["dim_x dim_y dim_xy n outcome attribution"]
        for q, v in rows:
            attr = ",".join(t.value for t in v.attribution) or "-"
            lines.append(f"{q.dim_x} {q.dim_y} {q.dim_xy} {q.n} {v.outcome.value} {attr}")
        out.emit("\n".join(lines), {})
    return EXIT_OK


def _cmd_realizable(args, out: _Out) -> int:
    cfg = UniverseConfig(tuple(args.primes), args.max)
    found, witness = tuple_realizable(args.dim_x, args.dim_y, args.dim_xy, cfg)
    data = {
        "kind": "value",
        "dims": [args.dim_x, args.dim_y, args.dim_xy],
        "value": found,
        "witness": [str(witness[0]), str(witness[1])] if witness else None,
    }
    text = "true" if found else "false"
    if witness:
        text += f"\nX: {witness[0]}\nY: {witness[1]}"
    out.emit(text, data)
    return EXIT_OK


_COMMANDS = {
    "eval": _cmd_eval,
    "classify": _cmd_classify,
    "classify-types": _cmd_classify_types,
    "verify": _cmd_verify,
    "atlas": _cmd_atlas,
    "realizable": _cmd_realizable,
}


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    ap = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_PARSE
    out = _Out(getattr(args, "format", "text"), stdout, stderr)
    try:
        return _COMMANDS[args.command](args, out)
    except ParseError as exc:
        return out.error(EXIT_PARSE, "parse", str(exc), exc.caret())
    except EvalError as exc:
        return out.error(EXIT_INVALID, type(exc.cause).__name__, str(exc))
    except BocksteinError as exc:
        return out.error(EXIT_INVALID, type(exc).__name__, str(exc))


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
