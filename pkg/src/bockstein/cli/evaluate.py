"""Evaluation of parsed expressions into output records."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from bockstein.decorated import DecoratedNumber
from bockstein.dimtype import DimensionType, add_scalar, boxplus, dim_of, le_type, make_type, ominus, oplus
from bockstein.errors import BocksteinError
from bockstein.groups import Atom, AtomKind, GroupExpr, dim_wrt_group
from bockstein.theorems import union_bound
from bockstein.cli import parser as P


class EvalError(Exception):
    """A validation or precondition failure inside a sub-expression."""

    def __init__(self, cause: BocksteinError, snippet: str):
        super().__init__(f"{type(cause).__name__}: {cause} (in {snippet!r})")
        self.cause = cause
        self.snippet = snippet


@dataclass(frozen=True)
class OutputRecord:
    kind: str  # value, type, verdict, report
    payload: Any

    def to_json(self) -> dict:
        return {"kind": self.kind, "value": self.payload}

    def to_text(self) -> str:
        if isinstance(self.payload, bool):
            return "true" if self.payload else "false"
        return str(self.payload)


def _snippet(node: P.Node, text: str) -> str:
    a, b = node.span
    return text[a:b] if text else type(node).__name__


def build_type(node: P.TypeLiteral, text: str = "") -> DimensionType:
    def dec(e: P.Entry) -> DecoratedNumber:
        try:
            return DecoratedNumber.parse(f"{e.value}{e.sign}")
        except BocksteinError as exc:
            key = "*" if e.key < 0 else str(e.key)
            raise type(exc)(f"key {key}: {exc}") from exc

    try:
        entries = [(e.key, dec(e)) for e in node.entries]
        keys = [k for k, _ in entries]
        if len(set(keys)) != len(keys):
            raise BocksteinError(f"duplicate prime key in {keys}")
        default = dec(node.default) if node.default is not None else None
        return make_type(node.at_zero, entries, default)
    except BocksteinError as exc:
        raise EvalError(exc, _snippet(node, text)) from exc


_ATOM_KINDS = {"Z": AtomKind.Z, "Q": AtomKind.Q, "Zmod": AtomKind.MOD, "Zloc": AtomKind.LOC, "Zinf": AtomKind.INF}


def build_group(node: P.GroupLiteral, text: str = "") -> GroupExpr:
    try:
        return GroupExpr(tuple(
            Atom(_ATOM_KINDS[t.atom], t.param, t.exponent) for t in node.terms
        ))
    except BocksteinError as exc:
        raise EvalError(exc, _snippet(node, text)) from exc


def _type(node: P.Node, text: str) -> DimensionType:
    try:
        if isinstance(node, P.TypeLiteral):
            return build_type(node, text)
        if isinstance(node, P.Prod):
            return boxplus(_type(node.a, text), _type(node.b, text))
        if isinstance(node, P.Osum):
            return oplus(_type(node.a, text), _type(node.b, text))
        if isinstance(node, P.UnionBound):
            return union_bound(_type(node.a, text), _type(node.b, text))
        if isinstance(node, P.Ominus):
            return ominus(node.n, _type(node.a, text))
        if isinstance(node, P.Add):
            return add_scalar(_type(node.a, text), node.n)
    except BocksteinError as exc:
        raise EvalError(exc, _snippet(node, text)) from exc
    raise TypeError(f"{type(node).__name__} is not a type expression")


def evaluate(ast: P.Node, text: str = "") -> OutputRecord:
    """Evaluate a query; ``text`` is the source, used to quote failing pieces."""
    if isinstance(ast, P.Dim):
        return OutputRecord("value", dim_of(_type(ast.a, text)))
    if isinstance(ast, P.Le):
        return OutputRecord("value", le_type(_type(ast.a, text), _type(ast.b, text)))
    if isinstance(ast, P.Ev):
        D = _type(ast.a, text)
        G = build_group(ast.group, text)
        try:
            return OutputRecord("value", dim_wrt_group(D, G))
        except BocksteinError as exc:
            raise EvalError(exc, _snippet(ast, text)) from exc
    return OutputRecord("type", str(_type(ast, text)))


def evaluate_text(text: str) -> OutputRecord:
    return evaluate(P.parse_expression(text), text)
