"""Recursive-descent parser for type, group and query expressions.

Grammar::

    query   := 'dim(' expr ')' | 'le(' expr ',' expr ')' | 'ev(' expr ',' group ')' | expr
    expr    := primary (('⊞' | '⊕') primary)*
    primary := typeLit
             | 'prod(' expr ',' expr ')' | 'osum(' expr ',' expr ')'
             | 'ominus(' NAT ',' expr ')' | 'add(' expr ',' NAT ')'
             | 'union(' expr ',' expr ')'
             | NAT '⊖' primary          # k ⊖ D  ==  ominus(k-1, D)
             | '(' expr ')'
    typeLit := '{' '0' ':' NAT (',' NAT ':' DEC)* (',' '*' ':' DEC)? '}'
    DEC     := NAT ('+' | '-')?
    group   := term ('+' term)*
    term    := atom ('^' NAT)?
    atom    := 'Z' | 'Q' | 'Z/' NAT | 'Zloc(' NAT ')' | 'Zinf(' NAT ')'

Only syntax is checked here; primality and decoration rules are enforced
when the tree is evaluated, so errors there can name the offending key.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union


class ParseError(Exception):
    def __init__(self, message: str, pos: int, text: str = ""):
        super().__init__(f"{message} at position {pos + 1}")
        self.message = message
        self.pos = pos
        self.text = text

    def caret(self) -> str:
        return f"{self.text}\n{' ' * self.pos}^"


@dataclass(frozen=True)
class Token:
    kind: str  # NAT, IDENT, PUNCT, END
    text: str
    pos: int


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_]*)|([{}(),:*+\-/^⊞⊕⊖]))")


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        if m.group(1) is not None:
            tokens.append(Token("NAT", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(Token("IDENT", m.group(2), m.start(2)))
        else:
            tokens.append(Token("PUNCT", m.group(3), m.start(3)))
        pos = m.end()
    tokens.append(Token("END", "", len(text)))
    return tokens


# --- AST ---------------------------------------------------------------

@dataclass(frozen=True)
class Node:
    span: Tuple[int, int]


@dataclass(frozen=True)
class Entry:
    key: int
    value: int
    sign: str
    pos: int


@dataclass(frozen=True)
class TypeLiteral(Node):
    at_zero: int
    entries: Tuple[Entry, ...]
    default: Optional[Entry]


@dataclass(frozen=True)
class GroupTerm:
    atom: str  # Z, Q, Zmod, Zloc, Zinf
    param: Optional[int]
    exponent: int
    pos: int


@dataclass(frozen=True)
class GroupLiteral(Node):
    terms: Tuple[GroupTerm, ...]


@dataclass(frozen=True)
class Prod(Node):
    a: Node
    b: Node


@dataclass(frozen=True)
class Osum(Node):
    a: Node
    b: Node


@dataclass(frozen=True)
class UnionBound(Node):
    a: Node
    b: Node


@dataclass(frozen=True)
class Ominus(Node):
    n: int
    a: Node


@dataclass(frozen=True)
class Add(Node):
    a: Node
    n: int


@dataclass(frozen=True)
class Dim(Node):
    a: Node


@dataclass(frozen=True)
class Le(Node):
    a: Node
    b: Node


@dataclass(frozen=True)
class Ev(Node):
    a: Node
    group: GroupLiteral


Ast = Union[TypeLiteral, GroupLiteral, Prod, Osum, UnionBound, Ominus, Add, Dim, Le, Ev]

_BINARY = {"prod": Prod, "osum": Osum, "union": UnionBound}
_GLYPHS = {"⊞": Prod, "⊕": Osum}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, message: str, tok: Optional[Token] = None):
        tok = tok or self.tok
        found = "end of input" if tok.kind == "END" else repr(tok.text)
        raise ParseError(f"{message}, found {found}", tok.pos, self.text)

    def advance(self) -> Token:
        tok = self.tok
        self.i += 1
        return tok

    def accept(self, text: str) -> Optional[Token]:
        if self.tok.kind != "END" and self.tok.text == text:
            return self.advance()
        return None

    def expect(self, text: str) -> Token:
        tok = self.accept(text)
        if tok is None:
            self.error(f"expected {text!r}")
        return tok

    def nat(self) -> int:
        if self.tok.kind != "NAT":
            self.error("expected a natural number")
        return int(self.advance().text)

    def end_of(self) -> int:
        prev = self.tokens[self.i - 1]
        return prev.pos + len(prev.text)

    def finish(self):
        if self.tok.kind != "END":
            self.error("unexpected trailing input")

    # query / expr

    def query(self) -> Node:
        tok = self.tok
        if tok.kind == "IDENT" and tok.text in ("dim", "le", "ev"):
            self.advance()
            self.expect("(")
            a = self.expr()
            if tok.text == "dim":
                self.expect(")")
                return Dim((tok.pos, self.end_of()), a)
            self.expect(",")
            if tok.text == "le":
                b = self.expr()
                self.expect(")")
                return Le((tok.pos, self.end_of()), a, b)
            g = self.group()
            self.expect(")")
            return Ev((tok.pos, self.end_of()), a, g)
        return self.expr()

    def expr(self) -> Node:
        start = self.tok.pos
        node = self.primary()
        while self.tok.kind == "PUNCT" and self.tok.text in _GLYPHS:
            cls = _GLYPHS[self.advance().text]
            rhs = self.primary()
            node = cls((start, self.end_of()), node, rhs)
        return node

    def primary(self) -> Node:
        tok = self.tok
        if tok.text == "{" and tok.kind == "PUNCT":
            return self.type_literal()
        if tok.text == "(" and tok.kind == "PUNCT":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if tok.kind == "NAT":
            k = self.nat()
            self.expect("⊖")
            if k < 1:
                self.error("left operand of ⊖ must be at least 1", tok)
            a = self.primary()
            return Ominus((tok.pos, self.end_of()), k - 1, a)
        if tok.kind == "IDENT":
            name = tok.text
            if name in _BINARY:
                self.advance()
                self.expect("(")
                a = self.expr()
                self.expect(",")
                b = self.expr()
                self.expect(")")
                return _BINARY[name]((tok.pos, self.end_of()), a, b)
            if name == "ominus":
                self.advance()
                self.expect("(")
                n = self.nat()
                self.expect(",")
                a = self.expr()
                self.expect(")")
                return Ominus((tok.pos, self.end_of()), n, a)
            if name == "add":
                self.advance()
                self.expect("(")
                a = self.expr()
                self.expect(",")
                n = self.nat()
                self.expect(")")
                return Add((tok.pos, self.end_of()), a, n)
        self.error("expected a type expression")

    def dec(self, key: int, pos: int) -> Entry:
        value = self.nat()
        sign = ""
        if self.tok.kind == "PUNCT" and self.tok.text in "+-":
            sign = self.advance().text
        return Entry(key, value, sign, pos)

    def type_literal(self) -> TypeLiteral:
        start = self.expect("{").pos
        zero = self.tok
        if zero.kind != "NAT" or zero.text != "0":
            self.error("type literal must start with '0:'")
        self.advance()
        self.expect(":")
        at_zero = self.nat()
        entries = []
        default = None
        while self.accept(","):
            tok = self.tok
            if self.accept("*"):
                self.expect(":")
                default = self.dec(-1, tok.pos)
                break
            key = self.nat()
            self.expect(":")
            entries.append(self.dec(key, tok.pos))
        self.expect("}")
        return TypeLiteral((start, self.end_of()), at_zero, tuple(entries), default)

    # groups

    def group(self) -> GroupLiteral:
        start = self.tok.pos
        terms = [self.term()]
        while self.accept("+"):
            terms.append(self.term())
        return GroupLiteral((start, self.end_of()), tuple(terms))

    def term(self) -> GroupTerm:
        tok = self.tok
        if tok.kind != "IDENT":
            self.error("expected a group atom")
        self.advance()
        param = None
        if tok.text == "Z":
            atom = "Z"
            if self.accept("/"):
                atom, param = "Zmod", self.nat()
        elif tok.text == "Q":
            atom = "Q"
        elif tok.text in ("Zloc", "Zinf"):
            atom = tok.text
            self.expect("(")
            param = self.nat()
            self.expect(")")
        else:
            self.error("expected Z, Q, Z/m, Zloc(p) or Zinf(p)", tok)
        exponent = 1
        if self.accept("^"):
            exponent = self.nat()
        return GroupTerm(atom, param, exponent, tok.pos)


def parse_expression(text: str) -> Node:
    p = _Parser(text)
    node = p.query()
    p.finish()
    return node


def parse_group_ast(text: str) -> GroupLiteral:
    p = _Parser(text)
    node = p.group()
    p.finish()
    return node


def parse_type_literal(text: str):
    """Parse and validate a single type literal."""
    from bockstein.cli.evaluate import build_type

    p = _Parser(text)
    node = p.type_literal()
    p.finish()
    return build_type(node, text)


def parse_group_text(text: str):
    from bockstein.cli.evaluate import build_group

    return build_group(parse_group_ast(text), text)
