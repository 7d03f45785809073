"""Decorated natural numbers ``n-``, ``n``, ``n+`` and their algebra.

A decoration records how a dimension type behaves at a prime: ``+`` and
``-`` for the two kinds of singularity, no decoration for regularity.
Decorated numbers are totally ordered by

    ... < n- < n < n+ < (n+1)- < ...
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field

from bockstein.errors import InvalidDecoration


class Decoration(enum.Enum):
    MINUS = -1
    NONE = 0
    PLUS = 1

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]

    def __neg__(self) -> "Decoration":
        return neg_decoration(self)


_SYMBOLS = {Decoration.MINUS: "-", Decoration.NONE: "", Decoration.PLUS: "+"}
_FROM_SYMBOL = {v: k for k, v in _SYMBOLS.items()}


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


_NEG = {Decoration.MINUS: Decoration.PLUS, Decoration.NONE: Decoration.NONE, Decoration.PLUS: Decoration.MINUS}
_SIGN = {Decoration.MINUS: -1, Decoration.NONE: 0, Decoration.PLUS: 1}


def neg_decoration(eps: Decoration) -> Decoration:
    """Swap ``+`` and ``-``; the empty decoration is fixed."""
    return _NEG[eps]


def tensor(e1: Decoration, e2: Decoration) -> Decoration:
    """Commutative product of decorations.

    The empty decoration is the identity, every decoration is idempotent,
    and a ``+`` meeting a ``-`` gives ``-``.
    """
    if e1 is Decoration.NONE:
        return e2
    if e2 is Decoration.NONE or e1 is e2:
        return e1
    return Decoration.MINUS


_TEXT_RE = re.compile(r"\s*(\d+)\s*([+-]?)\s*$")


@dataclass(frozen=True, slots=True)
class DecoratedNumber:
    """A finite natural number carrying a decoration.

    ``0`` is never decorated and ``1`` never carries ``-``; such values
    raise :class:`InvalidDecoration` rather than being normalized.
    """

    value: int
    decoration: Decoration = Decoration.NONE
    rank: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if isinstance(self.value, bool) or not isinstance(self.value, int):
            raise TypeError(f"value must be int, got {self.value!r}")
        if self.value < 0:
            raise InvalidDecoration(f"negative value {self.value}")
        if self.value == 0 and self.decoration is not Decoration.NONE:
            raise InvalidDecoration(f"0{self.decoration.symbol}: 0 has no decoration")
        if self.value == 1 and self.decoration is Decoration.MINUS:
            raise InvalidDecoration("1-: 1 does not carry the '-' decoration")
        # Order-embedding into the integers: n- -> 3n-1, n -> 3n, n+ -> 3n+1.
        object.__setattr__(self, "rank", 3 * self.value + _SIGN[self.decoration])

    @classmethod
    def parse(cls, text: str) -> "DecoratedNumber":
        m = _TEXT_RE.match(text)
        if m is None:
            raise ValueError(f"not a decorated number: {text!r}")
        return cls(int(m.group(1)), _FROM_SYMBOL[m.group(2)])

    @property
    def is_decorated(self) -> bool:
        return self.decoration is not Decoration.NONE

    def __str__(self) -> str:
        return f"{self.value}{self.decoration.symbol}"

    def __lt__(self, other: "DecoratedNumber") -> bool:
        return self.rank < other.rank

    def __le__(self, other: "DecoratedNumber") -> bool:
        return self.rank <= other.rank

    def __gt__(self, other: "DecoratedNumber") -> bool:
        return self.rank > other.rank

    def __ge__(self, other: "DecoratedNumber") -> bool:
        return self.rank >= other.rank

    def shift(self, n: int) -> "DecoratedNumber":
        return DecoratedNumber(self.value + n, self.decoration)


def compare_decorated(a: DecoratedNumber, b: DecoratedNumber) -> Ordering:
    if a.value != b.value:
        return Ordering.LESS if a.value < b.value else Ordering.GREATER
    da, db = _SIGN[a.decoration], _SIGN[b.decoration]
    if da == db:
        return Ordering.EQUAL
    return Ordering.LESS if da < db else Ordering.GREATER


def box_add(a: DecoratedNumber, b: DecoratedNumber) -> DecoratedNumber:
    """Per-prime rule of the product operation: ``(n+m)^(e1 (x) e2)``."""
    return DecoratedNumber(a.value + b.value, tensor(a.decoration, b.decoration))


def circle_add(a: DecoratedNumber, b: DecoratedNumber) -> DecoratedNumber:
    """Per-prime rule of the union operation: ``(n+m)^-((-e1) (x) (-e2))``."""
    eps = _NEG[tensor(_NEG[a.decoration], _NEG[b.decoration])]
    return DecoratedNumber(a.value + b.value, eps)
