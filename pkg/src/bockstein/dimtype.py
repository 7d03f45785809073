"""Dimension types: decorated functions on the Bockstein basis.

A dimension type is stored as ``D(Q)`` (``at_zero``), finitely many
exceptional primes with their decorated values, and a decorated default
used at every other prime.  Every operation acts prime by prime, so this
eventually-constant encoding is closed under all of them.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Optional, Union

from sympy.ntheory import isprime as _isprime

from bockstein.decorated import DecoratedNumber, Decoration, box_add, circle_add
from bockstein.errors import BocksteinError, NonPrimeKey, PreconditionDim, RegularMismatch, ZeroRule

isprime = functools.lru_cache(maxsize=4096)(_isprime)

DecLike = Union[DecoratedNumber, int, str]


class SigmaKind(enum.Enum):
    Q = "Q"
    CYCLIC = "Z_p"
    CIRCLE = "Z_p^inf"
    LOCAL = "Z_(p)"


@dataclass(frozen=True)
class SigmaGroup:
    """One member of the Bockstein basis: Q, Z_p, Z_{p^inf} or Z_(p)."""

    kind: SigmaKind
    p: Optional[int] = None

    def __post_init__(self):
        if self.kind is SigmaKind.Q:
            if self.p is not None:
                raise ValueError("Q takes no prime")
        elif self.p is None or not isprime(self.p):
            raise NonPrimeKey(f"{self.kind.value} needs a prime, got {self.p!r}")

    @classmethod
    def rationals(cls) -> "SigmaGroup":
        return cls(SigmaKind.Q)

    @classmethod
    def cyclic(cls, p: int) -> "SigmaGroup":
        return cls(SigmaKind.CYCLIC, p)

    @classmethod
    def circle(cls, p: int) -> "SigmaGroup":
        return cls(SigmaKind.CIRCLE, p)

    @classmethod
    def local(cls, p: int) -> "SigmaGroup":
        return cls(SigmaKind.LOCAL, p)

    def __str__(self) -> str:
        if self.kind is SigmaKind.Q:
            return "Q"
        return self.kind.value.replace("p", str(self.p), 1)


def _coerce(v: DecLike) -> DecoratedNumber:
    if isinstance(v, DecoratedNumber):
        return v
    if isinstance(v, bool):
        raise TypeError("bool is not a decorated number")
    if isinstance(v, int):
        return DecoratedNumber(v)
    if isinstance(v, str):
        return DecoratedNumber.parse(v)
    raise TypeError(f"cannot read a decorated number from {v!r}")


def _check_value(where: str, at_zero: int, d: DecoratedNumber) -> None:
    if not d.is_decorated and d.value != at_zero:
        raise RegularMismatch(
            f"{where}: undecorated value {d.value} must equal D(0)={at_zero}"
        )
    if at_zero == 0 and (d.value != 0 or d.is_decorated):
        raise ZeroRule(f"{where}: D(0)=0 forces D=0, got {d}")


class DimensionType:
    """A valid dimension type in canonical form.

    Exceptional entries equal to the default are dropped at construction,
    so structural equality coincides with equality of functions on the
    basis.  Instances are immutable and hashable.
    """

    __slots__ = ("at_zero", "entries", "default", "_lookup", "_hash")

    def __init__(
        self,
        at_zero: int,
        entries: Union[Mapping[int, DecLike], Iterable[tuple], None] = None,
        default: Optional[DecLike] = None,
    ):
        if isinstance(at_zero, bool) or not isinstance(at_zero, int) or at_zero < 0:
            raise ValueError(f"D(0) must be a natural number, got {at_zero!r}")
        items = entries.items() if isinstance(entries, Mapping) else (entries or ())
        dflt = DecoratedNumber(at_zero) if default is None else _coerce(default)
        _check_value("*", at_zero, dflt)
        lookup = {}
        for p, v in items:
            if isinstance(p, bool) or not isinstance(p, int) or not isprime(p):
                raise NonPrimeKey(f"key {p!r} is not a prime")
            if p in lookup:
                raise BocksteinError(f"duplicate key {p}")
            d = _coerce(v)
            _check_value(str(p), at_zero, d)
            lookup[p] = d
        lookup = {p: d for p, d in lookup.items() if d != dflt}
        setter = object.__setattr__
        setter(self, "at_zero", at_zero)
        setter(self, "default", dflt)
        setter(self, "entries", tuple(sorted(lookup.items())))
        setter(self, "_lookup", lookup)
        setter(self, "_hash", hash((at_zero, self.entries, dflt)))

    def __setattr__(self, name, value):
        raise AttributeError("DimensionType is immutable")

    def __reduce__(self):
        return (DimensionType, (self.at_zero, self.entries, self.default))

    def at(self, p: int) -> DecoratedNumber:
        """The decorated value ``D(p)``."""
        return self._lookup.get(p, self.default)

    @property
    def primes(self) -> tuple:
        return tuple(p for p, _ in self.entries)

    def __eq__(self, other):
        if not isinstance(other, DimensionType):
            return NotImplemented
        return (
            self._hash == other._hash
            and self.at_zero == other.at_zero
            and self.entries == other.entries
            and self.default == other.default
        )

    def __hash__(self):
        return self._hash

    def __str__(self) -> str:
        parts = [f"0:{self.at_zero}"]
        parts += [f"{p}:{d}" for p, d in self.entries]
        parts.append(f"*:{self.default}")
        return "{" + ", ".join(parts) + "}"

    def __repr__(self) -> str:
        return f"DimensionType({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "DimensionType":
        """Read the canonical literal ``{0:a, p:v, ..., *:v}``."""
        from bockstein.cli.parser import parse_type_literal

        return parse_type_literal(text)


def make_type(
    at_zero: int,
    entries: Union[Mapping[int, DecLike], Iterable[tuple], None] = None,
    default: Optional[DecLike] = None,
) -> DimensionType:
    """Validate and canonicalize; an omitted default means regular elsewhere."""
    return DimensionType(at_zero, entries, default)


def const_type(n: int) -> DimensionType:
    """The type sending every basis group to ``n`` (that of R^n)."""
    return DimensionType(n)


def _eval(at_zero: int, d: DecoratedNumber, kind: SigmaKind) -> int:
    if kind is SigmaKind.CYCLIC:
        return d.value
    circle = d.value - 1 if d.decoration is Decoration.MINUS else d.value
    if kind is SigmaKind.CIRCLE:
        return circle
    # kind is LOCAL
    if d.decoration is Decoration.NONE:
        return at_zero
    return max(at_zero, circle + 1)


def eval_sigma(D: DimensionType, G: SigmaGroup) -> int:
    if G.kind is SigmaKind.Q:
        return D.at_zero
    return _eval(D.at_zero, D.at(G.p), G.kind)


def eval_default(D: DimensionType, kind: SigmaKind) -> int:
    """Value on ``kind`` at every prime outside the exceptional set."""
    if kind is SigmaKind.Q:
        return D.at_zero
    return _eval(D.at_zero, D.default, kind)


def dim_of(D: DimensionType) -> int:
    """``dim D``, the supremum over the whole basis.

    At each prime Z_(p) dominates Z_p and Z_{p^inf}, so only the local
    groups and Q need to be inspected.
    """
    best = max(D.at_zero, _eval(D.at_zero, D.default, SigmaKind.LOCAL))
    for _, d in D.entries:
        best = max(best, _eval(D.at_zero, d, SigmaKind.LOCAL))
    return best


def le_type(D1: DimensionType, D2: DimensionType) -> bool:
    """Pointwise order: ``D1(p) <= D2(p)`` at 0, at every prime."""
    if D1.at_zero > D2.at_zero or D1.default.rank > D2.default.rank:
        return False
    for p in set(D1._lookup).union(D2._lookup):
        if D1.at(p).rank > D2.at(p).rank:
            return False
    return True


def _pointwise(
    D1: DimensionType,
    D2: DimensionType,
    op: Callable[[DecoratedNumber, DecoratedNumber], DecoratedNumber],
) -> DimensionType:
    keys = set(D1._lookup).union(D2._lookup)
    return DimensionType(
        D1.at_zero + D2.at_zero,
        {p: op(D1.at(p), D2.at(p)) for p in keys},
        op(D1.default, D2.default),
    )


def boxplus(D1: DimensionType, D2: DimensionType) -> DimensionType:
    """Product-type operation; the dimension type of ``X x Y``."""
    return _pointwise(D1, D2, box_add)


def oplus(D1: DimensionType, D2: DimensionType) -> DimensionType:
    """Union-type operation, the ``(-)`` conjugate of :func:`boxplus`."""
    return _pointwise(D1, D2, circle_add)


def add_scalar(D: DimensionType, n: int) -> DimensionType:
    if n < 0:
        raise ValueError(f"shift must be a natural number, got {n}")
    return DimensionType(
        D.at_zero + n,
        {p: d.shift(n) for p, d in D.entries},
        D.default.shift(n),
    )


def _complement(n: int, d: DecoratedNumber) -> DecoratedNumber:
    return DecoratedNumber(n + 1 - d.value, -d.decoration)


def ominus(n: int, D: DimensionType) -> DimensionType:
    """The complementary type ``n+1 (-) D``; requires ``n >= dim D``.

    Note the argument is ``n``, not ``n + 1``.
    """
    dim = dim_of(D)
    if n < dim:
        raise PreconditionDim(n, dim)
    return DimensionType(
        n + 1 - D.at_zero,
        {p: _complement(n, d) for p, d in D.entries},
        _complement(n, D.default),
    )
