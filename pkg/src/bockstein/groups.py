"""Finite direct sums of Z, Q, Z/m, Z_(p), Z_{p^inf} and their Bockstein bases.

Divisibility of a direct sum by ``p`` is divisibility of every summand,
which makes each membership rule decidable atom by atom.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import FrozenSet, Iterator, Optional, Tuple

from sympy.ntheory import factorint, isprime

from bockstein.dimtype import DimensionType, SigmaGroup, SigmaKind, eval_default, eval_sigma
from bockstein.errors import BocksteinError, NonPrimeKey, TrivialGroup


class AtomKind(enum.Enum):
    Z = "Z"
    Q = "Q"
    MOD = "Z/m"
    LOC = "Zloc"
    INF = "Zinf"


@dataclass(frozen=True)
class Atom:
    kind: AtomKind
    param: Optional[int] = None
    exponent: int = 1

    def __post_init__(self):
        if self.exponent < 1:
            raise BocksteinError(f"exponent must be positive, got {self.exponent}")
        if self.kind in (AtomKind.Z, AtomKind.Q):
            if self.param is not None:
                raise BocksteinError(f"{self.kind.value} takes no parameter")
        elif self.kind is AtomKind.MOD:
            if self.param is None or self.param < 2:
                raise BocksteinError(f"Z/m needs m >= 2, got {self.param!r}")
        elif self.param is None or not isprime(self.param):
            raise NonPrimeKey(f"{self.kind.value}({self.param}) needs a prime")

    def __str__(self) -> str:
        if self.kind is AtomKind.MOD:
            base = f"Z/{self.param}"
        elif self.kind in (AtomKind.LOC, AtomKind.INF):
            base = f"{self.kind.value}({self.param})"
        else:
            base = self.kind.value
        return base if self.exponent == 1 else f"{base}^{self.exponent}"


@dataclass(frozen=True)
class GroupExpr:
    atoms: Tuple[Atom, ...] = ()

    @classmethod
    def of(cls, *atoms: Atom) -> "GroupExpr":
        return cls(tuple(atoms))

    def __add__(self, other: "GroupExpr") -> "GroupExpr":
        return GroupExpr(self.atoms + other.atoms)

    def __iter__(self) -> Iterator[Atom]:
        return iter(self.atoms)

    @property
    def is_trivial(self) -> bool:
        return not self.atoms

    def __str__(self) -> str:
        return " + ".join(map(str, self.atoms)) or "0"


Z = GroupExpr.of(Atom(AtomKind.Z))
Q = GroupExpr.of(Atom(AtomKind.Q))
TRIVIAL = GroupExpr()


def zmod(m: int) -> GroupExpr:
    return GroupExpr.of(Atom(AtomKind.MOD, m))


def zloc(p: int) -> GroupExpr:
    return GroupExpr.of(Atom(AtomKind.LOC, p))


def zinf(p: int) -> GroupExpr:
    return GroupExpr.of(Atom(AtomKind.INF, p))


def parse_group(text: str) -> GroupExpr:
    from bockstein.cli.parser import parse_group_text

    return parse_group_text(text)


@dataclass(frozen=True)
class PrimeSet:
    """A finite set of primes, or (``cofinite``) the complement of one."""

    primes: FrozenSet[int] = frozenset()
    cofinite: bool = False

    def __contains__(self, p: int) -> bool:
        return (p in self.primes) != self.cofinite

    def __or__(self, other: "PrimeSet") -> "PrimeSet":
        if not self.cofinite and not other.cofinite:
            return PrimeSet(self.primes | other.primes)
        if self.cofinite and other.cofinite:
            return PrimeSet(self.primes & other.primes, True)
        cof, fin = (self, other) if self.cofinite else (other, self)
        return PrimeSet(cof.primes - fin.primes, True)

    def __bool__(self) -> bool:
        return self.cofinite or bool(self.primes)

    def sorted(self) -> list:
        return sorted(self.primes)

    def describe(self, name: str) -> list:
        if not self.cofinite:
            return [name.replace("p", str(p), 1) for p in self.sorted()]
        if not self.primes:
            return [f"{name} : all p"]
        excl = ", ".join(map(str, self.sorted()))
        return [f"{name} : p not in {{{excl}}}"]

    def to_json(self) -> dict:
        return {"primes": self.sorted(), "cofinite": self.cofinite}


@dataclass(frozen=True)
class SigmaSet:
    has_q: bool = False
    cyclic: PrimeSet = field(default_factory=PrimeSet)
    circle: PrimeSet = field(default_factory=PrimeSet)
    local: PrimeSet = field(default_factory=PrimeSet)

    def family(self, kind: SigmaKind) -> PrimeSet:
        return {SigmaKind.CYCLIC: self.cyclic, SigmaKind.CIRCLE: self.circle, SigmaKind.LOCAL: self.local}[kind]

    def __contains__(self, G: SigmaGroup) -> bool:
        if G.kind is SigmaKind.Q:
            return self.has_q
        return G.p in self.family(G.kind)

    @property
    def is_empty(self) -> bool:
        return not (self.has_q or self.cyclic or self.circle or self.local)

    def __str__(self) -> str:
        items = ["Q"] if self.has_q else []
        items += self.cyclic.describe("Z_p")
        items += self.circle.describe("Z_p^inf")
        items += self.local.describe("Z_(p)")
        return "{" + ", ".join(items) + "}"

    def to_json(self) -> dict:
        return {
            "Q": self.has_q,
            "Z_p": self.cyclic.to_json(),
            "Z_p^inf": self.circle.to_json(),
            "Z_(p)": self.local.to_json(),
        }


def sigma_basis(G: GroupExpr) -> SigmaSet:
    free = [a for a in G if a.kind in (AtomKind.Z, AtomKind.Q, AtomKind.LOC)]
    # G/Tor G fails p-divisibility exactly on a Z summand (every p) or Zloc(p).
    if any(a.kind is AtomKind.Z for a in free):
        local = PrimeSet(cofinite=True)
    else:
        local = PrimeSet(frozenset(a.param for a in free if a.kind is AtomKind.LOC))
    has_q = bool(free) and all(a.kind is AtomKind.Q for a in free)

    # p-Tor of Z/m is Z/p^k (never p-divisible); p-Tor of Zinf(p) is divisible.
    cyclic = set()
    for a in G:
        if a.kind is AtomKind.MOD:
            cyclic.update(factorint(a.param))
    circle = {a.param for a in G if a.kind is AtomKind.INF} - cyclic
    return SigmaSet(has_q, PrimeSet(frozenset(cyclic)), PrimeSet(frozenset(circle)), local)


def dim_wrt_group(D: DimensionType, G: GroupExpr) -> int:
    """``dim_G`` of any compactum with dimension type ``D``.

    Computed as the supremum over the Bockstein basis of ``G``; a
    cofinite family also meets infinitely many default primes.
    """
    S = sigma_basis(G)
    if S.is_empty:
        raise TrivialGroup(f"sigma({G}) is empty; dim_G is undefined for the trivial group")
    values = [D.at_zero] if S.has_q else []
    for kind in (SigmaKind.CYCLIC, SigmaKind.CIRCLE, SigmaKind.LOCAL):
        fam = S.family(kind)
        if fam.cofinite:
            values.append(eval_default(D, kind))
            values += [eval_sigma(D, SigmaGroup(kind, p)) for p in D.primes if p in fam]
        else:
            values += [eval_sigma(D, SigmaGroup(kind, p)) for p in fam.sorted()]
    return max(values)
