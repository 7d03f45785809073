"""Stable-intersection status of a pair of compacta in R^n.

The decision uses only the three covering dimensions ``dim X``, ``dim Y``,
``dim X x Y`` and the ambient ``n``:

* ``dim X x Y >= n``: the pair admits a stable intersection (Dranishnikov-West);
* ``(3, 3, 4, 5)``: undecided;
* otherwise no stable intersection, attributed to every named theorem whose
  hypotheses hold, or to the aggregate statement when none does.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Tuple

from bockstein.dimtype import DimensionType, boxplus, dim_of
from bockstein.errors import InfeasibleQuery, OddAmbient
from bockstein.theorems import UniverseConfig, enumerate_types

OPEN_CASE = (3, 3, 4, 5)


class Outcome(enum.Enum):
    STABLE = "stable"
    NO_STABLE = "nostable"
    OPEN = "open"
    INFEASIBLE = "infeasible"


class Theorem(enum.Enum):
    DRANISHNIKOV_WEST = "DranishnikovWest"
    COMPLEMENTARY = "Complementary"
    CODIM3 = "Codim3"
    MAIN_N6 = "MainN6"
    AGGREGATE = "Aggregate"


@dataclass(frozen=True)
class IntersectionQuery:
    dim_x: int
    dim_y: int
    dim_xy: int
    n: int

    @property
    def feasible(self) -> bool:
        if min(self.dim_x, self.dim_y, self.dim_xy) < 0 or self.n < 1:
            return False
        return max(self.dim_x, self.dim_y) <= self.dim_xy <= self.dim_x + self.dim_y

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.dim_x, self.dim_y, self.dim_xy, self.n)


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    attribution: Tuple[Theorem, ...] = ()
    note: str = ""
    dims: Optional[Tuple[int, int, int]] = field(default=None, compare=False)

    def to_json(self) -> dict:
        return {
            "outcome": self.outcome.value,
            "attribution": [t.value for t in self.attribution],
            "dims": list(self.dims) if self.dims is not None else None,
            "note": self.note,
        }


def classify(q: IntersectionQuery) -> Verdict:
    dx, dy, dxy, n = q.as_tuple()
    dims = (dx, dy, dxy)
    if not q.feasible:
        return Verdict(
            Outcome.INFEASIBLE,
            note=f"need max(dim X, dim Y) <= dim XxY <= dim X + dim Y and n >= 1, got {q.as_tuple()}",
            dims=dims,
        )
    if dxy >= n:
        return Verdict(
            Outcome.STABLE,
            (Theorem.DRANISHNIKOV_WEST,),
            f"dim XxY = {dxy} >= n = {n}: X and Y admit a stable intersection in R^{n}",
            dims,
        )
    if q.as_tuple() == OPEN_CASE:
        return Verdict(Outcome.OPEN, (), "dim X = dim Y = 3, dim XxY = 4, n = 5 is undecided", dims)

    named = []
    if 2 * dx + dy <= 2 * n - 2 or 2 * dy + dx <= 2 * n - 2:
        named.append(Theorem.COMPLEMENTARY)
    if dx <= n - 3 and dy <= n - 3:
        named.append(Theorem.CODIM3)
    if dx <= n - 2 and dy <= n - 2 and n >= 6:
        named.append(Theorem.MAIN_N6)
    if named:
        note = f"dim XxY = {dxy} <= n-1; hypotheses of {', '.join(t.value for t in named)} hold"
    else:
        named = [Theorem.AGGREGATE]
        note = f"dim XxY = {dxy} <= n-1; no named hypothesis holds, covered only by the conjecture's resolution"
    return Verdict(Outcome.NO_STABLE, tuple(named), note, dims)


def classify_types(DX: DimensionType, DY: DimensionType, n: int) -> Tuple[Verdict, Tuple[int, int, int]]:
    """Classify from dimension types; ``d_{XxY} = d_X [+] d_Y`` gives ``dim X x Y``."""
    dims = (dim_of(DX), dim_of(DY), dim_of(boxplus(DX, DY)))
    return classify(IntersectionQuery(*dims, n)), dims


def is_boltyanskii(dim_x: int, dim_xx: int) -> bool:
    """Whether ``dim X^2 < 2 dim X``."""
    if not dim_x <= dim_xx <= 2 * dim_x:
        raise InfeasibleQuery(f"need dim X <= dim X^2 <= 2 dim X, got ({dim_x}, {dim_xx})")
    return dim_xx < 2 * dim_x


def embeddings_dense(dim_x: int, dim_xx: int, m: int) -> Optional[bool]:
    """Whether every map ``X -> R^m`` is approximable by embeddings.

    Equivalent to ``X`` not admitting a stable intersection with itself in
    ``R^m``; only stated for even ``m``.  Returns ``None`` when the
    self-intersection query lands on the open case.
    """
    if m < 2 or m % 2:
        raise OddAmbient(f"ambient dimension must be even and >= 2, got {m}")
    q = IntersectionQuery(dim_x, dim_x, dim_xx, m)
    v = classify(q)
    if v.outcome is Outcome.INFEASIBLE:
        raise InfeasibleQuery(v.note)
    if v.outcome is Outcome.OPEN:
        return None
    return v.outcome is Outcome.NO_STABLE


def tuple_realizable(
    dim_x: int, dim_y: int, dim_xy: int, cfg: UniverseConfig
) -> Tuple[bool, Optional[Tuple[DimensionType, DimensionType]]]:
    """Search ``cfg`` for types with the given dimensions of X, Y and X x Y.

    Returns the first witness pair in enumeration order (X outer, Y inner).
    """
    if not IntersectionQuery(dim_x, dim_y, dim_xy, 1).feasible:
        raise InfeasibleQuery(f"({dim_x}, {dim_y}, {dim_xy}) violates the product bounds")
    types = enumerate_types(cfg)
    dims = [dim_of(t) for t in types]
    xs = [t for t, d in zip(types, dims) if d == dim_x]
    ys = [t for t, d in zip(types, dims) if d == dim_y]
    for DX in xs:
        for DY in ys:
            if dim_of(boxplus(DX, DY)) == dim_xy:
                return True, (DX, DY)
    return False, None


def atlas_queries(max_n: int) -> Iterator[IntersectionQuery]:
    """Feasible tuples with ``dim_x <= dim_y <= n``, ``1 <= n <= max_n``.

    Larger ``dim_y`` only adds rows with ``dim_xy >= n``, which are all stable.
    """
    for n in range(1, max_n + 1):
        for dy in range(n + 1):
            for dx in range(dy + 1):
                for dxy in range(dy, dx + dy + 1):
                    yield IntersectionQuery(dx, dy, dxy, n)


def atlas(max_n: int) -> List[Tuple[IntersectionQuery, Verdict]]:
    return [(q, classify(q)) for q in atlas_queries(max_n)]
