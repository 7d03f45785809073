"""Bounded universes of dimension types and exhaustive law checking.

Quantifiers over "all dimension types" are replaced by sweeps over a finite
universe: every valid type whose exceptional primes lie in a fixed list,
whose values are bounded, and whose default is regular.  Operation results
are interned to integer ids so that the triple sweeps (associativity,
transitivity) run as array lookups over tables filled by the real
operations.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Sequence, Tuple

import numpy as np
from sympy.ntheory import isprime

from bockstein.decorated import DecoratedNumber, Decoration
from bockstein.dimtype import (
    DimensionType,
    add_scalar,
    boxplus,
    const_type,
    dim_of,
    le_type,
    make_type,
    ominus,
    oplus,
)
from bockstein.errors import BocksteinError, NonPrimeKey, PreconditionDim

# Stored witnesses per law; the count of violations is always exact.
MAX_WITNESSES = 200


@dataclass(frozen=True)
class UniverseConfig:
    """Exceptional primes and value bound of an enumerated universe.

    The default is always regular (equal to ``D(0)``): a decorated default
    stands for cofinitely many singular primes, which no bounded check can
    tell apart from a single exceptional prime with the same value.
    """

    primes: Tuple[int, ...] = ()
    max_value: int = 0

    def __post_init__(self):
        primes = tuple(sorted(set(self.primes)))
        for p in primes:
            if not isprime(p):
                raise NonPrimeKey(f"{p} is not a prime")
        if self.max_value < 0:
            raise ValueError("max_value must be >= 0")
        object.__setattr__(self, "primes", primes)


def _choices(at_zero: int, max_value: int) -> List[DecoratedNumber]:
    vals = [DecoratedNumber(at_zero)]
    vals += [DecoratedNumber(m, Decoration.PLUS) for m in range(1, max_value + 1)]
    vals += [DecoratedNumber(m, Decoration.MINUS) for m in range(2, max_value + 1)]
    return sorted(vals, key=lambda d: d.rank)


def enumerate_types(cfg: UniverseConfig) -> List[DimensionType]:
    """All types of the universe, ordered by ``D(0)`` and then odometer-style
    over the per-prime values with the smallest prime turning fastest."""
    out = [const_type(0)]
    k = len(cfg.primes)
    for a in range(1, cfg.max_value + 1):
        choices = _choices(a, cfg.max_value)
        for combo in itertools.product(choices, repeat=k):
            out.append(DimensionType(a, zip(cfg.primes, reversed(combo))))
    return out


def union_bound(D1: DimensionType, D2: DimensionType) -> DimensionType:
    """Upper bound ``D1 (+) D2 + 1`` for the type of a union ``A u B``."""
    return add_scalar(oplus(D1, D2), 1)


def decomposition_hypothesis(D: DimensionType, D1: DimensionType, D2: DimensionType) -> bool:
    """Whether a finite-dimensional compactum of type ``D`` splits as ``A u B``
    with ``d_A <= D1`` and ``d_B <= D2``."""
    return le_type(D, union_bound(D1, D2))


@dataclass(frozen=True)
class Violation:
    law: str
    inputs: Tuple[str, ...]
    witness: str

    def to_json(self) -> dict:
        return {"law": self.law, "inputs": list(self.inputs), "witness": self.witness}


@dataclass
class VerificationReport:
    law: str
    checked: int = 0
    violations: List[Violation] = field(default_factory=list)
    elapsed: float = 0.0
    laws: Dict[str, int] = field(default_factory=dict)
    violation_count: int = 0

    @property
    def passed(self) -> bool:
        return self.violation_count == 0

    def to_json(self) -> dict:
        return {
            "law": self.law,
            "passed": self.passed,
            "checked": self.checked,
            "violation_count": self.violation_count,
            "violations": [v.to_json() for v in self.violations],
            "laws": dict(self.laws),
            "elapsed_ms": round(self.elapsed * 1000, 3),
        }

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [
            f"{self.law}: {status}  checked={self.checked} "
            f"violations={self.violation_count} elapsed_ms={self.elapsed * 1000:.1f}"
        ]
        for name, n in self.laws.items():
            lines.append(f"  {name}: {n}")
        for v in self.violations:
            lines.append(f"  ! {v.law} {' '.join(v.inputs)} -- {v.witness}")
        return "\n".join(lines)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


class _Recorder:
    def __init__(self, report: VerificationReport):
        self.report = report

    def _count(self, law: str, n: int):
        self.report.laws[law] = self.report.laws.get(law, 0) + n
        self.report.checked += n

    def check(self, law: str, ok: bool, inputs: Sequence, witness: str = ""):
        self._count(law, 1)
        if not ok:
            self._fail(law, inputs, witness)

    def check_array(self, law: str, ok: np.ndarray, describe: Callable[[tuple], Tuple[Sequence, str]]):
        self._count(law, int(ok.size))
        for idx in np.argwhere(~ok):
            inputs, witness = describe(tuple(int(i) for i in idx))
            self._fail(law, inputs, witness)

    def _fail(self, law, inputs, witness):
        self.report.violation_count += 1
        if len(self.report.violations) < MAX_WITNESSES:
            self.report.violations.append(Violation(law, tuple(map(str, inputs)), witness))


class _Space:
    """Interns dimension types to ids; caches rank vectors and dimensions.

    The rank vector of a type lists ``3 D(0)``, the rank of ``D(p)`` for
    each coordinate prime, and the rank of the default; ``le_type`` is
    componentwise comparison of these vectors.
    """

    def __init__(self, seed: Iterable[DimensionType], primes: Tuple[int, ...]):
        self.primes = primes
        self.types: List[DimensionType] = []
        self.index: Dict[DimensionType, int] = {}
        self._keys: List[Tuple[int, ...]] = []
        self._dims: List[int] = []
        for t in seed:
            self.intern(t)

    def intern(self, t: DimensionType) -> int:
        i = self.index.get(t)
        if i is None:
            if not set(t.primes) <= set(self.primes):
                raise ValueError(f"{t} has primes outside {self.primes}")
            i = len(self.types)
            self.types.append(t)
            self.index[t] = i
            self._keys.append(
                (3 * t.at_zero, *(t.at(p).rank for p in self.primes), t.default.rank)
            )
            self._dims.append(dim_of(t))
        return i

    def keys(self) -> np.ndarray:
        return np.asarray(self._keys, dtype=np.int32)

    def dims(self) -> np.ndarray:
        return np.asarray(self._dims, dtype=np.int32)

    def table(self, op, left: Sequence[int], right: Sequence[int]) -> np.ndarray:
        T = np.empty((len(left), len(right)), dtype=np.int64)
        types = self.types
        for i, a in enumerate(left):
            ta = types[a]
            row = T[i]
            for j, b in enumerate(right):
                row[j] = self.intern(op(ta, types[b]))
        return T


def _le_matrix(types: Sequence[DimensionType]) -> np.ndarray:
    return np.array([[le_type(a, b) for b in types] for a in types], dtype=bool)


def _revalidates(t: DimensionType) -> bool:
    try:
        return make_type(t.at_zero, dict(t.entries), t.default) == t
    except BocksteinError:
        return False


def verify_algebra(cfg: UniverseConfig) -> VerificationReport:
    """Exhaustive check of the laws of the type operations over ``cfg``."""
    start = time.perf_counter()
    report = VerificationReport("algebra")
    rec = _Recorder(report)
    U = enumerate_types(cfg)
    N = len(U)
    space = _Space(U, cfg.primes)
    ids = np.arange(N)
    zero = const_type(0)

    L = _le_matrix(U)
    K = space.keys()[:N]
    key_le = np.all(K[:, None, :] <= K[None, :, :], axis=-1)
    rec.check_array("le.rank_vector", L == key_le,
                    lambda ij: ((U[ij[0]], U[ij[1]]), f"le_type={L[ij]}"))

    # partial order
    rec.check_array("le.reflexive", np.diag(L).copy(), lambda i: ((U[i[0]],), "not D <= D"))
    anti = ~(L & L.T) | np.eye(N, dtype=bool)
    rec.check_array("le.antisymmetric", anti,
                    lambda ij: ((U[ij[0]], U[ij[1]]), "mutually <= but distinct"))
    Li = L.astype(np.int64)
    reach = (Li @ Li) > 0
    for a in range(N):
        # a <= b <= c must give a <= c; counted per triple
        bad = reach[a] & ~L[a]
        rec._count("le.transitive", N * N)
        for c in np.flatnonzero(bad):
            b = int(np.flatnonzero(L[a] & L[:, c])[0])
            rec._fail("le.transitive", (U[a], U[b], U[c]), "a<=b<=c but not a<=c")

    tables = {}
    for name, op in (("boxplus", boxplus), ("oplus", oplus)):
        P = space.table(op, ids, ids)
        tables[name] = P
        rec.check_array(f"{name}.commutative", P == P.T,
                        lambda ij, P=P: ((U[ij[0]], U[ij[1]]),
                                         f"{space.types[P[ij]]} vs {space.types[P[ij[::-1]]]}"))
        for D in U:
            rec.check(f"{name}.identity", op(D, zero) == D and op(zero, D) == D, (D,))

        ext = np.unique(P)
        pos = np.full(len(space.types), -1, dtype=np.int64)
        pos[ext] = np.arange(len(ext))
        ext_ids = [int(e) for e in ext]
        left_t = space.table(op, ext_ids, ids)    # (a.b).c
        right_t = space.table(op, ids, ext_ids)   # a.(b.c)
        pos_P = pos[P]
        for a in range(N):
            lhs = left_t[pos_P[a], :]
            rhs = right_t[a, pos_P]
            rec.check_array(f"{name}.associative", lhs == rhs,
                            lambda bc, a=a, lhs=lhs, rhs=rhs: (
                                (U[a], U[bc[0]], U[bc[1]]),
                                f"{space.types[lhs[bc]]} vs {space.types[rhs[bc]]}"))

        # monotone in each argument
        Kall = space.keys()
        KP = Kall[P]
        I, J = np.nonzero(L & ~np.eye(N, dtype=bool))
        for arg, (lo, hi) in (("left", (KP[I], KP[J])), ("right", (KP[:, I], KP[:, J]))):
            ok = np.all(lo <= hi, axis=-1)
            if arg == "right":
                ok = ok.T
            rec.check_array(f"{name}.monotone_{arg}", ok,
                            lambda kb, arg=arg: ((U[I[kb[0]]], U[J[kb[0]]], U[kb[1]]),
                                                 f"monotonicity fails in {arg} argument"))

        for k in range(cfg.max_value + 1):
            c = const_type(k)
            for D in U:
                rec.check(f"{name}.shift", op(D, c) == add_scalar(D, k), (D, k))

    Pb, Po = tables["boxplus"], tables["oplus"]
    for a in range(N):
        for b in range(N):
            x, y = space.types[Pb[a, b]], space.types[Po[a, b]]
            rec.check("boxplus_le_oplus", le_type(x, y), (U[a], U[b]), f"{x} vs {y}")

    for D in U:
        d = dim_of(D)
        if d > 0:
            try:
                ominus(d - 1, D)
                rec.check("ominus.precondition", False, (D, d - 1), "no PreconditionDim")
            except PreconditionDim:
                rec.check("ominus.precondition", True, (D, d - 1))
        for n in range(d, max(d, cfg.max_value) + 2):
            M = ominus(n, D)
            rec.check("ominus.closure", _revalidates(M), (D, n), str(M))
            if d > 0:
                rec.check("ominus.dim_bound", dim_of(M) <= n, (D, n), f"dim={dim_of(M)}")
                back = ominus(n, M)
                rec.check("ominus.involution", back == D, (D, n), str(back))

    for t in space.types:
        rec.check("closure", _revalidates(t), (t,))
    for D in U:
        for k in range(cfg.max_value + 1):
            rec.check("closure", _revalidates(add_scalar(D, k)), (D, k))

    report.elapsed = time.perf_counter() - start
    return report


def verify_typeminus(cfg: UniverseConfig) -> VerificationReport:
    """Exhaustive check of the two-sided extremality of ``n+1 (-) D``.

    For each ``D`` with ``n = dim D``, writing ``M = n+1 (-) D``:

    * ``D [+] M <= n+1``, and ``dim(D [+] D') <= n+1`` forces ``D' <= M``;
    * ``n+1 <= D (+) M``, and ``D' <= D``, ``D'' <= M``, ``n+1 <= D' (+) D''``
      force ``D' = D`` and ``D'' = M``.

    The quantified ``D'`` and ``D''`` range over the same universe.
    """
    start = time.perf_counter()
    report = VerificationReport("typeminus")
    rec = _Recorder(report)
    U = enumerate_types(cfg)
    N = len(U)
    space = _Space(U, cfg.primes)
    ids = np.arange(N)
    Pb = space.table(boxplus, ids, ids)
    Po = space.table(oplus, ids, ids)
    L = _le_matrix(U)

    for i, D in enumerate(U):
        n = dim_of(D)
        M = ominus(n, D)
        top = const_type(n + 1)
        m, t = space.intern(M), space.intern(top)
        K = space.keys()
        dims = space.dims()

        prod = boxplus(D, M)
        rec.check("typeminus.i", le_type(prod, top), (D,), f"D [+] M = {prod}")

        premise = dims[Pb[i]] <= n + 1
        below_m = np.all(K[:N] <= K[m], axis=-1)
        rec.check_array("typeminus.i.maximality", ~premise | below_m,
                        lambda j, D=D, M=M: ((D, U[j[0]]), f"dim(D [+] D') <= n+1 but D' not <= {M}"))

        union = oplus(D, M)
        rec.check("typeminus.ii", le_type(top, union), (D,), f"D (+) M = {union}")

        lo = np.flatnonzero(L[:, i])
        hi = np.flatnonzero(below_m)
        sub = Po[np.ix_(lo, hi)]
        premise = np.all(K[t] <= K[sub], axis=-1)
        rigid = (lo[:, None] == i) & (hi[None, :] == m)
        rec.check_array("typeminus.ii.rigidity", ~premise | rigid,
                        lambda jk, D=D, lo=lo, hi=hi: ((D, U[lo[jk[0]]], U[hi[jk[1]]]),
                                                       "n+1 <= D' (+) D'' without equality"))

    report.elapsed = time.perf_counter() - start
    return report
