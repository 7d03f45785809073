import itertools

import pytest

from bockstein.classifier import (
    OPEN_CASE,
    IntersectionQuery,
    Outcome,
    Theorem,
    atlas,
    atlas_queries,
    classify,
    classify_types,
    embeddings_dense,
    is_boltyanskii,
    tuple_realizable,
)
from bockstein.dimtype import boxplus, const_type, dim_of
from bockstein.errors import InfeasibleQuery, OddAmbient
from bockstein.theorems import UniverseConfig, enumerate_types

from conftest import B, T


def verdict(*t):
    return classify(IntersectionQuery(*t))


def test_open_case():
    v = verdict(3, 3, 4, 5)
    assert v.outcome is Outcome.OPEN and v.attribution == ()


def test_stable():
    v = verdict(2, 3, 5, 5)
    assert v.outcome is Outcome.STABLE
    assert v.attribution == (Theorem.DRANISHNIKOV_WEST,)


def test_main_theorem_case():
    v = verdict(3, 3, 5, 6)
    assert v.outcome is Outcome.NO_STABLE
    assert Theorem.MAIN_N6 in v.attribution
    # 2*3 + 3 <= 10 and 3 <= 6-3, so the older theorems also apply
    assert v.attribution == (Theorem.COMPLEMENTARY, Theorem.CODIM3, Theorem.MAIN_N6)


def test_main_theorem_only():
    # dim X = n-2 rules out Codim3; 2*4+4 > 2n-2 rules out Complementary
    assert verdict(4, 4, 5, 6).attribution == (Theorem.MAIN_N6,)


def test_complementary_case():
    v = verdict(1, 2, 3, 4)
    assert v.outcome is Outcome.NO_STABLE
    assert v.attribution == (Theorem.COMPLEMENTARY,)


def test_aggregate_case():
    v = verdict(4, 3, 4, 5)
    assert v.outcome is Outcome.NO_STABLE
    assert v.attribution == (Theorem.AGGREGATE,)


@pytest.mark.parametrize("t", [(3, 3, 2, 5), (1, 1, 3, 4), (2, 2, 2, 0), (-1, 0, 0, 3)])
def test_infeasible(t):
    v = verdict(*t)
    assert v.outcome is Outcome.INFEASIBLE and v.attribution == ()


def all_feasible(max_n=8):
    for n in range(1, max_n + 1):
        for dx, dy in itertools.product(range(n + 2), repeat=2):
            for dxy in range(max(dx, dy), dx + dy + 1):
                yield IntersectionQuery(dx, dy, dxy, n)


def test_case_split_complete_and_symmetric():
    opens = []
    for q in all_feasible():
        v = classify(q)
        assert v.outcome in (Outcome.STABLE, Outcome.NO_STABLE, Outcome.OPEN)
        assert (v.outcome is Outcome.STABLE) == (q.dim_xy >= q.n)
        if v.outcome is Outcome.STABLE:
            assert v.attribution == (Theorem.DRANISHNIKOV_WEST,)
        if v.outcome is Outcome.NO_STABLE:
            assert v.attribution
            assert q.dim_xy <= q.n - 1
        swapped = classify(IntersectionQuery(q.dim_y, q.dim_x, q.dim_xy, q.n))
        assert swapped == v
        if v.outcome is Outcome.OPEN:
            opens.append(q.as_tuple())
    assert opens == [OPEN_CASE]


def test_aggregate_only_on_product_bound_edge():
    # For compacta with both factors positive-dimensional dim XxY >= max + 1;
    # every aggregate row sits outside that range.
    for q in all_feasible():
        v = classify(q)
        if Theorem.AGGREGATE in v.attribution:
            assert min(q.dim_x, q.dim_y) >= 1
            assert q.dim_xy == max(q.dim_x, q.dim_y)


def test_atlas_rows():
    rows = atlas(8)
    tuples = [q.as_tuple() for q, _ in rows]
    assert len(tuples) == len(set(tuples))
    assert all(q.dim_x <= q.dim_y <= q.n for q, _ in rows)
    assert [q.as_tuple() for q, v in rows if v.outcome is Outcome.OPEN] == [OPEN_CASE]
    assert all(v.outcome is Outcome.STABLE for q, v in rows if q.dim_xy >= q.n)
    assert len(list(atlas_queries(1))) == 4  # (0,0,0),(0,1,1),(1,1,1),(1,1,2)


@pytest.mark.parametrize("x, y, n, dims, outcome", [
    (B, B, 6, (3, 3, 5), Outcome.NO_STABLE),
    ("{0:1, 2:2+, *:1}", "{0:1, 3:2+, *:1}", 5, (3, 3, 4), Outcome.OPEN),
    ("{0:3}", "{0:3}", 5, (3, 3, 6), Outcome.STABLE),
])
def test_classify_types(x, y, n, dims, outcome):
    v, got = classify_types(T(x), T(y), n)
    assert got == dims
    assert v.outcome is outcome
    assert v.dims == dims


def test_classify_types_consistent(small_universe):
    for DX, DY in itertools.product(small_universe[::3], repeat=2):
        for n in (1, 4, 6):
            v, dims = classify_types(DX, DY, n)
            assert v == classify(IntersectionQuery(*dims, n))


def test_boltyanskii():
    assert is_boltyanskii(3, 5)
    assert not is_boltyanskii(2, 4)
    assert not is_boltyanskii(0, 0)
    with pytest.raises(InfeasibleQuery):
        is_boltyanskii(3, 7)


def test_embeddings_dense():
    assert embeddings_dense(3, 5, 6) is True
    assert embeddings_dense(3, 6, 6) is False
    with pytest.raises(OddAmbient):
        embeddings_dense(3, 5, 5)
    with pytest.raises(InfeasibleQuery):
        embeddings_dense(3, 2, 6)


def test_boltyanskii_compacta_embed_in_twice_dimension():
    # every Boltyanskii n-dimensional type has maps to R^{2n} approximable by embeddings
    for D in enumerate_types(UniverseConfig((2, 3), 3)):
        n = dim_of(D)
        nn = dim_of(boxplus(D, D))
        if n >= 1 and is_boltyanskii(n, nn):
            assert embeddings_dense(n, nn, 2 * n) is True


def test_tuple_realizable():
    found, w = tuple_realizable(3, 3, 4, UniverseConfig((2, 3), 3))
    assert found
    assert w == (T("{0:1, 2:2+, *:1}"), T("{0:1, 3:2+, *:1}"))
    found, w = tuple_realizable(2, 2, 4, UniverseConfig((), 2))
    assert found and w == (const_type(2), const_type(2))
    assert tuple_realizable(4, 4, 4, UniverseConfig((2, 3), 4)) == (False, None)


def test_tuple_realizable_witness_is_genuine():
    cfg = UniverseConfig((2, 3), 3)
    for t in [(1, 2, 3), (2, 2, 3), (3, 3, 5), (0, 2, 2)]:
        found, w = tuple_realizable(*t, cfg)
        assert found
        assert (dim_of(w[0]), dim_of(w[1]), dim_of(boxplus(*w))) == t
