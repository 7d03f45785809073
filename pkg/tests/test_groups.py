import itertools
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import factorint

from bockstein.dimtype import SigmaGroup, dim_of, le_type
from bockstein.errors import NonPrimeKey, TrivialGroup
from bockstein.groups import (
    Q,
    TRIVIAL,
    Z,
    Atom,
    AtomKind,
    GroupExpr,
    PrimeSet,
    dim_wrt_group,
    parse_group,
    sigma_basis,
    zinf,
    zloc,
    zmod,
)

from conftest import DSTAR, GENERIC_PRIME, T, sigma_values

PRIMES = (2, 3, 5, 7, GENERIC_PRIME)


# --- oracle: the four membership rules evaluated prime by prime ---------

def _torsion_free(a):
    return a.kind in (AtomKind.Z, AtomKind.Q, AtomKind.LOC)


def _divisible(a, p):
    if a.kind is AtomKind.Z:
        return False
    if a.kind is AtomKind.LOC:
        return a.param != p
    if a.kind is AtomKind.MOD:
        return gcd(a.param, p) == 1
    return True  # Q, Zinf


def _has_p_torsion(a, p):
    if a.kind is AtomKind.MOD:
        return a.param % p == 0
    return a.kind is AtomKind.INF and a.param == p


def _p_torsion_divisible(a, p):
    return a.kind is AtomKind.INF


def oracle_members(G):
    free = [a for a in G if _torsion_free(a)]
    out = set()
    if free and all(_divisible(a, p) for a in free for p in PRIMES):
        out.add(("Q", 0))
    for p in PRIMES:
        if any(not _divisible(a, p) for a in free):
            out.add(("Z_(p)", p))
        tors = [a for a in G if _has_p_torsion(a, p)]
        if tors and any(not _p_torsion_divisible(a, p) for a in tors):
            out.add(("Z_p", p))
        if tors and all(_p_torsion_divisible(a, p) for a in tors):
            out.add(("Z_p^inf", p))
    return out


def members(S):
    out = {("Q", 0)} if S.has_q else set()
    for p in PRIMES:
        for name, fam in (("Z_p", S.cyclic), ("Z_p^inf", S.circle), ("Z_(p)", S.local)):
            if p in fam:
                out.add((name, p))
    return out


# moduli whose prime factors all lie in PRIMES
SMOOTH = [m for m in range(2, 211) if max(factorint(m)) <= 7]

atoms = st.one_of(
    st.just(Atom(AtomKind.Z)),
    st.just(Atom(AtomKind.Q)),
    st.builds(lambda m: Atom(AtomKind.MOD, m), st.sampled_from(SMOOTH)),
    st.builds(lambda p: Atom(AtomKind.LOC, p), st.sampled_from((2, 3, 5, 7))),
    st.builds(lambda p: Atom(AtomKind.INF, p), st.sampled_from((2, 3, 5, 7))),
)
groups = st.builds(lambda xs: GroupExpr(tuple(xs)), st.lists(atoms, max_size=5))


def test_sigma_of_z_is_all_local():
    S = sigma_basis(Z)
    assert S.local == PrimeSet(cofinite=True)
    assert not S.has_q and not S.cyclic and not S.circle
    assert str(S) == "{Z_(p) : all p}"


@pytest.mark.parametrize("G, text", [
    (Q, "{Q}"),
    (zmod(12), "{Z_2, Z_3}"),
    (zinf(3), "{Z_3^inf}"),
    (zloc(5), "{Z_(5)}"),
    (zmod(4) + zinf(2), "{Z_2}"),
    (zinf(2) + zinf(3) + zmod(3), "{Z_3, Z_2^inf}"),
    (Q + zloc(3), "{Z_(3)}"),
    (Q + zmod(5), "{Q, Z_5}"),
    (TRIVIAL, "{}"),
])
def test_sigma_examples(G, text):
    assert str(sigma_basis(G)) == text


def test_sigma_membership_api():
    S = sigma_basis(zmod(12))
    assert SigmaGroup.cyclic(2) in S and SigmaGroup.cyclic(3) in S
    assert SigmaGroup.cyclic(5) not in S and SigmaGroup.rationals() not in S


@settings(max_examples=300)
@given(groups)
def test_sigma_matches_rule_oracle(G):
    assert members(sigma_basis(G)) == oracle_members(G)


@settings(max_examples=200)
@given(groups, groups)
def test_sigma_of_sum(G1, G2):
    S, S1, S2 = sigma_basis(G1 + G2), sigma_basis(G1), sigma_basis(G2)
    # Z_(p) and Z_p are plain unions; Q and Z_{p^inf} need the whole sum.
    assert S.local == S1.local | S2.local
    assert S.cyclic == S1.cyclic | S2.cyclic
    assert members(S) == oracle_members(G1 + G2)


def test_prime_set_union():
    fin = PrimeSet(frozenset({2, 3}))
    cof = PrimeSet(frozenset({3, 5}), cofinite=True)
    assert (fin | cof) == PrimeSet(frozenset({5}), cofinite=True)
    assert (cof | PrimeSet(frozenset({5, 7}), True)) == PrimeSet(frozenset({5}), True)
    assert 2 in (fin | cof) and 5 not in (fin | cof)


@pytest.mark.parametrize("G, expected", [(Z, 4), (zmod(2), 3), (Q, 4), (zinf(3), 1), (zmod(3), 2), (zloc(2), 4)])
def test_dim_wrt_group_dstar(G, expected):
    assert dim_wrt_group(T(DSTAR), G) == expected


def test_dim_wrt_trivial_group():
    with pytest.raises(TrivialGroup):
        dim_wrt_group(T(DSTAR), TRIVIAL)


def test_dim_wrt_group_uses_default_on_cofinite_family():
    D = T("{0:1, 2:1+, *:3-}")
    assert dim_wrt_group(D, Z) == 3
    assert dim_wrt_group(D, zloc(2)) == 2


def test_z_gives_covering_dimension(mid_universe):
    for D in mid_universe:
        assert dim_wrt_group(D, Z) == dim_of(D)


@settings(max_examples=100, deadline=None)
@given(st.lists(atoms, min_size=1, max_size=4).map(lambda xs: GroupExpr(tuple(xs))))
def test_dim_wrt_group_matches_sigma_oracle(G):
    from bockstein.theorems import UniverseConfig, enumerate_types

    for D in enumerate_types(UniverseConfig((2, 3), 2)):
        f = sigma_values(D, PRIMES)
        assert dim_wrt_group(D, G) == max(f[k] for k in oracle_members(G))


def test_monotone_in_type(small_universe):
    samples = [Z, Q, zmod(6), zinf(2) + zloc(3), zmod(9) + Q, zinf(5)]
    for D1, D2 in itertools.product(small_universe, repeat=2):
        if le_type(D1, D2):
            for G in samples:
                assert dim_wrt_group(D1, G) <= dim_wrt_group(D2, G)


def test_parse_group():
    G = parse_group("Z^2 + Z/12 + Zinf(3)")
    assert str(G) == "Z^2 + Z/12 + Zinf(3)"
    assert str(sigma_basis(G)) == "{Z_2, Z_3, Z_(p) : all p}"


def test_atom_validation():
    with pytest.raises(NonPrimeKey):
        Atom(AtomKind.LOC, 6)
    with pytest.raises(ValueError):
        Atom(AtomKind.MOD, 1)
    with pytest.raises(ValueError):
        Atom(AtomKind.Z, exponent=0)
