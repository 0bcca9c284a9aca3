import itertools
import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from dihom.errors import DimensionMismatch
from dihom.omegacat import globe, globe_chain, hom_set
from dihom.pasting import POINT, enumerate_trees, parse_tree, tree_disk
from dihom.thetaset import (canonical_orbit, enc_key, nerve, power_orbits,
                            reduced_chain_colimit_check, staircase_member, staircase_sort,
                            sym, wedge_compare, wedge_coordinates)

CATALOG = enumerate_trees(2, 4)
D1, D2 = tree_disk(1), tree_disk(2)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_k1_wedge_is_bijective(n):
    recs = wedge_compare(1, n)
    assert len(recs) == len(CATALOG)
    for r in recs:
        assert r.bijective and r.lhs == r.rhs, r.to_json()
        assert r.staircase_orbits == r.rhs and not r.diagnostic


def test_k2_disk_diagnostic():
    rec = next(r for r in wedge_compare(2, 2) if r.theta == D2)
    assert (rec.lhs, rec.rhs, rec.injective, rec.surjective) == (18, 15, False, True)
    collisions = [w for w in rec.witnesses if "orbit" in w]
    assert len(collisions) == 3
    assert all(len(w["functors"]) == 2 for w in collisions)
    assert rec.staircase_orbits == 15 and rec.diagnostic


def test_power_orbit_sizes():
    N = nerve(globe(1))
    for n in range(4):
        P = power_orbits(N, n)
        for t in CATALOG:
            assert len(P[t]) == comb(len(N[t]) + n - 1, n)


def test_sym_summand_one_is_the_nerve():
    S = sym(globe(2), 1, 2, 3)
    assert all(len(S[0][t]) == 1 for t in S[0].catalog)
    assert {t: len(S[1][t]) for t in S[1].catalog} == {
        t: len(hom_set(t, globe(2))) for t in S[1].catalog}


def test_canonical_orbit_under_random_permutations():
    rng = random.Random(0)
    cells = hom_set(parse_tree("[[[]],[]]"), globe(2))
    for _ in range(1000):
        entries = [rng.choice(cells) for _ in range(rng.randint(0, 5))]
        canon = canonical_orbit(entries)
        assert canonical_orbit(canon) == canon
        shuffled = entries[:]
        rng.shuffle(shuffled)
        assert canonical_orbit(shuffled) == canon


@given(st.lists(st.sampled_from(hom_set(D2, globe(2))), max_size=6), st.randoms())
def test_canonical_orbit_property(entries, rnd):
    canon = canonical_orbit(entries)
    perm = entries[:]
    rnd.shuffle(perm)
    assert canonical_orbit(perm) == canon == canonical_orbit(canon)
    assert [enc_key(x) for x in canon] == sorted(enc_key(x) for x in entries)


@pytest.mark.parametrize("n", [2, 3])
def test_k1_staircase_is_the_image(n):
    for t in CATALOG:
        image = {wedge_coordinates(t, F, 1, n) for F in hom_set(t, globe_chain(1, n))}
        cells = hom_set(t, globe(1))
        for entries in itertools.product(cells, repeat=n):
            assert staircase_member(t, 1, entries) == (entries in image), (str(t), entries)


def test_staircase_sort_picks_the_image():
    t = parse_tree("[[],[],[]]")
    cells = hom_set(t, globe(1))
    rng = random.Random(3)
    image = {wedge_coordinates(t, F, 1, 3) for F in hom_set(t, globe_chain(1, 3))}
    for _ in range(200):
        entries = tuple(rng.choice(cells) for _ in range(3))
        perm, out = staircase_sort(t, 1, entries)
        assert out in image
        assert tuple(entries[i] for i in perm) == out


def test_k2_staircase_one_member_per_orbit():
    cells = sorted(hom_set(D2, globe(2)), key=enc_key)
    hits = 0
    for orbit in itertools.combinations_with_replacement(cells, 2):
        members = {p for p in itertools.permutations(orbit) if staircase_member(D2, 2, p)}
        assert len(members) == 1
        hits += 1
    assert hits == 15


@pytest.mark.parametrize("k", [2, 3])
def test_staircase_covers_every_orbit(k):
    for t in enumerate_trees(2, 3):
        cells = sorted(hom_set(t, globe(k)), key=enc_key)
        for orbit in itertools.combinations_with_replacement(cells, 2):
            perm, out = staircase_sort(t, k, orbit)
            assert sorted(perm) == [0, 1] and staircase_member(t, k, out)


def test_leaf_cells_reject_foreign_encodings():
    with pytest.raises(DimensionMismatch):
        staircase_member(D1, 1, [(0, "•", 2)])
    with pytest.raises(DimensionMismatch):
        staircase_member(D2, 2, [(0, 1, 1)])


@settings(deadline=None)
@given(st.integers(1, 2), st.integers(0, 3))
def test_colimit_records(k, n_max):
    recs = reduced_chain_colimit_check(k, n_max, 2, 3)
    for r in recs:
        assert r.injective and r.commutes
        assert r.sizes == [len(hom_set(r.theta, globe_chain(k, n))) for n in range(n_max + 1)]
        if k == 1:
            assert r.passed
            assert r.stabilization_index == min(r.theta.width, n_max)


def test_colimit_point_is_constant():
    rec = next(r for r in reduced_chain_colimit_check(1, 3) if r.theta == POINT)
    assert rec.sizes == [1, 2, 3, 4] and rec.new_counts == [1, 1, 1, 1]
