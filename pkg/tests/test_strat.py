import json
from math import comb
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from dihom.errors import InvalidCategory, NoBasepoint, NotClosed
from dihom.monoids import cyclic, free_commutative, naturals, trivial
from dihom.strat import (Category1, StratCMonoid, bouquet, chain_category, circle, collapse,
                         disjoint_union, dold_thom_check, figure_eight, flat, from_json,
                         m_linear, m_linear_reduced, monoid_category, point, sharp,
                         sp_power, sp_tower, standard_simplex, strat_product, street_nerve1,
                         subcomplex, wedge)

DATA = Path(__file__).resolve().parents[1] / "data"


def corpus():
    return [point(4), circle(4), figure_eight(4), street_nerve1(chain_category(1), 4),
            street_nerve1(monoid_category(cyclic(2)), 4)]


def all_constructions():
    D1 = standard_simplex(1, 3)
    return corpus() + [
        standard_simplex(2, 3), sharp(D1), strat_product(D1, D1),
        strat_product(sharp(D1), D1), disjoint_union(D1, point(3)), bouquet(3, 3),
        street_nerve1(chain_category(2), 3), sp_power(circle(3), 2), sp_power(D1, 3),
        m_linear(circle(3), cyclic(2), 2).materialize(),
        m_linear_reduced(figure_eight(3), naturals(), 2).materialize(),
    ]


def test_simplicial_identities_everywhere():
    for X in all_constructions():
        assert X.check() == [], X.label


def test_flat_and_sharp():
    D1 = standard_simplex(1, 3)
    assert not flat(D1).is_thin(1, (0, 1))
    assert sharp(D1).is_thin(1, (0, 1))
    P = point(3)
    assert flat(P).thin == sharp(P).thin
    # flat <= X <= sharp on thin sets
    X = strat_product(sharp(D1), D1)
    for n in range(1, 4):
        assert flat(X).thin[n] <= X.thin[n] <= sharp(X).thin[n]


def test_product_census():
    D1 = standard_simplex(1, 3)
    P = strat_product(D1, D1)
    assert len(P.simplices[1]) == 9
    assert len(P.thin[1]) == 4
    assert strat_product(sharp(D1), sharp(D1)).thin == sharp(P).thin
    Q = strat_product(circle(3), point(3))
    assert [len(Q.simplices[n]) for n in range(4)] == [len(circle(3).simplices[n]) for n in range(4)]


def test_circle_and_wedge_census():
    C = circle(3)
    assert len(C.simplices[0]) == 1
    (e,) = C.nondegenerate(1)
    assert not C.is_thin(1, e)
    W = figure_eight(3)
    assert len(W.simplices[0]) == 1 and len(W.nondegenerate(1)) == 2
    assert all(len(W.nondegenerate(n)) == 0 for n in (2, 3))


def test_collapse_everything_is_a_point():
    D = standard_simplex(2, 3)
    X = collapse(D, {n: D.simplices[n] for n in range(4)})
    assert all(X.simplices[n] == ["*"] for n in range(4))


def test_collapse_needs_a_closed_subcomplex():
    D = standard_simplex(1, 3)
    with pytest.raises(NotClosed):
        collapse(D, {1: [(0, 1)]})
    with pytest.raises(NotClosed):
        collapse(D, {})
    A = subcomplex(D, {1: [(0, 1)]})
    assert A[0] == {(0,), (1,)}


def test_street_nerve_census():
    X = street_nerve1(chain_category(1), 3)
    assert len(X.simplices[0]) == 2 and len(X.simplices[1]) == 3
    nd = X.nondegenerate(1)
    assert len(nd) == 1 and not X.is_thin(1, nd[0])
    B = street_nerve1(monoid_category(cyclic(2)), 4)
    assert [len(B.simplices[n]) for n in range(5)] == [1, 2, 4, 8, 16]
    assert all(B.is_thin(n, x) for n in (2, 3) for x in B.simplices[n])
    T = street_nerve1(monoid_category(trivial()), 3)
    assert all(len(T.simplices[n]) == 1 for n in range(4))


def test_street_nerve_rejects_bad_tables():
    C = chain_category(1)
    broken = Category1(C.objects, C.arrows, C.identities,
                       {**C.compose, ((1, 1), (0, 1)): (0, 0)})
    with pytest.raises(InvalidCategory):
        street_nerve1(broken)
    with pytest.raises(InvalidCategory):
        street_nerve1(Category1([0], {}, {}, {}))


def test_m_linear_examples():
    assert m_linear(point(3), naturals(), 3).census()[0] == 4
    assert len(m_linear(flat(standard_simplex(1, 2)), cyclic(2), 2).carrier(0)) == 4
    S = m_linear(standard_simplex(1, 2), naturals(), 2)
    thin = ((0, 0), (1,))
    nonthin = ((0, 1), (1,))
    assert S.is_thin(1, S.normalize(1, [thin]))
    assert not S.is_thin(1, S.normalize(1, [thin, nonthin]))


def test_reduced_examples():
    C = circle(3)
    R = m_linear_reduced(C, naturals(), 4)
    assert R.carrier(0) == [()]
    (e,) = C.nondegenerate(1)
    assert R.carrier(1) == [()] + [((e, (a,)),) for a in range(1, 5)]
    # u s0 e + v s1 e has faces v e, (u + v) e, u e
    s0e, s1e = C.degen(1, 0, e), C.degen(1, 1, e)
    sigma = R.normalize(2, [(s0e, (2,)), (s1e, (1,))])
    assert [R.face(2, i, sigma) for i in range(3)] == [((e, (2,)),), ((e, (3,)),), ((e, (1,)),)]
    F = m_linear_reduced(figure_eight(3), naturals(), 2)
    assert len(F.carrier(1)) == 6
    assert all(len(m_linear_reduced(point(3), naturals(), 3).carrier(n)) == 1 for n in range(4))
    with pytest.raises(NoBasepoint):
        m_linear_reduced(disjoint_union(point(2), point(2)), naturals(), 1)


@pytest.mark.parametrize("M,b", [(naturals(), 3), (cyclic(2), 3), (free_commutative(2), 2)])
def test_structure_maps_are_homomorphisms(M, b):
    for X in (circle(3), street_nerve1(chain_category(1), 3)):
        for reduced in (False, True):
            assert StratCMonoid(X, M, b, reduced).check_homomorphisms() == []


def test_sp_examples():
    C = circle(3)
    assert all(len(sp_power(C, 0).simplices[n]) == 1 for n in range(4))
    assert [len(sp_power(C, 1).simplices[n]) for n in range(4)] == [
        len(C.simplices[n]) for n in range(4)]
    assert len(sp_power(C, 3).simplices[1]) == 4
    T = sp_tower(C, 3)
    S = T.stages[1].simplices[1][0]
    assert T.transition(1, S) in T.stages[2].simplices[1]


@settings(deadline=None, max_examples=30)
@given(st.integers(0, 3), st.integers(0, 4), st.integers(0, 3))
def test_multiset_cardinality(g, n, m):
    X = bouquet(g, 3)
    assert len(sp_power(X, n).simplices[m]) == comb(len(X.simplices[m]) + n - 1, n)


def test_dold_thom_examples():
    r = dold_thom_check(circle(3), 1, 3)
    assert r.passed and r.lhs == r.rhs == 4
    r = dold_thom_check(figure_eight(3), 2, 2)
    assert r.passed and r.lhs == r.rhs == 15
    r = dold_thom_check(point(3), 2, 4)
    assert r.passed and r.lhs == r.rhs == 1


def test_json_round_trip(tmp_path):
    for X in corpus():
        data = json.loads(json.dumps(X.to_json()))
        Y = from_json(data)
        assert Y.check() == []
        assert {n: len(v) for n, v in Y.simplices.items()} == {
            n: len(v) for n, v in X.simplices.items()}
        assert {n: len(v) for n, v in Y.thin.items()} == {n: len(v) for n, v in X.thin.items()}
        assert dold_thom_check(Y, 2, 2).passed


def test_json_rejects_broken_faces():
    data = circle(2).to_json()
    key = next(iter(data["faces"]["1,0"]))
    data["faces"]["1,0"][key] = "nowhere"
    with pytest.raises(ValueError):
        from_json(data)


def test_bundled_corpus_files_match_builders():
    for X in corpus():
        name = {"point": "point", "S1": "circle", "∨2S1": "figure_eight",
                "N([1])": "nerve_chain1", "N(BZ/2)": "nerve_bz2"}[X.label]
        assert json.loads((DATA / f"{name}.json").read_text()) == json.loads(
            json.dumps(X.to_json()))


def test_wedge_needs_basepoints():
    with pytest.raises(NoBasepoint):
        wedge(disjoint_union(point(2), point(2)), point(2))
