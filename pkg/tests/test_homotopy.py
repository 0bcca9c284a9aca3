import itertools

import pytest

from dihom.errors import CompositionUnavailable
from dihom.homotopy import (circle_ho1, delooped_sphere_comparison, ho1, hurewicz_check,
                            letter_count, pi_n, sphere_census, weak_classes)
from dihom.monoids import cyclic, free_commutative, naturals, trivial
from dihom.omegacat import (boundary, delooped_monoid, from_json, globe, globe_chain, product)
from dihom.strat import circle, figure_eight, m_linear_reduced, point


def test_weak_classes_examples():
    assert weak_classes(globe(1)) == [[0, 1]]
    assert weak_classes(boundary(1)) == [[0], [1]]
    assert weak_classes(globe_chain(1, 3)) == [[0, 1, 2, 3]]


def test_weak_classes_of_products():
    cats = [globe(1), boundary(1), globe_chain(1, 2), boundary(2)]
    for C, D in itertools.product(cats, repeat=2):
        expected = {frozenset(itertools.product(a, b))
                    for a in weak_classes(C) for b in weak_classes(D)}
        assert {frozenset(c) for c in weak_classes(product(C, D))} == expected


def test_point_model_is_trivial():
    H = ho1(m_linear_reduced(point(3), naturals(), 3), (), 3, 3)
    assert len(H.endo.classes) == 1 and H.endo.complete


@pytest.mark.parametrize("M,size", [(naturals(), 7), (cyclic(2), 2), (free_commutative(2), 28),
                                    (trivial(), 1)])
def test_circle_endo_monoid(M, size):
    H, cmp = circle_ho1(M, 6)
    assert cmp.passed and cmp.classes == size


def test_relations_are_parallel():
    H = ho1(m_linear_reduced(figure_eight(3), naturals(), 3), (), 3, 3)
    ends = {f: (s, t) for f, s, t in H.arrows}
    for lhs, rhs in H.relations:
        if rhs:
            assert ends[lhs[0]][0] == ends[rhs[0]][0] and ends[lhs[-1]][1] == ends[rhs[-1]][1]
        else:
            assert ends[lhs[0]][0] == ends[lhs[0]][1]


def test_figure_eight_is_free_commutative():
    X = figure_eight(3)
    H = ho1(m_linear_reduced(X, naturals(), 4), (), 4, 4)
    e1, e2 = X.nondegenerate(1)
    a, b = ((e1, (1,)),), ((e2, (1,)),)
    assert H.class_of((a, b)) == H.class_of((b, a))
    assert H.class_of((a, b)) != H.class_of((a, a))
    assert len(H.endo.classes) == 15


def test_flat_circle_words_stay_free():
    # without coefficients nothing composes e with e
    H = ho1(circle(3), "*", 4, 4)
    assert len(H.endo.classes) == 5


def test_ho1_monotone_in_bounds():
    R = m_linear_reduced(figure_eight(3), naturals(), 4)
    small = ho1(R, (), 3, 3)
    big = ho1(R, (), 4, 4)
    # merged stays merged
    for u, v in itertools.combinations(small.words, 2):
        if small.class_of(u) == small.class_of(v):
            assert big.class_of(u) == big.class_of(v)


def test_circle_congruence_stabilizes():
    for b in range(1, 6):
        H = ho1(m_linear_reduced(circle(3), naturals(), b + 1), (), b + 1, b + 1)
        h = ho1(m_linear_reduced(circle(3), naturals(), b), (), b, b)
        for u, v in itertools.combinations(h.words, 2):
            assert (h.class_of(u) == h.class_of(v)) == (H.class_of(u) == H.class_of(v))


def test_letter_count_oracle():
    assert letter_count((0, 1, 0), 2) == (2, 1)
    assert letter_count((0, 1, 0), 2, modulus=2) == (0, 1)
    assert letter_count((), 3) == (0, 0, 0)


@pytest.mark.parametrize("g,M,lhs", [(1, naturals(), 6), (2, naturals(), 15),
                                     (2, cyclic(2), 4), (3, cyclic(2), 8)])
def test_hurewicz(g, M, lhs):
    bound = 5 if g == 1 else 4
    res = hurewicz_check(g, M, bound)
    assert res.passed and res.lhs == res.rhs == lhs


def test_pi_n_examples():
    P = pi_n(delooped_monoid(2, cyclic(2)), "•", 1)
    assert len(P.objects) == 1 and P.endo_classes == [[0], [1]]
    assert P.table == {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 0}
    for j in range(3):
        P = pi_n(globe(2), 0, j)
        assert len(P.objects) == (2 if j == 0 else 1)
    assert pi_n(globe(2), 0, 2).structure == "braided"


def test_pi_n_without_composition():
    C = from_json({"objects": ["x"], "basepoint": "x",
                   "mor": {"x,x": {"objects": ["i", "j"], "basepoint": "i"}}})
    with pytest.raises(CompositionUnavailable):
        pi_n(C, "x", 0)
    with pytest.raises((KeyError, ValueError)):
        pi_n(C, "y", 1)
    P = pi_n(C, "x", 0, require_composition=False)
    assert P.table is None and P.endo_classes == [["i"], ["j"]]


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("M", [naturals(), cyclic(2), cyclic(3), trivial()])
def test_higher_spheres(n, M):
    assert delooped_sphere_comparison(n, M, 6).passed
    if n >= 2:
        assert sphere_census(n, M, 3)["passed"]
