import itertools

import pytest

from dihom.errors import Infinite, ShapeTooDeep
from dihom.monoids import cyclic, naturals
from dihom.omegacat import (boundary, delooped_monoid, empty, from_json, globe, globe_chain,
                            hom_count, hom_set, pointed_monoid_endos, product, project,
                            root_objects, suspension, terminal)
from dihom.pasting import POINT, PastingTree, enumerate_trees, parse_tree, tree_disk

CATALOG = enumerate_trees(2, 4)


def monotone_maps(m: int, n: int) -> int:
    """Brute-force count of order-preserving maps [m] -> [n]."""
    return sum(1 for f in itertools.product(range(n + 1), repeat=m + 1)
               if all(a <= b for a, b in zip(f, f[1:])))


def test_globe_counts():
    assert hom_count(tree_disk(1), globe(1)) == 3
    assert hom_count(tree_disk(2), globe(2)) == 5
    assert hom_count(POINT, globe(3)) == 2
    # j-cells of D^2 including identities: 2, then 2 + 2, then 4 + 1, then stable
    assert [hom_count(tree_disk(j), globe(2)) for j in range(4)] == [2, 4, 5, 5]


def test_chain_counts():
    assert hom_count(parse_tree("[[],[]]"), globe_chain(1, 2)) == 10
    assert hom_count(tree_disk(1), globe_chain(1, 2)) == 6
    assert hom_count(tree_disk(2), globe_chain(2, 2)) == 18


@pytest.mark.parametrize("n", range(5))
def test_chain_against_monotone_oracle(n):
    for t in CATALOG:
        assert hom_count(t, globe_chain(1, n)) == monotone_maps(t.width, n), str(t)


def test_suspension_unfolds():
    C = globe_chain(1, 2)
    for t in enumerate_trees(2, 3):
        S = PastingTree((t,))
        direct = hom_count(S, suspension(C))
        unfolded = sum(hom_count(t, suspension(C).mor(a, b))
                       for a in (0, 1) for b in (0, 1))
        assert direct == unfolded


def test_product_bijection():
    C, D = globe(1), globe_chain(1, 2)
    P = product(C, D)
    for t in CATALOG:
        pairs = {(project(t, F, 0), project(t, F, 1)) for F in hom_set(t, P)}
        assert pairs == set(itertools.product(hom_set(t, C), hom_set(t, D)))


def test_empty_terminal_boundary():
    assert hom_set(POINT, empty()) == []
    assert hom_count(tree_disk(4), terminal()) == 1
    assert boundary(0).objects == ()
    assert hom_count(POINT, boundary(1)) == 2
    assert hom_count(tree_disk(1), boundary(1)) == 2  # only identities
    assert hom_count(tree_disk(1), boundary(2)) == 4


def test_delooped_monoid():
    B = delooped_monoid(2, cyclic(3))
    assert hom_count(tree_disk(2), B) == 3
    assert hom_count(parse_tree("[[[]],[[]]]"), B) == 9
    with pytest.raises(Infinite):
        hom_set(tree_disk(1), delooped_monoid(1, naturals()))
    with pytest.raises(ValueError):
        delooped_monoid(0, cyclic(2))


def test_depth_guard():
    with pytest.raises(ShapeTooDeep):
        hom_set(tree_disk(5), globe(1), max_depth=3)


def test_root_objects():
    t = parse_tree("[[],[[]]]")
    F = hom_set(t, globe_chain(1, 3))[-1]
    assert root_objects(t, F) == (3, 3, 3)
    assert root_objects(POINT, 2) == (2,)


def test_json_specs():
    assert hom_count(tree_disk(1), from_json({"builtin": "globe", "params": [1]})) == 3
    C = from_json({"objects": ["a", "b"], "basepoint": "a",
                   "mor": {"a,b": {"builtin": "globe", "params": [1]}}})
    assert hom_count(tree_disk(2), C) == hom_count(tree_disk(2), globe(2))
    B = from_json({"builtin": "delooped_monoid", "params": [1, "Z2"]})
    assert hom_count(tree_disk(1), B) == 2
    for bad in [[], {"builtin": "nope"}, {"objects": ["a"], "mor": {"a,c": {}}},
                {"objects": ["a", "a"]}, {"objects": ["a"], "basepoint": "z"}]:
        with pytest.raises(ValueError):
            from_json(bad)


def test_pointed_endos():
    homs, truncated = pointed_monoid_endos(2, naturals(), naturals(), 6)
    assert truncated and len(homs) == 7
    homs, truncated = pointed_monoid_endos(3, cyclic(2), cyclic(2), 6)
    assert not truncated and [str(h) for h in homs] == ["1↦0", "1↦1"]
    with pytest.raises(ValueError):
        pointed_monoid_endos(0, naturals(), naturals(), 1)
