import pytest
from hypothesis import given, strategies as st

from dihom.pasting import (POINT, PastingTree, enumerate_trees, from_json, parse_tree,
                           tree_chain, tree_disk)

trees = st.recursive(st.just(POINT), lambda kids: st.lists(kids, max_size=3).map(
    lambda cs: PastingTree(tuple(cs))), max_leaves=12)


def test_small_catalog():
    assert [str(t) for t in enumerate_trees(2, 2)] == ["[]", "[[]]", "[[],[]]", "[[[]]]"]


def test_catalog_size_and_bounds():
    cat = enumerate_trees(2, 4)
    assert len(cat) == 16
    assert len(set(cat)) == 16
    assert all(t.height <= 2 and t.edge_count <= 4 for t in cat)
    assert enumerate_trees(1, 4) == [tree_chain(n) for n in range(5)]


def test_smaller_catalog_is_a_sublist():
    big = enumerate_trees(3, 5)
    small = enumerate_trees(2, 3)
    assert [t for t in big if t in set(small)] == small


def test_catalog_counts_planar_trees():
    # planar rooted trees with e edges are counted by Catalan numbers
    by_edges = [sum(1 for t in enumerate_trees(10, 6) if t.edge_count == e) for e in range(7)]
    assert by_edges == [1, 1, 2, 5, 14, 42, 132]


def test_disk_and_chain():
    assert str(tree_disk(2)) == "[[[]]]"
    assert tree_disk(3).height == 3 and tree_disk(3).width == 1
    assert str(tree_chain(3)) == "[[],[],[]]"
    assert list(parse_tree("[[[]],[]]").leaves()) == [2, 1]
    with pytest.raises(ValueError):
        tree_disk(-1)


@pytest.mark.parametrize("bad", ["", "[", "[1]", "{}", "[[],"])
def test_parse_rejects_garbage(bad):
    with pytest.raises(ValueError):
        parse_tree(bad)


@given(trees)
def test_bracket_round_trip(t):
    assert parse_tree(str(t)) == t
    assert from_json(t.to_json()) == t


@given(trees)
def test_edges_count_leaves_and_nodes(t):
    def nodes(u):
        return 1 + sum(nodes(c) for c in u.children)

    assert t.edge_count == nodes(t) - 1
    assert max(t.leaves(), default=0) == t.height
