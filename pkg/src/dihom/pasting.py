"""Planar rooted trees as names for Theta-shapes.

A tree with root children T1, ..., Tm stands for the pasting shape obtained
by gluing m suspended cells S(T1), ..., S(Tm) end-to-start along m + 1
objects. The single node is the point, the linear tree of height n is the
n-disk and the corolla with n leaves is the chain [n].
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator


@dataclass(frozen=True)
class PastingTree:
    children: tuple["PastingTree", ...] = ()

    @property
    def height(self) -> int:
        return 1 + max(c.height for c in self.children) if self.children else 0

    @property
    def edge_count(self) -> int:
        return sum(1 + c.edge_count for c in self.children)

    @property
    def width(self) -> int:
        """Number of root children, i.e. of 1-dimensional generators."""
        return len(self.children)

    def key(self) -> tuple:
        # lexicographic on child lists, a shorter prefix sorts first
        return tuple(c.key() for c in self.children)

    def __lt__(self, other: "PastingTree") -> bool:
        return self.key() < other.key()

    def leaves(self, depth: int = 0) -> Iterator[int]:
        """Depths of the leaves in depth-first order (one per generating disk)."""
        if not self.children:
            yield depth
            return
        for c in self.children:
            yield from c.leaves(depth + 1)

    def to_json(self) -> list:
        return [c.to_json() for c in self.children]

    def __str__(self) -> str:
        return "[" + ",".join(str(c) for c in self.children) + "]"

    def __repr__(self) -> str:
        return f"PastingTree({self})"


POINT = PastingTree()


def dimension(t: PastingTree) -> int:
    return t.height


def tree_disk(n: int) -> PastingTree:
    if n < 0:
        raise ValueError("disk dimension must be >= 0")
    t = POINT
    for _ in range(n):
        t = PastingTree((t,))
    return t


def tree_chain(n: int) -> PastingTree:
    if n < 0:
        raise ValueError("chain length must be >= 0")
    return PastingTree((POINT,) * n)


def from_json(data) -> PastingTree:
    if not isinstance(data, list):
        raise ValueError(f"pasting tree must be a nested list, got {data!r}")
    return PastingTree(tuple(from_json(c) for c in data))


def parse_tree(text: str) -> PastingTree:
    """Parse the bracket form, e.g. ``[[],[]]`` for the chain [2]."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not a bracket tree: {text!r}") from exc
    return from_json(data)


@lru_cache(maxsize=None)
def _forests(max_height: int, budget: int) -> tuple[tuple[PastingTree, ...], ...]:
    # ordered child lists of trees of height <= max_height using <= budget edges
    out: list[tuple[PastingTree, ...]] = [()]
    if max_height < 0:
        return tuple(out)
    for first in _trees(max_height, budget - 1):
        rest_budget = budget - 1 - first.edge_count
        for rest in _forests(max_height, rest_budget):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def _trees(max_height: int, max_edges: int) -> tuple[PastingTree, ...]:
    if max_edges < 0 or max_height < 0:
        return ()
    if max_height == 0:
        return (POINT,)
    return tuple(PastingTree(f) for f in _forests(max_height - 1, max_edges))


def enumerate_trees(max_dim: int, max_edges: int) -> list[PastingTree]:
    """All planar trees with height <= max_dim and edge_count <= max_edges.

    The order is the global lexicographic order on child lists, so the
    catalog for smaller bounds is always a sub-list of the larger one.
    """
    if max_dim < 0 or max_edges < 0:
        return []
    return sorted(set(_trees(max_dim, max_edges)), key=PastingTree.key)
