"""Coefficient monoids with decidable equality.

Three presentations are supported: a finite multiplication table, the free
commutative monoid on g generators (elements are g-vectors of naturals) and
the free associative monoid on g generators (elements are words, i.e.
tuples of generator indices).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterator, Sequence

from .errors import DihomError, Infinite


class MonoidError(DihomError, ValueError):
    pass


@dataclass(frozen=True)
class CommMonoid:
    kind: str  # "table" | "freeC" | "freeA"
    rank: int = 0  # number of generators for the free kinds
    table: tuple[tuple[int, ...], ...] = ()
    unit_index: int = 0
    names: tuple[str, ...] = ()
    label: str = ""
    commutative_flag: bool = True

    # -- structure -----------------------------------------------------
    @property
    def unit(self) -> Any:
        if self.kind == "table":
            return self.unit_index
        if self.kind == "freeC":
            return (0,) * self.rank
        return ()

    @property
    def commutative(self) -> bool:
        if self.kind == "freeA":
            return self.rank <= 1
        return self.commutative_flag

    @property
    def finite(self) -> bool:
        return self.kind == "table" or self.rank == 0

    def op(self, x, y):
        if self.kind == "table":
            return self.table[x][y]
        if self.kind == "freeC":
            return tuple(a + b for a, b in zip(x, y))
        return tuple(x) + tuple(y)

    def power(self, x, k: int):
        out = self.unit
        for _ in range(k):
            out = self.op(out, x)
        return out

    def sum(self, xs) -> Any:
        out = self.unit
        for x in xs:
            out = self.op(out, x)
        return out

    def contains(self, x) -> bool:
        if self.kind == "table":
            return isinstance(x, int) and 0 <= x < len(self.table)
        if self.kind == "freeC":
            return (isinstance(x, tuple) and len(x) == self.rank
                    and all(isinstance(a, int) and a >= 0 for a in x))
        return isinstance(x, tuple) and all(isinstance(a, int) and 0 <= a < self.rank for a in x)

    def weight(self, x) -> int:
        """Size measure used to truncate infinite carriers.

        Table monoids: 0 for the unit, 1 otherwise. Free monoids: total
        generator count (vector mass or word length).
        """
        if self.kind == "table":
            return 0 if x == self.unit_index else 1
        if self.kind == "freeC":
            return sum(x)
        return len(x)

    def generators(self) -> list:
        if self.kind == "freeC":
            return [tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)]
        if self.kind == "freeA":
            return [(i,) for i in range(self.rank)]
        return _table_generators(self)

    def elements(self, max_weight: int | None = None) -> list:
        """Elements in canonical order; infinite carriers need ``max_weight``."""
        if self.kind == "table":
            return list(range(len(self.table)))
        if max_weight is None:
            if self.rank == 0:
                return [self.unit]
            raise Infinite(f"{self.describe()} is not finitely enumerable")
        out = []
        for w in range(max_weight + 1):
            out.extend(self._elements_of_weight(w))
        return out

    def _elements_of_weight(self, w: int) -> Iterator:
        if self.kind == "freeA":
            yield from itertools.product(range(self.rank), repeat=w)
            return
        # vectors of mass w in reverse lexicographic order
        def rec(i: int, left: int):
            if i == self.rank - 1:
                yield (left,)
                return
            for a in range(left, -1, -1):
                for rest in rec(i + 1, left - a):
                    yield (a,) + rest
        if self.rank == 0:
            if w == 0:
                yield ()
            return
        yield from rec(0, w)

    def name_of(self, x) -> str:
        if self.kind == "table":
            return self.names[x] if self.names else str(x)
        if self.kind == "freeC" and self.rank == 1:
            return str(x[0])
        return str(list(x))

    def describe(self) -> str:
        if self.label:
            return self.label
        if self.kind == "table":
            return f"table monoid of order {len(self.table)}"
        return f"{self.kind}:{self.rank}"

    # -- checks --------------------------------------------------------
    def verify_axioms(self) -> list[str]:
        """Exhaustive unit/associativity/commutativity check for tables."""
        if self.kind != "table":
            return []
        problems = []
        n = len(self.table)
        if any(len(row) != n for row in self.table):
            return ["table is not square"]
        if any(not 0 <= v < n for row in self.table for v in row):
            return ["table entry out of range"]
        u = self.unit_index
        for x in range(n):
            if self.table[u][x] != x or self.table[x][u] != x:
                problems.append(f"unit law fails at {x}")
        for x, y, z in itertools.product(range(n), repeat=3):
            t = self.table
            if t[t[x][y]][z] != t[x][t[y][z]]:
                problems.append(f"associativity fails at {(x, y, z)}")
                break
        if self.commutative_flag:
            for x, y in itertools.combinations(range(n), 2):
                if self.table[x][y] != self.table[y][x]:
                    problems.append(f"commutativity fails at {(x, y)}")
                    break
        return problems


def _table_generators(M: CommMonoid) -> list[int]:
    # greedy: add the smallest element not yet in the generated submonoid
    gens: list[int] = []
    reached = {M.unit_index}
    for x in range(len(M.table)):
        if x in reached:
            continue
        gens.append(x)
        frontier = list(reached)
        while frontier:
            new = []
            for y in frontier:
                for g in gens:
                    for z in (M.op(y, g), M.op(g, y)):
                        if z not in reached:
                            reached.add(z)
                            new.append(z)
            frontier = new
    return gens


def table_monoid(table: Sequence[Sequence[int]], unit: int = 0, commutative: bool = True,
                 names: Sequence[str] = (), label: str = "") -> CommMonoid:
    M = CommMonoid("table", table=tuple(tuple(r) for r in table), unit_index=unit,
                   names=tuple(names), label=label, commutative_flag=commutative)
    problems = M.verify_axioms()
    if problems:
        raise MonoidError("; ".join(problems))
    return M


def cyclic(n: int) -> CommMonoid:
    """Z/n under addition."""
    return table_monoid([[(a + b) % n for b in range(n)] for a in range(n)],
                        label=f"Z/{n}")


def trivial() -> CommMonoid:
    return table_monoid([[0]], label="trivial")


def free_commutative(g: int) -> CommMonoid:
    return CommMonoid("freeC", rank=g, label="N" if g == 1 else f"N^{g}")


def free_associative(g: int) -> CommMonoid:
    return CommMonoid("freeA", rank=g, label=f"freeA:{g}")


def naturals() -> CommMonoid:
    return free_commutative(1)


def load_table(path: str | Path) -> CommMonoid:
    """Read ``{"table": [[...]], "unit": 0, "commutative": true, "names": [...]}``."""
    data = json.loads(Path(path).read_text())
    return table_monoid(data["table"], unit=data.get("unit", 0),
                        commutative=data.get("commutative", True),
                        names=data.get("names", ()), label=data.get("label", str(path)))


def parse_coeff(spec: str) -> CommMonoid:
    """Parse the CLI coefficient syntax ``N | Z2 | Zn | trivial | table:FILE | freeC:g | freeA:g``."""
    if spec in ("N", "ℕ"):
        return naturals()
    if spec == "trivial":
        return trivial()
    if spec.startswith("Z") and spec[1:].isdigit():
        return cyclic(int(spec[1:]))
    if spec.startswith("N^") and spec[2:].isdigit():
        return free_commutative(int(spec[2:]))
    kind, _, arg = spec.partition(":")
    if kind == "table":
        return load_table(arg)
    if kind == "freeC":
        return free_commutative(int(arg))
    if kind == "freeA":
        return free_associative(int(arg))
    raise MonoidError(f"unknown coefficient spec {spec!r}")


# -- homomorphisms ------------------------------------------------------

@dataclass(frozen=True)
class MonoidHom:
    source: CommMonoid
    target: CommMonoid
    images: tuple  # images of source.generators(), in order
    _table_map: tuple = field(default=(), compare=False, repr=False)

    def __call__(self, x):
        S, T = self.source, self.target
        if S.kind == "freeC":
            return T.sum(T.power(img, k) for img, k in zip(self.images, x))
        if S.kind == "freeA":
            return T.sum(self.images[i] for i in x)
        return self._table_map[x]

    def compose(self, other: "MonoidHom") -> "MonoidHom":
        """``self ∘ other``."""
        if other.target != self.source:
            raise MonoidError("homomorphisms are not composable")
        images = tuple(self(img) for img in other.images)
        return _make_hom(other.source, self.target, images)

    def __str__(self) -> str:
        gens = self.source.generators()
        return ", ".join(f"{self.source.name_of(g)}↦{self.target.name_of(v)}"
                         for g, v in zip(gens, self.images)) or "trivial"


def _make_hom(S: CommMonoid, T: CommMonoid, images: tuple) -> MonoidHom | None:
    if S.kind != "table":
        if S.kind == "freeC" and not T.commutative:
            for a, b in itertools.combinations(images, 2):
                if T.op(a, b) != T.op(b, a):
                    return None
        return MonoidHom(S, T, images)
    gens = S.generators()
    f = {S.unit_index: T.unit}
    frontier = [S.unit_index]
    while frontier:
        new = []
        for x in frontier:
            for g, img in zip(gens, images):
                y, v = S.op(x, g), T.op(f[x], img)
                if y in f:
                    if f[y] != v:
                        return None
                else:
                    f[y] = v
                    new.append(y)
        frontier = new
    for x, y in itertools.product(range(len(S.table)), repeat=2):
        if f[S.op(x, y)] != T.op(f[x], f[y]):
            return None
    return MonoidHom(S, T, images, tuple(f[x] for x in range(len(S.table))))


def monoid_homs(S: CommMonoid, T: CommMonoid, bound: int) -> tuple[list[MonoidHom], bool]:
    """Homomorphisms S -> T whose generator images have weight <= bound.

    Returns the list and a flag that is True when the search was truncated
    (T infinite, so homs with heavier images exist).
    """
    candidates = T.elements(None if T.finite else bound)
    out = []
    for images in itertools.product(candidates, repeat=len(S.generators())):
        h = _make_hom(S, T, tuple(images))
        if h is not None:
            out.append(h)
    return out, not T.finite
