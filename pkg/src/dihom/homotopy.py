"""Homotopy invariants read off finite models.

``ho1`` presents the homotopy category of a stratified model by generators
(1-simplices) and relations (thin 1-simplices are identities, every
2-simplex witnesses d1 = d0 . d2), and computes the congruence on words
by union-find. All answers hold within the word and weight bounds only.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Any

from networkx.utils import UnionFind

from .errors import CompositionUnavailable, Infinite
from .monoids import CommMonoid, MonoidError
from .omegacat import Discrete, OmegaCat, delooped_monoid
from .strat import (StratCMonoid, StratSet, bouquet, circle, collapse,
                    m_linear_reduced, standard_simplex, subcomplex)

PRODUCT_SEARCH = 16  # members per class tried when filling the endo table


def _objects(C: OmegaCat, bound: int | None = None) -> tuple:
    try:
        return C.objects
    except Infinite:
        if bound is None or not isinstance(C, Discrete):
            raise
        return tuple(C.monoid.elements(bound))


def _nonempty(C: OmegaCat) -> bool:
    try:
        return bool(C.objects)
    except Infinite:
        return True


def weak_classes(C: OmegaCat, bound: int | None = None) -> list[list]:
    """Objects modulo zig-zags of morphisms, in object order."""
    objs = _objects(C, bound)
    uf = UnionFind(range(len(objs)))
    for (i, a), (j, b) in itertools.combinations(enumerate(objs), 2):
        if _nonempty(C.mor(a, b)) or _nonempty(C.mor(b, a)):
            uf.union(i, j)
    classes: dict[int, list] = {}
    for i, a in enumerate(objs):
        classes.setdefault(uf[i], []).append(a)
    return sorted(classes.values(), key=lambda c: objs.index(c[0]))


# -- bounded homotopy category of a stratified model ---------------------

@dataclass
class EndoMonoidTable:
    classes: list  # representative words
    table: dict  # (i, j) -> k or None
    complete: bool

    def to_json(self) -> dict:
        return {"classes": [list(map(_word_str, w)) for w in self.classes],
                "table": {f"{i},{j}": k for (i, j), k in sorted(self.table.items())},
                "complete": self.complete}


def _word_str(letter) -> str:
    return " + ".join(f"{c}·{x}" for x, c in letter) if isinstance(letter, tuple) else str(letter)


@dataclass
class Ho1Presentation:
    objects: list
    arrows: list  # (arrow, source, target)
    relations: list  # pairs of parallel words
    word_bound: int
    weight_bound: int
    base: Any
    endo: EndoMonoidTable
    words: list = field(repr=False, default_factory=list)
    _class: dict = field(repr=False, default_factory=dict)

    def class_of(self, word: tuple) -> int | None:
        """Index of the endo class of ``word`` at the base, or None if outside bounds."""
        return self._class.get(tuple(word))

    def to_json(self) -> dict:
        return {"objects": len(self.objects), "arrows": len(self.arrows),
                "relations": len(self.relations), "word_bound": self.word_bound,
                "weight_bound": self.weight_bound, "endo": self.endo.to_json()}


def _level(S, n: int, bound: int) -> list:
    if isinstance(S, StratCMonoid):
        return [a for a in S.carrier(n) if S.weight(a) <= bound]
    return list(S.simplices[n])


def _weight(S, a) -> int:
    return S.weight(a) if isinstance(S, StratCMonoid) else 1


def ho1(S: StratCMonoid | StratSet, base=None, word_bound: int = 6,
        weight_bound: int = 6) -> Ho1Presentation:
    if word_bound < 1 or weight_bound < 1:
        raise ValueError("bounds must be >= 1")
    if base is None:
        base = S.basepoint
    objects = _level(S, 0, weight_bound)
    letters = _level(S, 1, weight_bound)
    arrows = [(f, S.face(1, 1, f), S.face(1, 0, f)) for f in letters]
    src = {f: a for f, a, _ in arrows}
    tgt = {f: b for f, _, b in arrows}
    thin = {f for f in letters if S.is_thin(1, f)}
    w = {f: _weight(S, f) for f in letters}

    composites: dict[tuple, set] = {}
    relations = []
    for f in thin:
        relations.append(((f,), ()))
    for s in _level(S, 2, weight_bound):
        pair = (S.face(2, 2, s), S.face(2, 0, s))
        h = S.face(2, 1, s)
        if pair[0] in w and pair[1] in w and h in w:
            composites.setdefault(pair, set()).add(h)
            relations.append((pair, (h,)))

    # composable words out of the base with bounded length and weight
    words: list[tuple] = []
    ends: dict[tuple, Any] = {}
    frontier = [((), base, 0)]
    for _ in range(word_bound + 1):
        nxt = []
        for word, end, wt in frontier:
            words.append(word)
            ends[word] = end
            if len(word) == word_bound:
                continue
            for f in letters:
                if src[f] == end and wt + w[f] <= weight_bound:
                    nxt.append((word + (f,), tgt[f], wt + w[f]))
        frontier = nxt
    endo_words = [x for x in words if ends[x] == base]
    index = {x: i for i, x in enumerate(endo_words)}

    uf = UnionFind(range(len(endo_words)))
    for x, i in index.items():
        for p, f in enumerate(x):
            if f in thin:
                uf.union(i, index[x[:p] + x[p + 1:]])
            if p + 1 < len(x):
                for h in composites.get((f, x[p + 1]), ()):
                    y = x[:p] + (h,) + x[p + 2:]
                    if y in index:
                        uf.union(i, index[y])

    groups: dict[int, list[int]] = {}
    for i in range(len(endo_words)):
        groups.setdefault(uf[i], []).append(i)
    # representatives: shortest word, then first enumerated
    reps = sorted((min(g, key=lambda i: (len(endo_words[i]), i)) for g in groups.values()),
                  key=lambda i: (len(endo_words[i]), i))
    cls_of_root = {uf[r]: k for k, r in enumerate(reps)}
    cls = {x: cls_of_root[uf[i]] for x, i in index.items()}
    members: dict[int, list] = {}
    for x in endo_words:
        members.setdefault(cls[x], []).append(x)

    # a product is defined when some pair of members concatenates inside the
    # bounds; members are in enumeration order, so short words come first
    table: dict = {}
    for a, b in itertools.product(range(len(reps)), repeat=2):
        table[(a, b)] = next((cls[x + y] for x in members[a][:PRODUCT_SEARCH]
                              for y in members[b][:PRODUCT_SEARCH] if x + y in cls), None)
    endo = EndoMonoidTable([endo_words[r] for r in reps], table,
                           all(v is not None for v in table.values()))
    return Ho1Presentation(objects, arrows, relations, word_bound, weight_bound, base,
                           endo, endo_words, cls)


# -- comparisons against coefficient monoids -----------------------------

@dataclass
class MonoidComparison:
    """Result of matching an endo table against (M, +) on elements of weight <= bound."""
    elements: list
    classes: int
    bijective: bool
    table_ok: bool
    undefined: int  # products that fell outside the bounds
    mismatches: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.bijective and self.table_ok

    def to_json(self) -> dict:
        return {"elements": len(self.elements), "classes": self.classes,
                "bijective": self.bijective, "table_ok": self.table_ok,
                "undefined": self.undefined, "mismatches": self.mismatches[:10],
                "passed": self.passed}


def compare_with_monoid(H: Ho1Presentation, M: CommMonoid, letter_of, bound: int
                        ) -> MonoidComparison:
    """``letter_of(a)`` gives the word representing the element a of M."""
    elems = [a for a in M.elements(None if M.finite else bound) if M.weight(a) <= bound]
    image = {a: H.class_of(letter_of(a)) for a in elems}
    n_classes = len(H.endo.classes)
    hit = [c for c in image.values() if c is not None]
    bijective = (None not in image.values() and len(set(hit)) == len(elems) == n_classes)
    mismatches, undefined = [], 0
    for a, b in itertools.product(elems, repeat=2):
        ab = M.op(a, b)
        if ab not in image or image[a] is None or image[b] is None:
            continue
        got = H.endo.table.get((image[a], image[b]))
        if got is None:
            undefined += 1
        elif got != image[ab]:
            mismatches.append([M.name_of(a), M.name_of(b)])
    return MonoidComparison(elems, n_classes, bijective, not mismatches, undefined,
                            mismatches)


def sphere_model(n: int, dim: int | None = None) -> StratSet:
    """Delta^n with its boundary collapsed, flat."""
    if n < 1:
        raise ValueError("sphere dimension must be >= 1")
    if n == 1:
        return circle(dim or 3)
    D = standard_simplex(n, dim or n + 1)
    top = tuple(range(n + 1))
    facets = [top[:i] + top[i + 1:] for i in range(n + 1)]
    X = collapse(D, subcomplex(D, {n - 1: facets}), label=f"S{n}")
    return X


def circle_ho1(M: CommMonoid, bound: int, word_bound: int | None = None) -> tuple:
    X = circle(3)
    R = m_linear_reduced(X, M, bound)
    H = ho1(R, (), word_bound or bound, bound)
    (e,) = X.nondegenerate(1)
    cmp = compare_with_monoid(H, M, lambda a: () if a == M.unit else (((e, a),),), bound)
    return H, cmp


@dataclass
class HurewiczResult:
    g: int
    coeff: str
    bound: int
    lhs: int
    rhs: int
    well_defined: bool
    injective: bool
    surjective: bool
    truncated: bool
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.well_defined and self.injective and self.surjective

    def to_json(self) -> dict:
        return {"g": self.g, "coeff": self.coeff, "bound": self.bound, "lhs": self.lhs,
                "rhs": self.rhs, "well_defined": self.well_defined,
                "injective": self.injective, "surjective": self.surjective,
                "truncated": self.truncated, "failures": self.failures[:10],
                "passed": self.passed}


def letter_count(word: tuple, g: int, modulus: int | None = None) -> tuple:
    """Abelianization of a free-monoid word: how often each letter occurs."""
    c = Counter(word)
    return tuple(c[i] % modulus if modulus else c[i] for i in range(g))


def hurewicz_check(g: int, coeff: CommMonoid, bound: int = 4) -> HurewiczResult:
    """Free monoid on g letters, abelianized by letter counting, against the
    endo monoid of the reduced coefficient model of a bouquet of g circles."""
    if g < 1:
        raise ValueError("g must be >= 1")
    gens = coeff.generators()
    if coeff.kind == "table":
        if len(gens) != 1:
            raise MonoidError("table coefficients must be cyclic for the Hurewicz check")
        one = gens[0]
        modulus = next(k for k in range(1, len(coeff.table) + 1)
                       if coeff.power(one, k) == coeff.unit)
    elif coeff.kind == "freeC" and coeff.rank == 1:
        one, modulus = gens[0], None
    else:
        raise MonoidError("coefficients must be N or a cyclic table monoid")

    X = bouquet(g, 3)
    R = m_linear_reduced(X, coeff, bound)
    H = ho1(R, (), bound, bound)
    cells = X.nondegenerate(1)
    letter = [R.generator(1, cells[i], one) for i in range(g)]

    lhs: dict[tuple, set] = {}
    for length in range(bound + 1):
        for word in itertools.product(range(g), repeat=length):
            cls = H.class_of(tuple(letter[i] for i in word))
            lhs.setdefault(letter_count(word, g, modulus), set()).add(cls)
    failures = []
    well_defined = True
    for key, targets in lhs.items():
        if len(targets) != 1 or None in targets:
            well_defined = False
            failures.append(f"abelian class {key} maps to {sorted(map(str, targets))}")
    images = [next(iter(t)) for t in lhs.values() if len(t) == 1]
    injective = len(set(images)) == len(images)
    surjective = set(images) == set(range(len(H.endo.classes)))
    if not surjective:
        failures.append(f"{len(H.endo.classes) - len(set(images))} classes not hit")
    return HurewiczResult(g, coeff.describe(), bound, len(lhs), len(H.endo.classes),
                          well_defined, injective, surjective, not coeff.finite, failures)


# -- homotopy monoidal categories of omega-categories --------------------

@dataclass
class PiN:
    n: int
    objects: list
    endo_classes: list
    table: dict | None  # (i, j) -> k on endo classes at the identity
    structure: str  # "category", "monoidal", "braided" or "symmetric"
    composition_available: bool
    monoid: str = ""

    def to_json(self) -> dict:
        return {"n": self.n, "objects": [str(o) for o in self.objects],
                "endo_classes": [[str(x) for x in c] for c in self.endo_classes],
                "table": None if self.table is None else
                {f"{i},{j}": k for (i, j), k in sorted(self.table.items())},
                "structure": self.structure,
                "composition_available": self.composition_available,
                "monoid": self.monoid}


def pi_n(C: OmegaCat, x, n: int, bound: int | None = None,
         require_composition: bool = True) -> PiN:
    """Ho1 of the n-fold loop category of C at x.

    Composition of (n+1)-cells is read from monoid metadata; a single
    endo class needs none.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    D, base = C, x
    for _ in range(n):
        D._check(base)
        D, base = D.mor(base, base), D.identity(base)
    objects = list(_objects(D, bound))
    E = D.mor(base, base)
    classes = weak_classes(E, bound)
    table = None
    if len(classes) == 1:
        table = {(0, 0): 0}
    elif isinstance(E, Discrete):
        M = E.monoid
        pos = {c[0]: i for i, c in enumerate(classes)}
        table = {(i, j): pos.get(M.op(a[0], b[0]))
                 for (i, a), (j, b) in itertools.product(enumerate(classes), repeat=2)}
    elif require_composition:
        raise CompositionUnavailable(
            f"composition of cells in {E.label} is not recorded")
    structure = ["category", "monoidal", "braided"][n] if n < 3 else "symmetric"
    label = E.monoid.describe() if getattr(E, "monoid", None) is not None else ""
    return PiN(n, objects, classes, table, structure, table is not None, label)


def delooped_sphere_comparison(n: int, M: CommMonoid, bound: int) -> MonoidComparison:
    """Endo classes of Pi_{n-1}(B^n M) against (M, +)."""
    P = pi_n(delooped_monoid(n, M), "•", n - 1, bound=bound)
    elems = [a for a in M.elements(None if M.finite else bound) if M.weight(a) <= bound]
    pos = {c[0]: i for i, c in enumerate(P.endo_classes)}
    bijective = len(P.objects) == 1 and sorted(pos) == sorted(elems) and all(
        len(c) == 1 for c in P.endo_classes)
    mismatches, undefined = [], 0
    for a, b in itertools.product(elems, repeat=2):
        ab = M.op(a, b)
        if ab not in pos:
            continue
        got = P.table.get((pos[a], pos[b]))
        if got is None:
            undefined += 1
        elif got != pos[ab]:
            mismatches.append([M.name_of(a), M.name_of(b)])
    return MonoidComparison(elems, len(P.endo_classes), bijective, not mismatches,
                            undefined, mismatches)


def sphere_census(n: int, M: CommMonoid, bound: int) -> dict:
    """Reduced M-linear model of S^n: trivial below n, a copy of M on the top cell in degree n."""
    X = sphere_model(n)
    R = m_linear_reduced(X, M, bound)
    below = [len(R.carrier(d)) for d in range(n)]
    (top,) = X.nondegenerate(n)
    expected = [a for a in M.elements(None if M.finite else bound)
                if M.weight(a) <= bound]
    deg = X.degenerate(n)
    top_part = [a for a in R.carrier(n) if all(x not in deg for x, _ in a)]
    ok = below == [1] * n and sorted(
        [a[0][1] for a in top_part if a] + ([M.unit] if () in top_part else [])) == sorted(expected)
    return {"below": below, "top_cell": str(top), "top_part": len(top_part),
            "expected": len(expected), "passed": ok}
