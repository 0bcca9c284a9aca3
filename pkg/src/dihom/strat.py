"""Stratified simplicial sets and stratified simplicial commutative monoids.

Simplicial sets are stored as explicit tables truncated at a top dimension:
simplices per degree, face and degeneracy maps, thin simplices. The
M-linear construction and the symmetric products are materialized up to a
weight bound, since their carriers are infinite for M = N.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from math import comb
from pathlib import Path
from typing import Any, Callable, Iterable

from .errors import InvalidCategory, NoBasepoint, NotClosed
from .monoids import CommMonoid, naturals

COLLAPSED = "*"


@dataclass
class StratSet:
    dim: int
    simplices: dict[int, list]
    faces: dict[tuple[int, int], dict]
    degens: dict[tuple[int, int], dict]
    thin: dict[int, frozenset]
    basepoint: Any = None
    label: str = ""
    index: dict[int, dict] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        self.index = {n: {x: i for i, x in enumerate(xs)} for n, xs in self.simplices.items()}

    def face(self, n: int, i: int, x):
        return self.faces[(n, i)][x]

    def degen(self, n: int, i: int, x):
        return self.degens[(n, i)][x]

    def is_thin(self, n: int, x) -> bool:
        return n >= 1 and x in self.thin[n]

    def weight(self, x) -> int:
        return 1

    def degenerate(self, n: int) -> set:
        if n == 0:
            return set()
        return {self.degen(n - 1, i, y) for i in range(n) for y in self.simplices[n - 1]}

    def nondegenerate(self, n: int) -> list:
        deg = self.degenerate(n)
        return [x for x in self.simplices[n] if x not in deg]

    def bp_simplex(self, n: int):
        """The basepoint degenerated up to degree n."""
        if self.basepoint is None:
            raise NoBasepoint(f"{self.label or 'stratified set'} has no basepoint")
        x = self.basepoint
        for m in range(n):
            x = self.degen(m, 0, x)
        return x

    def sort_key(self, n: int) -> Callable:
        return self.index[n].__getitem__

    def census(self) -> dict:
        return {n: {"simplices": len(self.simplices[n]),
                    "nondegenerate": len(self.nondegenerate(n)),
                    "thin": len(self.thin.get(n, ()))}
                for n in range(self.dim + 1)}

    def check(self) -> list[str]:
        """Simplicial identities, totality and thin-contains-degenerate, exhaustively."""
        problems: list[str] = []
        d, s = self.face, self.degen
        for n in range(1, self.dim + 1):
            for i in range(n + 1):
                table = self.faces.get((n, i))
                if table is None or set(table) != set(self.simplices[n]):
                    problems.append(f"d_{i} not total on degree {n}")
                elif not set(table.values()) <= set(self.simplices[n - 1]):
                    problems.append(f"d_{i} leaves degree {n - 1}")
        for n in range(self.dim):
            for i in range(n + 1):
                table = self.degens.get((n, i))
                if table is None or set(table) != set(self.simplices[n]):
                    problems.append(f"s_{i} not total on degree {n}")
                elif not set(table.values()) <= set(self.simplices[n + 1]):
                    problems.append(f"s_{i} leaves degree {n + 1}")
        if problems:
            return problems
        for n in range(2, self.dim + 1):
            for x in self.simplices[n]:
                for j in range(n + 1):
                    for i in range(j):
                        if d(n - 1, i, d(n, j, x)) != d(n - 1, j - 1, d(n, i, x)):
                            problems.append(f"d{i}d{j} = d{j-1}d{i} fails at {x!r}")
        for n in range(self.dim):
            for x in self.simplices[n]:
                for j in range(n + 1):
                    y = s(n, j, x)
                    for i in range(n + 2):
                        lhs = d(n + 1, i, y)
                        if i < j:
                            rhs = s(n - 1, j - 1, d(n, i, x))
                        elif i in (j, j + 1):
                            rhs = x
                        else:
                            rhs = s(n - 1, j, d(n, i - 1, x))
                        if lhs != rhs:
                            problems.append(f"d{i}s{j} identity fails at {x!r}")
                    if n + 1 < self.dim:
                        for i in range(j + 1):
                            if s(n + 1, i, s(n, j, x)) != s(n + 1, j + 1, s(n, i, x)):
                                problems.append(f"s{i}s{j} = s{j+1}s{i} fails at {x!r}")
        for n in range(1, self.dim + 1):
            if not self.degenerate(n) <= self.thin[n]:
                problems.append(f"a degenerate {n}-simplex is not thin")
            if not self.thin[n] <= set(self.simplices[n]):
                problems.append(f"thin set in degree {n} has unknown simplices")
        if self.basepoint is not None and self.basepoint not in self.index[0]:
            problems.append("basepoint is not a vertex")
        return problems

    # -- JSON --------------------------------------------------------------
    def to_json(self) -> dict:
        name = _name
        return {
            "dim": self.dim,
            "label": self.label,
            "simplices": {str(n): [name(x) for x in xs] for n, xs in self.simplices.items()},
            "faces": {f"{n},{i}": {name(x): name(y) for x, y in m.items()}
                      for (n, i), m in sorted(self.faces.items())},
            "degens": {f"{n},{i}": {name(x): name(y) for x, y in m.items()}
                       for (n, i), m in sorted(self.degens.items())},
            "thin": {str(n): [name(x) for x in self.simplices[n] if x in self.thin[n]]
                     for n in range(1, self.dim + 1)},
            "basepoint": None if self.basepoint is None else name(self.basepoint),
        }


def _name(x) -> str:
    if isinstance(x, str):
        return x
    return json.dumps(_plain(x), separators=(",", ":"))


def _plain(x):
    return [_plain(y) for y in x] if isinstance(x, tuple) else x


def from_json(data: dict) -> StratSet:
    dim = int(data["dim"])
    simplices = {int(n): list(xs) for n, xs in data["simplices"].items()}
    if set(simplices) != set(range(dim + 1)):
        raise ValueError("simplices must be listed for every degree 0..dim")
    faces = {tuple(map(int, k.split(","))): dict(v) for k, v in data.get("faces", {}).items()}
    degens = {tuple(map(int, k.split(","))): dict(v) for k, v in data.get("degens", {}).items()}
    thin = {n: frozenset(data.get("thin", {}).get(str(n), ())) for n in range(1, dim + 1)}
    X = StratSet(dim, simplices, faces, degens, thin, data.get("basepoint"),
                 data.get("label", ""))
    problems = X.check()
    if problems:
        raise ValueError("invalid stratified set: " + "; ".join(problems[:5]))
    return X


def load(path: str | Path) -> StratSet:
    return from_json(json.loads(Path(path).read_text()))


def build(dim: int, simplices: Callable[[int], Iterable], face: Callable, degen: Callable,
          thin: Callable[[int, Any], bool] | None = None, basepoint=None,
          label: str = "") -> StratSet:
    """Tabulate a stratified set from functions; ``thin=None`` means flat."""
    sims = {n: list(simplices(n)) for n in range(dim + 1)}
    faces = {(n, i): {x: face(n, i, x) for x in sims[n]}
             for n in range(1, dim + 1) for i in range(n + 1)}
    degens = {(n, i): {x: degen(n, i, x) for x in sims[n]}
              for n in range(dim) for i in range(n + 1)}
    X = StratSet(dim, sims, faces, degens, {n: frozenset() for n in range(1, dim + 1)},
                 basepoint, label)
    if thin is None:
        X.thin = {n: frozenset(X.degenerate(n)) for n in range(1, dim + 1)}
    else:
        X.thin = {n: frozenset(x for x in sims[n] if thin(n, x)) | X.degenerate(n)
                  for n in range(1, dim + 1)}
    return X


# -- constructions -------------------------------------------------------

def standard_simplex(p: int, dim: int) -> StratSet:
    """Flat Delta^p; n-simplices are weakly increasing (n+1)-tuples in [p]."""
    return build(
        dim,
        lambda n: itertools.combinations_with_replacement(range(p + 1), n + 1),
        lambda n, i, x: x[:i] + x[i + 1:],
        lambda n, i, x: x[:i + 1] + x[i:],
        basepoint=(0,), label=f"Δ{p}",
    )


def point(dim: int = 3) -> StratSet:
    X = standard_simplex(0, dim)
    X.label = "point"
    return X


def flat(X: StratSet) -> StratSet:
    return _restratify(X, {n: frozenset(X.degenerate(n)) for n in range(1, X.dim + 1)}, "♭")


def sharp(X: StratSet) -> StratSet:
    return _restratify(X, {n: frozenset(X.simplices[n]) for n in range(1, X.dim + 1)}, "♯")


def _restratify(X: StratSet, thin: dict, mark: str) -> StratSet:
    return StratSet(X.dim, X.simplices, X.faces, X.degens, thin, X.basepoint,
                    f"{X.label}{mark}")


def strat_product(X: StratSet, Y: StratSet) -> StratSet:
    """Degreewise product; a pair is thin iff both entries are thin."""
    d = min(X.dim, Y.dim)
    bp = None
    if X.basepoint is not None and Y.basepoint is not None:
        bp = (X.basepoint, Y.basepoint)
    return build(
        d,
        lambda n: itertools.product(X.simplices[n], Y.simplices[n]),
        lambda n, i, z: (X.face(n, i, z[0]), Y.face(n, i, z[1])),
        lambda n, i, z: (X.degen(n, i, z[0]), Y.degen(n, i, z[1])),
        thin=lambda n, z: X.is_thin(n, z[0]) and Y.is_thin(n, z[1]),
        basepoint=bp, label=f"{X.label}×{Y.label}",
    )


def disjoint_union(*Xs: StratSet) -> StratSet:
    d = min(X.dim for X in Xs)
    return build(
        d,
        lambda n: [(j, x) for j, X in enumerate(Xs) for x in X.simplices[n]],
        lambda n, i, z: (z[0], Xs[z[0]].face(n, i, z[1])),
        lambda n, i, z: (z[0], Xs[z[0]].degen(n, i, z[1])),
        thin=lambda n, z: Xs[z[0]].is_thin(n, z[1]),
        label="⊔".join(X.label for X in Xs),
    )


def subcomplex(X: StratSet, generators: dict[int, Iterable]) -> dict[int, set]:
    """Smallest family closed under faces and degeneracies containing the generators."""
    A = {n: set(generators.get(n, ())) for n in range(X.dim + 1)}
    changed = True
    while changed:
        changed = False
        for n in range(X.dim, 0, -1):
            new = {X.face(n, i, x) for x in A[n] for i in range(n + 1)} - A[n - 1]
            if new:
                A[n - 1] |= new
                changed = True
        for n in range(X.dim):
            new = {X.degen(n, i, x) for x in A[n] for i in range(n + 1)} - A[n + 1]
            if new:
                A[n + 1] |= new
                changed = True
    return A


def collapse(X: StratSet, A: dict[int, Iterable], label: str = "") -> StratSet:
    """X / A: every A_n becomes the single simplex ``*``; basepoint ``*``."""
    A = {n: set(A.get(n, ())) for n in range(X.dim + 1)}
    if not A[0]:
        raise NotClosed("collapsing needs a non-empty subcomplex")
    for n in range(X.dim + 1):
        if not A[n] <= set(X.simplices[n]):
            raise NotClosed(f"degree {n} of the subcomplex is not inside X")
        if COLLAPSED in X.index[n] and COLLAPSED not in A[n]:
            raise ValueError(f"simplex name {COLLAPSED!r} is already in use")
        if n >= 1 and any(X.face(n, i, x) not in A[n - 1] for x in A[n] for i in range(n + 1)):
            raise NotClosed(f"subcomplex is not closed under faces in degree {n}")
        if n < X.dim and any(X.degen(n, i, x) not in A[n + 1] for x in A[n] for i in range(n + 1)):
            raise NotClosed(f"subcomplex is not closed under degeneracies in degree {n}")

    def q(n, x):
        return COLLAPSED if x in A[n] else x

    thin_images = {n: {q(n, x) for x in X.thin[n]} for n in range(1, X.dim + 1)}
    return build(
        X.dim,
        lambda n: [COLLAPSED] + [x for x in X.simplices[n] if x not in A[n]],
        lambda n, i, x: COLLAPSED if x == COLLAPSED else q(n - 1, X.face(n, i, x)),
        lambda n, i, x: COLLAPSED if x == COLLAPSED else q(n + 1, X.degen(n, i, x)),
        thin=lambda n, x: x in thin_images[n],
        basepoint=COLLAPSED, label=label or f"{X.label}/A",
    )


def wedge(*Xs: StratSet, label: str = "") -> StratSet:
    for X in Xs:
        if X.basepoint is None:
            raise NoBasepoint("every wedge summand needs a basepoint")
    U = disjoint_union(*Xs)
    A = subcomplex(U, {0: [(j, X.basepoint) for j, X in enumerate(Xs)]})
    return collapse(U, A, label=label or "∨".join(X.label for X in Xs))


def circle(dim: int = 3) -> StratSet:
    """Delta^1 / boundary, flat: one vertex and one non-thin loop e."""
    D = standard_simplex(1, dim)
    return collapse(D, subcomplex(D, {0: [(0,), (1,)]}), label="S1")


def bouquet(g: int, dim: int = 3) -> StratSet:
    """Wedge of g directed circles."""
    if g == 0:
        return point(dim)
    return wedge(*[circle(dim) for _ in range(g)], label=f"∨{g}S1")


def figure_eight(dim: int = 3) -> StratSet:
    return bouquet(2, dim)


# -- Street nerve of a 1-category ----------------------------------------

@dataclass
class Category1:
    """A finite 1-category given by a composition table; ``compose[(g, f)] = g∘f``."""
    objects: list
    arrows: dict  # name -> (source, target)
    identities: dict  # object -> arrow
    compose: dict
    label: str = ""

    def check(self) -> None:
        obj = set(self.objects)
        for f, (a, b) in self.arrows.items():
            if a not in obj or b not in obj:
                raise InvalidCategory(f"arrow {f!r} has unknown endpoints")
        for x in self.objects:
            i = self.identities.get(x)
            if i is None or self.arrows.get(i) != (x, x):
                raise InvalidCategory(f"object {x!r} lacks an identity")
        for f, (a, b) in self.arrows.items():
            for g, (c, d) in self.arrows.items():
                if b != c:
                    continue
                h = self.compose.get((g, f))
                if h is None or self.arrows.get(h) != (a, d):
                    raise InvalidCategory(f"composite of {g!r} after {f!r} missing or ill-typed")
            if self.compose[(f, self.identities[a])] != f or self.compose[(self.identities[b], f)] != f:
                raise InvalidCategory(f"unit law fails at {f!r}")
        for f, (a, b) in self.arrows.items():
            for g, (c, d) in self.arrows.items():
                if b != c:
                    continue
                for h, (e, _) in self.arrows.items():
                    if e != d:
                        continue
                    C = self.compose
                    if C[(h, C[(g, f)])] != C[(C[(h, g)], f)]:
                        raise InvalidCategory(f"associativity fails at {(h, g, f)!r}")

    def chains(self, n: int) -> list:
        if n == 0:
            return list(self.objects)
        out = [(f,) for f in self.arrows]
        for _ in range(n - 1):
            out = [c + (g,) for c in out for g, (src, _) in self.arrows.items()
                   if src == self.arrows[c[-1]][1]]
        return out


def chain_category(n: int) -> Category1:
    """The poset [n]."""
    objs = list(range(n + 1))
    arrows = {(a, b): (a, b) for a in objs for b in objs if a <= b}
    compose = {((b, c), (a, b)): (a, c) for (a, b) in arrows for (b2, c) in arrows if b == b2}
    return Category1(objs, arrows, {a: (a, a) for a in objs}, compose, label=f"[{n}]")


def monoid_category(M: CommMonoid) -> Category1:
    """BM for a finite table monoid: one object, arrows the elements."""
    elems = M.elements()
    arrows = {x: ("•", "•") for x in elems}
    compose = {(g, f): M.op(g, f) for g in elems for f in elems}
    return Category1(["•"], arrows, {"•": M.unit}, compose, label=f"B{M.describe()}")


def street_nerve1(C: Category1, dim: int = 3, basepoint=None) -> StratSet:
    """Street nerve: composable chains; thin = identities in degree 1, everything above."""
    C.check()

    def face(n, i, x):
        if n == 1:
            src, tgt = C.arrows[x[0]]
            return tgt if i == 0 else src
        if i == 0:
            return x[1:]
        if i == n:
            return x[:-1]
        return x[:i - 1] + (C.compose[(x[i], x[i - 1])],) + x[i + 1:]

    def degen(n, i, x):
        if n == 0:
            return (C.identities[x],)
        obj = C.arrows[x[i]][0] if i < n else C.arrows[x[-1]][1]
        return x[:i] + (C.identities[obj],) + x[i:]

    idents = set(C.identities.values())
    return build(dim, C.chains, face, degen,
                 thin=lambda n, x: n >= 2 or x[0] in idents,
                 basepoint=C.objects[0] if basepoint is None else basepoint,
                 label=f"N({C.label})")


# -- M-linear models -----------------------------------------------------

class StratCMonoid:
    """Degreewise M-linear combinations over a stratified set, up to a weight bound.

    Elements are canonical tuples of ``(simplex, coefficient)`` pairs with
    non-unit coefficients, sorted by the simplex order of X. In the reduced
    variant the iterated degeneracies of the basepoint are dropped.
    """

    def __init__(self, X: StratSet, M: CommMonoid, weight_bound: int, reduced: bool = False):
        if not M.commutative:
            raise ValueError("coefficients must be commutative")
        if weight_bound < 0:
            raise ValueError("weight bound must be >= 0")
        self.X, self.M, self.weight_bound, self.reduced = X, M, weight_bound, reduced
        self.dim = X.dim
        self.label = f"{M.describe()}[{X.label}]" + ("~" if reduced else "")
        self.basepoint = ()
        self._carriers: dict[int, list] = {}

    def columns(self, n: int) -> list:
        xs = self.X.simplices[n]
        if self.reduced:
            bp = self.X.bp_simplex(n)
            return [x for x in xs if x != bp]
        return list(xs)

    @property
    def simplices(self) -> "_LazyCarriers":
        return _LazyCarriers(self)

    def carrier(self, n: int) -> list:
        if n not in self._carriers:
            self._carriers[n] = self._enumerate(n)
        return self._carriers[n]

    def _enumerate(self, n: int) -> list:
        cols = self.columns(n)
        coeffs = [(c, self.M.weight(c)) for c in
                  self.M.elements(None if self.M.finite else self.weight_bound)
                  if c != self.M.unit]
        out = []

        def rec(j: int, left: int, acc: tuple) -> None:
            if j == len(cols):
                out.append(acc)
                return
            rec(j + 1, left, acc)
            for c, w in coeffs:
                if w <= left:
                    rec(j + 1, left - w, acc + ((cols[j], c),))

        rec(0, self.weight_bound, ())
        return out

    def normalize(self, n: int, pairs: Iterable) -> tuple:
        acc: dict = {}
        bp = self.X.bp_simplex(n) if self.reduced else None
        for x, c in pairs:
            if self.reduced and x == bp:
                continue
            acc[x] = self.M.op(acc[x], c) if x in acc else c
        key = self.X.sort_key(n)
        return tuple(sorted(((x, c) for x, c in acc.items() if c != self.M.unit),
                            key=lambda p: key(p[0])))

    def unit(self, n: int) -> tuple:
        return ()

    def op(self, n: int, a: tuple, b: tuple) -> tuple:
        return self.normalize(n, a + b)

    def face(self, n: int, i: int, a: tuple) -> tuple:
        return self.normalize(n - 1, ((self.X.face(n, i, x), c) for x, c in a))

    def degen(self, n: int, i: int, a: tuple) -> tuple:
        return self.normalize(n + 1, ((self.X.degen(n, i, x), c) for x, c in a))

    def is_thin(self, n: int, a: tuple) -> bool:
        return n >= 1 and all(self.X.is_thin(n, x) for x, _ in a)

    def weight(self, a: tuple) -> int:
        return sum(self.M.weight(c) for _, c in a)

    def generator(self, n: int, x, coeff=None) -> tuple:
        """The combination ``coeff * x`` (coeff defaults to the first generator of M)."""
        if coeff is None:
            coeff = self.M.generators()[0]
        return self.normalize(n, [(x, coeff)])

    def census(self) -> dict:
        return {n: len(self.carrier(n)) for n in range(self.dim + 1)}

    def materialize(self) -> StratSet:
        """The truncated carriers as a plain stratified set (faces and
        degeneracies never increase the weight, so the truncation is closed)."""
        return build(self.dim, self.carrier, self.face, self.degen, thin=self.is_thin,
                     basepoint=(), label=self.label)

    def check_homomorphisms(self, degrees: Iterable[int] | None = None) -> list[str]:
        """Faces/degeneracies are monoid maps and thin elements form a
        submonoid, on all pairs whose sum stays within the weight bound."""
        problems = []
        for n in degrees if degrees is not None else range(self.dim + 1):
            elems = self.carrier(n)
            for a, b in itertools.combinations_with_replacement(elems, 2):
                if self.weight(a) + self.weight(b) > self.weight_bound:
                    continue
                ab = self.op(n, a, b)
                if self.op(n, b, a) != ab:
                    problems.append(f"not commutative in degree {n}")
                if n >= 1 and self.is_thin(n, a) and self.is_thin(n, b) and not self.is_thin(n, ab):
                    problems.append(f"thin elements not closed in degree {n}")
                for i in range(n + 1):
                    if n >= 1 and self.face(n, i, ab) != self.op(
                            n - 1, self.face(n, i, a), self.face(n, i, b)):
                        problems.append(f"d_{i} not additive in degree {n}")
                    if n < self.dim and self.degen(n, i, ab) != self.op(
                            n + 1, self.degen(n, i, a), self.degen(n, i, b)):
                        problems.append(f"s_{i} not additive in degree {n}")
        return problems


class _LazyCarriers:
    def __init__(self, S: StratCMonoid):
        self.S = S

    def __getitem__(self, n: int) -> list:
        return self.S.carrier(n)


def m_linear(X: StratSet, M: CommMonoid, weight_bound: int) -> StratCMonoid:
    """(M[X], M[E]) materialized up to ``weight_bound``."""
    return StratCMonoid(X, M, weight_bound)


def m_linear_reduced(X: StratSet, M: CommMonoid, weight_bound: int) -> StratCMonoid:
    if X.basepoint is None:
        raise NoBasepoint(f"{X.label} has no basepoint")
    return StratCMonoid(X, M, weight_bound, reduced=True)


# -- symmetric products --------------------------------------------------

def sp_power(X: StratSet, n: int) -> StratSet:
    """Degreewise multisets of n simplices; thin iff every member is thin."""
    if X.basepoint is None:
        raise NoBasepoint(f"{X.label} has no basepoint")

    def srt(m, xs):
        return tuple(sorted(xs, key=X.sort_key(m)))

    return build(
        X.dim,
        lambda m: itertools.combinations_with_replacement(X.simplices[m], n),
        lambda m, i, S: srt(m - 1, (X.face(m, i, x) for x in S)),
        lambda m, i, S: srt(m + 1, (X.degen(m, i, x) for x in S)),
        thin=lambda m, S: all(X.is_thin(m, x) for x in S),
        basepoint=(X.basepoint,) * n, label=f"SP{n}({X.label})",
    )


@dataclass
class SPTower:
    X: StratSet
    stages: list[StratSet]

    def transition(self, m: int, S: tuple) -> tuple:
        """Stage n -> n + 1 in degree m: add one copy of the degenerate basepoint."""
        return tuple(sorted(S + (self.X.bp_simplex(m),), key=self.X.sort_key(m)))


def sp_tower(X: StratSet, N: int) -> SPTower:
    return SPTower(X, [sp_power(X, n) for n in range(N + 1)])


@dataclass
class DoldThomReport:
    label: str
    degree: int
    stages: int
    lhs: int
    rhs: int
    bijective: bool
    faces_match: bool
    degeneracies_match: bool
    thin_match: bool
    transitions_match: bool
    stage_sizes: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (self.bijective and self.faces_match and self.degeneracies_match
                and self.thin_match and self.transitions_match)

    def to_json(self) -> dict:
        return {k: getattr(self, k) for k in (
            "label", "degree", "stages", "lhs", "rhs", "bijective", "faces_match",
            "degeneracies_match", "thin_match", "transitions_match", "stage_sizes",
            "failures")} | {"passed": self.passed}


def dold_thom_check(X: StratSet, m: int, N: int) -> DoldThomReport:
    """Stage N of the symmetric-product colimit against the weight <= N part
    of the reduced N-linear model, in simplicial degree m."""
    if m > X.dim:
        raise ValueError(f"degree {m} exceeds the top dimension {X.dim}")
    tower = sp_tower(X, N)
    R = m_linear_reduced(X, naturals(), N)
    bp = {d: X.bp_simplex(d) for d in range(X.dim + 1)}

    def phi(d: int, S: tuple) -> tuple:
        # multiset -> coefficient vector, forgetting the basepoint padding
        return R.normalize(d, ((x, (1,)) for x in S if x != bp[d]))

    failures: list[str] = []
    ok = dict(bij=True, faces=True, degens=True, thin=True, trans=True)
    sizes = []
    for n, SP in enumerate(tower.stages):
        images = {phi(m, S) for S in SP.simplices[m]}
        target = {a for a in R.carrier(m) if R.weight(a) <= n}
        sizes.append([len(SP.simplices[m]), len(target)])
        if len(images) != len(SP.simplices[m]) and n == N:
            ok["bij"] = False
            failures.append(f"stage {n}: phi not injective")
        if images != target:
            ok["bij"] = False
            failures.append(f"stage {n}: image differs from the weight <= {n} part")
        for S in SP.simplices[m]:
            a = phi(m, S)
            if m >= 1:
                for i in range(m + 1):
                    if phi(m - 1, SP.face(m, i, S)) != R.face(m, i, a):
                        ok["faces"] = False
                        failures.append(f"d_{i} mismatch at {S!r}")
                if SP.is_thin(m, S) != R.is_thin(m, a):
                    ok["thin"] = False
                    failures.append(f"thinness mismatch at {S!r}")
            if m < X.dim:
                for i in range(m + 1):
                    if phi(m + 1, SP.degen(m, i, S)) != R.degen(m, i, a):
                        ok["degens"] = False
                        failures.append(f"s_{i} mismatch at {S!r}")
            if n < N and phi(m, tower.transition(m, S)) != a:
                ok["trans"] = False
                failures.append(f"transition mismatch at {S!r}")
    colim = {phi(m, S) for S in tower.stages[N].simplices[m]}
    rhs = sum(1 for a in R.carrier(m) if R.weight(a) <= N)
    return DoldThomReport(X.label, m, N, len(colim), rhs, ok["bij"], ok["faces"],
                          ok["degens"], ok["thin"], ok["trans"], sizes, failures[:20])


def multiset_count(s: int, n: int) -> int:
    return comb(s + n - 1, n)
