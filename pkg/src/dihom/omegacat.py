"""Finite gaunt strict omega-categories.

A category is presented recursively by its objects and, for every ordered
pair of objects, a category of morphisms. Composition is never stored: the
nerve is computed by the wreath recursion over pasting trees, which only
needs objects and morphism categories. Delooped monoids keep their monoid
as metadata for the homotopy module.
"""

from __future__ import annotations

import itertools
from typing import Any, Iterable

from .errors import Infinite, ShapeTooDeep
from .monoids import CommMonoid, MonoidHom, monoid_homs, parse_coeff
from .pasting import PastingTree

TERMINAL_OBJECT = "•"
DEFAULT_DEPTH = 64


class OmegaCat:
    label: str = ""
    basepoint: Any = None
    monoid: CommMonoid | None = None

    @property
    def objects(self) -> tuple:
        raise NotImplementedError

    @property
    def finite(self) -> bool:
        return True

    def has_object(self, a) -> bool:
        return a in self.objects

    def mor(self, a, b) -> "OmegaCat":
        raise NotImplementedError

    def identity(self, a):
        """The distinguished identity object of mor(a, a)."""
        return self.mor(a, a).basepoint

    def _check(self, *objs) -> None:
        for a in objs:
            if not self.has_object(a):
                raise KeyError(f"{a!r} is not an object of {self!r}")

    def __repr__(self) -> str:
        return f"<OmegaCat {self.label or type(self).__name__}>"


class _Empty(OmegaCat):
    label = "∅"

    @property
    def objects(self) -> tuple:
        return ()

    def mor(self, a, b):
        self._check(a, b)


class _Terminal(OmegaCat):
    label = "*"
    basepoint = TERMINAL_OBJECT

    @property
    def objects(self) -> tuple:
        return (TERMINAL_OBJECT,)

    def mor(self, a, b):
        self._check(a, b)
        return self


_EMPTY = _Empty()
_TERMINAL = _Terminal()


def empty() -> OmegaCat:
    return _EMPTY


def terminal() -> OmegaCat:
    return _TERMINAL


class Suspension(OmegaCat):
    def __init__(self, inner: OmegaCat, basepoint=None, label: str = ""):
        self.inner = inner
        self.basepoint = basepoint
        self.label = label or f"S({inner.label})"

    @property
    def objects(self) -> tuple:
        return (0, 1)

    def mor(self, a, b):
        self._check(a, b)
        if a == b:
            return _TERMINAL
        return self.inner if (a, b) == (0, 1) else _EMPTY


def suspension(C: OmegaCat) -> OmegaCat:
    return Suspension(C)


def globe(k: int) -> OmegaCat:
    """The walking k-morphism, pointed at its initial object."""
    if k < 0:
        raise ValueError("k must be >= 0")
    C = _TERMINAL
    for i in range(1, k + 1):
        C = Suspension(C, basepoint=0, label=f"D{i}")
    return C


def boundary(k: int) -> OmegaCat:
    if k < 0:
        raise ValueError("k must be >= 0")
    C = _EMPTY
    for i in range(1, k + 1):
        C = Suspension(C, label=f"∂D{i}")
    return C


class Product(OmegaCat):
    """Cartesian product; objects are tuples with one entry per factor."""

    def __init__(self, factors: Iterable[OmegaCat], label: str = ""):
        self.factors = tuple(factors)
        self.label = label or "×".join(f.label for f in self.factors) or "*"
        pts = [f.basepoint for f in self.factors]
        self.basepoint = tuple(pts) if all(p is not None for p in pts) else None

    @property
    def finite(self) -> bool:
        return any(f.finite and not f.objects for f in self.factors) or all(
            f.finite for f in self.factors)

    @property
    def objects(self) -> tuple:
        if any(f.finite and not f.objects for f in self.factors):
            return ()
        return tuple(itertools.product(*(f.objects for f in self.factors)))

    def has_object(self, a) -> bool:
        return (isinstance(a, tuple) and len(a) == len(self.factors)
                and all(f.has_object(x) for f, x in zip(self.factors, a)))

    def mor(self, a, b):
        self._check(a, b)
        return Product(f.mor(x, y) for f, x, y in zip(self.factors, a, b))


def product(*factors: OmegaCat) -> OmegaCat:
    return Product(factors)


class GlobeChain(OmegaCat):
    """n copies of the k-globe glued end-to-start: the free chain model.

    mor(a, b) for a < b is the (b - a)-fold product of the (k-1)-globe.
    """

    def __init__(self, k: int, n: int):
        if k < 1:
            raise ValueError("globe_chain needs k >= 1")
        if n < 0:
            raise ValueError("globe_chain needs n >= 0")
        self.k, self.n = k, n
        self.basepoint = 0
        self.label = f"(D{k})^∨{n}"

    @property
    def objects(self) -> tuple:
        return tuple(range(self.n + 1))

    def mor(self, a, b):
        self._check(a, b)
        if a > b:
            return _EMPTY
        if a == b:
            return _TERMINAL
        return Product([globe(self.k - 1)] * (b - a))


def globe_chain(k: int, n: int) -> OmegaCat:
    return GlobeChain(k, n)


class Discrete(OmegaCat):
    """The elements of a monoid as a discrete category."""

    def __init__(self, M: CommMonoid):
        self.monoid = M
        self.basepoint = M.unit
        self.label = f"|{M.describe()}|"

    @property
    def finite(self) -> bool:
        return self.monoid.finite

    @property
    def objects(self) -> tuple:
        if not self.monoid.finite:
            raise Infinite(f"objects of {self.label} are not finitely enumerable")
        return tuple(self.monoid.elements())

    def has_object(self, a) -> bool:
        return self.monoid.contains(a)

    def mor(self, a, b):
        self._check(a, b)
        return _TERMINAL if a == b else _EMPTY


class Delooping(OmegaCat):
    def __init__(self, inner: OmegaCat, M: CommMonoid, level: int):
        self.inner = inner
        self.monoid = M
        self.level = level
        self.basepoint = TERMINAL_OBJECT
        self.label = f"B^{level}({M.describe()})"

    @property
    def objects(self) -> tuple:
        return (TERMINAL_OBJECT,)

    def mor(self, a, b):
        self._check(a, b)
        return self.inner


def delooped_monoid(n: int, M: CommMonoid) -> OmegaCat:
    """B^n M: one object, iterated endomorphisms ending in the elements of M."""
    if n < 1:
        raise ValueError("delooping needs n >= 1")
    if n >= 2 and not M.commutative:
        raise ValueError("B^n M for n >= 2 needs a commutative monoid")
    C: OmegaCat = Discrete(M)
    for level in range(1, n + 1):
        C = Delooping(C, M, level)
    return C


class Explicit(OmegaCat):
    def __init__(self, objects: Iterable, mors: dict, basepoint=None, label: str = ""):
        self._objects = tuple(objects)
        self._mors = dict(mors)
        self.basepoint = basepoint
        self.label = label or f"explicit[{len(self._objects)}]"

    @property
    def objects(self) -> tuple:
        return self._objects

    def mor(self, a, b):
        self._check(a, b)
        if (a, b) in self._mors:
            return self._mors[(a, b)]
        return _TERMINAL if a == b else _EMPTY


# -- JSON ---------------------------------------------------------------

_BUILTINS = {
    "empty": lambda: empty(),
    "terminal": lambda: terminal(),
    "globe": lambda k: globe(int(k)),
    "boundary": lambda k: boundary(int(k)),
    "globe_chain": lambda k, n: globe_chain(int(k), int(n)),
    "suspension": lambda c: suspension(from_json(c)),
    "product": lambda *cs: product(*(from_json(c) for c in cs)),
    "delooped_monoid": lambda n, coeff: delooped_monoid(int(n), parse_coeff(coeff)),
}


def from_json(data) -> OmegaCat:
    """Build a category from ``{"builtin": name, "params": [...]}`` or an
    explicit presentation ``{"objects": [...], "mor": {"a,b": ...}, "basepoint": ...}``.

    Missing ``"a,a"`` entries are terminal, missing ``"a,b"`` entries empty.
    """
    if not isinstance(data, dict):
        raise ValueError(f"category spec must be an object, got {data!r}")
    if "builtin" in data:
        name = data["builtin"]
        if name not in _BUILTINS:
            raise ValueError(f"unknown builtin category {name!r}")
        return _BUILTINS[name](*data.get("params", []))
    if "objects" not in data:
        raise ValueError("explicit category needs an 'objects' list")
    objects = list(data["objects"])
    if len(set(map(str, objects))) != len(objects):
        raise ValueError("object names must be distinct")
    by_name = {str(o): o for o in objects}
    mors = {}
    for key, sub in data.get("mor", {}).items():
        a, sep, b = key.partition(",")
        if not sep or a not in by_name or b not in by_name:
            raise ValueError(f"bad morphism key {key!r}")
        mors[(by_name[a], by_name[b])] = from_json(sub)
    for o in objects:
        inner = mors.get((o, o))
        if inner is not None and inner.basepoint is None:
            raise ValueError(f"mor({o},{o}) needs a basepoint (the identity)")
    bp = data.get("basepoint")
    if bp is not None and str(bp) not in by_name:
        raise ValueError(f"basepoint {bp!r} is not an object")
    return Explicit(objects, mors, by_name[str(bp)] if bp is not None else None,
                    label=data.get("label", ""))


# -- functors out of pasting shapes --------------------------------------

def hom_set(t: PastingTree, C: OmegaCat, max_depth: int = DEFAULT_DEPTH) -> list:
    """All functors from the shape ``t`` into ``C``.

    A functor out of the point is an object. A functor out of a tree with
    children T1..Tm is the flat tuple ``(a0, F1, a1, ..., Fm, am)`` where
    ``Fi`` is a functor ``Ti -> mor(a_{i-1}, a_i)``.
    """
    if t.height > max_depth:
        raise ShapeTooDeep(f"tree of height {t.height} exceeds depth bound {max_depth}")
    return _homs(t, C)


def _homs(t: PastingTree, C: OmegaCat) -> list:
    objs = C.objects
    if not t.children:
        return list(objs)
    out: list = []
    m = len(t.children)
    memo: dict = {}

    def subs(j: int, a, b) -> list:
        if (j, a, b) not in memo:
            memo[(j, a, b)] = _homs(t.children[j], C.mor(a, b))
        return memo[(j, a, b)]

    def rec(j: int, prefix: tuple) -> None:
        if j == m:
            out.append(prefix)
            return
        a = prefix[-1]
        for b in objs:
            for F in subs(j, a, b):
                rec(j + 1, prefix + (F, b))

    for a0 in objs:
        rec(0, (a0,))
    return out


def hom_count(t: PastingTree, C: OmegaCat) -> int:
    return len(hom_set(t, C))


def project(t: PastingTree, F, i: int):
    """i-th component of a functor into a product category."""
    if not t.children:
        return F[i]
    out = [F[0][i]]
    for j, child in enumerate(t.children):
        out.append(project(child, F[2 * j + 1], i))
        out.append(F[2 * j + 2][i])
    return tuple(out)


def terminal_functor(t: PastingTree):
    """The unique functor from ``t`` into the terminal category."""
    if not t.children:
        return TERMINAL_OBJECT
    out = [TERMINAL_OBJECT]
    for child in t.children:
        out.append(terminal_functor(child))
        out.append(TERMINAL_OBJECT)
    return tuple(out)


def root_objects(t: PastingTree, F) -> tuple:
    """The objects a0, ..., am hit by the 1-skeleton of ``t``."""
    if not t.children:
        return (F,)
    return tuple(F[0::2])


# -- sphere endomorphisms ------------------------------------------------

def pointed_monoid_endos(n: int, M: CommMonoid, M2: CommMonoid,
                         bound: int) -> tuple[list[MonoidHom], bool]:
    """Pointed maps B^n M -> B^n M2 up to equivalence, i.e. monoid
    homomorphisms M -> M2, with generator images of weight <= bound.

    The flag is True when the search space was truncated.
    """
    if n < 1:
        raise ValueError("sphere dimension must be >= 1")
    if n >= 2 and not (M.commutative and M2.commutative):
        raise ValueError("n >= 2 needs commutative monoids")
    return monoid_homs(M, M2, bound)
