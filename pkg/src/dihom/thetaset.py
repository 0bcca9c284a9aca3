"""Degreewise Theta-set calculus.

Everything here is evaluated one pasting shape at a time: nerves, strict
symmetric powers (set-level orbit quotients of powers), the comparison of
the nerve of a wedge of globes with the symmetric power of the nerve of a
globe, and the staircase normal form that picks orbit representatives.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import partial
from math import comb
from typing import Any

from .errors import DihomError, DimensionMismatch, NoSort
from .omegacat import (TERMINAL_OBJECT, OmegaCat, globe, globe_chain, hom_set, project,
                       root_objects, terminal_functor)
from .parallel import pmap
from .pasting import PastingTree, enumerate_trees

TOP = "top"


def to_plain(x: Any) -> Any:
    if isinstance(x, tuple):
        return [to_plain(y) for y in x]
    return x


def enc_key(x: Any) -> str:
    """Serialization that defines the canonical total order on encodings."""
    return json.dumps(to_plain(x), ensure_ascii=False, separators=(",", ":"))


def canonical_orbit(entries) -> tuple:
    """Sorted representative of the Sigma_n-orbit of a tuple."""
    return tuple(sorted(entries, key=enc_key))


@dataclass
class ThetaFamily:
    catalog: list[PastingTree]
    elements: dict[PastingTree, list] = field(default_factory=dict)
    provenance: str = ""
    errors: dict[PastingTree, str] = field(default_factory=dict)

    def sizes(self) -> dict[PastingTree, int]:
        return {t: len(self.elements[t]) for t in self.catalog if t in self.elements}

    def __getitem__(self, t: PastingTree) -> list:
        return self.elements[t]


def _nerve_degree(C: OmegaCat, t: PastingTree):
    try:
        return sorted(hom_set(t, C), key=enc_key), None
    except DihomError as exc:
        return None, f"{type(exc).__name__}: {exc}"


def nerve(C: OmegaCat, max_dim: int = 2, max_edges: int = 4) -> ThetaFamily:
    catalog = enumerate_trees(max_dim, max_edges)
    F = ThetaFamily(catalog, provenance=f"nerve-of {C.label}")
    for t, (elems, err) in zip(catalog, pmap(partial(_nerve_degree, C), catalog)):
        if err is None:
            F.elements[t] = elems
        else:
            F.errors[t] = err
    return F


def power_orbits(F: ThetaFamily, n: int) -> ThetaFamily:
    """Degreewise multisets of size n: the strict n-th symmetric power."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out = ThetaFamily(F.catalog, provenance=f"orbit-of {n}-power of ({F.provenance})",
                      errors=dict(F.errors))
    for t, elems in F.elements.items():
        ordered = sorted(elems, key=enc_key)
        out.elements[t] = list(itertools.combinations_with_replacement(ordered, n))
    return out


def sym(C: OmegaCat, n_max: int, max_dim: int = 2, max_edges: int = 4) -> list[ThetaFamily]:
    """Summands 0..n_max of the free strict commutative monoid on N(C)."""
    N = nerve(C, max_dim, max_edges)
    return [power_orbits(N, n) for n in range(n_max + 1)]


# -- the wedge comparison ------------------------------------------------

def wedge_coordinates(t: PastingTree, F, k: int, n: int) -> tuple:
    """Image of a functor ``t -> globe_chain(k, n)`` in ``hom(t, globe(k))^n``.

    Copy l of the chain sits in coordinate l with all earlier coordinates
    at object 1 and all later ones at object 0.
    """
    return tuple(_coordinate(t, F, l) for l in range(1, n + 1))


def _coordinate(t: PastingTree, F, l: int):
    if not t.children:
        return 1 if l <= F else 0
    objs = F[0::2]
    out = [1 if l <= objs[0] else 0]
    for j, child in enumerate(t.children):
        a, b = objs[j], objs[j + 1]
        if a < l <= b:
            out.append(project(child, F[2 * j + 1], l - a - 1))
        else:
            out.append(terminal_functor(child))
        out.append(1 if l <= b else 0)
    return tuple(out)


def basepoint_functor(t: PastingTree):
    """The constant functor at object 0 of a globe."""
    if not t.children:
        return 0
    out = [0]
    for child in t.children:
        out += [terminal_functor(child), 0]
    return tuple(out)


@dataclass
class WedgeRecord:
    theta: PastingTree
    k: int
    n: int
    lhs: int
    rhs: int
    injective: bool
    surjective: bool
    witnesses: list = field(default_factory=list)
    staircase_orbits: int | None = None
    diagnostic: bool = False

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective

    def to_json(self) -> dict:
        return {"theta": self.theta.to_json(), "k": self.k, "n": self.n,
                "lhs": self.lhs, "rhs": self.rhs, "injective": self.injective,
                "surjective": self.surjective, "witnesses": self.witnesses,
                "staircase_orbits": self.staircase_orbits, "diagnostic": self.diagnostic}


def _wedge_degree(k: int, n: int, t: PastingTree, max_witnesses: int = 20) -> WedgeRecord:
    A = hom_set(t, globe_chain(k, n))
    cells = hom_set(t, globe(k))
    rhs = comb(len(cells) + n - 1, n)
    fibres: dict[tuple, list] = {}
    for F in A:
        fibres.setdefault(canonical_orbit(wedge_coordinates(t, F, k, n)), []).append(F)
    witnesses = [{"orbit": to_plain(o), "functors": to_plain(tuple(Fs))}
                 for o, Fs in fibres.items() if len(Fs) > 1]
    injective = not witnesses
    surjective = len(fibres) == rhs
    if not surjective:
        seen = set(fibres)
        missing = [o for o in itertools.combinations_with_replacement(
            sorted(cells, key=enc_key), n) if o not in seen]
        witnesses += [{"missing": to_plain(o)} for o in missing[:max_witnesses]]
    orbits = itertools.combinations_with_replacement(sorted(cells, key=enc_key), n)
    sorted_count = sum(1 for o in orbits if _sortable(t, k, o))
    return WedgeRecord(t, k, n, len(A), rhs, injective, surjective,
                       witnesses[:max_witnesses], sorted_count, diagnostic=k >= 2)


def _sortable(t, k, entries) -> bool:
    try:
        staircase_sort(t, k, entries)
    except NoSort:
        return False
    return True


def wedge_compare(k: int, n: int, max_dim: int = 2, max_edges: int = 4) -> list[WedgeRecord]:
    """Compare N(globe_chain(k, n)) with the n-th strict symmetric power of
    N(globe(k)) on every catalog shape.

    For k >= 2 the records are flagged diagnostic: the free chain model is
    not the wedge the orbit count describes.
    """
    if k < 1 or n < 1:
        raise ValueError("wedge_compare needs k >= 1 and n >= 1")
    catalog = enumerate_trees(max_dim, max_edges)
    return pmap(partial(_wedge_degree, k, n), catalog)


# -- staircase normal form -----------------------------------------------

def leaf_cells(t: PastingTree, k: int, G) -> list[tuple[int, tuple]]:
    """Cells of the k-globe hit by the generating disks of ``t``.

    Returns ``(leaf depth, cell)`` per leaf in depth-first order. A cell is
    ``(m, bit)``: an identity on the non-degenerate m-cell that is the
    source (bit 0) or target (bit 1), or ``(k, TOP)`` for the top cell.
    """
    out: list = []
    _cells(t, G, k, ("nd", 0), 0, out)
    return out


def _cells(t, G, k, state, depth, out) -> None:
    if not t.children:
        if state[0] == "dg":
            out.append((depth, (state[1], state[2])))
        elif state[1] == k:
            if G != TERMINAL_OBJECT:
                raise DimensionMismatch(f"expected the terminal object, got {G!r}")
            out.append((depth, (k, TOP)))
        else:
            if G not in (0, 1):
                raise DimensionMismatch(f"expected object 0 or 1, got {G!r}")
            out.append((depth, (state[1], G)))
        return
    if not isinstance(G, tuple) or len(G) != 2 * len(t.children) + 1:
        raise DimensionMismatch(f"{G!r} does not encode a functor from {t}")
    objs = G[0::2]
    for j, child in enumerate(t.children):
        if state[0] == "dg":
            sub = state
        elif state[1] == k:
            sub = ("dg", k, TOP)
        else:
            a, b = objs[j], objs[j + 1]
            if a == b and a in (0, 1):
                sub = ("dg", state[1], a)
            elif (a, b) == (0, 1):
                sub = ("nd", state[1] + 1)
            else:
                raise DimensionMismatch(f"no morphism {a}->{b} in a globe")
        _cells(child, G[2 * j + 1], k, sub, depth + 1, out)


def _column_in_staircase(cells: list[tuple], k: int) -> bool:
    # Nested windows: the entries of dimension >= r sit in a contiguous block
    # W_r. Objects (r = 0) read 1 left of W_1 and 0 right of it, matching the
    # coordinate pattern {1}^(l-1) x D^k x {0}^(n-l). For 1 <= r < k the
    # r-dimensional entries read 0 (source) left of W_{r+1} and 1 (target)
    # right of it, so their bits never decrease; with an empty inner window
    # the ring is just weakly increasing. The top cell has no bit.
    dims = [c[0] for c in cells]
    top = max(dims, default=0)
    for r in range(1, top + 1):
        idx = [p for p, d in enumerate(dims) if d >= r]
        if idx and idx[-1] - idx[0] + 1 != len(idx):
            return False
    for r in range(0, min(top, k - 1) + 1):
        ring = [p for p, d in enumerate(dims) if d == r]
        inner = [p for p, d in enumerate(dims) if d > r]
        hi, lo = (1, 0) if r == 0 else (0, 1)
        if inner:
            for p in ring:
                want = hi if p < inner[0] else lo
                if cells[p][1] != want:
                    return False
        else:
            bits = [cells[p][1] for p in ring]
            if bits != sorted(bits, reverse=(r == 0)):
                return False
    return True


def staircase_member(t: PastingTree, k: int, entries) -> bool:
    """True iff the tuple of functors ``t -> globe(k)`` lies in the
    staircase subcategory, generator by generator."""
    columns = [leaf_cells(t, k, G) for G in entries]
    if not columns:
        return True
    for i in range(len(columns[0])):
        if not _column_in_staircase([col[i][1] for col in columns], k):
            return False
    return True


def staircase_sort(t: PastingTree, k: int, entries) -> tuple[tuple[int, ...], tuple]:
    """A permutation ``perm`` with ``sorted[i] = entries[perm[i]]`` in staircase form.

    For k = 1 this is a stable counting sort on the stage (how many
    objects sit at 1): done, then active, then not started. For k >= 2 the
    permutations are searched exhaustively.
    """
    entries = tuple(entries)
    n = len(entries)
    if k == 1:
        stage = [sum(1 for a in root_objects(t, G) if a == 1) for G in entries]
        perm = tuple(sorted(range(n), key=lambda i: -stage[i]))
        out = tuple(entries[i] for i in perm)
        if staircase_member(t, k, out):
            return perm, out
        raise NoSort(f"counting sort failed on {to_plain(entries)}")
    seen = set()
    for perm in itertools.permutations(range(n)):
        out = tuple(entries[i] for i in perm)
        if out in seen:
            continue
        seen.add(out)
        if staircase_member(t, k, out):
            return perm, out
    raise NoSort(f"no staircase arrangement of {to_plain(entries)}")


# -- the reduced sequential colimit --------------------------------------

@dataclass
class ColimitRecord:
    theta: PastingTree
    k: int
    sizes: list[int]
    new_counts: list[int]
    injective: bool
    commutes: bool
    sym_sizes: list[int]
    stabilization_index: int | None
    diagnostic: bool = False

    @property
    def passed(self) -> bool:
        return self.injective and self.commutes and self.sizes == self.sym_sizes

    def to_json(self) -> dict:
        return {"theta": self.theta.to_json(), "k": self.k, "sizes": self.sizes,
                "new_counts": self.new_counts, "injective": self.injective,
                "commutes": self.commutes, "sym_sizes": self.sym_sizes,
                "stabilization_index": self.stabilization_index,
                "diagnostic": self.diagnostic}


def _pattern(t: PastingTree, F) -> tuple:
    objs = root_objects(t, F)
    rank = {v: i for i, v in enumerate(sorted(set(objs)))}
    return tuple(rank[v] for v in objs)


def _colimit_degree(k: int, n_max: int, t: PastingTree) -> ColimitRecord:
    stages = [hom_set(t, globe_chain(k, n)) for n in range(n_max + 1)]
    s = len(hom_set(t, globe(k)))
    injective = commutes = True
    pt = basepoint_functor(t)
    for n in range(n_max):
        nxt = set(stages[n + 1])
        # inclusion of the first n copies: encodings are unchanged
        if len(set(stages[n])) != len(stages[n]) or not set(stages[n]) <= nxt:
            injective = False
        for F in stages[n]:
            before = canonical_orbit(wedge_coordinates(t, F, k, n) + (pt,))
            after = canonical_orbit(wedge_coordinates(t, F, k, n + 1))
            if before != after:
                commutes = False
                break
    sizes = [len(A) for A in stages]
    patterns = [{_pattern(t, F) for F in A} for A in stages]
    stab = next((n for n in range(n_max + 1) if patterns[n] == patterns[-1]), None)
    return ColimitRecord(
        t, k, sizes, [sizes[0]] + [b - a for a, b in zip(sizes, sizes[1:])],
        injective, commutes, [comb(s + n - 1, n) for n in range(n_max + 1)],
        stab, diagnostic=k >= 2)


def reduced_chain_colimit_check(k: int, n_max: int, max_dim: int = 2,
                                max_edges: int = 4) -> list[ColimitRecord]:
    """Stages 0..n_max of the sequential diagram D^0 -> D^k -> ... of wedges.

    Stage n includes into stage n + 1 as the first n copies, fixing the
    basepoint 0. Under the coordinate map this is the symmetric-power
    transition that adds the basepoint functor in a new last factor, which
    is what ``commutes`` checks. ``stabilization_index`` is the first stage
    from which no new shapes of 1-skeleton (object patterns up to
    relabelling) appear.
    """
    if k < 1 or n_max < 0:
        raise ValueError("need k >= 1 and n_max >= 0")
    catalog = enumerate_trees(max_dim, max_edges)
    return pmap(partial(_colimit_degree, k, n_max), catalog)
