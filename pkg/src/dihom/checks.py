"""The verification suites behind the command line, returning CheckReports."""

from __future__ import annotations

import json
from math import comb
from pathlib import Path
from typing import Callable

from . import homotopy, omegacat, strat, thetaset
from .monoids import CommMonoid, parse_coeff
from .omegacat import globe, globe_chain, hom_set, pointed_monoid_endos
from .pasting import PastingTree
from .reports import CheckReport
from .thetaset import enc_key, to_plain

DEFAULTS = {"max_dim": 2, "max_edges": 4, "n_max": 3, "word_bound": 6, "weight_bound": 6}
CORPUS_DIM = 4

CORPUS: dict[str, Callable[[], strat.StratSet]] = {
    "point": lambda: strat.point(CORPUS_DIM),
    "circle": lambda: strat.circle(CORPUS_DIM),
    "figure_eight": lambda: strat.figure_eight(CORPUS_DIM),
    "nerve_chain1": lambda: strat.street_nerve1(strat.chain_category(1), CORPUS_DIM),
    "nerve_bz2": lambda: strat.street_nerve1(
        strat.monoid_category(parse_coeff("Z2")), CORPUS_DIM),
}


def load_stratset(spec: str) -> strat.StratSet:
    """``builtin:NAME`` for the bundled corpus, otherwise a JSON file path."""
    if spec.startswith("builtin:"):
        name = spec.split(":", 1)[1]
        if name not in CORPUS:
            raise ValueError(f"unknown builtin {name!r}; choose from {sorted(CORPUS)}")
        return CORPUS[name]()
    return strat.load(Path(spec))


def load_category(spec: str) -> omegacat.OmegaCat:
    text = Path(spec).read_text() if Path(spec).is_file() else spec
    return omegacat.from_json(json.loads(text))


# -- Theta side ----------------------------------------------------------

def check_hom(tree: PastingTree, C: omegacat.OmegaCat, limit: int = 100) -> CheckReport:
    R = CheckReport("hom", {"tree": str(tree), "category": C.label})
    elems = sorted(hom_set(tree, C), key=enc_key)
    R.add(f"hom({tree}, {C.label})", True, count=len(elems),
          elements=[to_plain(F) for F in elems[:limit]], truncated_listing=len(elems) > limit)
    return R.finish()


def check_nerve(C: omegacat.OmegaCat, max_dim: int, max_edges: int) -> CheckReport:
    R = CheckReport("nerve", {"category": C.label, "max_dim": max_dim, "max_edges": max_edges})
    F = thetaset.nerve(C, max_dim, max_edges)
    for t in F.catalog:
        if t in F.errors:
            R.add(str(t), False, error=F.errors[t])
        else:
            R.add(str(t), True, size=len(F[t]))
    return R.finish()


def check_wedge(k: int, n: int, max_dim: int, max_edges: int) -> CheckReport:
    R = CheckReport("check-wedge", {"k": k, "n": n, "max_dim": max_dim, "max_edges": max_edges})
    for rec in thetaset.wedge_compare(k, n, max_dim, max_edges):
        R.add(f"k={k} n={n} θ={rec.theta} lhs={rec.lhs} rhs={rec.rhs}", rec.bijective,
              diagnostic=rec.diagnostic, data=rec.to_json())
    return R.finish()


def check_disks(k: int, n_max: int, max_dim: int, max_edges: int) -> CheckReport:
    """Sym^n of the nerve of D^k against the nerve of the n-fold wedge, plus the
    sequential colimit of the wedges. For k = 1 the wedge is the chain [n]."""
    R = CheckReport("check-disks", {"k": k, "n_max": n_max, "max_dim": max_dim,
                                    "max_edges": max_edges})
    diag = k >= 2
    summands = thetaset.sym(globe(k), n_max, max_dim, max_edges)
    for n in range(1, n_max + 1):
        W = thetaset.nerve(globe_chain(k, n), max_dim, max_edges)
        sizes = [[str(t), len(summands[n][t]), len(W[t])] for t in W.catalog]
        R.add(f"|Sym^{n}| = |N(wedge)| on {len(sizes)} shapes",
              all(a == b for _, a, b in sizes), diagnostic=diag, sizes=sizes)
        recs = thetaset.wedge_compare(k, n, max_dim, max_edges)
        bad = [r.to_json() for r in recs if not r.bijective]
        R.add(f"coordinate map bijective, n={n}", not bad, diagnostic=diag,
              failures=bad[:5])
    for rec in thetaset.reduced_chain_colimit_check(k, n_max, max_dim, max_edges):
        R.add(f"colimit θ={rec.theta}", rec.passed, diagnostic=diag, data=rec.to_json())
    return R.finish()


# -- stratified side -----------------------------------------------------

def check_dold_thom(X: strat.StratSet, degrees: list[int] | None, N: int) -> CheckReport:
    degrees = degrees if degrees is not None else list(range(min(3, X.dim) + 1))
    R = CheckReport("check-dold-thom", {"X": X.label, "degrees": degrees, "N": N})
    problems = X.check()
    R.add(f"{X.label} is a valid stratified set", not problems, problems=problems[:5])
    for m in degrees:
        rep = strat.dold_thom_check(X, m, N)
        R.add(f"{X.label} m={m} N={N}: {rep.lhs} vs {rep.rhs}", rep.passed, data=rep.to_json())
    return R.finish()


def check_sp(X: strat.StratSet, n: int) -> CheckReport:
    R = CheckReport("sp", {"X": X.label, "n": n})
    P = strat.sp_power(X, n)
    for m in range(X.dim + 1):
        expected = comb(len(X.simplices[m]) + n - 1, n)
        got = len(P.simplices[m])
        R.add(f"degree {m}: {got} multisets", got == expected, size=got, expected=expected,
              thin=len(P.thin.get(m, ())))
    problems = P.check()
    R.add("simplicial identities", not problems, problems=problems[:5])
    return R.finish()


def check_nmod(X: strat.StratSet, M: CommMonoid, bound: int, reduced: bool) -> CheckReport:
    R = CheckReport("nmod", {"X": X.label, "coeff": M.describe(), "bound": bound,
                             "reduced": reduced})
    S = (strat.m_linear_reduced if reduced else strat.m_linear)(X, M, bound)
    census = S.census()
    R.add("census", True, truncated=not M.finite, sizes=census,
          sample={n: [[[strat._name(x), M.name_of(c)] for x, c in a]
                      for a in S.carrier(n)[:10]] for n in range(min(2, S.dim) + 1)})
    problems = S.check_homomorphisms(range(min(2, S.dim) + 1))
    R.add("faces and degeneracies additive, thin closed", not problems, problems=problems[:5])
    return R.finish()


def check_ho1(X: strat.StratSet, M: CommMonoid, word_bound: int, weight_bound: int) -> CheckReport:
    R = CheckReport("ho1", {"X": X.label, "coeff": M.describe(), "word_bound": word_bound,
                            "weight_bound": weight_bound})
    H = homotopy.ho1(strat.m_linear_reduced(X, M, weight_bound), (), word_bound, weight_bound)
    R.add(f"{len(H.endo.classes)} endo classes", True, truncated=not H.endo.complete,
          **H.to_json())
    return R.finish()


def _cyclic_order(M: CommMonoid) -> int | None:
    """0 for N, n for Z/n presented as addition mod n, None otherwise."""
    if M.kind == "freeC" and M.rank == 1:
        return 0
    if M.kind == "table":
        n = len(M.table)
        if all(M.op(a, b) == (a + b) % n for a in range(n) for b in range(n)):
            return n
    return None


def check_sphere(M: CommMonoid, n: int, bound: int) -> CheckReport:
    R = CheckReport("check-sphere", {"coeff": M.describe(), "n": n, "bound": bound})
    homs, truncated = pointed_monoid_endos(n, M, M, bound)
    order = _cyclic_order(M)
    case = {"endos": [str(h) for h in homs]}
    ok = True
    if order is not None:
        # an endomorphism is fixed by the image a of the generator; composing
        # the ones for a and b must give the one for a * b
        def gen_image(h):
            return h.images[0][0] if order == 0 else h.images[0]

        by_image = {gen_image(h): h for h in homs} if homs and homs[0].images else {}
        table = {}
        for a, h in by_image.items():
            for b, k in by_image.items():
                got = gen_image(h.compose(k))
                table[f"{a},{b}"] = got
                ok &= got == (a * b if order == 0 else (a * b) % order)
        expected = bound + 1 if order == 0 else order
        ok &= len(homs) == expected
        case["composition"] = table
    R.add(f"pointed endos of S^{n}: {len(homs)}", ok, truncated=truncated, data=case)
    if n == 1:
        H, cmp = homotopy.circle_ho1(M, bound)
        R.add("ho1 of the reduced circle model ≅ (M,+)", cmp.passed,
              truncated=not H.endo.complete, data=cmp.to_json(), endo=H.endo.to_json())
    else:
        census = homotopy.sphere_census(n, M, min(bound, 3))
        R.add(f"reduced model of S^{n}: M on the top cell", census["passed"], data=census)
    cmp = homotopy.delooped_sphere_comparison(n, M, bound)
    R.add(f"Π_{n - 1}(B^{n} M) endo classes ≅ (M,+)", cmp.passed, data=cmp.to_json())
    return R.finish()


def check_hurewicz(g: int, M: CommMonoid, bound: int) -> CheckReport:
    R = CheckReport("check-hurewicz", {"g": g, "coeff": M.describe(), "bound": bound})
    res = homotopy.hurewicz_check(g, M, bound)
    R.add(f"g={g} {M.describe()}: {res.lhs} abelian classes vs {res.rhs} endo classes",
          res.passed, truncated=res.truncated, data=res.to_json())
    return R.finish()

