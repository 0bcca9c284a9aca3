"""Command line entry point: ``dihom <subcommand> ...``.

Every subcommand prints a short summary, optionally writes the full JSON
report with ``--json-out``, and exits 0 iff the verdict is pass.
"""

from __future__ import annotations

import argparse
import sys

from . import checks
from .errors import DihomError
from .monoids import parse_coeff
from .pasting import parse_tree

D = checks.DEFAULTS


def _theta_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-dim", type=int, default=D["max_dim"], help="tree height bound")
    p.add_argument("--max-edges", type=int, default=D["max_edges"], help="tree edge bound")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dihom", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json-out", metavar="FILE", help="write the full JSON report here")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hom", parents=[common], help="enumerate functors from a shape")
    p.add_argument("tree", type=parse_tree, help="bracket tree, e.g. '[[],[]]'")
    p.add_argument("category", help="category JSON (inline or a file)")

    p = sub.add_parser("nerve", parents=[common], help="nerve sizes on the shape catalog")
    p.add_argument("category")
    _theta_opts(p)

    p = sub.add_parser("check-wedge", parents=[common], help="wedge vs symmetric power")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    _theta_opts(p)

    p = sub.add_parser("check-disks", parents=[common], help="Sym of a disk and its colimit")
    p.add_argument("k", type=int)
    p.add_argument("n_max", type=int, nargs="?", default=D["n_max"])
    _theta_opts(p)

    p = sub.add_parser("check-dold-thom", parents=[common],
                       help="symmetric products vs the reduced N-linear model")
    p.add_argument("X", help="stratified set JSON file or builtin:NAME")
    p.add_argument("-m", "--degree", type=int, action="append",
                   help="simplicial degree (repeatable; default 0..3)")
    p.add_argument("-N", "--stages", type=int, default=D["n_max"], help="stage bound")

    p = sub.add_parser("check-sphere", parents=[common], help="endomorphisms of spheres")
    p.add_argument("n", type=int, nargs="?", default=1)
    p.add_argument("--coeff", type=parse_coeff, default="N")
    p.add_argument("--bound", type=int, default=D["weight_bound"])

    p = sub.add_parser("check-hurewicz", parents=[common], help="abelianization comparison")
    p.add_argument("g", type=int)
    p.add_argument("--coeff", type=parse_coeff, default="N")
    p.add_argument("--bound", type=int, default=4)

    p = sub.add_parser("sp", parents=[common], help="symmetric power census")
    p.add_argument("X")
    p.add_argument("n", type=int)

    p = sub.add_parser("nmod", parents=[common], help="M-linear model census")
    p.add_argument("X")
    p.add_argument("--coeff", type=parse_coeff, default="N")
    p.add_argument("--bound", type=int, default=3)
    p.add_argument("--reduced", action="store_true")

    p = sub.add_parser("ho1", parents=[common], help="endo monoid of the reduced model")
    p.add_argument("X")
    p.add_argument("--coeff", type=parse_coeff, default="N")
    p.add_argument("--bound", type=int, default=D["weight_bound"], help="weight bound")
    p.add_argument("--word-bound", type=int, default=D["word_bound"])
    return parser


def run(args: argparse.Namespace):
    c = args.command
    if c == "hom":
        return checks.check_hom(args.tree, checks.load_category(args.category))
    if c == "nerve":
        return checks.check_nerve(checks.load_category(args.category), args.max_dim,
                                  args.max_edges)
    if c == "check-wedge":
        return checks.check_wedge(args.k, args.n, args.max_dim, args.max_edges)
    if c == "check-disks":
        return checks.check_disks(args.k, args.n_max, args.max_dim, args.max_edges)
    if c == "check-dold-thom":
        return checks.check_dold_thom(checks.load_stratset(args.X), args.degree, args.stages)
    if c == "check-sphere":
        return checks.check_sphere(args.coeff, args.n, args.bound)
    if c == "check-hurewicz":
        return checks.check_hurewicz(args.g, args.coeff, args.bound)
    if c == "sp":
        return checks.check_sp(checks.load_stratset(args.X), args.n)
    if c == "nmod":
        return checks.check_nmod(checks.load_stratset(args.X), args.coeff, args.bound,
                                 args.reduced)
    if c == "ho1":
        return checks.check_ho1(checks.load_stratset(args.X), args.coeff, args.word_bound,
                                args.bound)
    raise AssertionError(c)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = run(args)
    except (DihomError, ValueError, KeyError, OSError) as exc:
        print(f"dihom {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    print(report.summary())
    if args.json_out:
        report.write(args.json_out)
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
