"""Endo monoid of the reduced M-linear circle model for several coefficients."""

import argparse

from dihom.homotopy import circle_ho1
from dihom.monoids import parse_coeff


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bound", type=int, default=6)
    ap.add_argument("coeffs", nargs="*", default=["N", "Z2", "Z3", "N^2", "trivial"])
    args = ap.parse_args()
    for spec in args.coeffs:
        M = parse_coeff(spec)
        H, cmp = circle_ho1(M, args.bound)
        print(f"{M.describe():>8}: {len(H.words):6d} words, {cmp.classes:3d} classes, "
              f"{len(cmp.elements):3d} elements, iso={cmp.passed}, "
              f"undefined products={sum(v is None for v in H.endo.table.values())}")


if __name__ == "__main__":
    main()
