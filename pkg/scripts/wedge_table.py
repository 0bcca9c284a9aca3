"""Print lhs/rhs of the wedge comparison for k = 1, 2 over the shape catalog."""

import argparse

from dihom.thetaset import wedge_compare


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=4)
    ap.add_argument("--max-dim", type=int, default=2)
    ap.add_argument("--max-edges", type=int, default=4)
    args = ap.parse_args()
    for k in (1, 2):
        for n in range(2, args.n_max + 1):
            recs = wedge_compare(k, n, args.max_dim, args.max_edges)
            bad = [r for r in recs if not r.bijective]
            print(f"k={k} n={n}: {len(recs) - len(bad)}/{len(recs)} bijective")
            for r in bad:
                print(f"    θ={r.theta}  lhs={r.lhs} rhs={r.rhs} "
                      f"collisions={sum('orbit' in w for w in r.witnesses)} "
                      f"staircase={r.staircase_orbits}")


if __name__ == "__main__":
    main()
