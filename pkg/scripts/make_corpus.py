"""Write the bundled stratified-set corpus and a few category specs to data/."""

import argparse
import json
from pathlib import Path

from dihom.checks import CORPUS

CATEGORIES = {
    "globe2": {"builtin": "globe", "params": [2]},
    "chain_1_2": {"builtin": "globe_chain", "params": [1, 2]},
    "b2_z2": {"builtin": "delooped_monoid", "params": [2, "Z2"]},
    "explicit_d2": {"objects": ["a", "b"], "basepoint": "a",
                         "mor": {"a,b": {"builtin": "globe", "params": [1]}}},
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parents[1] / "data")
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for name, make in CORPUS.items():
        X = make()
        path = args.out / f"{name}.json"
        path.write_text(json.dumps(X.to_json(), ensure_ascii=False) + "\n")
        print(f"{path.name}: {X.label}, {sum(len(v) for v in X.simplices.values())} simplices")
    for name, spec in CATEGORIES.items():
        path = args.out / f"cat_{name}.json"
        path.write_text(json.dumps(spec, indent=1) + "\n")
        print(f"{path.name}")


if __name__ == "__main__":
    main()
