"""Does the number of Schur parameters change the attainable maxima?

Runs the optimizer at depths 1..8 for each functional at a few values of
|c1| and prints the empirical maximum next to the operative bound. The
functionals use c1..c4, which depend only on the first four parameters,
so the maxima should stop growing at depth 4.
"""

import argparse
import csv
import sys

from schwarz_bounds.bounds import FunctionalSpec
from schwarz_bounds.optimizer import OptConfig, maximize


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--depths", type=int, nargs="+", default=list(range(1, 9)))
    ap.add_argument("--t", type=float, nargs="+", default=[0.0, 0.3, 0.7])
    ap.add_argument("--starts", type=int, default=32)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--witnesses", action="store_true", help="seed the known extremals as start 0")
    args = ap.parse_args()

    specs = [FunctionalSpec("F1", 1), FunctionalSpec("F2", 1), FunctionalSpec("F3")]
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["functional", "t", "depth", "empirical_max", "bound", "gap"])
    for spec in specs:
        for t in args.t:
            for d in args.depths:
                cfg = OptConfig(depth=d, starts=args.starts, seed=args.seed, use_witnesses=args.witnesses)
                r = maximize(spec, t, cfg)
                out.writerow([spec.describe(), t, d, f"{r.empirical_max:.12g}", f"{r.bound:.12g}", f"{r.gap:.3e}"])


if __name__ == "__main__":
    main()
