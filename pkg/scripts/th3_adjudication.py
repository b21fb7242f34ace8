"""Compare the three printed forms of the |c1 c3 - c2^2| bound against the optimizer."""

import argparse

import numpy as np

from schwarz_bounds.bounds import TH3_VARIANTS, FunctionalSpec, bound_th3
from schwarz_bounds.optimizer import OptConfig, sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--grid", type=int, default=11)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    reps = sweep(FunctionalSpec("F2", 1), np.linspace(0, 1, args.grid), OptConfig(seed=args.seed, use_witnesses=False))
    print("t,empirical_max," + ",".join(TH3_VARIANTS) + ",verdict")
    for r in reps:
        values = {v: bound_th3(r.t, v) for v in TH3_VARIANTS}
        broken = [v for v, b in values.items() if r.empirical_max > b + 1e-9]
        verdict = "exceeds " + "+".join(broken) if broken else "all hold"
        print(f"{r.t:.2f},{r.empirical_max:.12g}," + ",".join(f"{values[v]:.12g}" for v in TH3_VARIANTS) + f",{verdict}")


if __name__ == "__main__":
    main()
