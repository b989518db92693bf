"""Run the randomized property suites and report timings.

    python scripts/run_sweeps.py                 # all four with default sizes
    python scripts/run_sweeps.py thm22 --count 1000 --seed 3
"""

import argparse
import json
import time

from germring.sweeps import SAMPLE_SEED, run_sweep

DEFAULTS = {"thm22": (7, 200), "thm23": (7, 200), "hilbert-oracle": (SAMPLE_SEED, 50), "toric-oracle": (SAMPLE_SEED, 50)}


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("kinds", nargs="*", default=list(DEFAULTS), choices=list(DEFAULTS))
    ap.add_argument("--seed", type=int)
    ap.add_argument("--count", type=int)
    ap.add_argument("--budget", type=float, help="seconds allowed for the toric oracle")
    args = ap.parse_args()
    for kind in args.kinds:
        seed, count = DEFAULTS[kind]
        deadline = time.monotonic() + args.budget if args.budget else None
        start = time.perf_counter()
        rep = run_sweep(kind, seed=args.seed or seed, count=args.count or count, deadline=deadline)
        rep["seconds"] = round(time.perf_counter() - start, 2)
        print(json.dumps(rep))


if __name__ == "__main__":
    main()
