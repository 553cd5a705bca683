#!/usr/bin/env python3
"""Sample a particle-system trajectory and dump it as CSV.

Example:
    python3 scripts/run_trajectory.py --F beta-:1/2 --n 3 --steps 200 --seed 7 \
        --out traj.csv
"""

import argparse
import csv
import sys

from sigwalk import parse_spectral, simulate


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--F", default="beta-:1/2")
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--steps", type=int, default=200)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()

    traj = simulate((0,) * args.n, parse_spectral(args.F),
                    args.steps, args.seed)
    fh = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    try:
        w = csv.writer(fh)
        w.writerow(["step", "i", "position"])
        for row in traj.to_csv_rows():
            w.writerow(row)
    finally:
        if fh is not sys.stdout:
            fh.close()
    print(f"final state: {traj.summary()['final']}", file=sys.stderr)


if __name__ == "__main__":
    main()
