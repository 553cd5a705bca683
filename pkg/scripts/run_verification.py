#!/usr/bin/env python3
"""Run the full desk-scale verification suite and print a summary table.

Example:
    python3 scripts/run_verification.py            # everything
    python3 scripts/run_verification.py stochastic qrw
"""

import argparse
import json
import sys
import time

from sigwalk.verify import CHECKS


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("checks", nargs="*", default=[],
                    help="subset of checks to run (default: all)")
    ap.add_argument("--json", action="store_true",
                    help="emit the raw JSON reports instead of a table")
    args = ap.parse_args()

    names = args.checks or list(CHECKS)
    bad = [n for n in names if n not in CHECKS]
    if bad:
        ap.error(f"unknown checks: {bad}; available: {sorted(CHECKS)}")

    all_ok = True
    for name in names:
        t0 = time.time()
        reports = CHECKS[name]()
        dt = time.time() - t0
        ok = all(r["pass"] for r in reports)
        all_ok = all_ok and ok
        if args.json:
            for r in reports:
                print(json.dumps(r, sort_keys=True))
        else:
            status = "ok" if ok else "FAIL"
            print(f"{name:<14} {status:<5} {len(reports):3d} reports  {dt:6.1f}s")
            if not ok:
                for r in reports:
                    if not r["pass"]:
                        print("  ", json.dumps(r, sort_keys=True)[:200])
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
