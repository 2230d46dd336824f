#!/usr/bin/env python3
"""Reproduce the class counts and compare them with the recorded values.

Typical runs::

    python3 scripts/verify_counts.py --max-order 6
    python3 scripts/verify_counts.py --max-order 5 --method both --workers 2

Exits 1 when any computed count disagrees with the recorded table.
"""
import argparse
import sys
import time

from posetmat.enumeration import KNOWN_COUNTS, count_table


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-order", type=int, default=6)
    parser.add_argument(
        "--method", default="oracle", choices=["oracle", "compose", "both"]
    )
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    start = time.monotonic()
    table = count_table(args.max_order, args.method, KNOWN_COUNTS, args.workers)
    elapsed = time.monotonic() - start
    print(table.render())
    print(f"({elapsed:.2f}s, workers={args.workers})")
    if not table.all_match:
        print("MISMATCH against the recorded counts", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
