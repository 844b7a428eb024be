"""Tabulate isomorphism-class counts (all and connected) with timings."""

from __future__ import annotations

import argparse
import time

from spex.enumeration import enumerate_graphs
from spex.graphs import is_connected


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=8)
    ap.add_argument("--n-min", type=int, default=1)
    args = ap.parse_args()

    print(f"{'n':>3} {'all':>10} {'connected':>10} {'seconds':>9}")
    for n in range(args.n_min, args.n_max + 1):
        start = time.perf_counter()
        total = conn = 0
        for g in enumerate_graphs(n):
            total += 1
            conn += is_connected(g)
        print(f"{n:>3} {total:>10} {conn:>10} {time.perf_counter() - start:>9.2f}")


if __name__ == "__main__":
    main()
