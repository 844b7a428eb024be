"""Candidate showdowns at fixed instances, and a scan for the order where the
designated construction overtakes the Tait graph."""

from __future__ import annotations

import argparse
import json

from spex.families import decompose, designated_case
from spex.showdown import candidate_showdown, format_table

DEFAULT_INSTANCES = ["22,5,8", "18,2,5", "19,2,4", "35,2,8"]


def _triple(text: str) -> tuple[int, int, int]:
    n, s, t = (int(x) for x in text.split(","))
    return n, s, t


def scan(s: int, t: int, q: int, n_max: int) -> dict:
    """Walk n = s - 1 + p*t + q upward and report where the designated case first wins."""
    rows = []
    p = 1
    while True:
        n = s - 1 + p * t + q
        if n > n_max:
            break
        sd = candidate_showdown(n, s, t)
        rows.append({"n": n, "designated": sd.designated, "first": sd.ranked[0].case, "won": sd.designated_first})
        if sd.designated_first:
            break
        p += 1
    return {"s": s, "t": t, "q": q, "rows": rows, "crossover": rows[-1]["n"] if rows and rows[-1]["won"] else None}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("instances", nargs="*", type=_triple, help="n,s,t triples")
    ap.add_argument("--scan", nargs=3, type=int, metavar=("S", "T", "Q"), help="scan n with fixed remainder q")
    ap.add_argument("--n-max", type=int, default=400)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    if args.scan:
        s, t, q = args.scan
        result = scan(s, t, q, args.n_max)
        if args.json:
            print(json.dumps(result, indent=2))
            return
        for r in result["rows"]:
            print(f"n={r['n']:>4}  designated={r['designated']:<13} first={r['first']:<13} {'WIN' if r['won'] else ''}")
        print(f"crossover: {result['crossover']}")
        return

    for n, s, t in args.instances or [_triple(x) for x in DEFAULT_INSTANCES]:
        decompose(n, s, t)
        sd = candidate_showdown(n, s, t)
        if args.json:
            print(json.dumps(sd.to_dict(), sort_keys=True, indent=2))
        else:
            print(format_table(sd))
            print(f"case rule: {designated_case(n, s, t)}\n")


if __name__ == "__main__":
    main()
