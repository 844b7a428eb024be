"""Command-line entry point: ``spex <command> [flags]``.

Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
Standard output is a pure function of the arguments unless ``--footer`` is
given.
"""

from __future__ import annotations

import argparse
import json
import math
import shlex
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone
from pathlib import Path

from .enumeration import worker_count
from .errors import SpexError
from .families import FamilySpec, build_family
from .graph6 import decode_g6, encode_g6
from .graphs import Graph
from .minors import find_minor, has_st_property, parse_pattern, pattern_graph
from .report import render
from .search import PRUNING_MODES, SearchSpec, parse_constraint, search_extremal
from .showdown import candidate_showdown, format_table
from .spectral import rho_enclosure
from .verify import TAGS, verify_theorem

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# flags shared by `verify` and campaign lines
_VERIFY_KEYS = ("s", "t", "n", "n_min", "n_max", "trials", "seed")


class _UsageError(Exception):
    pass


def _positive_float(text: str) -> float:
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not x > 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return x


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--g6", help="graph in graph6 format")
    src.add_argument("--family", help="family spec, e.g. tait:n=13,s=2,t=3")


def _graph(args) -> Graph:
    if args.g6 is not None:
        return decode_g6(args.g6)
    return build_family(FamilySpec.parse(args.family))


# ---- commands -------------------------------------------------------------


def cmd_construct(args) -> int:
    g = build_family(FamilySpec.parse(args.family))
    if args.format == "g6":
        print(encode_g6(g))
    elif args.format == "edges":
        print(g.n)
        for u, v in g.edges():
            print(u, v)
    else:
        print(json.dumps({"family": args.family, "n": g.n, "edges": g.edges(), "g6": encode_g6(g)}, sort_keys=True))
    return EXIT_OK


def cmd_rho(args) -> int:
    g = _graph(args)
    width = _positive_float(args.width)
    iv, _ = rho_enclosure(g, width=width)
    digits = max(0, math.ceil(-math.log10(width) - 1e-12))
    if args.bounds:
        print(f"[{iv.lo!r}, {iv.hi!r}] method={iv.method}")
    else:
        print(f"{iv.mid:.{digits}f} ± {args.width}")
    return EXIT_OK


def cmd_minor_check(args) -> int:
    g = _graph(args)
    pattern = parse_pattern(args.pattern)
    model = find_minor(g, pattern, mode=args.mode)
    if model is None:
        print("no minor")
        return EXIT_OK
    model.validate(g, pattern_graph(pattern))
    print(f"minor found: {pattern}")
    if not args.no_witness:
        print(model.to_json())
    return EXIT_OK


def cmd_property_check(args) -> int:
    g = _graph(args)
    ok = has_st_property(g, args.s, args.t, fast=not args.no_fast_path)
    print(f"{'has' if ok else 'lacks'} the ({args.s},{args.t})-property")
    return EXIT_OK


def cmd_search(args) -> int:
    spec = SearchSpec(args.n, parse_constraint(args.constraint), args.connectivity, args.pruning)
    cert = search_extremal(spec)
    text = cert.to_json()
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / f"{spec.config_hash()}.json").write_text(text)
    sys.stdout.write(text)
    return EXIT_OK


def cmd_showdown(args) -> int:
    sd = candidate_showdown(args.n, args.s, args.t)
    if args.json:
        print(json.dumps(sd.to_dict(), sort_keys=True, indent=2))
    else:
        print(format_table(sd))
    return EXIT_OK


def parse_campaign_line(line: str) -> tuple[str, dict]:
    """``theorem=thm1.4 t=3 n_max=9`` -> ``("thm1.4", {"t": 3, "n_max": 9})``."""
    fields = {}
    for tok in shlex.split(line):
        key, sep, val = tok.partition("=")
        if not sep:
            raise _UsageError(f"campaign token {tok!r} is not key=value")
        fields[key.strip().replace("-", "_")] = val.strip()
    tag = fields.pop("theorem", None)
    if tag is None:
        raise _UsageError(f"campaign line lacks theorem=: {line!r}")
    unknown = set(fields) - set(_VERIFY_KEYS)
    if unknown:
        raise _UsageError(f"unknown campaign keys {sorted(unknown)} in {line!r}")
    try:
        return tag, {k: int(v) for k, v in fields.items()}
    except ValueError:
        raise _UsageError(f"campaign values must be integers: {line!r}") from None


def read_campaigns(path: str) -> list[tuple[str, dict]]:
    out = []
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(parse_campaign_line(line))
    return out


def _run_campaign(job: tuple[str, dict]):
    tag, params = job
    return verify_theorem(tag, params)


def cmd_verify(args) -> int:
    if args.config:
        jobs = read_campaigns(args.config)
    elif args.theorem:
        params = {k: getattr(args, k) for k in _VERIFY_KEYS if getattr(args, k) is not None}
        jobs = [(args.theorem, params)]
    else:
        raise _UsageError("verify needs --theorem or --config")
    start = time.perf_counter()
    workers = min(worker_count(), len(jobs))
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            reports = list(pool.map(_run_campaign, jobs))
    else:
        reports = [_run_campaign(j) for j in jobs]
    if args.json:
        print(json.dumps([r.to_dict() for r in reports], sort_keys=True, indent=2))
    else:
        print("\n\n".join(r.render() for r in reports))
    if args.footer:
        stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
        print(f"-- {stamp}, {time.perf_counter() - start:.2f} s, {workers} worker(s)")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_report(args) -> int:
    sys.stdout.write(render(args.dir, args.format))
    return EXIT_OK


# ---- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spex", description="Spectral extremal tools for minor-free graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a named family and print it")
    p.add_argument("--family", required=True)
    p.add_argument("--format", choices=("g6", "edges", "json"), default="g6")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("rho", help="spectral radius enclosure")
    _add_graph_source(p)
    p.add_argument("--width", default="1e-9", help="target enclosure width (default 1e-9)")
    p.add_argument("--bounds", action="store_true", help="print both endpoints in full precision")
    p.set_defaults(func=cmd_rho)

    p = sub.add_parser("minor-check", help="decide minor containment")
    _add_graph_source(p)
    p.add_argument("--pattern", required=True, help="star:T, biclique:A,B, g6:CODE or a family spec")
    p.add_argument("--mode", choices=("fast", "bruteforce"), default="fast")
    p.add_argument("--no-witness", action="store_true")
    p.set_defaults(func=cmd_minor_check)

    p = sub.add_parser("property-check", help="decide the (s,t)-property")
    _add_graph_source(p)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--no-fast-path", action="store_true", help="skip the order t+1 complement shortcut")
    p.set_defaults(func=cmd_property_check)

    p = sub.add_parser("search", help="exhaustive rho-maximization over small graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--constraint", required=True, help="k1t:t=T, kst:s=S,t=T, st:s=S,t=T or pattern:P")
    p.add_argument("--connectivity", choices=("connected", "any"), default="connected")
    p.add_argument("--pruning", choices=PRUNING_MODES, default="none")
    p.add_argument("--out-dir", help="also write the certificate to DIR/<config hash>.json")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("showdown", help="rank the candidate constructions at (n, s, t)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_showdown)

    p = sub.add_parser("verify", help="run a verification check or a campaign file")
    p.add_argument("--theorem", choices=sorted(TAGS))
    p.add_argument("--config", help="campaign file, one 'theorem=TAG key=value ...' per line")
    for key in _VERIFY_KEYS:
        p.add_argument("--" + key.replace("_", "-"), dest=key, type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--footer", action="store_true", help="append a timestamp and runtime line")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", help="tabulate a directory of search certificates")
    p.add_argument("--dir", required=True)
    p.add_argument("--format", choices=("csv", "markdown"), default="markdown")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (SpexError, _UsageError, argparse.ArgumentTypeError, OSError) as exc:
        print(f"spex {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
