"""Exhaustive spectral-extremal search over small graphs.

Every constraint offered here is minor-closed, hence closed under vertex
deletion, so it doubles as the hereditary filter of the enumerator: only
feasible graphs are ever generated. Ranking uses floating enclosures to
find the contenders and exact characteristic-polynomial arithmetic to
settle ties and gaps, so certificates do not depend on floating noise.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from math import comb

from .enumeration import ENUMERATION_CAP, enumerate_graphs
from .errors import CapacityError, DomainError
from .graph6 import decode_g6, encode_g6
from .graphs import Graph, degree_sequence, is_connected
from .majorization import is_weakly_majorized
from .minors import Biclique, Star, has_minor, has_st_property, parse_pattern
from .spectral import compare_rho, rho_enclosure, rho_exact

SCHEMA = 1
PRUNING_MODES = ("none", "edge_bound", "majorization_heuristic")


# ---- constraints ----------------------------------------------------------


@dataclass(frozen=True)
class K1tMinorFree:
    t: int

    def __post_init__(self):
        if self.t < 1:
            raise DomainError(f"K_(1,t) needs t >= 1, got {self.t}")

    def __call__(self, g: Graph) -> bool:
        return not has_minor(g, Star(self.t))

    def edge_cap(self, n: int) -> int | None:
        # known connected bound, valid from n = t+2 on
        if self.t >= 3 and n >= self.t + 2:
            return comb(self.t, 2) + n - self.t
        return None

    def __str__(self) -> str:
        return f"k1t:t={self.t}"


@dataclass(frozen=True)
class KstMinorFree:
    s: int
    t: int

    def __post_init__(self):
        if not 1 <= self.s <= self.t:
            raise DomainError(f"K_(s,t) needs 1 <= s <= t, got s={self.s}, t={self.t}")

    def __call__(self, g: Graph) -> bool:
        return not has_minor(g, Biclique(self.s, self.t))

    def edge_cap(self, n: int) -> int | None:
        return K1tMinorFree(self.t).edge_cap(n) if self.s == 1 else None

    def __str__(self) -> str:
        return f"kst:s={self.s},t={self.t}"


@dataclass(frozen=True)
class StProperty:
    s: int
    t: int

    def __post_init__(self):
        if not 2 <= self.s <= self.t:
            raise DomainError(f"(s,t)-property needs 2 <= s <= t, got s={self.s}, t={self.t}")

    def __call__(self, g: Graph) -> bool:
        return has_st_property(g, self.s, self.t)

    def edge_cap(self, n: int) -> int | None:
        if n == self.t + 1:
            return comb(self.t, 2) + (self.t + 1) // (self.s + 1) - 1
        # the property includes K_{1,t}-minor-freeness
        return K1tMinorFree(self.t).edge_cap(n)

    def __str__(self) -> str:
        return f"st:s={self.s},t={self.t}"


@dataclass(frozen=True)
class PatternFree:
    pattern: str

    def __post_init__(self):
        parse_pattern(self.pattern)

    def __call__(self, g: Graph) -> bool:
        return not has_minor(g, parse_pattern(self.pattern))

    def edge_cap(self, n: int) -> int | None:
        p = parse_pattern(self.pattern)
        if isinstance(p, Star):
            return K1tMinorFree(p.t).edge_cap(n)
        return None

    def __str__(self) -> str:
        return f"pattern:{self.pattern}"


Constraint = K1tMinorFree | KstMinorFree | StProperty | PatternFree


def parse_constraint(text: str) -> Constraint:
    """``k1t:t=3``, ``kst:s=2,t=3``, ``st:s=2,t=5`` or ``pattern:<pattern>``."""
    kind, _, rest = text.strip().partition(":")
    if kind == "pattern":
        return PatternFree(rest)
    params = {}
    for item in filter(None, rest.split(",")):
        key, sep, val = item.partition("=")
        if not sep:
            raise DomainError(f"malformed constraint {text!r}")
        try:
            params[key.strip()] = int(val)
        except ValueError:
            raise DomainError(f"constraint parameter {key.strip()} must be an integer") from None
    try:
        if kind == "k1t":
            return K1tMinorFree(**params)
        if kind == "kst":
            return KstMinorFree(**params)
        if kind == "st":
            return StProperty(**params)
    except TypeError:
        raise DomainError(f"wrong parameters for constraint {kind!r}: {sorted(params)}") from None
    raise DomainError(f"unknown constraint {kind!r}; use k1t, kst, st or pattern")


@dataclass(frozen=True)
class _CappedFilter:
    """The constraint, with connected graphs above the known edge cap rejected unchecked."""

    constraint: Constraint

    def __call__(self, g: Graph) -> bool:
        cap = self.constraint.edge_cap(g.n)
        if cap is not None and g.num_edges > cap and is_connected(g):
            return False
        return self.constraint(g)


# ---- spec and certificate -------------------------------------------------


@dataclass(frozen=True)
class SearchSpec:
    n: int
    constraint: Constraint
    connectivity: str = "connected"
    pruning: str = "none"

    def __post_init__(self):
        if not 0 <= self.n <= ENUMERATION_CAP:
            raise CapacityError(f"search order must be in 0..{ENUMERATION_CAP}, got {self.n}")
        if self.connectivity not in ("connected", "any"):
            raise DomainError(f"connectivity must be 'connected' or 'any', got {self.connectivity!r}")
        if self.pruning not in PRUNING_MODES:
            raise DomainError(f"pruning must be one of {PRUNING_MODES}, got {self.pruning!r}")

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "connectivity": self.connectivity,
            "constraint": str(self.constraint),
            "pruning": self.pruning,
        }

    @classmethod
    def from_dict(cls, d: dict) -> SearchSpec:
        unknown = set(d) - {"n", "connectivity", "constraint", "pruning"}
        if unknown:
            raise DomainError(f"unknown search keys: {sorted(unknown)}")
        if "n" not in d or "constraint" not in d:
            raise DomainError("a search needs n and constraint")
        return cls(
            n=int(d["n"]),
            constraint=parse_constraint(str(d["constraint"])),
            connectivity=str(d.get("connectivity", "connected")),
            pruning=str(d.get("pruning", "none")),
        )

    def config_hash(self) -> str:
        blob = json.dumps(self.to_dict(), sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:16]


@dataclass
class Certificate:
    """Outcome of one search. ``winners`` are graph6 strings in canonical order."""

    spec: dict
    config_hash: str
    classes_examined: int
    winners: list[str]
    rho: dict | None
    unique: bool
    runner_up: str | None = None
    gap_lower_bound: str | None = None
    heuristic: bool = False
    notes: list[str] = field(default_factory=list)
    schema: int = SCHEMA

    @property
    def empty(self) -> bool:
        return not self.winners

    def to_dict(self) -> dict:
        return {
            "schema": self.schema,
            "spec": self.spec,
            "config_hash": self.config_hash,
            "classes_examined": self.classes_examined,
            "empty": self.empty,
            "winners": self.winners,
            "rho": self.rho,
            "unique": self.unique,
            "runner_up": self.runner_up,
            "gap_lower_bound": self.gap_lower_bound,
            "heuristic": self.heuristic,
            "notes": self.notes,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> Certificate:
        if d.get("schema") != SCHEMA:
            raise DomainError(f"unsupported certificate schema {d.get('schema')!r}; expected {SCHEMA}")
        return cls(
            spec=d["spec"],
            config_hash=d["config_hash"],
            classes_examined=d["classes_examined"],
            winners=list(d["winners"]),
            rho=d["rho"],
            unique=d["unique"],
            runner_up=d.get("runner_up"),
            gap_lower_bound=d.get("gap_lower_bound"),
            heuristic=d.get("heuristic", False),
            notes=list(d.get("notes", [])),
        )


# ---- ranking --------------------------------------------------------------


@dataclass
class Ranking:
    winners: list[int]
    runner_up: int | None
    gap: float | None


def rank_by_rho(graphs: list[Graph]) -> Ranking:
    """Exact argmax of rho over ``graphs`` with ties kept, plus the runner-up gap.

    Enclosures only choose which pairs get compared; every verdict that
    decides the result is certified by exact arithmetic.
    """
    if not graphs:
        return Ranking([], None, None)
    encl = [rho_enclosure(g)[0] for g in graphs]
    order = sorted(range(len(graphs)), key=lambda i: (-encl[i].hi, i))

    best = order[0]
    winners = [best]
    for i in order[1:]:
        if encl[i].hi < encl[best].lo:
            break
        c = compare_rho(graphs[i], graphs[best], exact=True)
        if c.verdict == "greater":
            best, winners = i, [i]
        elif c.verdict == "equal":
            winners.append(i)
    winners.sort()
    won = set(winners)

    rest = [i for i in order if i not in won]
    if not rest:
        return Ranking(winners, None, None)
    runner = rest[0]
    for i in rest[1:]:
        if encl[i].hi < encl[runner].lo:
            break
        c = compare_rho(graphs[i], graphs[runner], exact=True)
        if c.verdict == "greater" or (c.verdict == "equal" and i < runner):
            runner = i
    gap = compare_rho(graphs[winners[0]], graphs[runner], exact=True)
    return Ranking(winners, runner, gap.gap)


def _majorization_front(graphs: list[Graph]) -> list[int]:
    """Indices whose degree sequence is not strictly weakly majorized by another's."""
    seqs = [degree_sequence(g) for g in graphs]
    distinct = sorted(set(seqs))
    dominated = set()
    for x in distinct:
        for y in distinct:
            if x != y and is_weakly_majorized(x, y):
                dominated.add(x)
                break
    return [i for i, s in enumerate(seqs) if s not in dominated]


def feasible_graphs(spec: SearchSpec) -> list[Graph]:
    filt = _CappedFilter(spec.constraint) if spec.pruning == "edge_bound" else spec.constraint
    return list(enumerate_graphs(spec.n, spec.connectivity == "connected", hereditary=filt))


def search_extremal(spec: SearchSpec) -> Certificate:
    """Maximize rho over all graphs satisfying ``spec``; ties are co-winners."""
    graphs = feasible_graphs(spec)
    notes: list[str] = []
    heuristic = spec.pruning == "majorization_heuristic"
    pool = list(range(len(graphs)))
    if heuristic:
        pool = _majorization_front(graphs)
        notes.append(
            f"majorization heuristic kept {len(pool)} of {len(graphs)} classes; "
            "the winner is not guaranteed"
        )
    cert = Certificate(
        spec=spec.to_dict(),
        config_hash=spec.config_hash(),
        classes_examined=len(graphs),
        winners=[],
        rho=None,
        unique=False,
        heuristic=heuristic,
        notes=notes,
    )
    if not graphs:
        cert.notes.append("no graph satisfies the constraint")
        return cert
    ranking = rank_by_rho([graphs[i] for i in pool])
    winners = [graphs[pool[i]] for i in ranking.winners]
    cert.winners = [encode_g6(g) for g in winners]
    iv = rho_exact(winners[0], 1e-12)
    cert.rho = {
        "lo": repr(iv.lo),
        "hi": repr(iv.hi),
        "lo_exact": str(iv.lo_exact),
        "hi_exact": str(iv.hi_exact),
        "method": iv.method,
    }
    if ranking.runner_up is not None:
        cert.runner_up = encode_g6(graphs[pool[ranking.runner_up]])
        cert.gap_lower_bound = repr(ranking.gap)
    cert.unique = len(winners) == 1 and (ranking.gap is None or ranking.gap > 0)
    return cert


def check_winner(cert: Certificate) -> bool:
    """Re-check every winner of a certificate against its constraint in isolation."""
    spec = SearchSpec.from_dict(cert.spec)
    for code in cert.winners:
        g = decode_g6(code)
        if g.n != spec.n or not spec.constraint(g):
            return False
        if spec.connectivity == "connected" and not is_connected(g):
            return False
    return True

