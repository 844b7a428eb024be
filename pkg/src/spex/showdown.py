"""Rank the four case constructions and the plain Tait graph at a given (n, s, t)."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cmp_to_key

from .canonical import canonical_code
from .errors import DomainError
from .families import CASES, FamilySpec, build_family, case_components, decompose, designated_case
from .graphs import FAST_TIER_MAX, Graph, disjoint_union
from .minors import dominated_join_check
from .spectral import Comparison, RootInterval, compare_rho, rho_enclosure

_KIND = {
    "petersen": "case-petersen",
    "subdivided": "case-subdivided",
    "star-forests": "case-star-forests",
    "tait": "tait",
}


@dataclass
class Entry:
    case: str
    spec: FamilySpec
    graph: Graph
    interval: RootInterval
    aliases: list[str] = field(default_factory=list)


@dataclass
class Showdown:
    n: int
    s: int
    t: int
    designated: str
    ranked: list[Entry]
    verdicts: list[Comparison]
    notes: list[str]

    @property
    def designated_first(self) -> bool:
        """Designated construction is alone in first place."""
        if not self.ranked:
            return False
        top = self.ranked[0]
        if self.designated != top.case and self.designated not in top.aliases:
            return False
        return not self.verdicts or self.verdicts[0].verdict == "greater"

    @property
    def gap(self) -> float | None:
        """Certified lower bound on rho(first) - rho(second)."""
        if not self.verdicts:
            return None
        v = self.verdicts[0]
        return v.gap if v.verdict == "greater" else 0.0

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "s": self.s,
            "t": self.t,
            "designated": self.designated,
            "designated_first": self.designated_first,
            "gap": None if self.gap is None else repr(self.gap),
            "ranked": [
                {
                    "case": e.case,
                    "family": str(e.spec),
                    "aliases": e.aliases,
                    "lo": repr(e.interval.lo),
                    "hi": repr(e.interval.hi),
                }
                for e in self.ranked
            ],
            "notes": self.notes,
        }


def _compare(a: Entry, b: Entry) -> Comparison:
    exact_ok = a.graph.n <= FAST_TIER_MAX and b.graph.n <= FAST_TIER_MAX
    return compare_rho(a.graph, b.graph, exact=False) if not exact_ok else compare_rho(a.graph, b.graph)


def candidate_showdown(n: int, s: int, t: int) -> Showdown:
    """Build every constructible candidate, keep the K_{s,t}-minor-free ones, rank by rho.

    Candidates that coincide up to isomorphism are merged and listed as
    aliases of one entry.
    """
    if not 2 <= s <= t:
        raise DomainError(f"need 2 <= s <= t, got s={s}, t={t}")
    decompose(n, s, t)
    designated = designated_case(n, s, t)
    notes: list[str] = []
    entries: list[Entry] = []
    seen: dict[object, Entry] = {}
    for case in CASES:
        try:
            parts = case_components(case, n, s, t)
        except DomainError as exc:
            notes.append(f"{case}: not constructible ({exc})")
            continue
        r = disjoint_union(parts)
        if not dominated_join_check(r, s, t):
            notes.append(f"{case}: excluded, contains a K_{{{s},{t}}} minor")
            continue
        spec = FamilySpec.make(_KIND[case], n=n, s=s, t=t)
        g = build_family(spec)
        key = canonical_code(g) if g.n <= FAST_TIER_MAX else g
        if key in seen:
            seen[key].aliases.append(case)
            notes.append(f"{case}: same graph as {seen[key].case}")
            continue
        entry = Entry(case, spec, g, rho_enclosure(g)[0])
        seen[key] = entry
        entries.append(entry)
    if not entries:
        raise DomainError(f"no candidate is constructible at n={n}, s={s}, t={t}")

    def cmp(a: Entry, b: Entry) -> int:
        v = _compare(a, b).verdict
        return -1 if v == "greater" else 1 if v == "less" else 0

    ranked = sorted(entries, key=cmp_to_key(cmp))
    verdicts = [_compare(a, b) for a, b in zip(ranked, ranked[1:])]
    return Showdown(n, s, t, designated, ranked, verdicts, notes)


def format_table(sd: Showdown) -> str:
    lines = [f"n={sd.n} s={sd.s} t={sd.t} designated={sd.designated}"]
    lines.append(f"{'rank':<5}{'case':<14}{'rho lower':>22}{'rho upper':>22}  family")
    for i, e in enumerate(sd.ranked, 1):
        case = e.case + ("=" + "=".join(e.aliases) if e.aliases else "")
        lines.append(f"{i:<5}{case:<14}{e.interval.lo:>22.12f}{e.interval.hi:>22.12f}  {e.spec}")
    for v in sd.verdicts:
        lines.append(f"  {v.verdict} by {v.method}, gap >= {v.gap:.3e}")
    lines.append(f"designated strictly first: {'yes' if sd.designated_first else 'no'}")
    for note in sd.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines)
