"""Verification driver for the registered statements.

Each tag maps to a check that is either exhaustive over small orders (for
statements that hold for every n) or construction-based (for statements
that only hold for large n). Reports always list what was not checked.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .canonical import are_isomorphic, canonical_code
from .enumeration import ENUMERATION_CAP, enumerate_graphs
from .errors import DomainError
from .families import FamilySpec, beta, build_family, habc, petersen, star_forest, tait_components
from .graph6 import decode_g6, encode_g6
from .graphs import (
    Graph,
    complement,
    connected_components,
    degree_sequence,
    disjoint_union,
    is_connected,
    rotate_edge,
)
from .majorization import is_majorized, is_weakly_majorized
from .minors import complement_criterion, dominated_join_check, gamma, has_st_property
from .polynomials import roots_above, sign
from .search import K1tMinorFree, SearchSpec, StProperty, feasible_graphs, rank_by_rho, search_extremal
from .showdown import candidate_showdown
from .spectral import (
    char_poly,
    compare_rho,
    h1t_cubic_root,
    encloses_top_root,
    quotient_rho,
    rho_enclosure,
    tait_bound,
)

ASYMPTOTIC = "the statement is asymptotic in n; only the named instance is checked, nothing is proved"


@dataclass
class Report:
    tag: str
    params: dict
    passed: bool = True
    checks: list[str] = field(default_factory=list)
    counterexamples: list[str] = field(default_factory=list)
    limitations: list[str] = field(default_factory=list)

    def check(self, ok: bool, text: str, witness: Graph | None = None) -> bool:
        self.checks.append(("ok    " if ok else "FAIL  ") + text)
        if not ok:
            self.passed = False
            if witness is not None:
                self.counterexamples.append(encode_g6(witness))
        return ok

    def to_dict(self) -> dict:
        return {
            "tag": self.tag,
            "params": self.params,
            "passed": self.passed,
            "checks": self.checks,
            "counterexamples": self.counterexamples,
            "limitations": self.limitations,
        }

    def render(self) -> str:
        head = ", ".join(f"{k}={v}" for k, v in self.params.items())
        lines = [f"{self.tag} ({head}): {'PASS' if self.passed else 'FAIL'}"]
        lines += ["  " + c for c in self.checks]
        if self.counterexamples:
            lines.append("  counterexamples (graph6): " + " ".join(self.counterexamples[:20]))
        for lim in self.limitations:
            lines.append("  limitation: " + lim)
        return "\n".join(lines)


def _need(params: dict, *names: str) -> list[int]:
    missing = [n for n in names if params.get(n) is None]
    if missing:
        raise DomainError(f"missing parameter(s): {', '.join(missing)}")
    return [int(params[n]) for n in names]


def _order_range(params: dict, lo_default: int, hi_default: int) -> range:
    lo = int(params.get("n_min") or lo_default)
    hi = int(params.get("n_max") or hi_default)
    if hi > ENUMERATION_CAP:
        raise DomainError(f"n_max is capped at {ENUMERATION_CAP}")
    return range(lo, hi + 1)


# ---- exhaustive checks ----------------------------------------------------


def _star_free_extremal(params: dict) -> Report:
    (t,) = _need(params, "t")
    if t < 3:
        raise DomainError("connected K_(1,t)-minor-free extremals need t >= 3")
    rep = Report("thm1.4", {"t": t, **{k: params[k] for k in ("n_min", "n_max") if params.get(k)}})
    for n in _order_range(params, t + 1, 9):
        cert = search_extremal(SearchSpec(n, K1tMinorFree(t)))
        if cert.empty:
            rep.check(False, f"n={n}: no feasible graph")
            continue
        winner = decode_g6(cert.winners[0])
        if n >= t + 2:
            expected, name = build_family(FamilySpec.make("subdivided-clique", n=n, t=t)), "S^(n-t)(K_t)"
        elif n == t + 1:
            expected, name = build_family(FamilySpec.make("h1t-complement", t=t)), "complement of H_(1,t)"
        else:
            expected, name = Graph.complete(n), "K_n"
        ok = cert.unique and are_isomorphic(winner, expected)
        rep.check(
            ok,
            f"n={n}: unique winner is {name} "
            f"(classes={cert.classes_examined}, gap>={cert.gap_lower_bound})",
            None if ok else winner,
        )
        if n == t + 1:
            iv = rho_enclosure(winner)[0]
            if t % 2 == 0:
                root = h1t_cubic_root(t, 1, t - 2)
                rep.check(abs(iv.mid - root) <= 1e-9, f"n={n}: rho={iv.mid:.12f} equals the cubic root {root:.12f}")
            else:
                rep.check(abs(iv.mid - (t - 1)) <= 1e-9, f"n={n}: rho={iv.mid:.12f} equals t-1")
    return rep


def _has_component(g: Graph, target: Graph) -> bool:
    code = canonical_code(target)
    return any(c.n == target.n and canonical_code(c) == code for c in connected_components(g))


def _star_free_bound(params: dict) -> Report:
    (t,) = _need(params, "t")
    if t < 1:
        raise DomainError("need t >= 1")
    rep = Report("thm1.5", {"t": t, "n_max": params.get("n_max") or 7})
    kt = Graph.complete(t)
    md = build_family(FamilySpec.make("matching-deleted-clique", t=t)) if t % 2 else None
    filt = K1tMinorFree(t)
    for n in _order_range(params, max(t, 1), 7):
        bad_bound = bad_eq = 0
        equal = 0
        for g in enumerate_graphs(n, hereditary=filt):
            p = list(char_poly(g))
            above = roots_above(p, t - 1)
            if above:
                bad_bound += 1
                rep.counterexamples.append(encode_g6(g))
                continue
            is_eq = sign(p, t - 1, 0) == 0
            expect = _has_component(g, kt) or (md is not None and _has_component(g, md))
            equal += is_eq
            if is_eq != expect:
                bad_eq += 1
                rep.counterexamples.append(encode_g6(g))
        rep.check(bad_bound == 0, f"n={n}: rho <= t-1 on every graph ({bad_bound} violations)")
        rep.check(bad_eq == 0, f"n={n}: equality class matches ({equal} equality graphs, {bad_eq} mismatches)")
    if rep.counterexamples:
        rep.passed = False
    if t % 2 == 0:
        rep.limitations.append(
            "t is even, so the matching-deleted clique does not exist; the equality class "
            "checked is graphs with a K_t component"
        )
    rep.limitations.append("orders above the enumeration cap are not examined")
    return rep


def _star_free_edges(params: dict) -> Report:
    (t,) = _need(params, "t")
    if t < 3:
        raise DomainError("the connected edge bound needs t >= 3")
    rep = Report("lemma2.2", {"t": t, **{k: params[k] for k in ("n_min", "n_max") if params.get(k)}})
    for n in _order_range(params, t + 2, 9):
        bound = comb(t, 2) + n - t
        gs = feasible_graphs(SearchSpec(n, K1tMinorFree(t)))
        worst = max(gs, key=lambda g: g.num_edges, default=None)
        top = worst.num_edges if worst else 0
        rep.check(top <= bound, f"n={n}: max edges {top} <= {bound}", worst if top > bound else None)
        rep.check(top == bound, f"n={n}: bound attained")
    rep.limitations.append("the bound is stated for n >= t+2; smaller orders are only checked if requested")
    return rep


def _st_params(params: dict) -> tuple[int, int]:
    s, t = _need(params, "s", "t")
    if not 2 <= s <= t:
        raise DomainError(f"need 2 <= s <= t, got s={s}, t={t}")
    return s, t


def _complement_components(params: dict) -> Report:
    s, t = _st_params(params)
    if t + 1 > ENUMERATION_CAP:
        raise DomainError(f"order t+1 exceeds the enumeration cap {ENUMERATION_CAP}")
    rep = Report("lemma3.0", {"s": s, "t": t})
    gam = gamma(s, t)
    count = bad = 0
    for g in enumerate_graphs(t + 1, connected_only=True):
        count += 1
        if has_st_property(g, s, t, fast=False) != complement_criterion(g, gam):
            bad += 1
            rep.counterexamples.append(encode_g6(g))
    rep.check(bad == 0, f"property equals the complement criterion on all {count} connected graphs of order {t + 1}")
    return rep


def _edge_extremal(s: int, t: int):
    gs = feasible_graphs(SearchSpec(t + 1, StProperty(s, t)))
    top = max(g.num_edges for g in gs)
    return gs, top, [g for g in gs if g.num_edges == top]


def _order_t1_edges(params: dict) -> Report:
    s, t = _st_params(params)
    if t + 1 > ENUMERATION_CAP:
        raise DomainError(f"order t+1 exceeds the enumeration cap {ENUMERATION_CAP}")
    rep = Report("lemma3.1", {"s": s, "t": t})
    b = beta(s, t)
    bound = comb(t, 2) + b - 1
    gs, top, _ = _edge_extremal(s, t)
    rep.check(top == bound, f"max edges over {len(gs)} connected property graphs is {top}, formula gives {bound}")
    hbar = complement(star_forest(s, t))
    if is_connected(hbar):
        rep.check(
            has_st_property(hbar, s, t) and hbar.num_edges == bound,
            "complement of H_(s,t) has the property and attains the bound",
        )
    else:
        rep.limitations.append("beta = 1: the complement of H_(s,t) is disconnected and is not a candidate")
    return rep


def _order_t1_structure(params: dict) -> Report:
    s, t = _st_params(params)
    if t + 1 > ENUMERATION_CAP:
        raise DomainError(f"order t+1 exceeds the enumeration cap {ENUMERATION_CAP}")
    rep = Report("thm3.1", {"s": s, "t": t})
    b = beta(s, t)
    hbar = complement(star_forest(s, t))
    rep.limitations.append(
        "the statement concerns components of the large-n extremal graph; checked here: "
        "the complement of H_(s,t) uniquely maximizes rho among edge-maximal connected "
        "order-(t+1) graphs with the property"
    )
    if b < 2:
        rep.check(not is_connected(hbar), "beta = 1 and the complement of H_(s,t) is disconnected")
        return rep
    _, top, extremal = _edge_extremal(s, t)
    rep.check(hbar.num_edges == top == comb(t, 2) + b - 1, f"size C(t,2)+beta-1 = {top}")
    ranking = rank_by_rho(extremal)
    winner = extremal[ranking.winners[0]]
    ok = len(ranking.winners) == 1 and are_isomorphic(winner, hbar)
    rep.check(ok, f"unique rho-maximizer among {len(extremal)} edge-maximal graphs is the complement of H_(s,t)",
              None if ok else winner)
    return rep


def _habc_codes(t: int) -> set[bytes]:
    codes = set()
    for a in range(0, t - 2):
        for bb in range(1, t - 1 - a):
            c = t - 1 - a - bb
            if c >= 1:
                codes.add(canonical_code(habc(a, bb, c)))
    return codes


def _order_t2_classification(params: dict) -> Report:
    s, t = _st_params(params)
    if t + 2 > ENUMERATION_CAP:
        raise DomainError(f"order t+2 exceeds the enumeration cap {ENUMERATION_CAP}")
    rep = Report("lemma3.3", {"s": s, "t": t})
    if beta(s, t) > 2:
        raise DomainError(f"the classification assumes beta <= 2, got {beta(s, t)}")
    bound = comb(t, 2) + 2
    gs = feasible_graphs(SearchSpec(t + 2, StProperty(s, t)))
    top = max((g.num_edges for g in gs), default=0)
    rep.check(top <= bound, f"max edges {top} <= C(t,2)+2 = {bound} over {len(gs)} graphs")
    codes = _habc_codes(t)
    pcode = canonical_code(petersen())
    found = 0
    bad = 0
    for g in gs:
        if g.num_edges != bound:
            continue
        found += 1
        c = canonical_code(complement(g))
        if c not in codes and c != pcode:
            bad += 1
            rep.counterexamples.append(encode_g6(g))
    rep.check(bad == 0, f"all {found} equality graphs have complement H_(a,b,c) or Petersen")
    if t == 8:
        pc = complement(petersen())
        rep.check(has_st_property(pc, s, t), "the Petersen complement has the property")
    elif found == 0:
        rep.limitations.append("no equality graph at this (s,t); the classification holds vacuously")
    return rep


# ---- construction checks --------------------------------------------------


def _tait_instance(params: dict) -> Report:
    n, s, t = _need(params, "n", "s", "t")
    rep = Report("thm1.1", {"n": n, "s": s, "t": t})
    bound = tait_bound(n, s, t)
    g = build_family(FamilySpec.make("tait", n=n, s=s, t=t))
    iv = rho_enclosure(g)[0]
    rep.check(iv.hi <= bound + 1e-9, f"rho(Tait graph) = {iv.mid:.12f} <= bound {bound:.12f}")
    if (n - s + 1) % t == 0:
        rep.check(abs(iv.mid - bound) <= 1e-9, "t divides n-s+1: rho equals the bound within 1e-9")
        part = [list(range(s - 1)), list(range(s - 1, n))]
        q = quotient_rho(g, part)
        rep.check(abs(q - bound) <= 1e-9, f"quotient rho {q:.12f} equals the bound within 1e-9")
    else:
        rep.limitations.append("t does not divide n-s+1; only the inequality is checked")
    r = disjoint_union(tait_components(n, s, t))
    rep.check(dominated_join_check(r, s, t), "the Tait graph is K_(s,t)-minor-free")
    rep.limitations.append(ASYMPTOTIC)
    return rep


def _showdown(params: dict) -> Report:
    n, s, t = _need(params, "n", "s", "t")
    rep = Report("thm1.3", {"n": n, "s": s, "t": t})
    sd = candidate_showdown(n, s, t)
    order = " > ".join(e.case for e in sd.ranked)
    rep.check(sd.designated_first, f"designated '{sd.designated}' strictly first (ranking: {order})")
    if sd.gap is not None:
        rep.check(sd.gap >= 1e-6, f"certified gap {sd.gap:.3e} >= 1e-6")
    rep.limitations.append(ASYMPTOTIC)
    rep.limitations += sd.notes
    return rep


# ---- randomized law checks ------------------------------------------------


def _doubly_stochastic_image(rng: random.Random, y: list[int]) -> list[Fraction]:
    m = len(y)
    weights = [rng.randint(1, 5) for _ in range(rng.randint(1, 4))]
    total = sum(weights)
    x = [Fraction(0)] * m
    for w in weights:
        perm = list(range(m))
        rng.shuffle(perm)
        for i in range(m):
            x[i] += Fraction(w, total) * y[perm[i]]
    return x


def _weak_majorization_norms(params: dict) -> Report:
    trials = int(params.get("trials") or 10_000)
    rng = random.Random(int(params.get("seed") or 0))
    rep = Report("lemma2.6", {"trials": trials})
    bad = 0
    for _ in range(trials):
        m = rng.randint(1, 8)
        y = sorted((rng.randint(0, 20) for _ in range(m)), reverse=True)
        x = _doubly_stochastic_image(rng, y)
        x = sorted((xi * Fraction(rng.randint(0, 4), 4) for xi in x), reverse=True)
        assert is_weakly_majorized(x, y)
        for p in (2, 3):
            if sum(v**p for v in x) > sum(v**p for v in y):
                bad += 1
    rep.check(bad == 0, f"||X||_p <= ||Y||_p for p in (2, 3) on {trials} weakly majorized pairs ({bad} violations)")
    return rep


def _majorization_dot(params: dict) -> Report:
    trials = int(params.get("trials") or 10_000)
    rng = random.Random(int(params.get("seed") or 0))
    rep = Report("lemma2.7", {"trials": trials})
    bad = 0
    for _ in range(trials):
        m = rng.randint(1, 8)
        y = sorted((rng.randint(-10, 20) for _ in range(m)), reverse=True)
        x = sorted(_doubly_stochastic_image(rng, y), reverse=True)
        z = sorted((rng.randint(-10, 10) for _ in range(m)), reverse=True)
        assert is_majorized(x, y)
        if sum(a * c for a, c in zip(x, z)) > sum(b * c for b, c in zip(y, z)):
            bad += 1
    rep.check(bad == 0, f"X.Z <= Y.Z on {trials} majorized triples ({bad} violations)")
    return rep


def _random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def _rotation_majorization(params: dict) -> Report:
    trials = int(params.get("trials") or 1000)
    rng = random.Random(int(params.get("seed") or 0))
    rep = Report("lemma3.2", {"trials": trials})
    done = bad = 0
    while done < trials:
        g = _random_graph(rng, 7, rng.uniform(0.2, 0.8))
        triples = [
            (u, v, w)
            for v, w in g.edges() + [(b, a) for a, b in g.edges()]
            for u in range(g.n)
            if u not in (v, w) and not g.has_edge(u, w) and g.degree(u) >= g.degree(v)
        ]
        if not triples:
            continue
        u, v, w = rng.choice(triples)
        h = rotate_edge(g, u, v, w)
        x, y = degree_sequence(g), degree_sequence(h)
        if not (is_majorized(x, y) and x != y):
            bad += 1
            rep.counterexamples.append(encode_g6(g))
        done += 1
    rep.check(bad == 0, f"pi(G) strictly majorized by the rotated sequence on {trials} rotations ({bad} violations)")
    return rep


def neighbour_shift(g: Graph, u: int, v: int) -> Graph | None:
    """Move every neighbour of v outside N[u] over to u; None if there is none."""
    moved = g.adj[v] & ~g.adj[u] & ~(1 << u)
    if not moved:
        return None
    h = g
    for w in range(g.n):
        if moved >> w & 1:
            h = h.remove_edge(v, w).add_edge(u, w)
    return h


def _neighbour_shift_growth(params: dict) -> Report:
    trials = int(params.get("trials") or 200)
    rng = random.Random(int(params.get("seed") or 0))
    rep = Report("le000", {"trials": trials})
    done = bad = skipped = 0
    while done < trials:
        g = _random_graph(rng, rng.randint(4, 9), rng.uniform(0.3, 0.7))
        if not is_connected(g):
            continue
        x = rho_enclosure(g)[1].values
        pairs = [(u, v) for u in range(g.n) for v in range(g.n) if u != v and x[u] >= x[v]]
        rng.shuffle(pairs)
        pick = None
        for u, v in pairs:
            if x[u] - x[v] < 1e-9 and x[u] != x[v]:
                skipped += 1
                continue
            h = neighbour_shift(g, u, v)
            if h is not None:
                pick = h
                break
        if pick is None:
            continue
        if compare_rho(pick, g, exact=True).verdict != "greater":
            bad += 1
            rep.counterexamples.append(encode_g6(g))
        done += 1
    rep.check(bad == 0, f"rho strictly increases on {trials} neighbour shifts ({bad} violations)")
    if skipped:
        rep.limitations.append(f"{skipped} near-tied vertex pairs skipped (Perron entries within 1e-9)")
    return rep


def _enclosure_soundness(params: dict) -> Report:
    trials = int(params.get("trials") or 500)
    rng = random.Random(int(params.get("seed") or 0))
    rep = Report("enclosure", {"trials": trials})
    bad = 0
    for _ in range(trials):
        g = _random_graph(rng, rng.randint(1, 10), rng.random())
        iv = rho_enclosure(g)[0]
        if not encloses_top_root(char_poly(g), iv.lo, iv.hi):
            bad += 1
            rep.counterexamples.append(encode_g6(g))
    rep.check(bad == 0, f"characteristic polynomial certifies every enclosure ({bad} failures)")
    return rep


TAGS = {
    "thm1.1": _tait_instance,
    "thm1.3": _showdown,
    "thm1.4": _star_free_extremal,
    "thm1.5": _star_free_bound,
    "lemma2.2": _star_free_edges,
    "lemma2.6": _weak_majorization_norms,
    "lemma2.7": _majorization_dot,
    "lemma3.0": _complement_components,
    "lemma3.1": _order_t1_edges,
    "lemma3.2": _rotation_majorization,
    "lemma3.3": _order_t2_classification,
    "thm3.1": _order_t1_structure,
    "le000": _neighbour_shift_growth,
    "enclosure": _enclosure_soundness,
}


def verify_theorem(tag: str, params: dict | None = None) -> Report:
    """Run the check registered under ``tag``; unknown tags raise :class:`DomainError`."""
    key = tag.lower()
    if key not in TAGS:
        raise DomainError(f"unknown theorem tag {tag!r}; known: {', '.join(sorted(TAGS))}")
    return TAGS[key](dict(params or {}))
