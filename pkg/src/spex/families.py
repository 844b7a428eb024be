"""Named constructions of K_{s,t}-minor-free extremal theory.

Every family is addressed by a :class:`FamilySpec` with a text form such as
``tait:n=22,s=5,t=8``. :func:`build_family` constructs the graph and
:func:`family_metadata` predicts its order, size and degree sequence in
closed form; tests hold the two against each other.

Labeling convention: a dominating clique comes first, then components in
the order they are listed in the construction; inside a star the center
precedes its leaves.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import DomainError
from .graphs import Graph, complement, disjoint_union, join, subdivide_min_edge


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[tuple[str, int], ...] = ()

    @classmethod
    def make(cls, kind: str, **params: int) -> FamilySpec:
        if kind not in KINDS:
            raise DomainError(f"unknown family {kind!r}; known: {', '.join(sorted(KINDS))}")
        names = KINDS[kind]
        if set(params) != set(names):
            raise DomainError(f"family {kind!r} takes parameters {names}, got {sorted(params)}")
        return cls(kind, tuple((k, int(params[k])) for k in names))

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        kind, _, rest = text.strip().partition(":")
        params: dict[str, int] = {}
        if rest:
            for item in rest.split(","):
                key, sep, val = item.partition("=")
                if not sep:
                    raise DomainError(f"malformed family parameter {item!r} in {text!r}")
                try:
                    params[key.strip()] = int(val)
                except ValueError:
                    raise DomainError(f"parameter {key.strip()} must be an integer") from None
        return cls.make(kind, **params)

    def __getitem__(self, key: str) -> int:
        return dict(self.params)[key]

    def __str__(self) -> str:
        if not self.params:
            return self.kind
        return self.kind + ":" + ",".join(f"{k}={v}" for k, v in self.params)


KINDS: dict[str, tuple[str, ...]] = {
    "star-forest": ("s", "t"),
    "star-forest-complement": ("s", "t"),
    "subdivided-complement": ("s", "t"),
    "petersen": (),
    "petersen-complement": (),
    "habc": ("a", "b", "c"),
    "habc-complement": ("a", "b", "c"),
    "hprime": ("a", "b", "c"),
    "tait": ("n", "s", "t"),
    "designated": ("n", "s", "t"),
    "case-petersen": ("n", "s", "t"),
    "case-subdivided": ("n", "s", "t"),
    "case-star-forests": ("n", "s", "t"),
    "subdivided-clique": ("n", "t"),
    "matching-deleted-clique": ("t",),
    "clique-minus-edge": ("t",),
    "h1t-complement": ("t",),
    # plain graphs, convenient on the command line
    "complete": ("n",),
    "empty": ("n",),
    "path": ("n",),
    "cycle": ("n",),
    "star": ("t",),
    "biclique": ("a", "b"),
}


# ---- parameters -----------------------------------------------------------


def beta(s: int, t: int) -> int:
    """Number of stars in H_{s,t}."""
    return (t + 1) // (s + 1)


def alpha(s: int, t: int) -> int:
    """Leaf count of the one star of H_{s,t} that may differ from K_{1,s}."""
    return t - (beta(s, t) - 1) * (s + 1)


def gamma(s: int, t: int) -> int:
    """Largest small side a of the forbidden bicliques K_{a, t+1-a}."""
    return min(s, (t + 1) // 2)


def decompose(n: int, s: int, t: int) -> tuple[int, int]:
    """``(p, q)`` with ``n - s + 1 = p*t + q`` and ``1 <= q <= t``."""
    m = n - s + 1
    if m < 1:
        raise DomainError(f"need n - s + 1 >= 1, got n={n}, s={s}")
    p, q = divmod(m - 1, t)
    return p, q + 1


def _check_st(s: int, t: int, low: int = 2) -> None:
    if not low <= s <= t:
        raise DomainError(f"need {low} <= s <= t, got s={s}, t={t}")


def designated_case(n: int, s: int, t: int) -> str:
    """Which branch of the four-way extremal map applies, checked in order.

    Returns one of ``"petersen"``, ``"subdivided"``, ``"star-forests"``,
    ``"tait"``.
    """
    _check_st(s, t)
    _, q = decompose(n, s, t)
    b = beta(s, t)
    if q == 2 and t == 8 and b == 1:
        return "petersen"
    if q == 2 and b == 2:
        return "subdivided"
    if q <= 2 * (b - 1):
        return "star-forests"
    return "tait"


# ---- building blocks ------------------------------------------------------


def star_forest(s: int, t: int) -> Graph:
    """H_{s,t}: (beta-1) copies of K_{1,s} followed by one K_{1,alpha}; order t+1."""
    _check_st(s, t, low=1)
    b = beta(s, t)
    return disjoint_union([Graph.star(s)] * (b - 1) + [Graph.star(alpha(s, t))])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def habc(a: int, b: int, c: int) -> Graph:
    """H_{a,b,c}: vertices w, u1, u2, then independent sets A, B, C.

    w ~ u1, w ~ A, w ~ B, u1 ~ A, u1 ~ C, u2 ~ B, u2 ~ C.
    """
    if a < 0 or b < 1 or c < 1:
        raise DomainError(f"H_(a,b,c) needs a >= 0 and b, c >= 1, got ({a}, {b}, {c})")
    w, u1, u2 = 0, 1, 2
    A = range(3, 3 + a)
    B = range(3 + a, 3 + a + b)
    C = range(3 + a + b, 3 + a + b + c)
    edges = [(w, u1)]
    edges += [(w, x) for x in A] + [(u1, x) for x in A]
    edges += [(w, x) for x in B] + [(u2, x) for x in B]
    edges += [(u1, x) for x in C] + [(u2, x) for x in C]
    return Graph.from_edges(3 + a + b + c, edges)


def hprime(a: int, b: int, c: int) -> Graph:
    """H'_{a,b,c}: double star w1-w2 with leaf sets A (at w1) and B (at w2),
    u1 ~ {w1, w2} and C, u2 ~ A, B and C."""
    if a < 1 or b < 1 or c < 0:
        raise DomainError(f"H'_(a,b,c) needs a, b >= 1 and c >= 0, got ({a}, {b}, {c})")
    w1, w2, u1, u2 = 0, 1, 2, 3
    A = range(4, 4 + a)
    B = range(4 + a, 4 + a + b)
    C = range(4 + a + b, 4 + a + b + c)
    edges = [(w1, w2), (u1, w1), (u1, w2)]
    edges += [(w1, x) for x in A] + [(w2, x) for x in B]
    edges += [(u2, x) for x in A] + [(u2, x) for x in B]
    edges += [(u1, x) for x in C] + [(u2, x) for x in C]
    return Graph.from_edges(4 + a + b + c, edges)


def subdivided_star_forest_complement(s: int, t: int, allow_beta_one: bool = False) -> Graph:
    """S^1 of the complement of H_{s,t}, built directly.

    For beta >= 2 the subdivided edge joins the first K_{1,s} center to the
    K_{1,alpha} center, the pair of least degree sum. With beta = 1 the
    complement is K_t plus an isolated vertex and the edge (1, 2) of the K_t
    is subdivided.
    """
    _check_st(s, t)
    b = beta(s, t)
    if b < 2 and not allow_beta_one:
        raise DomainError(f"S^1 of the star-forest complement needs beta >= 2, got {b}")
    h = complement(star_forest(s, t))
    u, v = (0, (b - 1) * (s + 1)) if b >= 2 else (1, 2)
    edges = [e for e in h.edges() if e != (u, v)]
    edges += [(u, t + 1), (t + 1, v)]
    return Graph.from_edges(t + 2, edges)


CASES = ("petersen", "subdivided", "star-forests", "tait")


def case_components(case: str, n: int, s: int, t: int) -> list[Graph]:
    """Components of the non-clique part for one of the four case constructions.

    Each construction is built whenever its arithmetic allows, whatever the
    value of beta; the case rule in :func:`designated_case` decides which one
    is designated.
    """
    _check_st(s, t)
    p, q = decompose(n, s, t)
    kt = Graph.complete(t)
    if case == "petersen":
        if t != 8 or q != 2 or p < 1:
            raise DomainError(f"the Petersen construction needs t=8, q=2, p>=1; got t={t}, q={q}, p={p}")
        return [kt] * (p - 1) + [complement(petersen())]
    if case == "subdivided":
        if q != 2 or p < 1:
            raise DomainError(f"the subdivided construction needs q=2 and p>=1; got q={q}, p={p}")
        return [kt] * (p - 1) + [subdivided_star_forest_complement(s, t, allow_beta_one=True)]
    if case == "star-forests":
        if p < q:
            raise DomainError(f"(p-q) K_t needs p >= q; got p={p}, q={q}")
        return [kt] * (p - q) + [complement(star_forest(s, t))] * q
    if case == "tait":
        return [kt] * p + [Graph.complete(q)]
    raise DomainError(f"unknown case {case!r}")


def _case_component_degrees(case: str, n: int, s: int, t: int) -> list[int]:
    _check_st(s, t)
    p, q = decompose(n, s, t)
    kt = [t - 1] * t
    hbar = [t - d for d in _star_forest_degrees(s, t)]
    if case == "petersen":
        if t != 8 or q != 2 or p < 1:
            raise DomainError(f"the Petersen construction needs t=8, q=2, p>=1; got t={t}, q={q}, p={p}")
        return kt * (p - 1) + [6] * 10
    if case == "subdivided":
        if q != 2 or p < 1:
            raise DomainError(f"the subdivided construction needs q=2 and p>=1; got q={q}, p={p}")
        return kt * (p - 1) + hbar + [2]
    if case == "star-forests":
        if p < q:
            raise DomainError(f"(p-q) K_t needs p >= q; got p={p}, q={q}")
        return kt * (p - q) + hbar * q
    if case == "tait":
        return kt * p + [q - 1] * q
    raise DomainError(f"unknown case {case!r}")


def tait_components(n: int, s: int, t: int) -> list[Graph]:
    return case_components("tait", n, s, t)


def designated_components(n: int, s: int, t: int) -> list[Graph]:
    """Components of the non-clique part of the designated extremal graph."""
    return case_components(designated_case(n, s, t), n, s, t)


def dominated(s: int, parts: list[Graph]) -> Graph:
    """K_{s-1} joined with the disjoint union of ``parts``."""
    return join(Graph.complete(s - 1), disjoint_union(parts))


# ---- dispatch -------------------------------------------------------------


def build_family(spec: FamilySpec) -> Graph:
    k = spec.kind
    P = dict(spec.params)
    if k == "star-forest":
        return star_forest(P["s"], P["t"])
    if k == "star-forest-complement":
        s, t = P["s"], P["t"]
        _check_st(s, t)
        if beta(s, t) < 2:
            raise DomainError(f"star-forest complement components need beta >= 2, got {beta(s, t)}")
        return complement(star_forest(s, t))
    if k == "subdivided-complement":
        return subdivided_star_forest_complement(P["s"], P["t"])
    if k == "petersen":
        return petersen()
    if k == "petersen-complement":
        return complement(petersen())
    if k == "habc":
        return habc(P["a"], P["b"], P["c"])
    if k == "habc-complement":
        return complement(habc(P["a"], P["b"], P["c"]))
    if k == "hprime":
        return hprime(P["a"], P["b"], P["c"])
    if k == "tait":
        n, s, t = P["n"], P["s"], P["t"]
        _check_st(s, t)
        return dominated(s, tait_components(n, s, t))
    if k == "designated":
        n, s, t = P["n"], P["s"], P["t"]
        return dominated(s, designated_components(n, s, t))
    if k.startswith("case-"):
        return dominated(P["s"], case_components(k[5:], P["n"], P["s"], P["t"]))
    if k == "subdivided-clique":
        n, t = P["n"], P["t"]
        if t < 2 or n < t:
            raise DomainError(f"S^(n-t)(K_t) needs t >= 2 and n >= t, got n={n}, t={t}")
        return subdivide_min_edge(Graph.complete(t), n - t)
    if k == "matching-deleted-clique":
        t = P["t"]
        if t < 1 or t % 2 == 0:
            raise DomainError(f"deleting (t+1)/2 independent edges from K_(t+1) needs t odd, got t={t}")
        g = Graph.complete(t + 1)
        for i in range(0, t + 1, 2):
            g = g.remove_edge(i, i + 1)
        return g
    if k == "clique-minus-edge":
        t = P["t"]
        if t < 2:
            raise DomainError(f"K_t - e needs t >= 2, got {t}")
        return Graph.complete(t).remove_edge(t - 2, t - 1)
    if k == "h1t-complement":
        t = P["t"]
        if t < 1:
            raise DomainError(f"H_(1,t) needs t >= 1, got {t}")
        return complement(star_forest(1, t))
    if k in ("complete", "empty", "path", "cycle"):
        n = P["n"]
        if n < 0:
            raise DomainError("order must be non-negative")
        return {"complete": Graph.complete, "empty": Graph.empty, "path": Graph.path, "cycle": Graph.cycle}[k](n)
    if k == "star":
        return Graph.star(P["t"])
    if k == "biclique":
        return Graph.complete_bipartite(P["a"], P["b"])
    raise DomainError(f"unknown family {k!r}")


# ---- closed-form metadata -------------------------------------------------


def _star_forest_degrees(s: int, t: int) -> list[int]:
    b = beta(s, t)
    return [s] * (b - 1) + [alpha(s, t)] + [1] * (t + 1 - b)


def _pack(degrees: list[int]) -> dict:
    degrees = sorted(degrees, reverse=True)
    return {"order": len(degrees), "size": sum(degrees) // 2, "degree_sequence": tuple(degrees)}


def family_metadata(spec: FamilySpec) -> dict:
    """Predicted ``order``, ``size`` and ``degree_sequence`` without building the graph.

    Sizes are the closed forms (for instance C(t,2)+beta-1 for the star-forest
    complement); degree sequences come from the construction's structure.
    """
    k = spec.kind
    P = dict(spec.params)
    if k == "star-forest":
        s, t = P["s"], P["t"]
        _check_st(s, t, low=1)
        meta = _pack(_star_forest_degrees(s, t))
        assert meta["size"] == t + 1 - beta(s, t)
        return meta
    if k in ("star-forest-complement", "h1t-complement", "subdivided-complement"):
        if k == "h1t-complement":
            s, t = 1, P["t"]
        else:
            s, t = P["s"], P["t"]
            _check_st(s, t)
            if beta(s, t) < 2:
                raise DomainError(f"star-forest complement components need beta >= 2, got {beta(s, t)}")
        degs = [t - d for d in _star_forest_degrees(s, t)]
        size = comb(t, 2) + beta(s, t) - 1
        if k == "subdivided-complement":
            degs.append(2)
            size += 1
        meta = _pack(degs)
        meta["size"] = size
        return meta
    if k == "petersen":
        return _pack([3] * 10)
    if k == "petersen-complement":
        return _pack([6] * 10)
    if k in ("habc", "habc-complement"):
        a, b, c = P["a"], P["b"], P["c"]
        if a < 0 or b < 1 or c < 1:
            raise DomainError(f"H_(a,b,c) needs a >= 0 and b, c >= 1, got ({a}, {b}, {c})")
        if k == "habc":
            return _pack([1 + a + b, 1 + a + c, b + c] + [2] * (a + b + c))
        t = a + b + c + 1
        meta = _pack([t - 1] * (t - 1) + [a + 2, b + 1, c + 1])
        assert meta["size"] == comb(t, 2) + 2
        return meta
    if k == "hprime":
        a, b, c = P["a"], P["b"], P["c"]
        if a < 1 or b < 1 or c < 0:
            raise DomainError(f"H'_(a,b,c) needs a, b >= 1 and c >= 0, got ({a}, {b}, {c})")
        return _pack([a + 2, b + 2, c + 2, a + b + c] + [2] * (a + b + c))
    if k in ("tait", "designated") or k.startswith("case-"):
        n, s, t = P["n"], P["s"], P["t"]
        _check_st(s, t)
        case = {"tait": "tait", "designated": designated_case(n, s, t)}.get(k, k[5:])
        rest = _case_component_degrees(case, n, s, t)
        meta = _pack([n - 1] * (s - 1) + [d + s - 1 for d in rest])
        if k == "tait":
            p, q = decompose(n, s, t)
            assert meta["size"] == comb(s - 1, 2) + (s - 1) * (n - s + 1) + p * comb(t, 2) + comb(q, 2)
        return meta
    if k == "subdivided-clique":
        n, t = P["n"], P["t"]
        if t < 2 or n < t:
            raise DomainError(f"S^(n-t)(K_t) needs t >= 2 and n >= t, got n={n}, t={t}")
        meta = _pack([t - 1] * t + [2] * (n - t))
        assert meta["size"] == comb(t, 2) + n - t
        return meta
    if k == "matching-deleted-clique":
        t = P["t"]
        if t < 1 or t % 2 == 0:
            raise DomainError(f"deleting (t+1)/2 independent edges from K_(t+1) needs t odd, got t={t}")
        return _pack([t - 1] * (t + 1))
    if k == "clique-minus-edge":
        t = P["t"]
        if t < 2:
            raise DomainError(f"K_t - e needs t >= 2, got {t}")
        return _pack([t - 1] * (t - 2) + [t - 2] * 2)
    if k == "complete":
        return _pack([P["n"] - 1] * P["n"])
    if k == "empty":
        return _pack([0] * P["n"])
    if k == "path":
        n = P["n"]
        return _pack([] if n == 0 else [0] if n == 1 else [2] * (n - 2) + [1, 1])
    if k == "cycle":
        return _pack([2] * P["n"])
    if k == "star":
        return _pack([P["t"]] + [1] * P["t"])
    if k == "biclique":
        a, b = P["a"], P["b"]
        return _pack([b] * a + [a] * b)
    raise DomainError(f"unknown family {k!r}")
