"""t-joinlike decompositions and the stability-method diagnostic probe."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .fascinating import check_fascinating
from .graph import Graph, bits, cross_counts, cycle_order, mask_is_cycle, mask_of


class NotJoinlike(LookupError):
    pass


class NotFascinatingError(ValueError):
    pass


@dataclass
class ExceptionalStats:
    vertex: int
    d1: int  # deg(q, C1)
    d2: int
    e1: int  # edges of G[N_q & C1]
    e2: int

    def to_json(self) -> dict:
        return {"vertex": self.vertex, "d1": self.d1, "d2": self.d2, "e1": self.e1, "e2": self.e2}


@dataclass
class JoinlikeDecomposition:
    C1: list[int]  # in cyclic order
    C2: list[int]
    X: list[int]
    e1: tuple[int, int]  # edge of G[C1] whose link is G[C2]
    e2: tuple[int, int]
    stats: list[ExceptionalStats] = field(default_factory=list)

    @property
    def t(self) -> int:
        return len(self.X)

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "C1": self.C1,
            "C2": self.C2,
            "X": self.X,
            "e1": list(self.e1),
            "e2": list(self.e2),
            "exceptional": [s.to_json() for s in self.stats],
        }


def _cyclic(g: Graph, mask: int) -> list[int]:
    sub = g.induced_subgraph(mask)
    return [sub.labels[i] for i in cycle_order(sub)]


def _exceptional_stats(g: Graph, c1: int, c2: int, xs) -> list[ExceptionalStats]:
    out = []
    for q in xs:
        nb = g.adj_mask(q)
        row = [q]
        for c in (c1, c2):
            sub = nb & c
            row.append(sub.bit_count())
        for c in (c1, c2):
            sub = nb & c
            row.append(sum((g.adj_mask(w) & sub).bit_count() for w in bits(sub)) // 2)
        out.append(ExceptionalStats(*row))
    return out


def decomposition_from_cycles(g: Graph, c1: int, c2: int, e1, e2) -> JoinlikeDecomposition:
    xs = list(bits(g.vertex_mask & ~(c1 | c2)))
    return JoinlikeDecomposition(_cyclic(g, c1), _cyclic(g, c2), xs, tuple(e1), tuple(e2),
                                 _exceptional_stats(g, c1, c2, xs))


def detect_joinlike(g: Graph, t_max: int = 2, check: bool = True) -> JoinlikeDecomposition:
    """Decomposition with the fewest exceptional vertices, at most ``t_max``.

    Every pair (e, e') with e' an edge inside lk(e) is tried, so the
    returned t is minimal.  Ties go to the lexicographically smallest
    (sorted C1, sorted C2).
    """
    if check and not check_fascinating(g, exhaustive=False).passes:
        raise NotFascinatingError("joinlike decompositions are defined for fascinating graphs only")
    edges = g.edges()
    links = {e: g.adj_mask(e[0]) & g.adj_mask(e[1]) for e in edges}
    is_cyc = {e: mask_is_cycle(g, m) for e, m in links.items()}

    best_t = None
    best: dict[tuple, tuple] = {}
    for e in edges:
        if not is_cyc[e]:
            continue
        c2 = links[e]
        for a in bits(c2):
            for b in bits(g.adj_mask(a) & c2 & ~((2 << a) - 1)):
                e2 = (a, b)
                if not is_cyc[e2]:
                    continue
                c1 = links[e2]
                if c1 & c2 or ((1 << e[0]) | (1 << e[1])) & ~c1:
                    continue
                t = g.n - c1.bit_count() - c2.bit_count()
                if t > t_max or (best_t is not None and t > best_t):
                    continue
                if best_t is None or t < best_t:
                    best_t, best = t, {}
                key = (c1, c2)
                prev = best.get(key)
                if prev is None or (e, e2) < prev:
                    best[key] = (e, e2)
    if best_t is None:
        raise NotJoinlike(f"no decomposition with at most {t_max} exceptional vertices")

    def order(item):
        (c1, c2), _ = item
        return (list(bits(c1)), list(bits(c2)))

    (c1, c2), (e1, e2) = min(best.items(), key=order)
    return decomposition_from_cycles(g, c1, c2, e1, e2)


def is_join_of_two_cycles(g: Graph) -> tuple[bool, list[int], list[int]]:
    """Split V into two induced cycles joined completely, if possible.

    Works on any graph: the complement of a join is disconnected, and each
    complement component lies inside one side.
    """
    comps = g.complement().components()
    # a cycle's complement has at most 3 components (C3: three, C4: two)
    if len(comps) < 2 or len(comps) > 6:
        return False, [], []
    first, rest = comps[0], comps[1:]
    options = []
    for pick in itertools.product((0, 1), repeat=len(rest)):
        side1 = first
        for c, p in zip(rest, pick):
            if p == 0:
                side1 |= c
        side2 = g.vertex_mask & ~side1
        if not side2:
            continue
        if mask_is_cycle(g, side1) and mask_is_cycle(g, side2) and cross_counts(g, bits(side1), bits(side2)).nonedges_across == 0:
            a, b = sorted((list(bits(side1)), list(bits(side2))))
            options.append((a, b))
    if not options:
        return False, [], []
    a, b = min(options)
    return True, a, b


@dataclass
class DegreeBoundReport:
    t: int
    ok: bool
    violations: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"t": self.t, "ok": self.ok, "violations": self.violations}


def check_exceptional_degree_bounds(d: JoinlikeDecomposition) -> DegreeBoundReport:
    """deg(q, C_i) >= 3 when t = 1, >= 2 when t = 2; e_i(q) <= d_i(q) always."""
    need = {1: 3, 2: 2}.get(d.t, 0)
    violations = []
    for s in d.stats:
        for i, (di, ei) in enumerate(((s.d1, s.e1), (s.d2, s.e2)), start=1):
            if di < need:
                violations.append({"vertex": s.vertex, "side": i, "kind": "degree", "value": di, "bound": need})
            if ei > di:
                violations.append({"vertex": s.vertex, "side": i, "kind": "edges_exceed_degree", "value": ei, "bound": di})
    return DegreeBoundReport(d.t, not violations, violations)


# -- stability probe -------------------------------------------------------------

@dataclass
class StabilityReport:
    n: int
    gamma: Fraction
    alpha: Fraction
    A1: list[int]
    A2: list[int]
    B1: list[int]
    B2: list[int]
    W1: list[int]
    W2: list[int]
    X1: list[int]
    X2: list[int]
    S1: list[int]
    S2: list[int]
    X: list[int]
    P: list[int]
    T1: list[int]
    T2: list[int]
    K1: list[int]
    K2: list[int]
    b: int
    defect: int  # e(A1) + e(A2) + nonedges across
    small_exceptional_sides: bool  # |A_i \ B_i| <= alpha n for both i
    degrees: list[dict]

    @property
    def p(self) -> int:
        return len(self.P)

    @property
    def x(self) -> int:
        return len(self.X)

    def to_json(self) -> dict:
        out = {k: v for k, v in self.__dict__.items()}
        out["gamma"] = str(self.gamma)
        out["alpha"] = str(self.alpha)
        out["p"] = self.p
        out["x"] = self.x
        return out


def stability_sets(g: Graph, a1, gamma, alpha) -> StabilityReport:
    """All derived vertex sets for the bipartition (a1, V - a1)."""
    gamma, alpha = Fraction(gamma), Fraction(alpha)
    n = g.n
    A = [mask_of(a1), 0]
    A[1] = g.vertex_mask & ~A[0]
    thr = Fraction(n, 2) - gamma * n
    deg = g.degree_into
    B = [mask_of(v for v in bits(A[i]) if deg(v, A[1 - i]) >= thr) for i in range(2)]
    W = [mask_of(v for v in bits(A[i] & ~B[i]) if deg(v, B[i]) >= thr) for i in range(2)]
    Xi = [A[i] & ~B[i] & ~W[i] for i in range(2)]
    S = [B[i] | W[1 - i] for i in range(2)]
    X = Xi[0] | Xi[1]
    P = mask_of(v for v in bits(X) if deg(v, S[0]) >= 3 and deg(v, S[1]) >= 3)
    T = [0, 0]
    for v in bits(X & ~P):
        T[0 if deg(v, S[0]) <= 2 else 1] |= 1 << v
    K = [S[i] | T[i] for i in range(2)]
    b = cross_counts(g, bits(K[0]), bits(K[1])).nonedges_across if K[0] and K[1] else 0
    inside = sum(deg(v, A[i]) for i in range(2) for v in bits(A[i])) // 2
    across = cross_counts(g, bits(A[0]), bits(A[1])).nonedges_across
    small = all((A[i] & ~B[i]).bit_count() <= alpha * n for i in range(2))
    L = lambda m: list(bits(m))  # noqa: E731
    degrees = [{"vertex": v, "A1": deg(v, A[0]), "A2": deg(v, A[1]), "S1": deg(v, S[0]), "S2": deg(v, S[1])}
               for v in range(n)]
    return StabilityReport(
        n, gamma, alpha, L(A[0]), L(A[1]), L(B[0]), L(B[1]), L(W[0]), L(W[1]), L(Xi[0]), L(Xi[1]),
        L(S[0]), L(S[1]), L(X), L(P), L(T[0]), L(T[1]), L(K[0]), L(K[1]), b, inside + across, small, degrees)


def balanced_max_cut(g: Graph, seed: int = 0, restarts: int = 8) -> list[int]:
    """Local-search max cut over bipartitions with part sizes differing by <= 1.

    Pair swaps are applied greedily until none improves the cut; the best of
    ``restarts`` seeded random starts is kept.  Heuristic only.
    """
    rng = random.Random(seed)
    n = g.n
    adj = [g.adj_mask(v) for v in range(n)]
    best_side, best_cut = None, -1
    for _ in range(max(1, restarts)):
        order = list(range(n))
        rng.shuffle(order)
        side0 = mask_of(order[: n // 2])
        while True:
            side1 = g.vertex_mask & ~side0
            # moving v to the other side changes the cut by same-side minus cross degree
            gain = [(adj[v] & (side0 if side0 >> v & 1 else side1)).bit_count()
                    - (adj[v] & (side1 if side0 >> v & 1 else side0)).bit_count() for v in range(n)]
            top = None
            for u in bits(side0):
                for w in bits(side1):
                    delta = gain[u] + gain[w] + 2 * (adj[u] >> w & 1)
                    if delta > 0 and (top is None or delta > top[0]):
                        top = (delta, u, w)
            if top is None:
                break
            _, u, w = top
            side0 = (side0 & ~(1 << u)) | (1 << w)
        cut = sum((adj[v] & ~side0 & g.vertex_mask).bit_count() for v in bits(side0))
        if cut > best_cut or (cut == best_cut and list(bits(side0)) < best_side):
            best_cut, best_side = cut, list(bits(side0))
    return best_side


def stability_probe(g: Graph, gamma, alpha, seed: int = 0, restarts: int = 8) -> StabilityReport:
    """Diagnostic only: the bipartition is a max-cut heuristic, not a theorem."""
    gamma, alpha = Fraction(gamma), Fraction(alpha)
    if not 0 < alpha < gamma < 1:
        raise ValueError("need 0 < alpha < gamma < 1")
    return stability_sets(g, balanced_max_cut(g, seed, restarts), gamma, alpha)
