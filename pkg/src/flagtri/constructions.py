"""Explicit flag spheres and the two equality families.

Vertex labelling is fixed so outputs are byte-stable:

* ``cycle(p)``: vertices ``0..p-1`` in cyclic order.
* ``join_of_cycles(p, q)``: first cycle ``0..p-1``, second ``p..p+q-1``;
  ``join_of_cycles_multi`` continues the same way.
* ``cross_polytope_boundary(d)``: antipodal pairs ``{2i, 2i+1}``.
* ``figure2a(c, a2)``: C1 = ``0..c-1``, C2 = ``c..2c-1``, q = ``2c``;
  q sees ``0, 1, 2`` on C1 and ``c..c+a2-1`` on C2.
* ``figure2b(k)``: C1 = ``0..k-1`` with u, v, t = 0, 1, 2; C2 = ``k..2k``;
  the shared path P is ``k..2k-1``; q = ``2k+1``, q' = ``2k+2``.
* ``edge_subdivision`` names the new vertex ``max(vertices) + 1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .complex import (
    SimplicialComplex,
    face_vector,
    is_flag,
    link,
    simplicial_join,
)
from .graph import Graph, bits, cycle_graph, graph_join, mask_is_cycle
from .vectors import GammaVector, gamma_from_f_3d

# Smallest parameters for which the verifier accepts the families; see
# tests/test_constructions.py::test_documented_minima.
FIGURE2A_MIN_C = 4
FIGURE2B_MIN_K = 4


class ConstructionError(ValueError):
    pass


def cycle(p: int) -> SimplicialComplex:
    if p < 4:
        raise ConstructionError(f"a flag cycle needs at least 4 vertices, got {p}")
    return SimplicialComplex([(i, (i + 1) % p) for i in range(p)])


def join_of_cycles_multi(lengths) -> SimplicialComplex:
    lengths = list(lengths)
    if not lengths:
        raise ConstructionError("need at least one cycle")
    out = SimplicialComplex([()])
    offset = 0
    for p in lengths:
        c = cycle(p).relabel({i: i + offset for i in range(p)})
        out = simplicial_join(out, c)
        offset += p
    return out


def join_of_cycles(p: int, q: int) -> SimplicialComplex:
    return join_of_cycles_multi([p, q])


def join_of_cycles_graph(p: int, q: int) -> Graph:
    return graph_join(cycle_graph(p), cycle_graph(q))


def cross_polytope_boundary(d: int) -> SimplicialComplex:
    if d < 1:
        raise ConstructionError("cross-polytope dimension must be >= 1")
    return SimplicialComplex(
        [[2 * i + b for i, b in enumerate(choice)] for choice in itertools.product((0, 1), repeat=d)])


def edge_subdivision(k: SimplicialComplex, e, check: bool = True) -> SimplicialComplex:
    """Stellar subdivision of the edge ``e = (u, v)`` by a new vertex w.

    Faces containing both u and v are replaced by the two faces obtained by
    swapping u (resp. v) for w.
    """
    u, v = e
    uv = frozenset((u, v))
    if len(uv) != 2 or uv not in k:
        raise ConstructionError(f"{tuple(e)} is not an edge")
    if check:
        if not is_flag(k):
            raise ConstructionError("edge subdivision requires a flag complex")
        if k.dim == 3:
            lk = link(k, uv)
            g = lk.skeleton_graph()
            if lk.dim != 1 or g.n < 4 or not mask_is_cycle(g, g.vertex_mask):
                raise ConstructionError(f"link of {tuple(e)} is not a cycle on >= 4 vertices")
    w = max(k.vertices) + 1
    facets = []
    for f in k.facets:
        if uv <= f:
            facets.append((f - {u}) | {w})
            facets.append((f - {v}) | {w})
        else:
            facets.append(f)
    return SimplicialComplex(facets)


def gamma3(k: SimplicialComplex) -> GammaVector:
    return gamma_from_f_3d(face_vector(k))


# -- replayable subdivision certificates --------------------------------------

@dataclass
class SubdivisionCertificate:
    base: tuple  # e.g. ("join", 5, 6)
    steps: list[tuple[int, int]] = field(default_factory=list)
    gamma: GammaVector | None = None

    def base_complex(self) -> SimplicialComplex:
        kind, *args = self.base
        if kind == "join":
            return join_of_cycles_multi(args)
        if kind == "crosspoly":
            return cross_polytope_boundary(*args)
        raise ConstructionError(f"unknown base {kind!r}")

    def replay(self) -> SimplicialComplex:
        k = self.base_complex()
        for e in self.steps:
            k = edge_subdivision(k, e, check=False)
        return k

    def to_script(self) -> str:
        lines = ["base " + " ".join(map(str, self.base))]
        lines += [f"subdivide {u} {v}" for u, v in self.steps]
        if self.gamma is not None:
            lines.append(f"# gamma {self.gamma}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_script(cls, text: str) -> "SubdivisionCertificate":
        base = None
        steps = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if parts[0] == "base" and base is None and len(parts) >= 2:
                base = (parts[1], *map(int, parts[2:]))
            elif parts[0] == "subdivide" and len(parts) == 3 and base is not None:
                steps.append((int(parts[1]), int(parts[2])))
            else:
                raise ConstructionError(f"line {lineno}: cannot parse {line!r}")
        if base is None:
            raise ConstructionError("script has no base line")
        cert = cls(base, steps)
        cert.gamma = gamma3(cert.replay())
        return cert


class GammaNotFound(LookupError):
    def __init__(self, g1: int, g2: int, explored: int):
        super().__init__(f"no certificate for gamma=(1,{g1},{g2}) after exploring {explored} states")
        self.explored = explored


def in_realizable_region(g1: int, g2: int) -> bool:
    if g1 < 0 or g2 < 0:
        return False
    if 4 * g2 <= (g1 - 1) ** 2:
        return True
    return _factor(g1, g2) is not None


def _factor(g1: int, g2: int) -> tuple[int, int] | None:
    for k in range(g1 // 2 + 1):
        if k * (g1 - k) == g2:
            return k, g1 - k
    return None


def _subdivide_graph(g: Graph, u: int, v: int) -> Graph:
    common = g.adj_mask(u) & g.adj_mask(v)
    w = g.n
    edges = [e for e in g.edges() if e != (min(u, v), max(u, v))]
    edges += [(x, w) for x in (u, v, *bits(common))]
    return Graph(g.n + 1, edges)


def realize_gamma(g1: int, g2: int, budget: int = 20000) -> SubdivisionCertificate:
    """Find a flag 3-sphere with gamma-vector (1, g1, g2).

    Joins of two polygons handle g2 = k*l with k + l = g1 directly.  Other
    targets are searched breadth-first over edge-subdivision sequences
    starting from joins; states are merged on (gamma1, gamma2, multiset of
    edge-link lengths) and one representative edge per link length is
    tried.  Raises ``GammaNotFound`` once ``budget`` states were expanded;
    that is not a proof of non-realizability.
    """
    if g1 < 0 or g2 < 0:
        raise ConstructionError("gamma entries must be non-negative")
    kl = _factor(g1, g2)
    if kl is not None:
        cert = SubdivisionCertificate(("join", kl[0] + 4, kl[1] + 4))
        cert.gamma = gamma3(cert.replay())
        return cert

    frontier: list[tuple[tuple, list, Graph, int, int]] = []
    for p in range(4, g1 + 9):
        for q in range(p, g1 + 9 - p):
            b1, b2 = p + q - 8, (p - 4) * (q - 4)
            if b1 <= g1 and b2 <= g2:
                frontier.append((("join", p, q), [], join_of_cycles_graph(p, q), b1, b2))
    seen: set = set()
    explored = 0
    while frontier:
        frontier.sort(key=lambda s: (s[0], s[1]))
        nxt = []
        for base, steps, g, c1, c2 in frontier:
            if (c1, c2) == (g1, g2):
                cert = SubdivisionCertificate(base, steps)
                cert.gamma = gamma3(cert.replay())
                return cert
            explored += 1
            if explored > budget:
                raise GammaNotFound(g1, g2, explored)
            if c1 >= g1:
                continue
            by_len: dict[int, tuple[int, int]] = {}
            for u, v in g.edges():
                c = (g.adj_mask(u) & g.adj_mask(v)).bit_count()
                by_len.setdefault(c, (u, v))
            for c, (u, v) in sorted(by_len.items()):
                n1, n2 = c1 + 1, c2 + c - 4
                if n2 > g2:
                    continue
                h = _subdivide_graph(g, u, v)
                key = (n1, n2, tuple(sorted((h.adj_mask(a) & h.adj_mask(b)).bit_count() for a, b in h.edges())))
                if key in seen:
                    continue
                seen.add(key)
                nxt.append((base, steps + [(u, v)], h, n1, n2))
        frontier = nxt
    raise GammaNotFound(g1, g2, explored)


# -- the two equality families ------------------------------------------------

def figure2a(c: int, a2: int) -> Graph:
    """Two c-cycles joined, minus (a2-2) edges, plus one exceptional vertex q.

    q is adjacent to the path 0,1,2 on C1 and to a2 consecutive vertices of
    C2; the middle vertex 1 loses its edges to the interior of q's C2 path.
    """
    if c < FIGURE2A_MIN_C or not 3 <= a2 <= c - 1:
        raise ConstructionError(f"figure2a needs c >= {FIGURE2A_MIN_C} and 3 <= a2 <= c-1, got c={c}, a2={a2}")
    return _build_figure2a(c, a2)


def _build_figure2a(c: int, a2: int) -> Graph:
    C1 = list(range(c))
    C2 = list(range(c, 2 * c))
    q = 2 * c
    p2 = C2[:a2]
    interior2 = set(p2[1:-1])
    edges = [(C1[i], C1[(i + 1) % c]) for i in range(c)]
    edges += [(C2[i], C2[(i + 1) % c]) for i in range(c)]
    edges += [(x, y) for x in C1 for y in C2 if not (x == 1 and y in interior2)]
    edges += [(x, q) for x in (0, 1, 2, *p2)]
    return Graph(2 * c + 1, edges)


def figure2b(k: int) -> Graph:
    """C1 a k-cycle, C2 a (k+1)-cycle and two adjacent exceptional vertices.

    q sees u, v and the k-vertex path P of C2; q' sees v, t and the same P;
    v loses its edges to the k-2 interior vertices of P.
    """
    if k < FIGURE2B_MIN_K:
        raise ConstructionError(f"figure2b needs k >= {FIGURE2B_MIN_K}, got {k}")
    return _build_figure2b(k)


def _build_figure2b(k: int) -> Graph:
    C1 = list(range(k))
    C2 = list(range(k, 2 * k + 1))
    u, v, t = 0, 1, 2
    q, qq = 2 * k + 1, 2 * k + 2
    P = C2[:k]
    interior = set(P[1:-1])
    edges = [(C1[i], C1[(i + 1) % k]) for i in range(k)]
    edges += [(C2[i], C2[(i + 1) % (k + 1)]) for i in range(k + 1)]
    edges += [(x, y) for x in C1 for y in C2 if not (x == v and y in interior)]
    edges += [(u, q), (v, q), (v, qq), (t, qq), (q, qq)]
    edges += [(y, q) for y in P] + [(y, qq) for y in P]
    return Graph(2 * k + 3, edges)
