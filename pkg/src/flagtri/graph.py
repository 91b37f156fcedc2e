"""Undirected simple graphs on vertices ``0..n-1``.

Adjacency is kept as one Python int bitmask per vertex; every set-valued
query is answered with bit operations.  Graphs are immutable.  Induced
subgraphs (and therefore links) are relabelled ``0..k-1`` and carry a
``labels`` tuple mapping each new vertex back to the parent graph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import networkx as nx


class GraphError(ValueError):
    pass


class GraphFormatError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    __slots__ = ("n", "_adj", "labels", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), labels: Sequence | None = None):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)
        self.labels = tuple(labels) if labels is not None else tuple(range(n))
        if len(self.labels) != n:
            raise GraphError("labels must have one entry per vertex")
        self._m = sum(a.bit_count() for a in adj) // 2

    @classmethod
    def _from_masks(cls, masks: Sequence[int], labels: Sequence | None = None) -> "Graph":
        g = cls.__new__(cls)
        g.n = len(masks)
        g._adj = tuple(masks)
        g.labels = tuple(labels) if labels is not None else tuple(range(g.n))
        g._m = sum(a.bit_count() for a in masks) // 2
        return g

    @classmethod
    def from_edge_list(cls, edges: Iterable[tuple[int, int]], n: int | None = None) -> "Graph":
        edges = list(edges)
        if n is None:
            n = 1 + max((max(e) for e in edges), default=-1)
        return cls(n, edges)

    # -- basic queries -----------------------------------------------------
    @property
    def m(self) -> int:
        return self._m

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def adj_mask(self, v: int) -> int:
        return self._adj[v]

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self._adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degree_into(self, v: int, xs: Iterable[int] | int) -> int:
        """deg(v, X) = |N_v & X|; ``xs`` may be an iterable or a bitmask."""
        xm = xs if isinstance(xs, int) else mask_of(xs)
        return (self._adj[v] & xm).bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self._adj[u] >> (u + 1) << (u + 1))]

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self._adj]

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- derived graphs ------------------------------------------------------
    def induced_subgraph(self, vertices: Iterable[int] | int) -> "Graph":
        """G[W], relabelled in increasing vertex order; ``labels`` point into ``self``."""
        vm = vertices if isinstance(vertices, int) else mask_of(vertices)
        vs = list(bits(vm))
        index = {v: i for i, v in enumerate(vs)}
        masks = []
        for v in vs:
            masks.append(mask_of(index[w] for w in bits(self._adj[v] & vm)))
        return Graph._from_masks(masks, labels=[self.labels[v] for v in vs])

    def complement(self) -> "Graph":
        full = self.vertex_mask
        return Graph._from_masks([full & ~a & ~(1 << v) for v, a in enumerate(self._adj)], self.labels)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def common_neighbors(self, vertices: Iterable[int]) -> int:
        """Bitmask of vertices adjacent to every vertex given (all vertices if none)."""
        m = self.vertex_mask
        for v in vertices:
            m &= self._adj[v]
        return m

    def is_clique(self, vertices: Sequence[int]) -> bool:
        return all(self.has_edge(u, v) for u, v in itertools.combinations(vertices, 2))

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return self.component_mask(0) == self.vertex_mask

    def component_mask(self, v: int) -> int:
        seen = frontier = 1 << v
        while frontier:
            nxt = 0
            for w in bits(frontier):
                nxt |= self._adj[w]
            frontier = nxt & ~seen
            seen |= frontier
        return seen

    def components(self) -> list[int]:
        left = self.vertex_mask
        out = []
        while left:
            v = (left & -left).bit_length() - 1
            c = self.component_mask(v)
            out.append(c)
            left &= ~c
        return out

    def to_networkx(self) -> nx.Graph:
        h = nx.Graph()
        h.add_nodes_from(range(self.n))
        h.add_edges_from(self.edges())
        return h


# -- constructors ----------------------------------------------------------

def cycle_graph(p: int) -> Graph:
    return Graph(p, [(i, (i + 1) % p) for i in range(p)])


def complete_graph(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def empty_graph(n: int) -> Graph:
    return Graph(n)


def graph_join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets; ``h`` is shifted by ``g.n``."""
    edges = list(g.edges())
    edges += [(u + g.n, v + g.n) for u, v in h.edges()]
    edges += [(u, g.n + v) for u in range(g.n) for v in range(h.n)]
    return Graph(g.n + h.n, edges)


# -- links and cliques -------------------------------------------------------

def link_of_clique(g: Graph, sigma: Sequence[int]) -> Graph:
    """G[common neighbourhood of sigma]; the empty clique gives G itself."""
    sigma = list(sigma)
    if len(set(sigma)) != len(sigma) or not g.is_clique(sigma):
        raise GraphError(f"{sorted(sigma)} is not a clique")
    return g.induced_subgraph(g.common_neighbors(sigma))


def enumerate_cliques(g: Graph, max_size: int, roots: Iterable[int] | None = None) -> Iterator[tuple[int, ...]]:
    """Every clique with 1..max_size vertices, once each, in lexicographic order.

    ``roots`` restricts the smallest vertex of the emitted cliques, which lets
    callers split the traversal into independent chunks.
    """
    if max_size < 1:
        raise GraphError("max_size must be >= 1")

    def extend(clique: tuple[int, ...], cand: int) -> Iterator[tuple[int, ...]]:
        yield clique
        if len(clique) == max_size:
            return
        for w in bits(cand):
            yield from extend(clique + (w,), cand & g.adj_mask(w) & ~((2 << w) - 1))

    for v in (range(g.n) if roots is None else sorted(roots)):
        yield from extend((v,), g.adj_mask(v) & ~((2 << v) - 1))


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """Bron-Kerbosch with Tomita pivoting; cliques sorted, output sorted."""
    out: list[tuple[int, ...]] = []

    def expand(r: list[int], p: int, x: int) -> None:
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = max(bits(p | x), key=lambda u: (g.adj_mask(u) & p).bit_count())
        for v in bits(p & ~g.adj_mask(pivot)):
            nv = g.adj_mask(v)
            expand(r + [v], p & nv, x & nv)
            p &= ~(1 << v)
            x |= 1 << v

    if g.n == 0:
        return [()]
    expand([], g.vertex_mask, 0)
    return sorted(out)


def count_triangles(g: Graph) -> int:
    total = 0
    for u, v in g.edges():
        total += (g.adj_mask(u) & g.adj_mask(v)).bit_count()
    return total // 3


def triangles(g: Graph) -> Iterator[tuple[int, int, int]]:
    for u, v in g.edges():
        for w in bits(g.adj_mask(u) & g.adj_mask(v) & ~((2 << v) - 1)):
            yield (u, v, w)


@dataclass(frozen=True)
class CrossCounts:
    edges_across: int
    nonedges_across: int


def cross_counts(g: Graph, a: Iterable[int], b: Iterable[int]) -> CrossCounts:
    am, bm = mask_of(a), mask_of(b)
    if am & bm:
        raise GraphError("vertex sets overlap")
    e = sum((g.adj_mask(v) & bm).bit_count() for v in bits(am))
    return CrossCounts(e, am.bit_count() * bm.bit_count() - e)


# -- structural predicates ---------------------------------------------------

def cycle_order(g: Graph) -> list[int] | None:
    """Vertices of ``g`` in cyclic order if ``g`` is a single cycle, else None."""
    if g.n < 3 or any(d != 2 for d in g.degrees()):
        return None
    order = [0]
    prev, cur = -1, 0
    while True:
        a, b = bits(g.adj_mask(cur))
        nxt = a if a != prev else b
        if nxt == 0:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return order if len(order) == g.n else None


def mask_is_cycle(g: Graph, mask: int) -> bool:
    """Whether G[mask] is a single cycle (on >= 3 vertices)."""
    if mask.bit_count() < 3:
        return False
    for w in bits(mask):
        if (g.adj_mask(w) & mask).bit_count() != 2:
            return False
    start = mask & -mask
    seen = frontier = start
    while frontier:
        nxt = 0
        for w in bits(frontier):
            nxt |= g.adj_mask(w)
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen == mask


def is_cycle_graph(g: Graph) -> tuple[bool, int | None]:
    """(True, length) for a connected 2-regular graph on >= 3 vertices.

    Length counts vertices.
    """
    order = cycle_order(g)
    return (True, g.n) if order is not None else (False, None)


def is_planar(g: Graph) -> bool:
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return False
    if g.m <= 8 or g.n <= 4:
        return True
    return nx.check_planarity(g.to_networkx())[0]


def _is_locally_cyclic_sphere(g: Graph) -> bool:
    """Sufficient test for a triangulated 2-sphere skeleton.

    If every neighbourhood induces a cycle on >= 4 vertices, the clique
    complex is a closed surface; connected with Euler characteristic 2 it is
    the sphere, so the graph is planar.  Returning False decides nothing.
    """
    for v in range(g.n):
        nb = g.adj_mask(v)
        if nb.bit_count() < 4 or not mask_is_cycle(g, nb):
            return False
    if not g.is_connected():
        return False
    return g.n - g.m + count_triangles(g) == 2


def is_sphere_triangulation_skeleton(g: Graph) -> bool:
    """Connected, planar, n >= 4 and m = 3n - 6 (maximal planar)."""
    if g.n < 4 or g.m != 3 * g.n - 6 or not g.is_connected():
        return False
    return _is_locally_cyclic_sphere(g) or is_planar(g)


def contains_k33(g: Graph) -> tuple[int, ...] | None:
    """A K_{3,3} subgraph as (a1, a2, a3, b1, b2, b3), or None."""
    for a1 in range(g.n):
        n1 = g.adj_mask(a1)
        if n1.bit_count() < 3:
            continue
        for a2 in range(a1 + 1, g.n):
            n12 = n1 & g.adj_mask(a2)
            if n12.bit_count() < 3:
                continue
            for a3 in range(a2 + 1, g.n):
                n123 = n12 & g.adj_mask(a3)
                if n123.bit_count() >= 3:
                    bs = list(bits(n123))[:3]
                    return (a1, a2, a3, *bs)
    return None


# -- text format ---------------------------------------------------------------

def format_graph(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"e {u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    if text and not text.endswith("\n"):
        raise GraphFormatError(text.count("\n") + 1, "missing trailing newline")
    n = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, line in enumerate(text.split("\n")[:-1], start=1):
        if line.startswith("#"):
            continue
        parts = line.split()
        if not parts:
            raise GraphFormatError(lineno, "blank line")
        tag = parts[0]
        if tag == "n":
            if n is not None:
                raise GraphFormatError(lineno, "duplicate 'n' header")
            if len(parts) != 2 or not parts[1].isdigit():
                raise GraphFormatError(lineno, "expected 'n <N>'")
            n = int(parts[1])
        elif tag == "e":
            if n is None:
                raise GraphFormatError(lineno, "edge before 'n' header")
            if len(parts) != 3 or not (parts[1].isdigit() and parts[2].isdigit()):
                raise GraphFormatError(lineno, "expected 'e <u> <v>'")
            u, v = int(parts[1]), int(parts[2])
            if not (0 <= u < v < n):
                raise GraphFormatError(lineno, f"edge must satisfy 0 <= u < v < {n}")
            if (u, v) in seen:
                raise GraphFormatError(lineno, f"duplicate edge {u} {v}")
            seen.add((u, v))
            edges.append((u, v))
        else:
            raise GraphFormatError(lineno, f"unknown line {line!r}")
    if n is None:
        raise GraphFormatError(1, "missing 'n <N>' header")
    return Graph(n, edges)
