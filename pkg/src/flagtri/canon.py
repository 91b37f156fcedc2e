"""Canonical labelling for small graphs.

Colour refinement followed by individualisation, exploring the whole
search tree and keeping the largest adjacency certificate.  There is no
automorphism pruning, so the cost grows with the symmetry of each
connected component; components are canonised separately (and the sparser
of the graph and its complement is used), which keeps the graphs met by
the dense-window search cheap.
"""

from __future__ import annotations

from .graph import Graph, bits


def _refine(adj: list[int], colors: list[int]) -> list[int]:
    """Equitable refinement; colours are re-ranked canonically each round."""
    n = len(adj)
    while True:
        sig = []
        for v in range(n):
            counts: dict[int, int] = {}
            for w in bits(adj[v]):
                counts[colors[w]] = counts.get(colors[w], 0) + 1
            sig.append((colors[v], tuple(sorted(counts.items()))))
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(ranks) == len(set(colors)):
            return new
        colors = new


def _certificate(adj: list[int], perm: list[int]) -> int:
    """Upper-triangle adjacency bits of the relabelled graph, as one int."""
    n = len(adj)
    inv = [0] * n
    for v, p in enumerate(perm):
        inv[p] = v
    cert = 0
    for i in range(n):
        row = adj[inv[i]]
        for j in range(i + 1, n):
            cert = (cert << 1) | (row >> inv[j] & 1)
    return cert


def _canon_connected(adj: list[int]) -> tuple[int, list[int]]:
    n = len(adj)
    best: list = [None, None]

    def search(colors: list[int]) -> None:
        colors = _refine(adj, colors)
        if len(set(colors)) == n:
            cert = _certificate(adj, colors)
            if best[0] is None or cert > best[0]:
                best[0], best[1] = cert, colors
            return
        sizes: dict[int, int] = {}
        for c in colors:
            sizes[c] = sizes.get(c, 0) + 1
        target = min(c for c, k in sizes.items() if k > 1)
        for v in range(n):
            if colors[v] == target:
                # v gets a colour just below the rest of its cell
                search([2 * c + (0 if (c == target and w == v) else 1) for w, c in enumerate(colors)])

    search([0] * n)
    return best[0], best[1]


def canonical_labeling(g: Graph) -> tuple[tuple, list[int]]:
    """(certificate, perm) with ``g.relabel(perm)`` the canonical representative."""
    n = g.n
    use_complement = g.m * 2 > n * (n - 1) // 2
    h = g.complement() if use_complement else g
    pieces = []
    for comp in h.components():
        vs = list(bits(comp))
        index = {v: i for i, v in enumerate(vs)}
        adj = [sum(1 << index[w] for w in bits(h.adj_mask(v) & comp)) for v in vs]
        cert, perm = _canon_connected(adj)
        pieces.append(((len(vs), cert), vs, perm))
    pieces.sort(key=lambda p: p[0], reverse=True)
    perm = [0] * n
    offset = 0
    for _, vs, local in pieces:
        for i, v in enumerate(vs):
            perm[v] = offset + local[i]
        offset += len(vs)
    key = (n, use_complement, tuple(p[0] for p in pieces))
    return key, perm


def canonical_form(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g)[1])


def canonical_key(g: Graph) -> tuple:
    return canonical_labeling(g)[0]
