"""Finite simplicial complexes stored by their facets.

Faces are frozensets of integer vertex labels.  The full face list is
built lazily from the facets the first time it is needed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .graph import (
    Graph,
    is_sphere_triangulation_skeleton,
    mask_is_cycle,
    maximal_cliques,
)
from .vectors import FaceVector


class ComplexError(ValueError):
    pass


class ComplexFormatError(ComplexError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _maximal(sets: Iterable[frozenset]) -> list[frozenset]:
    uniq = sorted(set(sets), key=len, reverse=True)
    kept: list[frozenset] = []
    for s in uniq:
        if not any(s <= t for t in kept):
            kept.append(s)
    return kept


def _sort_key(face: frozenset) -> tuple:
    return (len(face), tuple(sorted(face)))


class SimplicialComplex:
    """Closed-under-subsets face family, represented by its maximal faces.

    ``SimplicialComplex([])`` is the empty complex (no faces at all);
    ``SimplicialComplex([()])`` is the void sphere {emptyset}.
    """

    def __init__(self, facets: Iterable[Iterable[int]]):
        fs = _maximal(frozenset(f) for f in facets)
        self.facets: tuple[frozenset, ...] = tuple(sorted(fs, key=lambda f: tuple(sorted(f))))

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(set().union(*self.facets))) if self.facets else ()

    @property
    def dim(self) -> int:
        if not self.facets:
            return -2  # no faces, not even the empty one
        return max(len(f) for f in self.facets) - 1

    @cached_property
    def faces_by_size(self) -> list[list[frozenset]]:
        """``faces_by_size[k]`` lists the faces with k vertices, sorted."""
        if not self.facets:
            return []
        top = self.dim + 1
        layers: list[set] = [set() for _ in range(top + 1)]
        for f in self.facets:
            fl = sorted(f)
            for k in range(len(fl) + 1):
                layers[k].update(frozenset(c) for c in itertools.combinations(fl, k))
        return [sorted(layer, key=_sort_key) for layer in layers]

    def faces(self) -> list[frozenset]:
        return [f for layer in self.faces_by_size for f in layer]

    def __contains__(self, face) -> bool:
        face = frozenset(face)
        return any(face <= f for f in self.facets)

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialComplex) and self.facets == other.facets

    def __hash__(self) -> int:
        return hash(self.facets)

    def __repr__(self) -> str:
        return f"SimplicialComplex(dim={self.dim}, f={self.f_entries()})"

    def f_entries(self) -> tuple[int, ...]:
        return tuple(len(layer) for layer in self.faces_by_size)

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def skeleton_graph(self) -> Graph:
        """1-skeleton, vertices relabelled ``0..n-1`` with ``labels`` giving the originals."""
        verts = self.vertices
        index = {v: i for i, v in enumerate(verts)}
        edges = set()
        for f in self.facets:
            for u, v in itertools.combinations(sorted(f), 2):
                edges.add((index[u], index[v]))
        return Graph(len(verts), sorted(edges), labels=verts)

    def relabel(self, mapping) -> "SimplicialComplex":
        return SimplicialComplex([[mapping[v] for v in f] for f in self.facets])

    def normalized(self) -> "SimplicialComplex":
        """Vertices renamed 0..n-1 in sorted order."""
        return self.relabel({v: i for i, v in enumerate(self.vertices)})


VOID = SimplicialComplex([()])


def clique_complex(g: Graph) -> SimplicialComplex:
    """Flag complex of ``g``; vertex labels are ``g.labels``."""
    lab = g.labels
    return SimplicialComplex([[lab[v] for v in c] for c in maximal_cliques(g)])


def is_flag(k: SimplicialComplex) -> bool:
    if not k.facets:
        return True
    return clique_complex(k.skeleton_graph()) == k


def link(k: SimplicialComplex, sigma: Iterable[int]) -> SimplicialComplex:
    sigma = frozenset(sigma)
    over = [f - sigma for f in k.facets if sigma <= f]
    if not over:
        raise ComplexError(f"{sorted(sigma)} is not a face")
    return SimplicialComplex(over)


def simplicial_join(k: SimplicialComplex, l: SimplicialComplex) -> SimplicialComplex:
    """K * L; the vertices of ``l`` are shifted past those of ``k`` when labels collide."""
    if set(k.vertices) & set(l.vertices):
        shift = (max(k.vertices) + 1 if k.vertices else 0) - (min(l.vertices) if l.vertices else 0)
        l = l.relabel({v: v + shift for v in l.vertices})
    return SimplicialComplex([a | b for a in k.facets for b in l.facets])


def face_vector(k: SimplicialComplex) -> FaceVector:
    return FaceVector(k.f_entries())


def euler_characteristic(k: SimplicialComplex) -> int:
    """Non-reduced: sum over non-empty faces of (-1)^dim."""
    return sum((-1) ** i * c for i, c in enumerate(k.f_entries()[1:]))


def sphere_euler(j: int) -> int:
    return 2 if j % 2 == 0 else 0


def is_eulerian(k: SimplicialComplex) -> bool:
    d = k.dim
    if d < -1:
        return False
    for layer in k.faces_by_size:
        for sigma in layer:
            if euler_characteristic(link(k, sigma)) != sphere_euler(d - len(sigma)):
                return False
    return True


@dataclass
class ManifoldVerdict:
    ok: bool
    reason: str = ""
    witness: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def is_closed_flag_3_manifold(k: SimplicialComplex) -> ManifoldVerdict:
    """Combinatorial closed-flag-3-manifold test via vertex, edge and triangle links."""
    if k.dim != 3 or not k.is_pure():
        return ManifoldVerdict(False, "not pure of dimension 3")
    if not is_flag(k):
        return ManifoldVerdict(False, "not flag")
    g = k.skeleton_graph()
    if not g.is_connected():
        return ManifoldVerdict(False, "disconnected")
    lab = g.labels
    count: dict[frozenset, int] = {}
    for f in k.facets:
        for t in itertools.combinations(sorted(f), 3):
            count[frozenset(t)] = count.get(frozenset(t), 0) + 1
    for t, c in sorted(count.items(), key=lambda kv: sorted(kv[0])):
        if c != 2:
            return ManifoldVerdict(False, f"triangle in {c} facets", tuple(sorted(t)))
    for u, v in g.edges():
        common = g.adj_mask(u) & g.adj_mask(v)
        if common.bit_count() < 4 or not mask_is_cycle(g, common):
            return ManifoldVerdict(False, "edge link is not a cycle of length >= 4", (lab[u], lab[v]))
    for v in range(g.n):
        lk = g.induced_subgraph(g.adj_mask(v))
        if lk.n < 6 or not is_sphere_triangulation_skeleton(lk):
            return ManifoldVerdict(False, "vertex link is not a flag 2-sphere", (lab[v],))
    return ManifoldVerdict(True)


# -- GF(2) homology ------------------------------------------------------------

def _gf2_rank(rows: list[int]) -> int:
    """Rank of a GF(2) matrix given as int row bitmasks."""
    pivots: dict[int, int] = {}
    rank = 0
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top in pivots:
                r ^= pivots[top]
            else:
                pivots[top] = r
                rank += 1
                break
    return rank


@dataclass(frozen=True)
class BettiProfile:
    """Reduced GF(2) Betti numbers; ``betti[0]`` is degree -1."""

    betti: tuple[int, ...]

    def __getitem__(self, degree: int) -> int:
        i = degree + 1
        return self.betti[i] if 0 <= i < len(self.betti) else 0

    @property
    def top_degree(self) -> int:
        return len(self.betti) - 2


def sphere_profile(j: int) -> BettiProfile:
    return BettiProfile(tuple(1 if deg == j else 0 for deg in range(-1, j + 1)))


def homology_gf2(k: SimplicialComplex) -> BettiProfile:
    """Reduced homology over GF(2), degrees -1..dim, from boundary-matrix ranks.

    The augmented chain complex is used, so the empty face sits in degree -1.
    """
    layers = k.faces_by_size
    if not layers:
        return BettiProfile(())
    index = [{f: i for i, f in enumerate(layer)} for layer in layers]
    # rank of boundary from size-s faces to size-(s-1) faces, s >= 1
    ranks = [0] * (len(layers) + 1)
    for s in range(1, len(layers)):
        lower = index[s - 1]
        rows = []
        for f in layers[s]:
            r = 0
            for v in f:
                r |= 1 << lower[f - {v}]
            rows.append(r)
        ranks[s] = _gf2_rank(rows)
    betti = []
    for s in range(len(layers)):
        betti.append(len(layers[s]) - ranks[s] - ranks[s + 1])
    return BettiProfile(tuple(betti))


def is_ghs_gf2(k: SimplicialComplex) -> bool:
    """Every face link (the empty face included) has GF(2) homology of the right sphere.

    Necessary for a generalized homology sphere; torsion invisible over GF(2)
    is not detected.
    """
    d = k.dim
    if d < -1:
        return False
    for layer in k.faces_by_size:
        for sigma in layer:
            if homology_gf2(link(k, sigma)) != sphere_profile(d - len(sigma)):
                return False
    return True


# -- text format ---------------------------------------------------------------

def format_complex(k: SimplicialComplex, header: bool = True) -> str:
    lines = [f"dim {k.dim}"] if header and k.facets else []
    for f in k.facets:
        lines.append(" ".join(["f", *map(str, sorted(f))]))
    return "\n".join(lines) + "\n"


def parse_complex(text: str) -> SimplicialComplex:
    if text and not text.endswith("\n"):
        raise ComplexFormatError(text.count("\n") + 1, "missing trailing newline")
    dim = None
    facets = []
    for lineno, line in enumerate(text.split("\n")[:-1], start=1):
        if line.startswith("#"):
            continue
        parts = line.split()
        if not parts:
            raise ComplexFormatError(lineno, "blank line")
        if parts[0] == "dim":
            if dim is not None or facets:
                raise ComplexFormatError(lineno, "'dim' must be a single leading header")
            try:
                dim = int(parts[1]) if len(parts) == 2 else None
            except ValueError:
                dim = None
            if dim is None:
                raise ComplexFormatError(lineno, "expected 'dim <d>'")
        elif parts[0] == "f":
            if not all(p.isdigit() for p in parts[1:]):
                raise ComplexFormatError(lineno, "facet vertices must be non-negative integers")
            vs = [int(p) for p in parts[1:]]
            if vs != sorted(set(vs)):
                raise ComplexFormatError(lineno, "facet vertices must be strictly increasing")
            facets.append(vs)
        else:
            raise ComplexFormatError(lineno, f"unknown line {line!r}")
    k = SimplicialComplex(facets)
    if dim is not None and facets and k.dim != dim:
        raise ComplexFormatError(1, f"header says dim {dim} but facets give {k.dim}")
    return k
