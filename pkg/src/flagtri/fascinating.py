"""Verifier for the four-part 'fascinating graph' condition.

A graph is fascinating when
  (a) it has exactly 2(m - n) triangles,
  (b) every edge link is a cycle on >= 4 vertices,
  (c) every triangle link is two isolated vertices,
  (d) every vertex link is a connected maximal planar graph on >= 6 vertices.
Every 1-skeleton of a closed flag 3-manifold passes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complex import SimplicialComplex, is_closed_flag_3_manifold
from .graph import (
    Graph,
    _is_locally_cyclic_sphere,
    bits,
    count_triangles,
    is_planar,
    mask_is_cycle,
)

DISCONNECTED = "disconnected"
NONPLANAR = "nonplanar"
NOT_MAXIMAL_PLANAR = "not_maximal_planar"
TOO_SMALL = "too_small"


@dataclass
class FascinatingReport:
    n: int
    m: int
    expected_triangles: int
    actual_triangles: int
    cond_b: list[dict] = field(default_factory=list)
    cond_c: list[dict] = field(default_factory=list)
    cond_d: list[dict] = field(default_factory=list)
    exhaustive: bool = True

    @property
    def cond_a_ok(self) -> bool:
        return self.expected_triangles == self.actual_triangles

    @property
    def passes(self) -> bool:
        return self.cond_a_ok and not (self.cond_b or self.cond_c or self.cond_d)

    def __bool__(self) -> bool:
        return self.passes

    def failed_conditions(self) -> list[str]:
        out = [] if self.cond_a_ok else ["a"]
        out += [c for c, lst in (("b", self.cond_b), ("c", self.cond_c), ("d", self.cond_d)) if lst]
        return out

    def to_json(self) -> dict:
        return {
            "passes": self.passes,
            "n": self.n,
            "m": self.m,
            "cond_a": {
                "ok": self.cond_a_ok,
                "expected_triangles": self.expected_triangles,
                "actual_triangles": self.actual_triangles,
            },
            "cond_b": self.cond_b,
            "cond_c": self.cond_c,
            "cond_d": self.cond_d,
            "exhaustive": self.exhaustive,
        }


def _describe_edge_link(g: Graph, mask: int) -> str | None:
    """None if the induced subgraph on ``mask`` is a cycle of length >= 4."""
    k = mask.bit_count()
    if k == 0:
        return "empty"
    if not mask_is_cycle(g, mask):
        return "not a cycle"
    if k < 4:
        return f"cycle of length {k}"
    return None


def vertex_link_failure(lk: Graph) -> str | None:
    if lk.n == 0:
        return TOO_SMALL
    if not lk.is_connected():
        return DISCONNECTED
    if lk.n >= 4 and lk.m == 3 * lk.n - 6 and _is_locally_cyclic_sphere(lk):
        return TOO_SMALL if lk.n < 6 else None
    if not is_planar(lk):
        return NONPLANAR
    if lk.n < 4 or lk.m != 3 * lk.n - 6:
        return NOT_MAXIMAL_PLANAR
    if lk.n < 6:
        return TOO_SMALL
    return None


def check_fascinating(g: Graph, exhaustive: bool = True) -> FascinatingReport:
    """Check all four conditions, collecting a witness per failure.

    With ``exhaustive=False`` the scan stops at the first failure; the report
    is still a correct verdict but lists only that witness.
    """
    lab = g.labels
    tri = count_triangles(g)
    report = FascinatingReport(g.n, g.m, 2 * (g.m - g.n), tri, exhaustive=exhaustive)
    if not exhaustive and not report.cond_a_ok:
        return report

    adj = g.adj_mask
    for u, v in g.edges():
        common = adj(u) & adj(v)
        why = _describe_edge_link(g, common)
        if why is not None:
            report.cond_b.append({"edge": [lab[u], lab[v]], "link": [lab[w] for w in bits(common)], "reason": why})
            if not exhaustive:
                return report

    for u, v in g.edges():
        for w in bits(adj(u) & adj(v) & ~((2 << v) - 1)):
            common = adj(u) & adj(v) & adj(w)
            ok = common.bit_count() == 2 and not any(adj(x) & common for x in bits(common))
            if not ok:
                report.cond_c.append({"triangle": [lab[u], lab[v], lab[w]],
                                      "link": [lab[x] for x in bits(common)]})
                if not exhaustive:
                    return report

    for v in range(g.n):
        lk = g.induced_subgraph(adj(v))
        why = vertex_link_failure(lk)
        if why is not None:
            report.cond_d.append({"vertex": lab[v], "reason": why, "link": [lab[x] for x in bits(adj(v))]})
            if not exhaustive:
                return report
    return report


class NotAManifoldError(ValueError):
    pass


def assert_skeleton_fascinating(k: SimplicialComplex) -> FascinatingReport:
    verdict = is_closed_flag_3_manifold(k)
    if not verdict:
        raise NotAManifoldError(f"not a closed flag 3-manifold: {verdict.reason} {verdict.witness}")
    report = check_fascinating(k.skeleton_graph())
    if not report.passes:
        raise AssertionError(f"skeleton of a closed flag 3-manifold fails conditions {report.failed_conditions()}")
    return report
