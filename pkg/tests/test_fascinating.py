import json
import random

import pytest

from flagtri.complex import SimplicialComplex, clique_complex, is_closed_flag_3_manifold
from flagtri.constructions import (
    cross_polytope_boundary,
    edge_subdivision,
    figure2a,
    figure2b,
    join_of_cycles,
    join_of_cycles_graph,
)
from flagtri.fascinating import (
    DISCONNECTED,
    NONPLANAR,
    NOT_MAXIMAL_PLANAR,
    TOO_SMALL,
    NotAManifoldError,
    assert_skeleton_fascinating,
    check_fascinating,
    vertex_link_failure,
)
from flagtri.graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    count_triangles,
    cycle_graph,
    empty_graph,
)


def test_join_c4_c4_passes():
    rep = check_fascinating(join_of_cycles_graph(4, 4))
    assert rep.passes
    assert rep.expected_triangles == rep.actual_triangles == 32


def test_k44_fails_with_empty_edge_links():
    rep = check_fascinating(complete_bipartite(4, 4))
    assert not rep.passes
    assert "b" in rep.failed_conditions()
    assert len(rep.cond_b) == 16
    assert all(w["reason"] == "empty" and w["link"] == [] for w in rep.cond_b)


def test_removing_a_cross_edge_breaks_an_edge_link():
    g = join_of_cycles_graph(5, 5)
    cut = Graph(g.n, [e for e in g.edges() if e != (0, 5)])
    rep = check_fascinating(cut)
    assert not rep.passes
    assert rep.cond_b
    assert all(w["reason"] != "empty" for w in rep.cond_b)


def test_condition_c_witness():
    # C4 * (two disjoint edges): every triangle link inside an edge side has 2 non-adjacent vertices,
    # but triangles through a C4 edge see an edge
    g = Graph(8, [(0, 1), (1, 2), (2, 3), (0, 3), (4, 5), (6, 7)] + [(u, v) for u in range(4) for v in range(4, 8)])
    rep = check_fascinating(g)
    assert rep.cond_c
    w = rep.cond_c[0]
    assert len(w["triangle"]) == 3


def test_non_exhaustive_stops_at_first_failure():
    rep = check_fascinating(complete_bipartite(4, 4), exhaustive=False)
    assert not rep.passes
    assert len(rep.cond_b) + len(rep.cond_c) + len(rep.cond_d) <= 1


@pytest.mark.parametrize("lk, reason", [
    (empty_graph(0), TOO_SMALL),
    (Graph(7, [(0, 1)]), DISCONNECTED),
    (complete_graph(5), NONPLANAR),
    (cycle_graph(7), NOT_MAXIMAL_PLANAR),
    (complete_graph(4), TOO_SMALL),
    (Graph(6, [e for e in complete_graph(6).edges() if e not in {(0, 1), (2, 3), (4, 5)}]), None),
])
def test_vertex_link_reasons(lk, reason):
    assert vertex_link_failure(lk) == reason


def test_report_json_keys_are_stable():
    data = check_fascinating(complete_bipartite(4, 4)).to_json()
    assert sorted(data) == ["cond_a", "cond_b", "cond_c", "cond_d", "exhaustive", "m", "n", "passes"]
    assert sorted(data["cond_a"]) == ["actual_triangles", "expected_triangles", "ok"]
    json.dumps(data)


def test_passes_iff_all_conditions_clear():
    for g in (join_of_cycles_graph(4, 6), complete_bipartite(4, 4), cycle_graph(6), complete_graph(7)):
        rep = check_fascinating(g)
        assert rep.passes == (rep.cond_a_ok and not rep.cond_b and not rep.cond_c and not rep.cond_d)


def test_assert_skeleton_on_joins_and_subdivisions():
    for p in range(4, 8):
        for q in range(p, 8):
            assert assert_skeleton_fascinating(join_of_cycles(p, q)).passes
    k = join_of_cycles(4, 5)
    for e in [(0, 1), (0, 4), (5, 6)]:
        assert assert_skeleton_fascinating(edge_subdivision(k, e)).passes
    assert assert_skeleton_fascinating(clique_complex(figure2b(10))).passes


def test_assert_skeleton_rejects_non_manifolds():
    with pytest.raises(NotAManifoldError):
        assert_skeleton_fascinating(cross_polytope_boundary(3))
    with pytest.raises(NotAManifoldError):
        assert_skeleton_fascinating(SimplicialComplex([(0, 1, 2, 3)]))


def test_triangle_count_on_eulerian_skeletons():
    for k in (join_of_cycles(5, 7), edge_subdivision(join_of_cycles(4, 4), (0, 4))):
        g = k.skeleton_graph()
        assert count_triangles(g) == 2 * (g.m - g.n)


def test_fascinating_and_manifold_agree_on_random_perturbations():
    rng = random.Random(7)
    base = join_of_cycles_graph(5, 6)
    edges = base.edges()
    for _ in range(60):
        drop = set(rng.sample(edges, rng.randint(0, 2)))
        g = Graph(base.n, [e for e in edges if e not in drop])
        fasc = check_fascinating(g).passes
        man = bool(is_closed_flag_3_manifold(clique_complex(g)))
        assert fasc == man


def test_figure_families_pass():
    assert check_fascinating(figure2a(5, 3)).passes
    assert check_fascinating(figure2b(10)).passes
