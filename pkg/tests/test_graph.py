import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st
from networkx.generators.atlas import graph_atlas_g
from oracles import clique_sets, is_planar_kuratowski, nx_graph, triangle_count

from flagtri.graph import (
    Graph,
    GraphError,
    GraphFormatError,
    complete_bipartite,
    complete_graph,
    contains_k33,
    count_triangles,
    cross_counts,
    cycle_graph,
    empty_graph,
    enumerate_cliques,
    format_graph,
    graph_join,
    is_cycle_graph,
    is_planar,
    is_sphere_triangulation_skeleton,
    link_of_clique,
    mask_is_cycle,
    maximal_cliques,
    parse_graph,
    triangles,
)


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, c in zip(pairs, chosen) if c])


def _atlas():
    for G in graph_atlas_g()[1:]:
        yield Graph(G.number_of_nodes(), list(G.edges()))


def test_planarity_agrees_with_kuratowski_oracle_up_to_seven_vertices():
    disagreements = []
    nonplanar = 0
    for g in _atlas():
        expected = is_planar_kuratowski(g)
        nonplanar += not expected
        if is_planar(g) != expected:
            disagreements.append(g.edges())
    assert not disagreements
    assert nonplanar > 0


def test_planarity_known_graphs():
    assert not is_planar(complete_graph(5))
    assert not is_planar(complete_bipartite(3, 3))
    assert is_planar(complete_graph(4))
    # octahedron
    octa = Graph(6, [e for e in complete_graph(6).edges() if e not in {(0, 1), (2, 3), (4, 5)}])
    assert is_planar(octa)
    assert is_sphere_triangulation_skeleton(octa)


@given(graphs(max_n=12))
def test_planarity_agrees_with_networkx(g):
    assert is_planar(g) == nx.check_planarity(nx_graph(g))[0]


@given(graphs())
def test_cliques_match_networkx(g):
    found = list(enumerate_cliques(g, max_size=g.n or 1))
    assert len(found) == len(set(found))
    assert {frozenset(c) for c in found} == clique_sets(g)
    assert found == sorted(found)


@given(graphs())
def test_clique_roots_partition_the_traversal(g):
    if g.n == 0:
        return
    whole = list(enumerate_cliques(g, 4))
    parts = []
    for chunk in ([v for v in range(g.n) if v % 2 == 0], [v for v in range(g.n) if v % 2 == 1]):
        parts += list(enumerate_cliques(g, 4, roots=chunk))
    assert sorted(parts) == whole


@given(graphs())
def test_maximal_cliques_match_networkx(g):
    if g.n == 0:
        assert maximal_cliques(g) == [()]
        return
    expected = sorted(tuple(sorted(c)) for c in nx.find_cliques(nx_graph(g)))
    assert maximal_cliques(g) == expected


@given(graphs())
def test_triangles_match_networkx(g):
    assert count_triangles(g) == triangle_count(g)
    assert len(list(triangles(g))) == count_triangles(g)


@given(graphs())
def test_format_round_trip(g):
    text = format_graph(g)
    assert parse_graph(text) == g
    assert format_graph(parse_graph(text)) == text


@given(graphs())
def test_complement_is_involution(g):
    assert g.complement().complement() == g
    assert g.m + g.complement().m == g.n * (g.n - 1) // 2


@pytest.mark.parametrize("text, line", [
    ("n 3\ne 0 1", 2),
    ("n 3\ne 0 3\n", 2),
    ("n 3\ne 1 0\n", 2),
    ("n 3\ne 0 1\ne 0 1\n", 3),
    ("e 0 1\n", 1),
    ("n 3\n\n", 2),
    ("n 3\nx 1\n", 2),
    ("# empty\n", 1),
    ("n 3\nn 4\n", 2),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(GraphFormatError) as exc:
        parse_graph(text)
    assert exc.value.lineno == line
    assert str(exc.value).startswith(f"line {line}:")


def test_parse_allows_comments():
    assert parse_graph("# a path\nn 3\ne 0 1\n# middle\ne 1 2\n") == Graph(3, [(0, 1), (1, 2)])


def test_cycle_predicates():
    assert is_cycle_graph(cycle_graph(7)) == (True, 7)
    assert is_cycle_graph(graph_join(cycle_graph(3), empty_graph(0))) == (True, 3)
    two_triangles = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert is_cycle_graph(two_triangles) == (False, None)
    assert not mask_is_cycle(two_triangles, two_triangles.vertex_mask)
    assert mask_is_cycle(two_triangles, 0b111)


def test_join_and_cross_counts():
    g = graph_join(cycle_graph(4), cycle_graph(5))
    assert g.n == 9 and g.m == 4 + 5 + 20
    assert cross_counts(g, range(4), range(4, 9)).nonedges_across == 0
    assert cross_counts(g, [0, 2], [1, 3]).edges_across == 4
    with pytest.raises(GraphError):
        cross_counts(g, [0, 1], [1, 2])


def test_link_of_clique():
    g = graph_join(cycle_graph(4), cycle_graph(4))
    lk = link_of_clique(g, [0, 4])
    assert sorted(lk.labels) == [1, 3, 5, 7]
    assert is_cycle_graph(lk) == (True, 4)
    assert link_of_clique(g, []) == g
    with pytest.raises(GraphError):
        link_of_clique(g, [0, 2])


def test_induced_subgraph_labels_map_back():
    g = cycle_graph(6)
    sub = g.induced_subgraph([1, 2, 3, 5])
    assert sub.labels == (1, 2, 3, 5)
    assert sub.edges() == [(0, 1), (1, 2)]


def test_contains_k33():
    assert contains_k33(complete_bipartite(3, 3)) is not None
    assert contains_k33(complete_graph(5)) is None
    a1, a2, a3, *bs = contains_k33(complete_graph(6))
    g = complete_graph(6)
    assert all(g.has_edge(a, b) for a in (a1, a2, a3) for b in bs)


def test_invalid_edges_rejected():
    with pytest.raises(GraphError):
        Graph(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 5)])
