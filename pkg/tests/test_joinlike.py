from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flagtri.constructions import (
    edge_subdivision,
    figure2a,
    figure2b,
    join_of_cycles,
    join_of_cycles_graph,
)
from flagtri.graph import complete_bipartite, cycle_graph, mask_of
from flagtri.joinlike import (
    NotFascinatingError,
    NotJoinlike,
    check_exceptional_degree_bounds,
    decomposition_from_cycles,
    detect_joinlike,
    is_join_of_two_cycles,
    stability_probe,
    stability_sets,
)


def _figure2b_partition(k):
    g = figure2b(k)
    return g, decomposition_from_cycles(g, mask_of(range(k)), mask_of(range(k, 2 * k + 1)), (3, 4), (2 * k - 1, 2 * k))


def test_join_is_zero_joinlike():
    d = detect_joinlike(join_of_cycles_graph(5, 7))
    assert d.t == 0
    assert d.C1 == [0, 1, 2, 3, 4]
    assert sorted(d.C2) == list(range(5, 12))


def test_figure2a_decomposition():
    d = detect_joinlike(figure2a(6, 4))
    assert d.t == 1
    (s,) = d.stats
    assert (s.d1, s.d2) == (3, 4)
    assert check_exceptional_degree_bounds(d).ok


def test_figure2b_minimal_decomposition():
    assert detect_joinlike(figure2b(8)).t == 2


def test_figure2b_constructed_partition_degrees():
    g, d = _figure2b_partition(8)
    assert d.t == 2
    assert [(s.d1, s.d2) for s in d.stats] == [(2, 8), (2, 8)]
    assert check_exceptional_degree_bounds(d).ok


def test_witness_edges_link_to_opposite_cycles():
    for g in (join_of_cycles_graph(4, 6), figure2a(7, 5), figure2b(6)):
        d = detect_joinlike(g)
        for (u, v), other in ((d.e1, d.C2), (d.e2, d.C1)):
            assert u in d.C1 + d.C2 and v in d.C1 + d.C2
            assert mask_of(other) == g.adj_mask(u) & g.adj_mask(v)
        assert sorted(d.C1 + d.C2 + d.X) == list(range(g.n))


def test_e_counts_never_exceed_degrees():
    for k in range(4, 10):
        _, d = _figure2b_partition(k)
        assert all(s.e1 <= s.d1 and s.e2 <= s.d2 for s in d.stats)


def test_t_max_limits_the_search():
    with pytest.raises(NotJoinlike):
        detect_joinlike(figure2a(6, 4), t_max=0)


def test_requires_fascinating_input():
    with pytest.raises(NotFascinatingError):
        detect_joinlike(complete_bipartite(4, 4))


def test_is_join_of_two_cycles_examples():
    ok, a, b = is_join_of_two_cycles(join_of_cycles_graph(4, 4))
    assert ok and (a, b) == ([0, 1, 2, 3], [4, 5, 6, 7])
    assert not is_join_of_two_cycles(figure2a(5, 3))[0]
    assert not is_join_of_two_cycles(cycle_graph(6))[0]


@settings(max_examples=25, deadline=None)
@given(st.integers(4, 7), st.integers(4, 7), st.lists(st.integers(0, 10**6), max_size=3))
def test_zero_joinlike_iff_join(p, q, picks):
    k = join_of_cycles(p, q)
    for pick in picks:
        edges = sorted(tuple(sorted(f)) for f in k.faces_by_size[2])
        k = edge_subdivision(k, edges[pick % len(edges)])
    g = k.skeleton_graph()
    try:
        t = detect_joinlike(g, t_max=g.n).t
    except NotJoinlike:
        t = None
    assert (t == 0) == is_join_of_two_cycles(g)[0]


def test_degree_bounds_on_families():
    for c in range(4, 10):
        for a2 in range(3, c):
            assert check_exceptional_degree_bounds(detect_joinlike(figure2a(c, a2))).ok
    for k in range(4, 10):
        assert check_exceptional_degree_bounds(_figure2b_partition(k)[1]).ok


def test_stability_probe_on_balanced_join():
    r = stability_probe(join_of_cycles_graph(20, 20), Fraction(1, 10), Fraction(1, 10000))
    assert r.X == [] and r.P == []
    assert r.b <= 40


def test_stability_probe_on_figure2a():
    r = stability_probe(figure2a(20, 5), Fraction(1, 10), Fraction(1, 10000))
    assert 40 in r.X1 + r.X2
    assert 40 in r.X


def test_stability_probe_on_complete_bipartite():
    r = stability_probe(complete_bipartite(10, 10), Fraction(1, 10), Fraction(1, 10000))
    assert r.S1 == r.A1 and r.S2 == r.A2
    assert not (r.W1 or r.W2 or r.X or r.P or r.T1 or r.T2)
    assert r.b == 0


@pytest.mark.parametrize("g", [join_of_cycles_graph(9, 11), figure2a(12, 5), figure2b(9)])
def test_stability_report_is_idempotent(g):
    r = stability_probe(g, Fraction(1, 10), Fraction(1, 1000), seed=3)
    again = stability_sets(g, r.A1, r.gamma, r.alpha)
    assert again == r
    assert stability_probe(g, Fraction(1, 10), Fraction(1, 1000), seed=3) == r


def test_stability_probe_rejects_bad_parameters():
    with pytest.raises(ValueError):
        stability_probe(cycle_graph(6), Fraction(1, 2), Fraction(1, 2))
