import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from test_graph import graphs

from flagtri.complex import (
    VOID,
    BettiProfile,
    ComplexError,
    ComplexFormatError,
    SimplicialComplex,
    clique_complex,
    euler_characteristic,
    face_vector,
    format_complex,
    homology_gf2,
    is_closed_flag_3_manifold,
    is_eulerian,
    is_flag,
    is_ghs_gf2,
    link,
    parse_complex,
    simplicial_join,
    sphere_profile,
)
from flagtri.constructions import (
    cross_polytope_boundary,
    cycle,
    figure2a,
    join_of_cycles,
)
from flagtri.graph import Graph, complete_graph, cycle_graph, link_of_clique
from flagtri.vectors import f_to_h, is_dehn_sommerville

S0 = SimplicialComplex([(0,), (1,)])
TETRA_BOUNDARY = SimplicialComplex([(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
# 7-vertex torus and 6-vertex projective plane
TORUS = SimplicialComplex([(i % 7, (i + 1) % 7, (i + 3) % 7) for i in range(7)]
                          + [(i % 7, (i + 2) % 7, (i + 3) % 7) for i in range(7)])
RP2 = SimplicialComplex([(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5), (1, 2, 4),
                         (2, 3, 5), (1, 3, 4), (1, 3, 5), (2, 4, 5)])


@st.composite
def complexes(draw, max_vertex=7):
    facets = draw(st.lists(st.sets(st.integers(0, max_vertex), min_size=1, max_size=4), min_size=1, max_size=6))
    return SimplicialComplex(facets)


def test_clique_complex_examples():
    c44 = clique_complex(join_of_cycles(4, 4).skeleton_graph())
    assert c44.f_entries() == (1, 8, 24, 32, 16)
    assert clique_complex(cycle_graph(5)).f_entries() == (1, 5, 5)
    assert clique_complex(complete_graph(4)).f_entries() == (1, 4, 6, 4, 1)


@given(graphs(max_n=8))
def test_clique_complex_skeleton_is_graph(g):
    assert clique_complex(g).skeleton_graph().edges() == g.edges()
    assert is_flag(clique_complex(g))


def test_flag_examples():
    assert not is_flag(TETRA_BOUNDARY)
    assert is_flag(join_of_cycles(4, 4))


def test_link_examples():
    k = join_of_cycles(4, 4)
    lk = link(k, [0])
    assert lk.f_entries() == (1, 6, 12, 8)
    # antipodal pairs of the octahedron are the non-adjacent pairs {1,3}, {4,6}, {5,7}
    assert lk == cross_polytope_boundary(3).relabel({0: 1, 1: 3, 2: 4, 3: 6, 4: 5, 5: 7})
    assert link(k, []) == k
    k55 = join_of_cycles(5, 5)
    assert link(k55, [0, 1]) == SimplicialComplex([(5 + i, 5 + (i + 1) % 5) for i in range(5)])
    with pytest.raises(ComplexError):
        link(k, [0, 2])


def test_flag_link_skeleton_matches_graph_link():
    for k in (join_of_cycles(4, 4), join_of_cycles(4, 5), cross_polytope_boundary(4)):
        g = k.skeleton_graph()
        index = {v: i for i, v in enumerate(g.labels)}
        for sigma in k.faces():
            lk = link(k, sigma).skeleton_graph()
            expected = link_of_clique(g, [index[v] for v in sigma])
            assert sorted(lk.labels) == sorted(g.labels[i] for i in expected.labels)
            assert lk.m == expected.m


def test_join_examples():
    assert simplicial_join(S0, S0).f_entries() == (1, 4, 4)
    assert simplicial_join(cycle(5), cycle(5)).f_entries() == (1, 10, 35, 50, 25)
    assert simplicial_join(cycle(5), VOID) == cycle(5)


def _convolve(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


@given(complexes(), complexes())
def test_join_f_vector_is_convolution(k, l):
    assert simplicial_join(k, l).f_entries() == _convolve(k.f_entries(), l.f_entries())


def test_join_skeleton_is_graph_join():
    k = simplicial_join(cycle(4), cycle(5))
    g = k.skeleton_graph()
    assert g.m == 4 + 5 + 20


def test_euler_examples():
    assert euler_characteristic(join_of_cycles(4, 4)) == 0
    assert euler_characteristic(cross_polytope_boundary(3)) == 2
    assert euler_characteristic(VOID) == 0


def test_eulerian_examples():
    assert is_eulerian(join_of_cycles(4, 4))
    assert not is_eulerian(SimplicialComplex([(0, 1, 2, 3)]))
    assert is_eulerian(join_of_cycles(5, 6))


def test_manifold_examples():
    assert is_closed_flag_3_manifold(join_of_cycles(4, 4))
    assert is_closed_flag_3_manifold(join_of_cycles(5, 5))
    g = join_of_cycles(4, 4).skeleton_graph()
    cut = Graph(g.n, [e for e in g.edges() if e != (0, 4)])
    verdict = is_closed_flag_3_manifold(clique_complex(cut))
    assert not verdict
    assert verdict.reason


def test_manifold_rejects_non_flag_and_low_dimension():
    assert is_closed_flag_3_manifold(TETRA_BOUNDARY).reason == "not pure of dimension 3"
    boundary_4simplex = SimplicialComplex([tuple(v for v in range(5) if v != i) for i in range(5)])
    assert is_closed_flag_3_manifold(boundary_4simplex).reason == "not flag"


def test_homology_examples():
    assert homology_gf2(join_of_cycles(5, 5)).betti == (0, 0, 0, 0, 1)
    assert homology_gf2(S0).betti == (0, 1)
    assert homology_gf2(cycle(6)).betti == (0, 0, 1)
    assert homology_gf2(VOID).betti == (1,)


def test_homology_of_surfaces():
    assert homology_gf2(TORUS).betti == (0, 0, 2, 1)
    assert homology_gf2(RP2).betti == (0, 0, 1, 1)


@given(complexes())
def test_euler_poincare(k):
    b = homology_gf2(k).betti
    assert sum((-1) ** (i - 1) * x for i, x in enumerate(b)) == euler_characteristic(k) - 1
    assert all(x >= 0 for x in b)


def test_ghs_examples():
    assert is_ghs_gf2(join_of_cycles(4, 4))
    disk = simplicial_join(cycle(4), SimplicialComplex([(9,)]))
    assert not is_ghs_gf2(disk)
    assert is_ghs_gf2(clique_complex(figure2a(5, 3)))
    assert not is_ghs_gf2(TORUS)


def test_sphere_profile():
    assert sphere_profile(-1) == BettiProfile((1,))
    assert sphere_profile(2).betti == (0, 0, 0, 1)


@settings(max_examples=50)
@given(graphs(max_n=8))
def test_eulerian_implies_dehn_sommerville(g):
    k = clique_complex(g)
    if k.facets and is_eulerian(k):
        assert is_dehn_sommerville(f_to_h(face_vector(k)))


def test_dehn_sommerville_on_eulerian_constructions():
    for k in (join_of_cycles(4, 7), cross_polytope_boundary(4), cycle(9)):
        assert is_eulerian(k)
        assert is_dehn_sommerville(f_to_h(face_vector(k)))


@given(complexes())
def test_format_round_trip(k):
    text = format_complex(k)
    assert parse_complex(text) == k
    assert format_complex(parse_complex(text)) == text


@pytest.mark.parametrize("text, line", [
    ("f 0 1", 1),
    ("f 1 0\n", 1),
    ("f 0 0\n", 1),
    ("f 0 1\ndim 1\n", 2),
    ("dim x\n", 1),
    ("f 0 a\n", 1),
    ("f 0 1\n\n", 2),
    ("g 0 1\n", 1),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ComplexFormatError) as exc:
        parse_complex(text)
    assert exc.value.lineno == line


def test_header_dimension_must_match():
    with pytest.raises(ComplexFormatError):
        parse_complex("dim 2\nf 0 1\n")


def test_complex_keeps_maximal_faces_only():
    k = SimplicialComplex([(0, 1), (0, 1, 2), (3,)])
    assert sorted(map(sorted, k.facets)) == [[0, 1, 2], [3]]
    assert frozenset() in k
    assert frozenset({0, 2}) in k
    assert k.dim == 2
