import pytest

from planaraut.graph import (
    DuplicatePendantColorConflict,
    EdgeListSyntaxError,
    LoopRejected,
    build_graph,
    degree,
    disjoint_union,
    dump_edge_list,
    normalize_vertex_colors,
    parse_edge_list,
)

TRIANGLE = [(0, 1), (1, 2), (2, 0)]


def test_triangle_counts():
    g = build_graph(TRIANGLE)
    assert (g.n, g.m, g.num_halves) == (3, 3, 6)


def test_parallel_edges_kept():
    g = build_graph([(0, 1), (0, 1)])
    assert g.m == 2
    assert degree(g, 0) == 2


def test_loop_rejected():
    with pytest.raises(LoopRejected):
        build_graph([(0, 0)])


def test_conflicting_vertex_colors():
    with pytest.raises(DuplicatePendantColorConflict):
        build_graph(TRIANGLE, vertex_colors=[(0, 1), (0, 2)])


def test_vertex_color_becomes_pendant():
    g = build_graph(TRIANGLE, vertex_colors={0: 1})
    h = normalize_vertex_colors(g)
    assert h.m == g.m + 1
    assert h.num_halves == g.num_halves + 2
    assert h.edges[-1].b is None


def test_uncolored_normalization_is_identity():
    g = build_graph(TRIANGLE)
    h = normalize_vertex_colors(g)
    assert h.m == g.m and [(e.a, e.b) for e in h.edges] == [(e.a, e.b) for e in g.edges]


def test_shared_vertex_color_gives_matching_pendants():
    h = normalize_vertex_colors(build_graph(TRIANGLE, vertex_colors={0: 1, 1: 1}))
    pend = [e for e in h.edges if e.b is None]
    assert len(pend) == 2 and pend[0].color == pend[1].color


@pytest.mark.parametrize("edges,v,want", [
    (TRIANGLE, 0, 2),
    ([(0, 1)] * 3, 0, 3),
    ([(0, None)], 0, 1),
])
def test_degree(edges, v, want):
    assert degree(build_graph(edges), v) == want


def test_directed_edge_tail():
    g = build_graph([(3, 1, 2, True)])
    e = g.edges[0]
    assert e.directed and e.a == 1 and e.color == 2  # vertex 3 is remapped to 1


def test_components_and_union():
    g = disjoint_union([build_graph(TRIANGLE), build_graph([(0, 1)])])
    assert g.n == 5 and not g.is_connected()
    assert sorted(len(c) for c in g.components()) == [2, 3]


def test_edge_list_round_trip():
    g = build_graph([(0, 1, 2), (1, 2, 0, True), (2, None, 1)], vertex_colors={1: 3})
    h = parse_edge_list(dump_edge_list(g))
    assert (h.n, h.m, h.vertex_color) == (g.n, g.m, g.vertex_color)
    assert [(e.a, e.b, e.color, e.directed) for e in h.edges] == [(e.a, e.b, e.color, e.directed) for e in g.edges]


def test_edge_list_syntax_error():
    with pytest.raises(EdgeListSyntaxError):
        parse_edge_list("0 1\nthree four\n")
