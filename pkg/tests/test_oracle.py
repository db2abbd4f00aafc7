import pytest

from planaraut import families
from planaraut.graph import build_graph
from planaraut.oracle import TooLarge, brute_force_aut, brute_force_count, is_automorphism


@pytest.mark.parametrize("g,count", [
    (families.path(4), 2),
    (families.cycle(5), 10),
    (families.wheel(5), 10),
    (families.tetrahedron(), 24),
    (families.cube(), 48),
    (build_graph([(0, 1)] * 3), 2 * 6),  # swap the ends, permute the parallel edges
])
def test_counts(g, count):
    assert brute_force_count(g) == count


def test_colors_and_directions_restrict():
    assert brute_force_count(build_graph([(0, 1, 1), (1, 2), (2, 3), (3, 0)])) == 2
    assert brute_force_count(build_graph([(0, 1, 0, True), (1, 2, 0, True), (2, 0, 0, True)])) == 3
    assert brute_force_count(build_graph([(0, 1), (1, 2), (2, 0)], vertex_colors={0: 1})) == 2


def test_free_halves():
    # a vertex with two same-colored free pendants: swapping them is a symmetry
    assert brute_force_count(build_graph([(0, None), (0, None)])) == 2


def test_every_enumerated_map_is_automorphism():
    g = families.wheel(4)
    auts = brute_force_aut(g)
    assert len(set(auts)) == len(auts) == 8
    assert all(is_automorphism(g, p) for p in auts)


def test_non_automorphism_rejected():
    g = families.path(3)
    ident = list(range(g.n + 2 * g.m))
    bad = ident[:]
    bad[0], bad[1] = 1, 0  # moves an end vertex onto the middle without touching halves
    assert is_automorphism(g, ident)
    assert not is_automorphism(g, bad)


def test_size_limit():
    with pytest.raises(TooLarge):
        brute_force_count(families.dodecahedron())
    assert brute_force_count(families.dodecahedron(), max_vertices=20) == 120
