import pytest

from planaraut import families
from planaraut.decomposition import (
    DIPOLE,
    NONSTAR,
    PROPER,
    STAR,
    build_block_tree,
    find_atoms,
    nontrivial_two_cuts,
    reduce_step,
    reduction_series,
)
from planaraut.graph import build_graph
from planaraut.oracle import brute_force_count

TRIANGLE_WITH_PATHS = build_graph([(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (1, 5), (5, 6), (2, 7), (7, 8)])


def test_block_tree_of_path():
    bt = build_block_tree(families.path(4))
    assert len(bt.blocks) == 3 and len(bt.articulations) == 2
    middle = [i for i, vs in enumerate(bt.block_vertices) if vs == frozenset({1, 2})]
    assert bt.center == ("b", middle[0])


def test_block_tree_of_cycle():
    bt = build_block_tree(families.cycle(5))
    assert len(bt.blocks) == 1 and bt.articulations == [] and bt.center == ("b", 0)


def test_bowtie_center_is_shared_vertex():
    bt = build_block_tree(build_graph([(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]))
    assert bt.articulations == [2] and bt.center == ("a", 2)


@pytest.mark.parametrize("g", [families.cube(), families.cycle(6)])
def test_no_two_cuts(g):
    assert nontrivial_two_cuts(g) == []


def test_two_cut_of_bridged_square():
    # C4 with the chord 0-2 removed from consideration leaves {0, 2} as the only cut
    g = build_graph([(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 2), (1, 3)])
    assert nontrivial_two_cuts(g) == [(0, 2)]


def test_pendant_star_is_one_star_atom():
    g = build_graph([(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (3, 5), (3, 6)])
    kinds = sorted(a.kind for a in find_atoms(g))
    assert kinds.count(STAR) == 1


def test_pendant_paths_are_block_atoms():
    atoms = find_atoms(TRIANGLE_WITH_PATHS)
    assert [a.kind for a in atoms] == [NONSTAR] * 3
    assert len({a.code for a in atoms}) == 1


def test_dipole_and_proper_atoms():
    g = build_graph([(0, 1), (0, 1), (0, 2), (2, 1), (0, 3), (3, 1)])
    kinds = sorted(a.kind for a in find_atoms(g))
    assert kinds == sorted([DIPOLE, PROPER, PROPER])


def test_directed_dipole_is_asymmetric():
    g = build_graph([(0, 1, 1, True), (0, 1, 2), (0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1)])
    dip = [a for a in find_atoms(g) if a.kind == DIPOLE]
    assert len(dip) == 1 and not dip[0].symmetric
    assert str(dip[0].symmetry()) == "Asymmetric"


def test_path_proper_atom_has_reflection():
    g = build_graph([(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    for a in find_atoms(g):
        assert a.kind == PROPER
        sym = a.symmetry()
        assert sym.symmetric and sym.tau is not None and sym.tau.compose(sym.tau).is_identity()


def test_codes_distinguish_shapes():
    tri = build_graph([(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0), (0, 5), (5, 6), (6, 7)])
    atoms = find_atoms(tri)
    assert len({a.code for a in atoms}) == 2  # the two triangles match, the path does not


def test_colored_square_codes():
    def host(color_edge):
        # two C4 atoms hanging at vertex 0; the colored edge sits at a chosen position
        base = [(0, 1), (1, 2), (2, 3), (3, 0)]
        edges = [(a, b, 5 if i == color_edge else 0) for i, (a, b) in enumerate(base)]
        edges += [(0, 4), (4, 5), (5, 0)]
        return find_atoms(build_graph(edges))

    a = [x for x in host(1) if len(x.vertices) == 4][0]
    b = [x for x in host(2) if len(x.vertices) == 4][0]  # the mirror position
    c = [x for x in host(0) if len(x.vertices) == 4][0]
    assert a.code == b.code
    assert a.code != c.code


def test_reduce_step_keeps_group_order():
    atoms = find_atoms(TRIANGLE_WITH_PATHS)
    step = reduce_step(TRIANGLE_WITH_PATHS, atoms)
    g1 = step.graph
    assert (g1.n, g1.m) == (3, 6)
    pend = [e for e in g1.edges if e.b is None]
    assert len(pend) == 3 and len({e.color for e in pend}) == 1
    assert brute_force_count(TRIANGLE_WITH_PATHS) == brute_force_count(g1) == 6


def test_cube_is_primitive():
    t = reduction_series(families.cube())
    assert t.depth == 0 and t.roots[0].view.structure.shape == "3conn"


def test_tree_root_is_small():
    for n in (5, 6, 9):
        t = reduction_series(families.path(n))
        top = t.levels[-1].graph
        assert top.n <= 2


def test_nested_family_levels():
    t = reduction_series(families.nested(16))
    assert t.depth == 3
    assert all(lv.atoms for lv in t.levels[:-1])
    assert len(t.color_table) == 3
