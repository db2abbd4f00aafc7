from collections import Counter

import pytest

from planaraut import families
from planaraut.embedding import embed
from planaraut.graph import build_graph
from planaraut.mapaut import aut_map, identify_spherical, stabilizer, try_extend


def _extensions(g, a_index=0):
    pm = embed(g)
    angles = pm.angles()
    a = angles[a_index]
    return [r for b in angles for m in (False, True) if (r := try_extend(pm, a, b, m)) is not None]


def test_identity_extension():
    g = families.cube()
    pm = embed(g)
    a = pm.angles()[0]
    r = try_extend(pm, a, a, False)
    assert r is not None and r.perm == tuple(range(g.n + 2 * g.m))
    assert r.orientation == "Preserving"


@pytest.mark.parametrize("a_index", [0, 7, 31])
def test_cube_has_48_extensions(a_index):
    exts = _extensions(families.cube(), a_index)
    assert len(exts) == 48
    assert len({e.perm for e in exts}) == 48
    assert sum(e.reversing for e in exts) == 24


def test_colored_square_extensions():
    # degree-2 angles admit both orientations; the red edge leaves two automorphisms
    exts = _extensions(build_graph([(0, 1, 1), (1, 2), (2, 3), (3, 0)]))
    assert len(exts) == 4
    assert len({e.perm for e in exts}) == 2


@pytest.mark.parametrize("name,order,label", [
    ("tetrahedron", 24, "S_4"),
    ("cube", 48, "S_4 x C_2"),
    ("octahedron", 48, "S_4 x C_2"),
    ("dodecahedron", 120, "A_5 x C_2"),
    ("icosahedron", 120, "A_5 x C_2"),
])
def test_platonic_groups(name, order, label):
    gens, sid = aut_map(families.PLATONIC[name]())
    assert sid.order == order == len(gens)
    assert str(sid) == label


def test_wheel_group():
    _, sid = aut_map(families.wheel(5))
    assert str(sid) == "D_5" and sid.order == 10


@pytest.mark.parametrize("g,v,label", [
    (families.cube(), 0, "D_3"),
    (families.tetrahedron(), 0, "D_3"),
    (families.wheel(5), 0, "D_5"),
    (families.wheel(5), 3, "C_2"),
])
def test_vertex_stabilizers(g, v, label):
    gens, sid = stabilizer(g, v)
    assert str(sid) == label and len(gens) == sid.order
    assert all(p.perm[v] == v for p in gens)


def test_identify_small_cases():
    assert str(identify_spherical(1, Counter({1: 1}))) == "C_1"
    # three rotations of order 2 plus identity inside an order-4 group: the Klein group, named D_2
    assert str(identify_spherical(4, Counter({1: 1, 2: 3}))) == "D_2"
    assert str(identify_spherical(4, Counter({1: 1, 2: 1, 4: 2}))) == "C_4"
