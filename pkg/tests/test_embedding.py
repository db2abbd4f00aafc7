import networkx as nx
import pytest

from planaraut import families
from planaraut.embedding import NotPlanar, embed, is_planar
from planaraut.graph import build_graph


@pytest.mark.parametrize("h,planar", [
    (nx.complete_graph(4), True),
    (nx.complete_graph(5), False),
    (nx.complete_bipartite_graph(3, 3), False),
])
def test_kuratowski(h, planar):
    assert is_planar(families.from_networkx(h)) is planar


def test_embed_rejects_k5():
    with pytest.raises(NotPlanar):
        embed(families.from_networkx(nx.complete_graph(5)))


@pytest.mark.parametrize("g,faces", [
    (build_graph([(0, 1), (1, 2), (2, 0)]), 2),
    (families.cube(), 6),
    (families.dodecahedron(), 12),
    (families.icosahedron(), 20),
])
def test_face_count(g, faces):
    pm = embed(g)
    assert pm.num_faces() == faces
    assert pm.euler_characteristic() == 2


def test_parallel_edges_add_faces():
    # a dipole with three parallel edges has three faces
    assert embed(build_graph([(0, 1)] * 3)).num_faces() == 3


def test_angle_operators_are_involutions():
    pm = embed(families.cube())
    for a in pm.angles():
        assert pm.rho(pm.rho(a)) == a
        assert pm.tau(pm.tau(a)) == a
        assert pm.lam(pm.lam(a)) == a


def test_mirror_reverses_rotations():
    pm = embed(families.wheel(5))
    mm = pm.mirrored()
    for v, r in pm.rot.items():
        assert tuple(reversed(mm.rot[v])) in {r[i:] + r[:i] for i in range(len(r))}


def test_pendant_halves_kept_out_of_rotation():
    g = build_graph([(0, 1), (1, 2), (2, 0), (0, None)])
    pm = embed(g)
    assert all(6 not in r and 7 not in r for r in pm.rot.values())
    assert pm.num_faces() == 2
