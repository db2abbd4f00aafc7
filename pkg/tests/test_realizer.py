import pytest

from planaraut import groups as ge
from planaraut.composer import analyze
from planaraut.oracle import brute_force_count
from planaraut.realizer import (
    OrbitCountMismatch,
    UnsupportedShape,
    realize,
    realize_aut,
    realize_fix,
    seed_graph,
    seed_orbits,
)


@pytest.mark.parametrize("text", [
    "1", "S(3)", "C(5)", "D(1)", "D(2)", "D(4)", "D(5)", "wr(C(2),C(3))", "wr(S(2),S(3))",
    "prod(S(2),S(2))", "pow(S(3),2)", "wr(wr(C(3),C(3)),S(2))",
    "sd(prod(pow(S(2),2),C(3),S(2)),C(2))",
    "sd(prod(pow(1,6),pow(S(2),3),pow(1,3)),D(3))",
    "sd(prod(pow(1,4),pow(1,2),pow(S(2),2),pow(1,2),pow(1,2),C(3)),D(2))",
    "sd(prod(pow(S(2),8),pow(1,4),pow(C(3),4),pow(1,4),pow(S(2),4)),D(4))",
])
def test_realize_round_trip(text):
    e = ge.parse(text)
    r = realize(e)
    assert r.predicted_order == ge.order(e)
    assert analyze(r.graph).order == r.predicted_order


@pytest.mark.parametrize("text", ["S(2)", "S(3)", "C(3)", "D(1)", "prod(S(2),S(2))", "wr(S(2),S(2))"])
def test_pinned_gadget_against_oracle(text):
    r = realize_fix(ge.parse(text))
    g = r.pinned()
    assert g.n <= 13
    assert brute_force_count(g, max_vertices=13) == r.predicted_order


def test_unsupported_semidirect():
    with pytest.raises(UnsupportedShape):
        realize(ge.parse("sd(pow(S(2),3),C(3))"))


@pytest.mark.parametrize("seed,n_orbits,order", [
    ("cube", 1, 48), ("K2", 1, 2), ("prism:3", 2, 12), ("wheel:5", 2, 10), ("cycle:7", 1, 14),
])
def test_seed_orbits(seed, n_orbits, order):
    orbits, aut = seed_orbits(seed_graph(seed))
    assert len(orbits) == n_orbits and aut == order


@pytest.mark.parametrize("seed,exprs", [
    ("cube", ["S(2)"]),
    ("cycle:5", ["1"]),
    ("prism:3", ["S(2)", "C(3)"]),
    ("wheel:5", ["S(2)", "1"]),
    ("K2", ["S(2)"]),
    ("K2", ["C(3)"]),
    ("icosahedron", ["1"]),
])
def test_realize_aut(seed, exprs):
    r = realize_aut(seed, [ge.parse(x) for x in exprs])
    assert analyze(r.graph).order == r.predicted_order


def test_orbit_count_checked():
    with pytest.raises(OrbitCountMismatch):
        realize_aut("prism:5", [ge.Trivial()])


def test_unknown_seed():
    with pytest.raises(UnsupportedShape):
        seed_graph("torus")
