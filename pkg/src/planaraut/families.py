"""Named graph families used as fixtures, realizer seeds and benchmarks."""

from __future__ import annotations

import networkx as nx

from .graph import Multigraph, build_graph


def from_networkx(h: nx.Graph) -> Multigraph:
    nodes = sorted(h.nodes())
    idx = {v: i for i, v in enumerate(nodes)}
    return build_graph([(idx[u], idx[v]) for u, v in h.edges()], vertices=range(len(nodes)))


def tetrahedron() -> Multigraph:
    return from_networkx(nx.complete_graph(4))


def cube() -> Multigraph:
    return from_networkx(nx.hypercube_graph(3))


def octahedron() -> Multigraph:
    return from_networkx(nx.octahedral_graph())


def dodecahedron() -> Multigraph:
    return from_networkx(nx.dodecahedral_graph())


def icosahedron() -> Multigraph:
    return from_networkx(nx.icosahedral_graph())


PLATONIC = {
    "tetrahedron": tetrahedron,
    "cube": cube,
    "octahedron": octahedron,
    "dodecahedron": dodecahedron,
    "icosahedron": icosahedron,
}


def cycle(n: int) -> Multigraph:
    return build_graph([(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Multigraph:
    return build_graph([(i, i + 1) for i in range(n - 1)], vertices=range(n))


def wheel(n: int) -> Multigraph:
    """Hub 0 joined to the rim cycle 1..n."""
    rim = [(1 + i, 1 + (i + 1) % n) for i in range(n)]
    return build_graph(rim + [(0, 1 + i) for i in range(n)])


def prism(n: int) -> Multigraph:
    top = [(i, (i + 1) % n) for i in range(n)]
    bot = [(n + i, n + (i + 1) % n) for i in range(n)]
    return build_graph(top + bot + [(i, n + i) for i in range(n)])


def nested(n: int) -> Multigraph:
    """Wheel whose rim edges carry two levels of nested symmetric gadgets.

    Every rim edge ``u v`` becomes a diamond ``u a v b`` with chord ``a b``;
    each diamond chord is in turn replaced by a 4-cycle ``a c b d``.  With
    ``k`` spokes the graph has ``1 + 5k`` vertices; ``k`` is chosen so the
    vertex count is as close to ``n`` as possible.
    """
    k = max(3, round((n - 1) / 5))
    edges = []
    nxt = 1 + k

    def fresh() -> int:
        nonlocal nxt
        nxt += 1
        return nxt - 1

    for i in range(k):
        u, v = 1 + i, 1 + (i + 1) % k
        edges.append((0, u))
        a, b = fresh(), fresh()
        edges += [(u, a), (a, v), (v, b), (b, u)]
        c, d = fresh(), fresh()
        edges += [(a, c), (c, b), (b, d), (d, a)]
    return build_graph(edges)
