"""Graph corpora shared by the test modules."""

from __future__ import annotations

import random
from functools import lru_cache

import networkx as nx

from planaraut.families import from_networkx
from planaraut.graph import Multigraph, build_graph
from planaraut.oracle import is_automorphism
from planaraut.permgroup import group_order


@lru_cache(maxsize=None)
def atlas_planar() -> tuple[Multigraph, ...]:
    """Every connected planar graph on 1..7 vertices (networkx atlas)."""
    out = []
    for h in nx.graph_atlas_g()[1:]:
        if nx.is_connected(h) and nx.check_planarity(h)[0]:
            out.append(from_networkx(h))
    return tuple(out)


def random_planar(rng: random.Random, n: int) -> Multigraph:
    """Connected planar multigraph with colors, directions, parallels and free halves."""
    h = nx.Graph()
    h.add_nodes_from(range(n))
    for v in range(1, n):
        h.add_edge(v, rng.randrange(v))
    for _ in range(rng.randrange(0, 2 * n)):
        u, v = rng.sample(range(n), 2)
        if h.has_edge(u, v):
            continue
        h.add_edge(u, v)
        if not nx.check_planarity(h)[0]:
            h.remove_edge(u, v)
    ncol = rng.choice([1, 1, 2, 3])
    edges: list[tuple] = []
    for u, v in h.edges():
        copies = 1 if rng.random() < 0.8 else rng.choice([2, 3])
        for _ in range(copies):
            c = rng.randrange(ncol)
            edges.append((u, v, c, True) if rng.random() < 0.15 else (u, v, c))
    for _ in range(rng.choice([0, 0, 1, 2])):
        edges.append((rng.randrange(n), None, rng.randrange(ncol)))
    vc = {v: rng.randrange(2) for v in range(n)} if rng.random() < 0.3 else None
    return build_graph(edges, vertex_colors=vc, vertices=range(n))


@lru_cache(maxsize=None)
def random_sample(count: int = 500, seed: int = 2024) -> tuple[Multigraph, ...]:
    rng = random.Random(seed)
    return tuple(random_planar(rng, rng.randint(8, 10)) for _ in range(count))


def random_tree(rng: random.Random, n: int) -> Multigraph:
    if n == 1:
        return build_graph([], vertices=[0])
    h = nx.random_labeled_tree(n, seed=rng.randrange(10**9))
    return build_graph(list(h.edges()), vertices=range(n))


def generators_ok(report) -> tuple[bool, int]:
    """(every generator is an automorphism, Schreier-Sims order of the generators)."""
    gens = report.generator_tuples()
    replay = all(is_automorphism(report.graph, p) for p in gens)
    return replay, group_order(gens, report.degree) if gens else 1
