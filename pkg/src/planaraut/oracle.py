"""Brute-force automorphism enumeration for small multigraphs.

Permutations act on the combined domain: vertices ``0..n-1`` followed by
half-edges ``n..n+2m-1``.  Vertex images are found by plain backtracking;
each vertex map then expands to half-edges by permuting parallel bundles
and free pendant halves within equal edge types.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from itertools import permutations, product
from math import factorial, prod
from typing import Iterator

from .graph import Multigraph

DEFAULT_MAX_VERTICES = 10


class TooLarge(ValueError):
    pass


def _edge_type(g: Multigraph, e: int, at_side: int) -> tuple[int, int]:
    ed = g.edges[e]
    if ed.tail is None:
        return (ed.color, 0)
    return (ed.color, 1 if ed.tail == at_side else 2)


def _tables(g: Multigraph):
    # bundle[(x, y)] -> {type seen from x: [(edge, side at x), ...]}
    bundle: dict[tuple[int, int], dict] = defaultdict(lambda: defaultdict(list))
    free: dict[int, dict] = defaultdict(lambda: defaultdict(list))
    for i, ed in enumerate(g.edges):
        if ed.b is None:
            free[ed.a][_edge_type(g, i, 0)].append(i)
            continue
        bundle[(ed.a, ed.b)][_edge_type(g, i, 0)].append((i, 0))
        bundle[(ed.b, ed.a)][_edge_type(g, i, 1)].append((i, 1))
    sig = {k: Counter({t: len(v) for t, v in d.items()}) for k, d in bundle.items()}
    fsig = {k: Counter({t: len(v) for t, v in d.items()}) for k, d in free.items()}
    return bundle, free, sig, fsig


def _vertex_maps(g: Multigraph, max_vertices: int) -> Iterator[list[int]]:
    if g.n > max_vertices:
        raise TooLarge(f"oracle limited to {max_vertices} vertices, got {g.n}")
    bundle, free, sig, fsig = _tables(g)
    nbrs = [set() for _ in range(g.n)]
    for (x, y) in sig:
        nbrs[x].add(y)
    inv = [
        (g.vertex_color[v], g.degree(v), tuple(sorted(fsig.get(v, Counter()).items())),
         tuple(sorted(Counter(t for y in nbrs[v] for t in sig[(v, y)].elements()).items())))
        for v in range(g.n)
    ]
    # BFS order keeps the constraint checks local.
    order, seen = [], set()
    for s in range(g.n):
        if s in seen:
            continue
        seen.add(s)
        queue = [s]
        while queue:
            x = queue.pop(0)
            order.append(x)
            for y in sorted(nbrs[x]):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    phi = [-1] * g.n
    used = [False] * g.n
    empty: Counter = Counter()

    def rec(k: int):
        if k == len(order):
            yield list(phi)
            return
        x = order[k]
        for cand in range(g.n):
            if used[cand] or inv[cand] != inv[x]:
                continue
            ok = True
            for j in range(k):
                y = order[j]
                if sig.get((x, y), empty) != sig.get((cand, phi[y]), empty):
                    ok = False
                    break
            if not ok:
                continue
            phi[x] = cand
            used[cand] = True
            yield from rec(k + 1)
            used[cand] = False
            phi[x] = -1

    yield from rec(0)


def _expansions(g: Multigraph, phi: list[int], bundle, free):
    """Per-group choices of half-edge bijections compatible with ``phi``."""
    groups = []  # list of (source list, target list, kind)
    for (x, y), d in bundle.items():
        if x > y:
            continue
        for t, items in d.items():
            groups.append((items, bundle[(phi[x], phi[y])][t], "bundle"))
    for x, d in free.items():
        for t, items in d.items():
            groups.append(([(e, 0) for e in items], [(e, 0) for e in free[phi[x]][t]], "free"))
    return groups


def iter_automorphisms(g: Multigraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> Iterator[tuple[int, ...]]:
    bundle, free, _, _ = _tables(g)
    n = g.n
    for phi in _vertex_maps(g, max_vertices):
        groups = _expansions(g, phi, bundle, free)
        for choice in product(*(permutations(tgt) for _, tgt, _ in groups)):
            img = list(phi) + [0] * (2 * g.m)
            for (src, _, _), tgt in zip(groups, choice):
                for (e, s), (f, t) in zip(src, tgt):
                    img[n + 2 * e + s] = n + 2 * f + t
                    img[n + 2 * e + (1 - s)] = n + 2 * f + (1 - t)
            yield tuple(img)


def brute_force_aut(g: Multigraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> list[tuple[int, ...]]:
    """All automorphisms of ``g`` as permutations of vertices ++ half-edges."""
    return list(iter_automorphisms(g, max_vertices))


def brute_force_count(g: Multigraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> int:
    """|Aut(g)| without materializing the bundle permutations."""
    bundle, free, _, _ = _tables(g)
    total = 0
    for phi in _vertex_maps(g, max_vertices):
        total += prod(factorial(len(src)) for src, _, _ in _expansions(g, phi, bundle, free))
    return total


def is_automorphism(g: Multigraph, perm) -> bool:
    """Replay ``perm`` (sequence or dict over the combined domain) on ``g``."""
    n = g.n
    size = n + 2 * g.m
    img = perm if not isinstance(perm, dict) else [perm.get(i, i) for i in range(size)]
    if len(img) != size or sorted(img) != list(range(size)):
        return False
    if any(not 0 <= img[v] < n for v in range(n)):
        return False
    for v in range(n):
        if g.vertex_color[v] != g.vertex_color[img[v]]:
            return False
    for e, ed in enumerate(g.edges):
        h0, h1 = img[n + 2 * e] - n, img[n + 2 * e + 1] - n
        if h0 < 0 or h1 < 0 or h0 >> 1 != h1 >> 1:
            return False
        f = h0 >> 1
        fd = g.edges[f]
        if fd.color != ed.color:
            return False
        if g.half_vertex(h0) != img[ed.a]:
            return False
        w = g.half_vertex(h1)
        if (ed.b is None) != (w is None) or (ed.b is not None and w != img[ed.b]):
            return False
        if (ed.tail is None) != (fd.tail is None):
            return False
        if ed.tail is not None and (h0 & 1 if ed.tail == 0 else h1 & 1) != fd.tail:
            return False
    return True
