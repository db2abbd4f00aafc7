"""Planarity testing, rotation systems and oriented angles."""

from __future__ import annotations

from collections import defaultdict
from typing import NamedTuple

import networkx as nx

from .graph import Multigraph


class NotPlanar(ValueError):
    pass


class Angle(NamedTuple):
    """Oriented angle: ``e`` and ``f`` are consecutive halves at ``v``."""

    v: int
    e: int
    f: int


def _simple_graph(g: Multigraph) -> nx.Graph:
    s = nx.Graph()
    s.add_nodes_from(range(g.n))
    for ed in g.edges:
        if ed.b is not None:
            s.add_edge(ed.a, ed.b)
    return s


def is_planar(g: Multigraph) -> bool:
    """Planarity of the underlying simple graph; parallel edges never matter."""
    ok, _ = nx.check_planarity(_simple_graph(g))
    return ok


class PlanarMap:
    """Rotation system of the non-pendant part of a connected planar multigraph.

    ``rot[v]`` is the clockwise cyclic order of the attached non-pendant
    halves at ``v``.  Pendant halves are kept aside in ``pendants`` so that
    they never take part in face tracing.
    """

    def __init__(self, g: Multigraph, rot: dict[int, tuple[int, ...]], pendants: dict[int, tuple[int, ...]]):
        self.underlying = g
        self.rot = rot
        self.pendants = pendants
        self._pos: dict[int, tuple[int, int]] = {}
        for v, r in rot.items():
            for i, h in enumerate(r):
                self._pos[h] = (v, i)

    # -- rotation helpers ---------------------------------------------------
    def succ(self, h: int) -> int:
        v, i = self._pos[h]
        r = self.rot[v]
        return r[(i + 1) % len(r)]

    def pred(self, h: int) -> int:
        v, i = self._pos[h]
        r = self.rot[v]
        return r[(i - 1) % len(r)]

    def vertex_of(self, h: int) -> int:
        return self._pos[h][0]

    def mirrored(self) -> "PlanarMap":
        return PlanarMap(self.underlying, {v: tuple(reversed(r)) for v, r in self.rot.items()}, self.pendants)

    # -- faces --------------------------------------------------------------
    def faces(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for h in self._pos:
            if h in seen:
                continue
            face, x = [], h
            while x not in seen:
                seen.add(x)
                face.append(x)
                x = self.succ(x ^ 1)
            out.append(face)
        return out

    def num_faces(self) -> int:
        if not self._pos:
            return 1
        return len(self.faces())

    def euler_characteristic(self) -> int:
        nv = sum(1 for v in self.rot if self.rot[v] or not self._pos)
        ne = len(self._pos) // 2
        return nv - ne + self.num_faces()

    # -- oriented angles ----------------------------------------------------
    def angles(self) -> list[Angle]:
        out = []
        for v, r in self.rot.items():
            d = len(r)
            if d < 2:
                continue
            for i in range(d):
                out.append(Angle(v, r[i], r[(i + 1) % d]))
                out.append(Angle(v, r[(i + 1) % d], r[i]))
        return sorted(set(out))

    def rho(self, a: Angle) -> Angle:
        return Angle(a.v, a.f, a.e)

    def tau(self, a: Angle) -> Angle:
        if self.succ(a.e) == a.f:
            return Angle(a.v, a.e, self.pred(a.e))
        return Angle(a.v, a.e, self.succ(a.e))

    def lam(self, a: Angle) -> Angle:
        t = a.f ^ 1
        w = self.vertex_of(t)
        if self.succ(a.e) == a.f:
            return Angle(w, self.succ(t), t)
        return Angle(w, self.pred(t), t)

    def dump(self) -> str:
        return "".join(f"{v}: {' '.join(map(str, self.rot[v]))}\n" for v in sorted(self.rot))


def rho(m: PlanarMap, a: Angle) -> Angle:
    return m.rho(a)


def lam(m: PlanarMap, a: Angle) -> Angle:
    return m.lam(a)


def tau(m: PlanarMap, a: Angle) -> Angle:
    return m.tau(a)


def embed(g: Multigraph) -> PlanarMap:
    """Rotation system for a connected planar multigraph."""
    pend: dict[int, list[int]] = defaultdict(list)
    core_edges = []
    for i in range(g.m):
        if g.is_pendant(i):
            base = g.pendant_base(i)
            ed = g.edges[i]
            pend[base].append(2 * i if ed.a == base else 2 * i + 1)
        else:
            core_edges.append(i)
    s = nx.Graph()
    bundles: dict[tuple[int, int], list[int]] = defaultdict(list)
    core_vertices = set()
    for i in core_edges:
        ed = g.edges[i]
        s.add_edge(ed.a, ed.b)
        bundles[(min(ed.a, ed.b), max(ed.a, ed.b))].append(i)
        core_vertices.update((ed.a, ed.b))
    if not core_edges:
        core_vertices = {v for v in range(g.n) if g.degree(v) != 1 or g.n == 1}
        if not core_vertices and g.n:
            core_vertices = {0}
    ok, emb = nx.check_planarity(s)
    if not ok:
        raise NotPlanar("graph is not planar")
    rot: dict[int, tuple[int, ...]] = {}
    for v in sorted(core_vertices):
        seq: list[int] = []
        if v in s:
            for w in emb.neighbors_cw_order(v):
                key = (min(v, w), max(v, w))
                bundle = bundles[key]
                # parallel edges are laid side by side: forward at the smaller end
                ordered = bundle if v < w else list(reversed(bundle))
                for e in ordered:
                    seq.append(2 * e if g.edges[e].a == v else 2 * e + 1)
        rot[v] = tuple(seq)
    return PlanarMap(g, rot, {v: tuple(x) for v, x in pend.items()})
