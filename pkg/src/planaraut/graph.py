"""Half-edge multigraph model.

Every edge ``e`` owns the half-edges ``2*e`` (side 0) and ``2*e + 1`` (side 1).
Side 0 is always attached; side 1 is attached unless the edge is a pendant
edge with a free half.  Directed edges store which side is the tail.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

# Vertex colors compile to pendant edges in a namespace disjoint from edge colors.
RESERVED_COLOR_BIT = 1 << 30


class GraphError(ValueError):
    pass


class LoopRejected(GraphError):
    pass


class DuplicatePendantColorConflict(GraphError):
    pass


class EdgeListSyntaxError(GraphError):
    pass


@dataclass(frozen=True, slots=True)
class Edge:
    a: int
    b: int | None
    color: int = 0
    tail: int | None = None  # None: undirected; 0 or 1: side holding the tail

    @property
    def is_free(self) -> bool:
        return self.b is None

    @property
    def directed(self) -> bool:
        return self.tail is not None


class Multigraph:
    """Immutable half-edge multigraph on vertices ``0..n-1``."""

    __slots__ = ("n", "edges", "vertex_color", "__dict__")

    def __init__(self, n: int, edges: Sequence[Edge], vertex_color: Sequence[int] | None = None):
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(edges)
        vc = tuple(vertex_color) if vertex_color is not None else (0,) * n
        if len(vc) != n:
            raise GraphError("vertex_color length must equal n")
        self.vertex_color: tuple[int, ...] = vc
        for e in self.edges:
            if not 0 <= e.a < n or (e.b is not None and not 0 <= e.b < n):
                raise GraphError(f"edge endpoint out of range: {e}")
            if e.a == e.b:
                raise LoopRejected(f"loop at vertex {e.a}")
            if e.tail is not None and e.tail not in (0, 1):
                raise GraphError("tail must be side 0 or 1")

    # -- basic counts -------------------------------------------------------
    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def num_halves(self) -> int:
        return 2 * len(self.edges)

    def half_vertex(self, h: int) -> int | None:
        e = self.edges[h >> 1]
        return e.a if h & 1 == 0 else e.b

    def other_vertex(self, h: int) -> int | None:
        return self.half_vertex(h ^ 1)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Attached half-edges per vertex, in increasing half id order."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, e in enumerate(self.edges):
            inc[e.a].append(2 * i)
            if e.b is not None:
                inc[e.b].append(2 * i + 1)
        return tuple(tuple(x) for x in inc)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(x) for x in self.incidence)

    def is_pendant(self, e: int) -> bool:
        """Free-half edges and edges ending in a degree-1 vertex (not a lone K2)."""
        ed = self.edges[e]
        if ed.b is None:
            return True
        da, db = self.degrees[ed.a], self.degrees[ed.b]
        return (da == 1) != (db == 1)

    def pendant_leaf(self, e: int) -> int | None:
        """The degree-1 end of a pendant edge, if it has one."""
        ed = self.edges[e]
        if ed.b is None:
            return None
        if self.degrees[ed.b] == 1 and self.degrees[ed.a] != 1:
            return ed.b
        if self.degrees[ed.a] == 1 and self.degrees[ed.b] != 1:
            return ed.a
        return None

    def pendant_base(self, e: int) -> int:
        leaf = self.pendant_leaf(e)
        ed = self.edges[e]
        if leaf is None:
            return ed.a
        return ed.a if leaf == ed.b else ed.b  # type: ignore[return-value]

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                x = stack.pop()
                comp.append(x)
                for h in self.incidence[x]:
                    y = self.other_vertex(h)
                    if y is not None and not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def induced_on(self, vertices: Sequence[int]) -> tuple["Multigraph", list[int], list[int]]:
        """Subgraph on ``vertices`` with every edge touching them.

        Returns the subgraph, the old vertex ids and the old edge ids.
        """
        idx = {v: i for i, v in enumerate(vertices)}
        new_edges, eids = [], []
        for i, e in enumerate(self.edges):
            if e.a in idx and (e.b is None or e.b in idx):
                new_edges.append(Edge(idx[e.a], None if e.b is None else idx[e.b], e.color, e.tail))
                eids.append(i)
        vc = [self.vertex_color[v] for v in vertices]
        return Multigraph(len(vertices), new_edges, vc), list(vertices), eids

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Multigraph)
            and self.n == other.n
            and self.edges == other.edges
            and self.vertex_color == other.vertex_color
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges, self.vertex_color))


# ---------------------------------------------------------------------------
# construction


def build_graph(
    edge_list: Iterable[tuple],
    vertex_colors: dict[int, int] | Iterable[tuple[int, int]] | None = None,
    vertices: Iterable[int] | None = None,
) -> Multigraph:
    """Build a multigraph from ``(u, v[, color[, directed]])`` tuples.

    ``v`` may be ``None`` for a pendant edge with a free half.  A true
    ``directed`` flag makes ``u`` the tail.  Vertex ids are arbitrary
    non-negative integers and get remapped to a dense range in sorted order.
    """
    raw = []
    ids: set[int] = set(vertices) if vertices is not None else set()
    for item in edge_list:
        u, v = item[0], item[1]
        color = item[2] if len(item) > 2 else 0
        directed = bool(item[3]) if len(item) > 3 else False
        if u == v:
            raise LoopRejected(f"loop at vertex {u}")
        if u is None:
            u, v = v, None
            if directed:
                raise GraphError("a free half cannot be the head of a directed edge")
        raw.append((u, v, color, directed))
        ids.add(u)
        if v is not None:
            ids.add(v)
    vc_pairs: list[tuple[int, int]] = []
    if vertex_colors is not None:
        vc_pairs = list(vertex_colors.items()) if isinstance(vertex_colors, dict) else list(vertex_colors)
    given: dict[int, int] = {}
    for v, c in vc_pairs:
        if v in given and given[v] != c:
            raise DuplicatePendantColorConflict(f"vertex {v} given colors {given[v]} and {c}")
        given[v] = c
        ids.add(v)
    order = sorted(ids)
    remap = {v: i for i, v in enumerate(order)}
    edges = [
        Edge(remap[u], None if v is None else remap[v], color, 0 if directed else None)
        for u, v, color, directed in raw
    ]
    vc = [0] * len(order)
    for v, c in given.items():
        vc[remap[v]] = c
    return Multigraph(len(order), edges, vc)


def normalize_vertex_colors(g: Multigraph) -> Multigraph:
    """Replace each nonzero vertex color by one pendant edge of a reserved color."""
    if not any(g.vertex_color):
        return g
    edges = list(g.edges)
    for v, c in enumerate(g.vertex_color):
        if c:
            edges.append(Edge(v, None, RESERVED_COLOR_BIT | c))
    return Multigraph(g.n, edges)


def degree(g: Multigraph, v: int) -> int:
    return g.degree(v)


def disjoint_union(graphs: Sequence[Multigraph]) -> Multigraph:
    edges, vc, off = [], [], 0
    for g in graphs:
        for e in g.edges:
            edges.append(Edge(e.a + off, None if e.b is None else e.b + off, e.color, e.tail))
        vc.extend(g.vertex_color)
        off += g.n
    return Multigraph(off, edges, vc)


# ---------------------------------------------------------------------------
# edge-list text format
#
#   p graph V E        header; V vertices 0..V-1, E edge lines follow
#   e u v [color]      undirected edge; v = "-" marks a free half
#   a u v [color]      directed edge with tail u
#   n v color          vertex color
#   c ... / # ...      comments


def parse_edge_list(text: str) -> Multigraph:
    n = None
    declared_m = None
    edges: list[Edge] = []
    vc: dict[int, int] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        tok = line.split()
        if not tok or tok[0] in ("c", "#") or tok[0].startswith("#"):
            continue
        try:
            if tok[0] == "p":
                if len(tok) != 4 or tok[1] != "graph":
                    raise EdgeListSyntaxError(f"line {lineno}: bad header")
                n, declared_m = int(tok[2]), int(tok[3])
            elif tok[0] in ("e", "a"):
                if len(tok) not in (3, 4):
                    raise EdgeListSyntaxError(f"line {lineno}: bad edge line")
                u = int(tok[1])
                v = None if tok[2] == "-" else int(tok[2])
                color = int(tok[3]) if len(tok) == 4 else 0
                edges.append(Edge(u, v, color, 0 if tok[0] == "a" else None))
            elif tok[0] == "n":
                if len(tok) != 3:
                    raise EdgeListSyntaxError(f"line {lineno}: bad vertex color line")
                vc[int(tok[1])] = int(tok[2])
            else:
                raise EdgeListSyntaxError(f"line {lineno}: unknown record {tok[0]!r}")
        except ValueError as exc:
            if isinstance(exc, GraphError):
                raise
            raise EdgeListSyntaxError(f"line {lineno}: {exc}") from None
    if n is None:
        raise EdgeListSyntaxError("missing 'p graph V E' header")
    if declared_m != len(edges):
        raise EdgeListSyntaxError(f"header declares {declared_m} edges, found {len(edges)}")
    colors = [0] * n
    for v, c in vc.items():
        if not 0 <= v < n:
            raise EdgeListSyntaxError(f"vertex {v} out of range")
        colors[v] = c
    return Multigraph(n, edges, colors)


def dump_edge_list(g: Multigraph) -> str:
    lines = [f"p graph {g.n} {g.m}"]
    for e in g.edges:
        tag = "e" if e.tail is None else "a"
        u, v = (e.a, e.b) if e.tail in (None, 0) else (e.b, e.a)
        vs = "-" if v is None else str(v)
        lines.append(f"{tag} {u} {vs} {e.color}" if e.color else f"{tag} {u} {vs}")
    for v, c in enumerate(g.vertex_color):
        if c:
            lines.append(f"n {v} {c}")
    return "\n".join(lines) + "\n"
