"""Planar graphs with prescribed automorphism groups.

Every gadget has a root vertex; its group of automorphisms fixing the root
realizes the requested expression.  Children hang from attachment vertices
through stem paths, and sibling stems get pairwise distinct lengths, so
unequal factors can never be swapped.  Gadget roots have degree 0 or at
least 2, which keeps the stem length readable from the graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import groups as ge
from .families import PLATONIC, cycle, prism, wheel
from .graph import Multigraph, build_graph


class UnsupportedShape(ValueError):
    pass


class OrbitCountMismatch(ValueError):
    pass


@dataclass
class _Builder:
    edges: list[tuple[int, int]] = field(default_factory=list)
    n: int = 0

    def vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def edge(self, a: int, b: int) -> None:
        self.edges.append((a, b))

    def path(self, a: int, b: int, inner: int) -> list[int]:
        """Join ``a`` and ``b`` by a path with ``inner`` new vertices; returns them."""
        vs = [self.vertex() for _ in range(inner)]
        chain = [a] + vs + [b]
        for x, y in zip(chain, chain[1:]):
            self.edge(x, y)
        return vs

    def hang(self, at: int, expr, tag: int) -> None:
        """Attach a gadget for ``expr`` at ``at`` through a stem of ``tag`` edges."""
        if _is_trivial(expr):
            prev = at
            for _ in range(tag):
                v = self.vertex()
                self.edge(prev, v)
                prev = v
            return
        root = self.vertex()
        prev = at
        for _ in range(tag - 1):
            v = self.vertex()
            self.edge(prev, v)
            prev = v
        self.edge(prev, root)
        self.build(root, expr)

    def hang_all(self, at: int, exprs: Sequence) -> None:
        tag = 1
        for e in exprs:
            if _is_trivial(e):
                continue
            self.hang(at, e, tag)
            tag += 1

    # -- constructions --------------------------------------------------------
    def build(self, root: int, e) -> None:
        if _is_trivial(e):
            return
        if isinstance(e, (ge.Direct, ge.Pow)):
            fs = list(e.factors) if isinstance(e, ge.Direct) else [e.base] * e.k
            fs = [f for f in fs if not _is_trivial(f)]
            if len(fs) == 1:
                self.build(root, fs[0])  # a lone factor must not leave a degree-1 root
            else:
                self.hang_all(root, fs)
            return
        if isinstance(e, ge.Sym):
            self._star(root, ge.Trivial(), e.n)
            return
        if isinstance(e, ge.Cyc):
            self._cyclic(root, ge.Trivial(), e.n)
            return
        if isinstance(e, ge.Wreath):
            if isinstance(e.top, ge.Sym) or e.top.n <= 2:
                self._star(root, e.base, e.top.n)
            else:
                self._cyclic(root, e.base, e.top.n)
            return
        if isinstance(e, ge.Dih):
            if e.n == 1:
                self._star(root, ge.Trivial(), 2)
            elif e.n == 2:
                self._d2(root, [ge.Trivial()] * 6)
            else:
                self._dihedral(root, e.n, [ge.Trivial()] * 5)
            return
        if isinstance(e, ge.Semidirect):
            self._semidirect(root, e)
            return
        raise UnsupportedShape(f"cannot realize {ge.to_text(e)}")

    def _star(self, root: int, base, n: int) -> None:
        if n == 1:
            self.build(root, base)
            return
        for _ in range(n):
            self.hang(root, base, 1)

    def _cyclic(self, hub: int, base, n: int) -> None:
        if n <= 2:
            self._star(hub, base, n)
            return
        rim = [self.vertex() for _ in range(n)]
        for i, r in enumerate(rim):
            self.edge(hub, r)
            x, _ = self.path(r, rim[(i + 1) % n], 2)
            leaf = self.vertex()  # chirality marker next to the start of each rim path
            self.edge(x, leaf)
            if not _is_trivial(base):
                self.hang(r, base, 1)

    def _dihedral(self, hub: int, n: int, psi: Sequence) -> None:
        """Wheel around ``hub``: free orbit of size 2n plus four orbits of size n."""
        p1, p2, p3, p4, p5 = psi
        rim = [self.vertex() for _ in range(n)]
        subdivide = not all(_is_trivial(x) for x in (p1, p3))
        for i, r in enumerate(rim):
            s = self.path(hub, r, 0 if _is_trivial(p4) and _is_trivial(p5) else 1)
            if s:
                self.hang_all(s[0], [p4, p5])
            if subdivide:
                a, m, c = self.path(r, rim[(i + 1) % n], 3)
                self.hang(a, p1, 1)
                self.hang(c, p1, 1)
                self.hang(m, p3, 1)
            else:
                self.edge(r, rim[(i + 1) % n])
            self.hang(r, p2, 1)

    def _d2(self, hub: int, psi: Sequence) -> None:
        """Four-spoke wheel with alternating rim path lengths: Klein four-group at ``hub``."""
        p1, p2, p3, p4, p5, p6 = psi
        rim = [self.vertex() for _ in range(4)]
        for i, r in enumerate(rim):
            self.edge(hub, r)
            nxt = rim[(i + 1) % 4]
            if i % 2 == 0:
                (m,) = self.path(r, nxt, 1)
                self.hang_all(m, [p2, p4])
            else:
                _, m, _ = self.path(r, nxt, 3)
                self.hang_all(m, [p3, p5])
            self.hang(r, p1, 1)
        self.hang_all(hub, [p6])

    def _reflection(self, hub: int, psi: Sequence) -> None:
        """Cycle through ``hub`` with a reflection fixing it."""
        p1, p2, p3 = psi
        x1, m, x2 = self.path(hub, hub, 3)
        self.hang(x1, p1, 1)
        self.hang(x2, p1, 1)
        self.hang(m, p3, 1)
        self.hang_all(hub, [p2])

    def _semidirect(self, root: int, e: ge.Semidirect) -> None:
        factors = _positional(e.normal)
        top = e.top
        if isinstance(top, ge.Cyc) and top.n == 2 and len(factors) == 3:
            (b1, k1), (b2, k2), (b3, k3) = factors
            if (k1, k2, k3) == (2, 1, 1):
                self._reflection(root, [b1, b2, b3])
                return
        if isinstance(top, ge.Dih):
            n = top.n
            ks = [k for _, k in factors]
            bs = [b for b, _ in factors]
            if n >= 3 and n % 2 == 1 and ks == [2 * n, n, n]:
                self._dihedral(root, n, bs + [ge.Trivial(), ge.Trivial()])
                return
            if n >= 4 and n % 2 == 0 and ks == [2 * n, n, n, n, n]:
                self._dihedral(root, n, bs)
                return
            if n == 2 and ks == [4, 2, 2, 2, 2, 1]:
                self._d2(root, bs)
                return
        raise UnsupportedShape(f"semidirect shape {ge.to_text(e)} is outside the supported operations")


def _positional(normal) -> list[tuple]:
    fs = normal.factors if isinstance(normal, ge.Direct) else (normal,)
    out = []
    for f in fs:
        if isinstance(f, ge.Pow):
            out.append((f.base, f.k))
        else:
            out.append((f, 1))
    return out


def _is_trivial(e) -> bool:
    return ge.order(e) == 1


# ---------------------------------------------------------------------------
# public API


@dataclass
class Realization:
    graph: Multigraph
    root: int
    predicted_order: int

    def pinned(self) -> Multigraph:
        """The graph with its root recolored, so every automorphism fixes the root."""
        vc = list(self.graph.vertex_color)
        vc[self.root] = 1 + max(vc)
        return Multigraph(self.graph.n, self.graph.edges, vc)


def realize_fix(expr) -> Realization:
    """A graph whose automorphisms fixing ``root`` realize ``expr``."""
    b = _Builder()
    root = b.vertex()
    b.build(root, expr)
    g = build_graph(b.edges, vertices=range(b.n))
    return Realization(g, root, ge.order(expr))


def realize(expr) -> Realization:
    """A graph whose whole automorphism group realizes ``expr``.

    The gadget root is pinned by a pendant path longer than any other
    pendant path of the gadget.
    """
    b = _Builder()
    root = b.vertex()
    b.build(root, expr)
    if b.n > 1:
        b.hang(root, ge.Trivial(), _max_stem(b) + 2)
    g = build_graph(b.edges, vertices=range(b.n))
    return Realization(g, root, ge.order(expr))


def _max_stem(b: _Builder) -> int:
    # longest run of degree-2 vertices; bounds every pendant path of the gadget
    deg = [0] * b.n
    for x, y in b.edges:
        deg[x] += 1
        deg[y] += 1
    adj: list[list[int]] = [[] for _ in range(b.n)]
    for x, y in b.edges:
        adj[x].append(y)
        adj[y].append(x)
    best = 0
    seen = set()
    for v in range(b.n):
        if deg[v] != 2 or v in seen:
            continue
        comp = [v]
        seen.add(v)
        for x in comp:
            for y in adj[x]:
                if deg[y] == 2 and y not in seen:
                    seen.add(y)
                    comp.append(y)
        best = max(best, len(comp))
    return best


SEEDS = ("tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron", "prism", "wheel", "K2", "cycle")


def seed_graph(spec: str) -> Multigraph:
    """``cube``, ``prism:5``, ``wheel:6``, ``cycle:7``, ``K2`` and the other solids."""
    name, _, arg = spec.partition(":")
    if name in PLATONIC:
        return PLATONIC[name]()
    if name == "K2":
        return build_graph([(0, 1)])
    k = int(arg) if arg else 0
    if name == "prism" and k >= 3:
        return prism(k)
    if name == "wheel" and k >= 3:
        return wheel(k)
    if name == "cycle" and k >= 3:
        return cycle(k)
    raise UnsupportedShape(f"unknown seed {spec!r}")


def seed_orbits(g: Multigraph):
    """Edge orbits of a seed graph under its full automorphism group."""
    from .composer import classify_edge_orbits
    from .mapaut import aut_map

    gens, _ = aut_map(g)
    return classify_edge_orbits(g, [a.perm for a in gens]), len(gens)


def realize_aut(seed: str, exprs: Sequence) -> Realization:
    """Replace each edge orbit of the seed by symmetric atoms realizing the matching expression."""
    g = seed_graph(seed)
    orbits, seed_order = seed_orbits(g)
    if len(exprs) != len(orbits):
        raise OrbitCountMismatch(f"seed {seed} has {len(orbits)} edge orbits, got {len(exprs)} expressions")
    b = _Builder(n=g.n)
    predicted = seed_order
    tag = 1
    for orb, e in zip(orbits, exprs):
        predicted *= ge.order(e) ** orb.size
        if _is_trivial(e):
            for x in orb.edges:
                b.edge(g.edges[x].a, g.edges[x].b)  # type: ignore[arg-type]
            continue
        for x in orb.edges:
            (m,) = b.path(g.edges[x].a, g.edges[x].b, 1)  # type: ignore[arg-type]
            if not _is_trivial(e):
                b.hang(m, e, tag)
        tag += 1
    if min(g.degrees) < 3:
        # low-degree seed vertices could be mistaken for gadget leaves; mark them
        mark = _max_stem(b) + 2
        for v in range(g.n):
            b.hang(v, ge.Trivial(), mark)
    out = build_graph(b.edges, vertices=range(b.n))
    return Realization(out, 0, predicted)


def aut_order_of_seed(seed: str) -> int:
    return seed_orbits(seed_graph(seed))[1]


__all__ = [
    "OrbitCountMismatch",
    "Realization",
    "SEEDS",
    "UnsupportedShape",
    "realize",
    "realize_aut",
    "realize_fix",
    "seed_graph",
    "seed_orbits",
]
