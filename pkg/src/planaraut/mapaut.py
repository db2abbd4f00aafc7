"""Automorphisms of essentially 3-connected colored planar graphs.

The workhorse is the breadth-first angle code: an automorphism of a map is
fixed by the image of one oriented angle, so running the same traversal
from two starting angles either yields identical codes (and then the
position-wise correspondence is an isomorphism) or proves that no map
isomorphism sends one angle to the other.  Degenerate shapes (a single
vertex, a parallel bundle between two vertices) are handled directly.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from math import factorial, gcd, prod
from typing import Iterable, Sequence

import networkx as nx

from .embedding import Angle, NotPlanar, PlanarMap
from .graph import Multigraph

try:  # compiled kernels are optional
    from ._core import bfs_code
    BACKEND = "cython"
except ImportError:  # pragma: no cover - exercised when the extension is absent
    from ._kernels import bfs_code
    BACKEND = "python"


class NotEssentially3Connected(ValueError):
    pass


class UnrecognizedGroup(RuntimeError):
    pass


_INTERN: dict = {}


def intern(key) -> int:
    """Dense integer for a hashable label; equal keys share one integer."""
    v = _INTERN.get(key)
    if v is None:
        v = len(_INTERN)
        _INTERN[key] = v
    return v


VIRTUAL = ("virtual",)


# ---------------------------------------------------------------------------
# local structures


@dataclass
class LocalPerm:
    """Automorphism/isomorphism of local structures.

    ``vmap`` maps local vertices, ``hmap`` core halves (edge ``i`` owns
    halves ``2i`` and ``2i+1``) and ``pmap`` pendant items.
    """

    vmap: list[int]
    hmap: list[int]
    pmap: list[int]
    reversing: bool = False

    def compose(self, other: "LocalPerm") -> "LocalPerm":
        """``self`` after ``other``."""
        return LocalPerm(
            [self.vmap[x] for x in other.vmap],
            [self.hmap[x] for x in other.hmap],
            [self.pmap[x] for x in other.pmap],
            self.reversing != other.reversing,
        )

    def is_identity(self) -> bool:
        return (
            all(i == x for i, x in enumerate(self.vmap))
            and all(i == x for i, x in enumerate(self.hmap))
            and all(i == x for i, x in enumerate(self.pmap))
        )

    def element_order(self) -> int:
        out = 1
        for arr in (self.vmap, self.hmap, self.pmap):
            seen = [False] * len(arr)
            for s in range(len(arr)):
                if seen[s]:
                    continue
                n, x = 0, s
                while not seen[x]:
                    seen[x] = True
                    x = arr[x]
                    n += 1
                out = out * n // gcd(out, n)
        return out


class LocalStructure:
    """Colored graph with pendant items folded into vertex labels.

    ``edges`` holds core edges ``(a, b, type seen from a, type seen from b)``;
    ``pendants`` holds ``(vertex, mark)`` items.  The core must be a single
    vertex, a parallel bundle, a cycle, ``K2`` or a 3-connected simple
    planar graph.
    """

    def __init__(
        self,
        nv: int,
        vkeys: Sequence,
        edges: Sequence[tuple],
        pendants: Sequence[tuple] = (),
        force_dipole: bool = False,
        rotation: list[list[int]] | None = None,
    ):
        self.nv = nv
        self.edges = list(edges)
        self.pendants = list(pendants)
        ne = len(self.edges)
        self.hv_other = [0] * (2 * ne)
        self.hv = [0] * (2 * ne)
        self.htype = [0] * (2 * ne)
        inc: list[list[int]] = [[] for _ in range(nv)]
        for i, (a, b, tab, tba) in enumerate(self.edges):
            if a == b:
                raise NotEssentially3Connected("loop in local structure")
            self.hv[2 * i], self.hv[2 * i + 1] = a, b
            self.hv_other[2 * i], self.hv_other[2 * i + 1] = b, a
            self.htype[2 * i], self.htype[2 * i + 1] = intern(tab), intern(tba)
            inc[a].append(2 * i)
            inc[b].append(2 * i + 1)
        self.pend_at: list[dict[int, list[int]]] = [defaultdict(list) for _ in range(nv)]
        pm = []
        for j, (v, mk) in enumerate(self.pendants):
            m = intern(mk)
            pm.append(m)
            self.pend_at[v][m].append(j)
        self.pmark = pm
        self.vlabel = [
            intern((intern(vkeys[v]), tuple(sorted(m for m, js in self.pend_at[v].items() for _ in js))))
            for v in range(nv)
        ]
        degs = [len(x) for x in inc]
        if nv == 1:
            self.shape = "K1"
        elif nv == 2 and (force_dipole or ne >= 3):
            self.shape = "dipole"
        elif nv >= 2 and all(d == 2 for d in degs) or (nv == 2 and ne == 1):
            self.shape = "cycle"
        elif nv >= 4 and all(d >= 3 for d in degs):
            self.shape = "3conn"
        else:
            raise NotEssentially3Connected(f"core degrees {sorted(degs)} on {nv} vertices")
        if self.shape != "K1" and self.shape != "dipole":
            if not _connected(nv, self.edges):
                raise NotEssentially3Connected("core is disconnected")
        if self.shape == "3conn":
            rot = rotation if rotation is not None else self._embed(inc)
        else:
            rot = inc
        self.rot = rot
        self.rot_off = [0]
        self.rot_flat: list[int] = []
        self.pos = [0] * (2 * ne)
        for v in range(nv):
            for i, h in enumerate(rot[v]):
                self.pos[h] = i
            self.rot_flat.extend(rot[v])
            self.rot_off.append(len(self.rot_flat))

    def _embed(self, inc: list[list[int]]) -> list[list[int]]:
        s = nx.Graph()
        nbr_half: dict[tuple[int, int], int] = {}
        for v in range(self.nv):
            for h in inc[v]:
                w = self.hv_other[h]
                if (v, w) in nbr_half:
                    raise NotEssentially3Connected("parallel edges in a 3-connected core")
                nbr_half[(v, w)] = h
                s.add_edge(v, w)
        ok, emb = nx.check_planarity(s)
        if not ok:
            raise NotPlanar("core is not planar")
        return [[nbr_half[(v, w)] for w in emb.neighbors_cw_order(v)] for v in range(self.nv)]

    # -- traversal ------------------------------------------------------------
    def all_starts(self, vertices: Iterable[int] | None = None, halves: Iterable[int] | None = None):
        """Starting (half, direction) pairs, optionally restricted."""
        if self.shape in ("K1", "dipole"):
            vs = range(self.nv) if vertices is None else vertices
            return [(v, 1) for v in vs]
        dirs = (1, -1) if self.shape == "3conn" else (1,)
        if halves is not None:
            hs = list(halves)
        else:
            vs = range(self.nv) if vertices is None else vertices
            hs = [h for v in vs for h in self.rot[v]]
        return [(h, d) for h in hs for d in dirs]

    def traverse(self, start, best=None):
        """Code, vertex order and half sequence from ``start``; ``None`` if worse than ``best``."""
        if self.shape == "K1":
            code = [self.vlabel[0]]
            if best is not None and code > best:
                return None
            return code, [0], []
        if self.shape == "dipole":
            b0 = start[0]
            b1 = 1 - b0
            hs = sorted((h for h in range(2 * len(self.edges)) if self.hv[h] == b0), key=lambda h: (self.htype[h], h))
            code = [self.vlabel[b0], self.vlabel[b1]] + [self.htype[h] for h in hs]
            if best is not None and code > best:
                return None
            return code, [b0, b1], hs
        h, d = start
        v0 = self.hv[h]
        return bfs_code(self.rot_flat, self.rot_off, self.pos, self.hv_other, self.vlabel, self.htype,
                        v0, self.pos[h], d, best)

    def perm_between(self, src: tuple, dst: tuple, reversing: bool = False, other: "LocalStructure | None" = None) -> LocalPerm:
        """Position-wise correspondence of two traversals (``dst`` may belong to ``other``)."""
        tgt = other if other is not None else self
        _, order1, hs1 = src
        _, order2, hs2 = dst
        vmap = [0] * self.nv
        for x, y in zip(order1, order2):
            vmap[x] = y
        hmap = [0] * (2 * len(self.edges))
        for x, y in zip(hs1, hs2):
            hmap[x] = y
            hmap[x ^ 1] = y ^ 1
        pmap = [0] * len(self.pendants)
        for x in range(self.nv):
            y = vmap[x]
            for m, js in self.pend_at[x].items():
                for j, k in zip(js, tgt.pend_at[y][m]):
                    pmap[j] = k
        return LocalPerm(vmap, hmap, pmap, reversing)

    def sym_generators(self) -> list[LocalPerm]:
        """Transpositions of interchangeable parallel edges and pendant items."""
        out = []
        ident_v = list(range(self.nv))
        ident_h = list(range(2 * len(self.edges)))
        ident_p = list(range(len(self.pendants)))
        if self.shape == "dipole":
            groups: dict[int, list[int]] = defaultdict(list)
            for h in range(0, 2 * len(self.edges)):
                if self.hv[h] == 0:
                    groups[self.htype[h]].append(h)
            for hs in groups.values():
                for x, y in zip(hs, hs[1:]):
                    hm = list(ident_h)
                    hm[x], hm[y] = y, x
                    hm[x ^ 1], hm[y ^ 1] = y ^ 1, x ^ 1
                    out.append(LocalPerm(list(ident_v), hm, list(ident_p)))
        for v in range(self.nv):
            for js in self.pend_at[v].values():
                for x, y in zip(js, js[1:]):
                    pm = list(ident_p)
                    pm[x], pm[y] = y, x
                    out.append(LocalPerm(list(ident_v), list(ident_h), pm))
        return out

    def sym_factor(self) -> int:
        f = 1
        if self.shape == "dipole":
            c = Counter(self.htype[h] for h in range(2 * len(self.edges)) if self.hv[h] == 0)
            f *= prod(factorial(k) for k in c.values())
        for v in range(self.nv):
            f *= prod(factorial(len(js)) for js in self.pend_at[v].values())
        return f


def _connected(nv: int, edges) -> bool:
    adj = [[] for _ in range(nv)]
    for a, b, *_ in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == nv


@dataclass
class LocalAut:
    """Canonical data of a local structure under a set of admissible starts."""

    structure: LocalStructure
    code: tuple
    winners: list
    canon: tuple  # traversal of winners[0]
    order: int

    def element(self, k: int) -> LocalPerm:
        s = self.structure
        w = self.winners[k]
        t = s.traverse(w)
        rev = s.shape == "3conn" and w[1] != self.winners[0][1]
        return s.perm_between(self.canon, t, rev)

    def elements(self):
        for k in range(len(self.winners)):
            yield self.element(k)

    def iso_to(self, other: "LocalAut") -> LocalPerm:
        if self.code != other.code:
            raise ValueError("structures are not isomorphic")
        return self.structure.perm_between(self.canon, other.canon, False, other.structure)

    def reduced_generators(self, keep=None) -> list[LocalPerm]:
        """Small generating set, chosen greedily among admissible elements.

        ``keep`` filters the winners (by index) that belong to the subgroup.
        """
        s = self.structure
        idx = [k for k in range(len(self.winners)) if keep is None or keep(k)]
        gens: list[LocalPerm] = []
        if s.shape in ("K1", "dipole"):
            gens = [self.element(k) for k in idx if k != 0]
        else:
            key_of = {w: k for k, w in enumerate(self.winners)}
            w0 = self.winners[0]
            closure = {w0}
            for k in idx:
                w = self.winners[k]
                if w in closure:
                    continue
                g = self.element(k)
                gens.append(g)
                # orbit of the canonical start under the chosen generators
                frontier = list(closure)
                while frontier:
                    nxt = []
                    for (h, d) in frontier:
                        for gg in gens:
                            img = (gg.hmap[h], -d if gg.reversing else d)
                            if img not in closure and img in key_of:
                                closure.add(img)
                                nxt.append(img)
                    frontier = nxt
        return gens + s.sym_generators()


def analyze_local(s: LocalStructure, starts=None) -> LocalAut:
    """Minimal traversal code over ``starts`` and all starts achieving it."""
    if starts is None:
        starts = s.all_starts()
    best = None
    winners: list = []
    canon = None
    for st in starts:
        res = s.traverse(st, best)
        if res is None:
            continue
        code = res[0]
        if best is None or code < best:
            best, winners, canon = code, [st], res
        else:
            winners.append(st)
    if canon is None:
        raise ValueError("no admissible start")
    code = (s.shape, s.nv, len(s.edges), len(s.pendants), tuple(best))
    return LocalAut(s, code, winners, canon, len(winners) * s.sym_factor())


# ---------------------------------------------------------------------------
# spherical groups


@dataclass(frozen=True)
class SphericalGroupId:
    name: str  # C, D, CxC2, DxC2, A4, S4, A5, A4xC2, S4xC2, A5xC2
    n: int = 0

    @property
    def order(self) -> int:
        base = {"C": self.n, "D": 2 * self.n, "CxC2": 2 * self.n, "DxC2": 4 * self.n,
                "A4": 12, "S4": 24, "A5": 60, "A4xC2": 24, "S4xC2": 48, "A5xC2": 120}
        return base[self.name]

    def __str__(self) -> str:
        if self.name in ("C", "D"):
            return f"{self.name}_{self.n}"
        if self.name == "CxC2":
            return f"C_{self.n} x C_2"
        if self.name == "DxC2":
            return f"D_{self.n} x C_2"
        return self.name.replace("xC2", " x C_2").replace("A", "A_").replace("S", "S_")

    def to_expr(self):
        from . import groups as ge

        if self.name == "C":
            return ge.Cyc(self.n) if self.n > 1 else ge.Trivial()
        if self.name == "D":
            return ge.Dih(self.n)
        if self.name == "CxC2":
            return ge.DirTimesC2(ge.Cyc(self.n))
        if self.name == "DxC2":
            return ge.DirTimesC2(ge.Dih(self.n))
        base = {"A4": ge.Alt(4), "S4": ge.Sym(4), "A5": ge.Alt(5)}[self.name[:2]]
        return ge.DirTimesC2(base) if self.name.endswith("xC2") else base


@dataclass
class Census:
    orders: Counter = field(default_factory=Counter)
    reversing: int = 0


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def _cyclic_census(n: int) -> Counter:
    return Counter({d: _phi(d) for d in _divisors(n)})


def _dihedral_census(n: int) -> Counter:
    c = _cyclic_census(n)
    c[2] += n
    return c


def _times_c2(c: Counter) -> Counter:
    out = Counter(c)
    for d, k in c.items():
        out[d * 2 // gcd(d, 2)] += k
    return out


_POLY = {
    "A4": Counter({1: 1, 2: 3, 3: 8}),
    "S4": Counter({1: 1, 2: 9, 3: 8, 4: 6}),
    "A5": Counter({1: 1, 2: 15, 3: 20, 5: 24}),
}


def identify_spherical(order: int, census: Census | Counter) -> SphericalGroupId:
    """Name the abstract spherical group with the given element-order census."""
    orders = census.orders if isinstance(census, Census) else Counter(census)
    if sum(orders.values()) != order:
        raise UnrecognizedGroup(f"census size {sum(orders.values())} != order {order}")
    cands: list[SphericalGroupId] = [SphericalGroupId("C", order)]
    if order % 2 == 0:
        cands.append(SphericalGroupId("D", order // 2))
        cands.append(SphericalGroupId("CxC2", order // 2))
    if order % 4 == 0:
        cands.append(SphericalGroupId("DxC2", order // 4))
    for name, c in _POLY.items():
        if sum(c.values()) == order:
            cands.append(SphericalGroupId(name))
        if 2 * sum(c.values()) == order:
            cands.append(SphericalGroupId(name + "xC2"))
    for cand in cands:
        if _census_of(cand) == orders:
            return cand
    raise UnrecognizedGroup(f"order {order} with census {dict(orders)}")


def _census_of(g: SphericalGroupId) -> Counter:
    if g.name == "C":
        return _cyclic_census(g.n)
    if g.name == "D":
        return _dihedral_census(g.n)
    if g.name == "CxC2":
        return _times_c2(_cyclic_census(g.n))
    if g.name == "DxC2":
        return _times_c2(_dihedral_census(g.n))
    base = _POLY[g.name[:2]]
    return _times_c2(base) if g.name.endswith("xC2") else Counter(base)


def census_of(aut: LocalAut, keep=None) -> Census:
    c = Census()
    sym = aut.structure.sym_generators()
    if sym:
        raise UnrecognizedGroup("census requires a group without bundle permutations")
    for k in range(len(aut.winners)):
        if keep is not None and not keep(k):
            continue
        g = aut.element(k)
        c.orders[g.element_order()] += 1
        c.reversing += g.reversing
    return c


# ---------------------------------------------------------------------------
# views of multigraphs as local structures


def edge_type(g: Multigraph, e: int, side: int) -> tuple:
    ed = g.edges[e]
    if ed.tail is None:
        return ("e", ed.color, 0)
    return ("e", ed.color, 1 if ed.tail == side else 2)


class View:
    """A local structure tied to concrete vertices and edges of a multigraph."""

    def __init__(
        self,
        g: Multigraph,
        vertices: Sequence[int],
        core_edges: Sequence[int],
        pendant_edges: Sequence[int],
        vkey=None,
        virtual: tuple[int, int] | None = None,
        force_dipole: bool = False,
        rotation: dict[int, Sequence[int]] | None = None,
    ):
        self.g = g
        self.vertices = list(vertices)
        self.local = {v: i for i, v in enumerate(self.vertices)}
        self.core_edges = list(core_edges)
        self.pendant_edges = list(pendant_edges)
        vkey = vkey or (lambda v: ("v", g.vertex_color[v]))
        edges = []
        self.edge_ref: list[tuple[int, int] | None] = []
        for e in self.core_edges:
            ed = g.edges[e]
            edges.append((self.local[ed.a], self.local[ed.b], edge_type(g, e, 0), edge_type(g, e, 1)))
            self.edge_ref.append((e, 0))
        if virtual is not None:
            u, v = virtual
            edges.append((self.local[u], self.local[v], VIRTUAL, VIRTUAL))
            self.edge_ref.append(None)
        pend = []
        self.pend_ref: list[tuple[int, int, int | None]] = []  # (edge, attached side, leaf vertex)
        for e in self.pendant_edges:
            ed = g.edges[e]
            leaf = g.pendant_leaf(e)
            base = g.pendant_base(e)
            side = 0 if ed.a == base else 1
            mark = ("p", "leaf" if leaf is not None else "free", edge_type(g, e, side),
                    None if leaf is None else g.vertex_color[leaf])
            pend.append((self.local[base], mark))
            self.pend_ref.append((e, side, leaf))
        lrot = None
        if rotation is not None:
            half_local = {}
            for i, ref in enumerate(self.edge_ref):
                if ref is not None:
                    e = ref[0]
                    half_local[2 * e] = 2 * i
                    half_local[2 * e + 1] = 2 * i + 1
            lrot = [[half_local[h] for h in rotation[v]] for v in self.vertices]
        self.structure = LocalStructure(
            len(self.vertices), [vkey(v) for v in self.vertices], edges, pend, force_dipole, lrot
        )

    def local_half(self, h: int) -> int:
        e, side = h >> 1, h & 1
        i = self.core_edges.index(e)
        return 2 * i + side

    def to_graph_maps(self, p: LocalPerm, target: "View | None" = None):
        """Translate to ``(vertex map, edge map e -> (e', flip))`` on the multigraph."""
        t = target if target is not None else self
        vmap = {v: t.vertices[p.vmap[i]] for i, v in enumerate(self.vertices)}
        emap: dict[int, tuple[int, bool]] = {}
        for i, ref in enumerate(self.edge_ref):
            if ref is None:
                continue
            h = p.hmap[2 * i]
            tref = t.edge_ref[h >> 1]
            emap[ref[0]] = (tref[0], bool(h & 1))
        for j, (e, side, leaf) in enumerate(self.pend_ref):
            f, fside, fleaf = t.pend_ref[p.pmap[j]]
            emap[e] = (f, side != fside)
            if leaf is not None:
                vmap[leaf] = fleaf
        return vmap, emap


def maps_to_perm(g: Multigraph, vmap: dict, emap: dict, target: Multigraph | None = None) -> tuple[int, ...]:
    """Combined-domain permutation (vertices ++ halves) from vertex/edge maps."""
    n = g.n
    img = list(range(n + 2 * g.m))
    for v, w in vmap.items():
        img[v] = w
    for e, (f, flip) in emap.items():
        img[n + 2 * e] = n + 2 * f + int(flip)
        img[n + 2 * e + 1] = n + 2 * f + 1 - int(flip)
    return tuple(img)


def whole_view(g: Multigraph, pm: PlanarMap | None = None) -> View:
    """View of an entire connected multigraph (pendants folded into labels)."""
    pend = [e for e in range(g.m) if g.is_pendant(e)]
    core = [e for e in range(g.m) if not g.is_pendant(e)]
    leaves = {g.pendant_leaf(e) for e in pend} - {None}
    verts = [v for v in range(g.n) if v not in leaves]
    if not verts and g.n:
        verts = [0]
        leaves.discard(0)
        pend = [e for e in pend if g.pendant_leaf(e) != 0]
    rotation = None
    if pm is not None:
        rotation = {v: pm.rot[v] for v in verts}
    try:
        return View(g, verts, core, pend, rotation=rotation)
    except NotEssentially3Connected:
        raise
    except KeyError as exc:  # pragma: no cover - defensive
        raise NotEssentially3Connected(str(exc)) from None


# ---------------------------------------------------------------------------
# public operations on multigraphs


@dataclass
class MapAutomorphism:
    perm: tuple[int, ...]  # vertices ++ halves of the underlying multigraph
    reversing: bool

    @property
    def orientation(self) -> str:
        return "Reversing" if self.reversing else "Preserving"


def _angle_start(view: View, a: Angle) -> tuple[int, int]:
    s = view.structure
    h = view.local_half(a.e)
    f = view.local_half(a.f)
    i = s.pos[h]
    r = s.rot[s.hv[h]]
    d = 1 if r[(i + 1) % len(r)] == f else -1
    return h, d


def try_extend(pm: PlanarMap, a: Angle, b: Angle, mirrored: bool) -> MapAutomorphism | None:
    """The automorphism sending angle ``a`` to ``b`` (orientation chosen by ``mirrored``), if any."""
    g = pm.underlying
    view = whole_view(g, pm)
    s = view.structure
    sa = _angle_start(view, a)
    hb, db = _angle_start(view, b)
    want = -sa[1] if mirrored else sa[1]
    if db != want and len(pm.rot[b.v]) > 2:  # b's orientation must agree with ``mirrored``
        return None
    sb = (hb, want)
    ta = s.traverse(sa)
    tb = s.traverse(sb, ta[0])
    if tb is None or tb[0] != ta[0]:
        return None
    p = s.perm_between(ta, tb, mirrored)
    vmap, emap = view.to_graph_maps(p)
    return MapAutomorphism(maps_to_perm(g, vmap, emap), mirrored)


def _aut_of_view(view: View, starts=None):
    aut = analyze_local(view.structure, starts)
    g = view.g
    gens = []
    for k in range(len(aut.winners)):
        p = aut.element(k)
        vmap, emap = view.to_graph_maps(p)
        gens.append(MapAutomorphism(maps_to_perm(g, vmap, emap), p.reversing))
    for p in view.structure.sym_generators():
        vmap, emap = view.to_graph_maps(p)
        gens.append(MapAutomorphism(maps_to_perm(g, vmap, emap), False))
    return aut, gens


def aut_map(g: Multigraph) -> tuple[list[MapAutomorphism], SphericalGroupId]:
    """All extensions from one canonical angle, plus the spherical group they form."""
    view = whole_view(g)
    aut, gens = _aut_of_view(view)
    if view.structure.sym_generators():
        raise NotEssentially3Connected("repeated pendant marks at one vertex")
    return gens, identify_spherical(aut.order, census_of(aut))


def stabilizer(g: Multigraph, v: int) -> tuple[list[MapAutomorphism], SphericalGroupId]:
    """Automorphisms fixing vertex ``v`` (a cyclic or dihedral group)."""
    view = whole_view(g)
    s = view.structure
    if v not in view.local:
        raise ValueError("stabilizer of a pendant leaf is not supported")
    lv = view.local[v]
    aut, gens = _aut_of_view(view, s.all_starts(vertices=[lv]))
    return gens, identify_spherical(aut.order, census_of(aut))
