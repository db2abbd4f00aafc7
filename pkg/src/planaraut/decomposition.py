"""Block trees, atoms and the reduction series.

Atoms are found relative to the central block or articulation of the
original graph; that center is pinned by its original vertex ids and
relocated at every level.  Degrees used for the non-triviality of 2-cuts
and dipoles ignore single pendant edges, so a cycle decorated with
pendants still counts as a cycle.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Sequence

from .embedding import NotPlanar, is_planar
from .graph import Edge, Multigraph, normalize_vertex_colors
from .mapaut import LocalAut, LocalPerm, View, analyze_local

try:
    from ._core import two_cut_partners
except ImportError:  # pragma: no cover
    from ._kernels import two_cut_partners


class DecompositionError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# blocks


def biconnected_blocks(g: Multigraph) -> list[list[int]]:
    """Edge sets of the blocks; each free pendant edge is its own block."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    out: list[list[int]] = []
    estack: list[int] = []
    t = 0
    inc = g.incidence
    for r in range(n):
        if disc[r] >= 0:
            continue
        disc[r] = low[r] = t
        t += 1
        stack = [(r, -1, iter(inc[r]))]
        while stack:
            x, pe, it = stack[-1]
            advanced = False
            for h in it:
                e = h >> 1
                if e == pe:
                    continue
                y = g.other_vertex(h)
                if y is None:
                    continue
                if disc[y] < 0:
                    estack.append(e)
                    disc[y] = low[y] = t
                    t += 1
                    stack.append((y, e, iter(inc[y])))
                    advanced = True
                    break
                if disc[y] < disc[x]:
                    estack.append(e)
                    if disc[y] < low[x]:
                        low[x] = disc[y]
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                if low[x] < low[p]:
                    low[p] = low[x]
                if low[x] >= disc[p]:
                    comp = []
                    while True:
                        f = estack.pop()
                        comp.append(f)
                        if f == pe:
                            break
                    out.append(sorted(comp))
    for e, ed in enumerate(g.edges):
        if ed.b is None:
            out.append([e])
    return out


@dataclass
class BlockTree:
    """Block/articulation incidence tree of one connected component.

    Nodes are ``("b", block index)`` or ``("a", vertex)``; ``parent`` points
    toward the center.
    """

    blocks: list[list[int]]
    block_vertices: list[frozenset[int]]
    articulations: list[int]
    center: tuple
    parent: dict = field(default_factory=dict)
    children: dict = field(default_factory=dict)


class _Level:
    """Block structure of a whole (possibly disconnected) level graph."""

    def __init__(self, g: Multigraph):
        self.g = g
        self.blocks = biconnected_blocks(g)
        self.block_vertices: list[frozenset[int]] = []
        self.vblocks: list[list[int]] = [[] for _ in range(g.n)]
        self.block_of_edge = [0] * g.m
        for i, es in enumerate(self.blocks):
            vs = set()
            for e in es:
                ed = g.edges[e]
                vs.add(ed.a)
                if ed.b is not None:
                    vs.add(ed.b)
                self.block_of_edge[e] = i
            self.block_vertices.append(frozenset(vs))
            for v in vs:
                self.vblocks[v].append(i)
        self.articulation = [len(b) >= 2 for b in self.vblocks]
        self.pendant = [g.is_pendant(e) for e in range(g.m)]
        self.dstar = [0] * g.n  # degree ignoring pendant edges
        for e, ed in enumerate(g.edges):
            if not self.pendant[e]:
                self.dstar[ed.a] += 1
                self.dstar[ed.b] += 1  # type: ignore[index]
        self.comp_of = [0] * g.n
        self.components = g.components()
        for ci, comp in enumerate(self.components):
            for v in comp:
                self.comp_of[v] = ci

    def is_pendant_block(self, b: int) -> bool:
        es = self.blocks[b]
        return len(es) == 1 and self.pendant[es[0]]

    def tree_adj(self, node):
        if node[0] == "b":
            return [("a", v) for v in self.block_vertices[node[1]] if self.articulation[v]]
        return [("b", b) for b in self.vblocks[node[1]]]

    def component_nodes(self, ci: int):
        comp = self.components[ci]
        blocks = sorted({b for v in comp for b in self.vblocks[v]})
        return blocks

    def longest_path_center(self, ci: int):
        blocks = self.component_nodes(ci)
        if not blocks:
            return ("a", self.components[ci][0])
        start = ("b", blocks[0])

        def bfs(src):
            dist = {src: 0}
            par = {src: None}
            q = deque([src])
            while q:
                x = q.popleft()
                for y in self.tree_adj(x):
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        par[y] = x
                        q.append(y)
            # farthest node, smallest key among ties for determinism
            far = max(dist.values())
            cand = min(k for k, d in dist.items() if d == far)
            return cand, par

        u, _ = bfs(start)
        w, par = bfs(u)
        path = [w]
        while par[path[-1]] is not None:
            path.append(par[path[-1]])
        if len(path) % 2 == 0:
            raise DecompositionError("block tree path of odd length")
        return path[len(path) // 2]

    def tree(self, ci: int, center) -> BlockTree:
        parent = {center: None}
        children: dict = defaultdict(list)
        q = deque([center])
        while q:
            x = q.popleft()
            for y in self.tree_adj(x):
                if y not in parent:
                    parent[y] = x
                    children[x].append(y)
                    q.append(y)
        blocks = self.component_nodes(ci)
        arts = sorted(v for v in self.components[ci] if self.articulation[v])
        return BlockTree(
            [self.blocks[b] for b in blocks],
            [self.block_vertices[b] for b in blocks],
            arts,
            center,
            parent,
            dict(children),
        )


def build_block_tree(g: Multigraph) -> BlockTree:
    """Block tree of a connected multigraph, rooted at its center."""
    lv = _Level(g)
    if len(lv.components) != 1:
        raise ValueError("block tree requires a connected graph")
    return lv.tree(0, lv.longest_path_center(0))


# ---------------------------------------------------------------------------
# 2-cuts


def _block_cuts(lv: _Level, b: int) -> list[tuple[int, int]]:
    vs = sorted(lv.block_vertices[b])
    if len(vs) < 4:
        return []
    g = lv.g
    idx = {v: i for i, v in enumerate(vs)}
    adj: list[list[int]] = [[] for _ in vs]
    for e in lv.blocks[b]:
        ed = g.edges[e]
        adj[idx[ed.a]].append(idx[ed.b])
        adj[idx[ed.b]].append(idx[ed.a])
    flat, off = [], [0]
    for a in adj:
        flat.extend(a)
        off.append(len(flat))
    eligible = [1 if lv.dstar[v] >= 3 else 0 for v in vs]
    cuts = set()
    for i, v in enumerate(vs):
        if not eligible[i]:
            continue
        for j in two_cut_partners(len(vs), flat, off, i, eligible):
            w = vs[j]
            cuts.add((min(v, w), max(v, w)))
    return sorted(cuts)


def nontrivial_two_cuts(g: Multigraph, block_edges: Sequence[int] | None = None) -> list[tuple[int, int]]:
    """Non-trivial 2-cuts of a block (the whole graph when it is 2-connected)."""
    lv = _Level(g)
    if block_edges is None:
        cand = [b for b in range(len(lv.blocks)) if not lv.is_pendant_block(b)]
        if len(cand) != 1:
            raise ValueError("graph is not a single block; pass block_edges")
        b = cand[0]
    else:
        b = lv.block_of_edge[block_edges[0]]
    return _block_cuts(lv, b)


# ---------------------------------------------------------------------------
# atoms


STAR, NONSTAR, PROPER, DIPOLE = "StarBlock", "NonStarBlock", "Proper", "Dipole"


@dataclass
class SymmetryType:
    symmetric: bool
    tau: LocalPerm | None = None

    def __str__(self) -> str:
        return "Symmetric" if self.symmetric else "Asymmetric"


@dataclass
class Atom:
    kind: str
    boundary: tuple[int, ...]
    vertices: list[int]  # core vertices, boundary included
    core_edges: list[int]
    pendant_edges: list[int]
    interior_vertices: frozenset[int]
    host_level: int = 0
    view: View | None = None
    aut: LocalAut | None = None
    color: int | None = None
    class_id: int | None = None
    index: int = -1

    @property
    def edges(self) -> list[int]:
        return self.core_edges + self.pendant_edges

    @property
    def code(self) -> tuple:
        return (self.kind, self.aut.code)  # type: ignore[union-attr]

    @property
    def b0(self) -> int:
        """Boundary vertex at canonical position 0."""
        return self.view.vertices[self.aut.canon[1][0]]  # type: ignore[union-attr]

    @property
    def b1(self) -> int:
        b = self.boundary
        return b[1] if b[0] == self.b0 else b[0]

    def start_vertex(self, k: int) -> int:
        s = self.view.structure
        w = self.aut.winners[k]
        lv = w[0] if s.shape in ("K1", "dipole") else s.hv[w[0]]
        return self.view.vertices[lv]

    def fix_keep(self, k: int) -> bool:
        return len(self.boundary) == 1 or self.start_vertex(k) == self.b0

    @property
    def symmetric(self) -> bool:
        if len(self.boundary) == 1:
            return True
        return any(not self.fix_keep(k) for k in range(len(self.aut.winners)))

    @property
    def fix_order(self) -> int:
        swaps = sum(1 for k in range(len(self.aut.winners)) if not self.fix_keep(k))
        return (len(self.aut.winners) - swaps) * self.view.structure.sym_factor()

    def symmetry(self) -> SymmetryType:
        if len(self.boundary) == 1:
            return SymmetryType(True, None)
        for k in range(len(self.aut.winners)):
            if self.fix_keep(k):
                continue
            p = self.aut.element(k)
            if p.compose(p).is_identity():
                return SymmetryType(True, p)
        if self.symmetric:
            raise DecompositionError("symmetric atom without an involutory boundary swap")
        return SymmetryType(False, None)


def _analyze_atom(g: Multigraph, atom: Atom) -> None:
    bset = set(atom.boundary)
    vkey = lambda v: ("B",) if v in bset else ("v", g.vertex_color[v])  # noqa: E731
    if atom.kind == PROPER:
        u, v = atom.boundary
        atom.view = View(g, atom.vertices, atom.core_edges, atom.pendant_edges, vkey, virtual=(u, v))
        iv = len(atom.core_edges)
        starts = atom.view.structure.all_starts(halves=[2 * iv, 2 * iv + 1])
    elif atom.kind == DIPOLE:
        atom.view = View(g, atom.vertices, atom.core_edges, [], vkey, force_dipole=True)
        starts = atom.view.structure.all_starts()
    else:
        atom.view = View(g, atom.vertices, atom.core_edges, atom.pendant_edges, vkey)
        starts = atom.view.structure.all_starts(vertices=[atom.view.local[atom.boundary[0]]])
    atom.aut = analyze_local(atom.view.structure, starts)


def _pendants_at(lv: _Level, v: int, exclude_block: int | None = None) -> tuple[list[int], bool]:
    """Pendant edges at ``v`` outside ``exclude_block`` and whether anything else hangs there."""
    g = lv.g
    pend, other = [], False
    for h in g.incidence[v]:
        e = h >> 1
        if lv.block_of_edge[e] == exclude_block:
            continue
        if lv.pendant[e] and g.pendant_base(e) == v:
            pend.append(e)
        else:
            other = True
    return pend, other


def _find_component_atoms(lv: _Level, ci: int, center) -> list[Atom]:
    g = lv.g
    tree = lv.tree(ci, center)
    atoms: list[Atom] = []
    dstar = lv.dstar
    comp_vertices = lv.components[ci]

    # dipoles
    bundles: dict[tuple[int, int], list[int]] = defaultdict(list)
    for v in comp_vertices:
        for h in g.incidence[v]:
            e = h >> 1
            ed = g.edges[e]
            if h & 1 == 0 and ed.b is not None and not lv.pendant[e]:
                bundles[(min(ed.a, ed.b), max(ed.a, ed.b))].append(e)
    dipole_pairs = set()
    for (u, v), es in sorted(bundles.items()):
        if len(es) >= 2 and dstar[u] >= 3 and dstar[v] >= 3:
            dipole_pairs.add((u, v))
            atoms.append(Atom(DIPOLE, (u, v), [u, v], sorted(es), [], frozenset()))
    dipole_vertices: dict[int, list[int]] = defaultdict(list)
    for u, v in dipole_pairs:
        dipole_vertices[u].append(v)
        dipole_vertices[v].append(u)

    # proper atoms, block by block
    cuts_of_block: dict[int, list[tuple[int, int]]] = {}
    for b in lv.component_nodes(ci):
        if lv.is_pendant_block(b):
            continue
        cuts = _block_cuts(lv, b)
        cuts_of_block[b] = cuts
        if not cuts:
            continue
        bverts = lv.block_vertices[b]
        par = tree.parent.get(("b", b))
        pv = par[1] if par is not None else None
        by_vertex: dict[int, list[int]] = defaultdict(list)
        for u, v in cuts:
            by_vertex[u].append(v)
            by_vertex[v].append(u)
        badj: dict[int, list[tuple[int, int]]] = defaultdict(list)
        for e in lv.blocks[b]:
            ed = g.edges[e]
            badj[ed.a].append((ed.b, e))  # type: ignore[arg-type]
            badj[ed.b].append((ed.a, e))  # type: ignore[index]
        for u, v in cuts:
            U = (u, v)
            seen = {u, v}
            for s in sorted(bverts):
                if s in seen:
                    continue
                comp = []
                seen.add(s)
                q = [s]
                while q:
                    x = q.pop()
                    comp.append(x)
                    for y, _ in badj[x]:
                        if y not in seen:
                            seen.add(y)
                            q.append(y)
                cset = set(comp)
                if pv is not None and pv in cset:
                    continue
                inner = cset | {u, v}
                ok = True
                for x in comp:
                    if any(y in inner for y in by_vertex.get(x, ())):
                        ok = False
                        break
                    if any(y in inner for y in dipole_vertices.get(x, ())):
                        ok = False
                        break
                if not ok:
                    continue
                pendants = []
                for x in comp:
                    p, other = _pendants_at(lv, x, b)
                    if other or len(p) > 1:
                        ok = False
                        break
                    pendants += p
                if not ok:
                    continue
                core = sorted({e for x in comp for _, e in badj[x]})
                leaves = {g.pendant_leaf(e) for e in pendants} - {None}
                atoms.append(Atom(PROPER, U, sorted(cset) + [u, v], core, sorted(pendants),
                                  frozenset(cset | leaves)))

    # block atoms
    for node, par in tree.parent.items():
        if par is None:
            continue
        if node[0] == "a":
            a = node[1]
            kids = tree.children.get(node, [])
            if len(kids) >= 2 and all(lv.is_pendant_block(k[1]) for k in kids):
                pend = sorted(lv.blocks[k[1]][0] for k in kids)
                leaves = {g.pendant_leaf(e) for e in pend} - {None}
                atoms.append(Atom(STAR, (a,), [a], [], pend, frozenset(leaves)))
            continue
        b = node[1]
        if lv.is_pendant_block(b):
            continue
        ok = True
        pend = []
        for kid in tree.children.get(node, []):
            gk = tree.children.get(kid, [])
            if len(gk) != 1 or not lv.is_pendant_block(gk[0][1]):
                ok = False
                break
            pend.append(lv.blocks[gk[0][1]][0])
        if not ok or cuts_of_block.get(b):
            continue
        bverts = lv.block_vertices[b]
        if any(u in bverts and v in bverts for u, v in dipole_pairs):
            continue
        p = par[1]
        leaves = {g.pendant_leaf(e) for e in pend} - {None}
        atoms.append(Atom(NONSTAR, (p,), sorted(bverts), sorted(lv.blocks[b]), sorted(pend),
                          frozenset((bverts - {p}) | leaves)))
    return atoms


def find_atoms(g: Multigraph, centers: dict[int, tuple] | None = None, host_level: int = 0) -> list[Atom]:
    """Atoms of ``g``; ``centers`` maps component index to its pinned center node."""
    lv = _Level(g)
    return _find_atoms(lv, centers, host_level)


def _find_atoms(lv: _Level, centers, host_level: int) -> list[Atom]:
    out: list[Atom] = []
    for ci in range(len(lv.components)):
        c = centers[ci] if centers is not None and ci in centers else lv.longest_path_center(ci)
        out.extend(_find_component_atoms(lv, ci, c))
    g = lv.g
    owner: dict = {}
    for i, a in enumerate(out):
        a.host_level = host_level
        a.index = i
        for x in a.interior_vertices:
            if x in owner:
                raise DecompositionError("atoms with overlapping interiors")
            owner[x] = i
        for e in a.edges:
            if ("e", e) in owner:
                raise DecompositionError("atoms sharing an edge")
            owner[("e", e)] = i
        _analyze_atom(g, a)
    return out


def canonical_code(atom: Atom) -> tuple:
    return atom.code


def symmetry_type(atom: Atom) -> SymmetryType:
    return atom.symmetry()


# ---------------------------------------------------------------------------
# reduction


@dataclass
class LevelGraph:
    graph: Multigraph
    vorig: list[int]  # vertex id in the original (normalized) graph
    eorig: list[tuple]  # ("edge", id one level down) or ("atom", atom index one level down)
    atoms: list[Atom] = field(default_factory=list)
    centers: dict[int, tuple] = field(default_factory=dict)


@dataclass
class ColorInfo:
    color: int
    code: tuple
    kind: str
    symmetric: bool
    level: int
    representative: int  # atom index at that level


@dataclass
class RootInfo:
    component: int
    view: View
    aut: LocalAut
    center: tuple


@dataclass
class ReductionTree:
    original: Multigraph  # normalized input
    levels: list[LevelGraph]
    color_table: dict[int, ColorInfo]
    roots: list[RootInfo]
    notes: list[str] = field(default_factory=list)

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    def atom_of_edge(self, level: int, e: int) -> Atom | None:
        """Atom one level down that the colored edge ``e`` of ``level`` replaced."""
        src = self.levels[level].eorig[e]
        if src[0] != "atom":
            return None
        return self.levels[level - 1].atoms[src[1]]


@dataclass
class StepResult:
    graph: Multigraph
    vorig: list[int]
    eorig: list[tuple]
    atom_edge: dict[int, int]  # atom index -> new edge id


def _assign_classes(atoms: list[Atom], next_color: int, level: int, table: dict[int, ColorInfo]) -> int:
    codes = sorted({a.code for a in atoms})
    color_of = {c: next_color + i for i, c in enumerate(codes)}
    rep: dict = {}
    for a in atoms:
        a.color = color_of[a.code]
        a.class_id = a.color
        if a.code not in rep:
            rep[a.code] = a.index
            table[a.color] = ColorInfo(a.color, a.code, a.kind, a.symmetric, level, a.index)
    return next_color + len(codes)


def reduce_step(g: Multigraph, atoms: list[Atom], next_color: int | None = None) -> StepResult:
    """Replace every atom by a colored edge (pendant for block atoms)."""
    if not atoms:
        raise ValueError("no atoms to reduce")
    if next_color is None or any(a.color is None for a in atoms):
        base = next_color if next_color is not None else 1 + max([e.color for e in g.edges] + [0])
        _assign_classes(atoms, base, atoms[0].host_level, {})
    drop_v = set()
    drop_e = set()
    for a in atoms:
        drop_v |= a.interior_vertices
        drop_e |= set(a.edges)
    keep_v = [v for v in range(g.n) if v not in drop_v]
    vid = {v: i for i, v in enumerate(keep_v)}
    edges, eorig = [], []
    for e, ed in enumerate(g.edges):
        if e in drop_e:
            continue
        edges.append(Edge(vid[ed.a], None if ed.b is None else vid[ed.b], ed.color, ed.tail))
        eorig.append(("edge", e))
    atom_edge = {}
    for a in atoms:
        atom_edge[a.index] = len(edges)
        if len(a.boundary) == 1:
            edges.append(Edge(vid[a.b0], None, a.color))  # type: ignore[arg-type]
        else:
            edges.append(Edge(vid[a.b0], vid[a.b1], a.color, None if a.symmetric else 0))  # type: ignore[arg-type]
        eorig.append(("atom", a.index))
    ng = Multigraph(len(keep_v), edges, [g.vertex_color[v] for v in keep_v])
    return StepResult(ng, keep_v, eorig, atom_edge)


def _center_descriptor(lv: _Level, node, vorig: list[int]):
    if node[0] == "a":
        return ("a", vorig[node[1]])
    return ("b", frozenset(vorig[v] for v in lv.block_vertices[node[1]]))


def _locate_center(lv: _Level, desc, vindex: dict[int, int]):
    if desc[0] == "a":
        return ("a", vindex[desc[1]])
    alive = [vindex[v] for v in desc[1] if v in vindex]
    if len(alive) == 1 and not lv.g.degree(alive[0]) == 0:
        # a one-vertex center block is a lone pendant block
        for b in lv.vblocks[alive[0]]:
            if lv.block_vertices[b] == frozenset(alive):
                return ("b", b)
    best, hits = None, 0
    counted: dict[int, int] = defaultdict(int)
    for v in alive:
        for b in lv.vblocks[v]:
            counted[b] += 1
    for b, c in sorted(counted.items()):
        if c > hits:
            best, hits = b, c
    if best is None or hits < min(2, len(alive)) or hits != len(alive):
        raise DecompositionError("central block migrated or vanished during reduction")
    return ("b", best)


def reduction_series(g0: Multigraph, check_planar: bool = True, max_levels: int | None = None) -> ReductionTree:
    """Reduce until every component is primitive."""
    g = normalize_vertex_colors(g0)
    if check_planar and not is_planar(g):
        raise NotPlanar("graph is not planar")
    levels = [LevelGraph(g, list(range(g.n)), [("edge", e) for e in range(g.m)])]
    lv = _Level(g)
    descs = {ci: _center_descriptor(lv, lv.longest_path_center(ci), levels[0].vorig) for ci in range(len(lv.components))}
    comp_of_orig = {v: ci for ci, comp in enumerate(lv.components) for v in comp}
    table: dict[int, ColorInfo] = {}
    next_color = 1 + max([e.color for e in g.edges] + [0])
    limit = max_levels if max_levels is not None else g.m + 2
    for level in range(limit + 1):
        cur = levels[-1]
        lv = _Level(cur.graph)
        vindex = {o: i for i, o in enumerate(cur.vorig)}
        centers = {}
        for ci, comp in enumerate(lv.components):
            oc = comp_of_orig[cur.vorig[comp[0]]]
            centers[ci] = _locate_center(lv, descs[oc], vindex)
        cur.centers = centers
        atoms = _find_atoms(lv, centers, level)
        cur.atoms = atoms
        if not atoms:
            roots = [_root_info(lv, ci, centers[ci]) for ci in range(len(lv.components))]
            return ReductionTree(g, levels, table, roots)
        next_color = _assign_classes(atoms, next_color, level, table)
        step = reduce_step(cur.graph, atoms, next_color)
        levels.append(LevelGraph(step.graph, [cur.vorig[v] for v in step.vorig], step.eorig))
    raise DecompositionError("reduction did not terminate")


def _root_info(lv: _Level, ci: int, center) -> RootInfo:
    g = lv.g
    comp = lv.components[ci]
    compset = set(comp)
    comp_edges = sorted({h >> 1 for v in comp for h in g.incidence[v]})
    if center[0] == "a":
        c = center[1]
        core_vertices, core = [c], []
    else:
        b = center[1]
        bverts = lv.block_vertices[b]
        es = lv.blocks[b]
        if len(es) == 1 and lv.pendant[es[0]]:
            core_vertices, core = [g.pendant_base(es[0])], []
        else:
            core_vertices, core = sorted(bverts), sorted(es)
    coreset = set(core)
    pend = [e for e in comp_edges if e not in coreset]
    for e in pend:
        if not lv.pendant[e] or g.pendant_base(e) not in core_vertices:
            raise DecompositionError("primitive graph has a non-pendant edge outside its center")
    leaves = {g.pendant_leaf(e) for e in pend} - {None}
    if set(core_vertices) | leaves != compset:
        raise DecompositionError("primitive graph has vertices outside its center")
    view = View(g, core_vertices, core, pend)
    return RootInfo(ci, view, analyze_local(view.structure), center)
