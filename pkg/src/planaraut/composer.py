"""Bottom-up composition of automorphism groups along the reduction tree.

Every atom gets a :class:`FixResult`: a group expression for the pointwise
stabilizer of its boundary inside its fully expanded subgraph, generators
as sparse permutations of the original graph, and (for symmetric atoms) an
involution swapping the boundary.  Expanded maps between atoms of one class
are routed through the class representative: ``sigma[X]`` sends the
representative's expansion onto ``X``'s, so all choices are coherent and
the identities needed for generator lifting hold by construction.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import groups as ge
from .decomposition import (
    Atom,
    DecompositionError,
    ReductionTree,
    reduction_series,
)
from .graph import Multigraph
from .mapaut import LocalAut, LocalPerm, View, census_of, identify_spherical, maps_to_perm

Sparse = dict[int, int]


class InternalOrbitMismatch(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# edge orbits


@dataclass
class EdgeOrbitClass:
    edges: list[int]
    kind: str  # "Fixed" or "Reflected"
    equivariance: int = 0

    @property
    def size(self) -> int:
        return len(self.edges)

    def __str__(self) -> str:
        return f"{self.kind}({self.size})"


def _img(p, x: int) -> int:
    if isinstance(p, dict):
        return p.get(x, x)
    return p[x]


def classify_edge_orbits(g: Multigraph, generators: Sequence) -> list[EdgeOrbitClass]:
    """Edge orbits of ``<generators>`` typed by their half-edge orbits.

    Generators act on the combined domain (vertices then halves).  Orbits of
    equal size, type and color are tested for equivariance by anchoring one
    half and propagating the forced bijection through the generators.
    """
    n, m = g.n, g.m
    parent = list(range(2 * m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in generators:
        for h in range(2 * m):
            a, b = find(h), find(_img(p, n + h) - n)
            if a != b:
                parent[max(a, b)] = min(a, b)
    half_orbit = [find(h) for h in range(2 * m)]
    by_edge_orbit: dict[int, list[int]] = defaultdict(list)
    eparent = list(range(m))
    # edges linked when their halves share an orbit
    rep_edge: dict[int, int] = {}
    for h in range(2 * m):
        r = half_orbit[h]
        e = h >> 1
        if r in rep_edge:
            a, b = rep_edge[r], e
            while eparent[a] != a:
                a = eparent[a]
            while eparent[b] != b:
                b = eparent[b]
            if a != b:
                eparent[max(a, b)] = min(a, b)
        else:
            rep_edge[r] = e
    for e in range(m):
        r = e
        while eparent[r] != r:
            r = eparent[r]
        by_edge_orbit[r].append(e)
    out = []
    for r in sorted(by_edge_orbit):
        es = by_edge_orbit[r]
        nhalf = len({half_orbit[h] for e in es for h in (2 * e, 2 * e + 1)})
        out.append(EdgeOrbitClass(es, "Reflected" if nhalf == 1 else "Fixed"))
    # equivariance classes
    cls = 0
    assigned: list[int | None] = [None] * len(out)
    for i, o in enumerate(out):
        if assigned[i] is not None:
            continue
        assigned[i] = cls
        for j in range(i + 1, len(out)):
            q = out[j]
            if assigned[j] is not None or q.size != o.size or q.kind != o.kind:
                continue
            if g.edges[o.edges[0]].color != g.edges[q.edges[0]].color:
                continue
            if _equivariant(g, generators, o, q):
                assigned[j] = cls
        cls += 1
    for o, c in zip(out, assigned):
        o.equivariance = c  # type: ignore[assignment]
    return out


def _equivariant(g: Multigraph, generators, o: EdgeOrbitClass, q: EdgeOrbitClass) -> bool:
    n = g.n
    h0 = 2 * o.edges[0]
    for cand in [2 * e + s for e in q.edges for s in (0, 1)]:
        phi = {h0: cand, h0 ^ 1: cand ^ 1}
        stack = [h0, h0 ^ 1]
        ok = True
        while stack and ok:
            x = stack.pop()
            for p in generators:
                gx = _img(p, n + x) - n
                gy = _img(p, n + phi[x]) - n
                for a, b in ((gx, gy), (gx ^ 1, gy ^ 1)):
                    have = phi.get(a)
                    if have is None:
                        phi[a] = b
                        stack.append(a)
                    elif have != b:
                        ok = False
                        break
                if not ok:
                    break
        if ok and len(set(phi.values())) == len(phi):
            return True
    return False


# ---------------------------------------------------------------------------
# results


@dataclass
class FixResult:
    atom: Atom | None
    expr: ge.GroupExpr
    order: int
    generators: list[Sparse] = field(default_factory=list)
    tau_star: Sparse | None = None

    @property
    def symmetric(self) -> bool:
        return self.tau_star is not None


@dataclass
class ComponentResult:
    root_vertices: list[int]
    expr: ge.GroupExpr
    order: int
    generators: list[Sparse]
    code: tuple


@dataclass
class AnalysisReport:
    graph: Multigraph
    tree: ReductionTree | None
    expr: ge.GroupExpr
    order: int
    generators: list[Sparse]
    fix: dict[tuple[int, int], FixResult] = field(default_factory=dict)
    components: list[ComponentResult] = field(default_factory=list)
    level_orders: list[int] = field(default_factory=list)
    spherical: list[str] = field(default_factory=list)

    @property
    def group(self) -> str:
        return ge.to_text(self.expr, with_action=False)

    @property
    def degree(self) -> int:
        return self.graph.n + 2 * self.graph.m

    def generator_tuples(self) -> list[tuple[int, ...]]:
        d = self.degree
        out = []
        for s in self.generators:
            img = list(range(d))
            for x, y in s.items():
                img[x] = y
            out.append(tuple(img))
        return out

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "group_tree": ge.to_json(self.expr),
            "order": str(self.order),
            "spherical": self.spherical,
            "domain": {"vertices": self.graph.n, "halves": 2 * self.graph.m},
            "generators": [list(p) for p in self.generator_tuples()],
            "tree": _tree_json(self),
            "orbits": _orbit_tables(self),
            "level_orders": [str(x) for x in self.level_orders],
        }


# ---------------------------------------------------------------------------
# the composer


def _slots(view: View) -> list[tuple[int, bool]]:
    """Graph edges of a view in slot order: core edges (virtual skipped), then pendants."""
    out = [(ref[0], False) for ref in view.edge_ref if ref is not None]
    out += [(e, True) for e, _, _ in view.pend_ref]
    return out


def _slot_action(view: View, p: LocalPerm) -> list[tuple[int, bool]]:
    """Image slot and flip for every slot under a local automorphism."""
    core_slot = {}
    k = 0
    for i, ref in enumerate(view.edge_ref):
        if ref is not None:
            core_slot[i] = k
            k += 1
    out = []
    for i, ref in enumerate(view.edge_ref):
        if ref is None:
            continue
        h = p.hmap[2 * i]
        out.append((core_slot[h >> 1], bool(h & 1)))
    for j in range(len(view.pend_ref)):
        out.append((k + p.pmap[j], False))
    return out


class Composer:
    def __init__(self, tree: ReductionTree):
        self.tree = tree
        self.g0 = tree.original
        self.n0 = self.g0.n
        levels = tree.levels
        # resolve each edge of each level to an original edge or an atom
        self.res: list[list[tuple]] = []
        for li, lvl in enumerate(levels):
            row = []
            for src in lvl.eorig:
                if li == 0:
                    row.append(("orig", src[1]))
                elif src[0] == "edge":
                    row.append(self.res[li - 1][src[1]])
                else:
                    row.append(("atom", li - 1, src[1]))
            self.res.append(row)
        self.rep: dict[int, tuple[int, int]] = {}
        for color, info in tree.color_table.items():
            self.rep[color] = (info.level, info.representative)
        self.sigma: dict[tuple[int, int], Sparse] = {}
        self.tau_rep: dict[int, Sparse] = {}
        self.fix: dict[tuple[int, int], FixResult] = {}
        self.spherical: dict[int, object] = {}  # id(LocalAut) -> identified group

    # -- expansions -----------------------------------------------------------
    def atom(self, level: int, idx: int) -> Atom:
        return self.tree.levels[level].atoms[idx]

    def _expand_edge(self, level: int, e: int, e2: int, flip: bool, out: Sparse) -> None:
        r1, r2 = self.res[level][e], self.res[level][e2]
        if r1[0] == "orig":
            if r2[0] != "orig":
                raise DecompositionError("edge map mixes original and atom edges")
            a, b = self.n0 + 2 * r1[1], self.n0 + 2 * r2[1]
            out[a] = b + flip
            out[a + 1] = b + 1 - flip
            return
        a_atom = self.atom(r1[1], r1[2])
        b_atom = self.atom(r2[1], r2[2])
        if a_atom.color != b_atom.color:
            raise DecompositionError("edge map mixes atom classes")
        sa = self.sigma[(r1[1], r1[2])]
        sb = self.sigma[(r2[1], r2[2])]
        if flip:
            tau = self.tau_rep[a_atom.color]  # type: ignore[index]
            for y, x in sa.items():
                out[x] = sb[tau.get(y, y)]
        else:
            for y, x in sa.items():
                out[x] = sb[y]

    def _lift(self, level: int, view: View, p: LocalPerm, target: View | None = None,
              interior_only: Iterable[int] | None = None) -> Sparse:
        """Expansion of a local map to the original graph's combined domain."""
        vmap, emap = view.to_graph_maps(p, target)
        vorig = self.tree.levels[level].vorig
        out: Sparse = {}
        skip = set(interior_only) if interior_only is not None else set()
        for v, w in vmap.items():
            if v in skip:
                continue
            out[vorig[v]] = vorig[w]
        for e, (f, flip) in emap.items():
            self._expand_edge(level, e, f, flip, out)
        return out

    def _prepare_atom(self, level: int, a: Atom) -> None:
        """Fill ``sigma`` for ``a`` and the representative involution."""
        color = a.color
        rl, ri = self.rep[color]  # type: ignore[index]
        r = self.atom(rl, ri)
        if (rl, ri) == (level, a.index):
            # identity on the representative's own expansion
            p = a.aut.iso_to(a.aut)  # type: ignore[union-attr]
            self.sigma[(level, a.index)] = self._lift(level, a.view, p, None, a.boundary)  # type: ignore[arg-type]
            sym = a.symmetry()
            if sym.tau is not None:
                self.tau_rep[color] = self._lift(level, a.view, sym.tau, None, a.boundary)  # type: ignore[arg-type,index]
            return
        p = r.aut.iso_to(a.aut)  # type: ignore[union-attr]
        self.sigma[(level, a.index)] = self._lift(level, r.view, p, a.view, r.boundary)  # type: ignore[arg-type]

    # -- groups acting on slots ----------------------------------------------
    def _slot_child(self, level: int, e: int) -> FixResult | None:
        r = self.res[level][e]
        if r[0] == "orig":
            return None
        return self.fix[(r[1], r[2])]

    def _compose(self, level: int, view: View, aut: LocalAut, keep, top_expr, kind: str):
        """Expression, slot orbits and lifted generators for a local group acting on slots."""
        slots = _slots(view)
        children = [self._slot_child(level, e) for e, _ in slots]
        gens = aut.reduced_generators(keep)
        actions = [_slot_action(view, p) for p in gens]
        # slot orbits
        parent = list(range(len(slots)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for act in actions:
            for i, (j, _) in enumerate(act):
                a, b = find(i), find(j)
                if a != b:
                    parent[max(a, b)] = min(a, b)
        orbits: dict[int, list[int]] = defaultdict(list)
        for i in range(len(slots)):
            orbits[find(i)].append(i)
        orbit_list = [orbits[k] for k in sorted(orbits)]
        lifted = [self._lift(level, view, p) for p in gens]
        child_gens: list[Sparse] = []
        for orb in orbit_list:
            c = children[orb[0]]
            if c is not None:
                child_gens.extend(c.generators)
        nontrivial = [orb for orb in orbit_list if children[orb[0]] is not None and children[orb[0]].order > 1]
        psi = {i: children[orb[0]].expr for orb in nontrivial for i in orb}  # type: ignore[union-attr]
        expr = self._expr(view, aut, keep, gens, actions, nontrivial, psi, top_expr, kind)
        return expr, lifted + child_gens

    def _expr(self, view, aut, keep, gens, actions, nontrivial, psi, top_expr, kind):
        s = view.structure
        if s.shape in ("K1", "dipole"):
            # only bundle/pendant permutations survive: one wreath per class
            if sum(1 for k in range(len(aut.winners)) if keep is None or keep(k)) != 1:
                raise InternalOrbitMismatch("two-vertex root with a vertex swap")
            factors = []
            for cls in self._parallel_classes(view):
                base = psi.get(cls[0], ge.Trivial())
                factors.append(ge.Wreath(base, ge.Sym(len(cls))) if len(cls) > 1 else base)
            return ge.normalize(ge.Direct(factors))
        if not nontrivial:
            return top_expr
        elems = [aut.element(k) for k in range(len(aut.winners)) if keep is None or keep(k)]
        eacts = [_slot_action(view, p) for p in elems]
        outside, inner = [], []
        for o in nontrivial:
            if len(o) == 1 and not any(act[o[0]][1] for act in eacts):
                outside.append(psi[o[0]])
            else:
                inner.append(o)
        if not inner:
            return ge.normalize(ge.Direct(outside + [top_expr]))
        k_order = len(elems)
        self_flip = any(act[i][0] == i and act[i][1] for act in eacts for o in inner for i in o)
        if len(inner) == 1 and not self_flip and not s.sym_generators():
            o = inner[0]
            faithful = len({tuple(act[i][0] for i in o) for act in eacts}) == k_order
            base = psi[o[0]]
            if faithful and k_order == len(o):
                if len(o) <= 2:
                    top = ge.Sym(len(o))
                elif isinstance(top_expr, ge.Cyc):
                    top = ge.Cyc(len(o))
                else:
                    top = None
                if top is not None:
                    return ge.normalize(ge.Direct(outside + [ge.Wreath(base, top)]))
            if faithful and isinstance(top_expr, ge.Sym) and top_expr.n == len(o):
                return ge.normalize(ge.Direct(outside + [ge.Wreath(base, ge.Sym(len(o)))]))
        coords = [i for o in inner for i in o]
        cidx = {i: k for k, i in enumerate(coords)}
        perms, twists = [], []
        for act in actions:
            perms.append(tuple(cidx[act[i][0]] for i in coords))
            twists.append(tuple(act[i][1] for i in coords))
        normal = ge.Direct([ge.Pow(psi[o[0]], len(o)) for o in inner])
        sd = ge.Semidirect(ge.normalize(normal), top_expr, ge.ActionDescriptor(tuple(perms), tuple(twists)))
        return ge.normalize(ge.Direct(outside + [sd]))

    def _parallel_classes(self, view: View) -> list[list[int]]:
        """Slots that the bundle/pendant transpositions permute, grouped."""
        s = view.structure
        gens = s.sym_generators()
        slots = _slots(view)
        parent = list(range(len(slots)))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        for p in gens:
            for i, (j, _) in enumerate(_slot_action(view, p)):
                a, b = find(i), find(j)
                if a != b:
                    parent[max(a, b)] = min(a, b)
        cl: dict[int, list[int]] = defaultdict(list)
        for i in range(len(slots)):
            cl[find(i)].append(i)
        return [cl[k] for k in sorted(cl)]

    def _local_top_expr(self, view: View, aut: LocalAut, keep, order: int, root_k2: bool = False):
        s = view.structure
        if order == 1:
            return ge.Trivial()
        if s.shape in ("K1", "dipole"):
            return ge.normalize(ge.Direct([ge.Sym(len(c)) for c in self._parallel_classes(view) if len(c) > 1]))
        if root_k2:
            return ge.Sym(2)
        syms = [ge.Sym(len(c)) for c in self._parallel_classes(view) if len(c) > 1]
        wcount = sum(1 for k in range(len(aut.winners)) if keep is None or keep(k))
        if wcount == 1:
            base: ge.GroupExpr = ge.Trivial()
        else:
            census = _census_without_sym(aut, keep)
            sid = identify_spherical(wcount, census)
            self.spherical[id(aut)] = sid
            base = sid.to_expr()
        return ge.normalize(ge.Direct([base] + syms))

    # -- atoms ----------------------------------------------------------------
    def fix_atom(self, level: int, a: Atom) -> FixResult:
        keep = a.fix_keep
        order = a.fix_order
        for e, _ in _slots(a.view):  # type: ignore[arg-type]
            c = self._slot_child(level, e)
            if c is not None:
                order *= c.order
        top = self._local_top_expr(a.view, a.aut, keep, a.fix_order)  # type: ignore[arg-type]
        expr, gens = self._compose(level, a.view, a.aut, keep, top, a.kind)  # type: ignore[arg-type]
        if ge.order(expr) != order:
            raise InternalOrbitMismatch(f"{a.kind} atom: expression order {ge.order(expr)} != {order}")
        tau = None
        if len(a.boundary) == 2 and a.symmetric:
            tau = self.tau_of(level, a)
        res = FixResult(a, expr, order, gens, tau)
        self.fix[(level, a.index)] = res
        return res

    def tau_of(self, level: int, a: Atom) -> Sparse:
        """Boundary-swapping involution of ``a``'s expansion, conjugated from the representative."""
        sa = self.sigma[(level, a.index)]
        tr = self.tau_rep[a.color]  # type: ignore[index]
        out = {}
        for y, x in sa.items():
            out[x] = sa[tr.get(y, y)]
        # boundary swap (outer vertices, not part of sigma)
        vorig = self.tree.levels[level].vorig
        u, v = a.boundary
        out[vorig[u]] = vorig[v]
        out[vorig[v]] = vorig[u]
        return out

    def run_atoms(self) -> None:
        for li, lvl in enumerate(self.tree.levels):
            for a in lvl.atoms:
                self._prepare_atom(li, a)
            for a in lvl.atoms:
                self.fix_atom(li, a)

    # -- roots ----------------------------------------------------------------
    def root(self, ri: int) -> ComponentResult:
        info = self.tree.roots[ri]
        d = self.tree.depth
        view, aut = info.view, info.aut
        s = view.structure
        order = aut.order
        for e, _ in _slots(view):
            c = self._slot_child(d, e)
            if c is not None:
                order *= c.order
        root_k2 = s.shape == "cycle" and s.nv == 2 and len(s.edges) == 1
        top = self._local_top_expr(view, aut, None, aut.order, root_k2)
        expr, gens = self._compose(d, view, aut, None, top, "root")
        if ge.order(expr) != order:
            raise InternalOrbitMismatch(f"root: expression order {ge.order(expr)} != {order}")
        vorig = self.tree.levels[d].vorig
        verts = sorted(vorig[v] for v in view.vertices)
        return ComponentResult(verts, expr, order, gens, (aut.code,))

    def swap(self, ri: int, rj: int) -> Sparse:
        """Involution exchanging two isomorphic components."""
        d = self.tree.depth
        a, b = self.tree.roots[ri], self.tree.roots[rj]
        fwd = self._lift(d, a.view, a.aut.iso_to(b.aut), b.view)
        out = dict(fwd)
        for x, y in fwd.items():
            out[y] = x
        return out


def _census_without_sym(aut: LocalAut, keep):

    from .mapaut import Census

    c = Census()
    for k in range(len(aut.winners)):
        if keep is not None and not keep(k):
            continue
        g = aut.element(k)
        g = LocalPerm(g.vmap, g.hmap, list(range(len(g.pmap))), g.reversing)
        c.orders[g.element_order()] += 1
        c.reversing += g.reversing
    return c


# ---------------------------------------------------------------------------
# public entry points


def jordan_disconnected(parts: Sequence[ComponentResult], swaps: dict[int, list[Sparse]] | None = None):
    """Direct product of wreath products over isomorphism classes of components."""
    groups_: dict[tuple, list[int]] = defaultdict(list)
    for i, p in enumerate(parts):
        groups_[p.code].append(i)
    factors = []
    gens: list[Sparse] = []
    for code in sorted(groups_, key=lambda c: groups_[c][0]):
        idx = groups_[code]
        rep = parts[idx[0]]
        gens.extend(rep.generators)
        factors.append(ge.Wreath(rep.expr, ge.Sym(len(idx))) if len(idx) > 1 else rep.expr)
        if swaps is not None:
            gens.extend(swaps.get(idx[0], []))
    return ge.normalize(ge.Direct(factors)), gens


def analyze_tree(tree: ReductionTree) -> AnalysisReport:
    comp = Composer(tree)
    comp.run_atoms()
    parts = [comp.root(i) for i in range(len(tree.roots))]
    swaps: dict[int, list[Sparse]] = defaultdict(list)
    by_code: dict[tuple, list[int]] = defaultdict(list)
    for i, p in enumerate(parts):
        by_code[p.code].append(i)
    for idx in by_code.values():
        for x, y in zip(idx, idx[1:]):
            swaps[idx[0]].append(comp.swap(x, y))
    if len(parts) == 1:
        expr, gens = parts[0].expr, parts[0].generators
    else:
        expr, gens = jordan_disconnected(parts, swaps)
    order = 1
    for idx in by_code.values():
        o = parts[idx[0]].order
        k = len(idx)
        f = 1
        for j in range(2, k + 1):
            f *= j
        order *= o ** k * f
    if ge.order(expr) != order:
        raise InternalOrbitMismatch(f"expression order {ge.order(expr)} != {order}")
    gens = [p for p in gens if any(x != y for x, y in p.items())]
    report = AnalysisReport(tree.original, tree, expr, order, gens, comp.fix, parts)
    report.level_orders = level_orders(tree, comp)
    report.spherical = [_spherical_name(r, comp) for r in tree.roots]
    return report


def _spherical_name(info, comp: Composer) -> str:
    aut = info.aut
    s = aut.structure
    if s.shape in ("K1", "dipole") or s.sym_generators():
        return f"order {aut.order}"
    if aut.order == 1:
        return "C_1"
    sid = comp.spherical.get(id(aut))
    return str(sid if sid is not None else identify_spherical(aut.order, census_of(aut)))


def level_orders(tree: ReductionTree, comp: Composer) -> list[int]:
    """|Aut(G_i)| for every level, from the root order and local Fix orders."""
    d = tree.depth
    top = 1
    by_code: dict[tuple, list] = defaultdict(list)
    for r in tree.roots:
        by_code[r.aut.code].append(r)
    # components isomorphic at the top level are isomorphic at every level
    for rs in by_code.values():
        k = len(rs)
        f = 1
        for j in range(2, k + 1):
            f *= j
        top *= rs[0].aut.order ** k * f
    out = [0] * (d + 1)
    out[d] = top
    for li in range(d - 1, -1, -1):
        prodfix = 1
        for a in tree.levels[li].atoms:
            prodfix *= a.fix_order
        out[li] = out[li + 1] * prodfix
    return out


def analyze(g: Multigraph, check_planar: bool = True) -> AnalysisReport:
    """Automorphism group of a planar multigraph, as an expression plus generators."""
    return analyze_tree(reduction_series(g, check_planar=check_planar))


def analyze_primitive(g: Multigraph) -> AnalysisReport:
    """Analyze ``g`` as a primitive graph, skipping the reduction."""
    from .decomposition import _Level, _root_info
    from .embedding import NotPlanar, is_planar
    from .graph import normalize_vertex_colors
    from .decomposition import LevelGraph

    g = normalize_vertex_colors(g)
    if not is_planar(g):
        raise NotPlanar("graph is not planar")
    lv = _Level(g)
    roots = [_root_info(lv, ci, lv.longest_path_center(ci)) for ci in range(len(lv.components))]
    tree = ReductionTree(g, [LevelGraph(g, list(range(g.n)), [("edge", e) for e in range(g.m)])], {}, roots)
    return analyze_tree(tree)


# ---------------------------------------------------------------------------
# report helpers


def _tree_json(rep: AnalysisReport) -> dict:
    tree = rep.tree
    if tree is None:
        return {}

    def atom_node(level: int, a: Atom) -> dict:
        fr = rep.fix[(level, a.index)]
        vorig = tree.levels[level].vorig
        kids = []
        for e, _ in _slots(a.view):  # type: ignore[arg-type]
            src = _resolve(tree, level, e)
            if src is not None:
                kids.append(atom_node(src[0], tree.levels[src[0]].atoms[src[1]]))
        return {
            "kind": a.kind,
            "level": level,
            "boundary": [vorig[v] for v in a.boundary],
            "color": a.color,
            "symmetric": a.symmetric,
            "fix": ge.to_text(fr.expr, with_action=False),
            "fix_order": str(fr.order),
            "children": kids,
        }

    roots = []
    d = tree.depth
    for r, part in zip(tree.roots, rep.components):
        kids = []
        for e, _ in _slots(r.view):
            src = _resolve(tree, d, e)
            if src is not None:
                kids.append(atom_node(src[0], tree.levels[src[0]].atoms[src[1]]))
        roots.append({
            "kind": "Primitive",
            "shape": r.view.structure.shape,
            "vertices": part.root_vertices,
            "group": ge.to_text(part.expr, with_action=False),
            "order": str(part.order),
            "children": kids,
        })
    return {"depth": d, "roots": roots}


def _resolve(tree: ReductionTree, level: int, e: int):
    while level > 0:
        src = tree.levels[level].eorig[e]
        if src[0] == "atom":
            return level - 1, src[1]
        e = src[1]
        level -= 1
    return None


def _orbit_tables(rep: AnalysisReport) -> list[dict]:
    tree = rep.tree
    if tree is None:
        return []
    out = []
    for li, lvl in enumerate(tree.levels):
        counts: dict[int, list[Atom]] = defaultdict(list)
        for a in lvl.atoms:
            counts[a.color].append(a)  # type: ignore[index]
        classes = [{"color": c, "kind": xs[0].kind, "count": len(xs), "symmetric": xs[0].symmetric,
                    "fix_order": str(rep.fix[(li, xs[0].index)].order)} for c, xs in sorted(counts.items())]
        out.append({"level": li, "atom_classes": classes})
    d = tree.depth
    g = tree.levels[d].graph
    gens = []
    for r in tree.roots:
        for p in r.aut.reduced_generators():
            vmap, emap = r.view.to_graph_maps(p)
            gens.append(maps_to_perm(g, vmap, emap))
    out.append({"level": d, "edge_orbits": [
        {"edges": o.edges, "type": o.kind, "size": o.size, "equivariance": o.equivariance}
        for o in classify_edge_orbits(g, gens)]})
    return out
