"""Command-line entry point: ``planaraut <command> ...``.

Exit codes: 0 success, 1 usage or input error, 2 non-planar input,
3 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from . import groups as ge
from .composer import AnalysisReport, analyze, analyze_primitive, _resolve, _slots
from .decomposition import ReductionTree, reduction_series
from .embedding import NotPlanar
from .graph import GraphError, Multigraph, dump_edge_list, parse_edge_list
from .oracle import TooLarge, brute_force_aut, is_automorphism
from .permgroup import StabilizerChain

EXIT_USAGE, EXIT_NOT_PLANAR, EXIT_MISMATCH = 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits with 2 by default; 2 is reserved
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_graph(path: str) -> Multigraph:
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return parse_edge_list(text)


def _parse_sizes(spec: str) -> list[int]:
    """``100..1600`` doubles from 100 up to 1600; ``100,300`` is taken literally."""
    if ".." in spec:
        lo, hi = (int(x) for x in spec.split(".."))
        out = []
        n = lo
        while n <= hi:
            out.append(n)
            n *= 2
        return out
    return [int(x) for x in spec.split(",")]


# ---------------------------------------------------------------------------
# reduce output


def reduce_text(tree: ReductionTree) -> str:
    lines = []
    for li, lvl in enumerate(tree.levels):
        g = lvl.graph
        lines.append(f"level {li}: {g.n} vertices, {g.m} edges, {len(lvl.atoms)} atoms")
        for a in lvl.atoms:
            bd = ",".join(str(lvl.vorig[v]) for v in a.boundary)
            sym = "symmetric" if a.symmetric else "asymmetric"
            lines.append(f"  {a.kind:<12} boundary=({bd}) color={a.color} {sym} fix_order={a.fix_order}")
    for r in tree.roots:
        s = r.view.structure
        lines.append(f"primitive: shape={s.shape} vertices={s.nv} order={r.aut.order}")
    return "\n".join(lines) + "\n"


def reduce_dot(tree: ReductionTree) -> str:
    out = ["digraph reduction {", "  node [shape=box];"]
    d = tree.depth

    def name(level, idx):
        return f"a{level}_{idx}"

    for li, lvl in enumerate(tree.levels):
        for a in lvl.atoms:
            out.append(f'  {name(li, a.index)} [label="{a.kind}\\ncolor {a.color}\\nlevel {li}"];')
            for e, _ in _slots(a.view):  # type: ignore[arg-type]
                src = _resolve(tree, li, e)
                if src is not None:
                    out.append(f"  {name(li, a.index)} -> {name(*src)};")
    for ri, r in enumerate(tree.roots):
        out.append(f'  root{ri} [label="primitive {r.view.structure.shape}\\norder {r.aut.order}", shape=ellipse];')
        for e, _ in _slots(r.view):
            src = _resolve(tree, d, e)
            if src is not None:
                out.append(f"  root{ri} -> {name(*src)};")
    out.append("}")
    return "\n".join(out) + "\n"


def color_table_json(tree: ReductionTree) -> dict:
    return {
        str(c): {"kind": info.kind, "level": info.level, "symmetric": info.symmetric,
                 "representative": info.representative}
        for c, info in sorted(tree.color_table.items())
    }


# ---------------------------------------------------------------------------
# commands


def _summary(rep: AnalysisReport) -> str:
    depth = rep.tree.depth if rep.tree is not None else 0
    return (f"group: {rep.group}\norder: {rep.order}\nprimitive: {', '.join(rep.spherical)}\n"
            f"reduction depth: {depth}\ngenerators: {len(rep.generators)}\n")


def cmd_analyze(args) -> int:
    g = _read_graph(args.graph)
    rep = analyze_primitive(g) if args.primitive_only else analyze(g)
    if args.json:
        json.dump(rep.to_json(), sys.stdout, sort_keys=True)
        sys.stdout.write("\n")
    else:
        sys.stdout.write(_summary(rep))
    return 0


def cmd_reduce(args) -> int:
    tree = reduction_series(_read_graph(args.graph))
    if args.format == "dot":
        sys.stdout.write(reduce_dot(tree))
    elif args.format == "colors":
        json.dump(color_table_json(tree), sys.stdout, indent=1, sort_keys=True)
        sys.stdout.write("\n")
    else:
        sys.stdout.write(reduce_text(tree))
    return 0


def cmd_realize(args) -> int:
    from .realizer import realize, realize_aut, realize_fix

    try:
        if args.seed_graph:
            r = realize_aut(args.seed_graph, [ge.parse(x) for x in args.expr])
        else:
            if len(args.expr) != 1:
                raise ValueError("exactly one expression is needed without --seed-graph")
            e = ge.parse(args.expr[0])
            r = realize_fix(e) if args.fix else realize(e)
    except SyntaxError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    g = r.pinned() if args.fix else r.graph
    sys.stdout.write(f"c predicted order {r.predicted_order}\n")
    sys.stdout.write(dump_edge_list(g))
    return 0


def cmd_oracle(args) -> int:
    g = _read_graph(args.graph)
    auts = brute_force_aut(g, args.max_oracle)
    out = {"count": len(auts), "automorphisms": [list(p) for p in auts]} if args.json else None
    if out is not None:
        json.dump(out, sys.stdout)
        sys.stdout.write("\n")
    else:
        sys.stdout.write(f"count: {len(auts)}\n")
    return 0


def cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    rep = analyze(g)
    gens = rep.generator_tuples()
    problems = []
    if not all(is_automorphism(rep.graph, p) for p in gens):
        problems.append("a synthesized generator is not an automorphism")
    chain = StabilizerChain(gens, rep.degree)
    if chain.order() != rep.order:
        problems.append(f"Schreier-Sims order {chain.order()} != expression order {rep.order}")
    oracle_note = "skipped"
    try:
        auts = brute_force_aut(rep.graph, args.max_oracle)
        oracle_note = str(len(auts))
        if len(auts) != rep.order:
            problems.append(f"oracle count {len(auts)} != expression order {rep.order}")
        elif not all(chain.contains(p) for p in auts):
            problems.append("an oracle automorphism is not generated")
    except TooLarge:
        pass
    sys.stdout.write(f"group: {rep.group}\norder: {rep.order}\nschreier-sims: {chain.order()}\noracle: {oracle_note}\n")
    for p in problems:
        sys.stdout.write(f"MISMATCH: {p}\n")
    return EXIT_MISMATCH if problems else 0


def cmd_bench(args) -> int:
    from . import families
    from .mapaut import BACKEND

    if args.family != "nested":
        sys.stderr.write(f"error: unknown family {args.family!r}\n")
        return EXIT_USAGE
    sizes = _parse_sizes(args.n)
    sys.stdout.write(f"backend: {BACKEND}\n{'n':>6} {'vertices':>8} {'seconds':>9} {'ratio':>6}\n")
    prev = None
    for n in sizes:
        g = families.nested(n)
        best = None
        for _ in range(args.repeat):
            t0 = time.perf_counter()
            analyze(g)
            dt = time.perf_counter() - t0
            best = dt if best is None else min(best, dt)
        ratio = f"{best / prev:6.2f}" if prev else "     -"
        sys.stdout.write(f"{n:>6} {g.n:>8} {best:>9.3f} {ratio}\n")
        prev = best
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="planaraut", description="Automorphism groups of planar graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="automorphism group of a graph")
    a.add_argument("graph", help="edge-list file, or - for stdin")
    a.add_argument("--json", action="store_true", help="emit the full JSON report")
    a.add_argument("--primitive-only", action="store_true", help="skip reduction; input must be primitive")
    a.add_argument("--format", choices=["edgelist"], default="edgelist")
    a.set_defaults(func=cmd_analyze)

    r = sub.add_parser("reduce", help="dump the reduction tree")
    r.add_argument("graph")
    r.add_argument("--format", choices=["text", "dot", "colors"], default="text")
    r.set_defaults(func=cmd_reduce)

    z = sub.add_parser("realize", help="build a graph for a group expression")
    z.add_argument("expr", nargs="+", help="expression, or one per edge orbit with --seed-graph")
    z.add_argument("--seed-graph", help="cube, prism:N, wheel:N, cycle:N, K2, ...")
    z.add_argument("--fix", action="store_true", help="emit the gadget with its root pinned by color")
    z.set_defaults(func=cmd_realize)

    o = sub.add_parser("oracle", help="brute-force automorphism count")
    o.add_argument("graph")
    o.add_argument("--max-oracle", type=int, default=10)
    o.add_argument("--json", action="store_true")
    o.set_defaults(func=cmd_oracle)

    v = sub.add_parser("verify", help="cross-check analyzer, Schreier-Sims and oracle")
    v.add_argument("graph")
    v.add_argument("--max-oracle", type=int, default=10)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="timing table over a generated family")
    b.add_argument("--family", default="nested")
    b.add_argument("--n", default="100..1600")
    b.add_argument("--seed", type=int, default=0, help="unused by the deterministic nested family")
    b.add_argument("--repeat", type=int, default=1)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotPlanar as exc:
        sys.stderr.write(f"error: not planar: {exc}\n")
        return EXIT_NOT_PLANAR
    except (GraphError, OSError, ValueError, TooLarge) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
