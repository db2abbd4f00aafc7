"""Compare the compiled and pure-Python kernels on the nested family.

    python bench/bench_core.py --n 200,400,800,1600

Each row times the full analysis with both backends; the kernels are
swapped in place, so the rest of the pipeline is identical.
"""

from __future__ import annotations

import argparse
import time

from planaraut import _kernels, decomposition, families, mapaut
from planaraut.composer import analyze


def _use(bfs, cuts) -> None:
    mapaut.bfs_code = bfs
    decomposition.two_cut_partners = cuts


def _time(g, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        analyze(g)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", default="200,400,800,1600")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    try:
        from planaraut import _core
    except ImportError:
        raise SystemExit("compiled kernels not built; run: pip install -e . --no-build-isolation")
    print(f"{'n':>6} {'python s':>9} {'cython s':>9} {'speedup':>8}")
    for n in (int(x) for x in args.n.split(",")):
        g = families.nested(n)
        _use(_kernels.bfs_code, _kernels.two_cut_partners)
        tp = _time(g, args.repeat)
        _use(_core.bfs_code, _core.two_cut_partners)
        tc = _time(g, args.repeat)
        print(f"{n:>6} {tp:>9.3f} {tc:>9.3f} {tp / tc:>8.2f}")


if __name__ == "__main__":
    main()
