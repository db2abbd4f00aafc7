"""The compiled kernels must agree with the pure-Python ones."""

import random

import pytest

from planaraut import _kernels, families
from planaraut.composer import analyze

from corpus import random_sample

core = pytest.importorskip("planaraut._core")


def test_backend_reported():
    from planaraut import BACKEND

    assert BACKEND in ("cython", "python")


def test_two_cut_partners_agree():
    rng = random.Random(1)
    for _ in range(200):
        n = rng.randint(3, 12)
        adj = [[] for _ in range(n)]
        for v in range(1, n):
            u = rng.randrange(v)
            adj[u].append(v)
            adj[v].append(u)
        for _ in range(rng.randrange(n)):
            u, v = rng.sample(range(n), 2)
            adj[u].append(v)
            adj[v].append(u)
        flat, off = [], [0]
        for row in adj:
            flat.extend(row)
            off.append(len(flat))
        removed = rng.randrange(n)
        elig = [rng.random() < 0.7 for _ in range(n)]
        assert core.two_cut_partners(n, flat, off, removed, elig) == \
            _kernels.two_cut_partners(n, flat, off, removed, elig)


def test_analysis_identical_under_both_backends(monkeypatch):
    from planaraut import decomposition, mapaut

    graphs = list(random_sample()[:60]) + [families.nested(40), families.dodecahedron()]
    fast = [analyze(g).to_json() for g in graphs]
    monkeypatch.setattr(mapaut, "bfs_code", _kernels.bfs_code)
    monkeypatch.setattr(decomposition, "two_cut_partners", _kernels.two_cut_partners)
    slow = [analyze(g).to_json() for g in graphs]
    assert fast == slow


def test_fallback_when_extension_missing():
    import subprocess
    import sys

    code = (
        "import sys; sys.modules['planaraut._core'] = None\n"
        "import planaraut; from planaraut import families\n"
        "print(planaraut.BACKEND, planaraut.analyze(families.cube()).order)\n"
    )
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=True).stdout
    assert out.split() == ["python", "48"]
