"""Deterministic Schreier-Sims for permutation groups on small domains.

Permutations are image tuples; sparse dicts (missing points fixed) are
accepted wherever a permutation is expected.  Products read left to right:
``mul(a, b)`` applies ``a`` first.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence, Union

Perm = tuple[int, ...]
PermLike = Union[Sequence[int], Mapping[int, int]]


def as_perm(p: PermLike, degree: int) -> Perm:
    if isinstance(p, Mapping):
        img = list(range(degree))
        for x, y in p.items():
            img[x] = y
        return tuple(img)
    if len(p) != degree:
        raise ValueError(f"permutation of length {len(p)} on a domain of {degree} points")
    return tuple(p)


def mul(a: Perm, b: Perm) -> Perm:
    return tuple(b[x] for x in a)


def inverse(a: Perm) -> Perm:
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(len(p)))


class StabilizerChain:
    """Base, strong generators per level and explicit transversals."""

    def __init__(self, generators: Iterable[PermLike], degree: int):
        self.degree = degree
        self.identity: Perm = tuple(range(degree))
        gens = []
        for g in generators:
            p = as_perm(g, degree)
            if not is_permutation(p):
                raise ValueError("not a permutation")
            if p != self.identity and p not in gens:
                gens.append(p)
        self.base: list[int] = []
        self.strong: list[list[Perm]] = []
        self.trans: list[dict[int, Perm]] = []
        self.trans_inv: list[dict[int, Perm]] = []
        self._build(gens)

    # -- construction ---------------------------------------------------------
    def _moved(self, g: Perm) -> int:
        for x, y in enumerate(g):
            if x != y:
                return x
        raise ValueError("identity moves nothing")

    def _new_level(self, point: int) -> None:
        self.base.append(point)
        self.strong.append([])
        self.trans.append({point: self.identity})
        self.trans_inv.append({point: self.identity})

    def _orbit(self, i: int) -> None:
        b = self.base[i]
        tr = {b: self.identity}
        queue = [b]
        for x in queue:
            u = tr[x]
            for s in self.strong[i]:
                y = s[x]
                if y not in tr:
                    tr[y] = mul(u, s)
                    queue.append(y)
        self.trans[i] = tr
        self.trans_inv[i] = {x: inverse(u) for x, u in tr.items()}

    def _strip(self, g: Perm, start: int = 0) -> tuple[Perm, int]:
        for i in range(start, len(self.base)):
            x = g[self.base[i]]
            inv = self.trans_inv[i].get(x)
            if inv is None:
                return g, i
            g = mul(g, inv)
        return g, len(self.base)

    def _build(self, gens: list[Perm]) -> None:
        for g in gens:
            if all(g[b] == b for b in self.base):
                self._new_level(self._moved(g))
        for i in range(len(self.base)):
            self.strong[i] = [g for g in gens if all(g[b] == b for b in self.base[:i])]
            self._orbit(i)
        i = len(self.base) - 1
        while i >= 0:
            restart = False
            for x in list(self.trans[i]):
                u = self.trans[i][x]
                for s in self.strong[i]:
                    y = s[x]
                    h = mul(mul(u, s), self.trans_inv[i][y])
                    if h == self.identity:
                        continue
                    r, j = self._strip(h, i + 1)
                    if j < len(self.base) or r != self.identity:
                        if j == len(self.base):
                            self._new_level(self._moved(r))
                        for lev in range(i + 1, j + 1):
                            self.strong[lev].append(r)
                            self._orbit(lev)
                        i = j
                        restart = True
                        break
                if restart:
                    break
            if not restart:
                i -= 1

    # -- queries --------------------------------------------------------------
    def order(self) -> int:
        out = 1
        for tr in self.trans:
            out *= len(tr)
        return out

    def contains(self, p: PermLike) -> bool:
        g = as_perm(p, self.degree)
        if not is_permutation(g):
            return False
        r, j = self._strip(g)
        return j == len(self.base) and r == self.identity


def group_order(generators: Iterable[PermLike], degree: int | None = None) -> int:
    gens = list(generators)
    if degree is None:
        if not gens:
            return 1
        first = gens[0]
        if isinstance(first, Mapping):
            degree = 1 + max([max(max(g), max(g.values())) for g in gens if g] + [0])  # type: ignore[arg-type]
        else:
            degree = len(first)
    return StabilizerChain(gens, degree).order()


def is_member(chain: StabilizerChain, p: PermLike) -> bool:
    return chain.contains(p)
