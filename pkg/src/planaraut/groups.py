"""Group expressions: products of cyclic, dihedral, symmetric and spherical groups.

Text grammar::

    expr   := "1" | C(n) | D(n) | S(n) | A(4|5) | xC2(expr)
            | prod(expr, ...) | pow(expr, k) | wr(expr, S(n)|C(n))
            | sd(expr, expr[, act(gen; gen; ...)])
    gen    := coordinate images separated by spaces, "~" marks a twist

``D(n)`` is the dihedral group of order ``2n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial, prod
from typing import Union


class GroupSyntaxError(SyntaxError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


@dataclass(frozen=True)
class ActionDescriptor:
    """Per top-group generator: images of the normal factor coordinates and twist flags."""

    perms: tuple[tuple[int, ...], ...] = ()
    twists: tuple[tuple[bool, ...], ...] = ()

    def to_text(self) -> str:
        gens = []
        for p, t in zip(self.perms, self.twists):
            gens.append(" ".join(f"{x}~" if tw else str(x) for x, tw in zip(p, t)))
        return "act(" + "; ".join(gens) + ")"


@dataclass(frozen=True)
class Trivial:
    pass


@dataclass(frozen=True)
class Cyc:
    n: int


@dataclass(frozen=True)
class Dih:
    n: int


@dataclass(frozen=True)
class Sym:
    n: int


@dataclass(frozen=True)
class Alt:
    n: int


@dataclass(frozen=True)
class DirTimesC2:
    base: "GroupExpr"


@dataclass(frozen=True)
class Direct:
    factors: tuple["GroupExpr", ...] = ()

    def __init__(self, factors=()):
        object.__setattr__(self, "factors", tuple(factors))


@dataclass(frozen=True)
class Pow:
    base: "GroupExpr"
    k: int


@dataclass(frozen=True)
class Wreath:
    base: "GroupExpr"
    top: Union[Sym, Cyc]


@dataclass(frozen=True)
class Semidirect:
    normal: "GroupExpr"
    top: "GroupExpr"
    action: ActionDescriptor | None = field(default=None, compare=False)


GroupExpr = Union[Trivial, Cyc, Dih, Sym, Alt, DirTimesC2, Direct, Pow, Wreath, Semidirect]


def order(e: GroupExpr) -> int:
    if isinstance(e, Trivial):
        return 1
    if isinstance(e, Cyc):
        return e.n
    if isinstance(e, Dih):
        return 2 * e.n
    if isinstance(e, Sym):
        return factorial(e.n)
    if isinstance(e, Alt):
        return factorial(e.n) // 2
    if isinstance(e, DirTimesC2):
        return 2 * order(e.base)
    if isinstance(e, Direct):
        return prod(order(f) for f in e.factors)
    if isinstance(e, Pow):
        return order(e.base) ** e.k
    if isinstance(e, Wreath):
        return order(e.base) ** e.top.n * order(e.top)
    if isinstance(e, Semidirect):
        return order(e.normal) * order(e.top)
    raise TypeError(f"not a group expression: {e!r}")


def normalize(e: GroupExpr, split_d2: bool = False) -> GroupExpr:
    """Order-preserving rewrites toward a compact form."""
    if isinstance(e, (Cyc, Sym)) and e.n == 1:
        return Trivial()
    if isinstance(e, Dih):
        if e.n == 1:
            return Cyc(2)
        if e.n == 2 and split_d2:
            return Direct((Cyc(2), Cyc(2)))
        return e
    if isinstance(e, DirTimesC2):
        b = normalize(e.base, split_d2)
        return Cyc(2) if isinstance(b, Trivial) else DirTimesC2(b)
    if isinstance(e, Direct):
        fs = []
        for f in e.factors:
            f = normalize(f, split_d2)
            if isinstance(f, Trivial):
                continue
            fs.extend(f.factors if isinstance(f, Direct) else [f])
        if not fs:
            return Trivial()
        return fs[0] if len(fs) == 1 else Direct(fs)
    if isinstance(e, Pow):
        b = normalize(e.base, split_d2)
        if isinstance(b, Trivial) or e.k == 0:
            return Trivial()
        return b if e.k == 1 else Pow(b, e.k)
    if isinstance(e, Wreath):
        b = normalize(e.base, split_d2)
        if e.top.n == 1:
            return b
        if isinstance(b, Trivial):
            return e.top
        return Wreath(b, e.top)
    if isinstance(e, Semidirect):
        n = normalize(e.normal, split_d2)
        t = normalize(e.top, split_d2)
        if isinstance(t, Trivial):
            return n
        if isinstance(n, Trivial):
            return t
        return Semidirect(n, t, e.action)
    return e


def expr_isomorphic_order(lhs: GroupExpr, rhs: GroupExpr) -> bool:
    """Cheap necessary condition for isomorphism: equal orders."""
    return order(lhs) == order(rhs)


def node_types(e: GroupExpr) -> set[str]:
    """Names of all node types occurring in ``e``; wreath tops are tagged."""
    out = {type(e).__name__}
    if isinstance(e, Wreath):
        out.add(f"Wreath[{type(e.top).__name__}]")
    for child in _children(e):
        out |= node_types(child)
    return out


def _children(e: GroupExpr) -> list:
    if isinstance(e, DirTimesC2):
        return [e.base]
    if isinstance(e, Direct):
        return list(e.factors)
    if isinstance(e, Pow):
        return [e.base]
    if isinstance(e, Wreath):
        return [e.base]
    if isinstance(e, Semidirect):
        return [e.normal, e.top]
    return []


# ---------------------------------------------------------------------------
# text form


def to_text(e: GroupExpr, with_action: bool = True) -> str:
    if isinstance(e, Trivial):
        return "1"
    if isinstance(e, Cyc):
        return f"C({e.n})"
    if isinstance(e, Dih):
        return f"D({e.n})"
    if isinstance(e, Sym):
        return f"S({e.n})"
    if isinstance(e, Alt):
        return f"A({e.n})"
    if isinstance(e, DirTimesC2):
        return f"xC2({to_text(e.base, with_action)})"
    if isinstance(e, Direct):
        return "prod(" + ",".join(to_text(f, with_action) for f in e.factors) + ")"
    if isinstance(e, Pow):
        return f"pow({to_text(e.base, with_action)},{e.k})"
    if isinstance(e, Wreath):
        return f"wr({to_text(e.base, with_action)},{to_text(e.top)})"
    if isinstance(e, Semidirect):
        s = f"sd({to_text(e.normal, with_action)},{to_text(e.top, with_action)}"
        if with_action and e.action is not None:
            s += "," + e.action.to_text()
        return s + ")"
    raise TypeError(f"not a group expression: {e!r}")


print_expr = to_text


class _Parser:
    def __init__(self, text: str):
        self.s = text
        self.i = 0

    def ws(self):
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def expect(self, tok: str):
        self.ws()
        if not self.s.startswith(tok, self.i):
            raise GroupSyntaxError(f"expected {tok!r}", self.i)
        self.i += len(tok)

    def peek(self, tok: str) -> bool:
        self.ws()
        return self.s.startswith(tok, self.i)

    def integer(self) -> int:
        self.ws()
        j = self.i
        while self.i < len(self.s) and self.s[self.i].isdigit():
            self.i += 1
        if j == self.i:
            raise GroupSyntaxError("expected integer", j)
        return int(self.s[j:self.i])

    def expr(self) -> GroupExpr:
        self.ws()
        start = self.i
        if self.peek("1") and not self.s[self.i + 1:self.i + 2].isdigit():
            self.i += 1
            return Trivial()
        for name, ctor in (("xC2(", None), ("prod(", None), ("pow(", None), ("wr(", None), ("sd(", None)):
            if self.peek(name):
                self.i += len(name)
                return getattr(self, "_" + name[:-1].replace("xC2", "xc2"))()
        for letter, ctor in (("C(", Cyc), ("D(", Dih), ("S(", Sym), ("A(", Alt)):
            if self.peek(letter):
                self.i += 2
                n = self.integer()
                self.expect(")")
                if n < 1:
                    raise GroupSyntaxError("group parameter must be positive", start)
                if ctor is Alt and n not in (4, 5):
                    raise GroupSyntaxError("only A(4) and A(5) are supported", start)
                return ctor(n)
        raise GroupSyntaxError("expected a group expression", start)

    def _xc2(self):
        b = self.expr()
        self.expect(")")
        return DirTimesC2(b)

    def _prod(self):
        fs = []
        if self.peek(")"):
            self.i += 1
            return Trivial()  # empty product
        fs.append(self.expr())
        while self.peek(","):
            self.i += 1
            fs.append(self.expr())
        self.expect(")")
        return Direct(fs)

    def _pow(self):
        b = self.expr()
        self.expect(",")
        k = self.integer()
        self.expect(")")
        return Pow(b, k)

    def _wr(self):
        b = self.expr()
        self.expect(",")
        pos = self.i
        t = self.expr()
        if not isinstance(t, (Sym, Cyc)):
            raise GroupSyntaxError("wreath top must be S(n) or C(n)", pos)
        self.expect(")")
        return Wreath(b, t)

    def _sd(self):
        n = self.expr()
        self.expect(",")
        t = self.expr()
        act = None
        if self.peek(","):
            self.i += 1
            self.expect("act(")
            perms, twists = [], []
            j = self.s.find(")", self.i)
            if j < 0:
                raise GroupSyntaxError("unterminated action", self.i)
            body = self.s[self.i:j]
            for chunk in body.split(";"):
                toks = chunk.split()
                perms.append(tuple(int(x.rstrip("~")) for x in toks))
                twists.append(tuple(x.endswith("~") for x in toks))
            self.i = j + 1
            act = ActionDescriptor(tuple(perms), tuple(twists))
        self.expect(")")
        return Semidirect(n, t, act)


def parse(text: str) -> GroupExpr:
    p = _Parser(text)
    e = p.expr()
    p.ws()
    if p.i != len(text):
        raise GroupSyntaxError("trailing input", p.i)
    return e


# ---------------------------------------------------------------------------
# JSON mirror


def to_json(e: GroupExpr) -> dict:
    if isinstance(e, Trivial):
        return {"node": "Trivial"}
    if isinstance(e, (Cyc, Dih, Sym, Alt)):
        return {"node": type(e).__name__, "n": e.n}
    if isinstance(e, DirTimesC2):
        return {"node": "DirTimesC2", "base": to_json(e.base)}
    if isinstance(e, Direct):
        return {"node": "Direct", "factors": [to_json(f) for f in e.factors]}
    if isinstance(e, Pow):
        return {"node": "Pow", "base": to_json(e.base), "k": e.k}
    if isinstance(e, Wreath):
        return {"node": "Wreath", "base": to_json(e.base), "top": to_json(e.top)}
    if isinstance(e, Semidirect):
        d = {"node": "Semidirect", "normal": to_json(e.normal), "top": to_json(e.top)}
        if e.action is not None:
            d["action"] = {"perms": [list(p) for p in e.action.perms],
                           "twists": [list(t) for t in e.action.twists]}
        return d
    raise TypeError(f"not a group expression: {e!r}")


def from_json(d: dict) -> GroupExpr:
    node = d["node"]
    if node == "Trivial":
        return Trivial()
    simple = {"Cyc": Cyc, "Dih": Dih, "Sym": Sym, "Alt": Alt}
    if node in simple:
        return simple[node](d["n"])
    if node == "DirTimesC2":
        return DirTimesC2(from_json(d["base"]))
    if node == "Direct":
        return Direct([from_json(f) for f in d["factors"]])
    if node == "Pow":
        return Pow(from_json(d["base"]), d["k"])
    if node == "Wreath":
        return Wreath(from_json(d["base"]), from_json(d["top"]))  # type: ignore[arg-type]
    if node == "Semidirect":
        act = None
        if "action" in d:
            a = d["action"]
            act = ActionDescriptor(tuple(tuple(p) for p in a["perms"]), tuple(tuple(t) for t in a["twists"]))
        return Semidirect(from_json(d["normal"]), from_json(d["top"]), act)
    raise ValueError(f"unknown node {node!r}")
