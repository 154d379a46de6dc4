"""A small ASCII language for objects and morphisms of the module category.

Grammar (``(x)`` binds tighter than ``.``; both are left-associative)::

    expr   := tens ("." tens)*
    tens   := atom ("(x)" atom)*
    atom   := "(" expr ")" | "1" | NAME
            | ("id"|"ev_l"|"coev_l"|"ev_r"|"coev_r"|"phi"|"dual") "(" expr ")"
            | "gamma" "(" expr "," expr ")"
            | ("ptr_r"|"ptr_l") "(" expr "," expr ")"

Whether a NAME or ``dual(...)`` denotes an object or a morphism is decided by
the environment during type checking.  Object types are modules; equality is
the structural equality of modules, so tensor factors are flattened and unit
factors disappear.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator

from .errors import MtraceError
from .pivotal import dual_morphism, duality, gamma, phi, ptr_l, ptr_r
from .repcat import Module, Morphism, dual, tensor, tensor_all, trivial

__all__ = [
    "DSLSyntaxError", "TypeCheckError", "Node", "Env", "parse", "parse_lines", "to_source",
    "typecheck", "evaluate", "evaluate_object",
]

PRIM_OBJ = ("id", "ev_l", "coev_l", "ev_r", "coev_r", "phi")
PRIM_TWO = ("gamma", "ptr_r", "ptr_l")
KEYWORDS = PRIM_OBJ + PRIM_TWO + ("dual",)


class DSLSyntaxError(MtraceError):
    def __init__(self, line: int, col: int, expected, found: str = ""):
        self.line, self.col = line, col
        self.expected = frozenset(expected)
        exp = ", ".join(sorted(repr(e) for e in self.expected))
        super().__init__(f"{line}:{col}: expected one of {exp}, found {found or 'end of input'}")


class TypeCheckError(MtraceError):
    def __init__(self, span, expected: str, found: str):
        self.span, self.expected, self.found = span, expected, found
        super().__init__(f"type error at {span}: expected {expected}, found {found}")


# -- lexer -------------------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\(x\))|([A-Za-z_][A-Za-z0-9_']*)|(1)(?![0-9])|([().,]))")


@dataclass(frozen=True)
class Token:
    kind: str      # "tensor", "name", "one", "(", ")", ",", ".", "eof"
    text: str
    pos: int
    line: int
    col: int


def _line_col(src: str, pos: int) -> tuple:
    line = src.count("\n", 0, pos) + 1
    col = pos - (src.rfind("\n", 0, pos) + 1) + 1
    return line, col


def _strip_comments(src: str) -> str:
    return "\n".join(l.split("#", 1)[0] for l in src.split("\n"))


def tokenize(src: str) -> list:
    src = _strip_comments(src)
    out, pos = [], 0
    while True:
        m = _TOKEN.match(src, pos)
        if m is None or m.end() == pos:
            rest = src[pos:]
            if rest.strip() == "":
                break
            start = pos + len(rest) - len(rest.lstrip())
            l, c = _line_col(src, start)
            raise DSLSyntaxError(l, c, {"NAME", "1", "(", "(x)", ".", ",", ")"}, repr(src[start]))
        start = m.start(m.lastindex)
        l, c = _line_col(src, start)
        if m.group(1):
            out.append(Token("tensor", "(x)", start, l, c))
        elif m.group(2):
            out.append(Token("name", m.group(2), start, l, c))
        elif m.group(3):
            out.append(Token("one", "1", start, l, c))
        else:
            out.append(Token(m.group(4), m.group(4), start, l, c))
        pos = m.end()
    l, c = _line_col(src, len(src))
    out.append(Token("eof", "", len(src), l, c))
    return out


# -- AST ---------------------------------------------------------------------------------------

@dataclass(frozen=True)
class Node:
    """kind is one of: one, name, tensor, compose, dual, prim.  Spans are ignored by equality."""
    kind: str
    value: str = ""
    args: tuple = ()
    span: tuple = field(default=(0, 0), compare=False)


class _Parser:
    def __init__(self, src: str):
        self.toks = tokenize(src)
        self.i = 0

    def peek(self) -> Token:
        return self.toks[self.i]

    def take(self, kind: str) -> Token:
        t = self.peek()
        if t.kind != kind:
            self.fail({_display(kind)})
        self.i += 1
        return t

    def fail(self, expected):
        t = self.peek()
        raise DSLSyntaxError(t.line, t.col, expected, repr(t.text) if t.text else "")

    def expr(self) -> Node:
        left = self.tens()
        while self.peek().kind == ".":
            self.i += 1
            right = self.tens()
            left = Node("compose", "", (left, right), (left.span[0], right.span[1]))
        return left

    def tens(self) -> Node:
        left = self.atom()
        while self.peek().kind == "tensor":
            self.i += 1
            right = self.atom()
            left = Node("tensor", "", (left, right), (left.span[0], right.span[1]))
        return left

    def atom(self) -> Node:
        t = self.peek()
        if t.kind == "(":
            self.i += 1
            e = self.expr()
            self._close(e)
            return e
        if t.kind == "one":
            self.i += 1
            return Node("one", "1", (), (t.pos, t.pos + 1))
        if t.kind == "name":
            self.i += 1
            if t.text in KEYWORDS:
                self.take("(")
                first = self.expr()
                args = (first,)
                if t.text in PRIM_TWO:
                    if self.peek().kind != ",":
                        self.fail({",", "(x)", "."})
                    self.i += 1
                    args = (first, self.expr())
                end = self._close(args[-1])
                kind = "dual" if t.text == "dual" else "prim"
                return Node(kind, t.text, args, (t.pos, end))
            return Node("name", t.text, (), (t.pos, t.pos + len(t.text)))
        self.fail({"NAME", "1", "("})

    def _close(self, inner: Node) -> int:
        t = self.peek()
        if t.kind != ")":
            exp = {")", "(x)"}
            if inner.kind != "one":
                exp.add(".")
            self.fail(exp)
        self.i += 1
        return t.pos + 1


def _display(kind: str) -> str:
    return {"tensor": "(x)", "name": "NAME", "one": "1", "eof": "end of input"}.get(kind, kind)


def parse(src: str) -> Node:
    p = _Parser(src)
    e = p.expr()
    if p.peek().kind != "eof":
        p.fail({"(x)", ".", "end of input"})
    return e


def parse_lines(text: str) -> list:
    """One expression per non-blank line; ``#`` starts a comment."""
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(parse(line))
    return out


def to_source(e: Node) -> str:
    if e.kind in ("one", "name"):
        return e.value
    if e.kind in ("dual", "prim"):
        return f"{e.value}(" + ", ".join(to_source(a) for a in e.args) + ")"
    a, b = e.args
    if e.kind == "compose":
        rb = to_source(b)
        if b.kind == "compose":
            rb = f"({rb})"
        return f"{to_source(a)} . {rb}"
    la, rb = to_source(a), to_source(b)
    if a.kind == "compose":
        la = f"({la})"
    if b.kind in ("compose", "tensor"):
        rb = f"({rb})"
    return f"{la} (x) {rb}"


# -- environment and typing --------------------------------------------------------------------

class Env:
    """Named modules and morphisms over a single Hopf algebra."""

    def __init__(self, algebra, modules: dict | None = None, morphisms: dict | None = None):
        self.algebra = algebra
        self.modules: dict = {}
        self.morphisms: dict = {}
        for k, v in (modules or {}).items():
            self.add_module(k, v)
        for k, v in (morphisms or {}).items():
            self.add_morphism(k, v)

    def _fresh(self, name: str):
        if name in self.modules or name in self.morphisms:
            raise ValueError(f"name {name!r} already bound")
        if name in KEYWORDS or not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_']*", name):
            raise ValueError(f"{name!r} is not a usable name")

    def add_module(self, name: str, M: Module):
        self._fresh(name)
        if M.algebra is not self.algebra:
            raise ValueError(f"module {name} lives over another algebra")
        self.modules[name] = M

    def add_morphism(self, name: str, f: Morphism):
        self._fresh(name)
        if f.dom.algebra is not self.algebra:
            raise ValueError(f"morphism {name} lives over another algebra")
        self.morphisms[name] = f


@dataclass(frozen=True)
class Typed:
    """Result of type checking: an object (cod is None) or a morphism dom -> cod."""
    dom: Module
    cod: Module | None = None

    @property
    def is_object(self) -> bool:
        return self.cod is None


def _describe(t: Typed) -> str:
    return f"object {t.dom.name}" if t.is_object else f"morphism {t.dom.name} -> {t.cod.name}"


def _factors(M: Module) -> tuple:
    return tuple(f for f in M.factors if not (f.dim == 1 and f == trivial(f.algebra)))


def _strip_right(M: Module, W: Module, span):
    mf, wf = _factors(M), _factors(W)
    k = len(wf)
    if len(mf) < k or tuple(mf[len(mf) - k:]) != wf:
        raise TypeCheckError(span, f"object ending in {W.name}", M.name)
    return tensor_all(mf[:len(mf) - k]) if len(mf) > k else trivial(M.algebra)


def _strip_left(M: Module, W: Module, span):
    mf, wf = _factors(M), _factors(W)
    k = len(wf)
    if len(mf) < k or tuple(mf[:k]) != wf:
        raise TypeCheckError(span, f"object starting with {W.name}", M.name)
    return tensor_all(mf[k:]) if len(mf) > k else trivial(M.algebra)


class _Checker:
    def __init__(self, env: Env):
        self.env = env
        self.memo: dict = {}

    def obj(self, e: Node) -> Module:
        t = self.check(e)
        if not t.is_object:
            raise TypeCheckError(e.span, "object", _describe(t))
        return t.dom

    def mor(self, e: Node) -> Typed:
        t = self.check(e)
        if t.is_object:
            raise TypeCheckError(e.span, "morphism", _describe(t))
        return t

    def check(self, e: Node) -> Typed:
        key = id(e)
        if key in self.memo:
            return self.memo[key][0]
        t = self._check(e)
        self.memo[key] = (t, e)
        return t

    def _check(self, e: Node) -> Typed:
        env = self.env
        H = env.algebra
        if e.kind == "one":
            return Typed(trivial(H))
        if e.kind == "name":
            if e.value in env.modules:
                return Typed(env.modules[e.value])
            if e.value in env.morphisms:
                f = env.morphisms[e.value]
                return Typed(f.dom, f.cod)
            raise TypeCheckError(e.span, "a bound name", repr(e.value))
        if e.kind == "dual":
            t = self.check(e.args[0])
            if t.is_object:
                return Typed(dual(t.dom))
            return Typed(dual(t.cod), dual(t.dom))
        if e.kind == "tensor":
            a, b = (self.check(x) for x in e.args)
            if a.is_object != b.is_object:
                raise TypeCheckError(e.span, "two objects or two morphisms", f"{_describe(a)} and {_describe(b)}")
            if a.is_object:
                return Typed(tensor(a.dom, b.dom))
            return Typed(tensor(a.dom, b.dom), tensor(a.cod, b.cod))
        if e.kind == "compose":
            f, g = (self.mor(x) for x in e.args)
            if g.cod != f.dom:
                raise TypeCheckError(e.span, f"codomain {f.dom.name} on the right", g.cod.name)
            return Typed(g.dom, f.cod)
        op = e.value
        if op in PRIM_OBJ:
            V = self.obj(e.args[0])
            I = trivial(H)
            Vs = dual(V)
            return {
                "id": Typed(V, V),
                "ev_l": Typed(tensor(Vs, V), I),
                "coev_l": Typed(I, tensor(V, Vs)),
                "ev_r": Typed(tensor(V, Vs), I),
                "coev_r": Typed(I, tensor(Vs, V)),
                "phi": Typed(V, dual(Vs)),
            }[op]
        if op == "gamma":
            V, W = self.obj(e.args[0]), self.obj(e.args[1])
            return Typed(tensor(dual(W), dual(V)), dual(tensor(V, W)))
        # partial traces
        W = self.obj(e.args[0])
        f = self.mor(e.args[1])
        if op == "ptr_r":
            return Typed(_strip_right(f.dom, W, e.span), _strip_right(f.cod, W, e.span))
        return Typed(_strip_left(f.dom, W, e.span), _strip_left(f.cod, W, e.span))


def typecheck(e: Node | str, env: Env) -> Typed:
    if isinstance(e, str):
        e = parse(e)
    return _Checker(env).check(e)


def evaluate_object(e: Node | str, env: Env) -> Module:
    if isinstance(e, str):
        e = parse(e)
    return _Checker(env).obj(e)


def evaluate(e: Node | str, env: Env) -> Morphism:
    """Evaluate a morphism expression to an exact Morphism."""
    if isinstance(e, str):
        e = parse(e)
    ck = _Checker(env)
    ck.mor(e)
    return _Eval(ck).run(e)


class _Eval:
    def __init__(self, ck: _Checker):
        self.ck = ck

    def run(self, e: Node) -> Morphism:
        t = self.ck.check(e)
        env = self.ck.env
        if e.kind == "name":
            return env.morphisms[e.value]
        if e.kind == "dual":
            return dual_morphism(self.run(e.args[0]), check=False)
        if e.kind == "tensor":
            a, b = e.args
            return self.run(a).tensor(self.run(b))
        if e.kind == "compose":
            a, b = e.args
            return self.run(a) @ self.run(b)
        op = e.value
        if op in PRIM_OBJ:
            V = self.ck.obj(e.args[0])
            if op == "id":
                return V.identity()
            if op == "phi":
                return phi(V)
            return getattr(duality(V), op)
        if op == "gamma":
            return gamma(self.ck.obj(e.args[0]), self.ck.obj(e.args[1]))
        W = self.ck.obj(e.args[0])
        f = self.run(e.args[1])
        if op == "ptr_r":
            return ptr_r(W, f, t.dom, t.cod)
        return ptr_l(W, f, t.dom, t.cod)


def walk(e: Node) -> Iterator[Node]:
    yield e
    for a in e.args:
        yield from walk(a)
