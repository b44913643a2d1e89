"""Ideal expressions.

Grammar (whitespace is ignored)::

    mono  := ("x" INT)+ | "{" INT ("," INT)* "}"
    atom  := "Li(" mono ")" | "Lf(" mono ")" | "L(" mono "," mono ")"
           | "Inq(" INT ")" | "{" mono ("," mono)* "}"
    expr  := atom (("+" | "&") atom)*

``&`` (intersection) binds tighter than ``+`` (sum); both are left-associative.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from ..errors import DegreeMismatch, DegreeOutOfRange, IndexOutOfRange, ParseError
from ..ideals import MonomialIdeal, ideal_sum, intersect, squarefree_power
from ..lexseg import LexSpec, build
from ..monomials import Ring, SqfMonomial

Mono = tuple[int, ...]


@dataclass(frozen=True)
class Segment:
    kind: str  # "Li", "Lf" or "L"
    u: Mono | None
    v: Mono | None


@dataclass(frozen=True)
class Power:
    q: int


@dataclass(frozen=True)
class Gens:
    monos: tuple[Mono, ...]


@dataclass(frozen=True)
class BinOp:
    op: str
    left: Expr
    right: Expr


Expr = Union[Segment, Power, Gens, BinOp]

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>Li|Lf|Inq|L)\(|(?P<x>x)|(?P<sym>[{}(),+&]))")


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.toks: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                off = pos + len(text[pos:]) - len(text[pos:].lstrip())
                raise ParseError(f"unexpected character {text[off]!r}", off)
            kind = m.lastgroup
            start = m.start(kind)
            if kind == "name":
                self.toks.append(("name", m.group("name"), start))
            elif kind == "int":
                self.toks.append(("int", m.group("int"), start))
            elif kind == "x":
                self.toks.append(("x", "x", start))
            else:
                self.toks.append(("sym", m.group("sym"), start))
            pos = m.end()
        self.i = 0
        self.end = len(text)

    def peek(self) -> tuple[str, str, int]:
        if self.i < len(self.toks):
            return self.toks[self.i]
        return ("eof", "", self.end)

    def next(self) -> tuple[str, str, int]:
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, value: str) -> int:
        kind, val, off = self.next()
        if val != value or kind == "eof":
            got = "end of input" if kind == "eof" else repr(val)
            raise ParseError(f"expected {value!r}, got {got}", off)
        return off


class _Parser:
    def __init__(self, text: str, n: int):
        self.lx = _Lexer(text)
        self.n = n

    def index(self) -> int:
        kind, val, off = self.lx.next()
        if kind != "int":
            raise ParseError("expected a variable index", off)
        i = int(val)
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"x{i} at offset {off} is outside 1..{self.n}")
        return i

    def mono(self) -> Mono:
        kind, val, off = self.lx.peek()
        idx: list[int] = []
        if kind == "x":
            while self.lx.peek()[0] == "x":
                self.lx.next()
                idx.append(self.index())
        elif val == "{":
            self.lx.next()
            idx.append(self.index())
            while self.lx.peek()[1] == ",":
                self.lx.next()
                idx.append(self.index())
            self.lx.expect("}")
        else:
            raise ParseError("expected a monomial", off)
        if len(set(idx)) != len(idx):
            raise ParseError("monomial is not squarefree", off)
        return tuple(sorted(idx))

    def atom(self) -> Expr:
        kind, val, off = self.lx.next()
        if kind == "name":
            if val == "Inq":
                k, q, qoff = self.lx.next()
                if k != "int":
                    raise ParseError("expected a degree", qoff)
                self.lx.expect(")")
                q = int(q)
                if not 1 <= q <= self.n:
                    raise DegreeOutOfRange(f"Inq({q}) needs 1 <= q <= {self.n}")
                return Power(q)
            first = self.mono()
            if val == "L":
                self.lx.expect(",")
                second = self.mono()
                self.lx.expect(")")
                if len(first) != len(second):
                    raise DegreeMismatch(f"L(...) endpoints at offset {off} have different degrees")
                return Segment("L", first, second)
            self.lx.expect(")")
            return Segment(val, first if val == "Lf" else None, first if val == "Li" else None)
        if val == "{":
            monos = [self.mono()]
            while self.lx.peek()[1] == ",":
                self.lx.next()
                monos.append(self.mono())
            self.lx.expect("}")
            return Gens(tuple(monos))
        got = "end of input" if kind == "eof" else repr(val)
        raise ParseError(f"expected an ideal, got {got}", off)

    def term(self) -> Expr:
        node = self.atom()
        while self.lx.peek()[1] == "&":
            self.lx.next()
            node = BinOp("&", node, self.atom())
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.lx.peek()[1] == "+":
            self.lx.next()
            node = BinOp("+", node, self.term())
        kind, val, off = self.lx.peek()
        if kind != "eof":
            raise ParseError(f"unexpected {val!r}", off)
        return node


def parse(text: str, n: int) -> Expr:
    return _Parser(text, n).expr()


def _mono_text(m: Mono) -> str:
    return "".join(f"x{i}" for i in m)


def to_text(e: Expr) -> str:
    """Canonical text; ``parse(to_text(e), n) == e`` for trees built by :func:`parse`."""
    if isinstance(e, Segment):
        if e.kind == "Li":
            return f"Li({_mono_text(e.v)})"
        if e.kind == "Lf":
            return f"Lf({_mono_text(e.u)})"
        return f"L({_mono_text(e.u)}, {_mono_text(e.v)})"
    if isinstance(e, Power):
        return f"Inq({e.q})"
    if isinstance(e, Gens):
        return "{" + ", ".join(_mono_text(m) for m in e.monos) + "}"
    return f"{to_text(e.left)} {e.op} {to_text(e.right)}"


def as_spec(e: Expr, ring: Ring) -> LexSpec | None:
    """The lexsegment behind a single segment atom (``Inq(q)`` counts as ``Li``)."""
    if isinstance(e, Segment):
        if e.kind == "Li":
            return LexSpec.initial(ring.monomial(*e.v))
        if e.kind == "Lf":
            return LexSpec.final(ring.monomial(*e.u))
        return LexSpec.segment(ring.monomial(*e.u), ring.monomial(*e.v))
    if isinstance(e, Power):
        return LexSpec.initial(ring.monomial(*range(ring.n - e.q + 1, ring.n + 1)))
    return None


def evaluate(e: Expr, ring: Ring) -> MonomialIdeal:
    spec = as_spec(e, ring)
    if spec is not None:
        return build(spec)
    if isinstance(e, Gens):
        return MonomialIdeal.from_masks(ring, [SqfMonomial.from_support(ring, m).mask for m in e.monos])
    if isinstance(e, BinOp):
        a, b = evaluate(e.left, ring), evaluate(e.right, ring)
        return ideal_sum(a, b) if e.op == "+" else intersect(a, b)
    return squarefree_power(ring, e.q)
