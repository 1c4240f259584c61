"""Class expressions such as ``Set(Cyc(Set(X)+))`` compiled to count sequences.

Grammar (whitespace-insensitive, keywords case-insensitive)::

    expr := "X" | "R" | "W" | "NPT"
          | ("Set" | "Seq" | "Cyc") "(" expr ["+"] ")"
          | "Point" "(" expr ")"

A trailing ``+`` restricts the argument to its positive-degree part.  Error
offsets are 1-based character positions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .egf import (
    ConstantTermError,
    CountSeq,
    egf_exp,
    egf_log,
    egf_seq,
    point,
    solve_catalan_class,
    solve_npt,
    solve_windmill,
)


class ClassExprError(ValueError):
    def __init__(self, message: str, offset: int | None = None):
        self.message = message
        self.offset = offset
        super().__init__(f"{message} at offset {offset}" if offset is not None else message)


@dataclass(frozen=True)
class Atom:
    offset: int = 1

    def __str__(self):
        return "X"


@dataclass(frozen=True)
class Builtin:
    name: str  # "R", "W" or "NPT"
    offset: int = 1

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Construct:
    op: str  # "Set", "Seq", "Cyc" or "Point"
    arg: "ClassExpr"
    positive: bool = False
    offset: int = 1

    def __str__(self):
        return f"{self.op}({self.arg}{'+' if self.positive else ''})"


ClassExpr = Atom | Builtin | Construct

_CONSTRUCTS = {"set": "Set", "seq": "Seq", "cyc": "Cyc"}
_BUILTINS = {"r": "R", "w": "W", "npt": "NPT"}
_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        kind_pos = m.start(1) if m.group(1) else m.start(2)
        tokens.append((m.group(1) or m.group(2), kind_pos + 1))
        pos = m.end()
    tokens.append(("", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, symbol: str):
        tok, off = self.take()
        if tok != symbol:
            found = repr(tok) if tok else "end of input"
            raise ClassExprError(f"expected {symbol!r}, found {found}", off)

    def expr(self) -> ClassExpr:
        tok, off = self.take()
        if not tok:
            raise ClassExprError("unexpected end of input", off)
        low = tok.lower()
        if low == "x":
            return Atom(off)
        if low in _BUILTINS:
            return Builtin(_BUILTINS[low], off)
        if low in _CONSTRUCTS or low == "point":
            self.expect("(")
            arg = self.expr()
            positive = False
            if low != "point" and self.peek()[0] == "+":
                self.take()
                positive = True
            self.expect(")")
            op = _CONSTRUCTS.get(low, "Point")
            return Construct(op, arg, positive, off)
        if tok.isidentifier():
            raise ClassExprError(f"unknown class name {tok!r}", off)
        raise ClassExprError(f"unexpected {tok!r}", off)


def parse_class_expr(text: str) -> ClassExpr:
    p = _Parser(text)
    e = p.expr()
    tok, off = p.peek()
    if tok:
        raise ClassExprError(f"trailing input {tok!r}", off)
    return e


def eval_class_expr(e: ClassExpr | str, order: int) -> CountSeq:
    if isinstance(e, str):
        e = parse_class_expr(e)
    if order < 0:
        raise ValueError("order must be non-negative")
    if isinstance(e, Atom):
        return CountSeq.atom(order)
    if isinstance(e, Builtin):
        solver = {"R": solve_catalan_class, "W": solve_windmill, "NPT": solve_npt}[e.name]
        return solver(order)
    arg = eval_class_expr(e.arg, order)
    if e.op == "Point":
        return point(arg)
    if e.positive:
        arg = arg.positive()
    op = {"Set": egf_exp, "Seq": egf_seq, "Cyc": egf_log}[e.op]
    try:
        return op(arg)
    except ConstantTermError:
        raise ClassExprError(
            f"{e.op} argument {e.arg} has objects of degree 0; write {e.op}({e.arg}+)",
            e.offset,
        ) from None
