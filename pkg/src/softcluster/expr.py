"""Operator expressions over the named sets of a space file.

Grammar, tightest binding first::

    atom   := NAME | LITERAL | '(' expr ')'
    unary  := '~' unary | FUNC '(' expr ')' | atom      FUNC in cl, int, D, c
    inter  := unary ('n' unary)*
    diff   := inter ('-' inter)*
    expr   := diff ('u' diff)*

``u`` and ``n`` are operators, so they cannot be used as set names here.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .cluster import ClusterContext, cluster_set
from .core import SoftSet, parse_soft_set
from .errors import InputError, PreconditionError
from .topology import closure, derived_set, interior

_TOKEN = re.compile(r"\s*(?:(\{[^{}]*(?:\{[^{}]*\}[^{}]*)*\})|([A-Za-z_][A-Za-z0-9_']*)|([~()\-]))")

FUNCS = ("cl", "int", "D", "c")


@dataclass(frozen=True)
class Token:
    kind: str  # "lit" | "name" | "op" | "end"
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if not text[pos:].strip():
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise InputError(f"syntax error at position {pos + 1}: unexpected {text[pos:].strip()[:1]!r}")
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(Token("lit", m.group(1), start))
        elif m.group(2):
            word = m.group(2)
            tokens.append(Token("op" if word in ("u", "n") else "name", word, start))
        else:
            tokens.append(Token("op", m.group(3), start))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, bundle):
        self.tokens = tokenize(text)
        self.i = 0
        self.bundle = bundle

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def take(self, text: str | None = None) -> Token:
        t = self.tok
        if text is not None and t.text != text:
            what = repr(t.text) if t.kind != "end" else "end of input"
            raise InputError(f"syntax error at position {t.pos + 1}: expected {text!r}, got {what}")
        self.i += 1
        return t

    def parse(self) -> SoftSet:
        value = self.expr()
        if self.tok.kind != "end":
            raise InputError(f"syntax error at position {self.tok.pos + 1}: unexpected {self.tok.text!r}")
        return value

    def expr(self) -> SoftSet:
        value = self.diff()
        while self.tok.kind == "op" and self.tok.text == "u":
            self.take()
            value = value | self.diff()
        return value

    def diff(self) -> SoftSet:
        value = self.inter()
        while self.tok.kind == "op" and self.tok.text == "-":
            self.take()
            value = value - self.inter()
        return value

    def inter(self) -> SoftSet:
        value = self.unary()
        while self.tok.kind == "op" and self.tok.text == "n":
            self.take()
            value = value & self.unary()
        return value

    def unary(self) -> SoftSet:
        t = self.tok
        if t.kind == "op" and t.text == "~":
            self.take()
            return ~self.unary()
        if t.kind == "name" and t.text in FUNCS and self.tokens[self.i + 1].text == "(":
            self.take()
            self.take("(")
            arg = self.expr()
            self.take(")")
            return self.apply(t.text, arg)
        if t.kind == "op" and t.text == "(":
            self.take()
            value = self.expr()
            self.take(")")
            return value
        if t.kind == "name":
            self.take()
            return self.bundle.resolve(t.text)
        if t.kind == "lit":
            self.take()
            return parse_soft_set(self.bundle.carrier, t.text)
        what = repr(t.text) if t.kind != "end" else "end of input"
        raise InputError(f"syntax error at position {t.pos + 1}: unexpected {what}")

    def apply(self, func: str, arg: SoftSet) -> SoftSet:
        topology = self.bundle.topology
        if topology is None:
            raise PreconditionError(f"{func}(...) needs a valid topology in the space file")
        if func == "cl":
            return closure(topology, arg)
        if func == "int":
            return interior(topology, arg)
        if func == "D":
            return derived_set(topology, arg)
        if self.bundle.ideal is None:
            raise PreconditionError("c(...) needs an ideal in the space file")
        return cluster_set(ClusterContext(topology, self.bundle.ideal), arg)


def eval_expression(bundle, text: str) -> SoftSet:
    return _Parser(text, bundle).parse()
