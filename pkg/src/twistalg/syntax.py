"""Plain-text element syntax and JSON dumps for Cherednik algebra elements.

Grammar (whitespace ignored)::

    expr   := ["+"|"-"] term (("+"|"-") term)*
    term   := power (("*" power) | ("/" number))*
    power  := atom ["^" integer]
    atom   := number | "x"i | "y"i | group token | "z" | name | "(" expr ")"

Group tokens are ``1``-free forms ``s(i,j;e)``, ``t(i;e)``, ``sg(i,j;e)`` and
``m(perm;exps)``; ``z`` is zeta_N; other names are looked up in ``names``
and may be scalars, group elements or algebra elements.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping

from .cherednik import CherednikAlgebra, CherednikElement
from .groups import MonomialMatrix, element_token, parse_element_token
from .scalars import Cyclo, CycloContext, scalar_from_json, scalar_to_json

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<grp>(?:sg|s|t|m)\([^)]*\))|(?P<var>[xy]\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/^()]))"
)


class SyntaxErrorAt(ValueError):
    pass


def tokenize(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            raise SyntaxErrorAt(f"unexpected input at {pos}: {text[pos:pos + 10]!r}")
        kind = mt.lastgroup
        out.append((kind, mt.group(kind)))
        pos = mt.end()
    return out


class _Parser:
    def __init__(self, H: CherednikAlgebra, tokens, names: Mapping[str, object]):
        self.H = H
        self.toks = tokens
        self.pos = 0
        self.names = dict(names)

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else (None, None)

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None or (value is not None and tok[1] != value):
            raise SyntaxErrorAt(f"expected {value or 'token'} at token {self.pos}")
        self.pos += 1
        return tok

    def expr(self) -> CherednikElement:
        sign = 1
        if self.peek() in (("op", "+"), ("op", "-")):
            sign = -1 if self.take()[1] == "-" else 1
        acc = self.term() * sign
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> CherednikElement:
        acc = self.power()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            if op == "*":
                acc = acc * self.power()
            else:
                kind, val = self.take()
                if kind != "num":
                    raise SyntaxErrorAt("division only by integer literals")
                acc = acc * Fraction(1, int(val))
        return acc

    def power(self) -> CherednikElement:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise SyntaxErrorAt("exponent must be a non-negative integer")
            return base ** int(val)
        return base

    def atom(self) -> CherednikElement:
        H = self.H
        kind, val = self.take()
        if kind == "num":
            return H.scalar(Fraction(int(val)))
        if kind == "var":
            i = int(val[1:])
            if not 1 <= i <= H.n:
                raise SyntaxErrorAt(f"{val} out of range")
            return H.x(i) if val[0] == "x" else H.y(i)
        if kind == "grp":
            return H.g(parse_element_token(val, H.n, H.N))
        if kind == "name":
            if val in ("z", "zeta"):
                return H.scalar(H.ctx.zeta(1))
            if val in self.names:
                named = self.names[val]
                if isinstance(named, CherednikElement):
                    return named
                if isinstance(named, MonomialMatrix):
                    return H.g(named)
                return H.scalar(named)
            raise SyntaxErrorAt(f"unknown name {val!r}")
        if val == "(":
            inner = self.expr()
            self.take(")")
            return inner
        if val == "-":
            return -self.atom()
        raise SyntaxErrorAt(f"unexpected {val!r}")


def parse_element(H: CherednikAlgebra, text: str, names: Mapping[str, object] | None = None) -> CherednikElement:
    """Parse ``text`` into a normalised element of ``H``."""
    toks = tokenize(text)
    if not toks:
        raise SyntaxErrorAt("empty expression")
    p = _Parser(H, toks, names or {})
    out = p.expr()
    if p.pos != len(toks):
        raise SyntaxErrorAt(f"trailing input at token {p.pos}")
    return out


def element_to_json(elem: CherednikElement) -> list:
    """[[x_exps, group token, y_exps, scalar], ...] in a canonical order."""
    from .cherednik import word_sort_key

    N = elem.algebra.N
    rows = []
    for w in sorted(elem.terms, key=word_sort_key):
        a, g, b = w
        rows.append([list(a), element_token(g), list(b), scalar_to_json(elem.terms[w], N)])
    return rows


def element_from_json(H: CherednikAlgebra, rows: list) -> CherednikElement:
    terms: dict = {}
    ctx = CycloContext(H.N)
    for a, tok, b, sc in rows:
        val = scalar_from_json(sc)
        val = ctx.coerce(val) if isinstance(val, Cyclo) and val.ctx is ctx else val
        terms[(tuple(a), parse_element_token(tok, H.n, H.N), tuple(b))] = val
    return H.elem(terms)
