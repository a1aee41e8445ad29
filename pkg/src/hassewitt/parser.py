"""Parser for the polynomial text grammar used on the command line.

Grammar: variables x0..xN (aliases x, y, z when there are three variables),
operators + - * ^, nonnegative integer literals, parenthesized
subexpressions, and identifiers bound to field elements (parameters such as
lambda, A, B).  Whitespace is insignificant.  Errors carry 0-based
positions.
"""

from __future__ import annotations

from .errors import PolySyntaxError, UnboundIdentifier
from .poly import MultiPoly, PolyRing

_OPS = set("+-*^()")


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _OPS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("NUM", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("IDENT", text[i:j], i))
            i = j
            continue
        raise PolySyntaxError(f"unexpected character {ch!r}", i)
    return tokens


class _Parser:
    def __init__(self, text, ring: PolyRing, bindings):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.ring = ring
        self.bindings = bindings or {}
        self.varmap = self._variable_map(ring)

    @staticmethod
    def _variable_map(ring):
        vm = {name: i for i, name in enumerate(ring.names)}
        for i in range(ring.nvars):
            vm.setdefault(f"x{i}", i)
        if ring.nvars == 3:
            for alias, i in (("x", 0), ("y", 1), ("z", 2)):
                vm.setdefault(alias, i)
        return vm

    def _peek(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return ("EOF", None, len(self.text))

    def _next(self):
        tok = self._peek()
        self.pos += 1
        return tok

    def _expect(self, kind):
        tok = self._next()
        if tok[0] != kind:
            raise PolySyntaxError(f"expected {kind}, found {tok[0]}", tok[2])
        return tok

    def parse(self) -> MultiPoly:
        value = self.expr()
        tok = self._peek()
        if tok[0] != "EOF":
            raise PolySyntaxError(f"unexpected {tok[0]}", tok[2])
        return value

    def expr(self):
        negate = False
        if self._peek()[0] == "-":
            self._next()
            negate = True
        value = self.term()
        if negate:
            value = -value
        while self._peek()[0] in ("+", "-"):
            op = self._next()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self._peek()[0] == "*":
            self._next()
            value = value * self.factor()
        return value

    def factor(self):
        value = self.primary()
        if self._peek()[0] == "^":
            self._next()
            tok = self._expect("NUM")
            value = value ** tok[1]
        return value

    def primary(self):
        kind, val, pos = self._next()
        if kind == "NUM":
            return self.ring.constant(val)
        if kind == "IDENT":
            if val in self.varmap:
                return self.ring.var(self.varmap[val])
            if val in self.bindings:
                return self.ring.constant(self.bindings[val])
            raise UnboundIdentifier(val)
        if kind == "(":
            value = self.expr()
            self._expect(")")
            return value
        if kind == "EOF":
            raise PolySyntaxError("unexpected end of input", pos)
        raise PolySyntaxError(f"unexpected {kind!r}", pos)


def parse_poly(text: str, ring: PolyRing, bindings=None) -> MultiPoly:
    """Parse text into a polynomial of the given ring; parameter bindings
    map identifiers to field elements."""
    return _Parser(text, ring, bindings).parse()
