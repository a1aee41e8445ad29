"""Sparse multivariate (Laurent) polynomials over a FieldSpec.

One arithmetic engine serves both defining equations (nonnegative exponents)
and cohomology classes (all exponents negative); terms are keyed by exponent
tuples, zero coefficients are never stored, and printing uses the graded-lex
order so output is deterministic.
"""

from __future__ import annotations

from .errors import (
    ArityMismatch,
    NotAPthPower,
    NotHomogeneous,
    RingMismatch,
)
from .gf import FieldElement, FieldSpec


class PolyRing:
    """(field, variable count, variable names); shared by all its polynomials."""

    __slots__ = ("field", "nvars", "names")

    def __init__(self, field: FieldSpec, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise RingMismatch("duplicate variable names")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "nvars", len(names))
        object.__setattr__(self, "names", names)

    def __setattr__(self, *a):
        raise AttributeError("PolyRing is immutable")

    def __eq__(self, other):
        return (isinstance(other, PolyRing)
                and (self.field, self.names) == (other.field, other.names))

    def __hash__(self):
        return hash((self.field, self.names))

    def __repr__(self):
        return f"{self.field!r}[{','.join(self.names)}]"

    def zero(self):
        return MultiPoly(self, {})

    def one(self):
        return self.constant(self.field.one())

    def constant(self, c):
        c = self.field.element(c)
        if not c:
            return self.zero()
        return MultiPoly(self, {(0,) * self.nvars: c})

    def var(self, i, exp=1):
        exps = [0] * self.nvars
        exps[i] = exp
        return self.monomial(tuple(exps))

    def monomial(self, exps, coeff=1):
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ArityMismatch(
                f"{len(exps)} exponents for {self.nvars} variables")
        c = self.field.element(coeff)
        if not c:
            return self.zero()
        return MultiPoly(self, {exps: c})

    def poly(self, term_map):
        """Build from {exps: coeff}, dropping zeros."""
        terms = {}
        for exps, c in term_map.items():
            exps = tuple(exps)
            if len(exps) != self.nvars:
                raise ArityMismatch(
                    f"{len(exps)} exponents for {self.nvars} variables")
            c = self.field.element(c)
            if c:
                terms[exps] = c
        return MultiPoly(self, terms)


def _grlex_key(exps):
    return (sum(exps), exps)


class MultiPoly:
    """Sparse polynomial; terms maps exponent tuple -> nonzero FieldElement."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", terms)

    def __setattr__(self, *a):
        raise AttributeError("MultiPoly is immutable")

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.ring != self.ring:
                raise RingMismatch("polynomials from different rings")
            return other
        if isinstance(other, (int, FieldElement)):
            return self.ring.constant(other)
        return NotImplemented

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for exps, c in o.terms.items():
            s = terms.get(exps)
            if s is None:
                terms[exps] = c
            else:
                s = s + c
                if s:
                    terms[exps] = s
                else:
                    del terms[exps]
        return MultiPoly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self.terms, o.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                c = c1 * c2
                s = out.get(e)
                if s is None:
                    if c:
                        out[e] = c
                else:
                    s = s + c
                    if s:
                        out[e] = s
                    else:
                        del out[e]
        return MultiPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def pth_power(self):
        """Term-wise Frobenius: exponents times p, coefficients to the p-th
        power.  Agrees with self ** p in characteristic p."""
        p = self.ring.field.p
        return MultiPoly(self.ring, {
            tuple(x * p for x in e): c.frobenius()
            for e, c in self.terms.items()})

    def pth_root(self):
        """Inverse of pth_power; every exponent must be divisible by p."""
        p = self.ring.field.p
        out = {}
        for e, c in self.terms.items():
            if any(x % p for x in e):
                raise NotAPthPower(f"exponent vector {e} not divisible by {p}")
            out[tuple(x // p for x in e)] = c.pth_root()
        return MultiPoly(self.ring, out)

    def partial_derivative(self, var, order=1):
        if not 0 <= var < self.ring.nvars:
            raise ArityMismatch(f"no variable {var}")
        p = self.ring.field.p
        cur = self
        for _ in range(order):
            out = {}
            for e, c in cur.terms.items():
                n = e[var]
                if n % p == 0:
                    continue
                ne = list(e)
                ne[var] = n - 1
                nc = c * (n % p)
                key = tuple(ne)
                s = out.get(key)
                out[key] = nc if s is None else s + nc
            cur = MultiPoly(self.ring, {e: c for e, c in out.items() if c})
        return cur

    def total_degree(self):
        """Max term degree (None for the zero polynomial)."""
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def is_laurent(self):
        return any(x < 0 for e in self.terms for x in e)

    def dehomogenize(self, var):
        """Substitute 1 for the given variable; input must be homogeneous."""
        if not self.is_homogeneous():
            raise NotHomogeneous(f"{self} is not homogeneous")
        out = {}
        for e, c in self.terms.items():
            ne = list(e)
            ne[var] = 0
            key = tuple(ne)
            s = out.get(key)
            out[key] = c if s is None else s + c
        return MultiPoly(self.ring, {e: c for e, c in out.items() if c})

    def evaluate(self, point):
        point = [self.ring.field.element(v) for v in point]
        if len(point) != self.ring.nvars:
            raise ArityMismatch(
                f"{len(point)} values for {self.ring.nvars} variables")
        acc = self.ring.field.zero()
        for e, c in self.terms.items():
            v = c
            for x, n in zip(point, e):
                if n:
                    v = v * x ** n
            acc = acc + v
        return acc

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), self.ring.field.zero())

    def sorted_terms(self):
        """Terms in descending graded-lex order (the canonical print order)."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]),
                      reverse=True)

    def __repr__(self):
        return str(self)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            factors = []
            for name, e in zip(self.ring.names, exps):
                if e == 1:
                    factors.append(name)
                elif e != 0:
                    factors.append(f"{name}^{e}")
            cs = str(c)
            if not factors:
                parts.append(f"({cs})" if ("+" in cs or "-" in cs) else cs)
                continue
            mono = "*".join(factors)
            if c == self.ring.field.one():
                parts.append(mono)
            elif "+" in cs or "-" in cs:
                parts.append(f"({cs})*{mono}")
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts)
