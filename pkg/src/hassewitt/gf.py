"""Exact arithmetic in F_p and F_{p^k}.

Elements are stored as coordinate vectors in the power basis of a generator
t, i.e. residues mod (p, modulus).  The Frobenius endomorphism a -> a^p and
its inverse (p-th root, which always exists in a finite field) are the two
operations everything semilinear in this package is built on.

All values are immutable; operations are pure.
"""

from __future__ import annotations

import re

from .errors import (
    DegreeMismatch,
    DivisionByZero,
    FieldMismatch,
    FieldParseError,
    NotPrime,
    ReducibleModulus,
)

_MAX_P = 2 ** 31  # residues stay machine-word sized


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    # deterministic Miller-Rabin, valid far beyond 2^31
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# dense F_p[x] helpers; coefficient lists are low-degree first, trimmed

def _trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c

def _polymod(a, b, p):
    a = a[:]
    inv = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        f = a[-1] * inv % p
        if f:
            off = len(a) - len(b)
            for i, bc in enumerate(b):
                a[off + i] = (a[off + i] - f * bc) % p
        a.pop()
        _trim(a)
    return a

def _polymulmod(a, b, m, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ac in enumerate(a):
        if ac:
            for j, bc in enumerate(b):
                out[i + j] = (out[i + j] + ac * bc) % p
    return _polymod(_trim(out), m, p)

def _polygcd(a, b, p):
    a, b = a[:], b[:]
    while b:
        a, b = b, _polymod(a, b, p)
    return a

def _xpow_mod(e, m, p):
    """x^e mod m over F_p by square-and-multiply."""
    result = [1]
    base = _polymod([0, 1], m, p)
    while e:
        if e & 1:
            result = _polymulmod(result, base, m, p)
        base = _polymulmod(base, base, m, p)
        e >>= 1
    return result


def _is_irreducible(modulus, p, k):
    if k == 1:
        return True
    if k <= 3:
        # degree 2 or 3: reducible iff it has a root in F_p
        for a in range(p):
            if sum(c * pow(a, i, p) for i, c in enumerate(modulus)) % p == 0:
                return False
        return True
    # general degree: gcd with x^{p^d} - x detects any factor of degree d
    for d in range(1, k // 2 + 1):
        xq = _xpow_mod(p ** d, modulus, p)
        g = xq[:] + [0] * (2 - len(xq))
        g[1] = (g[1] - 1) % p
        if len(_polygcd(modulus, _trim(g), p)) > 1:
            return False
    return True


def _default_modulus(p, k):
    """First irreducible monic degree-k polynomial in lexicographic
    coefficient order (c_0, ..., c_{k-1})."""
    if k == 1:
        return (0, 1)
    counters = [0] * k
    while True:
        cand = counters + [1]
        if _is_irreducible(cand, p, k):
            return tuple(cand)
        for i in reversed(range(k)):
            counters[i] += 1
            if counters[i] < p:
                break
            counters[i] = 0
        else:
            raise ReducibleModulus(f"no irreducible of degree {k} found")  # pragma: no cover


class FieldSpec:
    """The field F_{p^k} = F_p[t]/(modulus).  Immutable."""

    __slots__ = ("p", "k", "modulus", "_red", "_frob_rows", "_proot_rows")

    def __init__(self, p, k=1, modulus=None):
        if not isinstance(p, int) or not _is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if p >= _MAX_P:
            raise NotPrime(f"characteristic {p} exceeds the 2^31 limit")
        if not isinstance(k, int) or k < 1:
            raise DegreeMismatch(f"extension degree must be >= 1, got {k}")
        if modulus is None:
            modulus = _default_modulus(p, k)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise DegreeMismatch(
                f"modulus must be monic of degree {k}, got {modulus}")
        if not _is_irreducible(list(modulus), p, k):
            raise ReducibleModulus(f"modulus {modulus} is reducible over F_{p}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "modulus", modulus)
        # reduction table: t^j mod modulus for j = k .. 2k-2
        red = [tuple((-c) % p for c in modulus[:-1])]  # t^k
        for _ in range(k - 2):
            prev = red[-1]
            nxt = [0] + list(prev[:-1])
            lead = prev[-1]
            if lead:
                nxt = [(x + lead * y) % p for x, y in zip(nxt, red[0])]
            red.append(tuple(c % p for c in nxt))
        object.__setattr__(self, "_red", red)
        object.__setattr__(self, "_frob_rows", None)
        object.__setattr__(self, "_proot_rows", None)

    def __setattr__(self, *args):
        raise AttributeError("FieldSpec is immutable")

    def __eq__(self, other):
        return (isinstance(other, FieldSpec)
                and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus))

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        if self.k == 1:
            return f"F_{self.p}"
        return f"F_{self.p}^{self.k}"

    @property
    def order(self):
        return self.p ** self.k

    # -- element constructors ------------------------------------------------

    def element(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise FieldMismatch("element belongs to a different field")
            return value
        if isinstance(value, int):
            coeffs = [value % self.p] + [0] * (self.k - 1)
            return FieldElement(self, tuple(coeffs))
        if isinstance(value, str):
            return self.parse(value)
        coeffs = list(value)
        if len(coeffs) > self.k:
            raise DegreeMismatch("too many coordinates")
        coeffs += [0] * (self.k - len(coeffs))
        return FieldElement(self, tuple(c % self.p for c in coeffs))

    def zero(self):
        return self.element(0)

    def one(self):
        return self.element(1)

    def gen(self):
        """The generator t (equals 1 when k = 1)."""
        if self.k == 1:
            return self.one()
        return self.element([0, 1])

    def elements(self):
        """Iterate over all p^k elements (small fields only)."""
        coeffs = [0] * self.k
        for _ in range(self.order):
            yield FieldElement(self, tuple(coeffs))
            for i in range(self.k):
                coeffs[i] += 1
                if coeffs[i] < self.p:
                    break
                coeffs[i] = 0

    def parse(self, text: str) -> "FieldElement":
        """Parse the printed grammar, e.g. 't+1', '2*t^2+t+3', '5'."""
        s = text.replace(" ", "")
        if not s:
            raise FieldParseError("empty field element")
        coeffs = [0] * self.k
        for sign, term in re.findall(r"([+-]?)([^+-]+)", s):
            m = re.fullmatch(r"(?:(\d+)\*?)?(t)?(?:\^(\d+))?", term)
            if not m or (m.group(3) and not m.group(2)) or not (m.group(1) or m.group(2)):
                raise FieldParseError(f"bad term {term!r} in {text!r}")
            c = int(m.group(1)) if m.group(1) else 1
            e = int(m.group(3)) if m.group(3) else (1 if m.group(2) else 0)
            if e >= self.k:
                raise FieldParseError(
                    f"t^{e} exceeds extension degree {self.k} in {text!r}")
            if sign == "-":
                c = -c
            coeffs[e] = (coeffs[e] + c) % self.p
        return FieldElement(self, tuple(coeffs))

    # -- internal linear maps for Frobenius and its inverse ----------------

    def _frobenius_rows(self):
        rows = self._frob_rows
        if rows is None:
            rows = [self.element([0] * i + [1]) ** self.p for i in range(self.k)]
            rows = [e.coeffs for e in rows]
            object.__setattr__(self, "_frob_rows", rows)
        return rows

    def _pth_root_rows(self):
        rows = self._proot_rows
        if rows is None:
            rows = []
            for i in range(self.k):
                e = self.element([0] * i + [1])
                for _ in range(self.k - 1):
                    e = e.frobenius()
                rows.append(e.coeffs)
            object.__setattr__(self, "_proot_rows", rows)
        return rows


class FieldElement:
    """An element of a FieldSpec; a length-k coordinate tuple mod p."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec, coeffs):
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *args):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise FieldMismatch(
                    f"elements of {self.spec!r} and {other.spec!r} cannot mix")
            return other
        if isinstance(other, int):
            return self.spec.element(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        p = self.spec.p
        return FieldElement(self.spec, tuple(
            (a + b) % p for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        p = self.spec.p
        return FieldElement(self.spec, tuple(
            (a - b) % p for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        p = self.spec.p
        return FieldElement(self.spec, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        spec = self.spec
        p, k = spec.p, spec.k
        a, b = self.coeffs, o.coeffs
        if k == 1:
            return FieldElement(spec, (a[0] * b[0] % p,))
        conv = [0] * (2 * k - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] += ai * bj
        out = [c % p for c in conv[:k]]
        for j in range(k, 2 * k - 1):
            c = conv[j] % p
            if c:
                row = spec._red[j - k]
                for i, r in enumerate(row):
                    out[i] = (out[i] + c * r) % p
        return FieldElement(spec, tuple(out))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise DivisionByZero("inverse of zero")
        return self ** (self.spec.order - 2)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.spec.element(other) / self

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.spec.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def frobenius(self):
        """a -> a^p, computed by the precomputed basis table."""
        spec = self.spec
        if spec.k == 1:
            return self
        rows = spec._frobenius_rows()
        p = spec.p
        out = [0] * spec.k
        for i, c in enumerate(self.coeffs):
            if c:
                row = rows[i]
                for j, r in enumerate(row):
                    out[j] = (out[j] + c * r) % p
        return FieldElement(spec, tuple(out))

    def pth_root(self):
        """The unique b with b^p = a; equals a^{p^{k-1}}."""
        spec = self.spec
        if spec.k == 1:
            return self
        rows = spec._pth_root_rows()
        p = spec.p
        out = [0] * spec.k
        for i, c in enumerate(self.coeffs):
            if c:
                row = rows[i]
                for j, r in enumerate(row):
                    out[j] = (out[j] + c * r) % p
        return FieldElement(spec, tuple(out))

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            return self == self.spec.element(other)
        return (isinstance(other, FieldElement)
                and self.spec == other.spec and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.spec.p, self.spec.k, self.coeffs))

    def __repr__(self):
        return str(self)

    def __str__(self):
        terms = []
        for e in reversed(range(self.spec.k)):
            c = self.coeffs[e]
            if not c:
                continue
            if e == 0:
                terms.append(str(c))
            else:
                var = "t" if e == 1 else f"t^{e}"
                terms.append(var if c == 1 else f"{c}*{var}")
        return "+".join(terms) if terms else "0"


def field_create(p, k=1, modulus=None) -> FieldSpec:
    """Build F_{p^k}; with modulus omitted, picks the deterministic default
    (the lexicographically smallest irreducible)."""
    return FieldSpec(p, k, modulus)


def frobenius(a: FieldElement) -> FieldElement:
    return a.frobenius()


def pth_root(a: FieldElement) -> FieldElement:
    return a.pth_root()
