"""Frobenius (Hasse-Witt) and Cartier-Manin matrices for plane curves,
smooth or singular, plus the formal local Cartier operator on truncated
Laurent series and the residue duality it satisfies.

For a degree-d curve f = 0 in P^2 the space H^1(X', O_{X'}) is modelled on
the dual monomial basis of H^2(P^2, O(-d)); Frobenius acts by
beta -> f^{p-1} beta^p.  The Cartier operator acts on the adjoint
differentials h dx/f_y (deg h <= d-3) through the classical
partial-derivative formula, in a chosen affine chart.
"""

from __future__ import annotations

from collections import namedtuple

from .cohomology import DualBasis, SemilinearMap, dual_basis
from .combinatorics import binom
from .errors import (
    BasisEscape,
    DegreeMismatch,
    InsufficientPrecision,
    NotHomogeneous,
    ZeroPartialFy,
)
from .gf import FieldSpec
from .poly import MultiPoly, PolyRing


class PlaneCurveSpec:
    """A homogeneous f(x, y, z) of degree d >= 3 over a FieldSpec."""

    __slots__ = ("f", "field", "degree")

    def __init__(self, f: MultiPoly):
        if f.ring.nvars != 3:
            raise DegreeMismatch("plane curves need exactly 3 variables")
        if not f:
            raise NotHomogeneous("zero polynomial does not define a curve")
        if not f.is_homogeneous():
            raise NotHomogeneous(f"{f} is not homogeneous")
        d = f.total_degree()
        if d < 3:
            raise DegreeMismatch(f"degree {d} < 3")
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "field", f.ring.field)
        object.__setattr__(self, "degree", d)

    def __setattr__(self, *a):
        raise AttributeError("PlaneCurveSpec is immutable")

    @property
    def arithmetic_genus(self):
        pa = binom(self.degree - 1, 2)
        assert pa == len(dual_basis(2, self.degree))
        return pa

    def __repr__(self):
        return f"PlaneCurveSpec({self.f}, p={self.field.p})"


def hasse_witt(curve: PlaneCurveSpec) -> SemilinearMap:
    """Matrix of Frobenius on H^1(X', O) in the dual monomial basis of
    H^2(P^2, O(-d)); column j is reduce(f^{p-1} * beta_j^p)."""
    d = curve.degree
    p = curve.field.p
    basis = dual_basis(2, d)
    ring = curve.f.ring
    fp = curve.f ** (p - 1)
    columns = []
    for mono in basis.monomials:
        beta_p = ring.monomial(tuple(-p * a for a in mono))
        img = basis.reduce(fp * beta_p)
        columns.append(img.vector(curve.field))
    return SemilinearMap.from_columns(curve.field, columns, "p",
                                      basis_label=f"dual(2,{d})")


PlaneCurveInvariants = namedtuple("PlaneCurveInvariants", "sigma a_number pa")


def invariants(curve: PlaneCurveSpec) -> PlaneCurveInvariants:
    hw = hasse_witt(curve)
    return PlaneCurveInvariants(hw.stable_rank(), hw.a_number(),
                                curve.arithmetic_genus)


def image_table(curve: PlaneCurveSpec, order=None):
    """Human-readable Frobenius images, one line per basis element.

    order optionally permutes/labels the basis: a list of tuples
    (a, b, c); entry i becomes label b{i+1}."""
    d = curve.degree
    basis = dual_basis(2, d)
    if order is None:
        order = list(basis.monomials)
    positions = [basis.index[tuple(m)] for m in order]
    labels = {pos: f"b{i + 1}" for i, pos in enumerate(positions)}
    ring = curve.f.ring
    p = curve.field.p
    fp = curve.f ** (p - 1)
    lines = []
    for i, pos in enumerate(positions):
        mono = basis.monomials[pos]
        img = basis.reduce(fp * ring.monomial(tuple(-p * a for a in mono)))
        parts = []
        for j in sorted(img.coords, key=lambda j: int(labels[j][1:])):
            c = img.coords[j]
            cs = str(c)
            if cs == "1":
                parts.append(labels[j])
            elif "+" in cs or "-" in cs:
                parts.append(f"({cs})*{labels[j]}")
            else:
                parts.append(f"{cs}*{labels[j]}")
        lines.append(f"F(b{i + 1}) = " + (" + ".join(parts) if parts else "0"))
    return lines


def cartier_manin(curve: PlaneCurveSpec, infinity_var=2) -> SemilinearMap:
    """Cartier operator on the adjoint differentials h dx/f_y, h = x^a y^b
    with a+b <= d-3, in the affine chart where infinity_var = 1.

    The image of h dx/f_y is
    (d^{2p-2} (f^{p-1} h) / dx^{p-1} dy^{p-1})^{1/p} dx/f_y.
    """
    d = curve.degree
    p = curve.field.p
    ring = curve.f.ring
    affine_vars = [v for v in range(3) if v != infinity_var]
    xv, yv = affine_vars
    fa = curve.f.dehomogenize(infinity_var)
    if not fa.partial_derivative(yv):
        raise ZeroPartialFy(
            f"df/d{ring.names[yv]} vanishes in chart {ring.names[infinity_var]}=1")
    hbasis = [(a, b) for a in range(d - 2) for b in range(d - 2 - a)]
    hbasis.sort()
    index = {m: i for i, m in enumerate(hbasis)}
    fp = fa ** (p - 1)
    columns = []
    zero = curve.field.zero()
    for (a, b) in hbasis:
        exps = [0, 0, 0]
        exps[xv], exps[yv] = a, b
        g = fp * ring.monomial(tuple(exps))
        g = g.partial_derivative(xv, p - 1).partial_derivative(yv, p - 1)
        g = g.pth_root()
        col = [zero] * len(hbasis)
        for e, c in g.terms.items():
            key = (e[xv], e[yv])
            if key not in index or e[infinity_var] != 0:
                raise BasisEscape(
                    f"image term {e} outside the adjoint basis (degree {d})")
            col[index[key]] = c
        columns.append(col)
    return SemilinearMap.from_columns(
        curve.field, columns, "p_inverse",
        basis_label=f"adjoint(d={d}, chart {ring.names[infinity_var]}=1)")


def report(curve: PlaneCurveSpec, with_cartier=False, infinity_var=2):
    """The CLI-facing summary for one plane curve."""
    hw = hasse_witt(curve)
    out = {
        "p": curve.field.p,
        "k": curve.field.k,
        "degree": curve.degree,
        "pa": curve.arithmetic_genus,
        "sigma": hw.stable_rank(),
        "a_number": hw.a_number(),
        "hasse_witt": hw.to_json(),
        "images": image_table(curve),
    }
    if with_cartier:
        cm = cartier_manin(curve, infinity_var)
        out["cartier_manin"] = cm.to_json()
        out["cartier_rank"] = cm.rank()
        out["rank_duality_holds"] = cm.rank() == hw.rank()
    return out


# -- truncated Laurent series and the formal Cartier operator ----------------

class LaurentSeries:
    """Finitely many terms below zero plus a truncation order: coefficients
    at exponents >= trunc are unknown."""

    __slots__ = ("field", "coeffs", "trunc")

    def __init__(self, field: FieldSpec, coeffs, trunc):
        clean = {}
        for e, c in coeffs.items():
            c = field.element(c)
            if e < trunc and c:
                clean[e] = c
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", clean)
        object.__setattr__(self, "trunc", trunc)

    def __setattr__(self, *a):
        raise AttributeError("LaurentSeries is immutable")

    def min_exp(self):
        """Smallest exponent that can carry a nonzero coefficient."""
        return min(self.coeffs) if self.coeffs else self.trunc

    def __eq__(self, other):
        return (isinstance(other, LaurentSeries)
                and (self.field, self.coeffs, self.trunc)
                == (other.field, other.coeffs, other.trunc))

    def __add__(self, other):
        trunc = min(self.trunc, other.trunc)
        coeffs = dict(self.coeffs)
        for e, c in other.coeffs.items():
            coeffs[e] = coeffs.get(e, self.field.zero()) + c
        return LaurentSeries(self.field, coeffs, trunc)

    def __mul__(self, other):
        if isinstance(other, LaurentSeries):
            trunc = min(self.trunc + other.min_exp(),
                        other.trunc + self.min_exp())
            coeffs = {}
            for e1, c1 in self.coeffs.items():
                for e2, c2 in other.coeffs.items():
                    e = e1 + e2
                    if e < trunc:
                        coeffs[e] = coeffs.get(e, self.field.zero()) + c1 * c2
            return LaurentSeries(self.field, coeffs, trunc)
        c = self.field.element(other)
        return LaurentSeries(self.field,
                             {e: c * v for e, v in self.coeffs.items()},
                             self.trunc)

    __rmul__ = __mul__

    def pth_power(self):
        # (known + O(t^N))^p = known^p + O(t^{pN}) in characteristic p
        p = self.field.p
        return LaurentSeries(
            self.field,
            {p * e: c.frobenius() for e, c in self.coeffs.items()},
            p * self.trunc)

    def coefficient(self, e):
        if e >= self.trunc:
            raise InsufficientPrecision(
                f"coefficient at t^{e} unknown (truncation {self.trunc})")
        return self.coeffs.get(e, self.field.zero())

    def residue(self):
        """Coefficient of t^{-1} (the residue of  self . dt)."""
        return self.coefficient(-1)

    def __repr__(self):
        terms = [f"{c}*t^{e}" for e, c in sorted(self.coeffs.items())]
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(t^{self.trunc})"


def formal_cartier(omega: LaurentSeries, out_order=None) -> LaurentSeries:
    """Cartier on omega = sum a_n t^n dt: output coefficient at t^{n-1} is
    the p-th root of a_{pn-1}; everything else is dropped."""
    p = omega.field.p
    # output exponent n-1 needs the input coefficient at pn-1, so the
    # determined range is n <= floor(trunc / p)
    trunc_out = omega.trunc // p
    if out_order is not None and trunc_out < out_order:
        raise InsufficientPrecision(
            f"need input truncation >= {p * out_order + 1}, have {omega.trunc}")
    coeffs = {}
    for e, c in omega.coeffs.items():
        if (e + 1) % p == 0:
            n = (e + 1) // p
            if n - 1 < trunc_out:
                coeffs[n - 1] = c.pth_root()
    return LaurentSeries(omega.field, coeffs, trunc_out)


def residue_duality_check(f: LaurentSeries, omega: LaurentSeries) -> bool:
    """Whether Res(f^p . omega) equals Res(f . C(omega))^p; both sides equal
    sum over pi + j = -1 of a_i^p b_j."""
    p = f.field.p
    lhs = (f.pth_power() * omega).residue()
    rhs = (f * formal_cartier(omega)).residue()
    return lhs == rhs ** p
