"""Generalized Fermat curves C^m(l_0, ..., l_{n-2}) in P^n.

Covers the dimension formulas, the exponent-tuple index sets and their
Frobenius-vanishing subsets, the explicit cohomology basis built from
leading monomials plus correction terms (with its inductively defined
coefficient table), the Frobenius action, the a-number formula at p = 2,
and the inclusion-exclusion p-rank lower bound over sub-curves in smaller
projective spaces.

The basis is indexed by windows (r, s): the block of exponent tuples
whose first two entries lie in (rm, (r+1)m] and (sm, (s+1)m].
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field

from .cohomology import (
    CohomologyClass,
    DualBasis,
    SemilinearMap,
    dual_basis,
    nullspace,
    rank,
    solve_columns,
)
from .combinatorics import binom
from .errors import (
    BasisVerificationFailed,
    ImageEscapesSpan,
    UnsupportedCharacteristic,
)
from .gf import FieldElement, FieldSpec
from .poly import MultiPoly, PolyRing


# -- dimension formulas ------------------------------------------------------

def genus(m: int, n: int) -> int:
    """1 + (m^{n-1}/2)((m-1)(n-1) - 2), exact."""
    num = m ** (n - 1) * ((m - 1) * (n - 1) - 2)
    assert num % 2 == 0
    return 1 + num // 2


def h1_dim(m: int, n: int) -> int:
    """dim H^1 of the (m, n) curve as the alternating binomial sum."""
    return sum((-1) ** i * binom(n - 1, i) * binom((n - i - 1) * m - 1, n)
               for i in range(n))


def complete_intersection_h(n: int, degrees, t: int, r: int) -> int:
    """h^t(O_{Y_{n-t}}(-r)) for Y cut by hypersurfaces of the given degrees
    in P^n, via the alternating sum over degree subsets; the ambient term is
    h^n(O_{P^n}(-M)) = C(M-1, n)."""
    degrees = tuple(degrees)
    cut = n - t
    if not 0 <= cut <= len(degrees):
        raise ValueError(f"need 0 <= n-t <= {len(degrees)}")
    active = degrees[:cut]
    total = 0
    for i in range(cut + 1):
        for subset in itertools.combinations(active, cut - i):
            total += (-1) ** i * binom(sum(subset) + r - 1, n)
    return total


def binom_identity(n: int, t: int):
    """Both sides of the alternating binomial identity; returns
    (lhs, rhs, equal)."""
    lhs = sum((-1) ** i * binom(t + 1 - i, t - i) * binom(n + 1, i)
              for i in range(t + 1))
    rhs = (-1) ** t * binom(n - 1, t)
    return lhs, rhs, lhs == rhs


def card_S_closed_form(m: int, n: int, t: int) -> int:
    """Inclusion-exclusion count of the window-(t, 0) tuple block:
    sum of (-1)^i C(n+1, i) C((n-t-i-1)m - 1, n)."""
    return sum((-1) ** i * binom(n + 1, i) * binom((n - t - i - 1) * m - 1, n)
               for i in range(max(n - t - 1, 1)))


# -- the curve ----------------------------------------------------------------

class FermatSpec:
    """C^m(l_0, ..., l_{n-2}) in P^n with concrete field parameters.

    Smooth mode requires the l_i nonzero, pairwise distinct and m prime to
    the characteristic; anything else downgrades to singular mode, which the
    jacobian module consumes.
    """

    __slots__ = ("m", "n", "lambdas", "field", "ring", "smooth")

    def __init__(self, m, n, lambdas, field: FieldSpec):
        if m < 2 or n < 2:
            raise ValueError("need m >= 2 and n >= 2")
        lambdas = tuple(field.element(v) for v in lambdas)
        if len(lambdas) != n - 1:
            raise ValueError(f"need {n - 1} parameters, got {len(lambdas)}")
        smooth = (all(lambdas)
                  and len({l.coeffs for l in lambdas}) == len(lambdas)
                  and math.gcd(m, field.p) == 1)
        ring = PolyRing(field, tuple(f"x{i}" for i in range(n + 1)))
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "lambdas", lambdas)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "smooth", smooth)

    def __setattr__(self, *a):
        raise AttributeError("FermatSpec is immutable")

    def __repr__(self):
        ls = ",".join(str(l) for l in self.lambdas)
        return f"C^{self.m}({ls}) in P^{self.n} over {self.field!r}"

    def defining_polys(self):
        """f_i = l_i x0^m + x1^m + x_{i+2}^m for i = 0..n-2."""
        m, ring = self.m, self.ring
        out = []
        for i, l in enumerate(self.lambdas):
            out.append(ring.monomial((m,) + (0,) * self.n, l)
                       + ring.var(1, m) + ring.var(i + 2, m))
        return out


# -- index sets ---------------------------------------------------------------

@dataclass(frozen=True)
class IndexSet:
    r: int
    s: int
    tuples: tuple


def _check_rs(spec, r, s):
    if r < 0 or s < 0 or r + s > spec.n - 2:
        raise ValueError(f"(r,s)=({r},{s}) outside 0 <= r+s <= {spec.n - 2}")


def basis_tuples(spec: FermatSpec, r: int, s: int) -> IndexSet:
    """All (a_0..a_n) with sum (n-1)m, 0 < a_i <= m for i >= 2,
    rm < a_0 <= (r+1)m and sm < a_1 <= (s+1)m."""
    _check_rs(spec, r, s)
    m, n = spec.m, spec.n
    total = (n - 1) * m
    out = []
    for a0 in range(r * m + 1, (r + 1) * m + 1):
        for a1 in range(s * m + 1, (s + 1) * m + 1):
            rest = total - a0 - a1
            _compositions_in_box(rest, n - 1, m, (a0, a1), out)
    out.sort()
    return IndexSet(r, s, tuple(out))


def _compositions_in_box(total, slots, m, prefix, out):
    if total < slots or total > slots * m:
        return
    if slots == 0:
        out.append(tuple(prefix))
        return
    stack = [(prefix, total, slots)]
    while stack:
        pfx, rem, k = stack.pop()
        if k == 1:
            if 1 <= rem <= m:
                out.append(tuple(pfx) + (rem,))
            continue
        for a in range(max(1, rem - (k - 1) * m), min(m, rem - (k - 1)) + 1):
            stack.append((tuple(pfx) + (a,), rem - a, k - 1))


def vanishing_tuples(spec: FermatSpec, r: int, s: int) -> IndexSet:
    """The Frobenius-vanishing subset of the (r, s) tuple block at p = 2,
    m odd.

    At (0, 0) it keeps the tuples with at least three coordinates
    <= (m-1)/2; for r+s >= 1 it is the union of the four half-interval
    cases, where the small-coordinate threshold among indices >= 2 depends
    on which halves a_0 and a_1 fall into."""
    _check_rs(spec, r, s)
    if spec.field.p != 2 or spec.m % 2 == 0:
        raise UnsupportedCharacteristic(
            "vanishing subsets are defined for p = 2 and odd m only")
    m, n = spec.m, spec.n
    half = (m - 1) // 2
    S = basis_tuples(spec, r, s)
    out = []
    if r == 0 and s == 0:
        for tup in S.tuples:
            if sum(1 for a in tup if a <= half) >= 3:
                out.append(tup)
    else:
        for tup in S.tuples:
            a0_upper = tup[0] > r * m + half
            a1_upper = tup[1] > s * m + half
            required = n - 2 * r - 2 * s - int(a0_upper) - int(a1_upper)
            smalls = sum(1 for a in tup[2:] if a <= half)
            if smalls >= required:
                out.append(tup)
    return IndexSet(r, s, tuple(out))


def vanishing_count_closed_form(spec: FermatSpec):
    """Both readings of the closed form for the (0, 0) vanishing count
    (the C(n+1, i) factor appears both inside the at-least-i terms and in
    the alternating sum, an apparent double count), next to the enumerated
    truth."""
    m, n = spec.m, spec.n
    enumerated = len(vanishing_tuples(spec, 0, 0).tuples)
    card_s = len(basis_tuples(spec, 0, 0).tuples)
    t_terms = {}
    for i in range(n - 1, n + 2):
        t_terms[i] = binom(n + 1, i) * binom(
            (n - 1) * m - i * (m - 1) // 2 - 1, n)
    signs = {n - 1: -1, n: 1, n + 1: -1}
    literal = card_s + sum(signs[i] * binom(n + 1, i) * t_terms[i]
                           for i in signs)
    single = card_s + sum(signs[i] * t_terms[i] for i in signs)
    return {
        "enumerated": enumerated,
        "literal_reading": literal,
        "single_count_reading": single,
        "literal_matches": literal == enumerated,
        "single_count_matches": single == enumerated,
    }


# -- the explicit basis --------------------------------------------------------

def elementary_symmetric(values, l):
    """Elementary symmetric polynomial e_l of concrete field elements."""
    if not values and l == 0:
        raise ValueError("empty product needs a field for the unit")
    field = values[0].spec
    acc = field.zero()
    if l == 0:
        return field.one()
    for comb in itertools.combinations(values, l):
        term = field.one()
        for v in comb:
            term = term * v
        acc = acc + term
    return acc


def correction_coeff(spec, l, q, subset, memo):
    """Correction coefficient for (l, q) on an index subset of {2..n},
    via the inductive rule: spliting off the last index t gives
    l_{t-2} * beta_{l-1}^{q} + beta_{l}^{q-1}."""
    key = (l, q, subset)
    val = memo.get(key)
    if val is not None:
        return val
    field = spec.field
    if l < 0 or q < 0 or l + q != len(subset):
        val = field.zero()
    elif not subset:
        val = field.one()
    else:
        t = subset[-1]
        rest = subset[:-1]
        val = field.zero()
        if l >= 1:
            val = val + spec.lambdas[t - 2] * correction_coeff(spec, l - 1, q, rest, memo)
        if q >= 1:
            val = val + correction_coeff(spec, l, q - 1, rest, memo)
    memo[key] = val
    return val


@dataclass(frozen=True)
class BasisElement:
    r: int
    s: int
    leading_tuple: tuple
    expansion: CohomologyClass
    beta_table: dict = dc_field(repr=False, default_factory=dict)

    def to_poly(self, ring):
        return self.expansion.to_poly(ring)


def _build_basis_element(spec, r, s, tup, amb, memo):
    m, n = spec.m, spec.n
    field = spec.field
    minus_one = field.element(-1)
    terms = {tuple(-a for a in tup): field.one()}
    beta_table = {}
    for l in range(r + 1):
        for q in range(s + 1):
            if l + q == 0:
                continue
            sign = field.one() if (l + q) % 2 == 0 else minus_one
            for subset in itertools.combinations(range(2, n + 1), l + q):
                coeff = correction_coeff(spec, l, q, subset, memo)
                beta_table[(l, q, subset)] = coeff
                c = sign * coeff
                if not c:
                    continue
                exps = [-tup[0] + l * m, -tup[1] + q * m]
                for i in range(2, n + 1):
                    exps.append(-tup[i] - m if i in subset else -tup[i])
                terms[tuple(exps)] = c
    poly = spec.ring.poly(terms)
    expansion = amb.reduce(poly)
    assert len(expansion.coords) == len(poly.terms)
    return BasisElement(r, s, tup, expansion, beta_table)


def explicit_basis(spec: FermatSpec):
    """The explicit basis of H^1(X, O): for each window (r, s) and each
    tuple in its block, the leading monomial plus correction terms.

    Verifies (i) cardinality = h1_dim, (ii) every element is annihilated by
    every f_i in cohomology, (iii) linear independence; raises
    BasisVerificationFailed on any violation.
    """
    if not spec.smooth:
        raise BasisVerificationFailed(
            "basis construction requires a smooth curve (nonzero, pairwise "
            "distinct parameters, m prime to p)")
    m, n = spec.m, spec.n
    amb = dual_basis(n, (n - 1) * m)
    memo = {}
    elements = []
    for total in range(n - 1):
        for r in range(total, -1, -1):
            s = total - r
            for tup in basis_tuples(spec, r, s).tuples:
                elements.append(_build_basis_element(spec, r, s, tup, amb, memo))

    expected = h1_dim(m, n)
    if len(elements) != expected:
        raise BasisVerificationFailed(
            f"built {len(elements)} elements, expected h1 = {expected}")

    target = dual_basis(n, (n - 2) * m)
    for f in spec.defining_polys():
        for el in elements:
            if not target.reduce(f * el.to_poly(spec.ring)).is_zero():
                raise BasisVerificationFailed(
                    f"f * alpha != 0 in cohomology for tuple {el.leading_tuple}")

    vectors = [el.expansion.vector(spec.field) for el in elements]
    if rank(vectors) != len(elements):
        raise BasisVerificationFailed("basis elements are linearly dependent")
    return elements


def kernel_basis(spec: FermatSpec):
    """H^1(X, O) as the joint kernel of multiplication by every f_i from
    the dual basis in twist (n-1)m to twist (n-2)m."""
    m, n = spec.m, spec.n
    src = dual_basis(n, (n - 1) * m)
    tgt = dual_basis(n, (n - 2) * m)
    field = spec.field
    zero = field.zero()
    rows = [[zero] * len(src) for _ in range(len(tgt) * (n - 1))]
    for fi, f in enumerate(spec.defining_polys()):
        base = fi * len(tgt)
        for j, mono in enumerate(src.monomials):
            for e, c in f.terms.items():
                prod = tuple(x - a for x, a in zip(e, mono))
                if all(x <= -1 for x in prod):
                    rows[base + tgt.index[tuple(-x for x in prod)]][j] = c
    kernel = nullspace(rows, len(src), field)
    expected = h1_dim(m, n)
    if len(kernel) != expected:
        raise BasisVerificationFailed(
            f"kernel dimension {len(kernel)} != h1 = {expected}")
    return [CohomologyClass(src, {i: c for i, c in enumerate(v) if c})
            for v in kernel]


def spans_agree(spec: FermatSpec, explicit_elements=None, kernel=None) -> bool:
    """Mutual-containment rank test between the two bases."""
    els = explicit_elements if explicit_elements is not None else explicit_basis(spec)
    ker = kernel if kernel is not None else kernel_basis(spec)
    va = [el.expansion.vector(spec.field) for el in els]
    vb = [k.vector(spec.field) for k in ker]
    ra, rb = rank(va), rank(vb)
    return ra == rb == rank(va + vb)


# -- Frobenius ---------------------------------------------------------------

def frobenius_matrix(spec: FermatSpec, basis_choice="explicit",
                     _elements=None) -> SemilinearMap:
    """Matrix of F: alpha -> (prod f_i)^{p-1} alpha^p on the chosen basis.

    Coordinates on the explicit basis come from the leading-monomial fast
    path (the correction monomials can never be leading monomials), with a
    mandatory zero-residual check and a full linear solve as fallback.
    """
    p = spec.field.p
    m, n = spec.m, spec.n
    amb = dual_basis(n, (n - 1) * m)
    prod = spec.ring.one()
    for f in spec.defining_polys():
        prod = prod * f
    prod_p = prod ** (p - 1)

    if basis_choice == "explicit":
        elements = _elements if _elements is not None else explicit_basis(spec)
        lead_pos = {el.leading_tuple: j for j, el in enumerate(elements)}
        columns = []
        for el in elements:
            img = amb.reduce(prod_p * el.to_poly(spec.ring).pth_power())
            col = _coords_on_explicit_basis(spec, img, elements, lead_pos, amb)
            columns.append(col)
        return SemilinearMap.from_columns(
            spec.field, columns, "p", basis_label="explicit")

    if basis_choice == "kernel":
        kernel = _elements if _elements is not None else kernel_basis(spec)
        cols_as_vectors = [k.vector(spec.field) for k in kernel]
        columns = []
        for k in kernel:
            img = amb.reduce(prod_p * k.to_poly(spec.ring).pth_power())
            sol = solve_columns(cols_as_vectors, img.vector(spec.field),
                                spec.field)
            if sol is None:
                raise ImageEscapesSpan("Frobenius image left the kernel span")
            columns.append(sol)
        return SemilinearMap.from_columns(
            spec.field, columns, "p", basis_label="kernel")

    raise ValueError(f"unknown basis_choice {basis_choice!r}")


def _coords_on_explicit_basis(spec, img, elements, lead_pos, amb):
    field = spec.field
    zero = field.zero()
    col = [zero] * len(elements)
    residual = img
    hit = []
    for idx, c in img.coords.items():
        tup = amb.monomials[idx]
        if all(1 <= a <= spec.m for a in tup[2:]):
            j = lead_pos.get(tup)
            if j is None:
                raise ImageEscapesSpan(
                    f"leading-shaped monomial {tup} is not a basis tuple")
            col[j] = c
            hit.append(j)
    for j in hit:
        residual = residual - elements[j].expansion.scale(col[j])
    if residual.is_zero():
        return col
    # triangularity failed; fall back to solving the full system
    cols_as_vectors = [el.expansion.vector(field) for el in elements]
    sol = solve_columns(cols_as_vectors, img.vector(field), field)
    if sol is None:
        raise ImageEscapesSpan("Frobenius image left the basis span")
    return sol


# -- genericity certificate -----------------------------------------------

@dataclass(frozen=True)
class GenericityCertificate:
    a_values: dict
    b_values: dict
    all_nonzero: bool

    def to_json(self):
        return {
            "A": {f"A[{r},{s}]": entry["value_str"]
                  for (r, s), entry in sorted(self.a_values.items())},
            "B": {f"B[{b},{c}]{list(i_set)}": str(v)
                  for (b, c, i_set), v in sorted(self.b_values.items())},
            "all_nonzero": self.all_nonzero,
        }


def genericity(spec: FermatSpec) -> GenericityCertificate:
    """Evaluate the parameter sums whose nonvanishing the a-number formula
    assumes: the full elementary-symmetric sums for windows with
    (n-2)/2 < r+s <= n-2, and the subset sums (elementary symmetric over
    index subsets) for every subset size up to n-1."""
    n = spec.n
    field = spec.field
    lams = list(spec.lambdas)
    a_values = {}
    ok = True
    for total in range((n - 1 + 1) // 2, n - 1):
        for r in range(total + 1):
            s = total - r
            if r == 0:
                a_values[(r, s)] = {"l": None, "q": None,
                                    "value": field.one(), "value_str": "1",
                                    "applicable": True}
                continue
            l = min(2 * r, n - 1)
            q = n - 1 - l
            if q > 2 * s:
                q = 2 * s
                l = n - 1 - q
            if not (0 <= l <= 2 * r and 0 <= q <= 2 * s and l <= n - 1):
                a_values[(r, s)] = {"l": None, "q": None, "value": None,
                                    "value_str": "n/a", "applicable": False}
                continue
            val = elementary_symmetric(lams, l)
            a_values[(r, s)] = {"l": l, "q": q, "value": val,
                                "value_str": str(val), "applicable": True}
            if not val:
                ok = False
    b_values = {}
    for size in range(1, n):
        for subset in itertools.combinations(range(2, n + 1), size):
            sel = [spec.lambdas[i - 2] for i in subset]
            for b in range(1, size + 1):
                c = size - b
                val = elementary_symmetric(sel, b)
                b_values[(b, c, subset)] = val
                if not val:
                    ok = False
    return GenericityCertificate(a_values, b_values, ok)


# -- the full invariant report ------------------------------------------------

def _sigma_only(spec: FermatSpec) -> int:
    return frobenius_matrix(spec).stable_rank()


def prank_lower_bound(spec: FermatSpec):
    """Alternating sum of sub-curve p-ranks over all (t-1)-element parameter
    subsets, t = 2..n-1; returns (bound, details, skipped)."""
    n = spec.n
    bound = 0
    details = []
    skipped = []
    for t in range(2, n):
        sign = (-1) ** t
        for subset in itertools.combinations(range(n - 1), t - 1):
            lams = [spec.lambdas[i] for i in subset]
            sub = FermatSpec(spec.m, t, lams, spec.field)
            if not sub.smooth:
                skipped.append(subset)
                continue
            sg = _sigma_only(sub)
            details.append({"subset": subset, "t": t, "sigma": sg})
            bound += sign * sg
    return bound, details, skipped


def fermat_invariants(spec: FermatSpec):
    """Everything the CLI reports for one curve: genus, h1, sigma, a-number,
    the T-set a-number formula and per-column vanishing check (p = 2, m odd),
    the genericity certificate, and the p-rank lower bound."""
    m, n = spec.m, spec.n
    p = spec.field.p
    flags = []
    g = genus(m, n)
    h1 = h1_dim(m, n)
    elements = explicit_basis(spec)
    fr = frobenius_matrix(spec, _elements=elements)
    sigma = fr.stable_rank()
    a_num = fr.a_number()

    s_cards = {}
    for total in range(n - 1):
        for r in range(total, -1, -1):
            s = total - r
            s_cards[(r, s)] = len(basis_tuples(spec, r, s).tuples)

    anum_formula = None
    t_cards = {}
    column_vanishing_ok = None
    if p == 2 and m % 2 == 1:
        t_sets = {}
        for total in range((n - 2) // 2 + 1):
            for r in range(total, -1, -1):
                s = total - r
                ts = vanishing_tuples(spec, r, s)
                t_sets[(r, s)] = set(ts.tuples)
                t_cards[(r, s)] = len(ts.tuples)
        anum_formula = sum(t_cards.values())
        column_vanishing_ok = True
        zero = spec.field.zero()
        for j, el in enumerate(elements):
            col_zero = all(fr.matrix[i][j] == zero for i in range(fr.dim))
            in_t = el.leading_tuple in t_sets.get((el.r, el.s), set())
            if col_zero != in_t:
                column_vanishing_ok = False
                flags.append(
                    f"column-vanishing mismatch at {el.leading_tuple} "
                    f"(r={el.r}, s={el.s}): zero={col_zero}, in T={in_t}")
        if anum_formula != a_num:
            flags.append(
                f"a-number formula {anum_formula} != kernel dimension {a_num}")
        readings = vanishing_count_closed_form(spec)
        if not readings["single_count_matches"]:
            flags.append(
                "closed-form vanishing-count readings: "
                f"literal={readings['literal_reading']}, "
                f"single={readings['single_count_reading']}, "
                f"enumerated={readings['enumerated']}")
    else:
        flags.append(
            "the vanishing-set a-number formula requires p=2 and odd m")

    cert = genericity(spec)

    bound = None
    bound_holds = None
    bound_details = []
    if n >= 3:
        bound, bound_details, skipped = prank_lower_bound(spec)
        for sub in skipped:
            flags.append(f"degenerate parameter subset {sub} skipped in "
                         "p-rank bound; bound not asserted")
        if not skipped:
            bound_holds = sigma >= bound
            if not bound_holds:
                flags.append(
                    f"p-rank lower bound violated: sigma={sigma} < {bound}")

    return {
        "m": m, "n": n, "p": p, "k": spec.field.k,
        "lambdas": [str(l) for l in spec.lambdas],
        "genus": g,
        "h1_dim": h1,
        "sigma": sigma,
        "a_number": a_num,
        "anum_formula": anum_formula,
        "genericity": cert,
        "prank_lower_bound": bound,
        "prank_bound_holds": bound_holds,
        "prank_subcurves": bound_details,
        "S_cardinalities": s_cards,
        "T_cardinalities": t_cards,
        "column_vanishing_ok": column_vanishing_ok,
        "flags": flags,
    }
