"""The monomial model of H^n(P^n, O(-s)), reduction into it, and semilinear
(Frobenius / Cartier) matrices with their stable-rank and kernel invariants.

The dual basis of H^n(P^n, O(-s)) is the set of Laurent monomials
1/(x_0^{a_0} ... x_n^{a_n}) with all a_i >= 1 and sum a_i = s; a Laurent
polynomial of total degree -s reduces into it by discarding every term with
some exponent >= 0.
"""

from __future__ import annotations

from .combinatorics import binom
from .errors import DegreeMismatch, InconsistentBasis
from .gf import FieldSpec
from .poly import MultiPoly, PolyRing


class DualBasis:
    """Ordered monomial basis of H^n(P^n, O(-s)).

    Monomials are stored as positive tuples (a_0, ..., a_n) in ascending
    lexicographic order; index i of the tuple is the basis position used by
    every matrix built on this basis.
    """

    __slots__ = ("n", "s", "monomials", "index")

    def __init__(self, n, s):
        if n < 1 or s < 0:
            raise ValueError("need n >= 1 and s >= 0")
        monomials = []
        def rec(prefix, remaining, slots):
            if slots == 1:
                if remaining >= 1:
                    monomials.append(tuple(prefix + [remaining]))
                return
            for a in range(1, remaining - slots + 2):
                rec(prefix + [a], remaining - a, slots - 1)
        rec([], s, n + 1)
        expected = binom(s - 1, n)
        assert len(monomials) == expected, (len(monomials), expected)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "monomials", tuple(monomials))
        object.__setattr__(self, "index", {m: i for i, m in enumerate(monomials)})

    def __setattr__(self, *a):
        raise AttributeError("DualBasis is immutable")

    def __len__(self):
        return len(self.monomials)

    def __eq__(self, other):
        return (isinstance(other, DualBasis)
                and (self.n, self.s) == (other.n, other.s))

    def __hash__(self):
        return hash((self.n, self.s))

    def __repr__(self):
        return f"DualBasis(n={self.n}, s={self.s}, dim={len(self)})"

    def reduce(self, lpoly: MultiPoly) -> "CohomologyClass":
        """Project a Laurent polynomial of total degree -s into this basis.

        Terms whose exponent vector has any entry >= 0 are zero in cohomology
        and are dropped; the rest are basis monomials.
        """
        if lpoly.ring.nvars != self.n + 1:
            raise DegreeMismatch(
                f"expected {self.n + 1} variables, got {lpoly.ring.nvars}")
        coords = {}
        for exps, c in lpoly.terms.items():
            if sum(exps) != -self.s:
                raise DegreeMismatch(
                    f"term degree {sum(exps)} != {-self.s}")
            if all(e <= -1 for e in exps):
                coords[self.index[tuple(-e for e in exps)]] = c
        return CohomologyClass(self, coords)

    def zero_class(self):
        return CohomologyClass(self, {})

    def unit_class(self, i, field, coeff=None):
        c = field.one() if coeff is None else field.element(coeff)
        return CohomologyClass(self, {i: c} if c else {})


def dual_basis(n, s) -> DualBasis:
    return DualBasis(n, s)


class CohomologyClass:
    """Sparse coordinates on a DualBasis."""

    __slots__ = ("basis", "coords")

    def __init__(self, basis, coords):
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "coords", {i: c for i, c in coords.items() if c})

    def __setattr__(self, *a):
        raise AttributeError("CohomologyClass is immutable")

    def is_zero(self):
        return not self.coords

    def __bool__(self):
        return bool(self.coords)

    def __eq__(self, other):
        return (isinstance(other, CohomologyClass)
                and self.basis == other.basis and self.coords == other.coords)

    def __hash__(self):
        return hash((self.basis, frozenset(self.coords.items())))

    def __add__(self, other):
        if not isinstance(other, CohomologyClass) or other.basis != self.basis:
            raise InconsistentBasis("classes on different bases")
        coords = dict(self.coords)
        for i, c in other.coords.items():
            s = coords.get(i)
            coords[i] = c if s is None else s + c
        return CohomologyClass(self.basis, coords)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        if isinstance(c, int):
            if not self.coords:
                return self
            field = next(iter(self.coords.values())).spec
            c = field.element(c)
        return CohomologyClass(self.basis,
                               {i: c * v for i, v in self.coords.items()})

    def coefficient(self, i, field):
        return self.coords.get(i, field.zero())

    def vector(self, field):
        z = field.zero()
        return [self.coords.get(i, z) for i in range(len(self.basis))]

    def to_poly(self, ring: PolyRing) -> MultiPoly:
        return ring.poly({
            tuple(-a for a in self.basis.monomials[i]): c
            for i, c in self.coords.items()})

    def describe(self, labels=None):
        if not self.coords:
            return "0"
        parts = []
        for i in sorted(self.coords):
            c = self.coords[i]
            name = labels[i] if labels else f"b{i + 1}"
            cs = str(c)
            if cs == "1":
                parts.append(name)
            elif "+" in cs or "-" in cs:
                parts.append(f"({cs})*{name}")
            else:
                parts.append(f"{cs}*{name}")
        return " + ".join(parts)


# -- exact linear algebra over a FieldSpec -------------------------------------

def rank(rows) -> int:
    """Exact rank by Gaussian elimination, first-nonzero pivoting."""
    if not rows:
        return 0
    work = [list(r) for r in rows]
    nrows, ncols = len(work), len(work[0])
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if work[i][c]:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = work[r][c].inverse()
        row_r = [x * inv for x in work[r]]
        work[r] = row_r
        for i in range(r + 1, nrows):
            f = work[i][c]
            if f:
                work[i] = [x - f * y for x, y in zip(work[i], row_r)]
        r += 1
        if r == nrows:
            break
    return r


def rref(rows, ncols, field):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    work = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(work)):
            if work[i][c]:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = work[r][c].inverse()
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
    return work[:r], pivots


def nullspace(rows, ncols, field):
    """Deterministic kernel basis (one vector per free column)."""
    reduced, pivots = rref(rows, ncols, field)
    pivot_set = set(pivots)
    zero, one = field.zero(), field.one()
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [zero] * ncols
        v[free] = one
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[free]
        basis.append(v)
    return basis


def solve_columns(cols, rhs, field):
    """Solve sum_j c_j * cols[j] = rhs exactly; None if inconsistent."""
    m = len(rhs)
    n = len(cols)
    aug = [[cols[j][i] for j in range(n)] + [rhs[i]] for i in range(m)]
    reduced, pivots = rref(aug, n, field)
    coeffs = [field.zero()] * n
    for row, pc in zip(reduced, pivots):
        coeffs[pc] = row[n]
    # verify (also catches inconsistency)
    for i in range(m):
        acc = field.zero()
        for j in range(n):
            if coeffs[j]:
                acc = acc + coeffs[j] * cols[j][i]
        if acc != rhs[i]:
            return None
    return coeffs


def matmul(a, b):
    n, mid, m = len(a), len(b), len(b[0]) if b else 0
    zero = None
    out = []
    for i in range(n):
        row_a = a[i]
        acc = None
        for k in range(mid):
            f = row_a[k]
            if f:
                row_b = b[k]
                if acc is None:
                    acc = [f * x for x in row_b]
                else:
                    acc = [s + f * x for s, x in zip(acc, row_b)]
        if acc is None:
            if zero is None:
                probe = next((x for row in a for x in row), None) or \
                        next((x for row in b for x in row), None)
                zero = probe.spec.zero() if probe is not None else None
            acc = [zero] * m
        out.append(acc)
    return out


class SemilinearMap:
    """A square matrix plus a twist direction.

    With twist 'p' the map sends coordinate vector v to matrix . v^(p)
    (every coordinate raised to the p-th power first); with 'p_inverse' the
    coordinates take p-th roots first.  Columns are the images of the basis
    vectors.
    """

    __slots__ = ("field", "dim", "matrix", "twist", "basis_label")

    def __init__(self, field: FieldSpec, matrix, twist, basis_label=""):
        if twist not in ("p", "p_inverse"):
            raise ValueError(f"bad twist {twist!r}")
        dim = len(matrix)
        for row in matrix:
            if len(row) != dim:
                raise InconsistentBasis("matrix is not square")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "matrix", tuple(tuple(r) for r in matrix))
        object.__setattr__(self, "twist", twist)
        object.__setattr__(self, "basis_label", basis_label)

    def __setattr__(self, *a):
        raise AttributeError("SemilinearMap is immutable")

    @classmethod
    def from_columns(cls, field, columns, twist, basis_label=""):
        dim = len(columns)
        zero = field.zero()
        matrix = [[columns[j][i] if i < len(columns[j]) else zero
                   for j in range(dim)] for i in range(dim)]
        return cls(field, matrix, twist, basis_label)

    def _twist_vec(self, vec):
        if self.twist == "p":
            return [x.frobenius() for x in vec]
        return [x.pth_root() for x in vec]

    def apply(self, vec):
        """Image of a coordinate vector under the semilinear map."""
        tv = self._twist_vec([self.field.element(x) for x in vec])
        out = []
        for row in self.matrix:
            acc = self.field.zero()
            for a, v in zip(row, tv):
                if a and v:
                    acc = acc + a * v
            out.append(acc)
        return out

    def rank(self) -> int:
        return rank(self.matrix)

    def a_number(self) -> int:
        """dim ker of one application = g - rank."""
        return self.dim - self.rank()

    def stable_rank(self) -> int:
        """Rank of the g-fold twisted product A^(p^{g-1}) ... A^(p) A.

        Computed iteratively; the rank chain is monotone, so the loop stops
        as soon as two consecutive ranks agree, which the theory guarantees
        happens within g steps.
        """
        if self.twist != "p":
            raise ValueError("stable rank is defined for twist 'p'")
        if self.dim == 0:
            return 0
        product = [list(r) for r in self.matrix]
        twisted = self.matrix
        r = rank(product)
        for _ in range(self.dim):
            if r == 0:
                return 0
            twisted = tuple(tuple(x.frobenius() for x in row) for row in twisted)
            product = matmul(product, twisted)
            r_next = rank(product)
            if r_next == r:
                return r
            assert r_next < r
            r = r_next
        return r  # pragma: no cover - chain always stabilizes within dim steps

    def iterated_image_dim(self, steps=None) -> int:
        """dim of F^steps(V) by repeatedly twisting and mapping a spanning
        set; cross-checks stable_rank."""
        steps = self.dim if steps is None else steps
        zero, one = self.field.zero(), self.field.one()
        span = [[one if i == j else zero for j in range(self.dim)]
                for i in range(self.dim)]
        for _ in range(steps):
            span = [self.apply(v) for v in span]
            reduced, pivots = rref(span, self.dim, self.field)
            span = reduced
            if not span:
                return 0
        return len(span)

    def to_json(self):
        return {
            "dim": self.dim,
            "twist": self.twist,
            "basis": self.basis_label,
            "matrix": [[str(x) for x in row] for row in self.matrix],
        }

    def __repr__(self):
        return (f"SemilinearMap(dim={self.dim}, twist={self.twist!r}, "
                f"basis={self.basis_label!r})")


def semilinear_matrix(basis: DualBasis, image_of, twist, field,
                      basis_label="") -> SemilinearMap:
    """Assemble the map whose column j is image_of(j), a CohomologyClass on
    the same DualBasis."""
    g = len(basis)
    columns = []
    for j in range(g):
        img = image_of(j)
        if img.basis != basis:
            raise InconsistentBasis(f"image {j} lies on a different basis")
        columns.append(img.vector(field))
    return SemilinearMap.from_columns(field, columns, twist, basis_label)


def stable_rank(m: SemilinearMap) -> int:
    return m.stable_rank()


def a_number(m: SemilinearMap) -> int:
    return m.a_number()
