"""Bookkeeping for the exact sequence 0 -> G -> J_{X'} -> J_X -> 0.

Singularity data of X' determine the affine group G (dimension = sum of
delta invariants, toric rank = sum of branches - 1) and hence how p-rank
and a-number transfer from a singular curve to its smooth model:
sigma(X) = sigma(X') - toric rank, a(X) >= a(X') - dim G_u.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InconsistentInvariants

ORDINARY = "ordinary_multiple_point"
CUSP = "cusp_z2_xr"
DIAGONAL = "diagonal_xm_ym"


@dataclass(frozen=True)
class SingularityDatum:
    """count points of one analytic type.

    ordinary_multiple_point: b >= 2 smooth branches, pairwise transverse
    cusp_z2_xr:              z^2 = x^r, r >= 3 odd, one branch
    diagonal_xm_ym:          x^m = y^m, m >= 2 distinct lines
    """

    kind: str
    param: int
    count: int = 1

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("count must be positive")
        if self.kind == ORDINARY:
            if self.param < 2:
                raise ValueError("an ordinary multiple point has >= 2 branches")
        elif self.kind == CUSP:
            if self.param < 3 or self.param % 2 == 0:
                raise ValueError("cusp exponent r must be odd and >= 3")
        elif self.kind == DIAGONAL:
            if self.param < 2:
                raise ValueError("diagonal singularity needs m >= 2")
        else:
            raise ValueError(f"unknown singularity kind {self.kind!r}")

    @property
    def delta(self):
        """Local genus drop per point."""
        if self.kind == ORDINARY:
            return self.param * (self.param - 1) // 2
        if self.kind == CUSP:
            return (self.param - 1) // 2
        return self.param * (self.param - 1) // 2

    @property
    def branches(self):
        if self.kind == CUSP:
            return 1
        return self.param


@dataclass(frozen=True)
class JacobianDecomposition:
    dim_g: int
    toric_rank: int
    unipotent_dim: int

    def __post_init__(self):
        if self.dim_g != self.toric_rank + self.unipotent_dim:
            raise InconsistentInvariants(
                "dim G must equal toric rank + unipotent dimension")

    def to_json(self):
        return {"dim_G": self.dim_g, "toric_rank": self.toric_rank,
                "unipotent_dim": self.unipotent_dim}


def decompose(data) -> JacobianDecomposition:
    """G from the singular points: dim G = sum of deltas, toric rank =
    sum (branches - 1), unipotent part is the difference."""
    dim_g = sum(d.count * d.delta for d in data)
    toric = sum(d.count * (d.branches - 1) for d in data)
    return JacobianDecomposition(dim_g, toric, dim_g - toric)


def smooth_model_invariants(pa, sigma_singular, a_singular,
                            d: JacobianDecomposition):
    """Invariants of the smooth model X from those of X'.

    g = pa - dim G, sigma = sigma' - toric rank; the a-number lower bound
    uses a(G_u) <= dim G_u, the weakest bound valid for every unipotent
    group.  Returns (g, sigma_smooth, a_lower_bound, ordinary).
    """
    if sigma_singular < d.toric_rank:
        raise InconsistentInvariants(
            f"sigma' = {sigma_singular} < toric rank {d.toric_rank}")
    if pa < d.dim_g:
        raise InconsistentInvariants(f"pa = {pa} < dim G = {d.dim_g}")
    g = pa - d.dim_g
    sigma = sigma_singular - d.toric_rank
    a_lower = max(0, a_singular - d.unipotent_dim)
    return g, sigma, a_lower, sigma == g


def chain_report(pa, sigma_singular, a_singular, data):
    """decompose + smooth_model_invariants as one JSON-friendly report."""
    d = decompose(data)
    g, sigma, a_lower, ordinary = smooth_model_invariants(
        pa, sigma_singular, a_singular, d)
    out = d.to_json()
    out.update({"pa": pa, "g": g, "sigma_smooth": sigma,
                "a_lower_bound": a_lower, "ordinary": ordinary, "flags": []})
    return out


def singular_fermat_preset(m, n):
    """The singular curve C^m(1, 1, l_2, ..., l_{n-2}) and its m^{n-2}
    diagonal x^m = y^m points, enumerated from the explicit point
    parameterization; gcd(p, m) = 1 is assumed by the geometry.

    Emits both the enumeration-based toric rank m^{n-2}(m-1) and the stated
    closed form (n-2)^m (m-1), flagging their disagreement instead of
    choosing a side.
    """
    if m < 2 or n < 3:
        raise ValueError("preset needs m >= 2 and n >= 3")
    points = []
    # one 2m-th root index i, one m-th root index per extra coordinate
    for i in range(1, m + 1):
        for tail in _index_tails(m, n - 3):
            points.append({"mu_index": i,
                           "root_indices": {j + 2: tail[j]
                                            for j in range(n - 3)}})
    count = len(points)
    assert count == m ** (n - 2)
    datum = SingularityDatum(DIAGONAL, m, count=count)
    decomposition = decompose([datum])
    toric_enumerated = count * (m - 1)
    toric_closed_form = (n - 2) ** m * (m - 1)
    flags = []
    if toric_enumerated != toric_closed_form:
        flags.append(
            f"toric rank disagreement: point enumeration gives "
            f"{toric_enumerated}, the closed form (n-2)^m(m-1) gives "
            f"{toric_closed_form}")
    if decomposition.unipotent_dim:
        flags.append(
            f"branches-1 model leaves unipotent dimension "
            f"{decomposition.unipotent_dim}; the claimed all-toric G has "
            f"dimension {toric_enumerated}")
    relations = [
        "a(X) = a(X')",
        f"sigma(X) = sigma(X') - {toric_enumerated}",
    ]
    return {
        "m": m, "n": n,
        "points": points,
        "point_count": count,
        "decomposition": decomposition,
        "toric_rank_enumerated": toric_enumerated,
        "toric_rank_closed_form": toric_closed_form,
        "relations": relations,
        "flags": flags,
    }


def _index_tails(m, length):
    if length == 0:
        yield ()
        return
    for head in range(1, m + 1):
        for rest in _index_tails(m, length - 1):
            yield (head,) + rest
