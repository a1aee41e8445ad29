"""Exact p-rank and a-number computations for projective curves in
characteristic p: Hasse-Witt and Cartier-Manin matrices on monomial
cohomology bases, generalized Fermat complete intersections, and the
singular-curve / smooth-model bookkeeping."""

from . import errors
from .cohomology import (
    CohomologyClass,
    DualBasis,
    SemilinearMap,
    a_number,
    dual_basis,
    semilinear_matrix,
    stable_rank,
)
from .fermat import (
    FermatSpec,
    explicit_basis,
    binom_identity,
    complete_intersection_h,
    basis_tuples,
    vanishing_tuples,
    fermat_invariants,
    frobenius_matrix,
    genericity,
    genus,
    h1_dim,
    kernel_basis,
)
from .gf import FieldElement, FieldSpec, field_create, frobenius, pth_root
from .jacobian import (
    JacobianDecomposition,
    SingularityDatum,
    decompose,
    singular_fermat_preset,
    smooth_model_invariants,
)
from .parser import parse_poly
from .planecurve import (
    LaurentSeries,
    PlaneCurveSpec,
    cartier_manin,
    formal_cartier,
    hasse_witt,
    invariants,
    residue_duality_check,
)
from .poly import MultiPoly, PolyRing

__version__ = "0.1.0"

__all__ = [
    "CohomologyClass", "DualBasis", "FermatSpec", "FieldElement", "FieldSpec",
    "JacobianDecomposition", "LaurentSeries", "MultiPoly", "PlaneCurveSpec",
    "PolyRing", "SemilinearMap", "SingularityDatum", "a_number",
    "explicit_basis", "binom_identity", "cartier_manin",
    "complete_intersection_h", "decompose", "dual_basis", "basis_tuples",
    "vanishing_tuples", "errors", "fermat_invariants", "field_create",
    "formal_cartier", "frobenius", "frobenius_matrix", "genericity", "genus",
    "h1_dim", "hasse_witt", "invariants", "kernel_basis", "parse_poly",
    "pth_root", "residue_duality_check", "semilinear_matrix",
    "singular_fermat_preset", "smooth_model_invariants", "stable_rank",
]
