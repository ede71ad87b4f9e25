"""Exact-arithmetic toolkit for Lie-Yamaguti algebras, their
representations and cohomology, relative Rota-Baxter operators on them, and
deformations of those operators. All computations are over the rationals."""

from .linalg import (
    Matrix,
    Rational,
    Vector,
    commutator,
    inverse,
    is_zero_vector,
    rank_kernel,
    rat,
    rat_str,
    solve_linear,
    vadd,
    vector,
    vneg,
    vscale,
    vsub,
    vzero,
)
from .structures import (
    AxiomReport,
    InvalidAlgebra,
    InvalidRepresentation,
    JacobiViolation,
    LYAlgebra,
    NotNijenhuis,
    Representation,
    Violation,
    adjoint_rep,
    check_lya,
    check_representation,
    d_map,
    deformed_brackets,
    lya_from_lie,
    nijenhuis_operator_check,
    semidirect,
    zero_rep,
)
from .complexes import (
    Cochain,
    CohomologySummary,
    ComplexContext,
    cochain_dim,
    coboundary,
    coboundary_matrix,
    cohomology_dims,
    wedge_basis,
)
from .rbo import (
    NotAutomorphism,
    NotIntertwining,
    RelRBO,
    UnverifiedOperator,
    Wedge2,
    check_rbo,
    conjugate_rbo,
    induced_lya_on_v,
    induced_rep_on_g,
    lift_to_nijenhuis,
    pre_ly_products,
    rbo_homomorphism_check,
)
from .rbo_cohomology import (
    RboComplex,
    rbo_coboundary_matrix,
    rbo_cohomology_dims,
    rbo_delta0,
    rbo_delta1_expanded,
)
from .deformation import (
    NijenhuisReport,
    NotLinearDeformation,
    NotNijenhuisElement,
    NotOrderN,
    ObstructionResult,
    RigidityProbe,
    TruncatedDeformation,
    equivalence_check_linear,
    extend_deformation,
    linear_deformation_check,
    nijenhuis_element_check,
    obstruction,
    order_n_check,
    pre_ly_deformation_terms,
    rigidity_probe,
    trivial_deformation_from,
)

__version__ = "0.1.0"

__all__ = [
    "Matrix", "Rational", "Vector", "commutator", "inverse", "is_zero_vector",
    "rank_kernel", "rat", "rat_str", "solve_linear", "vadd", "vector", "vneg",
    "vscale", "vsub", "vzero",
    "AxiomReport", "InvalidAlgebra", "InvalidRepresentation", "JacobiViolation",
    "LYAlgebra", "NotNijenhuis", "Representation", "Violation", "adjoint_rep",
    "check_lya", "check_representation", "d_map", "deformed_brackets",
    "lya_from_lie", "nijenhuis_operator_check", "semidirect", "zero_rep",
    "Cochain", "CohomologySummary", "ComplexContext", "cochain_dim",
    "coboundary", "coboundary_matrix", "cohomology_dims", "wedge_basis",
    "NotAutomorphism", "NotIntertwining", "RelRBO", "UnverifiedOperator",
    "Wedge2", "check_rbo", "conjugate_rbo", "induced_lya_on_v",
    "induced_rep_on_g", "lift_to_nijenhuis", "pre_ly_products",
    "rbo_homomorphism_check",
    "RboComplex", "rbo_coboundary_matrix", "rbo_cohomology_dims", "rbo_delta0",
    "rbo_delta1_expanded",
    "NijenhuisReport", "NotLinearDeformation", "NotNijenhuisElement",
    "NotOrderN", "ObstructionResult", "RigidityProbe", "TruncatedDeformation",
    "equivalence_check_linear", "extend_deformation", "linear_deformation_check",
    "nijenhuis_element_check", "obstruction", "order_n_check",
    "pre_ly_deformation_terms", "rigidity_probe", "trivial_deformation_from",
]
