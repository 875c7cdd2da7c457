"""Exact solutions of the constant classical Yang-Baxter equation on
low-dimensional Lie algebras, with Lie bialgebra structure decisions and
exhaustive finite-field cross-checks."""

from .bialgebra import (
    BialgebraReport,
    Cobracket,
    ad_action,
    bialgebra_check,
    check_coantisymmetry,
    check_cojacobi,
    check_compatibility,
    cobracket,
    coboundary_predicate,
    triangular_predicate,
)
from .exhaustive import (
    BudgetExceeded,
    EnumerationReport,
    candidate_count,
    decode_tensor,
    encode_tensor,
    enumerate_solutions,
    scan_solution_ids,
    verify_classification,
)
from .liealg import (
    LieAlgebra,
    abelian,
    check_jacobi,
    family_i,
    family_ii,
    family_iii,
    family_iv,
    family_v,
    family_vi,
    from_constants,
    heisenberg,
    make_family,
    sl2,
    solvable_table,
)
from .scalars import (
    QQ,
    FieldError,
    ModP,
    PrimeField,
    RationalField,
    make_field,
    parse_scalar,
)
from .solve import (
    GENERATOR_CASES,
    ResidualReport,
    SideConditionError,
    SolutionLabel,
    UncoveredRegime,
    classify_solution,
    covered_label_predicates,
    cybe_residual,
    family_equations,
    generate_solution,
    is_cybe_solution,
    recognize_table,
    solvable_zero_cells,
)
from .tensor import (
    Tensor2,
    Tensor3,
    change_basis,
    cycle_xi,
    determinant,
    is_alpha_beta_skew,
    is_skew_symmetric,
    is_strongly_symmetric,
    is_symmetric,
    strongly_symmetric_reduced,
    symmetry_flags,
    twist_tau,
)

__version__ = "0.1.0"

__all__ = [
    "GENERATOR_CASES",
    "QQ",
    "BialgebraReport",
    "BudgetExceeded",
    "Cobracket",
    "EnumerationReport",
    "FieldError",
    "LieAlgebra",
    "ModP",
    "PrimeField",
    "RationalField",
    "ResidualReport",
    "SideConditionError",
    "SolutionLabel",
    "Tensor2",
    "Tensor3",
    "UncoveredRegime",
    "abelian",
    "ad_action",
    "bialgebra_check",
    "candidate_count",
    "change_basis",
    "check_coantisymmetry",
    "check_cojacobi",
    "check_compatibility",
    "check_jacobi",
    "classify_solution",
    "covered_label_predicates",
    "cobracket",
    "coboundary_predicate",
    "cybe_residual",
    "cycle_xi",
    "determinant",
    "decode_tensor",
    "encode_tensor",
    "enumerate_solutions",
    "family_equations",
    "family_i",
    "family_ii",
    "family_iii",
    "family_iv",
    "family_v",
    "family_vi",
    "from_constants",
    "generate_solution",
    "heisenberg",
    "is_alpha_beta_skew",
    "is_cybe_solution",
    "is_skew_symmetric",
    "is_strongly_symmetric",
    "is_symmetric",
    "make_family",
    "make_field",
    "parse_scalar",
    "recognize_table",
    "scan_solution_ids",
    "sl2",
    "solvable_table",
    "solvable_zero_cells",
    "strongly_symmetric_reduced",
    "symmetry_flags",
    "triangular_predicate",
    "twist_tau",
    "verify_classification",
]
