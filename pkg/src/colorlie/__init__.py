"""Exact-arithmetic computations with basic simple Z2xZ2-graded color Lie
algebras: structure constants, Killing form, root systems, enhanced Dynkin
diagrams, and finite-dimensional representation theory over Q(i)."""

from .algebra import (
    AxiomReport,
    GradedAlgebra,
    MatrixRealization,
    check_axioms,
    from_matrices,
    gl_graded,
    graded_simplicity_probe,
    is_basic,
    killing_form,
    killing_radical,
)
from .errors import ColorLieError
from .families import Fixture, SoParams, fixture_so4211, fixture_so4222, so_pqrs
from .grading import DEGREES, ZERO_DEGREE, degree_add, degree_pairing
from .reps import (
    IrreducibleComponent,
    Representation,
    adjoint_representation,
    casimir_eigenvalue_formula,
    casimir_matrix,
    decompose,
    defining_representation,
    direct_sum_rep,
    grading_synthesis,
    highest_weight_vectors,
    is_representation,
    tensor_product,
    trivial_representation,
    weight_decomposition,
)
from .roots import (
    CartanSubalgebra,
    EnhancedDynkin,
    RootSystem,
    enhanced_dynkin,
    find_cartan,
    is_self_centralizing,
    positive_and_simple,
    root_decomposition,
    root_degree,
    root_string,
    sl2_triplet,
    validate_cartan,
    weyl_group,
)
from .scalars import GQ

__all__ = [
    "AxiomReport",
    "CartanSubalgebra",
    "ColorLieError",
    "DEGREES",
    "EnhancedDynkin",
    "Fixture",
    "GQ",
    "GradedAlgebra",
    "IrreducibleComponent",
    "MatrixRealization",
    "Representation",
    "RootSystem",
    "SoParams",
    "ZERO_DEGREE",
    "adjoint_representation",
    "casimir_eigenvalue_formula",
    "casimir_matrix",
    "check_axioms",
    "decompose",
    "defining_representation",
    "degree_add",
    "degree_pairing",
    "direct_sum_rep",
    "enhanced_dynkin",
    "find_cartan",
    "fixture_so4211",
    "fixture_so4222",
    "from_matrices",
    "gl_graded",
    "graded_simplicity_probe",
    "grading_synthesis",
    "highest_weight_vectors",
    "is_basic",
    "is_representation",
    "is_self_centralizing",
    "killing_form",
    "killing_radical",
    "positive_and_simple",
    "root_decomposition",
    "root_degree",
    "root_string",
    "sl2_triplet",
    "so_pqrs",
    "tensor_product",
    "trivial_representation",
    "validate_cartan",
    "weight_decomposition",
    "weyl_group",
]
