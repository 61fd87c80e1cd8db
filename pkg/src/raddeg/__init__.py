"""Exact-arithmetic representation theory of finite-dimensional algebras.

Radical filtrations of module categories, almost split sequences, and
degrees of irreducible morphisms, over GF(p), GF(p^k), and the rationals.
"""

__version__ = "0.1.0"

from .errors import (
    RaddegError,
    FieldError,
    DimensionMismatch,
    AssociativityViolation,
    UnitViolation,
    NotAdmissible,
    ResourceLimit,
    RepInfiniteSuspected,
    SearchExhausted,
    CertificationFailed,
)
from .fields import GF, QQ, parse_field
from .algebra import (
    Algebra,
    QuiverPresentation,
    from_path_algebra,
    from_structure_constants,
    jacobson_radical,
    opposite,
    primitive_idempotents,
    semisimple_quotient,
)
from .modules import (
    Module,
    Morphism,
    compose,
    decompose,
    direct_sum,
    dual_module,
    hom_basis,
    injective_indecomposables,
    is_isomorphic,
    projective_indecomposables,
    simple_modules,
)
from .catalogue import (
    Catalogue,
    completeness_check,
    load_catalogue,
    nakayama_catalogue,
    type_a_catalogue,
    validate_catalogue,
)
from .radical import IrrSpace, RadicalTable, build_radical_table
from .ar import (
    ARQuiver,
    AlmostSplitSequence,
    almost_split_sequence,
    ar_quiver,
    is_left_almost_split,
    is_right_almost_split,
    minimal_projective_presentation,
    tau,
    tau_inverse,
    transpose,
)
from .degrees import (
    Clause,
    DegreeReport,
    DegreeWitness,
    KernelGrading,
    KernelPath,
    TheoremReport,
    degree_kernel_equivalence_check,
    degree_shift_check,
    depth_graded_kernel_decomposition,
    find_kernel_path,
    finite_type_report,
    freely_irreducible_check,
    graded_kernel_sequence_report,
    kernel_comparison_check,
    kernel_iso_check,
    left_degree,
    mono_epi_degree_check,
    path_composition_report,
    right_degree,
    theorem_b_report,
)
from .fleet import full_fleet, path_catalogue, species_catalogue, \
    truncated_polynomial_catalogue

__all__ = [
    "RaddegError",
    "FieldError",
    "DimensionMismatch",
    "AssociativityViolation",
    "UnitViolation",
    "NotAdmissible",
    "ResourceLimit",
    "RepInfiniteSuspected",
    "SearchExhausted",
    "CertificationFailed",
    "GF",
    "QQ",
    "parse_field",
    "Algebra",
    "QuiverPresentation",
    "from_path_algebra",
    "from_structure_constants",
    "jacobson_radical",
    "opposite",
    "primitive_idempotents",
    "semisimple_quotient",
    "Module",
    "Morphism",
    "compose",
    "decompose",
    "direct_sum",
    "dual_module",
    "hom_basis",
    "injective_indecomposables",
    "is_isomorphic",
    "projective_indecomposables",
    "simple_modules",
    "Catalogue",
    "completeness_check",
    "load_catalogue",
    "nakayama_catalogue",
    "type_a_catalogue",
    "validate_catalogue",
    "IrrSpace",
    "RadicalTable",
    "build_radical_table",
    "ARQuiver",
    "AlmostSplitSequence",
    "almost_split_sequence",
    "ar_quiver",
    "is_left_almost_split",
    "is_right_almost_split",
    "minimal_projective_presentation",
    "tau",
    "tau_inverse",
    "transpose",
    "Clause",
    "DegreeReport",
    "DegreeWitness",
    "KernelGrading",
    "KernelPath",
    "TheoremReport",
    "degree_kernel_equivalence_check",
    "degree_shift_check",
    "depth_graded_kernel_decomposition",
    "find_kernel_path",
    "finite_type_report",
    "freely_irreducible_check",
    "graded_kernel_sequence_report",
    "kernel_comparison_check",
    "kernel_iso_check",
    "left_degree",
    "mono_epi_degree_check",
    "path_composition_report",
    "right_degree",
    "theorem_b_report",
    "full_fleet",
    "path_catalogue",
    "species_catalogue",
    "truncated_polynomial_catalogue",
]
