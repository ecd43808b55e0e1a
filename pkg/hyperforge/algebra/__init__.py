"""
Exact big-bracket calculus for Lie algebroids and epsilon-hypersymplectic structures
"""

from .coeff import RatFunc, poly_parse, partial_derivative
from .matrix import CoeffMatrix, matrix_inverse, determinant
from .superalgebra import (
    GeneratorSet,
    SuperMonomial,
    Bidegree,
    SuperElem,
    super_mul,
    big_bracket,
    bidegree_components,
)
from .conventions import fingerprint, current_constants, verify_calibration
from .algebroid import (
    AlgebroidSpec,
    Mu,
    Form,
    MultiVector,
    Section,
    ValuedForm,
    EndoTensor,
    build_mu,
    check_jacobi,
    lie_bracket,
    lie_derivative,
    anchor_apply,
    differential,
    schouten,
    dual_bracket,
    deform_by_endo,
    deform_twice,
    deform_by_bivector,
    torsion,
    concomitant,
    evaluate,
    insertion,
    frolicher_nijenhuis,
    contract_bivector,
    lemma_ksr_check,
)
from .catalog import r4_forms, abelian_spec, tangent_spec, so3_spec
from .hyperstruct import (
    SymplecticTriple,
    EpsilonSignature,
    MetricG,
    StructClass,
    ClassificationReport,
    build_triple,
    epsilon_signature,
    metric_g,
    check_structure_relations,
    is_p_omega,
    is_omega_n,
    is_pn,
    poisson_compatible,
    nijenhuis_compatible,
    induced_structures,
    positive_product_checks,
    compatibility_checks,
    classify,
    to_hyperkahler,
    from_hyperkahler,
    signature_at_point,
)
from .search import SearchResult, search_positive_product
from .document import InputDocument, load_document, parse_document

__all__ = [
    # Coefficients
    "RatFunc",
    "poly_parse",
    "partial_derivative",
    "CoeffMatrix",
    "matrix_inverse",
    "determinant",

    # Superalgebra
    "GeneratorSet",
    "SuperMonomial",
    "Bidegree",
    "SuperElem",
    "super_mul",
    "big_bracket",
    "bidegree_components",

    # Conventions
    "fingerprint",
    "current_constants",
    "verify_calibration",

    # Algebroids
    "AlgebroidSpec",
    "Mu",
    "Form",
    "MultiVector",
    "Section",
    "ValuedForm",
    "EndoTensor",
    "build_mu",
    "check_jacobi",
    "lie_bracket",
    "lie_derivative",
    "anchor_apply",
    "differential",
    "schouten",
    "dual_bracket",
    "deform_by_endo",
    "deform_twice",
    "deform_by_bivector",
    "torsion",
    "concomitant",
    "evaluate",
    "insertion",
    "frolicher_nijenhuis",
    "contract_bivector",
    "lemma_ksr_check",
    "r4_forms",
    "abelian_spec",
    "tangent_spec",
    "so3_spec",

    # Hypersymplectic structures
    "SymplecticTriple",
    "EpsilonSignature",
    "MetricG",
    "StructClass",
    "ClassificationReport",
    "build_triple",
    "epsilon_signature",
    "metric_g",
    "check_structure_relations",
    "is_p_omega",
    "is_omega_n",
    "is_pn",
    "poisson_compatible",
    "nijenhuis_compatible",
    "induced_structures",
    "positive_product_checks",
    "compatibility_checks",
    "classify",
    "to_hyperkahler",
    "from_hyperkahler",
    "signature_at_point",
    "SearchResult",
    "search_positive_product",

    # Input documents
    "InputDocument",
    "load_document",
    "parse_document",
]
