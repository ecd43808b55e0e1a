"""
hyperforge

Exact big-bracket calculus for Lie algebroids:
- rational-function coefficients and dense matrices
- the graded superalgebra and its big bracket
- algebroid brackets, differentials, deformations and torsion as derived brackets
- epsilon-hypersymplectic triples, their identity suites and classification
"""

__version__ = "1.0.0"
__author__ = "hyperforge contributors"

# Import common utilities
from .common import (
    HYPERFORGE_COLORS,
    HyperforgeError,
    InputError,
    MathError,
    CheckResult,
    ReportGenerator,
)

# Import the algebra layer
from .algebra import (
    RatFunc,
    CoeffMatrix,
    GeneratorSet,
    SuperElem,
    big_bracket,
    AlgebroidSpec,
    build_mu,
    build_triple,
    classify,
    load_document,
    search_positive_product,
    verify_calibration,
)

__all__ = [
    # Common utilities
    "HYPERFORGE_COLORS",
    "HyperforgeError",
    "InputError",
    "MathError",
    "CheckResult",
    "ReportGenerator",

    # Algebra
    "RatFunc",
    "CoeffMatrix",
    "GeneratorSet",
    "SuperElem",
    "big_bracket",
    "AlgebroidSpec",
    "build_mu",
    "build_triple",
    "classify",
    "load_document",
    "search_positive_product",
    "verify_calibration",
]
