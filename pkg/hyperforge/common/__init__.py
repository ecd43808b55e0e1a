"""
Common utilities and shared resources for hyperforge

Console palette, configuration constants, the exception hierarchy, the worker
pool helper and report consolidation used by the CLI.
"""

from .colors import HYPERFORGE_COLORS, CLASS_STYLES
from .config import (
    TOOL_NAME,
    TOOL_VERSION,
    FIXTURES_DIR,
    REPORTS_DIR,
    DEFAULT_FIXTURE,
    THREADS_ENV_VAR,
    DEFAULT_THREADS,
    DEFAULT_SEARCH_BUDGET,
    DEFAULT_SEARCH_SEED,
    thread_limit,
)
from .errors import (
    HyperforgeError,
    InputError,
    MathError,
    ExpressionSyntaxError,
    UnknownVariableError,
    DivisionByZeroError,
    InputDocumentError,
    UnknownFormError,
    SingularMatrixError,
    ShapeMismatchError,
    GeneratorMismatchError,
    DegreeUnderflowError,
    UnsupportedDegreeError,
    EvaluationError,
    PreconditionError,
    ConventionMismatchError,
    JacobiError,
    NotClosedError,
    DegenerateFormError,
    NotAntisymmetricError,
)
from .utils import (
    console,
    err_console,
    CheckResult,
    failed_names,
    parallel_map,
    make_progress,
    create_checks_table,
    format_epsilon,
)
from .reports import ReportGenerator

__all__ = [
    # Colors
    "HYPERFORGE_COLORS",
    "CLASS_STYLES",

    # Configuration
    "TOOL_NAME",
    "TOOL_VERSION",
    "FIXTURES_DIR",
    "REPORTS_DIR",
    "DEFAULT_FIXTURE",
    "THREADS_ENV_VAR",
    "DEFAULT_THREADS",
    "DEFAULT_SEARCH_BUDGET",
    "DEFAULT_SEARCH_SEED",
    "thread_limit",

    # Errors
    "HyperforgeError",
    "InputError",
    "MathError",
    "ExpressionSyntaxError",
    "UnknownVariableError",
    "DivisionByZeroError",
    "InputDocumentError",
    "UnknownFormError",
    "SingularMatrixError",
    "ShapeMismatchError",
    "GeneratorMismatchError",
    "DegreeUnderflowError",
    "UnsupportedDegreeError",
    "EvaluationError",
    "PreconditionError",
    "ConventionMismatchError",
    "JacobiError",
    "NotClosedError",
    "DegenerateFormError",
    "NotAntisymmetricError",

    # Utilities
    "console",
    "err_console",
    "CheckResult",
    "failed_names",
    "parallel_map",
    "make_progress",
    "create_checks_table",
    "format_epsilon",

    # Reports
    "ReportGenerator",
]
