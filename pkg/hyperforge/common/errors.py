"""
Exception hierarchy for hyperforge

Input problems (bad files, bad expressions) derive from InputError and map to
exit code 2; mathematical failures derive from MathError and map to exit code 1.
"""

from typing import Optional


class HyperforgeError(Exception):
    """Base class for every error raised by hyperforge"""

    exit_code = 1


class InputError(HyperforgeError):
    """The user supplied something that cannot be read or understood"""

    exit_code = 2


class ExpressionSyntaxError(InputError):
    """Malformed coefficient expression"""

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")

    def pointer(self) -> str:
        """Two-line rendering with a caret under the offending character"""
        return f"{self.text}\n{' ' * self.position}^"


class UnknownVariableError(InputError):
    """Name not declared among the base coordinates"""

    def __init__(self, name: str, variables=()):
        self.name = name
        self.variables = tuple(variables)
        declared = ", ".join(self.variables) or "none"
        super().__init__(f"unknown variable '{name}' (declared: {declared})")


class DivisionByZeroError(InputError):
    """Division by the zero rational function"""


class InputDocumentError(InputError):
    """The input document is structurally invalid"""


class UnknownFormError(InputError):
    """A --triple member does not name a declared form"""


class MathError(HyperforgeError):
    """A mathematical precondition or identity failed"""

    exit_code = 1


class SingularMatrixError(MathError):
    """Matrix determinant is the zero rational function"""


class ShapeMismatchError(MathError):
    """Incompatible matrix or tensor shapes"""


class GeneratorMismatchError(MathError):
    """Operands live over different generator sets or coordinate lists"""


class DegreeUnderflowError(MathError):
    """Insertion into a form of degree 0"""


class UnsupportedDegreeError(MathError):
    """Valued-form degree outside the supported range"""


class EvaluationError(MathError):
    """A rational function cannot be evaluated at the requested point"""


class PreconditionError(MathError):
    """Operation called outside its domain of definition"""


class ConventionMismatchError(MathError):
    """Two computation paths that must agree did not"""


class JacobiError(MathError):
    """{mu, mu} is not zero, so mu does not define a Lie algebroid"""

    check = "{mu, mu} = 0"

    def __init__(self, source: str = "mu"):
        self.source = source
        super().__init__(f"{source} fails {self.check}: not a Lie algebroid")


class _IndexedFormError(MathError):
    def __init__(self, index: int, name: Optional[str] = None, reason: str = ""):
        self.index = index
        self.name = name
        label = name or f"omega{index}"
        super().__init__(f"{label} (slot {index}) {reason}".strip())


class NotClosedError(_IndexedFormError):
    """d(omega_i) is not identically zero"""

    def __init__(self, index: int, name: Optional[str] = None):
        super().__init__(index, name, "is not closed")


class DegenerateFormError(_IndexedFormError):
    """omega_i has zero determinant"""

    def __init__(self, index: int, name: Optional[str] = None):
        super().__init__(index, name, "is degenerate")


class NotAntisymmetricError(_IndexedFormError):
    """Component matrix of a 2-form is not antisymmetric"""

    def __init__(self, index: int, name: Optional[str] = None):
        super().__init__(index, name, "is not antisymmetric")
