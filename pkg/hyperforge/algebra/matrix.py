"""
Dense matrices over the rational-function field

Ranks in this package are small, so matrices are dense tuples of RatFunc rows.
Inversion is Gauss-Jordan elimination over the field; determinants use the
fraction-free Bareiss recurrence with row pivoting.
"""

from fractions import Fraction
from typing import Callable, Iterable, List, Mapping, Sequence, Tuple, Union

from ..common.errors import GeneratorMismatchError, ShapeMismatchError, SingularMatrixError
from .coeff import RatFunc, Scalar, poly_parse

Entry = Union[RatFunc, int, Fraction, str]


class CoeffMatrix:
    """Immutable rows x cols grid of RatFunc entries"""

    __slots__ = ("variables", "rows", "cols", "_entries", "_hash")

    def __init__(self, entries: Sequence[Sequence[Entry]], variables: Sequence[str]):
        self.variables = tuple(variables)
        grid = tuple(tuple(_as_ratfunc(value, self.variables) for value in row) for row in entries)
        if not grid or not grid[0]:
            raise ShapeMismatchError("a matrix needs at least one row and one column")
        width = len(grid[0])
        if any(len(row) != width for row in grid):
            raise ShapeMismatchError("ragged rows in matrix")
        self.rows = len(grid)
        self.cols = width
        self._entries = grid
        self._hash = None

    # Constructors

    @classmethod
    def identity(cls, n: int, variables: Sequence[str]) -> "CoeffMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], variables)

    @classmethod
    def zeros(cls, rows: int, cols: int, variables: Sequence[str]) -> "CoeffMatrix":
        return cls([[0] * cols for _ in range(rows)], variables)

    @classmethod
    def from_function(cls, rows: int, cols: int, func: Callable[[int, int], Entry],
                      variables: Sequence[str]) -> "CoeffMatrix":
        return cls([[func(i, j) for j in range(cols)] for i in range(rows)], variables)

    @classmethod
    def parse(cls, rows: Sequence[Sequence[str]], variables: Sequence[str]) -> "CoeffMatrix":
        """Build from a grid of expression strings"""
        return cls([[poly_parse(str(cell), variables) for cell in row] for row in rows], variables)

    # Access

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: Tuple[int, int]) -> RatFunc:
        i, j = index
        return self._entries[i][j]

    def row(self, i: int) -> Tuple[RatFunc, ...]:
        return self._entries[i]

    def column(self, j: int) -> Tuple[RatFunc, ...]:
        return tuple(row[j] for row in self._entries)

    def to_rows(self) -> Tuple[Tuple[RatFunc, ...], ...]:
        return self._entries

    def to_strings(self) -> List[List[str]]:
        return [[entry.to_expression() for entry in row] for row in self._entries]

    # Arithmetic

    def _check_same_shape(self, other: "CoeffMatrix"):
        if self.shape != other.shape:
            raise ShapeMismatchError(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: "CoeffMatrix") -> "CoeffMatrix":
        self._check_same_shape(other)
        return CoeffMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._entries, other._entries)],
            self.variables,
        )

    def __sub__(self, other: "CoeffMatrix") -> "CoeffMatrix":
        self._check_same_shape(other)
        return CoeffMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self._entries, other._entries)],
            self.variables,
        )

    def __neg__(self) -> "CoeffMatrix":
        return self.scale(-1)

    def scale(self, factor: Union[RatFunc, Scalar]) -> "CoeffMatrix":
        return CoeffMatrix([[entry * factor for entry in row] for row in self._entries], self.variables)

    def __mul__(self, factor):
        if isinstance(factor, CoeffMatrix):
            return self @ factor
        return self.scale(factor)

    __rmul__ = scale

    def __matmul__(self, other: "CoeffMatrix") -> "CoeffMatrix":
        if self.cols != other.rows:
            raise ShapeMismatchError(f"cannot multiply {self.shape} by {other.shape}")
        columns = [other.column(j) for j in range(other.cols)]
        product = []
        for row in self._entries:
            out = []
            for col in columns:
                total = RatFunc.zero(self.variables)
                for a, b in zip(row, col):
                    if a and b:
                        total = total + a * b
                out.append(total)
            product.append(out)
        return CoeffMatrix(product, self.variables)

    def apply(self, vector: Sequence[RatFunc]) -> Tuple[RatFunc, ...]:
        """Matrix times column vector"""
        if len(vector) != self.cols:
            raise ShapeMismatchError(f"vector of length {len(vector)} for {self.shape} matrix")
        result = []
        for row in self._entries:
            total = RatFunc.zero(self.variables)
            for a, b in zip(row, vector):
                if a and b:
                    total = total + a * b
            result.append(total)
        return tuple(result)

    def transpose(self) -> "CoeffMatrix":
        return CoeffMatrix([list(col) for col in zip(*self._entries)], self.variables)

    @property
    def T(self) -> "CoeffMatrix":
        return self.transpose()

    # Predicates

    def is_zero(self) -> bool:
        return all(entry.is_zero for row in self._entries for entry in row)

    def is_antisymmetric(self) -> bool:
        if not self.is_square:
            return False
        return all(
            self[i, j] == -self[j, i] for i in range(self.rows) for j in range(i, self.cols)
        )

    def is_symmetric(self) -> bool:
        if not self.is_square:
            return False
        return all(self[i, j] == self[j, i] for i in range(self.rows) for j in range(i + 1, self.cols))

    def is_scalar(self, value: Scalar) -> bool:
        """True iff self == value * Id"""
        if not self.is_square:
            return False
        for i in range(self.rows):
            for j in range(self.cols):
                expected = value if i == j else 0
                if self[i, j] != expected:
                    return False
        return True

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoeffMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._entries)
        return self._hash

    # Field operations

    def determinant(self) -> RatFunc:
        """Bareiss fraction-free elimination"""
        if not self.is_square:
            raise ShapeMismatchError(f"determinant of non-square {self.shape} matrix")
        n = self.rows
        m = [list(row) for row in self._entries]
        sign = 1
        previous = RatFunc.one(self.variables)
        for k in range(n - 1):
            if m[k][k].is_zero:
                pivot = next((r for r in range(k + 1, n) if not m[r][k].is_zero), None)
                if pivot is None:
                    return RatFunc.zero(self.variables)
                m[k], m[pivot] = m[pivot], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / previous
            previous = m[k][k]
        det = m[n - 1][n - 1]
        return det if sign == 1 else -det

    def inverse(self) -> "CoeffMatrix":
        """Gauss-Jordan elimination over the rational-function field"""
        if not self.is_square:
            raise ShapeMismatchError(f"inverse of non-square {self.shape} matrix")
        n = self.rows
        zero = RatFunc.zero(self.variables)
        one = RatFunc.one(self.variables)
        work = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(self._entries)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if not work[r][col].is_zero), None)
            if pivot is None:
                raise SingularMatrixError("matrix is singular (determinant is the zero rational function)")
            work[col], work[pivot] = work[pivot], work[col]
            inv_pivot = one / work[col][col]
            work[col] = [entry * inv_pivot for entry in work[col]]
            for r in range(n):
                if r != col and not work[r][col].is_zero:
                    factor = work[r][col]
                    work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
        return CoeffMatrix([row[n:] for row in work], self.variables)

    def evaluate(self, point: Union[Mapping[str, Scalar], Sequence[Scalar]]) -> List[List[Fraction]]:
        """Exact numeric matrix at a rational point"""
        return [[entry.evaluate(point) for entry in row] for row in self._entries]

    def __repr__(self) -> str:
        return f"CoeffMatrix({self.to_strings()!r})"


def _as_ratfunc(value: Entry, variables: Tuple[str, ...]) -> RatFunc:
    if isinstance(value, RatFunc):
        if value.variables != variables:
            raise GeneratorMismatchError(f"entry over {value.variables} in a matrix over {variables}")
        return value
    if isinstance(value, (int, Fraction)):
        return RatFunc.constant(value, variables)
    if isinstance(value, str):
        return poly_parse(value, variables)
    raise TypeError(f"cannot use {type(value).__name__} as a matrix entry")


def matrix_inverse(m: CoeffMatrix) -> CoeffMatrix:
    return m.inverse()


def determinant(m: CoeffMatrix) -> RatFunc:
    return m.determinant()


def stack_columns(columns: Iterable[Sequence[RatFunc]], variables: Sequence[str]) -> CoeffMatrix:
    """Matrix whose j-th column is the j-th vector"""
    columns = list(columns)
    return CoeffMatrix([list(row) for row in zip(*columns)], variables)
