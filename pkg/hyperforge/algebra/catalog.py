"""
Standard algebroids and the six-form basis on T R^4
"""

from collections import OrderedDict
from typing import Dict, Sequence, Tuple

from .algebroid import AlgebroidSpec
from .matrix import CoeffMatrix

R4_VARIABLES = ("x", "y", "p", "q")

# Upper-triangular entries (1-based) of the six constant symplectic forms:
#   omega1 = dx^dp + dy^dq     omega4 = dx^dp - dy^dq
#   omega2 = dx^dq - dy^dp     omega5 = dx^dq + dy^dp
#   omega3 = dx^dy - dp^dq     omega6 = dx^dy + dp^dq
R4_UPPER_ENTRIES = OrderedDict([
    ("omega1", {(1, 3): 1, (2, 4): 1}),
    ("omega2", {(1, 4): 1, (2, 3): -1}),
    ("omega3", {(1, 2): 1, (3, 4): -1}),
    ("omega4", {(1, 3): 1, (2, 4): -1}),
    ("omega5", {(1, 4): 1, (2, 3): 1}),
    ("omega6", {(1, 2): 1, (3, 4): 1}),
])

HYPERSYMPLECTIC_R4_TRIPLES = (("omega1", "omega2", "omega3"), ("omega4", "omega5", "omega6"))


def antisymmetric_from_upper(d: int, upper: Dict[Tuple[int, int], object], variables: Sequence[str]) -> CoeffMatrix:
    """Antisymmetric matrix from 1-based (i, j), i < j entries"""
    rows = [[0] * d for _ in range(d)]
    for (i, j), value in upper.items():
        rows[i - 1][j - 1] = value
        rows[j - 1][i - 1] = f"-({value})" if isinstance(value, str) else -value
    return CoeffMatrix(rows, variables)


def r4_forms() -> "OrderedDict[str, CoeffMatrix]":
    """The six forms omega1..omega6 as 4x4 matrices over (x, y, p, q)"""
    return OrderedDict(
        (name, antisymmetric_from_upper(4, upper, R4_VARIABLES)) for name, upper in R4_UPPER_ENTRIES.items()
    )


def abelian_spec(n: int, d: int, variables: Sequence[str] = None) -> AlgebroidSpec:
    """rho = 0, c = 0"""
    variables = tuple(variables) if variables is not None else tuple(f"x{i + 1}" for i in range(n))
    anchor = CoeffMatrix.zeros(n, d, variables) if n else None
    return AlgebroidSpec(n, d, variables, anchor, {}, name="abelian")


def tangent_spec(variables: Sequence[str]) -> AlgebroidSpec:
    """T R^n with rho = Id and c = 0"""
    variables = tuple(variables)
    n = len(variables)
    return AlgebroidSpec(n, n, variables, CoeffMatrix.identity(n, variables), {}, name=f"T R^{n}")


def so3_spec(broken: bool = False) -> AlgebroidSpec:
    """
    so(3) over a point: c^c_{ab} = sign of (a, b, c)

    ``broken`` adds c^1_{12} = 1, so [[e1,e2],e3] + cyclic = -e2.
    """
    structure = {(0, 1, 2): 1, (1, 2, 0): 1, (0, 2, 1): -1}
    if broken:
        structure[(0, 1, 0)] = 1
    return AlgebroidSpec(0, 3, (), None, structure, name="so(3)" + (" broken" if broken else ""))
