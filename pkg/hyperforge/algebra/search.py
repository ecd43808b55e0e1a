"""
Search for a triple of constant symplectic forms on T R^4 with e1e2e3 = +1

Phase one sweeps ordered triples (repetition allowed) of the signed six-form
basis, skipping triples whose transition tensors are all +-Id. Phase two draws,
with a seeded generator, commuting pairs of model endomorphisms conjugated by a
random small-integer frame, until the budget runs out.
"""

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from ..common.config import DEFAULT_SEARCH_BUDGET, DEFAULT_SEARCH_SEED, SEARCH_ENTRY_RANGE
from ..common.errors import PreconditionError, SingularMatrixError
from .algebroid import build_mu
from .catalog import R4_VARIABLES, r4_forms, tangent_spec
from .hyperstruct import SymplecticTriple, build_triple
from .matrix import CoeffMatrix

PHASE_STRUCTURED = "structured"
PHASE_RANDOM = "random"


@dataclass
class SearchResult:
    found: bool
    examined: int
    phase: Optional[str] = None
    names: Tuple[str, ...] = ()
    matrices: List[CoeffMatrix] = field(default_factory=list)
    epsilon: Optional[Tuple[int, int, int]] = None

    def triple(self) -> SymplecticTriple:
        """The hit as a SymplecticTriple over T R^4"""
        if not self.found:
            raise PreconditionError("search found no triple")
        return build_triple(build_mu(tangent_spec(R4_VARIABLES)), *self.matrices, names=self.names)

    def to_dict(self) -> Dict[str, object]:
        return {
            "found": self.found,
            "examined": self.examined,
            "phase": self.phase,
            "triple": list(self.names),
            "epsilon": list(self.epsilon) if self.epsilon else None,
            "forms": {name: W.to_strings() for name, W in zip(self.names, self.matrices)},
        }


def _signature(matrices: Sequence[CoeffMatrix], inverses: Sequence[CoeffMatrix]):
    """(eps, trivial) of a triple given W_i and W_i^-1"""
    d = matrices[0].rows
    identity = CoeffMatrix.identity(d, matrices[0].variables)
    tensors = [inverses[(i + 2) % 3].T @ matrices[(i + 1) % 3].T for i in range(3)]
    trivial = all(N == identity or N == -identity for N in tensors)
    eps = []
    for N in tensors:
        square = N @ N
        if square == identity:
            eps.append(1)
        elif square == -identity:
            eps.append(-1)
        else:
            return None, trivial
    return tuple(eps), trivial


def signed_basis() -> List[Tuple[str, CoeffMatrix]]:
    out = []
    for name, W in r4_forms().items():
        out.append((name, W))
        out.append((f"-{name}", -W))
    return out


def _structured_sweep() -> Tuple[int, Optional[SearchResult]]:
    basis = signed_basis()
    inverses = {name: W.inverse() for name, W in basis}
    examined = 0
    for picks in product(basis, repeat=3):
        names = tuple(name for name, _ in picks)
        matrices = [W for _, W in picks]
        eps, trivial = _signature(matrices, [inverses[name] for name in names])
        if trivial:
            continue
        examined += 1
        if eps is not None and eps[0] * eps[1] * eps[2] == 1:
            return examined, SearchResult(True, examined, PHASE_STRUCTURED, names, matrices, eps)
    return examined, None


MODEL_ENDOMORPHISMS = (
    [[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]],
    [[-1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]],
    [[0, 0, 0, -1], [0, 0, 1, 0], [0, -1, 0, 0], [1, 0, 0, 0]],
    [[0, 0, 0, 1], [0, 0, -1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]],
    [[0, 0, 0, -1], [0, 0, 1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]],
    [[0, 0, 0, 1], [0, 0, -1, 0], [0, -1, 0, 0], [1, 0, 0, 0]],
)


def commuting_pairs() -> List[Tuple[CoeffMatrix, CoeffMatrix]]:
    """
    Ordered pairs (K, M) of commuting endomorphisms of R^4, each squaring to
    +-Id and self-adjoint for omega1, not both +-Id
    """
    omega1 = r4_forms()["omega1"]
    identity = CoeffMatrix.identity(4, R4_VARIABLES)
    family = [identity, -identity]
    for rows in MODEL_ENDOMORPHISMS:
        M = CoeffMatrix(rows, R4_VARIABLES)
        square = M @ M
        if (omega1 @ M).is_antisymmetric() and (square == identity or square == -identity):
            family.append(M)
    scalar = family[:2]
    return [
        (K, M) for K in family for M in family
        if K @ M == M @ K and not (K in scalar and M in scalar)
    ]


def _random_frame(rng: random.Random) -> CoeffMatrix:
    rows = [[rng.randint(-SEARCH_ENTRY_RANGE, SEARCH_ENTRY_RANGE) for _ in range(4)] for _ in range(4)]
    return CoeffMatrix(rows, R4_VARIABLES)


def _random_sweep(budget: int, seed: int, examined: int) -> SearchResult:
    """
    Each draw picks a pair (K, M) and a frame P. With w1 = P^T omega1_flat P
    the forms w3 = w1 M' and w2 = w3 K' (primes: conjugation by P) give
    N1 = K', N2 = M' and N3 = (M'K')^-1.
    """
    rng = random.Random(seed)
    pairs = commuting_pairs()
    omega1_flat = r4_forms()["omega1"].T
    while examined < budget:
        K, M = rng.choice(pairs)
        P = _random_frame(rng)
        examined += 1
        try:
            P_inv = P.inverse()
        except SingularMatrixError:
            continue
        w1 = P.T @ omega1_flat @ P
        w3 = w1 @ (P_inv @ M @ P)
        w2 = w3 @ (P_inv @ K @ P)
        matrices = [w1.T, w2.T, w3.T]
        eps, trivial = _signature(matrices, [W.inverse() for W in matrices])
        if trivial or eps is None:
            continue
        if eps[0] * eps[1] * eps[2] == 1:
            names = ("W1", "W2", "W3")
            return SearchResult(True, examined, PHASE_RANDOM, names, matrices, eps)
    return SearchResult(False, examined)


def search_positive_product(budget: int = DEFAULT_SEARCH_BUDGET, seed: int = DEFAULT_SEARCH_SEED,
                            structured: bool = True) -> SearchResult:
    """First triple with e1e2e3 = +1, or a not-found result after ``budget`` candidates"""
    examined = 0
    if structured:
        examined, hit = _structured_sweep()
        if hit is not None:
            return hit
    return _random_sweep(budget, seed, examined)
