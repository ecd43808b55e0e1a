"""
Calibrated sign and normalization constants

Tensors are identified with elements of the superalgebra as

    forms           FORM_EMBEDDING          * sum_{I increasing} s_I xi^I
    multivectors    MULTIVECTOR_EMBEDDING   * sum_{I increasing} P^I theta_I
    A-valued forms  VALUED_FORM_EMBEDDING   * sum_{c, I increasing} K^c_I theta_c xi^I
    anchor part     ANCHOR_EMBEDDING        * sum rho^i_a p_i xi^a

(1,1)-tensors and the structure-function part of mu are A-valued forms. With
these values {Id, mu} = IDENTITY_MU_SCALAR * mu and {omega, pi} is
OMEGA_PI_BRACKET times the (1,1)-tensor pi#.omega_flat. The fingerprint hashes
the sorted NAME=value list; reports carry it so that output produced under a
different calibration is recognisable.
"""

import hashlib
from typing import Dict, List

from ..common.utils import CheckResult

FORM_EMBEDDING = 1
MULTIVECTOR_EMBEDDING = 1
VALUED_FORM_EMBEDDING = -1
ANCHOR_EMBEDDING = 1
IDENTITY_MU_SCALAR = 1
OMEGA_PI_BRACKET = 1

EXPECTED_FINGERPRINT = "a5cfae5b5e975747bdaa4646cc2de414e255a2d91a615f113fbf67d1bbddc140"


def current_constants() -> Dict[str, int]:
    return {
        "ANCHOR_EMBEDDING": ANCHOR_EMBEDDING,
        "FORM_EMBEDDING": FORM_EMBEDDING,
        "IDENTITY_MU_SCALAR": IDENTITY_MU_SCALAR,
        "MULTIVECTOR_EMBEDDING": MULTIVECTOR_EMBEDDING,
        "OMEGA_PI_BRACKET": OMEGA_PI_BRACKET,
        "VALUED_FORM_EMBEDDING": VALUED_FORM_EMBEDDING,
    }


def fingerprint(constants: Dict[str, int] = None) -> str:
    """SHA-256 of the sorted NAME=value pairs"""
    if constants is None:
        constants = current_constants()
    payload = ";".join(f"{name}={value}" for name, value in sorted(constants.items()))
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def verify_calibration(constants: Dict[str, int] = None) -> List[CheckResult]:
    """Re-derive every calibrated constant from the bracket and compare"""
    # deferred: the probes need the algebroid layer, which imports this module
    from .algebroid import (
        EndoTensor, Form, MultiVector, Section, anchor_apply, build_mu, lie_bracket, scalar_part,
        transition_tensor,
    )
    from .catalog import so3_spec, tangent_spec
    from .coeff import RatFunc
    from .matrix import CoeffMatrix
    from .superalgebra import GeneratorSet, SuperElem, big_bracket

    results = [
        CheckResult(
            "conventions fingerprint",
            fingerprint(constants) == EXPECTED_FINGERPRINT,
            fingerprint(constants)[:16],
        )
    ]
    values = constants or current_constants()

    def probe(name: str, passed: bool, detail: str = ""):
        results.append(CheckResult(name, bool(passed), detail))

    line = GeneratorSet(1, 1, ("x",))
    one = SuperElem.constant(line, 1)
    theta, xi = SuperElem.theta(line, 0), SuperElem.xi(line, 0)
    probe("{p1, x} = 1", big_bracket(SuperElem.p(line, 0), SuperElem.coordinate(line, 0)) == one)
    probe("{th1, xi1} = {xi1, th1} = 1", big_bracket(theta, xi) == one and big_bracket(xi, theta) == one)

    so3 = build_mu(so3_spec())
    gens = so3.gens
    e = [Section.basis(gens, a) for a in range(3)]
    probe("[e1, e2] = e3 on so(3)", lie_bracket(so3, e[0], e[1]) == e[2], "structure embedding")

    scalar = values.get("IDENTITY_MU_SCALAR", IDENTITY_MU_SCALAR)
    identity = EndoTensor.identity(gens)
    probe("{Id, mu} = IDENTITY_MU_SCALAR * mu", big_bracket(identity.elem, so3.elem) == so3.elem.scale(scalar),
          f"scalar {scalar}")

    N = EndoTensor.from_matrix(gens, CoeffMatrix([[1, 2, 0], [0, 3, 1], [4, 0, 5]], gens.variables))
    X = Section.from_vector(gens, [1, -1, 2])
    Y = Section.from_vector(gens, [0, 2, 1])
    probe("{X, N} = N X", Section.from_elem(big_bracket(X.elem, N.elem)) == N.apply(X), "valued-form embedding")

    P = CoeffMatrix([[0, 1, 2], [-1, 0, 3], [-2, -3, 0]], gens.variables)
    pi = MultiVector.from_matrix(gens, P)
    alpha = Form.from_vector(gens, [1, 2, -1])
    probe("{alpha, pi} = pi# alpha", Section.from_elem(big_bracket(alpha.elem, pi.elem)) == pi.sharp(alpha),
          "multivector embedding")

    sigma = Form.from_matrix(gens, P)
    probe("{{X, sigma}, Y} = sigma(X, Y)",
          scalar_part(big_bracket(big_bracket(X.elem, sigma.elem), Y.elem)) == sigma.evaluate(X, Y),
          "form embedding")

    plane = build_mu(tangent_spec(("x", "y")))
    x = plane.gens.variables[0]
    f = RatFunc.variable(x, plane.gens.variables) ** 2
    dx = Section.from_vector(plane.gens, [1, 0])
    probe("rho(d/dx) x^2 = 2x", anchor_apply(plane, dx, f) == RatFunc.variable(x, plane.gens.variables) * 2,
          "anchor embedding")

    quad = GeneratorSet(0, 4, ())
    W = CoeffMatrix([[0, 1, 0, 2], [-1, 0, 1, 0], [0, -1, 0, 3], [-2, 0, -3, 0]], ())
    omega = Form.from_matrix(quad, W)
    pi4 = MultiVector.from_matrix(quad, CoeffMatrix([[0, 2, 1, 0], [-2, 0, 0, 1], [-1, 0, 0, 1], [0, -1, -1, 0]], ()))
    expected = transition_tensor(pi4, omega).scale(values.get("OMEGA_PI_BRACKET", OMEGA_PI_BRACKET))
    probe("{omega, pi} = pi# o omega_flat", EndoTensor.from_elem(big_bracket(omega.elem, pi4.elem)) == expected)
    return results
