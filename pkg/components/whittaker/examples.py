"""
Known Whittaker vectors for the reducible families.

  - psi(I_{m+n-1}) = 0:                   I_{n-1} w
  - psi(J_{m+n-1}) = 0:                   J_{n-1} w
  - psi_{m,m+1}, alpha beta != 0:         (I_m + alpha/beta J_m) w
  - psi_{m,m-1} normalized, alpha beta != 0: L_{m-1} w
  - psi_{1,4}, alpha beta != 0:           (a1 I_2 + a2 J_2 + a3 I_3^2 + a4 J_3^2 + a5 J_3 I_3) w
    with (a1, ..., a5) in the kernel of a singular 5 x 5 matrix
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional

from components.algebra.generators import Family, Generator
from components.arithmetic.matrices import ScalarMatrix, Vector, matrix_determinant, matrix_nullspace
from components.arithmetic.scalars import Scalar, coerce_scalar, format_scalar
from components.errors import PreconditionViolated
from components.whittaker.datum import WhittakerDatum, validate_whittaker
from components.whittaker.induced import InducedVector, WhittakerModule
from components.whittaker.singular_search import is_whittaker_vector

logger = logging.getLogger(__name__)

PSI14_MONOMIALS = (
    ((Generator(Family.I, 2), 1),),
    ((Generator(Family.J, 2), 1),),
    ((Generator(Family.I, 3), 2),),
    ((Generator(Family.J, 3), 2),),
    ((Generator(Family.J, 3), 1), (Generator(Family.I, 3), 1)),
)


def psi14_matrix(alpha: Any, beta: Any) -> ScalarMatrix:
    """Rows: the w-coefficient of H_2, then the I_3 parts of H_1 and L_1, then their J_3 parts."""
    a, b = coerce_scalar(alpha), coerce_scalar(beta)
    return ScalarMatrix([
        [a, -b, 0, 0, 0],
        [1, 0, 2 * a, 0, -b],
        [1, 0, 4 * a, 0, 2 * b],
        [0, -1, 0, -2 * b, a],
        [0, 1, 0, 4 * b, 2 * a],
    ])


@dataclass
class Psi14Result:
    matrix: ScalarMatrix
    determinant: Scalar
    kernel_dimension: int
    coefficients: Vector
    witness: InducedVector
    failures: List[str] = field(default_factory=list)

    @property
    def verified(self) -> bool:
        return not self.failures

    def to_json(self) -> Dict[str, Any]:
        return {
            "matrix": self.matrix.to_json(),
            "determinant": format_scalar(self.determinant),
            "kernel_dimension": self.kernel_dimension,
            "coefficients": [format_scalar(c) for c in self.coefficients],
            "witness": self.witness.to_json(),
            "failures": self.failures,
        }


def example_psi14_witness(
    alpha: Any,
    beta: Any,
    extra_values: Optional[Mapping[Any, Any]] = None,
    index_limit: int = 12,
) -> Psi14Result:
    """
    Build the psi_{1,4} witness from the kernel of the 5 x 5 matrix and verify it.

    Args:
        alpha: psi(I_4)
        beta: psi(J_4)
        extra_values: Further psi-values on G^(1,4), e.g. {"L[1]": "2"}
        index_limit: Generators of G^(1,4) up to this index are checked

    Raises:
        PreconditionViolated: alpha beta = 0; the witness is then J_3 w or I_3 w
    """
    a, b = coerce_scalar(alpha), coerce_scalar(beta)
    if not a or not b:
        raise PreconditionViolated("the psi_{1,4} matrix witness needs psi(I_4) psi(J_4) != 0")
    matrix = psi14_matrix(a, b)
    kernel = matrix_nullspace(matrix)
    if not kernel:
        raise PreconditionViolated("the psi_{1,4} matrix is unexpectedly invertible")
    solution = kernel[0]
    pivot = next(c for c in reversed(solution) if c)
    coefficients = tuple(c / pivot for c in solution)

    raw: Dict[Any, Any] = dict(extra_values or {})
    raw.update({Generator(Family.I, 4): a, Generator(Family.J, 4): b})
    datum = validate_whittaker(raw, 1, 4)
    module = WhittakerModule(datum)
    witness = InducedVector.sum_of(
        (coeff, module.vector(factors)) for coeff, factors in zip(coefficients, PSI14_MONOMIALS)
    )
    failures = is_whittaker_vector(datum, witness, index_limit, module)
    logger.debug("psi_{1,4} witness %s, failures %s", witness, failures)
    return Psi14Result(
        matrix=matrix,
        determinant=matrix_determinant(matrix),
        kernel_dimension=len(kernel),
        coefficients=coefficients,
        witness=witness,
        failures=failures,
    )


def example_witness(datum: WhittakerDatum, module: Optional[WhittakerModule] = None) -> InducedVector:
    """
    The known Whittaker vector of positive weight for psi.

    Raises:
        PreconditionViolated: psi has no worked witness; in particular
            same-parity data with alpha beta != 0, which admit none
    """
    module = module or WhittakerModule(datum)
    m, n = datum.m, datum.n
    if not datum.alpha_top:
        return module.vector([(Generator(Family.I, n - 1), 1)])
    if not datum.beta_top:
        return module.vector([(Generator(Family.J, n - 1), 1)])
    if datum.same_parity:
        raise PreconditionViolated(f"{datum.describe()} has the same parity and alpha beta != 0: no Whittaker vector")
    if n == m + 1:
        ratio = datum.alpha_top / datum.beta_top
        return module.vector([(Generator(Family.I, m), 1)]) + module.vector([(Generator(Family.J, m), 1)], ratio)
    if n == m - 1:
        if not datum.is_normalized():
            raise PreconditionViolated("the L_{m-1} witness needs psi normalized on L_p, H_p for p >= m+n")
        return module.vector([(Generator(Family.L, m - 1), 1)])
    if (m, n) == (1, 4):
        result = example_psi14_witness(datum.alpha_top, datum.beta_top)
        return InducedVector.sum_of(
            (coeff, module.vector(factors)) for coeff, factors in zip(result.coefficients, PSI14_MONOMIALS)
        )
    raise PreconditionViolated(f"no worked witness for (m, n) = ({m}, {n})")
