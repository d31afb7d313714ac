"""
Twisting psi by a translation automorphism so that psi(L_p) = psi(H_p) = 0 for p >= m+n.

With alpha_p = psi(I_p), beta_p = psi(J_p) and s = m-n+1, the four s x s
upper-triangular matrices are

    A[t][u] = (m+n+1+t+u) alpha_{m+n-1+t-u}     B[t][u] = (m+n+1+t+u) beta_{m+n-1+t-u}
    C[t][u] = -alpha_{m+n-1+t-u}                D[t][u] = beta_{m+n-1+t-u}

and (a, b) solves (X; Y) = [[A, B], [C, D]] (a; b) for
X = psi(L_{m+n..2m}), Y = psi(H_{m+n..2m}). The translation is
x = sum_u (-a_u I_{-u-1} - b_u J_{-u-1}).
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from components.algebra.elements import AlgebraElement
from components.algebra.generators import Family, Generator
from components.algebra.translations import IJTranslation, apply_translation
from components.arithmetic.matrices import ScalarMatrix, Vector, matrix_solve
from components.arithmetic.scalars import ZERO, Scalar, format_scalar
from components.errors import PreconditionViolated, SingularMatrix
from components.whittaker.datum import WhittakerDatum

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TwistMatrices:
    a: ScalarMatrix
    b: ScalarMatrix
    c: ScalarMatrix
    d: ScalarMatrix

    def block(self) -> ScalarMatrix:
        return ScalarMatrix.block([[self.a, self.b], [self.c, self.d]])

    def to_json(self) -> Dict[str, Any]:
        return {"A": self.a.to_json(), "B": self.b.to_json(), "C": self.c.to_json(), "D": self.d.to_json()}


@dataclass
class TwistResult:
    translation: IJTranslation
    twisted: WhittakerDatum
    a: Vector
    b: Vector
    matrices: TwistMatrices
    escaped: List[str] = field(default_factory=list)

    def to_json(self) -> Dict[str, Any]:
        return {
            "a": [format_scalar(value) for value in self.a],
            "b": [format_scalar(value) for value in self.b],
            "translation": self.translation.to_json(),
            "twisted": self.twisted.to_json(),
            "matrices": self.matrices.to_json(),
            "escaped": self.escaped,
        }


def _require_twistable(datum: WhittakerDatum) -> None:
    if datum.m < datum.n:
        raise PreconditionViolated(f"the twist needs m >= n, got m={datum.m}, n={datum.n}")
    if not datum.alpha_top or not datum.beta_top:
        raise PreconditionViolated(f"the twist needs psi(I_{datum.top}) psi(J_{datum.top}) != 0")


def twist_matrices(datum: WhittakerDatum) -> TwistMatrices:
    """
    The four upper-triangular blocks of the normalization system.

    Raises:
        PreconditionViolated: m < n or psi(I_{m+n-1}) psi(J_{m+n-1}) = 0
    """
    _require_twistable(datum)
    m, n = datum.m, datum.n
    size = m - n + 1
    top = m + n - 1

    def build(value, factor) -> ScalarMatrix:
        return ScalarMatrix([
            [factor(t, u) * value(top + t - u) if u >= t else ZERO for u in range(size)]
            for t in range(size)
        ])

    def weighted(t: int, u: int) -> int:
        return m + n + 1 + t + u

    return TwistMatrices(
        a=build(datum.alpha, weighted),
        b=build(datum.beta, weighted),
        c=build(datum.alpha, lambda t, u: -1),
        d=build(datum.beta, lambda t, u: 1),
    )


def _evaluate(datum: WhittakerDatum, y: AlgebraElement) -> Tuple[Scalar, List[Generator]]:
    """psi on an element, with generators outside G^(m,n) reported instead of evaluated."""
    total = ZERO
    escaped = []
    for g, coeff in y.items():
        if datum.contains(g):
            total += coeff * datum.value(g)
        else:
            escaped.append(g)
    return total, escaped


def solve_twist(datum: WhittakerDatum) -> TwistResult:
    """
    Normalize psi on L_p, H_p for p >= m+n by a translation of the I/J span.

    Returns:
        TwistResult whose twisted datum is psi composed with exp(ad_x) on the
        L/H positions m..2m and agrees with psi on I, J and the centrals

    Raises:
        PreconditionViolated: m < n or psi(I_{m+n-1}) psi(J_{m+n-1}) = 0
    """
    matrices = twist_matrices(datum)
    m, n = datum.m, datum.n
    positions = range(m + n, 2 * m + 1)
    rhs = [datum.value(Generator(Family.L, p)) for p in positions]
    rhs += [datum.value(Generator(Family.H, p)) for p in positions]
    try:
        solution = matrix_solve(matrices.block(), rhs)
    except SingularMatrix as error:
        raise SingularMatrix(f"twist system singular for {datum.describe()}: {error}") from error
    size = m - n + 1
    a, b = solution[:size], solution[size:]
    translation = IJTranslation.from_coefficients(a, b)

    updates: Dict[Generator, Scalar] = {}
    escaped: List[str] = []
    for family in (Family.L, Family.H):
        for p in range(m, 2 * m + 1):
            g = Generator(family, p)
            value, outside = _evaluate(datum, apply_translation(translation, AlgebraElement.generator(g)))
            updates[g] = value
            escaped.extend(f"{outside_g} in image of {g}" for outside_g in outside)
    twisted = datum.with_values(updates)
    logger.debug("twist of %s: a=%s b=%s", datum.describe(), a, b)
    return TwistResult(translation=translation, twisted=twisted, a=a, b=b, matrices=matrices, escaped=escaped)


def normalize(datum: WhittakerDatum) -> WhittakerDatum:
    """
    Twist psi so that psi(L_p) = psi(H_p) = 0 for p >= m+n.

    For m < n the derived-algebra zeros already give this, so psi is returned
    unchanged.
    """
    if datum.m < datum.n:
        return datum
    return solve_twist(datum).twisted
