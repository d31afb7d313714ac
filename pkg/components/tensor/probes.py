"""
Probes on Omega (x) R that replay the moves of the irreducibility argument.

  - Extraction: for m beyond the annihilation bound, lambda^{-m} H_m t is a
    polynomial in m of degree q = Y-degree of t; inverting the Vandermonde
    system on q+1 values of m recovers its coefficients v_0, ..., v_q.
  - X-lowering: for a Y-free t, t - lambda^{-m} sigma^{-1} I_m t (J_m for the
    (0, sigma) variant) drops the X-degree by one when sigma is constant.
  - Regeneration: from 1 (x) w, H_m multiplies Y-free vectors by X, and the
    slopes m and m+1 of L_m combine to raise the Y-degree by one.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

from components.algebra.generators import Family, Generator
from components.arithmetic.echelon import EchelonBasis
from components.arithmetic.matrices import ScalarMatrix, matrix_solve
from components.arithmetic.polynomials import constant_term, is_constant, monomial
from components.arithmetic.scalars import ONE, Scalar, scalar, scalar_pow
from components.errors import DegenerateSystem, Inconclusive
from components.modules.omega import OmegaSpec, OmegaVariant
from components.tensor.restricted import RestrictedModuleHandle
from components.tensor.tensor_module import TensorVector, tensor_act, tensor_bound

logger = logging.getLogger(__name__)

J_PROBE_COUNT = 5


def extraction_points(handle: RestrictedModuleHandle, t: TensorVector, q: int) -> List[int]:
    """
    The q+1 values of m used for extraction: N+1, ..., N+q+1.

    N is the last index that may act nontrivially on the restricted side of t,
    so these are the first q+1 values at which H_m sees only the Omega factor.
    """
    start = tensor_bound(handle, t) + 1
    return list(range(start, start + q + 1))


def scaled_h(spec: OmegaSpec, handle: RestrictedModuleHandle, m: int, t: TensorVector) -> TensorVector:
    """lambda^{-m} H_m t."""
    return tensor_act(spec, handle, Generator(Family.H, m), t).scale(scalar_pow(spec.lam, -m))


def vandermonde_extract(
    spec: OmegaSpec,
    handle: RestrictedModuleHandle,
    t: TensorVector,
    y_degree: Optional[int] = None,
) -> List[TensorVector]:
    """
    Split lambda^{-m} H_m t = sum_j m^j v_j for m beyond the annihilation bound.

    Args:
        spec: The Omega module
        handle: The restricted module
        t: Nonzero tensor vector
        y_degree: Declared Y-degree q; read off t when omitted

    Returns:
        [v_0, ..., v_q]

    Raises:
        DegenerateSystem: the declared degree is below the Y-degree of t, or
            the solved coefficients do not reassemble at a fresh m
    """
    actual = t.y_degree()
    q = actual if y_degree is None else y_degree
    if q < actual or q < 0:
        raise DegenerateSystem(f"declared Y-degree {q} but t has Y-degree {actual}")
    points = extraction_points(handle, t, q)
    samples = [scaled_h(spec, handle, m, t) for m in points]
    vandermonde = ScalarMatrix([[scalar_pow(m, j) for j in range(q + 1)] for m in points])
    keys = set()
    for sample in samples:
        keys |= sample.support()
    solved: List[Dict[Any, Scalar]] = [{} for _ in range(q + 1)]
    for key in keys:
        coeffs = matrix_solve(vandermonde, [sample.coefficient(key) for sample in samples])
        for j, c in enumerate(coeffs):
            if c:
                solved[j][key] = c
    extracted = [TensorVector(terms) for terms in solved]
    fresh = points[-1] + 1
    if vandermonde_reassemble(extracted, fresh) != scaled_h(spec, handle, fresh, t):
        raise DegenerateSystem(f"extraction of degree {q} does not reassemble at m = {fresh}")
    logger.debug("extracted %d components at m in %s", q + 1, points)
    return extracted


def vandermonde_reassemble(extracted: Sequence[TensorVector], m: int) -> TensorVector:
    """sum_j m^j v_j."""
    return TensorVector.sum_of((scalar_pow(m, j), v) for j, v in enumerate(extracted))


def lowering_generator(spec: OmegaSpec, m: int) -> Optional[Generator]:
    if spec.variant is OmegaVariant.SIGMA_ZERO:
        return Generator(Family.I, m)
    if spec.variant is OmegaVariant.ZERO_SIGMA:
        return Generator(Family.J, m)
    return None


def lowering_obstruction(spec: OmegaSpec) -> Optional[str]:
    """Why the X-lowering move is unavailable, or None."""
    if spec.variant is OmegaVariant.DELTA_ONLY:
        return "I_m and J_m act by zero on Omega(lambda, delta, 0, 0): X-degree cannot be lowered"
    if not is_constant(spec.sigma):
        return "sigma is not a nonzero constant, so sigma^{-1} I_m (or J_m) is not available"
    return None


class JWitness(str, Enum):
    LOCALLY_FINITE = "locally_finite"
    INJECTIVE_TAIL = "injective_tail"


def j_nilpotency_witness(spec: OmegaSpec, handle: RestrictedModuleHandle, t: TensorVector) -> JWitness:
    """
    Probe J_m t for m = N_t+1 .. N_t+5.

    Raises:
        Inconclusive: some probes vanish and others do not
    """
    if not t:
        return JWitness.LOCALLY_FINITE
    start = tensor_bound(handle, t) + 1
    vanishing = [not tensor_act(spec, handle, Generator(Family.J, m), t) for m in range(start, start + J_PROBE_COUNT)]
    if all(vanishing):
        return JWitness.LOCALLY_FINITE
    if not any(vanishing):
        return JWitness.INJECTIVE_TAIL
    raise Inconclusive(f"J_m t vanishes for some but not all m in {start}..{start + J_PROBE_COUNT - 1}")


@dataclass
class TensorClosureReport:
    reached_one_tensor: bool
    obstruction: Optional[str]
    regenerated: bool
    degree_bound: int
    j_witness: Optional[str] = None
    one_tensor_vector: Optional[TensorVector] = None
    missing: List[str] = field(default_factory=list)
    steps: List[str] = field(default_factory=list)

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "reached_one_tensor": self.reached_one_tensor,
            "regenerated": self.regenerated,
            "j_witness": self.j_witness,
            "bounds": {"degree_bound": self.degree_bound},
            "steps": self.steps,
            "missing": self.missing,
        }
        if self.obstruction:
            data["obstruction"] = self.obstruction
        if self.one_tensor_vector is not None:
            data["one_tensor"] = self.one_tensor_vector.to_json()
        return data


def _lower_x(spec: OmegaSpec, handle: RestrictedModuleHandle, t: TensorVector, steps: List[str]) -> TensorVector:
    """Repeat the X-lowering move until t has X-degree 0."""
    sigma = constant_term(spec.sigma)
    while t.x_degree() > 0:
        m = tensor_bound(handle, t) + 1
        g = lowering_generator(spec, m)
        image = tensor_act(spec, handle, g, t).scale(ONE / (scalar_pow(spec.lam, m) * sigma))
        t = t - image
        steps.append(f"X-lowering with {g}: X-degree {t.x_degree()}")
    return t


def _regenerate(
    spec: OmegaSpec,
    handle: RestrictedModuleHandle,
    start: TensorVector,
    degree_bound: int,
    steps: List[str],
) -> List[str]:
    """
    Rebuild X^i Y^j (x) w from 1 (x) w with two moves, for m = N+1 and m' = N+2:

        lambda^{-m} H_m (X^i (x) w) = X^{i+1} (x) w
        m' lambda^{-m} L_m t - m lambda^{-m'} L_{m'} t = X^i Y^{j+1} (x) w + lower terms

    for t = X^i Y^j (x) w. A move is accepted when what it produces differs
    from its target by an element of the span already rebuilt.

    Returns:
        The targets X^i Y^j (x) w with i + j <= degree_bound not rebuilt
    """
    w = start.components(handle)[(0, 0)]
    m = tensor_bound(handle, start) + 1
    m2 = m + 1
    h_scale = scalar_pow(spec.lam, -m)
    l_first = scalar_pow(spec.lam, -m) * scalar(m2)
    l_second = scalar_pow(spec.lam, -m2) * scalar(m)

    built = EchelonBasis(order=TensorVector.sort_key)
    built.add(start)
    generated = {(0, 0)}
    missing: List[str] = []

    def target(i: int, j: int) -> TensorVector:
        return TensorVector.pure(monomial(i, j), w)

    def accept(source: Tuple[int, int], goal: Tuple[int, int], produced: TensorVector, move: str) -> None:
        name = f"X^{goal[0]} Y^{goal[1]}"
        rest = produced - target(*goal)
        if source not in generated or (rest and not built.contains(rest)):
            missing.append(name)
            return
        built.add(target(*goal))
        generated.add(goal)
        steps.append(f"{name} from {move} on X^{source[0]} Y^{source[1]}")

    for i in range(degree_bound):
        produced = tensor_act(spec, handle, Generator(Family.H, m), target(i, 0)).scale(h_scale)
        accept((i, 0), (i + 1, 0), produced, f"H[{m}]")
    for j in range(degree_bound):
        for i in range(degree_bound - j):
            source = target(i, j)
            first = tensor_act(spec, handle, Generator(Family.L, m), source).scale(l_first)
            second = tensor_act(spec, handle, Generator(Family.L, m2), source).scale(l_second)
            accept((i, j), (i, j + 1), first - second, f"L[{m}], L[{m2}]")
    logger.debug("regeneration rebuilt %d targets, %d missing", built.dimension, len(missing))
    return missing


def tensor_closure_probe(
    spec: OmegaSpec,
    handle: RestrictedModuleHandle,
    seed: TensorVector,
    degree_bound: int = 3,
) -> TensorClosureReport:
    """
    Drive a seed to a vector 1 (x) w and regenerate X^i Y^j (x) w from it.

    Args:
        spec: The Omega module
        handle: The restricted module; its irreducibility is an assumption
        seed: Nonzero starting vector
        degree_bound: Targets X^i Y^j (x) w have i + j <= degree_bound

    Returns:
        TensorClosureReport; when the X-lowering move is unavailable and the
        X-degree is positive the obstruction is recorded instead
    """
    if not seed:
        raise ValueError("tensor closure probe needs a nonzero seed")
    steps: List[str] = []
    report = TensorClosureReport(
        reached_one_tensor=False,
        obstruction=None,
        regenerated=False,
        degree_bound=degree_bound,
        steps=steps,
    )
    try:
        report.j_witness = j_nilpotency_witness(spec, handle, seed).value
    except Inconclusive as error:
        report.j_witness = f"inconclusive: {error}"

    t = seed
    if t.y_degree() > 0:
        t = vandermonde_extract(spec, handle, t)[-1]
        steps.append(f"extraction: top component has X-degree {t.x_degree()}, Y-degree {t.y_degree()}")
    if t.x_degree() > 0:
        obstruction = lowering_obstruction(spec)
        if obstruction:
            report.obstruction = obstruction
            logger.info("%s (x) %s: %s", spec.describe(), handle.describe(), obstruction)
            return report
        t = _lower_x(spec, handle, t, steps)
    if not t or t.x_degree() != 0 or t.y_degree() != 0:
        report.obstruction = "the moves did not produce a vector of the form 1 (x) w"
        return report
    report.reached_one_tensor = True
    report.one_tensor_vector = t
    report.missing = _regenerate(spec, handle, t, degree_bound, steps)
    report.regenerated = not report.missing
    return report
