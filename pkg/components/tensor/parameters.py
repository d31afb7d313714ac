"""
Reading the Omega parameters back off a tensor module, and literal action tables.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Hashable, Iterable, Optional, Sequence, Tuple

from components.algebra.generators import Family, Generator, generators_up_to
from components.arithmetic.polynomials import (
    POLY_RING,
    BivariatePolynomial,
    Y,
    constant_term,
    format_polynomial,
    is_constant,
    monomial,
)
from components.arithmetic.scalars import ONE, ZERO, Scalar, format_scalar, scalar_pow
from components.errors import Inconclusive
from components.modules.omega import OmegaSpec, OmegaVariant
from components.tensor.restricted import RestrictedModuleHandle
from components.tensor.tensor_module import TensorVector, one_tensor, tensor_act, tensor_bound

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RecoveredParameters:
    variant: OmegaVariant
    lam: Scalar
    sigma: Optional[BivariatePolynomial]
    eta: Optional[Scalar]
    delta: Optional[BivariatePolynomial]

    def matches(self, spec: OmegaSpec) -> bool:
        if self.variant is not spec.variant or self.lam != spec.lam:
            return False
        if self.variant is OmegaVariant.DELTA_ONLY:
            return self.delta == spec.delta
        return self.sigma == spec.sigma and self.eta == spec.eta

    def to_json(self) -> Dict[str, Any]:
        return {
            "variant": self.variant.value,
            "lambda": format_scalar(self.lam),
            "sigma": format_polynomial(self.sigma) if self.sigma is not None else None,
            "eta": format_scalar(self.eta) if self.eta is not None else None,
            "delta": format_polynomial(self.delta) if self.delta is not None else None,
        }


def _polynomial_factor(t: TensorVector, key: Hashable, coeff: Scalar) -> BivariatePolynomial:
    """The polynomial p with t = p (x) w, read on one basis key of w with coefficient coeff."""
    return t.polynomial_parts().get(key, POLY_RING.zero) * (ONE / coeff)


def recover_parameters(
    spec: OmegaSpec,
    handle: RestrictedModuleHandle,
    w: Optional[Any] = None,
) -> RecoveredParameters:
    """
    Read lambda, sigma and eta (or delta) from actions on 1 (x) w.

    Only tensor actions of index beyond the annihilation bound of w are used,
    so the restricted side drops out:
        H_m (1 (x) w) = lambda^m X (x) w
        I_m or J_m (1 (x) w) = lambda^m sigma (x) w
        L_m (1 (x) w) = lambda^m (Y -/+ m X + m eta) (x) w   or   lambda^m (Y + m delta) (x) w

    Raises:
        Inconclusive: both I_m and J_m act nontrivially
    """
    w = handle.canonical_vector() if w is None else w
    start = one_tensor(w)
    key, coeff = w.items()[0]
    n = tensor_bound(handle, start)

    def read(g: Generator) -> BivariatePolynomial:
        return _polynomial_factor(tensor_act(spec, handle, g, start), key, coeff)

    first, second = read(Generator(Family.H, n + 1)), read(Generator(Family.H, n + 2))
    lam = second.get((1, 0), ZERO) / first.get((1, 0), ZERO)
    m = max(n + 1, 1)
    lam_m = scalar_pow(lam, m)
    i_part = read(Generator(Family.I, m)) * (ONE / lam_m)
    j_part = read(Generator(Family.J, m)) * (ONE / lam_m)
    l_part = read(Generator(Family.L, m)) * (ONE / lam_m)
    if i_part and j_part:
        raise Inconclusive("both I_m and J_m act nontrivially on 1 (x) w")
    if i_part or j_part:
        variant = OmegaVariant.SIGMA_ZERO if i_part else OmegaVariant.ZERO_SIGMA
        eta = constant_term(l_part) * (ONE / m)
        recovered = RecoveredParameters(variant, lam, i_part or j_part, eta, None)
    else:
        delta = (l_part - Y) * (ONE / m)
        recovered = RecoveredParameters(OmegaVariant.DELTA_ONLY, lam, None, None, delta)
    logger.debug("recovered %s from %s (x) %s", recovered.to_json(), spec.describe(), handle.describe())
    return recovered


def default_probes(handle: RestrictedModuleHandle, index_bound: int = 2, degree: int = 1) -> Sequence[Tuple[Generator, TensorVector]]:
    w = handle.canonical_vector()
    vectors = [TensorVector.pure(monomial(a, b), w) for a in range(degree + 1) for b in range(degree + 1)]
    return [(g, t) for g in generators_up_to(index_bound) for t in vectors]


def action_table(
    spec: OmegaSpec,
    handle: RestrictedModuleHandle,
    probes: Optional[Iterable[Tuple[Generator, TensorVector]]] = None,
) -> Dict[str, Dict[str, str]]:
    """Literal images g . t on a probe set, keyed by "g on t"."""
    probes = default_probes(handle) if probes is None else probes
    return {f"{g} on {t}": tensor_act(spec, handle, g, t).to_json() for g, t in probes}


def predicted_tensor_irreducible(spec: OmegaSpec, restricted_irreducible: bool) -> bool:
    """
    Irreducibility of Omega (x) R for irreducible R: sigma a nonzero constant.

    The delta-only family always has the submodule X C[X, Y] (x) R, and a
    reducible R gives C[X, Y] (x) R' for any proper R'.
    """
    if not restricted_irreducible or spec.variant is OmegaVariant.DELTA_ONLY:
        return False
    return is_constant(spec.sigma)
