"""
Rank-one U(h)-free modules on C[X, Y].

Three families act on polynomials f(X, Y):

    Omega(lambda, eta, sigma, 0):
        L_m f = lambda^m f(X, Y-m) (Y - mX + m eta)
        H_m f = lambda^m X f(X, Y-m)
        I_m f = lambda^m sigma(X) f(X-1, Y-m),   J_m f = 0
    Omega(lambda, eta, 0, sigma):
        L_m f = lambda^m f(X, Y-m) (Y + mX + m eta)
        H_m f = lambda^m X f(X, Y-m)
        J_m f = lambda^m sigma(X) f(X+1, Y-m),   I_m f = 0
    Omega(lambda, delta, 0, 0):
        L_m f = lambda^m f(X, Y-m) (Y + m delta(X))
        H_m f = lambda^m X f(X, Y-m),            I_m f = J_m f = 0

Central elements act as zero in all three.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations_with_replacement
from typing import Any, Dict, List, Optional

from components.algebra.brackets import bracket_basis
from components.algebra.elements import AlgebraElement
from components.algebra.generators import Family, Generator, generators_up_to
from components.arithmetic.polynomials import (
    POLY_RING,
    X,
    Y,
    BivariatePolynomial,
    format_polynomial,
    is_univariate_in_x,
    monomial,
    poly_shift,
    polynomial_from_json,
    polynomial_to_json,
)
from components.arithmetic.scalars import Scalar, coerce_scalar, format_scalar, scalar_pow
from components.errors import InvalidSpec

logger = logging.getLogger(__name__)


class OmegaVariant(str, Enum):
    SIGMA_ZERO = "sigma_zero"
    ZERO_SIGMA = "zero_sigma"
    DELTA_ONLY = "delta_only"


@dataclass(frozen=True)
class OmegaSpec:
    variant: OmegaVariant
    lam: Scalar
    eta: Optional[Scalar] = None
    sigma: Optional[BivariatePolynomial] = None
    delta: Optional[BivariatePolynomial] = None

    def __post_init__(self):
        if not self.lam:
            raise InvalidSpec("lambda must be nonzero")
        if self.variant is OmegaVariant.DELTA_ONLY:
            if self.delta is None:
                raise InvalidSpec("the delta-only variant needs a polynomial delta")
            if not is_univariate_in_x(self.delta):
                raise InvalidSpec("delta must be a polynomial in X alone")
            if self.sigma is not None or self.eta is not None:
                raise InvalidSpec("the delta-only variant takes neither sigma nor eta")
            return
        if self.eta is None:
            raise InvalidSpec(f"variant {self.variant.value} needs eta")
        if self.delta is not None:
            raise InvalidSpec(f"variant {self.variant.value} takes no delta")
        if not self.sigma:
            raise InvalidSpec("sigma must be a nonzero polynomial")
        if not is_univariate_in_x(self.sigma):
            raise InvalidSpec("sigma must be a polynomial in X alone")

    @classmethod
    def sigma_zero(cls, lam: Any, eta: Any, sigma: BivariatePolynomial) -> "OmegaSpec":
        return cls(OmegaVariant.SIGMA_ZERO, coerce_scalar(lam), coerce_scalar(eta), sigma=sigma)

    @classmethod
    def zero_sigma(cls, lam: Any, eta: Any, sigma: BivariatePolynomial) -> "OmegaSpec":
        return cls(OmegaVariant.ZERO_SIGMA, coerce_scalar(lam), coerce_scalar(eta), sigma=sigma)

    @classmethod
    def delta_only(cls, lam: Any, delta: BivariatePolynomial) -> "OmegaSpec":
        return cls(OmegaVariant.DELTA_ONLY, coerce_scalar(lam), delta=delta)

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "OmegaSpec":
        variant = OmegaVariant(data["variant"])
        lam = coerce_scalar(data["lambda"])
        if variant is OmegaVariant.DELTA_ONLY:
            return cls(variant, lam, delta=polynomial_from_json(data["delta"]))
        return cls(variant, lam, coerce_scalar(data["eta"]), sigma=polynomial_from_json(data["sigma"]))

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"variant": self.variant.value, "lambda": format_scalar(self.lam)}
        if self.variant is OmegaVariant.DELTA_ONLY:
            data["delta"] = polynomial_to_json(self.delta)
        else:
            data["eta"] = format_scalar(self.eta)
            data["sigma"] = polynomial_to_json(self.sigma)
        return data

    def describe(self) -> str:
        lam = format_scalar(self.lam)
        if self.variant is OmegaVariant.DELTA_ONLY:
            return f"Omega({lam}, {format_polynomial(self.delta)}, 0, 0)"
        eta, sigma = format_scalar(self.eta), format_polynomial(self.sigma)
        if self.variant is OmegaVariant.SIGMA_ZERO:
            return f"Omega({lam}, {eta}, {sigma}, 0)"
        return f"Omega({lam}, {eta}, 0, {sigma})"


def _l_factor(spec: OmegaSpec, m: int) -> BivariatePolynomial:
    if spec.variant is OmegaVariant.SIGMA_ZERO:
        return Y - X * m + spec.eta * m
    if spec.variant is OmegaVariant.ZERO_SIGMA:
        return Y + X * m + spec.eta * m
    return Y + spec.delta * m


def omega_act(spec: OmegaSpec, g: Generator, f: BivariatePolynomial) -> BivariatePolynomial:
    """
    Action of one generator on a polynomial.

    Args:
        spec: The module
        g: Acting generator
        f: Polynomial in C[X, Y]

    Returns:
        g . f, computed from the displayed formula of the variant
    """
    if not isinstance(spec, OmegaSpec):
        raise InvalidSpec(f"expected an OmegaSpec, got {type(spec).__name__}")
    if g.is_central or not f:
        return POLY_RING.zero
    m = g.index
    lam_m = scalar_pow(spec.lam, m)
    if g.family is Family.L:
        return poly_shift(f, 0, -m) * _l_factor(spec, m) * lam_m
    if g.family is Family.H:
        return X * poly_shift(f, 0, -m) * lam_m
    if g.family is Family.I:
        if spec.variant is not OmegaVariant.SIGMA_ZERO:
            return POLY_RING.zero
        return spec.sigma * poly_shift(f, -1, -m) * lam_m
    if spec.variant is not OmegaVariant.ZERO_SIGMA:
        return POLY_RING.zero
    return spec.sigma * poly_shift(f, 1, -m) * lam_m


def omega_act_element(spec: OmegaSpec, x: AlgebraElement, f: BivariatePolynomial) -> BivariatePolynomial:
    result = POLY_RING.zero
    for g, coeff in x.items():
        result += omega_act(spec, g, f) * coeff
    return result


def verify_omega_axioms(spec: OmegaSpec, index_bound: int, basis_cap: int) -> List[Dict[str, Any]]:
    """
    Check [g1, g2] . f = g1 . (g2 . f) - g2 . (g1 . f) exactly.

    Runs over all generator pairs with |index| <= index_bound and all
    monomials X^a Y^b with a, b <= basis_cap.

    Returns:
        Violations; empty when the module axiom holds on the sample
    """
    basis = list(generators_up_to(index_bound))
    monomials = [monomial(a, b) for a in range(basis_cap + 1) for b in range(basis_cap + 1)]
    violations: List[Dict[str, Any]] = []
    for f in monomials:
        images = {g: omega_act(spec, g, f) for g in basis}
        for g1, g2 in combinations_with_replacement(basis, 2):
            left = omega_act_element(spec, bracket_basis(g1, g2), f)
            right = omega_act(spec, g1, images[g2]) - omega_act(spec, g2, images[g1])
            if left != right:
                violations.append({
                    "pair": [str(g1), str(g2)],
                    "monomial": format_polynomial(f),
                    "difference": format_polynomial(left - right),
                })
    logger.debug("%s: axiom check found %d violations", spec.describe(), len(violations))
    return violations
