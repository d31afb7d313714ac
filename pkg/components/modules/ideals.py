"""
Proper submodules of the Omega modules given by principal ideals.

For a non-constant sigma the ideal sigma C[X, Y] is stable: H_m and L_m never
shift X, and I_m, J_m multiply by sigma. In the delta-only module the ideal
X C[X, Y] is stable for every delta.
"""

import logging
from typing import Any, Dict, List, Optional, Tuple

from components.algebra.generators import generators_up_to
from components.arithmetic.polynomials import (
    BivariatePolynomial,
    X,
    divides,
    format_polynomial,
    is_constant,
    monomial,
)
from components.modules.omega import OmegaSpec, OmegaVariant, omega_act

logger = logging.getLogger(__name__)


def predicted_irreducible(spec: OmegaSpec) -> bool:
    """Irreducible iff sigma is a nonzero constant; the delta-only family never is."""
    if spec.variant is OmegaVariant.DELTA_ONLY:
        return False
    return is_constant(spec.sigma)


def reducibility_witness(spec: OmegaSpec) -> Optional[Tuple[BivariatePolynomial, str]]:
    """
    Generator of a proper ideal submodule, if the module is reducible.

    Returns:
        (g, reason) with g C[X, Y] a proper submodule, or None for constant sigma
    """
    if spec.variant is OmegaVariant.DELTA_ONLY:
        return X, "X C[X,Y] is stable under every generator of the delta-only family"
    if is_constant(spec.sigma):
        return None
    return spec.sigma, f"sigma C[X,Y] with sigma = {format_polynomial(spec.sigma)} is a proper submodule"


def verify_ideal_submodule(
    spec: OmegaSpec,
    g: BivariatePolynomial,
    index_bound: int,
    basis_cap: int,
) -> List[Dict[str, Any]]:
    """
    Check that every generator maps g X^a Y^b into g C[X, Y].

    Returns:
        Violations, each naming the generator and the monomial that escaped
    """
    if is_constant(g):
        raise ValueError("a constant generates the whole module, not a proper ideal")
    actors = [h for h in generators_up_to(index_bound) if not h.is_central]
    violations: List[Dict[str, Any]] = []
    for a in range(basis_cap + 1):
        for b in range(basis_cap + 1):
            element = g * monomial(a, b)
            for h in actors:
                if not divides(g, omega_act(spec, h, element)):
                    violations.append({"generator": str(h), "monomial": f"X^{a} Y^{b}"})
    logger.debug("ideal %s: %d violations", format_polynomial(g), len(violations))
    return violations
