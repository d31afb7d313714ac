"""
Bounded submodule closure for the Omega modules.

The probe saturates the span of a seed under every generator of bounded
index. Reaching the constant 1 certifies that the seed generates the whole
module; not reaching it within the bounds is only evidence of a proper
submodule.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Dict, List

from components.algebra.generators import generators_up_to
from components.arithmetic.echelon import EchelonBasis
from components.arithmetic.polynomials import (
    BivariatePolynomial,
    constant,
    polynomial,
    polynomial_to_json,
    total_degree,
)
from components.modules.omega import OmegaSpec, omega_act

logger = logging.getLogger(__name__)


def _monomial_order(key):
    a, b = key
    return (a + b, a, b)


@dataclass
class ClosureReport:
    dimension: int
    contains_one: bool
    truncated: int
    iterations: int
    basis: List[BivariatePolynomial] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        if self.contains_one:
            return "generates the whole module"
        return "no constant reached within bounds (evidence of a proper submodule)"

    def to_json(self) -> Dict[str, Any]:
        return {
            "dimension": self.dimension,
            "contains_one": self.contains_one,
            "truncated": self.truncated,
            "iterations": self.iterations,
            "verdict": self.verdict,
            "witness_basis": [polynomial_to_json(p) for p in self.basis],
        }


def submodule_closure_probe(
    spec: OmegaSpec,
    seed: BivariatePolynomial,
    index_bound: int,
    degree_cap: int,
) -> ClosureReport:
    """
    Saturate the span of a seed under the module action.

    Args:
        spec: The module
        seed: Nonzero starting polynomial
        index_bound: Generators with |index| <= index_bound act
        degree_cap: Images of total degree above the cap are discarded

    Returns:
        ClosureReport with the span dimension, whether 1 lies in it, and
        how many images were discarded at the cap
    """
    if not seed:
        raise ValueError("closure probe needs a nonzero seed")
    if total_degree(seed) > degree_cap:
        raise ValueError(f"seed degree {total_degree(seed)} exceeds the cap {degree_cap}")
    actors = [g for g in generators_up_to(index_bound) if not g.is_central]
    span = EchelonBasis(order=_monomial_order)
    truncated = 0
    iterations = 0
    queue = deque()
    span.add(seed)
    queue.append(seed)
    while queue:
        vector = queue.popleft()
        iterations += 1
        for g in actors:
            image = omega_act(spec, g, vector)
            if not image:
                continue
            if total_degree(image) > degree_cap:
                truncated += 1
                continue
            if span.add(image):
                queue.append(image)
    contains_one = span.contains(constant(1))
    logger.debug(
        "%s closure: dimension %d, %d truncated, contains 1: %s",
        spec.describe(), span.dimension, truncated, contains_one,
    )
    return ClosureReport(
        dimension=span.dimension,
        contains_one=contains_one,
        truncated=truncated,
        iterations=iterations,
        basis=[polynomial(row) for row in span.basis()],
    )
