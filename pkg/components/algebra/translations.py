"""
Translation automorphisms exp(ad_x) for x in the abelian I/J span.

Because [x, [x, y]] = 0 for such x, exp(ad_x) truncates to 1 + ad_x.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence

from components.algebra.brackets import Violation, bracket
from components.algebra.elements import AlgebraElement
from components.algebra.generators import Family, Generator, generators_up_to
from components.arithmetic.scalars import Scalar
from components.errors import InvalidTranslation

logger = logging.getLogger(__name__)


def in_ij_span(g: Generator) -> bool:
    return g.family in (Family.I, Family.J)


@dataclass(frozen=True)
class IJTranslation:
    x: AlgebraElement

    def __post_init__(self):
        stray = [g for g in self.x.support() if not in_ij_span(g)]
        if stray:
            raise InvalidTranslation(f"translation must live in the I/J span, found {sorted(map(str, stray))}")

    @classmethod
    def identity(cls) -> "IJTranslation":
        return cls(AlgebraElement.zero())

    @classmethod
    def from_coefficients(cls, a: Sequence[Scalar], b: Sequence[Scalar]) -> "IJTranslation":
        """
        Build x = sum_u (-a_u I_{-u-1} - b_u J_{-u-1}).

        Args:
            a: Coefficients a_0, a_{-1}, ..., listed by u = 0, 1, ...
            b: Coefficients b_0, b_{-1}, ..., same layout
        """
        terms = []
        for u, (a_u, b_u) in enumerate(zip(a, b)):
            terms.append((Generator(Family.I, -u - 1), -a_u))
            terms.append((Generator(Family.J, -u - 1), -b_u))
        return cls(AlgebraElement(terms))

    @property
    def is_identity(self) -> bool:
        return not self.x

    def to_json(self) -> Dict[str, str]:
        return self.x.to_json()


def apply_translation(t: IJTranslation, y: AlgebraElement) -> AlgebraElement:
    """exp(ad_x)(y) = y + [x, y]."""
    if not isinstance(t, IJTranslation):
        raise InvalidTranslation(f"expected an IJTranslation, got {type(t).__name__}")
    return y + bracket(t.x, y)


def verify_translation_automorphism(t: IJTranslation, index_bound: int) -> List[Violation]:
    """
    Check that the translation preserves brackets and that ad_x squares to zero.

    Returns:
        Violations over all generator pairs with |index| <= index_bound
    """
    generators = list(generators_up_to(index_bound))
    basis = [(g, AlgebraElement.generator(g)) for g in generators]
    violations: List[Violation] = []
    for ga, a in basis:
        if bracket(t.x, bracket(t.x, a)):
            violations.append({"kind": "ad_square", "generator": str(ga)})
        image_a = apply_translation(t, a)
        for gb, b in basis:
            left = apply_translation(t, bracket(a, b))
            right = bracket(image_a, apply_translation(t, b))
            if left != right:
                violations.append({"kind": "bracket", "pair": [str(ga), str(gb)]})
    logger.debug("translation automorphism check: %d violations", len(violations))
    return violations
