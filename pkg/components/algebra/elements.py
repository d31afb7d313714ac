"""
Elements of the Lie algebra as sparse combinations of generators.
"""

from typing import Any, Dict, Mapping

from components.algebra.generators import Generator, parse_generator
from components.arithmetic.combinations import LinearCombination
from components.arithmetic.scalars import ONE, Scalar, coerce_scalar, format_scalar


class AlgebraElement(LinearCombination):
    """Finite combination of basis generators."""

    __slots__ = ()

    @staticmethod
    def sort_key(key: Generator):
        return key.sort_key

    @classmethod
    def generator(cls, g: Generator, coeff: Scalar = ONE) -> "AlgebraElement":
        return cls.of(g, coerce_scalar(coeff))

    def is_supported_on(self, predicate) -> bool:
        return all(predicate(g) for g in self.support())

    def to_json(self) -> Dict[str, str]:
        return {str(g): format_scalar(coeff) for g, coeff in self.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "AlgebraElement":
        return cls((parse_generator(name), coerce_scalar(value)) for name, value in data.items())
