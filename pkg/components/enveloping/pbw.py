"""
PBW normal ordering in the universal enveloping algebra.

A word is canonical when its generators are sorted by family rank
(J, I, H, L, c1, c2, c3) from left to right and, inside each family, by
descending index. Restricted to the I/J generators of index < n this reads
J_{n-1}^{j_{n-1}} ... J_0^{j_0} I_{n-1}^{i_{n-1}} ... I_0^{i_0}.

Straightening rewrites an adjacent out-of-order pair g h as h g + [g, h]
until every word is canonical.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import groupby
from typing import Dict, Iterable, List, Sequence, Tuple

from components.algebra.brackets import bracket_basis
from components.algebra.generators import Generator, parse_generator
from components.arithmetic.combinations import LinearCombination
from components.arithmetic.scalars import ONE, Scalar, format_scalar

logger = logging.getLogger(__name__)

Word = Tuple[Generator, ...]

LEFTMOST = "leftmost"
RIGHTMOST = "rightmost"


def position_key(g: Generator) -> Tuple[int, int]:
    """Left-to-right position of a generator inside a canonical word."""
    return (g.family.rank, 0 if g.is_central else -g.index)


def is_canonical(word: Sequence[Generator]) -> bool:
    return all(position_key(a) <= position_key(b) for a, b in zip(word, word[1:]))


@dataclass(frozen=True)
class PBWMonomial:
    """A canonical word, stored flat: L_2^3 is (L_2, L_2, L_2)."""

    word: Word = ()

    def __post_init__(self):
        if not is_canonical(self.word):
            raise ValueError(f"word is not in canonical order: {self.word}")

    @classmethod
    def from_factors(cls, factors: Iterable[Tuple[Generator, int]]) -> "PBWMonomial":
        word: List[Generator] = []
        for g, exponent in factors:
            if exponent <= 0:
                raise ValueError(f"exponent of {g} must be positive, got {exponent}")
            word.extend([g] * exponent)
        return cls(tuple(sorted(word, key=position_key)))

    @classmethod
    def parse(cls, text: str) -> "PBWMonomial":
        """Parse the serialized form "J[1]^2 I[0]"; "1" is the empty monomial."""
        text = text.strip()
        if text in ("", "1"):
            return cls()
        factors = []
        for token in text.split():
            name, _, exponent = token.partition("^")
            factors.append((parse_generator(name), int(exponent or 1)))
        return cls.from_factors(factors)

    @property
    def factors(self) -> List[Tuple[Generator, int]]:
        return [(g, len(list(run))) for g, run in groupby(self.word)]

    @property
    def length(self) -> int:
        return len(self.word)

    def exponent(self, g: Generator) -> int:
        return self.word.count(g)

    def sort_key(self):
        return (len(self.word), tuple(position_key(g) for g in self.word))

    def __str__(self) -> str:
        if not self.word:
            return "1"
        return " ".join(str(g) if e == 1 else f"{g}^{e}" for g, e in self.factors)

    def __repr__(self) -> str:
        return f"PBWMonomial({self})"


class EnvelopingElement(LinearCombination):
    """Finite combination of canonical PBW monomials."""

    __slots__ = ()

    @staticmethod
    def sort_key(key: PBWMonomial):
        return key.sort_key()

    @classmethod
    def one(cls) -> "EnvelopingElement":
        return cls.of(PBWMonomial())

    @classmethod
    def from_word(cls, word: Sequence[Generator], coeff: Scalar = ONE) -> "EnvelopingElement":
        return straighten(word).scale(coeff)

    def max_length(self) -> int:
        return max((monomial.length for monomial in self.support()), default=0)


def _out_of_order(word: Word, strategy: str) -> int:
    positions = range(len(word) - 1)
    if strategy == RIGHTMOST:
        positions = reversed(positions)
    for i in positions:
        if position_key(word[i]) > position_key(word[i + 1]):
            return i
    return -1


@lru_cache(maxsize=None)
def _straighten(word: Word, strategy: str) -> EnvelopingElement:
    i = _out_of_order(word, strategy)
    if i < 0:
        return EnvelopingElement.of(PBWMonomial(word))
    g, h = word[i], word[i + 1]
    prefix, suffix = word[:i], word[i + 2:]
    parts = [(ONE, _straighten(prefix + (h, g) + suffix, strategy))]
    for term, coeff in bracket_basis(g, h).items():
        parts.append((coeff, _straighten(prefix + (term,) + suffix, strategy)))
    return EnvelopingElement.sum_of(parts)


def straighten(word: Sequence[Generator], strategy: str = LEFTMOST) -> EnvelopingElement:
    """
    Normal-order a word of generators.

    Args:
        word: Generators read left to right
        strategy: LEFTMOST or RIGHTMOST choice of the pair rewritten first

    Returns:
        The unique canonical expansion of the word
    """
    if strategy not in (LEFTMOST, RIGHTMOST):
        raise ValueError(f"unknown reduction strategy {strategy!r}")
    return _straighten(tuple(word), strategy)


def multiply(u: EnvelopingElement, v: EnvelopingElement, strategy: str = LEFTMOST) -> EnvelopingElement:
    """Product in U(G): concatenate monomials pairwise and straighten."""
    parts = []
    for left, cu in u.items():
        for right, cv in v.items():
            parts.append((cu * cv, straighten(left.word + right.word, strategy)))
    return EnvelopingElement.sum_of(parts)


def straightening_cache_size() -> int:
    return _straighten.cache_info().currsize


def monomials_to_json(element: EnvelopingElement) -> Dict[str, str]:
    return {str(monomial): format_scalar(coeff) for monomial, coeff in element.items()}
