"""
Exponent vectors, their weight, and the total orders used by the degree lemmas.

An exponent vector i = (i_{l-1}, ..., i_1, i_0) is stored left to right as
written, so i_k sits at position l-1-k of the tuple.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Tuple

from components.algebra.generators import Family, Generator
from components.errors import LengthMismatch, UnsupportedMonomial, ZeroVector
from components.whittaker.induced import InducedVector


class Comparison(str, Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


class Block(str, Enum):
    """Monomial blocks: J^j I^i (length n) and H^h L^l (length m)."""

    JI = "JI"
    HL = "HL"

    @property
    def families(self) -> Tuple[Family, Family]:
        """(first family, second family) of the pair (j, i) or (h, l)."""
        if self is Block.JI:
            return (Family.J, Family.I)
        return (Family.H, Family.L)


def _compare(a, b) -> Comparison:
    if a == b:
        return Comparison.EQUAL
    return Comparison.GREATER if a > b else Comparison.LESS


@dataclass(frozen=True)
class ExponentVector:
    entries: Tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.entries):
            raise ValueError(f"exponent vectors have non-negative entries: {self.entries}")

    @classmethod
    def zero(cls, length: int) -> "ExponentVector":
        return cls((0,) * length)

    @classmethod
    def unit(cls, length: int, k: int) -> "ExponentVector":
        """epsilon_k: a single 1 in position k counted from the right."""
        return cls.from_positions(length, {k: 1})

    @classmethod
    def from_positions(cls, length: int, values) -> "ExponentVector":
        entries = [0] * length
        for k, value in values.items():
            if not 0 <= k < length:
                raise ValueError(f"position {k} outside a vector of length {length}")
            entries[length - 1 - k] = value
        return cls(tuple(entries))

    @property
    def length(self) -> int:
        return len(self.entries)

    def at(self, k: int) -> int:
        return self.entries[self.length - 1 - k]

    def by_position(self) -> Tuple[int, ...]:
        """(i_0, i_1, ..., i_{l-1})."""
        return tuple(reversed(self.entries))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def lowest_nonzero(self) -> int:
        return min(k for k in range(self.length) if self.at(k))

    def highest_nonzero(self) -> int:
        return max(k for k in range(self.length) if self.at(k))

    def __add__(self, other: "ExponentVector") -> "ExponentVector":
        _check_lengths(self, other)
        return ExponentVector(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "ExponentVector") -> "ExponentVector":
        _check_lengths(self, other)
        return ExponentVector(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __str__(self) -> str:
        return "(" + ",".join(str(e) for e in self.entries) + ")"


def _check_lengths(*vectors: ExponentVector) -> None:
    lengths = {v.length for v in vectors}
    if len(lengths) > 1:
        raise LengthMismatch(f"exponent vectors of different lengths: {sorted(lengths)}")


def weight(i: ExponentVector) -> int:
    """w(i) = sum_k (l-k) i_k."""
    l = i.length
    return sum((l - k) * i.at(k) for k in range(l))


def reverse_lex_compare(i: ExponentVector, j: ExponentVector) -> Comparison:
    """i > j iff i_k > j_k at the smallest position k where they differ."""
    _check_lengths(i, j)
    return _compare(i.by_position(), j.by_position())


Pair = Tuple[ExponentVector, ExponentVector]


def principal_key(pair: Pair):
    """Total weight first, then the second block, then the first block, both reverse-lex."""
    first, second = pair
    return (weight(first) + weight(second), second.by_position(), first.by_position())


def principal_compare(left: Pair, right: Pair) -> Comparison:
    _check_lengths(*left, *right)
    return _compare(principal_key(left), principal_key(right))


def monomial_exponents(word: Iterable[Generator], block: Block, length: int) -> Pair:
    """Read (j, i) or (h, l) off a monomial supported on the block."""
    first_family, second_family = block.families
    first = [0] * length
    second = [0] * length
    for g in word:
        if g.family not in (first_family, second_family) or not 0 <= g.index < length:
            raise UnsupportedMonomial(f"{g} is outside the {block.value} block of length {length}")
        target = first if g.family is first_family else second
        target[length - 1 - g.index] += 1
    return ExponentVector(tuple(first)), ExponentVector(tuple(second))


def exponents_to_factors(pair: Pair, block: Block) -> Tuple[Tuple[Generator, int], ...]:
    first_family, second_family = block.families
    factors = []
    for family, vector in zip((first_family, second_family), pair):
        for k in range(vector.length):
            if vector.at(k):
                factors.append((Generator(family, k), vector.at(k)))
    return tuple(factors)


def vector_degree(v: InducedVector, block: Block, block_length: int) -> Pair:
    """
    Degree of v: the principal-order maximum of its support.

    Raises:
        ZeroVector: v is zero
        UnsupportedMonomial: v has factors outside the block
    """
    if not v:
        raise ZeroVector("the zero vector has no degree")
    pairs = [monomial_exponents(monomial.word, block, block_length) for monomial in v.support()]
    return max(pairs, key=principal_key)


def format_pair(pair: Pair) -> str:
    return f"({pair[0]}, {pair[1]})"
