"""
Basis generators of the centrally extended planar Galilean conformal algebra.

A generator is one of L_n, H_n, I_n, J_n (n an integer) or one of the central
elements c1, c2, c3. Generators serialize as "L[5]", "J[-3]" and "c1".
"""

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional, Sequence

_GENERATOR = re.compile(r"^\s*([LHIJ])\s*\[\s*([+-]?\d+)\s*\]\s*$")


class Family(Enum):
    """Generator families, declared in canonical rank order."""

    J = "J"
    I = "I"
    H = "H"
    L = "L"
    C1 = "c1"
    C2 = "c2"
    C3 = "c3"

    @property
    def rank(self) -> int:
        return _RANKS[self]

    @property
    def is_central(self) -> bool:
        return self in CENTRAL_FAMILIES


_RANKS = {family: position for position, family in enumerate(Family)}
CENTRAL_FAMILIES = frozenset({Family.C1, Family.C2, Family.C3})
INDEXED_FAMILIES = (Family.L, Family.H, Family.I, Family.J)


@dataclass(frozen=True)
class Generator:
    family: Family
    index: Optional[int] = None

    def __post_init__(self):
        if self.family.is_central:
            if self.index is not None:
                raise ValueError(f"central generator {self.family.value} carries no index")
        elif self.index is None:
            raise ValueError(f"generator {self.family.value} needs an index")

    @property
    def is_central(self) -> bool:
        return self.family.is_central

    @property
    def sort_key(self):
        """Canonical order: family rank, then index ascending."""
        return (self.family.rank, self.index or 0)

    def __lt__(self, other: "Generator") -> bool:
        if not isinstance(other, Generator):
            return NotImplemented
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        if self.is_central:
            return self.family.value
        return f"{self.family.value}[{self.index}]"

    def __repr__(self) -> str:
        return str(self)


def L(index: int) -> Generator:
    return Generator(Family.L, index)


def H(index: int) -> Generator:
    return Generator(Family.H, index)


def I(index: int) -> Generator:  # noqa: E743
    return Generator(Family.I, index)


def J(index: int) -> Generator:
    return Generator(Family.J, index)


C1 = Generator(Family.C1)
C2 = Generator(Family.C2)
C3 = Generator(Family.C3)
CENTRALS = (C1, C2, C3)


def parse_generator(text: str) -> Generator:
    """Parse "L[5]", "J[-3]" or "c1"."""
    stripped = text.strip()
    for central in CENTRALS:
        if stripped == central.family.value:
            return central
    match = _GENERATOR.match(stripped)
    if not match:
        raise ValueError(f"not a generator: {text!r}")
    return Generator(Family(match.group(1)), int(match.group(2)))


def generators_up_to(
    index_bound: int,
    families: Sequence[Family] = INDEXED_FAMILIES,
    include_centrals: bool = True,
) -> Iterator[Generator]:
    """Every generator with |index| <= index_bound, in canonical order."""
    chosen = sorted(families, key=lambda family: family.rank)
    for family in chosen:
        if family.is_central:
            continue
        for index in range(-index_bound, index_bound + 1):
            yield Generator(family, index)
    if include_centrals:
        yield from CENTRALS
