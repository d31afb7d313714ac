"""
Seeded random inputs for the verification campaigns.

Every sampler takes an explicit random.Random so a campaign run is a pure
function of its seed.
"""

import random
from typing import List, Optional

from components.algebra.generators import Family, Generator
from components.arithmetic.polynomials import BivariatePolynomial, polynomial
from components.arithmetic.scalars import Scalar, scalar
from components.enveloping.pbw import PBWMonomial, Word
from components.whittaker.induced import InducedVector
from components.whittaker.ordering import Block, ExponentVector, Pair

WORD_FAMILIES = (Family.L, Family.H, Family.I, Family.J, Family.C1, Family.C2, Family.C3)


def random_scalar(rng: random.Random, bound: int = 5, gaussian: bool = True) -> Scalar:
    """A nonzero scalar with small integer parts."""
    while True:
        real = rng.randint(-bound, bound)
        imag = rng.randint(-2, 2) if gaussian else 0
        value = scalar(real, imag)
        if value:
            return value


def random_generator(rng: random.Random, index_bound: int) -> Generator:
    family = rng.choice(WORD_FAMILIES)
    if family.is_central:
        return Generator(family)
    return Generator(family, rng.randint(-index_bound, index_bound))


def random_word(rng: random.Random, max_length: int, index_bound: int) -> Word:
    """A word of 1..max_length generators, in arbitrary order."""
    return tuple(random_generator(rng, index_bound) for _ in range(rng.randint(1, max_length)))


def random_polynomial(rng: random.Random, max_degree: int, max_terms: int = 4) -> BivariatePolynomial:
    """A nonzero polynomial of total degree <= max_degree."""
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            a = rng.randint(0, max_degree)
            b = rng.randint(0, max_degree - a)
            terms[(a, b)] = random_scalar(rng)
        p = polynomial(terms)
        if p:
            return p


def random_exponent_vector(rng: random.Random, length: int, max_entry: int = 2) -> ExponentVector:
    return ExponentVector(tuple(rng.randint(0, max_entry) for _ in range(length)))


def random_pair(rng: random.Random, length: int, max_entry: int = 2) -> Pair:
    return random_exponent_vector(rng, length, max_entry), random_exponent_vector(rng, length, max_entry)


def random_block_vector(
    rng: random.Random,
    block: Block,
    length: int,
    max_terms: int = 3,
    max_length: int = 3,
    first_family: Optional[bool] = None,
) -> InducedVector:
    """
    A random vector supported on one monomial block, never a multiple of w_psi.

    Args:
        rng: Source of randomness
        block: J/I or H/L
        length: Factors have index 0 .. length-1
        max_terms: Upper bound on the number of monomials
        max_length: Upper bound on the factors per monomial
        first_family: False restricts to the second family (I or L only)
    """
    first, second = block.families
    families: List[Family] = [second] if first_family is False else [first, second]
    while True:
        terms = []
        for _ in range(rng.randint(1, max_terms)):
            size = rng.randint(1, max_length)
            factors = [(Generator(rng.choice(families), rng.randint(0, length - 1)), 1) for _ in range(size)]
            terms.append((PBWMonomial.from_factors(factors), random_scalar(rng)))
        v = InducedVector(terms)
        if v:
            return v
