"""
The induced Whittaker module W_psi = Ind_{G^(m,n)}^{G} C w_psi.

Vectors are combinations of canonical PBW monomials in the free generators
L_k, H_k (k < m) and I_k, J_k (k < n) applied to the cyclic vector w_psi.
A generator acts by moving left to right through a monomial: free generators
settle into canonical position, every other generator is absorbed by
w_psi through its psi-value.
"""

import logging
from collections import defaultdict
from itertools import combinations_with_replacement
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from components.algebra.brackets import bracket_basis
from components.algebra.elements import AlgebraElement
from components.algebra.generators import INDEXED_FAMILIES, Family, Generator, generators_up_to
from components.arithmetic.combinations import LinearCombination, add_scaled
from components.arithmetic.scalars import ONE, Scalar, format_scalar
from components.enveloping.pbw import PBWMonomial, Word, position_key
from components.errors import PreconditionViolated
from components.whittaker.datum import WhittakerDatum

logger = logging.getLogger(__name__)

ALL_FAMILIES: FrozenSet[Family] = frozenset(Family)


class InducedVector(LinearCombination):
    """Finite combination of PBW monomials applied to w_psi."""

    __slots__ = ()

    @staticmethod
    def sort_key(key: PBWMonomial):
        return key.sort_key()

    @classmethod
    def cyclic(cls, coeff: Scalar = ONE) -> "InducedVector":
        return cls.of(PBWMonomial(), coeff)

    def normalized(self) -> "InducedVector":
        """Scale so the coefficient of the leading monomial is 1."""
        if not self:
            return self
        leading = self.items()[-1][1]
        return self.scale(ONE / leading)

    def is_proportional_to(self, other: "InducedVector") -> bool:
        if not self or not other:
            return not self and not other
        return self.normalized() == other.normalized()

    def to_json(self) -> Dict[str, str]:
        return {f"{monomial} w" if monomial.word else "w": format_scalar(c) for monomial, c in self.items()}

    def __str__(self) -> str:
        if not self:
            return "0"
        return " + ".join(
            f"({format_scalar(c)})*{monomial} w" if monomial.word else f"({format_scalar(c)})*w"
            for monomial, c in self.items()
        )


class WhittakerModule:
    """
    Action of G on W_psi.

    Args:
        datum: The Whittaker function psi_{m,n}
        families: Families that act; the others act by zero and drop out of
            brackets, which realizes W_psi over a quotient of G
    """

    def __init__(self, datum: WhittakerDatum, families: Iterable[Family] = ALL_FAMILIES):
        self.datum = datum
        self.families = frozenset(families)
        dropped = [str(g) for g, value in datum.values if value and g.family not in self.families]
        if dropped:
            raise PreconditionViolated(f"psi must vanish on families that act by zero: {dropped}")
        self._cache: Dict[Tuple[Generator, Word], Dict[Word, Scalar]] = {}

    @property
    def m(self) -> int:
        return self.datum.m

    @property
    def n(self) -> int:
        return self.datum.n

    def acts(self, g: Generator) -> bool:
        return g.family in self.families

    def is_free(self, g: Generator) -> bool:
        if g.is_central or not self.acts(g):
            return False
        if g.family in (Family.L, Family.H):
            return g.index < self.m
        return g.index < self.n

    def generator_weight(self, g: Generator) -> int:
        """Weight of a free generator: m-k for L_k, H_k and n-k for I_k, J_k."""
        if not self.is_free(g):
            raise ValueError(f"{g} is not a free generator of this module")
        if g.family in (Family.L, Family.H):
            return self.m - g.index
        return self.n - g.index

    def monomial_weight(self, monomial: PBWMonomial) -> int:
        return sum(self.generator_weight(g) for g in monomial.word)

    # Action

    def _act(self, g: Generator, word: Word) -> Dict[Word, Scalar]:
        key = (g, word)
        cached = self._cache.get(key)
        if cached is None:
            cached = self._compute(g, word)
            self._cache[key] = cached
        return cached

    def _compute(self, g: Generator, word: Word) -> Dict[Word, Scalar]:
        if not self.acts(g):
            return {}
        if g.is_central:
            value = self.datum.value(g)
            return {word: value} if value else {}
        free = self.is_free(g)
        if not word:
            if free:
                return {(g,): ONE}
            value = self.datum.value(g)
            return {(): value} if value else {}
        head, rest = word[0], word[1:]
        if free and position_key(g) <= position_key(head):
            return {(g,) + word: ONE}
        # g head rest = head (g rest) + [g, head] rest
        terms: Dict[Word, Scalar] = {}
        for shorter, coeff in self._act(g, rest).items():
            add_scaled(terms, coeff, self._act(head, shorter))
        for term, coeff in bracket_basis(g, head).items():
            if self.acts(term):
                add_scaled(terms, coeff, self._act(term, rest))
        return terms

    def act(self, g: Generator, v: InducedVector) -> InducedVector:
        """g . v, expanded on the PBW basis of W_psi."""
        terms: Dict[Word, Scalar] = {}
        for monomial, coeff in v.items():
            add_scaled(terms, coeff, self._act(g, monomial.word))
        return InducedVector((PBWMonomial(word), c) for word, c in terms.items())

    def act_element(self, x: AlgebraElement, v: InducedVector) -> InducedVector:
        return InducedVector.sum_of((coeff, self.act(g, v)) for g, coeff in x.items())

    def act_shifted(self, g: Generator, v: InducedVector) -> InducedVector:
        """(g - psi(g)) . v for g in G^(m,n)."""
        return self.act(g, v) - v.scale(self.datum.value(g))

    def apply_word(self, word: Sequence[Generator], v: Optional[InducedVector] = None) -> InducedVector:
        """Apply the generators of word right to left, starting from v (default w_psi)."""
        result = InducedVector.cyclic() if v is None else v
        for g in reversed(word):
            result = self.act(g, result)
        return result

    def vector(self, factors: Sequence[Tuple[Generator, int]], coeff: Scalar = ONE) -> InducedVector:
        """A basis vector from (free generator, exponent) factors."""
        monomial = PBWMonomial.from_factors(factors)
        stray = [str(g) for g in monomial.word if not self.is_free(g)]
        if stray:
            raise ValueError(f"not free generators of W_psi: {stray}")
        return InducedVector.of(monomial, coeff)

    def cache_size(self) -> int:
        return len(self._cache)

    # Bounds and bases

    @property
    def threshold(self) -> int:
        """Every generator of index above this acts on w_psi by zero."""
        return max(2 * self.m, self.m + self.n - 1)

    def annihilation_bound(self, v: InducedVector) -> int:
        """
        An index N with g . v = 0 for every L, H, I, J of index > N.

        Each free factor of negative index can raise the index of a
        bracket term by at most its absolute value before it reaches w_psi.
        """
        extra = max(
            (sum(max(0, -g.index) for g in monomial.word) for monomial in v.support()),
            default=0,
        )
        return self.threshold + extra

    def free_generators(self, max_weight: int) -> List[Generator]:
        """Free generators of weight <= max_weight, in canonical position order."""
        found = []
        for family in INDEXED_FAMILIES:
            if not self.acts(Generator(family, 0)):
                continue
            top = self.m if family in (Family.L, Family.H) else self.n
            for index in range(top - max_weight, top):
                found.append(Generator(family, index))
        return sorted(found, key=position_key)

    def basis(self, max_weight: int, min_weight: int = 0) -> List[PBWMonomial]:
        """
        PBW monomials with min_weight <= weight <= max_weight.

        Returns:
            Monomials ordered by weight, then by canonical monomial order
        """
        generators = self.free_generators(max_weight)
        by_weight: Dict[int, List[PBWMonomial]] = defaultdict(list)
        if min_weight <= 0:
            by_weight[0].append(PBWMonomial())
        for length in range(1, max_weight + 1):
            for combo in combinations_with_replacement(generators, length):
                weight = sum(self.generator_weight(g) for g in combo)
                if max(min_weight, 1) <= weight <= max_weight:
                    by_weight[weight].append(PBWMonomial(tuple(combo)))
        ordered: List[PBWMonomial] = []
        for weight in sorted(by_weight):
            ordered.extend(sorted(by_weight[weight], key=lambda monomial: monomial.sort_key()))
        return ordered


def verify_whittaker_axioms(
    datum: WhittakerDatum,
    index_bound: int,
    weight_bound: int,
    module: Optional[WhittakerModule] = None,
) -> List[Dict[str, Any]]:
    """
    Check [g1, g2] . b = g1 . (g2 . b) - g2 . (g1 . b) on basis monomials.

    Returns:
        Violations over generator pairs with |index| <= index_bound and basis
        monomials of weight <= weight_bound
    """
    module = module or WhittakerModule(datum)
    gens = list(generators_up_to(index_bound))
    violations: List[Dict[str, Any]] = []
    for monomial in module.basis(weight_bound):
        b = InducedVector.of(monomial)
        images = {g: module.act(g, b) for g in gens}
        for g1, g2 in combinations_with_replacement(gens, 2):
            left = module.act_element(bracket_basis(g1, g2), b)
            right = module.act(g1, images[g2]) - module.act(g2, images[g1])
            if left != right:
                violations.append({"pair": [str(g1), str(g2)], "monomial": str(monomial)})
    logger.debug("%s: module axiom violations %d", datum.describe(), len(violations))
    return violations


def verify_restricted(
    datum: WhittakerDatum,
    weight_bound: int,
    probe_count: int,
    module: Optional[WhittakerModule] = None,
) -> List[Dict[str, Any]]:
    """
    Probe the annihilation bound N_v on every basis vector of bounded weight.

    Returns:
        Generators of index N_v+1 .. N_v+probe_count that failed to kill v
    """
    module = module or WhittakerModule(datum)
    violations: List[Dict[str, Any]] = []
    for monomial in module.basis(weight_bound):
        v = InducedVector.of(monomial)
        bound = module.annihilation_bound(v)
        for family in INDEXED_FAMILIES:
            for index in range(bound + 1, bound + probe_count + 1):
                g = Generator(family, index)
                if module.act(g, v):
                    violations.append({"monomial": str(monomial), "generator": str(g), "bound": bound})
    return violations
