"""
Exact search for Whittaker vectors in W_psi beyond the multiples of w_psi.

A vector v of positive weight with (y - psi(y)) v = 0 for every y in G^(m,n)
generates a proper submodule. The search writes v over the basis monomials of
weight 1..weight_bound and collects one linear constraint per output monomial
of every (y - psi(y)) b_u.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Iterator, List, Optional

from components.algebra.generators import Family, Generator
from components.arithmetic.echelon import EchelonBasis
from components.whittaker.datum import WhittakerDatum
from components.whittaker.induced import InducedVector, WhittakerModule

logger = logging.getLogger(__name__)

SPOT_CHECK_COUNT = 3


def index_max(datum: WhittakerDatum, weight_bound: int) -> int:
    """Generators above this index act on vectors of weight <= weight_bound by their psi-value."""
    return 2 * datum.m + 2 * datum.n + weight_bound + 2


def subalgebra_generators(datum: WhittakerDatum, first: int, last: int) -> Iterator[Generator]:
    """Non-central generators of G^(m,n) with first <= index <= last."""
    for family in (Family.L, Family.H, Family.I, Family.J):
        lowest = datum.m if family in (Family.L, Family.H) else datum.n
        for index in range(max(first, lowest), last + 1):
            yield Generator(family, index)


def is_whittaker_vector(
    datum: WhittakerDatum,
    v: InducedVector,
    index_limit: int,
    module: Optional[WhittakerModule] = None,
) -> List[str]:
    """
    Check (y - psi(y)) v = 0 for every y in G^(m,n) with index <= index_limit.

    Returns:
        Names of the generators that fail; empty for a Whittaker vector
    """
    module = module or WhittakerModule(datum)
    return [str(y) for y in subalgebra_generators(datum, 0, index_limit) if module.act_shifted(y, v)]


@dataclass
class SearchReport:
    found: bool
    witness: Optional[InducedVector]
    weight_bound: int
    index_max: int
    unknowns: int
    rank: int
    kernel_dimension: int
    spot_check: bool

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "found": self.found,
            "weight_bound": self.weight_bound,
            "index_max": self.index_max,
            "unknowns": self.unknowns,
            "rank": self.rank,
            "kernel_dimension": self.kernel_dimension,
            "spot_check": self.spot_check,
        }
        if self.witness is not None:
            data["witness"] = self.witness.to_json()
        return data


def singular_vector_search(
    datum: WhittakerDatum,
    weight_bound: int,
    module: Optional[WhittakerModule] = None,
) -> SearchReport:
    """
    Look for a Whittaker vector of weight 1..weight_bound.

    Args:
        datum: The Whittaker function
        weight_bound: Largest PBW weight of the unknown vector
        module: Reuse an existing module (and its action cache)

    Returns:
        SearchReport; the witness is the kernel vector of smallest top weight,
        then fewest terms, scaled to a leading coefficient of 1
    """
    if weight_bound < 1:
        raise ValueError(f"weight_bound must be positive, got {weight_bound}")
    module = module or WhittakerModule(datum)
    unknowns = module.basis(weight_bound, min_weight=1)
    limit = index_max(datum, weight_bound)
    constraints = EchelonBasis()
    for y in subalgebra_generators(datum, 0, limit):
        rows: Dict[Any, Dict[int, Any]] = {}
        for u, monomial in enumerate(unknowns):
            for output, coeff in module.act_shifted(y, InducedVector.of(monomial)).items():
                rows.setdefault(output, {})[u] = coeff
        constraints.extend(rows.values())
        if constraints.dimension == len(unknowns):
            break
    logger.debug(
        "%s: %d unknowns, rank %d, index_max %d, cache %d",
        datum.describe(), len(unknowns), constraints.dimension, limit, module.cache_size(),
    )
    kernel = constraints.nullspace(range(len(unknowns)))
    candidates = [InducedVector((unknowns[u], c) for u, c in solution.items()) for solution in kernel]
    witness = None
    spot_check = True
    if candidates:
        def simplicity(v: InducedVector):
            return (max(module.monomial_weight(monomial) for monomial in v.support()), len(v))

        witness = min(candidates, key=simplicity).normalized()
        spot_check = not any(
            module.act_shifted(y, witness)
            for y in subalgebra_generators(datum, limit + 1, limit + SPOT_CHECK_COUNT)
        )
        logger.info("%s: Whittaker vector found: %s", datum.describe(), witness)
    return SearchReport(
        found=witness is not None,
        witness=witness,
        weight_bound=weight_bound,
        index_max=limit,
        unknowns=len(unknowns),
        rank=constraints.dimension,
        kernel_dimension=len(kernel),
        spot_check=spot_check,
    )
