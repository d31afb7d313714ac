"""
Evidence for the induction step behind the irreducibility criterion, and the
criterion itself as a prediction.

The induction runs with d = 0 and k = m+n-1 on vectors of the G_0-submodule
generated by w_psi, which are combinations of free monomials whose factors
all have non-negative index. It needs:
  (1) d + k >= 0 and k not in -2Z_+;
  (2) I_k v != 0 and J_k v != 0 for v != 0;
  (3) L_i v = H_i v = 0 for i > k and I_j v = J_j v = 0 for j > k.
"""

import logging
import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

from components.algebra.generators import Family, Generator
from components.arithmetic.scalars import scalar
from components.enveloping.pbw import PBWMonomial
from components.whittaker.datum import WhittakerDatum
from components.whittaker.induced import InducedVector, WhittakerModule

logger = logging.getLogger(__name__)


class WhittakerPrediction(str, Enum):
    IRREDUCIBLE = "irreducible"
    REDUCIBLE = "reducible"
    CONJECTURED_REDUCIBLE = "conjectured_reducible"


def predicted_whittaker_irreducible(datum: WhittakerDatum) -> WhittakerPrediction:
    """
    The irreducibility criterion for W_psi.

    Same parity: irreducible iff psi(I_{m+n-1}) psi(J_{m+n-1}) != 0. A zero
    factor always gives a proper submodule. For different parity with both
    factors nonzero, only the worked families (n = m+1, n = m-1, (1, 4)) are
    known to be reducible; the rest is conjectural.
    """
    nonzero = bool(datum.alpha_top) and bool(datum.beta_top)
    if not nonzero:
        return WhittakerPrediction.REDUCIBLE
    if datum.same_parity:
        return WhittakerPrediction.IRREDUCIBLE
    m, n = datum.m, datum.n
    if n in (m + 1, m - 1) or (m, n) == (1, 4):
        return WhittakerPrediction.REDUCIBLE
    return WhittakerPrediction.CONJECTURED_REDUCIBLE


def first_hypothesis_holds(d: int, k: int) -> bool:
    """d + k >= 0 and k is not a negative even integer."""
    return d + k >= 0 and not (k < 0 and k % 2 == 0)


def degree_zero_generators(module: WhittakerModule) -> List[Generator]:
    """Free generators of non-negative index: L_k, H_k (0 <= k < m) and I_k, J_k (0 <= k < n)."""
    found = []
    for family in (Family.L, Family.H, Family.I, Family.J):
        if not module.acts(Generator(family, 0)):
            continue
        top = module.m if family in (Family.L, Family.H) else module.n
        found.extend(Generator(family, k) for k in range(top))
    return found


def sample_degree_zero_vector(
    module: WhittakerModule,
    rng: random.Random,
    max_terms: int = 3,
    max_length: int = 3,
) -> InducedVector:
    """A random nonzero combination of monomials in the non-negative free generators."""
    generators = degree_zero_generators(module)
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        length = rng.randint(0, max_length) if generators else 0
        factors = [(rng.choice(generators), 1) for _ in range(length)]
        coeff = scalar(rng.randint(1, 5), rng.randint(-2, 2))
        terms.append((PBWMonomial.from_factors(factors), coeff))
    vector = InducedVector(terms)
    return vector or InducedVector.cyclic()


@dataclass
class InductionProbeReport:
    k: int
    samples: int
    normalized: bool
    first: bool
    second_failures: List[str] = field(default_factory=list)
    third_failures: List[str] = field(default_factory=list)

    @property
    def second(self) -> bool:
        return not self.second_failures

    @property
    def third(self) -> bool:
        return not self.third_failures

    @property
    def passed(self) -> bool:
        return self.first and self.second and self.third

    def to_json(self) -> Dict[str, Any]:
        return {
            "k": self.k,
            "samples": self.samples,
            "normalized": self.normalized,
            "hypothesis_1": self.first,
            "hypothesis_2": self.second,
            "hypothesis_3": self.third,
            "hypothesis_2_failures": self.second_failures[:10],
            "hypothesis_3_failures": self.third_failures[:10],
        }


def induction_hypothesis_probe(
    datum: WhittakerDatum,
    samples: int,
    seed: int,
    probe_count: int = 5,
    module: Optional[WhittakerModule] = None,
) -> InductionProbeReport:
    """
    Sample vectors of U(G_0) w_psi and test the three induction hypotheses on them.

    Args:
        datum: Whittaker function; hypothesis (3) needs it normalized on L/H
        samples: Number of sampled vectors
        seed: Seed of the sampler
        probe_count: Indices k+1 .. k+probe_count are probed for hypothesis (3)
        module: Reuse an existing module

    Returns:
        InductionProbeReport with the failing (generator, vector) pairs
    """
    module = module or WhittakerModule(datum)
    rng = random.Random(seed)
    k = datum.top
    report = InductionProbeReport(
        k=k,
        samples=samples,
        normalized=datum.is_normalized(),
        first=first_hypothesis_holds(0, k),
    )
    lowering = [Generator(Family.I, k), Generator(Family.J, k)]
    killing = [
        Generator(family, index)
        for family in (Family.L, Family.H, Family.I, Family.J)
        for index in range(k + 1, k + probe_count + 1)
    ]
    for _ in range(samples):
        v = sample_degree_zero_vector(module, rng)
        for g in lowering:
            if not module.act(g, v):
                report.second_failures.append(f"{g} on {v}")
        for g in killing:
            if module.act(g, v):
                report.third_failures.append(f"{g} on {v}")
    logger.debug(
        "induction probe %s: (1) %s, (2) %d failures, (3) %d failures",
        datum.describe(), report.first, len(report.second_failures), len(report.third_failures),
    )
    return report
