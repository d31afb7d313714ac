"""
Degree-lowering operators on the J/I and H/L blocks of W_psi.

For a vector of degree (j, i) in the J/I block (block length n):
  - j != 0, r = min{k : j_k != 0}: (H_{m+n-1-r} - psi) lowers the degree to (j - e_r, i).
  - j == 0, s = max{k : i_k != 0}: (H_{m+n-1-s} - psi) or (L_{m+n-1-s} - psi)
    lowers it to (0, i - e_s).
For a vector of degree (h, l) in the H/L block (block length m, k = m+n-1):
  - h != 0: (I_{k-r} - alpha_{k-r}) lowers it to (h - e_r, l).
  - h == 0: (I_{k-s} - alpha_{k-s}) or (J_{k-s} - beta_{k-s}) lowers it to (0, l - e_s).
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from components.algebra.generators import Family, Generator
from components.errors import PreconditionViolated
from components.whittaker.datum import WhittakerDatum
from components.whittaker.induced import InducedVector, WhittakerModule
from components.whittaker.ordering import Block, ExponentVector, Pair, format_pair, vector_degree

logger = logging.getLogger(__name__)


class ReductionCase(str, Enum):
    JI_J_NONZERO = "JI_j_nonzero"
    JI_I_ONLY = "JI_i_only"
    HL_H_NONZERO = "HL_h_nonzero"
    HL_L_ONLY = "HL_l_only"

    @property
    def block(self) -> Block:
        return Block.JI if self in (ReductionCase.JI_J_NONZERO, ReductionCase.JI_I_ONLY) else Block.HL

    @property
    def identifier(self) -> str:
        if self.block is Block.JI:
            return "Lemma 3.2(1)" if self is ReductionCase.JI_J_NONZERO else "Lemma 3.2(2)"
        return "Lemma 3.5(1)" if self is ReductionCase.HL_H_NONZERO else "Lemma 3.5(2)"


@dataclass
class OperatorOutcome:
    operator: str
    degree: Optional[Pair]
    matches: bool


@dataclass
class DegreeReductionReport:
    case: ReductionCase
    degree: Pair
    predicted: Pair
    outcomes: List[OperatorOutcome] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return any(outcome.matches for outcome in self.outcomes)

    def to_json(self) -> Dict[str, Any]:
        return {
            "case": self.case.value,
            "identifier": self.case.identifier,
            "degree": format_pair(self.degree),
            "predicted": format_pair(self.predicted),
            "outcomes": [
                {
                    "operator": outcome.operator,
                    "degree": format_pair(outcome.degree) if outcome.degree else None,
                    "matches": outcome.matches,
                }
                for outcome in self.outcomes
            ],
            "passed": self.passed,
        }


def block_length(datum: WhittakerDatum, block: Block) -> int:
    return datum.n if block is Block.JI else datum.m


def check_hypotheses(datum: WhittakerDatum, block: Block) -> None:
    """Raise PreconditionViolated unless the lemma for this block applies to psi."""
    if not datum.alpha_top or not datum.beta_top:
        raise PreconditionViolated(f"need psi(I_{datum.top}) psi(J_{datum.top}) != 0")
    if block is Block.JI:
        if datum.n < 1:
            raise PreconditionViolated("the J/I block is empty when n = 0")
        if datum.m < datum.n and not datum.same_parity:
            raise PreconditionViolated("the J/I lemma needs m >= n or m, n of the same parity")
        return
    k = datum.top
    if k % 2 == 0 and k < 2 * datum.m:
        raise PreconditionViolated(f"the H/L lemma needs k = {k} odd or k >= 2m")
    if not datum.is_normalized():
        raise PreconditionViolated("the H/L lemma needs psi(L_p) = psi(H_p) = 0 for p >= m+n")


def classify(v: InducedVector, datum: WhittakerDatum, block: Block) -> ReductionCase:
    """The lemma case that applies to v, from the shape of its degree."""
    first, second = vector_degree(v, block, block_length(datum, block))
    if not first.is_zero():
        return ReductionCase.JI_J_NONZERO if block is Block.JI else ReductionCase.HL_H_NONZERO
    if not second.is_zero():
        return ReductionCase.JI_I_ONLY if block is Block.JI else ReductionCase.HL_L_ONLY
    raise PreconditionViolated("v is a multiple of w_psi")


def _operators(datum: WhittakerDatum, case: ReductionCase, position: int) -> List[Generator]:
    k = datum.top
    if case is ReductionCase.JI_J_NONZERO:
        return [Generator(Family.H, k - position)]
    if case is ReductionCase.JI_I_ONLY:
        return [Generator(Family.H, k - position), Generator(Family.L, k - position)]
    if case is ReductionCase.HL_H_NONZERO:
        return [Generator(Family.I, k - position)]
    return [Generator(Family.I, k - position), Generator(Family.J, k - position)]


def _prediction(case: ReductionCase, degree: Pair) -> Tuple[int, Pair]:
    first, second = degree
    length = first.length
    if case in (ReductionCase.JI_J_NONZERO, ReductionCase.HL_H_NONZERO):
        if first.is_zero():
            raise PreconditionViolated(f"case {case.value} needs a nonzero first block, degree is {format_pair(degree)}")
        r = first.lowest_nonzero()
        return r, (first - ExponentVector.unit(length, r), second)
    if not first.is_zero() or second.is_zero():
        raise PreconditionViolated(f"case {case.value} needs degree (0, i) with i != 0, got {format_pair(degree)}")
    s = second.highest_nonzero()
    return s, (first, second - ExponentVector.unit(length, s))


def check_degree_reduction(
    datum: WhittakerDatum,
    v: InducedVector,
    case: ReductionCase,
    module: Optional[WhittakerModule] = None,
) -> DegreeReductionReport:
    """
    Apply the operator(s) the lemma prescribes and compare degrees.

    Args:
        datum: Whittaker function satisfying the lemma's hypotheses
        v: Vector supported on the case's block, not a multiple of w_psi
        case: Which statement to check
        module: Reuse an existing module (and its action cache)

    Returns:
        DegreeReductionReport; passed when some prescribed operator hits the
        predicted degree

    Raises:
        PreconditionViolated: hypotheses fail, or v has the wrong block or shape
    """
    block = case.block
    check_hypotheses(datum, block)
    length = block_length(datum, block)
    try:
        degree = vector_degree(v, block, length)
    except ValueError as error:
        raise PreconditionViolated(str(error)) from error
    position, predicted = _prediction(case, degree)
    module = module or WhittakerModule(datum)
    report = DegreeReductionReport(case=case, degree=degree, predicted=predicted)
    for g in _operators(datum, case, position):
        image = module.act_shifted(g, v)
        observed = vector_degree(image, block, length) if image else None
        report.outcomes.append(OperatorOutcome(operator=f"{g} - psi({g})", degree=observed, matches=observed == predicted))
    logger.debug("%s on degree %s: %s", case.value, format_pair(degree), "ok" if report.passed else "FAILED")
    return report
