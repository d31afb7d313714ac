"""
Campaigns for the algebra itself and for the rank-one free modules.
"""

import logging
import random
from typing import Any, Dict, List

from components.algebra.brackets import (
    bracket_basis,
    verify_antisymmetry,
    verify_grading,
    verify_jacobi,
    verify_subalgebra_closure,
)
from components.algebra.elements import AlgebraElement
from components.algebra.subalgebras import named_subalgebras
from components.algebra.translations import IJTranslation, verify_translation_automorphism
from components.arithmetic.polynomials import format_polynomial, total_degree
from components.enveloping.pbw import (
    LEFTMOST,
    RIGHTMOST,
    EnvelopingElement,
    monomials_to_json,
    straighten,
    straightening_cache_size,
)
from components.modules.closure import submodule_closure_probe
from components.modules.ideals import reducibility_witness, verify_ideal_submodule
from components.modules.omega import OmegaSpec, verify_omega_axioms
from components.verification.checks import SAMPLE_SIZE, CheckOutcome, CheckRecorder
from components.verification.oracles import oracle
from models.campaign import VerifyAlgebraConfig, VerifyOmegaConfig
from utils.sampling import random_generator, random_polynomial, random_word

logger = logging.getLogger(__name__)


def _as_enveloping(x: AlgebraElement) -> EnvelopingElement:
    return EnvelopingElement.sum_of((coeff, EnvelopingElement.from_word((g,))) for g, coeff in x.items())


class AlgebraCampaignHandler:
    """Runs verify-algebra and verify-omega."""

    def verify_algebra(self, config: VerifyAlgebraConfig, rng: random.Random, recorder: CheckRecorder) -> Dict[str, Any]:
        bound = config.index_bound
        logger.info("Checking structure constants up to |index| <= %d", bound)
        recorder.violations("Definition 2.1", "antisymmetry", lambda: verify_antisymmetry(bound), index_bound=bound)
        recorder.violations("Definition 2.1", "Jacobi identity", lambda: verify_jacobi(bound), index_bound=bound)
        recorder.violations("grading", "Z-grading of brackets", lambda: verify_grading(bound), index_bound=bound)

        for name, member in named_subalgebras().items():
            recorder.violations(
                "subalgebras",
                f"{name} closed under brackets",
                lambda member=member: verify_subalgebra_closure(member, config.subalgebra_index_bound),
                index_bound=config.subalgebra_index_bound,
            )

        def automorphism() -> CheckOutcome:
            translation = IJTranslation(AlgebraElement.from_json(config.translation))
            found = verify_translation_automorphism(translation, config.translation_index_bound)
            return not found, {
                "translation": translation.to_json(),
                "index_bound": config.translation_index_bound,
                "violations": len(found),
                "first_violations": found[:SAMPLE_SIZE],
            }

        recorder.run("Theorem 3.5", "exp(ad_x) is an automorphism", automorphism)
        recorder.run("PBW", "leftmost and rightmost straightening agree", lambda: self._confluence(config, rng))
        recorder.run("PBW", "straightened commutators equal brackets", lambda: self._commutators(config, rng))
        return {"index_bound": bound, "straightening_cache": straightening_cache_size()}

    @staticmethod
    def _confluence(config: VerifyAlgebraConfig, rng: random.Random) -> CheckOutcome:
        mismatches: List[Dict[str, Any]] = []
        for _ in range(config.straightening_words):
            word = random_word(rng, config.word_length, config.word_index_bound)
            left = straighten(word, LEFTMOST)
            right = straighten(word, RIGHTMOST)
            if left != right:
                mismatches.append({
                    "word": [str(g) for g in word],
                    "leftmost": monomials_to_json(left),
                    "rightmost": monomials_to_json(right),
                })
        return not mismatches, {
            "words": config.straightening_words,
            "max_length": config.word_length,
            "index_bound": config.word_index_bound,
            "mismatches": len(mismatches),
            "first_mismatches": mismatches[:SAMPLE_SIZE],
        }

    @staticmethod
    def _commutators(config: VerifyAlgebraConfig, rng: random.Random) -> CheckOutcome:
        failures = []
        for _ in range(config.straightening_words):
            g = random_generator(rng, config.word_index_bound)
            h = random_generator(rng, config.word_index_bound)
            commutator = straighten((g, h)) - straighten((h, g))
            if commutator != _as_enveloping(bracket_basis(g, h)):
                failures.append([str(g), str(h)])
        return not failures, {"pairs": config.straightening_words, "failures": failures[:SAMPLE_SIZE]}

    def verify_omega(self, config: VerifyOmegaConfig, rng: random.Random, recorder: CheckRecorder) -> Dict[str, Any]:
        predictions = {}
        for position, spec_config in enumerate(config.specs, start=1):
            spec = spec_config.to_spec()
            label = spec.describe()
            logger.info("running verify-omega spec %d/%d: %s", position, len(config.specs), label)
            predictions[label] = oracle.omega(spec)
            recorder.violations(
                "Omega module",
                f"{label} module axiom",
                lambda spec=spec: verify_omega_axioms(spec, config.index_bound, config.basis_cap),
                index_bound=config.index_bound,
                basis_cap=config.basis_cap,
            )
            recorder.run("Lemma 2.7", f"{label} closure probe", lambda spec=spec: self._closure(spec, config, rng))
            witness = reducibility_witness(spec)
            if witness is not None:
                g, reason = witness
                recorder.violations(
                    "Omega module",
                    f"{label} ideal {format_polynomial(g)} is a submodule",
                    lambda spec=spec, g=g: verify_ideal_submodule(spec, g, config.index_bound, config.ideal_basis_cap),
                    reason=reason,
                )
        return {"predictions": predictions}

    @staticmethod
    def _closure(spec: OmegaSpec, config: VerifyOmegaConfig, rng: random.Random) -> CheckOutcome:
        """
        Irreducible specs must reach 1 from random seeds; reducible ones must
        not reach 1 from seeds inside the witness ideal.
        """
        settings = config.closure
        prediction = oracle.omega(spec)
        witness = reducibility_witness(spec)
        runs = []
        for _ in range(settings.seeds):
            if witness is None:
                seed = random_polynomial(rng, settings.seed_degree)
            else:
                g = witness[0]
                seed = g * random_polynomial(rng, max(0, settings.seed_degree - total_degree(g)))
            report = submodule_closure_probe(spec, seed, settings.index_bound, settings.degree_cap)
            runs.append({
                "seed": format_polynomial(seed),
                "dimension": report.dimension,
                "contains_one": report.contains_one,
                "truncated": report.truncated,
            })
        reached = [run["contains_one"] for run in runs]
        passed = all(reached) if witness is None else not any(reached)
        details = {
            "index_bound": settings.index_bound,
            "degree_cap": settings.degree_cap,
            "runs": runs,
            "oracle": oracle.agreement(prediction, observed_reducible=not any(reached)),
        }
        if witness is not None:
            details["obstruction"] = witness[1]
        return passed, details


# Create a singleton instance
algebra_handler = AlgebraCampaignHandler()
