"""
The tensor-probe campaign on Omega (x) R.
"""

import logging
import random
from typing import Any, Dict

from components.arithmetic.polynomials import monomial
from components.modules.omega import OmegaSpec, OmegaVariant
from components.tensor.parameters import action_table, recover_parameters
from components.tensor.probes import (
    JWitness,
    extraction_points,
    j_nilpotency_witness,
    lowering_obstruction,
    scaled_h,
    tensor_closure_probe,
    vandermonde_extract,
    vandermonde_reassemble,
)
from components.tensor.restricted import (
    LiftKind,
    RestrictedModuleHandle,
    TrivialModule,
    WhittakerHandle,
    lift_restricted,
)
from components.tensor.tensor_module import TensorVector, one_tensor, verify_tensor_axioms
from components.verification.checks import CheckOutcome, CheckRecorder, violation_details
from components.verification.oracles import oracle
from components.whittaker.induced import WhittakerModule, verify_whittaker_axioms
from models.campaign import RestrictedConfig, TensorInstance, TensorProbeConfig

logger = logging.getLogger(__name__)


def build_handle(config: RestrictedConfig) -> RestrictedModuleHandle:
    """The restricted module an instance config describes."""
    if config.kind == LiftKind.TRIVIAL.value:
        return TrivialModule()
    datum = config.whittaker.to_datum()
    if config.kind == "whittaker":
        return WhittakerHandle(WhittakerModule(datum), irreducible=config.irreducible)
    return lift_restricted(LiftKind(config.kind), datum, irreducible=config.irreducible)


def expected_j_witness(spec: OmegaSpec) -> JWitness:
    """J_m acts on Omega only in the (0, sigma) variant."""
    if spec.variant is OmegaVariant.ZERO_SIGMA:
        return JWitness.INJECTIVE_TAIL
    return JWitness.LOCALLY_FINITE


class TensorCampaignHandler:
    """Runs tensor-probe."""

    def tensor_probe(self, config: TensorProbeConfig, rng: random.Random, recorder: CheckRecorder) -> Dict[str, Any]:
        j_witnesses = {}
        for position, instance in enumerate(config.instances, start=1):
            logger.info("running tensor-probe instance %d/%d: %s", position, len(config.instances), instance.name)
            spec = instance.omega.to_spec()
            handle_check = recorder.run(
                "restricted",
                f"{instance.name}: build R",
                lambda instance=instance: self._build(instance, config),
            )
            if not handle_check.passed:
                continue
            handle = build_handle(instance.restricted)
            name = instance.name
            w = handle.canonical_vector()
            seed = TensorVector.pure(monomial(2, 1), w)

            recorder.violations(
                "tensor module",
                f"{name}: module axiom",
                lambda spec=spec, handle=handle, w=w: verify_tensor_axioms(
                    spec,
                    handle,
                    [TensorVector.pure(monomial(a, b), w) for a in range(2) for b in range(2)],
                    config.axiom_index_bound,
                ),
                index_bound=config.axiom_index_bound,
            )
            recorder.run(
                "Theorem 4.1",
                f"{name}: Vandermonde extraction",
                lambda spec=spec, handle=handle, seed=seed: self._extraction(spec, handle, seed, config),
            )
            recorder.run(
                "Theorem 4.1",
                f"{name}: closure probe from X^2 Y (x) w",
                lambda spec=spec, handle=handle, seed=seed: self._closure(spec, handle, seed, config),
            )
            check = recorder.run(
                "Theorem 4.3(3)",
                f"{name}: J-nilpotency witness",
                lambda spec=spec, handle=handle, w=w: self._j_witness(spec, handle, w),
            )
            j_witnesses[name] = check.details.get("witness")
            recorder.run(
                "Theorem 4.3",
                f"{name}: parameter read-out",
                lambda spec=spec, handle=handle: self._parameters(spec, handle),
            )
            recorder.run(
                "Theorem 4.3",
                f"{name}: equal parameters give equal actions",
                lambda spec=spec, handle=handle, instance=instance: self._equal_parameters(spec, handle, instance),
            )
        return {"j_witnesses": j_witnesses}

    @staticmethod
    def _build(instance: TensorInstance, config: TensorProbeConfig) -> CheckOutcome:
        handle = build_handle(instance.restricted)
        details: Dict[str, Any] = {"restricted": handle.describe(), "irreducible": handle.irreducible}
        if not isinstance(handle, WhittakerHandle):
            return True, details
        module = handle.module
        # The axiom runs over all four families, so killed families must form an ideal.
        violations = verify_whittaker_axioms(module.datum, config.lift_index_bound, config.lift_weight_bound, module)
        details.update(violation_details(violations, acting=sorted(family.value for family in module.families)))
        return not violations, details

    @staticmethod
    def _extraction(spec: OmegaSpec, handle: RestrictedModuleHandle, seed: TensorVector, config: TensorProbeConfig) -> CheckOutcome:
        t = seed + TensorVector.pure(monomial(1, 0), handle.canonical_vector())
        extracted = vandermonde_extract(spec, handle, t)
        last = extraction_points(handle, t, t.y_degree())[-1]
        fresh = list(range(last + 2, last + 2 + config.fresh_points))
        mismatches = [m for m in fresh if vandermonde_reassemble(extracted, m) != scaled_h(spec, handle, m, t)]
        return not mismatches, {
            "vector": str(t),
            "components": [str(v) for v in extracted],
            "fresh_points": fresh,
            "mismatches": mismatches,
        }

    @staticmethod
    def _closure(spec: OmegaSpec, handle: RestrictedModuleHandle, seed: TensorVector, config: TensorProbeConfig) -> CheckOutcome:
        report = tensor_closure_probe(spec, handle, seed, config.degree_bound)
        movable = lowering_obstruction(spec) is None
        details = report.to_json()
        details["oracle"] = oracle.tensor(spec, handle.irreducible)
        if movable:
            return report.reached_one_tensor and report.regenerated, details
        return report.obstruction is not None, details

    @staticmethod
    def _j_witness(spec: OmegaSpec, handle: RestrictedModuleHandle, w) -> CheckOutcome:
        observed = j_nilpotency_witness(spec, handle, one_tensor(w))
        expected = expected_j_witness(spec)
        return observed is expected, {"witness": observed.value, "expected": expected.value}

    @staticmethod
    def _parameters(spec: OmegaSpec, handle: RestrictedModuleHandle) -> CheckOutcome:
        recovered = recover_parameters(spec, handle)
        rescaled = OmegaSpec(spec.variant, spec.lam * 2, spec.eta, sigma=spec.sigma, delta=spec.delta)
        separated = not recover_parameters(rescaled, handle).matches(spec)
        return recovered.matches(spec) and separated, {
            "expected": spec.to_json(),
            "recovered": recovered.to_json(),
            "lambda_change_detected": separated,
        }

    @staticmethod
    def _equal_parameters(spec: OmegaSpec, handle: RestrictedModuleHandle, instance: TensorInstance) -> CheckOutcome:
        twin_spec = OmegaSpec.from_json(spec.to_json())
        twin_handle = build_handle(instance.restricted)
        first = action_table(spec, handle)
        second = action_table(twin_spec, twin_handle)
        differing = sorted(key for key in first if first[key] != second.get(key))
        return not differing and first.keys() == second.keys(), {"probes": len(first), "differing": differing[:5]}


# Create a singleton instance
tensor_handler = TensorCampaignHandler()
