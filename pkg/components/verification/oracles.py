"""
Irreducibility predictions placed next to probe outcomes in reports.
"""

import logging
from typing import Any, Dict

from components.modules.ideals import predicted_irreducible
from components.modules.omega import OmegaSpec
from components.tensor.parameters import predicted_tensor_irreducible
from components.whittaker.datum import WhittakerDatum
from components.whittaker.induction import WhittakerPrediction, predicted_whittaker_irreducible

logger = logging.getLogger(__name__)


class IrreducibilityOracle:
    """
    Collects the irreducibility criteria for the three module families.

    Predictions are labels, never checks: a campaign compares them with what
    its probes observed.
    """

    @staticmethod
    def omega(spec: OmegaSpec) -> str:
        return "irreducible" if predicted_irreducible(spec) else "reducible"

    @staticmethod
    def whittaker(datum: WhittakerDatum) -> str:
        return predicted_whittaker_irreducible(datum).value

    @staticmethod
    def tensor(spec: OmegaSpec, restricted_irreducible: bool) -> str:
        return "irreducible" if predicted_tensor_irreducible(spec, restricted_irreducible) else "reducible"

    @staticmethod
    def expects_whittaker_vector(datum: WhittakerDatum) -> bool:
        """A proper submodule generated by a Whittaker vector is expected."""
        return predicted_whittaker_irreducible(datum) is not WhittakerPrediction.IRREDUCIBLE

    @staticmethod
    def agreement(prediction: str, observed_reducible: bool) -> Dict[str, Any]:
        """
        Compare a label with probe evidence.

        Conjectural labels agree with anything; the evidence is recorded
        alongside.
        """
        if prediction == WhittakerPrediction.CONJECTURED_REDUCIBLE.value:
            agrees = True
        else:
            agrees = (prediction == "reducible") == observed_reducible
        return {"prediction": prediction, "observed_reducible": observed_reducible, "agrees": agrees}


# Create a singleton instance
oracle = IrreducibilityOracle()
