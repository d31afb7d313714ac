"""
Campaign configuration models, one per CLI command.

Scalars are strings in the "a/b+c/d*i" form, polynomials are lists of
{xexp, yexp, coeff} terms and generators are "L[5]"-style names. Unknown keys
are rejected everywhere.
"""

from typing import Annotated, Any, Dict, List, Literal, Optional

from pydantic import AfterValidator, BaseModel, ConfigDict, Field, PositiveInt, field_validator, model_validator

from components.algebra.generators import Family, parse_generator
from components.arithmetic.polynomials import BivariatePolynomial, polynomial_from_json
from components.arithmetic.scalars import parse_scalar
from components.modules.omega import OmegaSpec, OmegaVariant
from components.tensor.restricted import LiftKind
from components.whittaker.datum import WhittakerDatum, whittaker_from_json


def _check_scalar(text: str) -> str:
    parse_scalar(text)
    return text


ScalarText = Annotated[str, AfterValidator(_check_scalar)]


class StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)


class PolynomialTerm(StrictModel):
    xexp: int = Field(ge=0)
    yexp: int = Field(default=0, ge=0)
    coeff: ScalarText


def _polynomial(terms: Optional[List[PolynomialTerm]]) -> Optional[BivariatePolynomial]:
    if terms is None:
        return None
    return polynomial_from_json([term.model_dump() for term in terms])


class OmegaSpecConfig(StrictModel):
    """One Omega module; built and validated as soon as it is parsed."""

    variant: OmegaVariant
    lam: ScalarText = Field(alias="lambda")
    eta: Optional[ScalarText] = None
    sigma: Optional[List[PolynomialTerm]] = None
    delta: Optional[List[PolynomialTerm]] = None

    @model_validator(mode="after")
    def _buildable(self) -> "OmegaSpecConfig":
        self.to_spec()
        return self

    def to_spec(self) -> OmegaSpec:
        return OmegaSpec(
            self.variant,
            parse_scalar(self.lam),
            parse_scalar(self.eta) if self.eta is not None else None,
            sigma=_polynomial(self.sigma),
            delta=_polynomial(self.delta),
        )


class WhittakerConfig(StrictModel):
    m: int = Field(ge=1)
    n: int = Field(ge=0)
    values: Dict[str, ScalarText] = Field(default_factory=dict)
    centrals: Dict[str, ScalarText] = Field(default_factory=dict)

    @field_validator("values", "centrals")
    @classmethod
    def _generator_names(cls, value: Dict[str, str]) -> Dict[str, str]:
        for name in value:
            parse_generator(name)
        return value

    @model_validator(mode="after")
    def _buildable(self) -> "WhittakerConfig":
        self.to_datum()
        return self

    def to_datum(self) -> WhittakerDatum:
        return whittaker_from_json(self.model_dump())


def _omega(variant: str, lam: str, sigma: Optional[str] = None, eta: str = "1/3") -> Dict[str, Any]:
    if variant == OmegaVariant.DELTA_ONLY.value:
        return {"variant": variant, "lambda": lam, "delta": [{"xexp": 1, "yexp": 0, "coeff": "1"}]}
    if sigma == "X":
        terms = [{"xexp": 1, "yexp": 0, "coeff": "1"}]
    else:
        terms = [{"xexp": 0, "yexp": 0, "coeff": sigma or "1"}]
    return {"variant": variant, "lambda": lam, "eta": eta, "sigma": terms}


def _default_omega_specs() -> List[OmegaSpecConfig]:
    raw = [
        _omega("sigma_zero", "2", "1"),
        _omega("zero_sigma", "2", "1"),
        _omega("sigma_zero", "2", "X"),
        _omega("zero_sigma", "2", "X"),
        _omega("delta_only", "2"),
    ]
    return [OmegaSpecConfig.model_validate(item) for item in raw]


class CampaignBase(StrictModel):
    seed: Optional[int] = None


class VerifyAlgebraConfig(CampaignBase):
    index_bound: PositiveInt = 3
    subalgebra_index_bound: PositiveInt = 3
    translation: Dict[str, ScalarText] = Field(default_factory=lambda: {"I[-1]": "-1", "J[-1]": "-1"})
    translation_index_bound: PositiveInt = 3
    straightening_words: int = Field(default=100, ge=0)
    word_length: PositiveInt = 5
    word_index_bound: PositiveInt = 3

    @field_validator("translation")
    @classmethod
    def _ij_span(cls, value: Dict[str, str]) -> Dict[str, str]:
        for name in value:
            g = parse_generator(name)
            if g.family not in (Family.I, Family.J):
                raise ValueError(f"translations live in the I/J span, got {name}")
        return value


class ClosureSettings(StrictModel):
    seeds: int = Field(default=4, ge=0)
    index_bound: PositiveInt = 3
    degree_cap: PositiveInt = 6
    seed_degree: PositiveInt = 3

    @model_validator(mode="after")
    def _seed_fits(self) -> "ClosureSettings":
        if self.seed_degree > self.degree_cap:
            raise ValueError(f"seed_degree {self.seed_degree} exceeds degree_cap {self.degree_cap}")
        return self


class VerifyOmegaConfig(CampaignBase):
    specs: List[OmegaSpecConfig] = Field(default_factory=_default_omega_specs)
    index_bound: PositiveInt = 3
    basis_cap: int = Field(default=2, ge=0)
    closure: ClosureSettings = Field(default_factory=ClosureSettings)
    ideal_basis_cap: int = Field(default=2, ge=0)


class SearchCase(StrictModel):
    name: str
    whittaker: WhittakerConfig
    weight_bound: PositiveInt = 2
    normalize: bool = False
    expect: Literal["none", "witness"] = "witness"


def _default_search_cases() -> List[SearchCase]:
    raw = [
        {"name": "psi_{1,2} alpha=beta=1", "whittaker": {"m": 1, "n": 2, "values": {"I[2]": "1", "J[2]": "1"}}, "weight_bound": 1},
        {"name": "psi_{1,1} I_1 = 0", "whittaker": {"m": 1, "n": 1, "values": {"J[1]": "1"}}, "weight_bound": 1},
        {"name": "psi_{1,1} alpha=beta=1", "whittaker": {"m": 1, "n": 1, "values": {"I[1]": "1", "J[1]": "1"}}, "weight_bound": 2, "expect": "none"},
    ]
    return [SearchCase.model_validate(item) for item in raw]


class WhittakerSearchConfig(CampaignBase):
    cases: List[SearchCase] = Field(default_factory=_default_search_cases)
    axiom_index_bound: PositiveInt = 2
    axiom_weight_bound: int = Field(default=2, ge=0)
    restricted_probes: PositiveInt = 5


class TwistCase(StrictModel):
    whittaker: WhittakerConfig
    expected_a: Optional[List[ScalarText]] = None
    expected_b: Optional[List[ScalarText]] = None


def _default_twist_cases() -> List[TwistCase]:
    raw = [
        {
            "whittaker": {"m": 1, "n": 1, "values": {"I[1]": "1", "J[1]": "1", "L[2]": "6"}},
            "expected_a": ["1"],
            "expected_b": ["1"],
        },
        {"whittaker": {"m": 2, "n": 0, "values": {"I[0]": "2", "I[1]": "1", "J[0]": "-1", "J[1]": "3", "L[2]": "1", "L[3]": "2", "L[4]": "-1", "H[2]": "5", "H[3]": "1/2"}}},
    ]
    return [TwistCase.model_validate(item) for item in raw]


class TwistConfig(CampaignBase):
    cases: List[TwistCase] = Field(default_factory=_default_twist_cases)
    automorphism_index_bound: PositiveInt = 2


class Psi14Config(CampaignBase):
    alpha: ScalarText = "1"
    beta: ScalarText = "1"
    random_pairs: int = Field(default=5, ge=0)
    index_limit: PositiveInt = 12
    search_weight_bound: int = Field(default=2, ge=0)


class RestrictedConfig(StrictModel):
    kind: Literal["trivial", "whittaker", "virasoro_style", "heisenberg_virasoro_style"] = "trivial"
    whittaker: Optional[WhittakerConfig] = None
    irreducible: bool = True

    @model_validator(mode="after")
    def _data_present(self) -> "RestrictedConfig":
        if self.kind != LiftKind.TRIVIAL.value and self.whittaker is None:
            raise ValueError(f"restricted kind {self.kind} needs whittaker data")
        return self


class TensorInstance(StrictModel):
    name: str
    omega: OmegaSpecConfig
    restricted: RestrictedConfig = Field(default_factory=RestrictedConfig)


def _default_tensor_instances() -> List[TensorInstance]:
    psi11 = {"m": 1, "n": 1, "values": {"I[1]": "1", "J[1]": "1"}}
    raw = [
        {"name": "sigma_zero (x) trivial", "omega": _omega("sigma_zero", "2", "1"), "restricted": {"kind": "trivial"}},
        {"name": "zero_sigma (x) trivial", "omega": _omega("zero_sigma", "2", "1"), "restricted": {"kind": "trivial"}},
        {"name": "sigma_zero (x) W_psi11", "omega": _omega("sigma_zero", "2", "1", eta="0"), "restricted": {"kind": "whittaker", "whittaker": psi11}},
        {"name": "zero_sigma (x) W_psi11", "omega": _omega("zero_sigma", "2", "1", eta="0"), "restricted": {"kind": "whittaker", "whittaker": psi11}},
    ]
    return [TensorInstance.model_validate(item) for item in raw]


class TensorProbeConfig(CampaignBase):
    instances: List[TensorInstance] = Field(default_factory=_default_tensor_instances)
    axiom_index_bound: PositiveInt = 2
    degree_bound: PositiveInt = 3
    fresh_points: PositiveInt = 3
    lift_index_bound: PositiveInt = 2
    lift_weight_bound: int = Field(default=2, ge=0)


def _default_degree_cases() -> List[WhittakerConfig]:
    raw = [
        {"m": 1, "n": 1, "values": {"I[1]": "1", "J[1]": "1"}},
        {"m": 2, "n": 2, "values": {"I[3]": "1", "J[3]": "1"}},
        {"m": 3, "n": 1, "values": {"I[3]": "1", "J[3]": "1"}},
    ]
    return [WhittakerConfig.model_validate(item) for item in raw]


class DegreeCheckConfig(CampaignBase):
    cases: List[WhittakerConfig] = Field(default_factory=_default_degree_cases)
    samples: PositiveInt = 50
    order_pairs: PositiveInt = 200
    order_length: PositiveInt = 3
    induction_samples: PositiveInt = 20
    max_terms: PositiveInt = 3
    max_length: PositiveInt = 3


CONFIG_MODELS = {
    "verify-algebra": VerifyAlgebraConfig,
    "verify-omega": VerifyOmegaConfig,
    "whittaker-search": WhittakerSearchConfig,
    "twist": TwistConfig,
    "psi14": Psi14Config,
    "tensor-probe": TensorProbeConfig,
    "degree-check": DegreeCheckConfig,
}

COMMANDS = tuple(CONFIG_MODELS)
