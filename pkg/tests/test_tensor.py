"""
Tests for Omega (x) R: restricted handles, the coproduct action and the probes.
"""

import pytest

from components.algebra.generators import Family, H, I, J, L
from components.arithmetic.polynomials import X, Y, constant, monomial, polynomial
from components.arithmetic.scalars import scalar, scalar_pow
from components.errors import DegenerateSystem, PreconditionViolated
from components.modules.omega import OmegaSpec, omega_act
from components.tensor.parameters import action_table, predicted_tensor_irreducible, recover_parameters
from components.tensor.probes import (
    JWitness,
    j_nilpotency_witness,
    lowering_obstruction,
    tensor_closure_probe,
    vandermonde_extract,
    vandermonde_reassemble,
)
from components.tensor.restricted import NO_BOUND, LiftKind, TrivialModule, WhittakerHandle, lift_restricted
from components.tensor.tensor_module import TensorVector, one_tensor, tensor_act, tensor_bound, verify_tensor_axioms
from components.whittaker.datum import validate_whittaker
from components.whittaker.induced import InducedVector, WhittakerModule, verify_whittaker_axioms


@pytest.fixture
def trivial():
    return TrivialModule()


@pytest.fixture
def w_handle(psi11):
    return WhittakerHandle(WhittakerModule(psi11), irreducible=True)


@pytest.fixture
def plain_spec():
    return OmegaSpec.sigma_zero(2, 0, constant(1))


@pytest.fixture
def plain_zero_sigma():
    return OmegaSpec.zero_sigma(2, 0, constant(1))


def test_trivial_module(trivial):
    w = trivial.canonical_vector()
    assert not trivial.act(L(0), w)
    assert trivial.annihilation_bound(w) == NO_BOUND
    with pytest.raises(KeyError):
        trivial.basis_vector("x")


def test_tensor_with_trivial_module_is_omega(sigma_zero_spec, trivial):
    w = trivial.canonical_vector()
    p = X**2 * Y + 3
    for g in (L(2), H(-1), I(1), J(0)):
        expected = TensorVector.pure(omega_act(sigma_zero_spec, g, p), w)
        assert tensor_act(sigma_zero_spec, trivial, g, TensorVector.pure(p, w)) == expected


def test_coproduct_rule_on_whittaker_side(plain_spec, w_handle):
    t = one_tensor(w_handle.canonical_vector())
    assert not tensor_act(plain_spec, w_handle, J(3), t)
    image = tensor_act(plain_spec, w_handle, I(1), t)
    assert image == TensorVector.pure(constant(2), InducedVector.cyclic()) + t


def test_j_acts_through_sigma_on_zero_sigma_variant(plain_zero_sigma, trivial):
    t = one_tensor(trivial.canonical_vector())
    assert tensor_act(plain_zero_sigma, trivial, J(3), t) == t.scale(scalar(8))


def test_tensor_axioms(plain_spec, plain_zero_sigma, w_handle, trivial):
    for spec in (plain_spec, plain_zero_sigma):
        for handle in (w_handle, trivial):
            w = handle.canonical_vector()
            vectors = [TensorVector.pure(monomial(a, b), w) for a in range(2) for b in range(2)]
            assert verify_tensor_axioms(spec, handle, vectors, 1) == []


def test_vandermonde_extraction_of_y_tensor(sigma_zero_spec, trivial):
    w = trivial.canonical_vector()
    extracted = vandermonde_extract(sigma_zero_spec, trivial, TensorVector.pure(Y, w))
    assert extracted == [TensorVector.pure(X * Y, w), TensorVector.pure(-X, w)]


def test_vandermonde_extraction_of_one_tensor(sigma_zero_spec, trivial):
    w = trivial.canonical_vector()
    assert vandermonde_extract(sigma_zero_spec, trivial, one_tensor(w)) == [TensorVector.pure(X, w)]


def test_vandermonde_top_component(plain_spec, w_handle):
    w = w_handle.canonical_vector()
    t = TensorVector.pure(X * Y**2 + Y, w) + TensorVector.pure(X**2, w)
    extracted = vandermonde_extract(plain_spec, w_handle, t)
    assert len(extracted) == 3
    assert extracted[-1] == TensorVector.pure(X**2, w)
    expected = tensor_act(plain_spec, w_handle, H(40), t).scale(scalar_pow(scalar(2), -40))
    assert vandermonde_reassemble(extracted, 40) == expected


def test_vandermonde_rejects_understated_degree(sigma_zero_spec, trivial):
    with pytest.raises(DegenerateSystem):
        vandermonde_extract(sigma_zero_spec, trivial, TensorVector.pure(Y**2, trivial.canonical_vector()), 1)


def test_closure_probe_regenerates_for_constant_sigma(plain_spec, w_handle):
    seed = TensorVector.pure(monomial(2, 1), w_handle.canonical_vector())
    report = tensor_closure_probe(plain_spec, w_handle, seed, 3)
    assert report.reached_one_tensor
    assert report.regenerated
    assert report.missing == []
    assert report.to_json()["j_witness"] == "locally_finite"


def _regeneration_steps(m, degree_bound):
    moves = [f"X^{i + 1} Y^0 from H[{m}] on X^{i} Y^0" for i in range(degree_bound)]
    for j in range(degree_bound):
        for i in range(degree_bound - j):
            moves.append(f"X^{i} Y^{j + 1} from L[{m}], L[{m + 1}] on X^{i} Y^{j}")
    return moves


def test_closure_probe_from_one_tensor(plain_spec, trivial):
    report = tensor_closure_probe(plain_spec, trivial, one_tensor(trivial.canonical_vector()), 2)
    assert report.reached_one_tensor
    assert report.regenerated
    assert report.steps == [
        "X^1 Y^0 from H[0] on X^0 Y^0",
        "X^2 Y^0 from H[0] on X^1 Y^0",
        "X^0 Y^1 from L[0], L[1] on X^0 Y^0",
        "X^1 Y^1 from L[0], L[1] on X^1 Y^0",
        "X^0 Y^2 from L[0], L[1] on X^0 Y^1",
    ]


def test_regeneration_moves_start_beyond_the_annihilation_bound(plain_spec, w_handle):
    start = one_tensor(w_handle.canonical_vector())
    n = tensor_bound(w_handle, start)
    report = tensor_closure_probe(plain_spec, w_handle, start, 3)
    assert report.regenerated
    assert report.missing == []
    assert report.steps == _regeneration_steps(n + 1, 3)


def test_closure_probe_reports_obstruction_for_nonconstant_sigma(w_handle):
    spec = OmegaSpec.sigma_zero(2, 0, X)
    seed = TensorVector.pure(monomial(2, 1), w_handle.canonical_vector())
    report = tensor_closure_probe(spec, w_handle, seed, 3)
    assert not report.reached_one_tensor
    assert report.obstruction == lowering_obstruction(spec)
    assert "obstruction" in report.to_json()


def test_closure_probe_rejects_zero_seed(plain_spec, trivial):
    with pytest.raises(ValueError):
        tensor_closure_probe(plain_spec, trivial, TensorVector.zero())


def test_j_witness_separates_variants(plain_spec, plain_zero_sigma, w_handle, trivial):
    assert j_nilpotency_witness(plain_spec, w_handle, one_tensor(w_handle.canonical_vector())) is JWitness.LOCALLY_FINITE
    assert j_nilpotency_witness(plain_zero_sigma, trivial, one_tensor(trivial.canonical_vector())) is JWitness.INJECTIVE_TAIL
    assert j_nilpotency_witness(plain_zero_sigma, trivial, TensorVector.zero()) is JWitness.LOCALLY_FINITE


def test_recover_parameters(sigma_zero_spec, zero_sigma_spec, delta_only_spec, w_handle, trivial):
    for spec in (sigma_zero_spec, zero_sigma_spec, delta_only_spec):
        for handle in (w_handle, trivial):
            assert recover_parameters(spec, handle).matches(spec), (spec.describe(), handle.describe())
    doubled = OmegaSpec.sigma_zero(4, "1/3", constant(1))
    assert not recover_parameters(doubled, trivial).matches(sigma_zero_spec)


def test_recover_nonconstant_sigma(trivial):
    spec = OmegaSpec.zero_sigma(scalar(0, 1), 5, X**2 - 2)
    recovered = recover_parameters(spec, trivial)
    assert recovered.matches(spec)
    assert recovered.sigma == polynomial({(2, 0): 1, (0, 0): -2})


def test_equal_parameters_give_equal_action_tables(sigma_zero_spec, psi11):
    first = WhittakerHandle(WhittakerModule(psi11))
    second = WhittakerHandle(WhittakerModule(validate_whittaker({"I[1]": "1", "J[1]": "1"}, 1, 1)))
    twin = OmegaSpec.from_json(sigma_zero_spec.to_json())
    assert action_table(sigma_zero_spec, first) == action_table(twin, second)


def test_tensor_irreducibility_prediction(sigma_zero_spec, delta_only_spec):
    assert predicted_tensor_irreducible(sigma_zero_spec, True)
    assert not predicted_tensor_irreducible(sigma_zero_spec, False)
    assert not predicted_tensor_irreducible(delta_only_spec, True)
    assert not predicted_tensor_irreducible(OmegaSpec.zero_sigma(2, 0, X), True)


def test_virasoro_lift_kills_other_families():
    datum = validate_whittaker({"L[1]": "1", "L[2]": "1"}, 1, 1)
    handle = lift_restricted(LiftKind.VIRASORO_STYLE, datum, irreducible=True)
    w = handle.canonical_vector()
    assert not handle.act(H(0), w)
    assert not handle.act(I(-3), w)
    assert handle.act(L(1), w) == w
    assert handle.module.families == frozenset({Family.L, Family.C1})
    assert verify_whittaker_axioms(datum, 2, 2, handle.module) == []


def test_heisenberg_virasoro_lift():
    datum = validate_whittaker({"L[1]": "1", "H[1]": "1"}, 1, 1)
    handle = lift_restricted("heisenberg_virasoro_style", datum)
    assert not handle.act(J(0), handle.canonical_vector())
    assert verify_whittaker_axioms(datum, 2, 2, handle.module) == []


def test_lift_validation(psi11):
    assert isinstance(lift_restricted(LiftKind.TRIVIAL), TrivialModule)
    with pytest.raises(ValueError):
        lift_restricted(LiftKind.VIRASORO_STYLE)
    with pytest.raises(PreconditionViolated):
        lift_restricted(LiftKind.VIRASORO_STYLE, psi11)
