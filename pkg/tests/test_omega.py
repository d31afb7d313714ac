"""
Tests for the U(h)-free modules on C[X, Y], their closure probe and ideal submodules.
"""

import pytest

from components.algebra.brackets import bracket_basis
from components.algebra.generators import C1, H, I, J, L
from components.arithmetic.polynomials import X, Y, constant, constant_term, monomial, poly_shift, polynomial
from components.arithmetic.scalars import ONE, scalar, scalar_pow
from components.errors import InvalidSpec
from components.modules.closure import submodule_closure_probe
from components.modules.ideals import predicted_irreducible, reducibility_witness, verify_ideal_submodule
from components.modules.omega import OmegaSpec, OmegaVariant, omega_act, omega_act_element, verify_omega_axioms


@pytest.fixture
def plain_spec():
    """Omega(2, 0, 1, 0)."""
    return OmegaSpec.sigma_zero(2, 0, constant(1))


def test_l_action_formula(plain_spec):
    assert omega_act(plain_spec, L(1), Y) == (Y - 1) * (Y - X) * 2


def test_i_action_with_negative_index(plain_spec):
    assert omega_act(plain_spec, I(-1), X**2) == (X - 1) ** 2 * scalar("1/2")


def test_inactive_families_and_centrals_act_as_zero(plain_spec, zero_sigma_spec, delta_only_spec):
    assert not omega_act(plain_spec, J(5), X * Y)
    assert not omega_act(zero_sigma_spec, I(2), X * Y)
    assert not omega_act(delta_only_spec, I(1), Y)
    assert not omega_act(delta_only_spec, J(1), Y)
    assert not omega_act(plain_spec, C1, Y)


def test_j_action_on_zero_sigma_variant(zero_sigma_spec):
    assert omega_act(zero_sigma_spec, J(3), constant(1)) == constant(8)
    assert omega_act(zero_sigma_spec, J(1), X) == (X + 1) * 2


def test_h_action_shape(sigma_zero_spec, zero_sigma_spec, delta_only_spec):
    f = X**2 * Y + Y**3
    for spec in (sigma_zero_spec, zero_sigma_spec, delta_only_spec):
        for m in (-2, 0, 3):
            expected = X * poly_shift(f, 0, -m) * scalar_pow(spec.lam, m)
            assert omega_act(spec, H(m), f) == expected


def test_bracket_acts_as_commutator(plain_spec):
    f = X
    left = omega_act_element(plain_spec, bracket_basis(L(1), L(-1)), f)
    right = omega_act(plain_spec, L(1), omega_act(plain_spec, L(-1), f)) - omega_act(
        plain_spec, L(-1), omega_act(plain_spec, L(1), f)
    )
    assert left == right == X * Y * -2


def test_module_axioms_hold(sigma_zero_spec, zero_sigma_spec, delta_only_spec):
    for spec in (sigma_zero_spec, zero_sigma_spec, delta_only_spec):
        assert verify_omega_axioms(spec, 2, 2) == [], spec.describe()


def test_module_axioms_with_nonconstant_sigma():
    spec = OmegaSpec.zero_sigma(scalar(1, 1), "1/2", X**2 + 3)
    assert verify_omega_axioms(spec, 2, 1) == []


@pytest.mark.slow
def test_module_axioms_at_acceptance_bounds(sigma_zero_spec, zero_sigma_spec, delta_only_spec):
    for spec in (sigma_zero_spec, zero_sigma_spec, delta_only_spec):
        assert verify_omega_axioms(spec, 4, 3) == []


@pytest.mark.parametrize(
    "build",
    [
        lambda: OmegaSpec.sigma_zero(0, 0, constant(1)),
        lambda: OmegaSpec.sigma_zero(1, 0, polynomial({})),
        lambda: OmegaSpec.zero_sigma(1, 0, Y),
        lambda: OmegaSpec.delta_only(1, X * Y),
        lambda: OmegaSpec(OmegaVariant.DELTA_ONLY, ONE, eta=ONE, delta=X),
        lambda: OmegaSpec(OmegaVariant.SIGMA_ZERO, ONE, sigma=constant(1)),
    ],
)
def test_invalid_specs_are_rejected(build):
    with pytest.raises(InvalidSpec):
        build()


def test_spec_json_round_trip(sigma_zero_spec, delta_only_spec):
    for spec in (sigma_zero_spec, delta_only_spec):
        assert OmegaSpec.from_json(spec.to_json()) == spec
    assert sigma_zero_spec.describe() == "Omega(2, 1/3, (1), 0)"


def test_closure_reaches_one_for_constant_sigma(plain_spec):
    report = submodule_closure_probe(plain_spec, monomial(3, 2), 4, 8)
    assert report.contains_one
    assert report.verdict == "generates the whole module"


def test_closure_stays_in_sigma_ideal():
    spec = OmegaSpec.sigma_zero(2, 0, X)
    report = submodule_closure_probe(spec, X * Y, 3, 6)
    assert not report.contains_one
    assert all(not constant_term(p) for p in report.basis)


def test_closure_never_reaches_one_for_delta_only(delta_only_spec):
    report = submodule_closure_probe(delta_only_spec, Y, 3, 6)
    assert not report.contains_one
    assert report.to_json()["contains_one"] is False


def test_closure_rejects_bad_seeds(plain_spec):
    with pytest.raises(ValueError):
        submodule_closure_probe(plain_spec, polynomial({}), 2, 4)
    with pytest.raises(ValueError):
        submodule_closure_probe(plain_spec, monomial(3, 3), 2, 4)


def test_irreducibility_prediction(sigma_zero_spec, zero_sigma_spec, delta_only_spec):
    assert predicted_irreducible(sigma_zero_spec)
    assert predicted_irreducible(zero_sigma_spec)
    assert not predicted_irreducible(delta_only_spec)
    assert not predicted_irreducible(OmegaSpec.sigma_zero(2, 0, X))


def test_reducibility_witness():
    assert reducibility_witness(OmegaSpec.sigma_zero(2, 0, constant(3))) is None
    g, reason = reducibility_witness(OmegaSpec.zero_sigma(2, 0, X + 1))
    assert g == X + 1
    assert "proper submodule" in reason
    g, _ = reducibility_witness(OmegaSpec.delta_only(2, constant(0) + X))
    assert g == X


def test_ideal_submodules_are_stable():
    spec = OmegaSpec.sigma_zero(2, "1/3", X + 1)
    assert verify_ideal_submodule(spec, X + 1, 2, 2) == []
    spec = OmegaSpec.delta_only(3, X**2 - 1)
    assert verify_ideal_submodule(spec, X, 2, 2) == []


def test_ideal_check_finds_escapes(plain_spec):
    assert verify_ideal_submodule(plain_spec, X, 1, 1)
    with pytest.raises(ValueError):
        verify_ideal_submodule(plain_spec, constant(2), 1, 1)
