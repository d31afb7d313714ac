"""
Tests for Whittaker data, the induced module W_psi and the Whittaker-vector search.
"""

import pytest

from components.algebra.generators import C2, Family, H, I, J, L
from components.arithmetic.matrices import matrix_determinant, matrix_nullspace
from components.arithmetic.scalars import ONE, scalar
from components.errors import DerivedAlgebraViolation, OutOfSubalgebra, PreconditionViolated
from components.whittaker.datum import forced_zero, validate_whittaker, whittaker_from_json
from components.whittaker.examples import example_psi14_witness, example_witness, psi14_matrix
from components.whittaker.induced import InducedVector, WhittakerModule, verify_restricted, verify_whittaker_axioms
from components.whittaker.induction import (
    WhittakerPrediction,
    first_hypothesis_holds,
    induction_hypothesis_probe,
    predicted_whittaker_irreducible,
)
from components.whittaker.singular_search import index_max, is_whittaker_vector, singular_vector_search


def test_valid_datum(psi11):
    assert psi11.alpha_top == ONE
    assert psi11.beta_top == ONE
    assert psi11.same_parity
    assert psi11.is_normalized()
    assert not psi11.value(L(2))


def test_datum_rejects_derived_algebra_values():
    with pytest.raises(DerivedAlgebraViolation):
        validate_whittaker({"I[2]": "1"}, 1, 1)
    with pytest.raises(DerivedAlgebraViolation):
        validate_whittaker({"H[2]": "1"}, 1, 1)


def test_datum_rejects_values_outside_subalgebra():
    with pytest.raises(OutOfSubalgebra):
        validate_whittaker({"L[0]": "1"}, 1, 1)
    with pytest.raises(PreconditionViolated):
        validate_whittaker({}, 0, 1)


def test_forced_zero_thresholds():
    assert forced_zero(L(3), 1, 1) and not forced_zero(L(2), 1, 1)
    assert forced_zero(H(2), 1, 5) and not forced_zero(H(1), 1, 5)
    assert forced_zero(J(6), 1, 5) and not forced_zero(J(5), 1, 5)


def test_datum_json_round_trip():
    data = {"m": 2, "n": 1, "values": {"I[2]": "1", "L[3]": "1/2", "H[2]": "0"}, "centrals": {"c1": "i"}}
    datum = whittaker_from_json(data)
    assert datum.to_json() == {"m": 2, "n": 1, "values": {"I[2]": "1", "L[3]": "1/2"}, "centrals": {"c1": "1*i"}}
    assert whittaker_from_json(datum.to_json()) == datum


def test_generator_acts_on_cyclic_vector_by_its_value(psi11):
    module = WhittakerModule(psi11)
    w = InducedVector.cyclic()
    assert module.act(I(1), w) == w
    assert not module.act(L(3), w)


def test_bracket_term_reaches_cyclic_vector(psi11):
    module = WhittakerModule(psi11)
    v = module.vector([(I(0), 1)])
    assert module.act(H(1), v) == InducedVector.cyclic()


def test_central_acts_by_its_charge():
    datum = validate_whittaker({"I[1]": "1", "J[1]": "1", "c2": "3"}, 1, 1)
    module = WhittakerModule(datum)
    v = module.vector([(L(0), 1), (J(0), 2)])
    assert module.act(C2, v) == v.scale(scalar(3))


def test_free_generators_prepend_in_canonical_order(psi11):
    module = WhittakerModule(psi11)
    v = module.apply_word([L(0), J(0)])
    assert v == module.vector([(J(0), 1), (L(0), 1)])


def test_vector_rejects_non_free_generators(psi11):
    with pytest.raises(ValueError):
        WhittakerModule(psi11).vector([(L(1), 1)])


def test_module_axioms_and_restricted_property(psi11, psi12):
    for datum in (psi11, psi12):
        assert verify_whittaker_axioms(datum, 2, 2) == []
        assert verify_restricted(datum, 2, 5) == []


def test_restricted_family_module_requires_zero_values(psi11):
    with pytest.raises(PreconditionViolated):
        WhittakerModule(psi11, families=[Family.L, Family.H, Family.C1])


def test_basis_is_ordered_by_weight(psi11):
    module = WhittakerModule(psi11)
    basis = module.basis(2)
    weights = [module.monomial_weight(monomial) for monomial in basis]
    assert weights == sorted(weights)
    assert weights[0] == 0
    assert len([w for w in weights if w == 1]) == 4


def test_search_finds_witness_for_psi12(psi12):
    report = singular_vector_search(psi12, 1)
    assert report.found
    module = WhittakerModule(psi12)
    expected = module.vector([(I(1), 1)]) + module.vector([(J(1), 1)])
    assert report.witness == expected
    assert report.to_json()["witness"] == {"I[1] w": "1", "J[1] w": "1"}
    assert report.spot_check
    assert report.index_max == index_max(psi12, 1)


def test_search_finds_i_witness_when_alpha_vanishes():
    datum = validate_whittaker({"J[1]": "1"}, 1, 1)
    report = singular_vector_search(datum, 1)
    assert report.found
    assert report.witness.is_proportional_to(WhittakerModule(datum).vector([(I(0), 1)]))


def test_search_finds_j_witness_when_beta_vanishes():
    datum = validate_whittaker({"I[3]": "2", "J[2]": "1"}, 2, 2)
    report = singular_vector_search(datum, 1)
    assert report.found
    assert is_whittaker_vector(datum, report.witness, 10) == []


def test_search_finds_nothing_for_same_parity(psi11):
    report = singular_vector_search(psi11, 2)
    assert not report.found
    assert report.kernel_dimension == 0


@pytest.mark.slow
def test_search_finds_nothing_up_to_weight_four(psi11):
    assert not singular_vector_search(psi11, 4).found


def test_search_rejects_nonpositive_weight(psi11):
    with pytest.raises(ValueError):
        singular_vector_search(psi11, 0)


def test_m_m_plus_one_witness_uses_ratio():
    datum = validate_whittaker({"I[4]": "2", "J[4]": "1"}, 2, 3)
    module = WhittakerModule(datum)
    witness = example_witness(datum, module)
    assert witness == module.vector([(I(2), 1)]) + module.vector([(J(2), 1)], scalar(2))
    assert is_whittaker_vector(datum, witness, 12, module) == []
    report = singular_vector_search(datum, 1, module)
    assert report.witness.is_proportional_to(witness)


def test_m_m_minus_one_witness_needs_normalized_datum():
    datum = validate_whittaker({"I[2]": "1", "J[2]": "1"}, 2, 1)
    module = WhittakerModule(datum)
    witness = example_witness(datum, module)
    assert witness == module.vector([(L(1), 1)])
    assert is_whittaker_vector(datum, witness, 10, module) == []
    with pytest.raises(PreconditionViolated):
        example_witness(datum.with_values({L(3): "1"}))


def test_same_parity_has_no_worked_witness(psi11):
    with pytest.raises(PreconditionViolated):
        example_witness(psi11)


def test_psi14_matrix_is_singular():
    matrix = psi14_matrix(1, 1)
    assert not matrix_determinant(matrix)
    assert len(matrix_nullspace(matrix)) == 1
    for alpha, beta in [(2, 3), (-1, 5), ("1/2", "i"), (7, -2), ("3+i", "1-i")]:
        assert not matrix_determinant(psi14_matrix(alpha, beta))


def test_psi14_witness_is_verified():
    result = example_psi14_witness(1, 1)
    assert result.verified
    assert result.kernel_dimension == 1
    assert any(result.coefficients)
    assert result.to_json()["determinant"] == "0"


def test_psi14_witness_needs_nonzero_alpha_beta():
    with pytest.raises(PreconditionViolated):
        example_psi14_witness(1, 0)


def test_psi14_witness_when_beta_vanishes():
    datum = validate_whittaker({"I[4]": "1"}, 1, 4)
    module = WhittakerModule(datum)
    witness = example_witness(datum, module)
    assert witness == module.vector([(J(3), 1)])
    assert is_whittaker_vector(datum, witness, 12, module) == []


def test_irreducibility_predictions(psi11, psi12):
    assert predicted_whittaker_irreducible(psi11) is WhittakerPrediction.IRREDUCIBLE
    assert predicted_whittaker_irreducible(psi12) is WhittakerPrediction.REDUCIBLE
    assert predicted_whittaker_irreducible(validate_whittaker({"I[1]": "1"}, 1, 1)) is WhittakerPrediction.REDUCIBLE
    assert predicted_whittaker_irreducible(validate_whittaker({"I[4]": "1", "J[4]": "1"}, 1, 4)) is WhittakerPrediction.REDUCIBLE
    assert (
        predicted_whittaker_irreducible(validate_whittaker({"I[6]": "1", "J[6]": "1"}, 1, 6))
        is WhittakerPrediction.CONJECTURED_REDUCIBLE
    )


def test_first_induction_hypothesis():
    assert first_hypothesis_holds(0, 1)
    assert first_hypothesis_holds(0, 0)
    assert not first_hypothesis_holds(3, -2)
    assert not first_hypothesis_holds(0, -1)


def test_induction_probe_on_normalized_datum(psi11):
    report = induction_hypothesis_probe(psi11, samples=10, seed=3)
    assert report.passed
    assert report.to_json()["k"] == 1
