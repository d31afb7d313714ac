"""
Tests for the bracket table, grading, subalgebras and I/J translations.
"""

from fractions import Fraction

import pytest

from components.algebra.brackets import (
    bracket,
    bracket_basis,
    verify_antisymmetry,
    verify_grading,
    verify_jacobi,
    verify_subalgebra_closure,
)
from components.algebra.elements import AlgebraElement
from components.algebra.generators import C1, C2, C3, Family, Generator, H, I, J, L, generators_up_to, parse_generator
from components.algebra.subalgebras import named_subalgebras, whittaker_subalgebra
from components.algebra.translations import (
    IJTranslation,
    apply_translation,
    verify_translation_automorphism,
)
from components.arithmetic.scalars import ONE, scalar
from components.errors import InvalidTranslation


def element(terms):
    return AlgebraElement(terms)


def test_parse_generator():
    assert parse_generator("L[5]") == L(5)
    assert parse_generator(" J[-3] ") == J(-3)
    assert parse_generator("c2") is C2
    with pytest.raises(ValueError):
        parse_generator("K[1]")


def test_central_generators_carry_no_index():
    with pytest.raises(ValueError):
        Generator(Family.C1, 0)
    with pytest.raises(ValueError):
        Generator(Family.L)


def test_generators_up_to_counts():
    assert len(list(generators_up_to(1))) == 4 * 3 + 3
    assert len(list(generators_up_to(2, include_centrals=False))) == 4 * 5


def test_virasoro_bracket_with_central_term():
    assert bracket_basis(L(2), L(-2)) == element([(L(0), -4), (C1, scalar(Fraction(1, 2)))])
    assert bracket_basis(L(1), L(-1)) == element([(L(0), -2)])
    assert bracket_basis(L(1), L(2)) == element([(L(3), 1)])


def test_heisenberg_and_ij_brackets():
    assert bracket_basis(L(1), H(-1)) == element([(H(0), -1), (C2, 1)])
    assert bracket_basis(H(1), H(-1)) == element([(C3, 1)])
    assert bracket_basis(H(0), I(2)) == element([(I(2), 1)])
    assert bracket_basis(H(0), J(2)) == element([(J(2), -1)])
    assert bracket_basis(L(-1), I(1)) == element([(I(0), 2)])
    assert bracket_basis(J(1), L(0)) == element([(J(1), -1)])


def test_unlisted_pairs_commute():
    assert not bracket_basis(I(1), J(2))
    assert not bracket_basis(I(0), I(-1))
    assert not bracket_basis(C3, L(4))


def test_bracket_is_bilinear():
    x = element([(L(1), 2), (H(0), 1)])
    y = element([(I(1), 1)])
    assert bracket(x, y) == element([(I(2), 0), (I(1), 1)])
    assert bracket(x.scale(3), y) == bracket(x, y).scale(3)


def test_structure_constants_hold_exhaustively():
    assert verify_antisymmetry(3) == []
    assert verify_grading(3) == []
    assert verify_jacobi(2) == []


@pytest.mark.slow
def test_jacobi_at_index_bound_four():
    assert verify_jacobi(4) == []


def test_named_subalgebras_are_closed():
    for name, member in named_subalgebras().items():
        assert verify_subalgebra_closure(member, 3) == [], name


def test_non_subalgebra_reports_escape():
    violations = verify_subalgebra_closure(lambda g: g.family is Family.L and g.index in (1, 2), 2)
    assert violations
    assert any("L[3]" in v["escaped"] for v in violations)


def test_whittaker_subalgebra_membership():
    member = whittaker_subalgebra(2, 1)
    assert member(L(2)) and member(H(3)) and member(I(1)) and member(C1)
    assert not member(L(1))
    assert not member(J(0))


def test_translation_from_coefficients():
    t = IJTranslation.from_coefficients([ONE], [ONE])
    assert t.to_json() == {"J[-1]": "-1", "I[-1]": "-1"}
    image = apply_translation(t, AlgebraElement.generator(L(2)))
    assert image == element([(L(2), 1), (I(1), -3), (J(1), -3)])
    image = apply_translation(t, AlgebraElement.generator(H(2)))
    assert image == element([(H(2), 1), (I(1), 1), (J(1), -1)])


def test_translation_fixes_ij_and_centrals():
    t = IJTranslation.from_coefficients([scalar(2), scalar(0, 1)], [ONE, ONE])
    for g in (I(3), J(-2), C1, C3):
        assert apply_translation(t, AlgebraElement.generator(g)) == AlgebraElement.generator(g)


def test_translation_is_an_automorphism():
    t = IJTranslation(AlgebraElement.from_json({"I[-1]": "-1", "J[-1]": "-1", "I[-2]": "1/2"}))
    assert verify_translation_automorphism(t, 2) == []
    assert IJTranslation.identity().is_identity


def test_translation_outside_ij_span_is_rejected():
    with pytest.raises(InvalidTranslation):
        IJTranslation(AlgebraElement.generator(L(0)))
    with pytest.raises(InvalidTranslation):
        apply_translation(AlgebraElement.generator(I(0)), AlgebraElement.generator(L(0)))


def test_algebra_element_json():
    x = AlgebraElement.from_json({"L[1]": "2", "c1": "1/2"})
    assert x.to_json() == {"L[1]": "2", "c1": "1/2"}
