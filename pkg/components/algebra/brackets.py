"""
Structure constants, grading and the exhaustive consistency checks.

Only the relations

    [L_m, L_n] = (n-m) L_{m+n} + (m^3-m)/12 delta_{m+n,0} c1
    [L_m, H_n] = n H_{m+n} + m^2 delta_{m+n,0} c2
    [H_m, H_n] = m delta_{m+n,0} c3
    [L_m, I_n] = (n-m) I_{m+n}        [L_m, J_n] = (n-m) J_{m+n}
    [H_m, I_n] = I_{m+n}              [H_m, J_n] = -J_{m+n}

and their antisymmetric completions are nonzero.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Any, Callable, Dict, List, Optional

from components.algebra.elements import AlgebraElement
from components.algebra.generators import C1, C2, C3, Family, Generator, generators_up_to
from components.arithmetic.scalars import scalar

logger = logging.getLogger(__name__)

Violation = Dict[str, Any]


def _direct(a: Generator, b: Generator) -> Optional[AlgebraElement]:
    """Bracket for a family pair listed in the table, None for unlisted pairs."""
    fa, fb = a.family, b.family
    m, n = a.index, b.index
    if fa is Family.L:
        if fb is Family.L:
            terms = [(Generator(Family.L, m + n), n - m)]
            if m + n == 0:
                terms.append((C1, scalar(Fraction(m ** 3 - m, 12))))
            return AlgebraElement(terms)
        if fb is Family.H:
            terms = [(Generator(Family.H, m + n), n)]
            if m + n == 0:
                terms.append((C2, m * m))
            return AlgebraElement(terms)
        if fb in (Family.I, Family.J):
            return AlgebraElement([(Generator(fb, m + n), n - m)])
    if fa is Family.H:
        if fb is Family.H:
            return AlgebraElement([(C3, m)] if m + n == 0 else [])
        if fb is Family.I:
            return AlgebraElement([(Generator(Family.I, m + n), 1)])
        if fb is Family.J:
            return AlgebraElement([(Generator(Family.J, m + n), -1)])
    return None


@lru_cache(maxsize=None)
def bracket_basis(a: Generator, b: Generator) -> AlgebraElement:
    """
    Lie bracket of two basis generators.

    Args:
        a: Left generator
        b: Right generator

    Returns:
        [a, b] expanded on the basis; zero for every unlisted pair
    """
    if a.is_central or b.is_central:
        return AlgebraElement.zero()
    direct = _direct(a, b)
    if direct is not None:
        return direct
    reverse = _direct(b, a)
    if reverse is not None:
        return -reverse
    return AlgebraElement.zero()


def bracket(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of bracket_basis."""
    parts = []
    for a, ca in x.items():
        for b, cb in y.items():
            parts.append((ca * cb, bracket_basis(a, b)))
    return AlgebraElement.sum_of(parts)


def grade(g: Generator) -> int:
    return 0 if g.is_central else g.index


def jacobi_residual(a: Generator, b: Generator, c: Generator) -> AlgebraElement:
    ea, eb, ec = (AlgebraElement.generator(g) for g in (a, b, c))
    return (
        bracket(ea, bracket(eb, ec))
        + bracket(eb, bracket(ec, ea))
        + bracket(ec, bracket(ea, eb))
    )


def verify_jacobi(index_bound: int) -> List[Violation]:
    """
    Exhaustive Jacobi check over generators with |index| <= index_bound.

    The Jacobi sum is alternating in its three arguments once antisymmetry
    holds, so one ordering per multiset of generators is enough.

    Returns:
        List of violations; empty when the identity holds everywhere
    """
    basis = list(generators_up_to(index_bound))
    violations: List[Violation] = []
    checked = 0
    for a, b, c in combinations_with_replacement(basis, 3):
        checked += 1
        residual = jacobi_residual(a, b, c)
        if residual:
            violations.append({"triple": [str(a), str(b), str(c)], "residual": str(residual)})
    logger.debug("Jacobi: %d triples checked, %d violations", checked, len(violations))
    return violations


def verify_antisymmetry(index_bound: int) -> List[Violation]:
    basis = list(generators_up_to(index_bound))
    violations: List[Violation] = []
    for a in basis:
        for b in basis:
            if bracket_basis(a, b) != -bracket_basis(b, a):
                violations.append({"pair": [str(a), str(b)], "bracket": str(bracket_basis(a, b))})
    return violations


def verify_grading(index_bound: int) -> List[Violation]:
    """Every non-central term of [a, b] has grade grade(a) + grade(b)."""
    basis = list(generators_up_to(index_bound))
    violations: List[Violation] = []
    for a in basis:
        for b in basis:
            expected = grade(a) + grade(b)
            wrong = [g for g in bracket_basis(a, b).support() if not g.is_central and grade(g) != expected]
            if wrong:
                violations.append({"pair": [str(a), str(b)], "terms": sorted(str(g) for g in wrong)})
    return violations


def verify_subalgebra_closure(member: Callable[[Generator], bool], index_bound: int) -> List[Violation]:
    """Brackets of two members stay supported on members."""
    basis = [g for g in generators_up_to(index_bound) if member(g)]
    violations: List[Violation] = []
    for a, b in combinations_with_replacement(basis, 2):
        escaped = [g for g in bracket_basis(a, b).support() if not member(g)]
        if escaped:
            violations.append({"pair": [str(a), str(b)], "escaped": sorted(str(g) for g in escaped)})
    return violations
