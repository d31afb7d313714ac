"""
Bivariate polynomials over the Gaussian rationals.

Polynomials are elements of the sympy ring QQ_I[X, Y]. Elements are sparse
dicts from exponent pairs (a, b) to nonzero coefficients, which is exactly
the carrier the Omega modules act on.
"""

from typing import Any, Dict, Iterable, List, Mapping, Tuple

from sympy.polys.rings import ring

from components.arithmetic.scalars import ONE, SCALARS, Scalar, coerce_scalar, format_scalar, parse_scalar

POLY_RING, X, Y = ring("X,Y", SCALARS)
BivariatePolynomial = type(POLY_RING.one)

Monomial = Tuple[int, int]


def polynomial(terms: Mapping[Monomial, Any]) -> BivariatePolynomial:
    """Build a polynomial from {(xexp, yexp): coefficient}."""
    return POLY_RING.from_dict({tuple(monom): coerce_scalar(coeff) for monom, coeff in terms.items()})


def constant(value: Any = ONE) -> BivariatePolynomial:
    return POLY_RING(coerce_scalar(value))


def monomial(xexp: int, yexp: int, coeff: Any = ONE) -> BivariatePolynomial:
    return polynomial({(xexp, yexp): coeff})


def sorted_terms(p: BivariatePolynomial) -> List[Tuple[Monomial, Scalar]]:
    """Terms ordered by (xexp, yexp) ascending for deterministic output."""
    return sorted(p.items())


def total_degree(p: BivariatePolynomial) -> int:
    """Largest a + b over the support; -1 for the zero polynomial."""
    return max((a + b for a, b in p.keys()), default=-1)


def x_degree(p: BivariatePolynomial) -> int:
    return max((a for a, _ in p.keys()), default=-1)


def y_degree(p: BivariatePolynomial) -> int:
    return max((b for _, b in p.keys()), default=-1)


def is_univariate_in_x(p: BivariatePolynomial) -> bool:
    return all(b == 0 for _, b in p.keys())


def is_constant(p: BivariatePolynomial) -> bool:
    return all(monom == (0, 0) for monom in p.keys())


def constant_term(p: BivariatePolynomial) -> Scalar:
    return p.get((0, 0), SCALARS.zero)


def poly_shift(p: BivariatePolynomial, dx: Any, dy: Any) -> BivariatePolynomial:
    """
    Substitute X -> X + dx and Y -> Y + dy.

    Args:
        p: The polynomial to shift
        dx: Shift of X
        dy: Shift of Y

    Returns:
        p(X + dx, Y + dy), expanded exactly
    """
    dx, dy = coerce_scalar(dx), coerce_scalar(dy)
    if not p or (not dx and not dy):
        return p
    x_shifted, y_shifted = X + dx, Y + dy
    x_powers: Dict[int, BivariatePolynomial] = {0: POLY_RING.one}
    y_powers: Dict[int, BivariatePolynomial] = {0: POLY_RING.one}

    def power(cache: Dict[int, BivariatePolynomial], base: BivariatePolynomial, exponent: int):
        if exponent not in cache:
            cache[exponent] = power(cache, base, exponent - 1) * base
        return cache[exponent]

    result = POLY_RING.zero
    for (a, b), coeff in sorted_terms(p):
        result += power(x_powers, x_shifted, a) * power(y_powers, y_shifted, b) * coeff
    return result


def divides(divisor: BivariatePolynomial, p: BivariatePolynomial) -> bool:
    """Exact divisibility test by multivariate division."""
    if not p:
        return True
    return not p.rem(divisor)


def polynomial_to_json(p: BivariatePolynomial) -> List[Dict[str, Any]]:
    return [
        {"xexp": a, "yexp": b, "coeff": format_scalar(coeff)}
        for (a, b), coeff in sorted_terms(p)
    ]


def polynomial_from_json(terms: Iterable[Mapping[str, Any]]) -> BivariatePolynomial:
    collected: Dict[Monomial, Scalar] = {}
    for term in terms:
        key = (int(term["xexp"]), int(term.get("yexp", 0)))
        coeff = term["coeff"]
        coeff = parse_scalar(coeff) if isinstance(coeff, str) else coerce_scalar(coeff)
        collected[key] = collected.get(key, SCALARS.zero) + coeff
    return polynomial(collected)


def format_polynomial(p: BivariatePolynomial) -> str:
    if not p:
        return "0"
    parts = []
    for (a, b), coeff in sorted(p.items(), reverse=True):
        factors = [f"({format_scalar(coeff)})"]
        if a:
            factors.append("X" if a == 1 else f"X^{a}")
        if b:
            factors.append("Y" if b == 1 else f"Y^{b}")
        parts.append("*".join(factors))
    return " + ".join(parts)
