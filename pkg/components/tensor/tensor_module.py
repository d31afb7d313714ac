"""
Tensor products Omega (x) R.

A TensorVector is stored on the product basis X^a Y^b (x) r, keyed by
(a, b, r) with r a basis key of R. Grouping by r gives the polynomial parts,
grouping by (a, b) gives the restricted components. A generator acts by the
coproduct rule

    g (p (x) v) = (g . p) (x) v + p (x) (g . v).
"""

import logging
from collections import defaultdict
from itertools import combinations_with_replacement
from typing import Any, Dict, Hashable, List, Sequence, Tuple

from components.algebra.brackets import bracket_basis
from components.algebra.elements import AlgebraElement
from components.algebra.generators import Generator, generators_up_to
from components.arithmetic.combinations import LinearCombination, add_scaled
from components.arithmetic.polynomials import (
    BivariatePolynomial,
    constant,
    format_polynomial,
    polynomial,
)
from components.arithmetic.scalars import ONE, Scalar, format_scalar
from components.modules.omega import OmegaSpec, omega_act
from components.tensor.restricted import NO_BOUND, RestrictedModuleHandle

logger = logging.getLogger(__name__)

TensorKey = Tuple[int, int, Hashable]


def _restricted_order(key: Hashable) -> Any:
    sort_key = getattr(key, "sort_key", None)
    return sort_key() if callable(sort_key) else key


class TensorVector(LinearCombination):
    """Finite sum of X^a Y^b (x) r over the product basis."""

    __slots__ = ()

    @staticmethod
    def sort_key(key: TensorKey):
        a, b, r = key
        return (a + b, a, b, _restricted_order(r))

    @classmethod
    def pure(cls, p: BivariatePolynomial, v: LinearCombination) -> "TensorVector":
        """p (x) v."""
        terms: Dict[TensorKey, Scalar] = {}
        for (a, b), c in p.items():
            for r, d in v.items():
                add_scaled(terms, c * d, {(a, b, r): ONE})
        return cls._wrap(terms)

    def restricted_keys(self) -> List[Hashable]:
        return sorted({r for _, _, r in self.support()}, key=_restricted_order)

    def polynomial_parts(self) -> Dict[Hashable, BivariatePolynomial]:
        """r -> the polynomial multiplying the basis vector r."""
        grouped: Dict[Hashable, Dict[Tuple[int, int], Scalar]] = defaultdict(dict)
        for (a, b, r), c in self._terms.items():
            grouped[r][(a, b)] = c
        return {r: polynomial(terms) for r, terms in grouped.items()}

    def components(self, handle: RestrictedModuleHandle) -> Dict[Tuple[int, int], LinearCombination]:
        """(a, b) -> the restricted vector multiplying X^a Y^b."""
        grouped: Dict[Tuple[int, int], List[Tuple[Scalar, LinearCombination]]] = defaultdict(list)
        for (a, b, r), c in self._terms.items():
            grouped[(a, b)].append((c, handle.basis_vector(r)))
        return {monomial: handle.combine(parts) for monomial, parts in grouped.items()}

    def x_degree(self) -> int:
        return max((a for a, _, _ in self.support()), default=-1)

    def y_degree(self) -> int:
        return max((b for _, b, _ in self.support()), default=-1)

    def to_json(self) -> Dict[str, str]:
        return {
            f"X^{a} Y^{b} (x) {r if r != () else '1'}": format_scalar(c)
            for (a, b, r), c in self.items()
        }

    def __str__(self) -> str:
        if not self:
            return "0"
        parts = []
        for r, p in sorted(self.polynomial_parts().items(), key=lambda item: _restricted_order(item[0])):
            label = "1" if r == () else str(r)
            parts.append(f"[{format_polynomial(p)}] (x) {label}")
        return " + ".join(parts)


def one_tensor(v: LinearCombination) -> TensorVector:
    """1 (x) v."""
    return TensorVector.pure(constant(1), v)


def tensor_bound(handle: RestrictedModuleHandle, t: TensorVector) -> int:
    """An index beyond which every L, H, I, J kills the restricted side of t."""
    if not t:
        return NO_BOUND
    return handle.keys_bound(t.restricted_keys())


def tensor_act(spec: OmegaSpec, handle: RestrictedModuleHandle, g: Generator, t: TensorVector) -> TensorVector:
    """
    g . t by the coproduct rule.

    Args:
        spec: The Omega module
        handle: The restricted module R
        g: Acting generator
        t: Vector of Omega (x) R

    Returns:
        The image; centrals act through R alone since Omega kills them
    """
    terms: Dict[TensorKey, Scalar] = {}
    for r, p in t.polynomial_parts().items():
        image = omega_act(spec, g, p)
        for (a, b), c in image.items():
            add_scaled(terms, c, {(a, b, r): ONE})
        moved = handle.act(g, handle.basis_vector(r))
        if moved:
            for (a, b), c in p.items():
                for r2, d in moved.items():
                    add_scaled(terms, c * d, {(a, b, r2): ONE})
    return TensorVector._wrap(terms)


def tensor_act_element(spec: OmegaSpec, handle: RestrictedModuleHandle, x: AlgebraElement, t: TensorVector) -> TensorVector:
    return TensorVector.sum_of((coeff, tensor_act(spec, handle, g, t)) for g, coeff in x.items())


def verify_tensor_axioms(
    spec: OmegaSpec,
    handle: RestrictedModuleHandle,
    vectors: Sequence[TensorVector],
    index_bound: int,
) -> List[Dict[str, Any]]:
    """
    Check [g1, g2] . t = g1 . (g2 . t) - g2 . (g1 . t) exactly.

    Returns:
        Violations over generator pairs with |index| <= index_bound and the given vectors
    """
    gens = list(generators_up_to(index_bound))
    violations: List[Dict[str, Any]] = []
    for t in vectors:
        images = {g: tensor_act(spec, handle, g, t) for g in gens}
        for g1, g2 in combinations_with_replacement(gens, 2):
            left = tensor_act_element(spec, handle, bracket_basis(g1, g2), t)
            right = tensor_act(spec, handle, g1, images[g2]) - tensor_act(spec, handle, g2, images[g1])
            if left != right:
                violations.append({"pair": [str(g1), str(g2)], "vector": str(t)})
    logger.debug("%s (x) %s: tensor axiom violations %d", spec.describe(), handle.describe(), len(violations))
    return violations

