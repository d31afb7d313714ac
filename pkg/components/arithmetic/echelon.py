"""
Incremental sparse row reduction.

EchelonBasis keeps a fully reduced set of sparse rows: every stored row has
pivot coefficient 1 and no other stored row mentions its pivot. Rows are dicts
from hashable keys to Scalars, so the same structure serves orbit spans of
polynomials, tensor vectors, and the constraint rows of the singular-vector
search.
"""

import logging
from typing import Any, Callable, Dict, Hashable, Iterable, List, Mapping, Optional

from components.arithmetic.combinations import LinearCombination, add_scaled
from components.arithmetic.scalars import ONE, Scalar, coerce_scalar

logger = logging.getLogger(__name__)

SparseRow = Dict[Hashable, Scalar]


def _as_row(vector: Any) -> SparseRow:
    if isinstance(vector, LinearCombination):
        return vector.as_dict()
    items = vector.items() if isinstance(vector, Mapping) else vector
    row: SparseRow = {}
    for key, coeff in items:
        coeff = coerce_scalar(coeff)
        if coeff:
            add_scaled(row, ONE, {key: coeff})
    return row


class EchelonBasis:
    """
    Row-reduced span of sparse vectors.

    Args:
        order: Sort key on vector keys; the pivot of a new row is its largest key
    """

    def __init__(self, order: Optional[Callable[[Hashable], Any]] = None):
        self._order = order or (lambda key: key)
        self._rows: Dict[Hashable, SparseRow] = {}

    @property
    def dimension(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> List[Hashable]:
        return sorted(self._rows, key=self._order)

    def basis(self) -> List[SparseRow]:
        return [dict(self._rows[pivot]) for pivot in self.pivots]

    def reduce(self, vector: Any) -> SparseRow:
        """Remainder of vector after eliminating every stored pivot."""
        row = _as_row(vector)
        for pivot in [key for key in row if key in self._rows]:
            coeff = row.get(pivot)
            if coeff:
                add_scaled(row, -coeff, self._rows[pivot])
        return row

    def contains(self, vector: Any) -> bool:
        return not self.reduce(vector)

    def add(self, vector: Any) -> bool:
        """
        Insert a vector into the span.

        Returns:
            True when the vector was independent and the dimension grew
        """
        row = self.reduce(vector)
        if not row:
            return False
        pivot = max(row, key=self._order)
        inverse = ONE / row[pivot]
        row = {key: coeff * inverse for key, coeff in row.items()}
        for other in self._rows.values():
            coeff = other.get(pivot)
            if coeff:
                add_scaled(other, -coeff, row)
        self._rows[pivot] = row
        return True

    def extend(self, vectors: Iterable[Any]) -> int:
        """Add every vector; returns how many were independent."""
        return sum(1 for vector in vectors if self.add(vector))

    def nullspace(self, unknowns: Iterable[Hashable]) -> List[SparseRow]:
        """
        Kernel of the stored rows, read as linear constraints on the unknowns.

        Each free unknown f yields the solution with x_f = 1, the other free
        unknowns 0, and every pivot unknown fixed by its row.

        Args:
            unknowns: All unknowns of the system; rows may only mention these

        Returns:
            Kernel basis vectors, ordered by their free unknown
        """
        universe = list(unknowns)
        known = set(universe)
        for row in self._rows.values():
            stray = [key for key in row if key not in known]
            if stray:
                raise ValueError(f"constraint row mentions unknowns outside the system: {stray[:3]}")
        free = sorted((key for key in universe if key not in self._rows), key=self._order)
        kernel: List[SparseRow] = []
        for variable in free:
            solution: SparseRow = {variable: ONE}
            for pivot, row in self._rows.items():
                coeff = row.get(variable)
                if coeff:
                    solution[pivot] = -coeff
            kernel.append(solution)
        logger.debug("echelon nullspace: %d unknowns, rank %d, kernel %d", len(universe), self.dimension, len(kernel))
        return kernel
