"""
Dense exact matrices over the Gaussian rationals.

ScalarMatrix keeps its entries as an immutable grid and delegates elimination
to sympy's DomainMatrix, which performs exact Gauss-Jordan reduction over QQ_I.
"""

from typing import Any, List, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from components.arithmetic.scalars import ONE, SCALARS, ZERO, Scalar, coerce_scalar, format_scalar
from components.errors import SingularMatrix

Vector = Tuple[Scalar, ...]


class ScalarMatrix:
    """Rectangular matrix of Gaussian rationals."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, entries: Sequence[Sequence[Any]]):
        grid = tuple(tuple(coerce_scalar(value) for value in row) for row in entries)
        if not grid or not grid[0]:
            raise ValueError("a ScalarMatrix needs at least one row and one column")
        width = len(grid[0])
        if any(len(row) != width for row in grid):
            raise ValueError("ScalarMatrix rows must have equal length")
        self.rows = len(grid)
        self.cols = width
        self._entries = grid

    @classmethod
    def identity(cls, size: int) -> "ScalarMatrix":
        return cls([[ONE if i == j else ZERO for j in range(size)] for i in range(size)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ScalarMatrix":
        return cls([[ZERO] * cols for _ in range(rows)])

    @classmethod
    def block(cls, blocks: Sequence[Sequence["ScalarMatrix"]]) -> "ScalarMatrix":
        """Assemble a matrix from a grid of blocks with matching shapes."""
        grid: List[List[Scalar]] = []
        for block_row in blocks:
            height = block_row[0].rows
            for i in range(height):
                row: List[Scalar] = []
                for block in block_row:
                    row.extend(block.row(i))
                grid.append(row)
        return cls(grid)

    def entry(self, i: int, j: int) -> Scalar:
        return self._entries[i][j]

    def row(self, i: int) -> Vector:
        return self._entries[i]

    def to_lists(self) -> List[List[Scalar]]:
        return [list(row) for row in self._entries]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def apply(self, vector: Sequence[Any]) -> Vector:
        """Matrix-vector product M v."""
        values = [coerce_scalar(value) for value in vector]
        if len(values) != self.cols:
            raise ValueError(f"vector of length {len(values)} does not match {self.cols} columns")
        result = []
        for row in self._entries:
            total = ZERO
            for a, b in zip(row, values):
                if a and b:
                    total += a * b
            result.append(total)
        return tuple(result)

    def to_domain_matrix(self) -> DomainMatrix:
        return DomainMatrix(self.to_lists(), (self.rows, self.cols), SCALARS)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, ScalarMatrix):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(self._entries)

    def to_json(self) -> List[List[str]]:
        return [[format_scalar(value) for value in row] for row in self._entries]

    def __repr__(self) -> str:
        return f"ScalarMatrix({self.to_json()})"


def matrix_solve(matrix: ScalarMatrix, rhs: Sequence[Any]) -> Vector:
    """
    Solve M x = b exactly.

    Args:
        matrix: Square coefficient matrix
        rhs: Right-hand side of length matrix.rows

    Returns:
        The unique solution x

    Raises:
        SingularMatrix: when the system has no solution or infinitely many
    """
    if not matrix.is_square:
        raise SingularMatrix(f"matrix_solve needs a square matrix, got {matrix.rows}x{matrix.cols}")
    values = [coerce_scalar(value) for value in rhs]
    if len(values) != matrix.rows:
        raise ValueError("right-hand side length does not match the matrix")
    size = matrix.rows
    augmented = [list(matrix.row(i)) + [values[i]] for i in range(size)]
    reduced, pivots = DomainMatrix(augmented, (size, size + 1), SCALARS).rref()
    if tuple(pivots) != tuple(range(size)):
        raise SingularMatrix("system has no unique solution")
    rows = reduced.to_list()
    return tuple(rows[i][size] for i in range(size))


def matrix_nullspace(matrix: ScalarMatrix) -> List[Vector]:
    """Exact basis of the right kernel; empty when the matrix is injective."""
    kernel = matrix.to_domain_matrix().nullspace()
    return [tuple(row) for row in kernel.to_list() if any(row)]


def matrix_determinant(matrix: ScalarMatrix) -> Scalar:
    if not matrix.is_square:
        raise ValueError("determinant of a non-square matrix")
    return matrix.to_domain_matrix().det()


def matrix_rank(matrix: ScalarMatrix) -> int:
    _, pivots = matrix.to_domain_matrix().rref()
    return len(pivots)
