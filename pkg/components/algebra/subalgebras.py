"""
Membership predicates for the named subalgebras.

Each factory returns a predicate on generators. A subalgebra is the span of
the generators its predicate accepts.
"""

from typing import Callable, Dict

from components.algebra.generators import Family, Generator

Membership = Callable[[Generator], bool]


def graded_subalgebra(d: int) -> Membership:
    """G_d: L_i, H_i, I_{i-d}, J_{i-d} for i >= 0, plus the centrals."""

    def member(g: Generator) -> bool:
        if g.is_central:
            return True
        if g.family in (Family.L, Family.H):
            return g.index >= 0
        return g.index >= -d

    return member


def whittaker_subalgebra(m: int, n: int) -> Membership:
    """G^(m,n): L_{m+i}, H_{m+i}, I_{n+i}, J_{n+i} for i >= 0, plus the centrals."""

    def member(g: Generator) -> bool:
        if g.is_central:
            return True
        if g.family in (Family.L, Family.H):
            return g.index >= m
        return g.index >= n

    return member


def ij_ideal(g: Generator) -> bool:
    return g.family in (Family.I, Family.J)


def virasoro(g: Generator) -> bool:
    return g.family in (Family.L, Family.C1)


def heisenberg_virasoro(g: Generator) -> bool:
    return g.family in (Family.L, Family.H, Family.C1, Family.C2, Family.C3)


def w22_with_i(g: Generator) -> bool:
    return g.family in (Family.L, Family.I, Family.C1)


def w22_with_j(g: Generator) -> bool:
    return g.family in (Family.L, Family.J, Family.C1)


def named_subalgebras() -> Dict[str, Membership]:
    """The fixed subalgebras checked by the verify-algebra campaign."""
    return {
        "G_0": graded_subalgebra(0),
        "G_1": graded_subalgebra(1),
        "G^(1,1)": whittaker_subalgebra(1, 1),
        "G^(2,1)": whittaker_subalgebra(2, 1),
        "IJ": ij_ideal,
        "Vir": virasoro,
        "HVir": heisenberg_virasoro,
        "W(2,2)_I": w22_with_i,
        "W(2,2)_J": w22_with_j,
    }
