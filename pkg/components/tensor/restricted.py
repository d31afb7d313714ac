"""
Restricted modules R seen through a uniform handle.

Tensor products only need R's action, a basis to expand on, and an index
beyond which every L, H, I, J kills a given vector. The handles below wrap
the one-dimensional trivial module and the Whittaker modules, and the lifts
realize Whittaker modules of the Virasoro and Heisenberg-Virasoro quotients
as G-modules by letting the remaining families act by zero.
"""

import logging
from abc import ABC, abstractmethod
from enum import Enum
from typing import Any, Dict, Hashable, Iterable, Optional, Tuple

from components.algebra.generators import Family, Generator
from components.arithmetic.combinations import LinearCombination
from components.arithmetic.scalars import ONE, Scalar
from components.whittaker.datum import WhittakerDatum
from components.whittaker.induced import InducedVector, WhittakerModule

logger = logging.getLogger(__name__)

NO_BOUND = -1


class RestrictedModuleHandle(ABC):
    """
    Read-only access to a restricted G-module.

    Vectors are LinearCombinations over hashable basis keys.
    """

    irreducible: bool = False

    @abstractmethod
    def act(self, g: Generator, v: LinearCombination) -> LinearCombination:
        """g . v."""

    @abstractmethod
    def basis_vector(self, key: Hashable, coeff: Scalar = ONE) -> LinearCombination:
        """The basis vector named by key, scaled by coeff."""

    @abstractmethod
    def annihilation_bound(self, v: LinearCombination) -> int:
        """N with g . v = 0 for every L, H, I, J of index > N."""

    @abstractmethod
    def canonical_vector(self) -> LinearCombination:
        """A cyclic vector, used as the default probe vector."""

    @abstractmethod
    def describe(self) -> str:
        pass

    def key_order(self, key: Hashable) -> Any:
        return key

    def zero(self) -> LinearCombination:
        return self.canonical_vector().scale(0)

    def is_zero(self, v: LinearCombination) -> bool:
        return not v

    def combine(self, parts: Iterable[Tuple[Scalar, LinearCombination]]) -> LinearCombination:
        total = self.zero()
        for coeff, v in parts:
            total = total + v.scale(coeff)
        return total

    def coordinates(self, v: LinearCombination) -> Dict[Hashable, Scalar]:
        return v.as_dict()

    def keys_bound(self, keys: Iterable[Hashable]) -> int:
        """Largest annihilation bound over a set of basis vectors."""
        return max((self.annihilation_bound(self.basis_vector(key)) for key in keys), default=NO_BOUND)


class TrivialVector(LinearCombination):
    __slots__ = ()


class TrivialModule(RestrictedModuleHandle):
    """The one-dimensional module C on which all of G, centrals included, acts by zero."""

    KEY: Tuple[()] = ()
    irreducible = True

    def act(self, g: Generator, v: LinearCombination) -> LinearCombination:
        return TrivialVector.zero()

    def basis_vector(self, key: Hashable, coeff: Scalar = ONE) -> LinearCombination:
        if key != self.KEY:
            raise KeyError(f"the trivial module has the single basis key (), got {key!r}")
        return TrivialVector.of(self.KEY, coeff)

    def annihilation_bound(self, v: LinearCombination) -> int:
        return NO_BOUND

    def canonical_vector(self) -> LinearCombination:
        return TrivialVector.of(self.KEY)

    def describe(self) -> str:
        return "C (trivial)"


class WhittakerHandle(RestrictedModuleHandle):
    """
    W_psi as a restricted module.

    Args:
        module: The induced module, possibly over a quotient family set
        irreducible: Assumed irreducibility of R, recorded in reports
        label: Name used in reports
    """

    def __init__(self, module: WhittakerModule, irreducible: bool = False, label: Optional[str] = None):
        self.module = module
        self.irreducible = irreducible
        self.label = label or f"W[{module.datum.describe()}]"

    def act(self, g: Generator, v: LinearCombination) -> LinearCombination:
        return self.module.act(g, v)

    def basis_vector(self, key: Hashable, coeff: Scalar = ONE) -> LinearCombination:
        return InducedVector.of(key, coeff)

    def annihilation_bound(self, v: LinearCombination) -> int:
        return self.module.annihilation_bound(v)

    def canonical_vector(self) -> LinearCombination:
        return InducedVector.cyclic()

    def key_order(self, key: Hashable) -> Any:
        return key.sort_key()

    def describe(self) -> str:
        return self.label


class LiftKind(str, Enum):
    VIRASORO_STYLE = "virasoro_style"
    HEISENBERG_VIRASORO_STYLE = "heisenberg_virasoro_style"
    TRIVIAL = "trivial"


LIFT_FAMILIES = {
    LiftKind.VIRASORO_STYLE: frozenset({Family.L, Family.C1}),
    LiftKind.HEISENBERG_VIRASORO_STYLE: frozenset({Family.L, Family.H, Family.C1, Family.C2, Family.C3}),
}


def lift_restricted(base: LiftKind, data: Optional[WhittakerDatum] = None, irreducible: bool = False) -> RestrictedModuleHandle:
    """
    Lift a module of a quotient of G to a G-module.

    Args:
        base: Which quotient; virasoro_style kills H, I, J, c2, c3 and
            heisenberg_virasoro_style kills I, J
        data: Whittaker function of the retained generators; unused for trivial
        irreducible: Assumed irreducibility, recorded in reports

    Returns:
        A handle whose killed families act by zero

    Raises:
        PreconditionViolated: data is nonzero on a killed family
    """
    base = LiftKind(base)
    if base is LiftKind.TRIVIAL:
        return TrivialModule()
    if data is None:
        raise ValueError(f"{base.value} lift needs Whittaker data for the retained generators")
    module = WhittakerModule(data, families=LIFT_FAMILIES[base])
    logger.debug("lifted %s through %s", data.describe(), base.value)
    return WhittakerHandle(module, irreducible=irreducible, label=f"{base.value}[{data.describe()}]")
