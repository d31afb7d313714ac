"""
Whittaker functions psi_{m,n} on the subalgebra G^(m,n).

A Whittaker function is a Lie homomorphism G^(m,n) -> C. It kills the derived
subalgebra, which forces

    psi(L_{2m+1+j}) = psi(H_{2m+j}) = psi(I_{m+n+j}) = psi(J_{m+n+j}) = 0,  j >= 0.

Values not given explicitly default to zero; central charges are free.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Mapping, Tuple, Union

from components.algebra.generators import Family, Generator, parse_generator
from components.algebra.subalgebras import whittaker_subalgebra
from components.arithmetic.scalars import ZERO, Scalar, coerce_scalar, format_scalar
from components.errors import DerivedAlgebraViolation, OutOfSubalgebra, PreconditionViolated

logger = logging.getLogger(__name__)

GeneratorLike = Union[Generator, str]


def forced_zero(g: Generator, m: int, n: int) -> bool:
    """True when psi(g) must vanish because g lies in the derived subalgebra."""
    if g.is_central:
        return False
    if g.family is Family.L:
        return g.index >= 2 * m + 1
    if g.family is Family.H:
        return g.index >= 2 * m
    return g.index >= m + n


@dataclass(frozen=True)
class WhittakerDatum:
    """A validated Whittaker function; build it with validate_whittaker."""

    m: int
    n: int
    values: Tuple[Tuple[Generator, Scalar], ...]

    def __post_init__(self):
        object.__setattr__(self, "_lookup", dict(self.values))

    def value(self, g: Generator) -> Scalar:
        return self._lookup.get(g, ZERO)

    def alpha(self, p: int) -> Scalar:
        """psi(I_p), with the convention psi(I_p) = 0 below the subalgebra."""
        return self.value(Generator(Family.I, p)) if p >= self.n else ZERO

    def beta(self, p: int) -> Scalar:
        return self.value(Generator(Family.J, p)) if p >= self.n else ZERO

    @property
    def top(self) -> int:
        """The index m+n-1 whose I and J values govern irreducibility."""
        return self.m + self.n - 1

    @property
    def alpha_top(self) -> Scalar:
        return self.alpha(self.top)

    @property
    def beta_top(self) -> Scalar:
        return self.beta(self.top)

    @property
    def same_parity(self) -> bool:
        return (self.m + self.n) % 2 == 0

    def contains(self, g: Generator) -> bool:
        return whittaker_subalgebra(self.m, self.n)(g)

    def is_normalized(self) -> bool:
        """psi(L_p) = psi(H_p) = 0 for every p >= m+n."""
        return all(
            not value
            for g, value in self.values
            if g.family in (Family.L, Family.H) and g.index >= self.m + self.n
        )

    def with_values(self, updates: Mapping[Generator, Any]) -> "WhittakerDatum":
        merged: Dict[Generator, Any] = dict(self.values)
        merged.update(updates)
        return validate_whittaker(merged, self.m, self.n)

    def to_json(self) -> Dict[str, Any]:
        return {
            "m": self.m,
            "n": self.n,
            "values": {str(g): format_scalar(v) for g, v in self.values if not g.is_central},
            "centrals": {str(g): format_scalar(v) for g, v in self.values if g.is_central},
        }

    def describe(self) -> str:
        assigned = ", ".join(f"{g}={format_scalar(v)}" for g, v in self.values) or "all zero"
        return f"psi_{{{self.m},{self.n}}}({assigned})"


def validate_whittaker(raw: Mapping[GeneratorLike, Any], m: int, n: int) -> WhittakerDatum:
    """
    Validate raw values into a WhittakerDatum.

    Args:
        raw: Map from generator (or "L[3]"-style name) to scalar
        m: Lower index of the L/H part of the subalgebra, at least 1
        n: Lower index of the I/J part of the subalgebra, at least 0

    Returns:
        The datum, storing only nonzero values

    Raises:
        OutOfSubalgebra: a value is assigned outside G^(m,n)
        DerivedAlgebraViolation: a nonzero value sits where psi must vanish
    """
    if m < 1 or n < 0:
        raise PreconditionViolated(f"Whittaker data need m >= 1 and n >= 0, got m={m}, n={n}")
    member = whittaker_subalgebra(m, n)
    stored: Dict[Generator, Scalar] = {}
    for key, raw_value in raw.items():
        g = parse_generator(key) if isinstance(key, str) else key
        value = coerce_scalar(raw_value)
        if not member(g):
            raise OutOfSubalgebra(f"{g} is not in G^({m},{n})")
        if value and forced_zero(g, m, n):
            raise DerivedAlgebraViolation(f"psi({g}) must vanish for (m, n) = ({m}, {n})")
        if value:
            stored[g] = value
    ordered = tuple(sorted(stored.items(), key=lambda item: item[0].sort_key))
    return WhittakerDatum(m, n, ordered)


def whittaker_from_json(data: Mapping[str, Any]) -> WhittakerDatum:
    raw: Dict[GeneratorLike, Any] = dict(data.get("values", {}))
    raw.update(data.get("centrals", {}))
    return validate_whittaker(raw, int(data["m"]), int(data["n"]))