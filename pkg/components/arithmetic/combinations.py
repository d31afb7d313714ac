"""
Sparse formal linear combinations over the Gaussian rationals.

A LinearCombination maps hashable keys to nonzero scalars. Zero coefficients
are never stored, so equality of combinations is equality of their term maps.
"""

from typing import Any, Callable, Dict, Hashable, Iterable, Iterator, List, Mapping, Tuple, Union

from components.arithmetic.scalars import ONE, ZERO, Scalar, coerce_scalar, format_scalar

TermSource = Union[Mapping[Hashable, Any], Iterable[Tuple[Hashable, Any]], None]


def accumulate(terms: Dict[Hashable, Scalar], key: Hashable, coeff: Scalar) -> None:
    """terms[key] += coeff, dropping the key when the sum vanishes."""
    if not coeff:
        return
    total = terms.get(key)
    total = coeff if total is None else total + coeff
    if total:
        terms[key] = total
    else:
        terms.pop(key, None)


def add_scaled(terms: Dict[Hashable, Scalar], coeff: Scalar, other: Mapping[Hashable, Scalar]) -> None:
    """terms += coeff * other, in place."""
    if not coeff:
        return
    for key, value in other.items():
        accumulate(terms, key, coeff * value)


class LinearCombination:
    """Finite sum of keys with Scalar coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: TermSource = None):
        normalized: Dict[Hashable, Scalar] = {}
        if terms is not None:
            pairs = terms.items() if isinstance(terms, Mapping) else terms
            for key, coeff in pairs:
                accumulate(normalized, key, coerce_scalar(coeff))
        self._terms = normalized
        self._hash = None

    @classmethod
    def _wrap(cls, terms: Dict[Hashable, Scalar]):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls):
        return cls._wrap({})

    @classmethod
    def of(cls, key: Hashable, coeff: Scalar = ONE):
        return cls._wrap({key: coeff} if coeff else {})

    @classmethod
    def sum_of(cls, parts: Iterable[Tuple[Scalar, "LinearCombination"]]):
        terms: Dict[Hashable, Scalar] = {}
        for coeff, part in parts:
            add_scaled(terms, coeff, part._terms)
        return cls._wrap(terms)

    @staticmethod
    def sort_key(key: Hashable) -> Any:
        return key

    # Mapping-like access

    def items(self) -> List[Tuple[Hashable, Scalar]]:
        return sorted(self._terms.items(), key=lambda item: self.sort_key(item[0]))

    def keys(self) -> List[Hashable]:
        return [key for key, _ in self.items()]

    def support(self) -> frozenset:
        return frozenset(self._terms)

    def coefficient(self, key: Hashable) -> Scalar:
        return self._terms.get(key, ZERO)

    def as_dict(self) -> Dict[Hashable, Scalar]:
        return dict(self._terms)

    def __iter__(self) -> Iterator[Hashable]:
        return iter(self.keys())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    # Vector space operations

    def __add__(self, other: "LinearCombination"):
        if not isinstance(other, LinearCombination):
            return NotImplemented
        terms = dict(self._terms)
        add_scaled(terms, ONE, other._terms)
        return self._wrap(terms)

    def __sub__(self, other: "LinearCombination"):
        if not isinstance(other, LinearCombination):
            return NotImplemented
        terms = dict(self._terms)
        add_scaled(terms, -ONE, other._terms)
        return self._wrap(terms)

    def __neg__(self):
        return self._wrap({key: -coeff for key, coeff in self._terms.items()})

    def scale(self, coeff: Scalar):
        coeff = coerce_scalar(coeff)
        if not coeff:
            return self.zero()
        return self._wrap({key: coeff * value for key, value in self._terms.items()})

    def __rmul__(self, coeff):
        return self.scale(coeff)

    def map_keys(self, transform: Callable[[Hashable], Hashable]):
        terms: Dict[Hashable, Scalar] = {}
        for key, coeff in self._terms.items():
            accumulate(terms, transform(key), coeff)
        return self._wrap(terms)

    # Comparison

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, LinearCombination) or type(self) is not type(other):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({format_scalar(coeff)})*{key}" for key, coeff in self.items())
