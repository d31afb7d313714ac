"""
Gaussian rational scalars.

Scalars are elements of sympy's QQ_I domain. Zero tests must use truthiness
(``not s``): QQ_I elements do not compare equal to plain integers.
"""

import re
from fractions import Fraction
from typing import Union

from sympy.polys.domains import QQ, QQ_I

from components.errors import ScalarFormatError, ZeroToNegativePower

SCALARS = QQ_I
Scalar = type(QQ_I.one)

ZERO = QQ_I.zero
ONE = QQ_I.one

RationalLike = Union[int, Fraction, str]

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def _rational(value: RationalLike):
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, str):
        fraction = _parse_rational(value)
        return QQ(fraction.numerator, fraction.denominator)
    return QQ(value)


def _parse_rational(text: str) -> Fraction:
    if not _RATIONAL.match(text):
        raise ScalarFormatError(f"not a rational number: {text!r}")
    numerator, _, denominator = text.partition("/")
    if denominator and int(denominator) == 0:
        raise ScalarFormatError(f"zero denominator in {text!r}")
    return Fraction(int(numerator), int(denominator or 1))


def scalar(real: RationalLike = 0, imag: RationalLike = 0) -> Scalar:
    """Build a Gaussian rational from its real and imaginary parts."""
    return QQ_I(_rational(real), _rational(imag))


def coerce_scalar(value) -> Scalar:
    """Accept a Scalar, an int, a Fraction or a scalar string."""
    if isinstance(value, Scalar):
        return value
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, (int, Fraction)):
        return scalar(value)
    raise ScalarFormatError(f"cannot interpret {value!r} as a scalar")


def is_zero(value: Scalar) -> bool:
    return not value


def real_part(value: Scalar) -> Fraction:
    return Fraction(int(value.x.numerator), int(value.x.denominator))


def imag_part(value: Scalar) -> Fraction:
    return Fraction(int(value.y.numerator), int(value.y.denominator))


def is_rational(value: Scalar) -> bool:
    return not value.y


def scalar_pow(base: Scalar, exponent: int) -> Scalar:
    """
    Exact integer power.

    Args:
        base: The scalar to raise
        exponent: Any integer; negative exponents invert the base first

    Returns:
        base ** exponent as a Gaussian rational
    """
    if exponent < 0:
        if not base:
            raise ZeroToNegativePower("zero has no negative powers")
        base = ONE / base
        exponent = -exponent
    result = ONE
    for _ in range(exponent):
        result = result * base
    return result


def parse_scalar(text: str) -> Scalar:
    """
    Parse the serialized form "a/b+c/d*i".

    Accepted shapes include "3", "-1/2", "i", "-i", "3*i", "2/3i" and
    "1/2-3/4*i". Whitespace is ignored.
    """
    if not isinstance(text, str):
        raise ScalarFormatError(f"scalar must be a string, got {type(text).__name__}")
    body = text.replace(" ", "")
    if not body:
        raise ScalarFormatError("empty scalar string")
    if not body.endswith("i"):
        return scalar(_parse_rational(body))

    body = body[:-1]
    if body.endswith("*"):
        body = body[:-1]
    split = max(body.rfind("+"), body.rfind("-"))
    if split > 0:
        real_text, imag_text = body[:split], body[split:]
    else:
        real_text, imag_text = "", body
    if imag_text in ("", "+"):
        imag_text = "1"
    elif imag_text == "-":
        imag_text = "-1"
    real = _parse_rational(real_text) if real_text else Fraction(0)
    return scalar(real, _parse_rational(imag_text))


def _format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_scalar(value: Scalar) -> str:
    """Serialize a scalar as "a/b+c/d*i", omitting zero parts."""
    real, imag = real_part(value), imag_part(value)
    if not imag:
        return _format_rational(real)
    imag_text = _format_rational(imag) + "*i"
    if not real:
        return imag_text
    sign = "" if imag < 0 else "+"
    return f"{_format_rational(real)}{sign}{imag_text}"
