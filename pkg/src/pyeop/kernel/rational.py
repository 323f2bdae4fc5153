"""
Exact rationals and open real intervals.

``Rational`` is :class:`fractions.Fraction`: always in lowest terms with a
positive denominator, zero is ``0/1``.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from ..exceptions import ParseError

Rational = Fraction

RationalLike = Union[Fraction, int, str]


def to_rational(value: RationalLike) -> Fraction:
    """
    Coerce an int, Fraction or ``"p/q"`` string into a Rational.

    Floats are refused: they would smuggle binary rounding into exact work.
    """
    if isinstance(value, bool):
        raise ParseError(f"Not a rational: {value!r}", text=str(value))
    if isinstance(value, (Fraction, int)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise ParseError(f"Not a rational: {value!r}", text=str(value))


def parse_rational(text: str) -> Fraction:
    """
    Parse ``"p/q"`` or an integer literal.

    Raises:
        ParseError: On anything else, including decimals and zero denominators
    """
    stripped = text.strip()
    parts = stripped.split("/")
    if not stripped or len(parts) > 2:
        raise ParseError(f"Expected 'p/q' or an integer, got {text!r}", text=text)
    try:
        numerator = int(parts[0])
        denominator = int(parts[1]) if len(parts) == 2 else 1
    except ValueError:
        raise ParseError(f"Expected 'p/q' or an integer, got {text!r}", text=text)
    if denominator == 0:
        raise ParseError(f"Zero denominator in {text!r}", text=text)
    return Fraction(numerator, denominator)


def format_rational(value: Fraction) -> str:
    """``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(Fraction(value))


@dataclass(frozen=True)
class Interval:
    """
    Open interval (lower, upper); ``None`` marks an infinite endpoint.
    """
    lower: Optional[Fraction] = None
    upper: Optional[Fraction] = None

    def __post_init__(self):
        if self.lower is not None and self.upper is not None and self.lower >= self.upper:
            raise ValueError(f"Empty interval ({self.lower}, {self.upper})")

    @classmethod
    def real_line(cls) -> 'Interval':
        return cls(None, None)

    def contains(self, value) -> bool:
        """Strict membership; works for Fractions and mpmath reals alike."""
        if self.lower is not None and not value > self.lower:
            return False
        if self.upper is not None and not value < self.upper:
            return False
        return True

    def __str__(self) -> str:
        lo = "-inf" if self.lower is None else str(self.lower)
        hi = "inf" if self.upper is None else str(self.upper)
        return f"({lo}, {hi})"
