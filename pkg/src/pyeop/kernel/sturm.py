"""Exact real-root counting with Sturm sequences over the rationals."""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from ..exceptions import DegenerateInputError
from .polynomial import UniPoly
from .rational import Interval


@dataclass(frozen=True)
class RootCount:
    """
    Distinct real roots strictly inside an interval, plus whether each finite
    endpoint is itself a root.
    """
    count: int
    lower_root: bool = False
    upper_root: bool = False

    @property
    def boundary_root(self) -> bool:
        return self.lower_root or self.upper_root


def sturm_sequence(p: UniPoly) -> List[UniPoly]:
    """p, p', then negated remainders until the last nonzero one."""
    sequence = [p, p.derivative()]
    while not sequence[-1].is_zero():
        sequence.append(-(sequence[-2] % sequence[-1]))
    sequence.pop()
    return sequence


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


def _sign_at(p: UniPoly, point: Optional[Fraction], at_plus_infinity: bool) -> int:
    if point is not None:
        return _sign(p(point))
    lead = _sign(p.leading_coefficient)
    if at_plus_infinity or p.degree % 2 == 0:
        return lead
    return -lead


def sign_variations(sequence: List[UniPoly], point: Optional[Fraction],
                    at_plus_infinity: bool = False) -> int:
    """Sign changes along the sequence at a point (``None`` means an infinite end)."""
    signs = [s for s in (_sign_at(p, point, at_plus_infinity) for p in sequence) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_root_count(p: UniPoly, interval: Interval) -> RootCount:
    """
    Number of distinct real roots of ``p`` strictly inside ``interval``.

    The polynomial is first made square-free, finite endpoint roots are
    recorded and divided out, then Sturm's theorem applies directly.

    Raises:
        DegenerateInputError: If ``p`` is the zero polynomial
    """
    if p.is_zero():
        raise DegenerateInputError("Root counting is undefined for the zero polynomial")

    lower, upper = interval.lower, interval.upper
    lower_root = lower is not None and p(lower) == 0
    upper_root = upper is not None and p(upper) == 0

    square_free = p.exact_div(p.gcd(p.derivative())) if p.degree > 0 else p
    if lower_root:
        square_free = square_free.exact_div(UniPoly((-lower, 1)))
    if upper_root:
        square_free = square_free.exact_div(UniPoly((-upper, 1)))

    if square_free.degree <= 0:
        return RootCount(0, lower_root, upper_root)

    sequence = sturm_sequence(square_free)
    count = (sign_variations(sequence, lower, at_plus_infinity=False)
             - sign_variations(sequence, upper, at_plus_infinity=True))
    return RootCount(count, lower_root, upper_root)
