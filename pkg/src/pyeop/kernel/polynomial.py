"""Dense univariate polynomials over the rationals."""

from fractions import Fraction
from typing import Iterable, List, Tuple, Union

from ..exceptions import DivisibilityError

Scalar = Union[Fraction, int]


class UniPoly:
    """
    Dense univariate polynomial with exact rational coefficients.

    Coefficients are stored in ascending degree order with trailing zeros
    stripped, so the leading coefficient is nonzero unless the polynomial is
    zero (empty tuple, degree -1). Instances are immutable and hashable.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[Scalar] = ()):
        terms = [Fraction(c) for c in coefficients]
        while terms and terms[-1] == 0:
            terms.pop()
        object.__setattr__(self, "coefficients", tuple(terms))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    # Constructors

    @classmethod
    def constant(cls, value: Scalar) -> 'UniPoly':
        return cls((value,))

    @classmethod
    def zero(cls) -> 'UniPoly':
        return cls()

    @classmethod
    def one(cls) -> 'UniPoly':
        return cls((1,))

    @classmethod
    def x(cls) -> 'UniPoly':
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, coefficient: Scalar = 1) -> 'UniPoly':
        return cls([0] * degree + [coefficient])

    # Properties

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_constant(self) -> bool:
        return len(self.coefficients) <= 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return Fraction(0)

    # Arithmetic

    @staticmethod
    def _coerce(other) -> 'UniPoly':
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        return UniPoly([c + (b[i] if i < len(b) else 0) for i, c in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> 'UniPoly':
        return UniPoly([-c for c in self.coefficients])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return UniPoly()
        product = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return UniPoly(product)

    __rmul__ = __mul__

    def scale(self, factor: Scalar) -> 'UniPoly':
        return UniPoly([c * factor for c in self.coefficients])

    def __pow__(self, exponent: int) -> 'UniPoly':
        if exponent < 0:
            raise ValueError("Negative powers are not polynomials")
        result, base = UniPoly.one(), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def derivative(self, order: int = 1) -> 'UniPoly':
        """The order-th derivative; order 0 returns self."""
        coefficients = self.coefficients
        for _ in range(order):
            coefficients = tuple(i * c for i, c in enumerate(coefficients) if i > 0)
        return UniPoly(coefficients)

    def __call__(self, value):
        """
        Horner evaluation.

        ``value`` may be any ring element that accepts Fraction on either side
        (Fraction, int, MultiPoly, UniPoly for composition).
        """
        result = Fraction(0)
        for c in reversed(self.coefficients):
            result = result * value + c
        return result

    # Division

    def __divmod__(self, other: 'UniPoly') -> Tuple['UniPoly', 'UniPoly']:
        if not isinstance(other, UniPoly):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("Polynomial division by zero")
        remainder: List[Fraction] = list(self.coefficients)
        d = other.degree
        lead = other.leading_coefficient
        if len(remainder) - 1 < d:
            return UniPoly(), self
        quotient = [Fraction(0)] * (len(remainder) - d)
        for k in range(len(remainder) - 1 - d, -1, -1):
            factor = remainder[k + d] / lead
            quotient[k] = factor
            if factor:
                for j, b in enumerate(other.coefficients):
                    remainder[k + j] -= factor * b
        return UniPoly(quotient), UniPoly(remainder[:d])

    def __floordiv__(self, other: 'UniPoly') -> 'UniPoly':
        return divmod(self, other)[0]

    def __mod__(self, other: 'UniPoly') -> 'UniPoly':
        return divmod(self, other)[1]

    def exact_div(self, other: 'UniPoly') -> 'UniPoly':
        quotient, remainder = divmod(self, other)
        if not remainder.is_zero():
            raise DivisibilityError(
                f"{other} does not divide {self}",
                context={'remainder': str(remainder)}
            )
        return quotient

    def monic(self) -> 'UniPoly':
        if self.is_zero():
            return self
        return self.scale(1 / self.leading_coefficient)

    def gcd(self, other: 'UniPoly') -> 'UniPoly':
        """Monic greatest common divisor (zero only if both are zero)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    # Comparison / display

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(("UniPoly", self.coefficients))

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def __repr__(self) -> str:
        return f"UniPoly({[str(c) for c in self.coefficients]!r})"

    def __str__(self) -> str:
        return self.format("z")

    def format(self, variable: str = "z") -> str:
        if not self.coefficients:
            return "0"
        pieces = []
        for i in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if i == 0:
                body = str(magnitude)
            else:
                power = variable if i == 1 else f"{variable}^{i}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text
