"""Sparse multivariate polynomials over the rationals and exact division."""

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

from ..exceptions import DimensionError, DivisibilityError
from .polynomial import UniPoly

Exponent = Tuple[int, ...]
Scalar = Union[Fraction, int]


class MultiPoly:
    """
    Sparse polynomial in the variables z_1 .. z_n.

    ``terms`` maps exponent tuples (one slot per variable) to nonzero
    coefficients. The variable count is fixed at construction; monomials are
    ordered lexicographically with z_1 > z_2 > ... > z_n, which is plain tuple
    comparison of exponent vectors.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Union[Mapping[Exponent, Scalar], Iterable] = ()):
        cleaned: Dict[Exponent, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exponent, coefficient in items:
            exponent = tuple(exponent)
            if len(exponent) != nvars:
                raise DimensionError(
                    f"Exponent {exponent} does not have {nvars} slots", shape=len(exponent)
                )
            value = cleaned.get(exponent, Fraction(0)) + Fraction(coefficient)
            if value:
                cleaned[exponent] = value
            else:
                cleaned.pop(exponent, None)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def _from_clean(cls, nvars: int, terms: Dict[Exponent, Fraction]) -> 'MultiPoly':
        poly = cls.__new__(cls)
        object.__setattr__(poly, "nvars", nvars)
        object.__setattr__(poly, "terms", terms)
        return poly

    # Constructors

    @classmethod
    def constant(cls, value: Scalar, nvars: int) -> 'MultiPoly':
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, index: int, nvars: int) -> 'MultiPoly':
        """z_{index+1}; ``index`` is 0-based."""
        exponent = [0] * nvars
        exponent[index] = 1
        return cls(nvars, {tuple(exponent): 1})

    @classmethod
    def from_univariate(cls, poly: UniPoly, index: int, nvars: int) -> 'MultiPoly':
        """Embed p(z) as p(z_{index+1})."""
        terms = {}
        for degree, coefficient in enumerate(poly.coefficients):
            if coefficient:
                exponent = [0] * nvars
                exponent[index] = degree
                terms[tuple(exponent)] = coefficient
        return cls._from_clean(nvars, terms)

    # Properties

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(exponent) for exponent in self.terms)

    def leading_term(self) -> Tuple[Exponent, Fraction]:
        exponent = max(self.terms)
        return exponent, self.terms[exponent]

    # Arithmetic

    def _coerce(self, other) -> 'MultiPoly':
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise DimensionError(
                    f"Variable count mismatch: {self.nvars} vs {other.nvars}",
                    shape=(self.nvars, other.nvars)
                )
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for exponent, coefficient in other.terms.items():
            value = terms.get(exponent, 0) + coefficient
            if value:
                terms[exponent] = value
            else:
                terms.pop(exponent, None)
        return MultiPoly._from_clean(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self) -> 'MultiPoly':
        return MultiPoly._from_clean(self.nvars, {e: -c for e, c in self.terms.items()})

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
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: Dict[Exponent, Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                exponent = tuple(x + y for x, y in zip(ea, eb))
                terms[exponent] = terms.get(exponent, 0) + ca * cb
        return MultiPoly._from_clean(self.nvars, {e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def scale(self, factor: Scalar) -> 'MultiPoly':
        if not factor:
            return MultiPoly(self.nvars)
        return MultiPoly._from_clean(self.nvars, {e: c * factor for e, c in self.terms.items()})

    def __pow__(self, exponent: int) -> 'MultiPoly':
        result = MultiPoly.constant(1, self.nvars)
        for _ in range(exponent):
            result = result * self
        return result

    # Variable manipulation

    def permute(self, permutation: Sequence[int]) -> 'MultiPoly':
        """Send variable i to variable permutation[i]."""
        terms = {}
        for exponent, coefficient in self.terms.items():
            moved = [0] * self.nvars
            for i, power in enumerate(exponent):
                moved[permutation[i]] = power
            terms[tuple(moved)] = coefficient
        return MultiPoly._from_clean(self.nvars, terms)

    def swap(self, i: int, j: int) -> 'MultiPoly':
        permutation = list(range(self.nvars))
        permutation[i], permutation[j] = j, i
        return self.permute(permutation)

    def substitute_all(self) -> UniPoly:
        """Confluent substitution z_1 = ... = z_n = z."""
        coefficients: Dict[int, Fraction] = {}
        for exponent, coefficient in self.terms.items():
            degree = sum(exponent)
            coefficients[degree] = coefficients.get(degree, 0) + coefficient
        if not coefficients:
            return UniPoly()
        return UniPoly([coefficients.get(d, 0) for d in range(max(coefficients) + 1)])

    def evaluate(self, values: Sequence[Scalar]) -> Fraction:
        total = Fraction(0)
        for exponent, coefficient in self.terms.items():
            term = Fraction(coefficient)
            for value, power in zip(values, exponent):
                term *= Fraction(value) ** power
            total += term
        return total

    # Comparison / display

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(other, self.nvars)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(("MultiPoly", self.nvars, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {{{', '.join(f'{e}: {c}' for e, c in sorted(self.terms.items(), reverse=True))}}})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exponent in sorted(self.terms, reverse=True):
            coefficient = self.terms[exponent]
            factors = [
                f"z{i + 1}" if power == 1 else f"z{i + 1}^{power}"
                for i, power in enumerate(exponent) if power
            ]
            if not factors:
                pieces.append(str(coefficient))
            elif coefficient == 1:
                pieces.append("*".join(factors))
            elif coefficient == -1:
                pieces.append("-" + "*".join(factors))
            else:
                pieces.append(f"{coefficient}*" + "*".join(factors))
        return " + ".join(pieces).replace("+ -", "- ")


def exact_divide(num: MultiPoly, den: MultiPoly) -> MultiPoly:
    """
    Exact quotient ``num / den`` in the multivariate polynomial ring.

    Reduces by the lexicographic leading term of ``den``. A single divisor is a
    Groebner basis of the ideal it generates, so the first leading term of the
    running remainder that ``den`` cannot cancel proves the division inexact.

    Raises:
        DivisibilityError: If the remainder is nonzero
        ZeroDivisionError: If ``den`` is zero
    """
    if den.is_zero():
        raise ZeroDivisionError("Multivariate division by zero")
    if num.nvars != den.nvars:
        raise DimensionError(
            f"Variable count mismatch: {num.nvars} vs {den.nvars}",
            shape=(num.nvars, den.nvars)
        )
    lead_exponent, lead_coefficient = den.leading_term()
    remainder: Dict[Exponent, Fraction] = dict(num.terms)
    quotient: Dict[Exponent, Fraction] = {}
    while remainder:
        exponent = max(remainder)
        if any(e < d for e, d in zip(exponent, lead_exponent)):
            raise DivisibilityError(
                "Multivariate division leaves a nonzero remainder",
                context={'stuck_monomial': exponent, 'divisor_leading': lead_exponent}
            )
        shift = tuple(e - d for e, d in zip(exponent, lead_exponent))
        factor = remainder[exponent] / lead_coefficient
        quotient[shift] = quotient.get(shift, 0) + factor
        for den_exponent, den_coefficient in den.terms.items():
            target = tuple(s + d for s, d in zip(shift, den_exponent))
            value = remainder.get(target, 0) - factor * den_coefficient
            if value:
                remainder[target] = value
            else:
                remainder.pop(target, None)
    return MultiPoly._from_clean(num.nvars, {e: c for e, c in quotient.items() if c})
