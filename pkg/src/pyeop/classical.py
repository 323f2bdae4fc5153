"""
Monic classical orthogonal polynomials with exact rational coefficients.

Hermite, Laguerre and Jacobi polynomials are built from the monic three-term
recurrence

    Pi_{n+1}(z) = (z - p_n) Pi_n(z) - q_n Pi_{n-1}(z),    Pi_0 = 1,

and memoized per family. The Jacobi family lives on z in (-1, 1) with weight
(1 - z)^alpha (1 + z)^beta.
"""

import logging
import threading
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import factorial
from typing import Dict, List, Optional, Tuple

from .exceptions import IndexRangeError, ParameterDegeneracyError, ParameterRangeError
from .kernel.polynomial import UniPoly
from .kernel.rational import RationalLike, format_rational, to_rational

logger = logging.getLogger(__name__)


class FamilyKind(str, Enum):
    HERMITE = "hermite"
    LAGUERRE = "laguerre"
    JACOBI = "jacobi"


@dataclass(frozen=True)
class Family:
    """
    A classical family with exact parameters.

    Laguerre needs alpha > -1; Jacobi needs alpha, beta > -1. This is the only
    place the orthogonality range is enforced.
    """
    kind: FamilyKind
    alpha: Optional[Fraction] = None
    beta: Optional[Fraction] = None

    def __post_init__(self):
        kind = FamilyKind(self.kind)
        object.__setattr__(self, "kind", kind)
        needed = {
            FamilyKind.HERMITE: (),
            FamilyKind.LAGUERRE: ("alpha",),
            FamilyKind.JACOBI: ("alpha", "beta"),
        }[kind]
        for name in ("alpha", "beta"):
            value = getattr(self, name)
            if name not in needed:
                if value is not None:
                    raise ParameterRangeError(
                        f"{kind.value} takes no parameter {name}", parameter=name, value=value
                    )
                continue
            if value is None:
                raise ParameterRangeError(f"{kind.value} needs parameter {name}", parameter=name)
            value = to_rational(value)
            if value <= -1:
                raise ParameterRangeError(
                    f"{name} must be greater than -1 for {kind.value}, got {value}",
                    parameter=name, value=value
                )
            object.__setattr__(self, name, value)

    @classmethod
    def hermite(cls) -> 'Family':
        return cls(FamilyKind.HERMITE)

    @classmethod
    def laguerre(cls, alpha: RationalLike) -> 'Family':
        return cls(FamilyKind.LAGUERRE, to_rational(alpha))

    @classmethod
    def jacobi(cls, alpha: RationalLike, beta: RationalLike) -> 'Family':
        return cls(FamilyKind.JACOBI, to_rational(alpha), to_rational(beta))

    @property
    def params(self) -> Dict[str, str]:
        """Parameters as ``"p/q"`` strings, in a fixed key order."""
        params = {}
        if self.alpha is not None:
            params["alpha"] = format_rational(self.alpha)
        if self.beta is not None:
            params["beta"] = format_rational(self.beta)
        return params

    def __str__(self) -> str:
        if not self.params:
            return self.kind.value
        inner = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.kind.value}({inner})"


@dataclass(frozen=True)
class RecurrenceCoeffs:
    """p_n and q_n of z Pi_n = Pi_{n+1} + p_n Pi_n + q_n Pi_{n-1}."""
    p: Fraction
    q: Fraction


def jacobi_recurrence(alpha: Fraction, beta: Fraction, n: int) -> RecurrenceCoeffs:
    """
    Monic Jacobi recurrence coefficients after cancellation.

    Works on raw parameters so that degenerate values outside the
    orthogonality range can be reached.

    Raises:
        ParameterDegeneracyError: If a denominator vanishes
    """
    s = alpha + beta

    def ratio(numerator: Fraction, denominator: Fraction) -> Fraction:
        if denominator == 0:
            raise ParameterDegeneracyError(
                f"Jacobi recurrence denominator vanishes at n={n} "
                f"(alpha={alpha}, beta={beta})",
                n=n, context={'alpha': alpha, 'beta': beta}
            )
        return numerator / denominator

    if n == 0:
        return RecurrenceCoeffs(ratio(beta - alpha, s + 2), Fraction(0))
    p = ratio(beta * beta - alpha * alpha, (2 * n + s) * (2 * n + s + 2))
    if n == 1:
        q = ratio(4 * (1 + alpha) * (1 + beta), (s + 3) * (s + 2) ** 2)
    else:
        q = ratio(
            4 * n * (n + alpha) * (n + beta) * (n + s),
            (2 * n + s) ** 2 * (2 * n + s + 1) * (2 * n + s - 1)
        )
    return RecurrenceCoeffs(p, q)


_recurrence_cache: Dict[Tuple[Family, int], RecurrenceCoeffs] = {}
_poly_cache: Dict[Family, List[UniPoly]] = {}
_cache_lock = threading.RLock()


def recurrence_coeffs(family: Family, n: int) -> RecurrenceCoeffs:
    """
    Recurrence coefficients (p_n, q_n) of the monic family, memoized.

    Hermite: p = 0, q = n/2. Laguerre: p = 2n + 1 + alpha, q = n(n + alpha).
    """
    if n < 0:
        raise IndexRangeError(f"Recurrence index must be nonnegative, got {n}")
    key = (family, n)
    with _cache_lock:
        cached = _recurrence_cache.get(key)
    if cached is not None:
        return cached

    if family.kind is FamilyKind.HERMITE:
        coeffs = RecurrenceCoeffs(Fraction(0), Fraction(n, 2))
    elif family.kind is FamilyKind.LAGUERRE:
        coeffs = RecurrenceCoeffs(2 * n + 1 + family.alpha, n * (n + family.alpha))
    else:
        coeffs = jacobi_recurrence(family.alpha, family.beta, n)

    with _cache_lock:
        _recurrence_cache[key] = coeffs
    return coeffs


def monic_poly(family: Family, n: int) -> UniPoly:
    """
    The monic degree-n polynomial Pi_n of the family.

    Raises:
        IndexRangeError: If n is negative
        ParameterDegeneracyError: Propagated from the Jacobi recurrence
    """
    if n < 0:
        raise IndexRangeError(f"Polynomial degree must be nonnegative, got {n}")
    with _cache_lock:
        table = _poly_cache.setdefault(family, [UniPoly.one()])
        if n < len(table):
            return table[n]
        start = len(table)
        z = UniPoly.x()
        while len(table) <= n:
            k = len(table) - 1
            coeffs = recurrence_coeffs(family, k)
            previous = table[k - 1] if k >= 1 else UniPoly.zero()
            table.append((z - coeffs.p) * table[k] - previous.scale(coeffs.q))
        logger.debug("Extended monic table", extra={
            "family": str(family), "from_degree": start, "to_degree": n
        })
        return table[n]


def recurrence_residual(family: Family, n: int) -> UniPoly:
    """z Pi_n - Pi_{n+1} - p_n Pi_n - q_n Pi_{n-1}; the zero polynomial when consistent."""
    coeffs = recurrence_coeffs(family, n)
    current = monic_poly(family, n)
    previous = monic_poly(family, n - 1) if n >= 1 else UniPoly.zero()
    return (UniPoly.x() * current - monic_poly(family, n + 1)
            - current.scale(coeffs.p) - previous.scale(coeffs.q))


def shift_parameter(family: Family, k: int) -> Family:
    """Hermite is unchanged; Laguerre alpha -> alpha + k; Jacobi (alpha, beta) -> (alpha + k, beta + k)."""
    if family.kind is FamilyKind.HERMITE or k == 0:
        return family
    if family.kind is FamilyKind.LAGUERRE:
        return Family.laguerre(family.alpha + k)
    return Family.jacobi(family.alpha + k, family.beta + k)


def derivative_rule_check(family: Family, n: int) -> bool:
    """d/dz Pi_n^a == n * Pi_{n-1}^{a_1} as an exact identity."""
    if n < 1:
        raise IndexRangeError(f"Derivative rule needs n >= 1, got {n}")
    lhs = monic_poly(family, n).derivative()
    rhs = monic_poly(shift_parameter(family, 1), n - 1).scale(n)
    return lhs == rhs


def g_function(family: Family, m: int, j: int, k: int) -> UniPoly:
    """
    Entry function of the Noumi-type Jacobi-Trudi determinant.

    g_k^(j) = ((k + m - 1 - j)! / k!) * Pi_k at the parameter shifted
    m - 1 - j times, which is the (m - 1 - j)-th derivative of
    Pi_{k + m - 1 - j}. Negative k gives the zero polynomial.

    Raises:
        IndexRangeError: If j is outside [0, m - 1]
    """
    if not 0 <= j <= m - 1:
        raise IndexRangeError(
            f"Row index j={j} outside [0, {m - 1}]", context={'m': m, 'j': j, 'k': k}
        )
    if k < 0:
        return UniPoly.zero()
    shift = m - 1 - j
    arrangement = factorial(k + shift) // factorial(k)
    return monic_poly(shift_parameter(family, shift), k).scale(arrangement)
