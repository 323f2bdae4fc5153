"""
Generalized Schur polynomials and their Jacobi-Trudi forms.

The generalized Schur polynomial of a family is the ratio of the alternant
det[Pi_{n_i}(z_j)] to the Vandermonde determinant det[z_j^i]; both use rows in
ascending degree. Its confluent limit z_j -> z times prod_{j<m} j! is the
Wronskian W_lambda(z).

Column Schur tables S_k^(i,m) are seeded at i = 0 by the column partitions
(k, 0, ..., 0) and grown by the three-term relation

    S_k^(i+1,m) = S_{k+1}^(i,m) + p_{k+m-1} S_k^(i,m) + q_{k+m-1} S_{k-1}^(i,m).

Entries vanish exactly when k + i < 0.
"""

import logging
import threading
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Dict, Optional, Sequence, Tuple, Union

from .classical import Family, monic_poly, recurrence_coeffs, shift_parameter
from .eop import EopResult, Route, run_route, superfactorial
from .exceptions import DimensionError, DivisibilityError, IndexRangeError, InternalError
from .kernel.determinant import det
from .kernel.multipoly import MultiPoly, exact_divide
from .kernel.polynomial import UniPoly
from .partitions import Partition, partition_to_indices

logger = logging.getLogger(__name__)

TableEntry = Union[UniPoly, MultiPoly]


def alternant(polys: Sequence[UniPoly], m: int) -> MultiPoly:
    """
    det[phi_i(z_j)] in the variables z_1..z_m.

    Raises:
        DimensionError: If the number of polynomials is not m
    """
    if m < 0 or len(polys) != m:
        raise DimensionError(
            f"Alternant in {m} variables needs {m} polynomials, got {len(polys)}",
            shape=(len(polys), m)
        )
    if m == 0:
        return MultiPoly.constant(1, 0)
    matrix = [[MultiPoly.from_univariate(phi, j, m) for j in range(m)] for phi in polys]
    value = det(matrix)
    return value if isinstance(value, MultiPoly) else MultiPoly.constant(value, m)


def vandermonde(m: int) -> MultiPoly:
    """The determinant with rows 1, z, ..., z^{m-1}; equals prod_{i<j} (z_j - z_i)."""
    return alternant([UniPoly.monomial(i) for i in range(m)], m)


def symmetric_ratio(polys: Sequence[UniPoly], m: int) -> MultiPoly:
    """
    Alternant divided by the Vandermonde determinant.

    Raises:
        InternalError: If the division is inexact, which antisymmetry rules out
    """
    numerator = alternant(polys, m)
    try:
        return exact_divide(numerator, vandermonde(m))
    except DivisibilityError as e:
        raise InternalError(
            "Alternant is not divisible by the Vandermonde determinant",
            context={'polys': [str(p) for p in polys], 'cause': str(e)}
        )


def confluent_limit(polys: Sequence[UniPoly], m: int) -> UniPoly:
    """symmetric_ratio with every z_i set to z (after the division)."""
    return symmetric_ratio(polys, m).substitute_all()


def _check_length(lam: Partition, m) -> int:
    if m is None:
        return len(lam)
    if m != len(lam):
        raise DimensionError(
            f"Partition {lam} has length {len(lam)}, not {m}", shape=(len(lam), m)
        )
    return m


def generalized_schur(family: Family, lam: Partition, m: Optional[int] = None) -> MultiPoly:
    """S_lambda(Z) = det[Pi_{n_i}(z_j)] / det[z_j^i] with n = partition_to_indices(lambda)."""
    m = _check_length(lam, m)
    rows = [monic_poly(family, n) for n in partition_to_indices(lam).indices]
    return symmetric_ratio(rows, m)


def eop_schur_confluent(family: Family, lam: Partition) -> EopResult:
    """S_lambda(z), the confluent generalized Schur polynomial; scale prod j!."""
    def build() -> EopResult:
        poly = generalized_schur(family, lam).substitute_all()
        return EopResult(family, lam, poly, Route.SCHUR_CONFLUENT, superfactorial(len(lam)))

    return run_route(Route.SCHUR_CONFLUENT, family, lam, build)


def column_schur(family: Family, k: int, l: int) -> UniPoly:
    """
    S_k^(0,l)(z) = C(k+l-1, k) Pi_k^{a_{l-1}}(z) = Pi_{k+l-1}^{(l-1)}(z) / (l-1)!.

    Both closed forms are computed; zero for k < 0.

    Raises:
        IndexRangeError: If l < 1
        InternalError: If the two forms disagree
    """
    if l < 1:
        raise IndexRangeError(f"Column Schur polynomials need l >= 1, got {l}")
    if k < 0:
        return UniPoly.zero()
    binomial_form = monic_poly(shift_parameter(family, l - 1), k).scale(comb(k + l - 1, k))
    derivative_form = monic_poly(family, k + l - 1).derivative(l - 1).scale(
        Fraction(1, factorial(l - 1))
    )
    if binomial_form != derivative_form:
        raise InternalError(
            f"Column Schur forms disagree for {family}, k={k}, l={l}",
            context={'binomial': str(binomial_form), 'derivative': str(derivative_form)}
        )
    return binomial_form


class ColumnSchurTable:
    """
    Lazily filled table S_k^(i,m), memoized per (i, k).

    The confluent table holds univariate polynomials; the multivariate one
    holds polynomials in z_1..z_m. Tables are safe to share between threads.
    """

    def __init__(self, family: Family, m: int, seed: Callable[[int], TableEntry],
                 zero: TableEntry):
        if m < 1:
            raise IndexRangeError(f"Column Schur table needs m >= 1, got {m}")
        self.family = family
        self.m = m
        self._seed = seed
        self._zero = zero
        self._entries: Dict[Tuple[int, int], TableEntry] = {}
        self._lock = threading.RLock()

    @classmethod
    def confluent(cls, family: Family, m: int) -> 'ColumnSchurTable':
        return cls(family, m, lambda k: column_schur(family, k, m), UniPoly.zero())

    @classmethod
    def multivariate(cls, family: Family, m: int) -> 'ColumnSchurTable':
        def seed(k: int) -> MultiPoly:
            if k < 0:
                return MultiPoly(m)
            return generalized_schur(family, Partition((k,) + (0,) * (m - 1)), m)
        return cls(family, m, seed, MultiPoly(m))

    def entry(self, i: int, k: int) -> TableEntry:
        """S_k^(i,m)."""
        if i < 0:
            raise IndexRangeError(f"Table row must be nonnegative, got {i}")
        if k + i < 0:
            return self._zero
        key = (i, k)
        with self._lock:
            cached = self._entries.get(key)
            if cached is not None:
                return cached
            if i == 0:
                value = self._seed(k)
            else:
                value = self._grow(i - 1, k)
            self._entries[key] = value
            return value

    def _grow(self, i: int, k: int) -> TableEntry:
        index = k + self.m - 1
        value = self.entry(i, k + 1)
        middle = self.entry(i, k)
        if middle:
            value = value + middle * recurrence_coeffs(self.family, index).p
        lower = self.entry(i, k - 1)
        if lower:
            value = value + lower * recurrence_coeffs(self.family, index).q
        return value

    def __len__(self) -> int:
        return len(self._entries)


def schur_table(family: Family, lam: Partition, m: Optional[int] = None) -> ColumnSchurTable:
    """Confluent table with every entry the Jacobi-Trudi matrix of lambda needs filled in."""
    m = _check_length(lam, m)
    table = ColumnSchurTable.confluent(family, m)
    for r in range(m):
        for i in range(m):
            table.entry(i, lam[r] - r)
    logger.debug("Column Schur table built", extra={
        "family": str(family), "partition": str(lam), "entries": len(table)
    })
    return table


def jacobi_trudi_matrix(table: ColumnSchurTable, lam: Partition):
    """Row r, column i holds S^(i,m)_{lambda_r - r} (0-based)."""
    m = len(lam)
    return [[table.entry(i, lam[r] - r) for i in range(m)] for r in range(m)]


def eop_gjt_confluent(family: Family, lam: Partition) -> EopResult:
    """Confluent generalized Jacobi-Trudi determinant; returns S_lambda(z) with scale prod j!."""
    def build() -> EopResult:
        m = len(lam)
        if m == 0:
            return EopResult(family, lam, UniPoly.one(), Route.GJT_CONFLUENT)
        value = det(jacobi_trudi_matrix(schur_table(family, lam), lam))
        poly = value if isinstance(value, UniPoly) else UniPoly.constant(value)
        return EopResult(family, lam, poly, Route.GJT_CONFLUENT, superfactorial(m))

    return run_route(Route.GJT_CONFLUENT, family, lam, build)


def generalized_jacobi_trudi(family: Family, lam: Partition) -> MultiPoly:
    """The multivariate Jacobi-Trudi determinant; equals generalized_schur(family, lam)."""
    m = len(lam)
    if m == 0:
        return MultiPoly.constant(1, 0)
    table = ColumnSchurTable.multivariate(family, m)
    value = det(jacobi_trudi_matrix(table, lam))
    return value if isinstance(value, MultiPoly) else MultiPoly.constant(value, m)


def recS_check(family: Family, lam: Partition, i: int) -> bool:
    """
    S^(i+1,m)_{lambda_r - r} == z S^(i,m)_{lambda_r - r} + S^(i,m-1)_{lambda_r - r + 1} for every row r.

    Raises:
        IndexRangeError: If i is outside [0, m - 2]
    """
    m = len(lam)
    if not 0 <= i <= m - 2:
        raise IndexRangeError(f"Index i={i} outside [0, {m - 2}]", context={'m': m})
    table = ColumnSchurTable.confluent(family, m)
    smaller = ColumnSchurTable.confluent(family, m - 1)
    z = UniPoly.x()
    for r in range(m):
        k = lam[r] - r
        lhs = table.entry(i + 1, k)
        rhs = z * table.entry(i, k) + smaller.entry(i, k + 1)
        if lhs != rhs:
            logger.info("Vector recursion fails", extra={
                "family": str(family), "partition": str(lam), "i": i, "row": r
            })
            return False
    return True
