"""
Exact determinants over Q, Q[z] and Q[z_1..z_n], and the Wronskian.
"""

import logging
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..exceptions import ArityError, DimensionError
from .multipoly import MultiPoly, exact_divide
from .polynomial import UniPoly

logger = logging.getLogger(__name__)

Matrix = Sequence[Sequence[Any]]


def _is_zero(entry) -> bool:
    return entry == 0


def _exact_quotient(a, b):
    """Division known to be exact in the ring of ``a``."""
    if isinstance(a, MultiPoly):
        if not isinstance(b, MultiPoly):
            b = MultiPoly.constant(b, a.nvars)
        return exact_divide(a, b)
    if isinstance(a, UniPoly):
        if not isinstance(b, UniPoly):
            b = UniPoly.constant(b)
        return a.exact_div(b)
    if isinstance(b, (UniPoly, MultiPoly)):
        # scalar over a constant polynomial
        return _exact_quotient(b * 0 + a, b)
    return Fraction(a) / Fraction(b)


def _check_square(matrix: Matrix) -> int:
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise DimensionError(
                f"Determinant needs a square matrix, got {n} rows with a row of length {len(row)}",
                shape=(n, len(row))
            )
    return n


def det_bareiss(matrix: Matrix):
    """
    Fraction-free Bareiss elimination with row pivoting.

    Every division is exact, so this works over any integral domain whose
    elements support exact quotients (Q, Q[z], Q[z_1..z_n]).
    """
    n = _check_square(matrix)
    if n == 0:
        return Fraction(1)
    m: List[List[Any]] = [list(row) for row in matrix]
    sign = 1
    previous: Any = Fraction(1)
    for k in range(n - 1):
        if _is_zero(m[k][k]):
            for i in range(k + 1, n):
                if not _is_zero(m[i][k]):
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return m[k][k] * 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = _exact_quotient(m[i][j] * pivot - m[i][k] * m[k][j], previous)
        previous = pivot
    result = m[n - 1][n - 1]
    return -result if sign < 0 else result


def det_cofactor(matrix: Matrix):
    """
    Laplace expansion along the top row with memoized minors.

    Minors are keyed by their column set (the row set is implied by its size),
    so the work is O(n 2^n) ring multiplications and no division is needed.
    """
    n = _check_square(matrix)
    if n == 0:
        return Fraction(1)
    memo: Dict[Tuple[int, ...], Any] = {}

    def minor(columns: Tuple[int, ...]):
        row = n - len(columns)
        if len(columns) == 1:
            return matrix[row][columns[0]]
        if columns in memo:
            return memo[columns]
        total: Any = None
        for position, column in enumerate(columns):
            entry = matrix[row][column]
            if _is_zero(entry):
                continue
            term = entry * minor(columns[:position] + columns[position + 1:])
            if position % 2:
                term = -term
            total = term if total is None else total + term
        if total is None:
            total = matrix[row][columns[0]] * 0
        memo[columns] = total
        return total

    return minor(tuple(range(n)))


def det(matrix: Matrix, cofactor_limit: Optional[int] = None):
    """
    Exact determinant of a square matrix.

    Rational entries use Bareiss elimination. Polynomial entries use cofactor
    expansion up to ``cofactor_limit`` (default from the compute config) and
    Bareiss over the polynomial ring above it. The 0x0 determinant is 1.

    Raises:
        DimensionError: If the matrix is not square
    """
    n = _check_square(matrix)
    if n == 0:
        return Fraction(1)
    polynomial_entries = any(
        isinstance(entry, (UniPoly, MultiPoly)) for row in matrix for entry in row
    )
    if not polynomial_entries:
        return det_bareiss(matrix)
    if cofactor_limit is None:
        from ..config import get_compute_config
        cofactor_limit = get_compute_config().cofactor_limit
    if n <= cofactor_limit:
        return det_cofactor(matrix)
    logger.debug("Bareiss over polynomial ring", extra={"size": n})
    return det_bareiss(matrix)


def wronskian_matrix(fns: Sequence[UniPoly]) -> List[List[UniPoly]]:
    """Row k holds the k-th derivatives of the functions."""
    return [[f.derivative(k) for f in fns] for k in range(len(fns))]


def wronskian(fns: Sequence[UniPoly]) -> UniPoly:
    """
    Wronskian W(f_1, ..., f_m) of univariate polynomials.

    Raises:
        ArityError: If no polynomial is given
    """
    if not fns:
        raise ArityError("Wronskian of an empty family is undefined")
    value = det(wronskian_matrix(fns))
    if isinstance(value, UniPoly):
        return value
    return UniPoly.constant(value)
