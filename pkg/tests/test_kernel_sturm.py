import random

import pytest
from fractions import Fraction

from pyeop.exceptions import DegenerateInputError
from pyeop.kernel.polynomial import UniPoly
from pyeop.kernel.rational import Interval
from pyeop.kernel.sturm import sign_variations, sturm_root_count, sturm_sequence

z = UniPoly.x()
REAL_LINE = Interval.real_line()
POSITIVE = Interval(Fraction(0), None)
JACOBI = Interval(Fraction(-1), Fraction(1))


def _with_roots(*roots):
    p = UniPoly.one()
    for r in roots:
        p = p * (z - Fraction(r))
    return p


def test_rootless_quadratic():
    """z^2 + 1/2 has no real roots."""
    assert sturm_root_count(z * z + Fraction(1, 2), REAL_LINE).count == 0


@pytest.mark.parametrize("interval, expected", [
    (REAL_LINE, 3),
    (POSITIVE, 2),
    (JACOBI, 0),
    (Interval(Fraction(-4), Fraction(3, 2)), 2),
])
def test_counts_on_intervals(interval, expected):
    """(z - 1)(z - 2)(z + 3) (z^2 + 1) restricted to several intervals."""
    p = _with_roots(1, 2, -3) * (z * z + 1)
    assert sturm_root_count(p, interval).count == expected


def test_multiple_roots_counted_once():
    p = _with_roots(Fraction(1, 3), Fraction(1, 3), Fraction(1, 3), -2)
    assert sturm_root_count(p, REAL_LINE).count == 2


def test_endpoint_roots_flagged_not_counted():
    """Roots at finite ends are reported separately."""
    p = _with_roots(-1, 0, 1)
    result = sturm_root_count(p, JACOBI)
    assert result.count == 1
    assert result.lower_root and result.upper_root
    assert result.boundary_root

    result = sturm_root_count(p, POSITIVE)
    assert result.count == 1
    assert result.lower_root and not result.upper_root


def test_constant_polynomial_has_no_roots():
    assert sturm_root_count(UniPoly.constant(5), REAL_LINE).count == 0


def test_zero_polynomial_rejected():
    with pytest.raises(DegenerateInputError) as exc_info:
        sturm_root_count(UniPoly.zero(), REAL_LINE)
    assert "zero polynomial" in str(exc_info.value)


def test_sequence_and_variations():
    """z^2 - 2: the sequence changes sign twice more at -inf than at +inf."""
    sequence = sturm_sequence(z * z - 2)
    assert sequence[0] == z * z - 2
    assert sequence[1] == 2 * z
    assert sign_variations(sequence, None, at_plus_infinity=False) == 2
    assert sign_variations(sequence, None, at_plus_infinity=True) == 0


def _grid_root_count(p, lower, upper, steps):
    """Sign changes of a square-free p on a grid fine enough to isolate its roots."""
    width = upper - lower
    values = [p(lower + width * Fraction(k, steps)) for k in range(steps + 1)]
    assert all(values), "grid point hit a root"
    return sum(1 for a, b in zip(values, values[1:]) if (a > 0) != (b > 0))


@pytest.mark.parametrize("seed", range(8))
def test_sturm_agrees_with_grid_isolation(seed):
    """
    Random degree <= 8 polynomials with repeated rational roots and a complex pair.

    Roots have denominators <= 5, so they are at least 1/20 apart; the grid
    step is 1/61 and no grid point is a root.
    """
    rng = random.Random(seed)
    roots = [Fraction(rng.randint(-15, 15), rng.randint(1, 5)) for _ in range(rng.randint(1, 5))]
    repeated = roots + rng.sample(roots, rng.randint(0, min(len(roots), 1)))
    p = _with_roots(*repeated) * (z * z + 1)
    assert p.degree <= 8
    square_free = _with_roots(*set(roots))
    lower = Fraction(-7) + Fraction(1, 1000)
    upper = Fraction(7) + Fraction(1, 1000)
    expected = _grid_root_count(square_free, lower, upper, 14 * 61)
    assert expected == sum(1 for r in set(roots) if lower < r < upper)
    assert sturm_root_count(p, Interval(lower, upper)).count == expected
