import pytest
import sympy
from fractions import Fraction

from pyeop.classical import (
    Family, FamilyKind, derivative_rule_check, g_function, jacobi_recurrence, monic_poly,
    recurrence_coeffs, recurrence_residual, shift_parameter
)
from pyeop.exceptions import IndexRangeError, ParameterDegeneracyError, ParameterRangeError
from pyeop.kernel.polynomial import UniPoly

x = sympy.Symbol("x")

FAMILIES = [
    Family.hermite(),
    Family.laguerre(Fraction(1, 2)),
    Family.laguerre(Fraction(7, 3)),
    Family.jacobi(Fraction(3, 4), Fraction(5, 2)),
    Family.jacobi(Fraction(-1, 2), Fraction(1, 3)),
]


def to_sympy(p: UniPoly):
    return sum(sympy.Rational(c.numerator, c.denominator) * x ** i
               for i, c in enumerate(p.coefficients))


def classical_normalization(family: Family, n: int):
    """The monic polynomial from sympy's standard normalizations."""
    if family.kind is FamilyKind.HERMITE:
        return sympy.hermite(n, x) / 2 ** n
    a = sympy.Rational(family.alpha.numerator, family.alpha.denominator)
    if family.kind is FamilyKind.LAGUERRE:
        return (-1) ** n * sympy.factorial(n) * sympy.assoc_laguerre(n, a, x)
    b = sympy.Rational(family.beta.numerator, family.beta.denominator)
    return 2 ** n * sympy.factorial(n) / sympy.rf(a + b + n + 1, n) * sympy.jacobi(n, a, b, x)


def test_family_validation():
    """Parameters are required, forbidden and range-checked per kind."""
    with pytest.raises(ParameterRangeError) as exc_info:
        Family.laguerre(-1)
    assert "greater than -1" in str(exc_info.value)
    with pytest.raises(ParameterRangeError):
        Family(FamilyKind.LAGUERRE)
    with pytest.raises(ParameterRangeError):
        Family(FamilyKind.HERMITE, Fraction(1))
    with pytest.raises(ParameterRangeError):
        Family.jacobi(Fraction(1, 2), Fraction(-3, 2))


def test_family_params_and_str():
    family = Family.jacobi(Fraction(3, 4), 2)
    assert family.params == {"alpha": "3/4", "beta": "2"}
    assert str(family) == "jacobi(alpha=3/4, beta=2)"
    assert str(Family.hermite()) == "hermite"
    assert Family.laguerre("1/2") == Family.laguerre(Fraction(1, 2))


def test_low_degree_polynomials():
    """Closed forms of the first few monic polynomials."""
    z = UniPoly.x()
    assert monic_poly(Family.hermite(), 2) == z * z - Fraction(1, 2)
    assert monic_poly(Family.hermite(), 3) == z ** 3 - z.scale(Fraction(3, 2))
    alpha = Fraction(1, 2)
    assert monic_poly(Family.laguerre(alpha), 1) == z - (1 + alpha)
    assert monic_poly(Family.laguerre(alpha), 2) == (
        z * z - z.scale(2 * (alpha + 2)) + (alpha + 1) * (alpha + 2)
    )
    jacobi = Family.jacobi(Fraction(3, 4), Fraction(5, 2))
    # p_0 = (beta - alpha) / (alpha + beta + 2) = 1/3
    assert monic_poly(jacobi, 1) == z - Fraction(1, 3)


@pytest.mark.parametrize("family", FAMILIES, ids=str)
@pytest.mark.parametrize("n", [0, 1, 4, 9])
def test_matches_classical_normalization(family, n):
    """Monic polynomials equal the rescaled textbook polynomials."""
    difference = sympy.expand(to_sympy(monic_poly(family, n)) - classical_normalization(family, n))
    assert difference == 0


@pytest.mark.parametrize("family", FAMILIES, ids=str)
def test_recurrence_residual_vanishes(family):
    for n in range(12):
        assert recurrence_residual(family, n).is_zero()


@pytest.mark.parametrize("family", FAMILIES, ids=str)
def test_derivative_rule(family):
    """Pi_n' = n Pi_{n-1} at the shifted parameter."""
    for n in range(1, 12):
        assert derivative_rule_check(family, n)


def test_recurrence_coefficients():
    assert recurrence_coeffs(Family.hermite(), 3).q == Fraction(3, 2)
    laguerre = recurrence_coeffs(Family.laguerre(Fraction(1, 2)), 2)
    assert laguerre.p == Fraction(11, 2)
    assert laguerre.q == 5
    with pytest.raises(IndexRangeError):
        recurrence_coeffs(Family.hermite(), -1)


def test_degenerate_jacobi_recurrence():
    """alpha + beta = -2 makes the first denominator vanish."""
    with pytest.raises(ParameterDegeneracyError) as exc_info:
        jacobi_recurrence(Fraction(-1), Fraction(-1), 0)
    assert exc_info.value.context["alpha"] == -1


def test_negative_degree_rejected():
    with pytest.raises(IndexRangeError):
        monic_poly(Family.hermite(), -1)


def test_shift_parameter():
    assert shift_parameter(Family.hermite(), 3) == Family.hermite()
    assert shift_parameter(Family.laguerre(Fraction(1, 2)), 2) == Family.laguerre(Fraction(5, 2))
    assert shift_parameter(Family.jacobi(0, 1), 1) == Family.jacobi(1, 2)


@pytest.mark.parametrize("family", FAMILIES, ids=str)
def test_g_functions(family):
    """The top row is a derivative of a higher polynomial; the bottom row is Pi_k itself."""
    m = 3
    for k in range(6):
        assert g_function(family, m, m - 1, k) == monic_poly(family, k)
        assert g_function(family, m, 0, k) == monic_poly(family, k + 2).derivative(2)
    assert g_function(family, m, 1, -1).is_zero()
    with pytest.raises(IndexRangeError):
        g_function(family, m, m, 0)


@pytest.mark.parametrize("n", range(0, 16))
def test_hermite_parity(n):
    """Pi_n(-z) = (-1)^n Pi_n(z): only powers of the parity of n appear."""
    p = monic_poly(Family.hermite(), n)
    assert all(c == 0 for i, c in enumerate(p.coefficients) if (i - n) % 2)
    for point in (Fraction(1, 3), Fraction(-7, 2), Fraction(5)):
        assert p(-point) == (-1) ** n * p(point)
