import pytest
from fractions import Fraction

from pyeop.exceptions import DivisibilityError
from pyeop.kernel.polynomial import UniPoly

z = UniPoly.x()


def test_trailing_zeros_are_stripped():
    """The leading coefficient is nonzero unless the polynomial is zero."""
    p = UniPoly([1, 2, 0, 0])
    assert p.degree == 1
    assert p.coefficients == (Fraction(1), Fraction(2))
    assert UniPoly([0, 0]).is_zero()
    assert UniPoly.zero().degree == -1


def test_arithmetic_with_scalars():
    """ints and Fractions mix with polynomials on both sides."""
    p = z * z + Fraction(1, 2)
    assert p.coefficients == (Fraction(1, 2), 0, 1)
    assert 1 - z == UniPoly([1, -1])
    assert (2 * z).coefficients == (0, 2)
    assert z - z == 0


def test_multiplication_and_power():
    """(z + 1)^3 expands binomially."""
    assert (z + 1) ** 3 == UniPoly([1, 3, 3, 1])
    assert (z + 1) ** 0 == 1


def test_derivative():
    """Higher derivatives and derivatives past the degree."""
    p = UniPoly([5, 0, 3, 1])
    assert p.derivative() == UniPoly([0, 6, 3])
    assert p.derivative(2) == UniPoly([6, 6])
    assert p.derivative(4).is_zero()
    assert p.derivative(0) == p


def test_evaluation_and_composition():
    """Horner evaluation at rationals and at polynomials."""
    p = z * z - 2
    assert p(Fraction(3, 2)) == Fraction(1, 4)
    assert p(z + 1) == z * z + 2 * z - 1


def test_division_with_remainder():
    """divmod satisfies a = q b + r with deg r < deg b."""
    a = UniPoly([1, 0, 0, 1])
    b = z + 2
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r == -7


def test_exact_div():
    """Exact division succeeds on multiples and fails otherwise."""
    assert (z * z - 1).exact_div(z - 1) == z + 1
    with pytest.raises(DivisibilityError) as exc_info:
        (z * z + 1).exact_div(z - 1)
    assert "does not divide" in str(exc_info.value)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        divmod(z, UniPoly.zero())


def test_gcd_is_monic():
    """gcd((z-1)^2 (z+2), 3(z-1)(z+5)) = z - 1."""
    a = (z - 1) ** 2 * (z + 2)
    b = ((z - 1) * (z + 5)).scale(3)
    assert a.gcd(b) == z - 1
    assert UniPoly([2, 4]).monic() == UniPoly([Fraction(1, 2), 1])


def test_format():
    """Human-readable rendering, highest degree first."""
    assert str(z * z + Fraction(1, 2)) == "z^2 + 1/2"
    assert str(-z + 3) == "-z + 3"
    assert UniPoly([0, -2]).format("x") == "-2*x"
    assert str(UniPoly.zero()) == "0"


def test_immutable_and_hashable():
    p = z + 1
    with pytest.raises(AttributeError):
        p.coefficients = ()
    assert len({p, UniPoly([1, 1])}) == 1
