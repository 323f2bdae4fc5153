import pytest
from fractions import Fraction

from pyeop.classical import Family, monic_poly
from pyeop.eop import (
    EopResult, Route, eop_noumi_jt, eop_wronskian, gauge_factorization_check, noumi_matrix,
    superfactorial, wronskian_polynomial
)
from pyeop.exceptions import DomainError
from pyeop.kernel.polynomial import UniPoly
from pyeop.partitions import Partition, partitions_up_to
from pyeop.schur import eop_gjt_confluent, eop_schur_confluent

z = UniPoly.x()
HERMITE = Family.hermite()

GRID_FAMILIES = [
    HERMITE,
    Family.laguerre(Fraction(1, 2)),
    Family.laguerre(Fraction(7, 3)),
    Family.jacobi(Fraction(3, 4), Fraction(3, 2)),
    Family.jacobi(Fraction(5, 2), Fraction(3, 4)),
]


def test_superfactorial():
    assert [superfactorial(m) for m in range(6)] == [1, 1, 1, 2, 12, 288]


def test_hermite_one_one():
    """W(Pi_1, Pi_2) = z^2 + 1/2 for lambda = (1, 1)."""
    result = eop_wronskian(HERMITE, Partition((1, 1)))
    assert result.polynomial == z * z + Fraction(1, 2)
    assert result.route is Route.WRONSKIAN
    assert result.degree == 2


def test_zero_partition_gives_superfactorial():
    """W(1, z, Pi_2) = 1! 2!."""
    assert eop_wronskian(HERMITE, Partition((0, 0, 0))).polynomial == 2
    assert eop_schur_confluent(HERMITE, Partition((0, 0, 0))).polynomial == 1
    assert eop_schur_confluent(HERMITE, Partition((0, 0, 0))).normalized == 2


def test_single_level_is_the_classical_polynomial():
    alpha = Fraction(1, 2)
    result = eop_wronskian(Family.laguerre(alpha), Partition((1,)))
    assert result.polynomial == z - Fraction(3, 2)
    assert eop_wronskian(HERMITE, Partition((4,))).polynomial == monic_poly(HERMITE, 4)


def test_empty_chain():
    for route in (eop_wronskian, eop_noumi_jt, eop_schur_confluent, eop_gjt_confluent):
        assert route(HERMITE, Partition(())).normalized == 1


def test_noumi_matrix_shape():
    lam = Partition((2, 1, 0))
    matrix = noumi_matrix(HERMITE, lam)
    assert len(matrix) == 3
    assert all(len(row) == 3 for row in matrix)
    assert matrix[2][0] == monic_poly(HERMITE, 4)


@pytest.mark.parametrize("family", GRID_FAMILIES, ids=str)
def test_four_routes_agree(family):
    """All routes give the same Wronskian-normalized polynomial of degree |lambda|."""
    for lam in partitions_up_to(4, 3):
        results = [
            eop_wronskian(family, lam),
            eop_noumi_jt(family, lam),
            eop_schur_confluent(family, lam),
            eop_gjt_confluent(family, lam),
        ]
        reference = results[0].normalized
        assert reference.degree == lam.weight
        for result in results[1:]:
            assert result.normalized == reference, (family, lam, result.route)


def test_result_scale():
    result = EopResult(HERMITE, Partition((0, 0, 0)), UniPoly.one(), Route.GJT_CONFLUENT, 2)
    assert result.normalized == 2


def test_wronskian_polynomial_cache():
    lam = Partition((2, 2))
    assert wronskian_polynomial(HERMITE, lam) is wronskian_polynomial(HERMITE, lam)


@pytest.mark.parametrize("family, lam, points", [
    (HERMITE, Partition((1, 1)), [Fraction(1, 3), Fraction(-1, 2), Fraction(2)]),
    (HERMITE, Partition((2, 1, 0)), [Fraction(1, 5), Fraction(3, 2)]),
    (Family.laguerre(Fraction(3, 2)), Partition((1, 1)), [Fraction(1, 2), Fraction(2)]),
    (Family.jacobi(Fraction(3, 2), Fraction(5, 2)), Partition((2, 2)),
     [Fraction(1, 3), Fraction(1)]),
])
def test_gauge_factorization(family, lam, points):
    """The x-Wronskian of eigenfunctions factors through W_lambda(z)."""
    assert gauge_factorization_check(family, lam, points)


def test_gauge_factorization_detects_wrong_polynomial(monkeypatch):
    """Replacing W_lambda by another polynomial breaks the factorization."""
    import pyeop.eop as eop_module

    monkeypatch.setattr(eop_module, "wronskian_polynomial", lambda family, lam: z * z + 1)
    assert not gauge_factorization_check(HERMITE, Partition((1, 1)), [Fraction(1, 3), Fraction(2)])


def test_gauge_factorization_rejects_exterior_points():
    with pytest.raises(DomainError):
        gauge_factorization_check(Family.laguerre(Fraction(3, 2)), Partition((1,)), [Fraction(-1)])


@pytest.mark.parametrize("family, lam, points", [
    (Family.laguerre(0), Partition((1,)), [Fraction(1, 2), Fraction(2)]),
    (Family.laguerre(Fraction(1, 2)), Partition((1, 1)), [Fraction(1, 2), Fraction(2)]),
    (Family.jacobi(0, 0), Partition((1, 1)), [Fraction(1, 3), Fraction(1)]),
    (Family.jacobi(Fraction(-1, 2), Fraction(1, 4)), Partition((2, 1)), [Fraction(1, 3)]),
])
def test_gauge_factorization_below_confinement_limit(family, lam, points):
    """Parameters at or below 1/2 are valid families; the factorization still holds."""
    assert gauge_factorization_check(family, lam, points)
