import pytest
from fractions import Fraction

from pyeop.classical import Family
from pyeop.darboux import (
    ExtendedPotential, PotentialSpec, chain_deviation, chain_sample_points,
    classify_regularity, coordinate_jets, eigenfunction, energy, extended_eigenfunction,
    extended_potential, gauge_factor, iterated_dbt, one_step_dbt, potential_shift_check,
    potential_value, sample_points, schrodinger_residual, seed_image, van_der_corput
)
from pyeop.exceptions import DomainError, ParameterRangeError, PoleError, PreconditionError
from pyeop.kernel.jet import Jet, to_mpf
from pyeop.partitions import Partition, SpectralIndices

HO = PotentialSpec.harmonic()
IO = PotentialSpec.isotonic(Fraction(3, 2))
TDPT = PotentialSpec.trigonometric(Fraction(3, 2), Fraction(3, 2))
TDPT_ASYMMETRIC = PotentialSpec.trigonometric(Fraction(3, 2), Fraction(5, 2))

ADLER_PAIR = SpectralIndices((1, 2))
X = Fraction(1, 3)


def close(spec, a, b, digits=40):
    ctx = spec.ctx
    return abs(a - b) <= ctx.mpf(10) ** (-digits) * max(1, abs(b))


def test_spec_validation():
    """omega > 0, isotonic alpha > 1/2 and TDPT alpha, beta > 1/2."""
    with pytest.raises(ParameterRangeError) as exc_info:
        PotentialSpec.isotonic(Fraction(1, 2))
    assert "greater than 1/2" in str(exc_info.value)
    with pytest.raises(ParameterRangeError):
        PotentialSpec.trigonometric(Fraction(3, 2), Fraction(1, 4))
    with pytest.raises(ParameterRangeError):
        PotentialSpec.harmonic(0)


def test_gauge_frame_skips_confinement_limit():
    frame = PotentialSpec.gauge_frame(Family.laguerre(0))
    assert frame.family == Family.laguerre(0)
    assert frame.omega == 1
    assert close(frame, gauge_factor(frame, 2).value, frame.ctx.mpf(2) ** 0.25 * frame.ctx.exp(-1))
    with pytest.raises(ParameterRangeError):
        PotentialSpec.gauge_frame(Family.hermite(), 0)


def test_domains():
    assert HO.z_domain.lower is None
    assert IO.z_domain.lower == 0
    assert TDPT.z_domain.upper == 1
    with pytest.raises(DomainError):
        IO.check_interior(Fraction(0))
    with pytest.raises(DomainError):
        TDPT.check_interior(Fraction(2))
    TDPT.check_interior(Fraction(3, 2))


def test_potential_values():
    """Closed-form checks at simple points."""
    harmonic = PotentialSpec.harmonic(2)
    assert potential_value(harmonic, 0) == -1
    ctx = IO.ctx
    x = to_mpf(Fraction(1, 2), ctx)
    expected = x ** 2 / 4 + (ctx.mpf(9) / 4 - ctx.mpf(1) / 4) / x ** 2 - ctx.mpf(5) / 2
    assert close(IO, potential_value(IO, Fraction(1, 2)), expected)


def test_tdpt_potential_at_quarter_pi():
    """sin^2 = cos^2 = 1/2 at pi/4: V = 4 (alpha^2 - 1/4) - 16 for alpha = beta = 3/2."""
    ctx = TDPT.ctx
    point = Jet.variable(ctx.pi / 4, 2, ctx)
    assert close(TDPT, potential_value(TDPT, point), ctx.mpf(-8))


@pytest.mark.parametrize("spec, n, expected", [
    (HO, 3, 3),
    (IO, 2, 4),
    (PotentialSpec.trigonometric(1, 1), 1, 16),
    (TDPT, 0, 0),
])
def test_energies(spec, n, expected):
    assert energy(spec, n) == expected


def test_energy_needs_nonnegative_level():
    with pytest.raises(PreconditionError):
        energy(HO, -1)


def test_gauge_factor_values():
    """psi_0(0) = 1 for the oscillator and (1/sqrt 2)^(2 alpha + 1) at pi/4 for TDPT."""
    assert gauge_factor(HO, 0).value == 1
    assert gauge_factor(IO, Fraction(1, 2)).value > 0
    ctx = TDPT.ctx
    value = gauge_factor(TDPT, Jet.variable(ctx.pi / 4, 2, ctx)).value
    assert close(TDPT, value, ctx.mpf(1) / 4)


@pytest.mark.parametrize("spec", [HO, IO, TDPT_ASYMMETRIC], ids=lambda s: s.name)
def test_ground_state_solves_schrodinger(spec):
    """psi_0'' = V psi_0 with the ground level at zero."""
    for x in sample_points(spec, count=5):
        psi = gauge_factor(spec, x)
        assert close(spec, psi.second_derivative, potential_value(spec, x) * psi.value, 35)


def test_coordinate_derivative_matches_jet():
    """The analytic dz/dx agrees with the derivative carried by z."""
    for spec in (HO, IO, TDPT):
        X_jet = Jet.variable(X, 2, spec.ctx)
        z, dz = coordinate_jets(spec, X_jet)
        assert close(spec, z.first_derivative, dz.value)


def test_extended_potential_ground_state_shift():
    """Deleting the ground state of the oscillator shifts the potential by omega."""
    value = extended_potential(HO, SpectralIndices((0,)), X)
    assert close(HO, value, potential_value(HO, X) + 1)


def test_extended_potential_pole():
    """W = z vanishes at x = 0 for N = (1)."""
    with pytest.raises(PoleError) as exc_info:
        extended_potential(HO, SpectralIndices((1,)), 0)
    assert "vanishes" in str(exc_info.value)


def test_regular_extension_is_finite_everywhere():
    for x in [Fraction(-3), Fraction(0), Fraction(5, 2)]:
        extended_potential(HO, ADLER_PAIR, x)


def test_extended_eigenfunction_of_empty_chain():
    empty = SpectralIndices(())
    assert close(HO, extended_eigenfunction(HO, empty, 2, X).value, eigenfunction(HO, 2, X).value)


def test_extended_eigenfunction_rejects_deleted_level():
    with pytest.raises(PreconditionError) as exc_info:
        extended_eigenfunction(HO, ADLER_PAIR, 1, X)
    assert "deleted" in str(exc_info.value)


def test_one_step_matches_extended_eigenfunction():
    """A single Darboux step is the m = 1 Crum formula, including its sign."""
    for spec in (HO, IO, TDPT_ASYMMETRIC):
        step = one_step_dbt(spec, 1, 0, X)
        crum = extended_eigenfunction(spec, SpectralIndices((1,)), 0, X)
        assert step.order == 2
        assert close(spec, step.value, crum.value)
        assert close(spec, step.second_derivative, crum.second_derivative, 30)


def test_seed_image():
    """nu = mu is routed to 1/psi_nu; for the oscillator ground state that is exp(z^2/2)."""
    ctx = HO.ctx
    z = to_mpf(X, ctx) / ctx.sqrt(2)
    assert close(HO, one_step_dbt(HO, 0, 0, X).value, ctx.exp(z * z / 2))
    assert close(HO, seed_image(HO, 0, X).value, ctx.exp(z * z / 2))


def test_one_step_pole():
    with pytest.raises(PoleError):
        one_step_dbt(HO, 1, 0, 0)


def test_iterated_single_step_equals_one_step():
    assert close(HO, iterated_dbt(HO, SpectralIndices((1,)), 0, X).value,
                 one_step_dbt(HO, 1, 0, X).value)


@pytest.mark.parametrize("spec", [HO, IO, TDPT_ASYMMETRIC], ids=lambda s: s.name)
@pytest.mark.parametrize("levels, mu", [((1, 2), 0), ((2, 3), 1), ((0, 3, 4), 1), ((1, 3), 2)])
def test_chain_consistency(spec, levels, mu):
    """Iterated one-step transformations reproduce the Crum formula up to a constant."""
    indices = SpectralIndices(levels)
    points = chain_sample_points(spec, indices, 5)
    assert chain_deviation(spec, indices, mu, points) < 1e-12


def test_chain_deviation_across_a_node():
    """psi_1 after deleting (2, 3) is odd; x = 0 first must not break the fit."""
    indices = SpectralIndices((2, 3))
    points = [Fraction(0), Fraction(1, 3), Fraction(-1, 2), Fraction(2)]
    assert extended_eigenfunction(HO, indices, 1, 0).value == 0
    assert chain_deviation(HO, indices, 1, points) < 1e-12


def test_chain_deviation_single_node_sample():
    assert chain_deviation(HO, SpectralIndices((2, 3)), 1, [Fraction(0)]) == 0


def test_iterated_rejects_deleted_level():
    with pytest.raises(PreconditionError):
        iterated_dbt(HO, ADLER_PAIR, 2, X)


def test_residual_of_unextended_ground_state():
    points = sample_points(HO, count=10)
    assert schrodinger_residual(HO, SpectralIndices(()), 0, points) < 1e-25


@pytest.mark.parametrize("spec", [HO, IO, TDPT], ids=lambda s: s.name)
@pytest.mark.parametrize("mu", [0, 3, 4])
def test_residual_of_adler_extension(spec, mu):
    """Surviving states of the (1, 2)-extension solve the extended Schrodinger equation."""
    points = sample_points(spec, ADLER_PAIR)
    assert len(points) == 50
    assert schrodinger_residual(spec, ADLER_PAIR, mu, points) < 1e-10


def test_residual_of_longer_adler_chain():
    indices = SpectralIndices((2, 3, 5, 6))
    points = sample_points(IO, indices, 20)
    assert schrodinger_residual(IO, indices, 1, points) < 1e-10


@pytest.mark.parametrize("spec", [HO, PotentialSpec.harmonic(Fraction(1, 2)), IO, TDPT_ASYMMETRIC],
                         ids=str)
def test_potential_shift(spec):
    """The first state-deleting step translates the parameters and adds a constant."""
    assert potential_shift_check(spec, sample_points(spec, count=10))


def test_classify_regularity():
    report = classify_regularity(HO, ADLER_PAIR)
    assert report.predicted and report.observed and report.agree
    assert report.partition == Partition((1, 1))

    report = classify_regularity(HO, SpectralIndices((1,)))
    assert not report.predicted and not report.observed
    assert report.interior_roots == 1
    assert report.agree


@pytest.mark.parametrize("family", [Family.hermite(), Family.laguerre(2), Family.jacobi(1, 3)],
                         ids=str)
def test_complete_chain_is_regular(family):
    report = classify_regularity(family, SpectralIndices((0, 1, 2)))
    assert report.predicted and report.observed
    assert not report.lower_boundary_root and not report.upper_boundary_root


def test_extended_potential_object():
    extension = ExtendedPotential.from_chain(IO, ADLER_PAIR)
    assert extension.m == 2
    assert extension.predicted_regular
    assert extension.partition == Partition((1, 1))
    assert ExtendedPotential.from_chain(IO, ADLER_PAIR) is extension


def test_van_der_corput():
    assert [van_der_corput(i) for i in (1, 2, 3, 4)] == [
        Fraction(1, 2), Fraction(1, 4), Fraction(3, 4), Fraction(1, 8)
    ]


def test_sample_points_avoid_wronskian_roots():
    """The first low-discrepancy point of the oscillator window is x = 0, a node of W for N = (1)."""
    assert sample_points(HO, count=1) == [Fraction(0)]
    points = sample_points(HO, SpectralIndices((1,)), 10)
    assert len(points) == 10
    assert all(abs(x) > Fraction(6, 1000) for x in points)
    assert all(-3 < x < 3 for x in points)


def test_sample_points_inside_tdpt_window():
    points = sample_points(TDPT, ADLER_PAIR, 20)
    assert all(Fraction(1, 20) < x < Fraction(3, 2) for x in points)
