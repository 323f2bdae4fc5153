"""
Darboux-extended potentials of the three confining shape-invariant potentials.

    harmonic (Hermite)   V = w^2 x^2/4 - w/2,                         z = sqrt(w/2) x
    isotonic (Laguerre)  V = w^2 x^2/4 + (a^2 - 1/4)/x^2 - w(a + 1),  z = w x^2/2
    trigonometric DPT    V = (a^2 - 1/4)/sin^2 x + (b^2 - 1/4)/cos^2 x
    (Jacobi)                 - (a + b + 1)^2,                         z = cos 2x

The eigenfunctions are psi_n = psi_0(x) Pi_n(z(x)). After deleting the levels
N = (n_1, ..., n_m) the chain Wronskian factorizes as

    W^(N)(x) = psi_0^m (dz/dx)^{m(m-1)/2} W_lambda(z),

which is how every quantity below is evaluated: exact W_lambda, transcendental
factors through extended-precision Taylor jets.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple, Union

from .classical import Family, FamilyKind, monic_poly, shift_parameter
from .config import get_compute_config
from .eop import wronskian_polynomial
from .exceptions import DomainError, ParameterRangeError, PoleError, PreconditionError
from .kernel.jet import Jet, evaluate_on_jet, extended_context, to_mpf
from .kernel.polynomial import UniPoly
from .kernel.rational import Interval, RationalLike, to_rational
from .kernel.sturm import sturm_root_count
from .observability import get_observability_manager
from .partitions import (
    Partition, SpectralIndices, indices_to_partition, is_adler
)

logger = logging.getLogger(__name__)

XPoint = Union[Jet, Fraction, int]

# Rational sampling windows inside each x-domain
SAMPLE_WINDOWS = {
    FamilyKind.HERMITE: (Fraction(-3), Fraction(3)),
    FamilyKind.LAGUERRE: (Fraction(1, 10), Fraction(4)),
    FamilyKind.JACOBI: (Fraction(1, 20), Fraction(3, 2)),
}

Z_DOMAINS = {
    FamilyKind.HERMITE: Interval(None, None),
    FamilyKind.LAGUERRE: Interval(Fraction(0), None),
    FamilyKind.JACOBI: Interval(Fraction(-1), Fraction(1)),
}

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class PotentialSpec:
    """
    One of the three confining potentials.

    Hermite gives the harmonic oscillator, Laguerre the isotonic oscillator
    (alpha > 1/2), Jacobi the trigonometric Darboux-Poschl-Teller potential
    (alpha, beta > 1/2). ``omega`` must be positive; TDPT ignores it.
    """
    family: Family
    omega: Fraction = Fraction(1)

    def __post_init__(self):
        omega = to_rational(self.omega)
        object.__setattr__(self, "omega", omega)
        if omega <= 0:
            raise ParameterRangeError(f"omega must be positive, got {omega}",
                                      parameter="omega", value=omega)
        for name in ("alpha", "beta"):
            value = getattr(self.family, name)
            if value is not None and value <= HALF:
                raise ParameterRangeError(
                    f"{name} must be greater than 1/2 for the {self.name} potential, got {value}",
                    parameter=name, value=value
                )

    @classmethod
    def gauge_frame(cls, family: Family, omega: RationalLike = 1) -> 'PotentialSpec':
        """
        Coordinates and eigenfunctions of any valid family, alpha, beta > -1.

        Skips the alpha, beta > 1/2 limit; only the eigenfunction side of the
        potential (z(x), psi_0, psi_n) is meaningful for such parameters.
        """
        omega = to_rational(omega)
        if omega <= 0:
            raise ParameterRangeError(f"omega must be positive, got {omega}",
                                      parameter="omega", value=omega)
        frame = object.__new__(cls)
        object.__setattr__(frame, "family", family)
        object.__setattr__(frame, "omega", omega)
        return frame

    @classmethod
    def harmonic(cls, omega: RationalLike = 1) -> 'PotentialSpec':
        return cls(Family.hermite(), to_rational(omega))

    @classmethod
    def isotonic(cls, alpha: RationalLike, omega: RationalLike = 1) -> 'PotentialSpec':
        return cls(Family.laguerre(alpha), to_rational(omega))

    @classmethod
    def trigonometric(cls, alpha: RationalLike, beta: RationalLike) -> 'PotentialSpec':
        return cls(Family.jacobi(alpha, beta))

    @property
    def kind(self) -> FamilyKind:
        return self.family.kind

    @property
    def name(self) -> str:
        return {
            FamilyKind.HERMITE: "harmonic",
            FamilyKind.LAGUERRE: "isotonic",
            FamilyKind.JACOBI: "trigonometric Darboux-Poschl-Teller",
        }[self.family.kind]

    @property
    def ctx(self):
        return extended_context()

    @property
    def x_domain(self) -> Tuple[Optional[object], Optional[object]]:
        """Open x-interval; None marks an infinite end, the TDPT upper end is pi/2."""
        if self.kind is FamilyKind.HERMITE:
            return None, None
        if self.kind is FamilyKind.LAGUERRE:
            return self.ctx.zero, None
        return self.ctx.zero, self.ctx.pi / 2

    @property
    def z_domain(self) -> Interval:
        return Z_DOMAINS[self.kind]

    def check_interior(self, x) -> None:
        """
        Raises:
            DomainError: If x is not strictly inside the x-domain
        """
        value = x.value if isinstance(x, Jet) else to_mpf(x, self.ctx)
        lower, upper = self.x_domain
        if (lower is not None and not value > lower) or (upper is not None and not value < upper):
            raise DomainError(
                f"x={self.ctx.nstr(value, 20)} is not inside the {self.name} domain",
                x=x if not isinstance(x, Jet) else value
            )

    def shifted(self) -> 'PotentialSpec':
        """Same potential with the family parameter translated once."""
        return PotentialSpec(shift_parameter(self.family, 1), self.omega)

    def __str__(self) -> str:
        if self.kind is FamilyKind.JACOBI:
            return str(self.family)
        return f"{self.family}[omega={self.omega}]"


def _as_jet(spec: PotentialSpec, x: XPoint, order: int) -> Jet:
    if isinstance(x, Jet):
        spec.check_interior(x)
        return x
    spec.check_interior(x)
    return Jet.variable(x, order, spec.ctx)


def coordinate_jets(spec: PotentialSpec, X: Jet) -> Tuple[Jet, Jet]:
    """(z(x), dz/dx) as jets of the same order as X."""
    ctx = X.ctx
    if spec.kind is FamilyKind.HERMITE:
        c = ctx.sqrt(to_mpf(spec.omega, ctx) / 2)
        return X * c, X._lift(c)
    if spec.kind is FamilyKind.LAGUERRE:
        w = to_mpf(spec.omega, ctx)
        return X * X * (w / 2), X * w
    return (X * 2).cos(), (X * 2).sin() * -2


def gauge_factor(spec: PotentialSpec, x: XPoint) -> Jet:
    """
    psi_0: exp(-z^2/2), z^{(alpha+1/2)/2} e^{-z/2}, or sin^{alpha+1/2} cos^{beta+1/2}.

    Raises:
        DomainError: If x is not interior
    """
    X = _as_jet(spec, x, 2)
    family = spec.family
    if spec.kind is FamilyKind.HERMITE:
        z, _ = coordinate_jets(spec, X)
        return (z * z * -HALF).exp()
    if spec.kind is FamilyKind.LAGUERRE:
        z, _ = coordinate_jets(spec, X)
        return z.real_power((family.alpha + HALF) / 2) * (z * -HALF).exp()
    return X.sin().real_power(family.alpha + HALF) * X.cos().real_power(family.beta + HALF)


def eigenfunction(spec: PotentialSpec, n: int, x: XPoint) -> Jet:
    """psi_n = psi_0 Pi_n(z(x))."""
    X = _as_jet(spec, x, 2)
    z, _ = coordinate_jets(spec, X)
    return gauge_factor(spec, X) * evaluate_on_jet(monic_poly(spec.family, n), z)


def potential_value(spec: PotentialSpec, x) -> object:
    """
    V(x) with the ground level at zero.

    Raises:
        DomainError: If x is not interior
    """
    spec.check_interior(x)
    ctx = spec.ctx
    xv = x.value if isinstance(x, Jet) else to_mpf(x, ctx)
    family = spec.family
    if spec.kind is FamilyKind.JACOBI:
        a = to_mpf(family.alpha, ctx)
        b = to_mpf(family.beta, ctx)
        return ((a * a - ctx.mpf(1) / 4) / ctx.sin(xv) ** 2
                + (b * b - ctx.mpf(1) / 4) / ctx.cos(xv) ** 2
                - (a + b + 1) ** 2)
    w = to_mpf(spec.omega, ctx)
    value = w * w * xv * xv / 4
    if spec.kind is FamilyKind.HERMITE:
        return value - w / 2
    a = to_mpf(family.alpha, ctx)
    return value + (a * a - ctx.mpf(1) / 4) / (xv * xv) - w * (a + 1)


def energy(spec: PotentialSpec, n: int) -> Fraction:
    """E_n: n omega, 2 n omega, or 4 n (alpha + beta + 1 + n); E_0 = 0."""
    if n < 0:
        raise PreconditionError(f"Levels are nonnegative, got {n}")
    if spec.kind is FamilyKind.HERMITE:
        return n * spec.omega
    if spec.kind is FamilyKind.LAGUERRE:
        return 2 * n * spec.omega
    family = spec.family
    return 4 * n * (family.alpha + family.beta + 1 + n)


def _raise_pole(spec: PotentialSpec, value, what: str):
    get_observability_manager().record_pole_event(family=spec.kind.value)
    ctx = spec.ctx
    raise PoleError(f"{what} vanishes at x={ctx.nstr(value, 25)}", x=ctx.nstr(value, 25))


def _polynomial_jet(spec: PotentialSpec, poly: UniPoly, z: Jet, X: Jet, what: str) -> Jet:
    """poly(z) as a jet; a pole error if it vanishes to half the working precision."""
    ctx = X.ctx
    value = evaluate_on_jet(poly, z)
    zv = abs(z.value)
    magnitude = ctx.fsum(abs(to_mpf(c, ctx)) * zv ** k for k, c in enumerate(poly.coefficients))
    if abs(value.value) <= magnitude * ctx.mpf(2) ** (-(ctx.prec // 2)):
        _raise_pole(spec, X.value, what)
    return value


@dataclass(frozen=True)
class ExtendedPotential:
    """The potential after deleting the levels ``indices`` from ``base``."""
    base: PotentialSpec
    indices: SpectralIndices
    partition: Partition
    wronskian_poly: UniPoly

    @classmethod
    def from_chain(cls, spec: PotentialSpec, indices: SpectralIndices) -> 'ExtendedPotential':
        return _extended_potential(spec, indices)

    @property
    def m(self) -> int:
        return len(self.indices)

    @property
    def predicted_regular(self) -> bool:
        return is_adler(self.partition)

    def wronskian_jet(self, X: Jet) -> Jet:
        """W^(N)(x) = psi_0^m (z')^{m(m-1)/2} W_lambda(z(x))."""
        m = self.m
        z, dz = coordinate_jets(self.base, X)
        polynomial = _polynomial_jet(self.base, self.wronskian_poly, z, X, "Chain Wronskian")
        return gauge_factor(self.base, X) ** m * dz ** (m * (m - 1) // 2) * polynomial

    def value(self, x: XPoint):
        """V(x) - 2 (log W^(N))''(x)."""
        X = _as_jet(self.base, x, 2)
        if X.order < 2:
            raise PreconditionError("Extended potential needs a jet of order >= 2")
        correction = self.wronskian_jet(X.truncate(2)).log().second_derivative if self.m else 0
        return potential_value(self.base, X) - 2 * correction

    def eigenfunction(self, mu: int, x: XPoint) -> Jet:
        """
        psi_mu^(N) = W(psi_N, psi_mu) / W(psi_N) = +-psi_0 (z')^m W_lambda'(z) / W_lambda(z),

        where lambda' belongs to N with mu added; the sign puts mu last.
        """
        if mu in self.indices:
            raise PreconditionError(
                f"Level {mu} was deleted by the chain {self.indices}",
                context={'mu': mu, 'indices': str(self.indices)}
            )
        X = _as_jet(self.base, x, 2)
        if not self.m:
            return eigenfunction(self.base, mu, X)
        z, dz = coordinate_jets(self.base, X)
        denominator = _polynomial_jet(self.base, self.wronskian_poly, z, X, "Chain Wronskian")
        augmented = SpectralIndices(tuple(sorted(self.indices.indices + (mu,))))
        numerator = evaluate_on_jet(
            wronskian_polynomial(self.base.family, indices_to_partition(augmented)), z
        )
        ratio = gauge_factor(self.base, X) * dz ** self.m * numerator / denominator
        above = sum(1 for nu in self.indices if nu > mu)
        return -ratio if above % 2 else ratio


@lru_cache(maxsize=512)
def _extended_potential(spec: PotentialSpec, indices: SpectralIndices) -> ExtendedPotential:
    partition = indices_to_partition(indices)
    return ExtendedPotential(spec, indices, partition, wronskian_polynomial(spec.family, partition))


def extended_potential(spec: PotentialSpec, indices: SpectralIndices, x: XPoint):
    """
    V^(N)(x) = V(x) - 2 (log W^(N))''(x).

    Raises:
        PoleError: If W^(N) vanishes at x
        DomainError: If x is not interior
    """
    return ExtendedPotential.from_chain(spec, indices).value(x)


def extended_eigenfunction(spec: PotentialSpec, indices: SpectralIndices, mu: int,
                           x: XPoint) -> Jet:
    """
    The Crum image of psi_mu under the chain.

    Raises:
        PreconditionError: If mu is one of the deleted levels
        PoleError: If W^(N) vanishes at x
    """
    return ExtendedPotential.from_chain(spec, indices).eigenfunction(mu, x)


def darboux_step(seed: Jet, target: Jet) -> Jet:
    """
    W(seed, target) / seed = target' - (seed'/seed) target.

    The result is one order lower than its inputs.
    """
    if seed.value == 0:
        raise PoleError("Darboux seed vanishes at the evaluation point", x=None)
    log_derivative = seed.derivative() / seed.truncate(seed.order - 1)
    return target.derivative() - log_derivative * target.truncate(target.order - 1)


def seed_image(spec: PotentialSpec, nu: int, x: XPoint) -> Jet:
    """The image of the seed itself, 1/psi_nu (proportionality constant 1)."""
    X = _as_jet(spec, x, 2)
    z, _ = coordinate_jets(spec, X)
    _polynomial_jet(spec, monic_poly(spec.family, nu), z, X, f"Seed psi_{nu}")
    return 1 / eigenfunction(spec, nu, X)


def one_step_dbt(spec: PotentialSpec, nu: int, mu: int, x: XPoint) -> Jet:
    """
    psi_mu^(nu) = W(psi_nu, psi_mu)/psi_nu; mu == nu is routed to :func:`seed_image`.

    A rational x gives a second-order result; a jet input loses one order.

    Raises:
        PoleError: If psi_nu vanishes at x
    """
    if nu == mu:
        return seed_image(spec, nu, x)
    X = _as_jet(spec, x, 3)
    z, _ = coordinate_jets(spec, X)
    _polynomial_jet(spec, monic_poly(spec.family, nu), z, X, f"Seed psi_{nu}")
    return darboux_step(eigenfunction(spec, nu, X), eigenfunction(spec, mu, X))


def iterated_dbt(spec: PotentialSpec, indices: SpectralIndices, mu: int, x: XPoint,
                 order: int = 2) -> Jet:
    """
    Apply one-step transformations along the chain in increasing level order.

    Step j uses the image of psi_{nu_j} under the previous steps as its seed.
    The result is an order-``order`` jet when x is rational.

    Raises:
        PreconditionError: If mu is one of the deleted levels
        PoleError: If an intermediate seed vanishes at x
    """
    if mu in indices:
        raise PreconditionError(f"Level {mu} was deleted by the chain {indices}")
    levels = list(indices.indices)
    X = _as_jet(spec, x, order + len(levels))
    functions = {n: eigenfunction(spec, n, X) for n in levels + [mu]}
    for step, nu in enumerate(levels):
        seed = functions.pop(nu)
        if seed.value == 0:
            _raise_pole(spec, X.value, f"Intermediate seed of step {step + 1}")
        functions = {n: darboux_step(seed, f) for n, f in functions.items()}
    return functions[mu]


def schrodinger_residual(spec: PotentialSpec, indices: SpectralIndices, mu: int,
                         sample_xs: Sequence[XPoint]):
    """
    max |psi'' + (E_mu - V^(N)) psi| / (|psi''| + |E_mu psi| + |V^(N) psi| + floor).

    Raises:
        PoleError: Propagated from the extended potential or eigenfunction
    """
    config = get_compute_config()
    ctx = spec.ctx
    extension = ExtendedPotential.from_chain(spec, indices)
    level = to_mpf(energy(spec, mu), ctx)
    floor = ctx.mpf(config.residual_floor)
    worst = ctx.zero
    for x in sample_xs:
        X = _as_jet(spec, x, 2)
        psi = extension.eigenfunction(mu, X)
        potential = extension.value(X)
        value, second = psi.value, psi.second_derivative
        numerator = abs(second + (level - potential) * value)
        denominator = abs(second) + abs(level * value) + abs(potential * value) + floor
        worst = max(worst, numerator / denominator)
    return worst


def chain_deviation(spec: PotentialSpec, indices: SpectralIndices, mu: int,
                    sample_xs: Sequence[XPoint]):
    """
    Relative deviation between :func:`iterated_dbt` and
    :func:`extended_eigenfunction` up to one constant.

    The constant is fitted at the sample where the direct value is largest;
    if every direct value vanishes nothing can be fitted and the result is 0.
    Samples at a node of psi_mu^(N), where both values vanish to half the
    working precision relative to the reference, are skipped.
    """
    ctx = spec.ctx
    pairs = [
        (iterated_dbt(spec, indices, mu, x).value,
         extended_eigenfunction(spec, indices, mu, x).value)
        for x in sample_xs
    ]
    if not pairs:
        return ctx.zero
    reference_iterated, reference_direct = max(pairs, key=lambda pair: abs(pair[1]))
    if reference_direct == 0:
        return ctx.zero
    constant = reference_iterated / reference_direct
    cutoff = abs(reference_iterated) * ctx.mpf(2) ** (-(ctx.prec // 2))
    worst = ctx.zero
    for iterated, direct in pairs:
        scale = max(abs(iterated), abs(constant * direct))
        if scale <= cutoff:
            continue
        worst = max(worst, abs(iterated - constant * direct) / scale)
    return worst


def potential_shift_deviation(spec: PotentialSpec, sample_xs: Sequence[XPoint]):
    """
    Max relative gap between V^(0) and the translated potential plus its constant.

    Harmonic: V + omega. Isotonic: V(alpha + 1) + 2 omega.
    TDPT: V(alpha + 1, beta + 1) + 4 (alpha + beta + 2).
    """
    ctx = spec.ctx
    ground = SpectralIndices((0,))
    if spec.kind is FamilyKind.HERMITE:
        partner, constant = spec, spec.omega
    elif spec.kind is FamilyKind.LAGUERRE:
        partner, constant = spec.shifted(), 2 * spec.omega
    else:
        partner = spec.shifted()
        constant = 4 * (spec.family.alpha + spec.family.beta + 2)
    constant = to_mpf(constant, ctx)
    worst = ctx.zero
    for x in sample_xs:
        extended = extended_potential(spec, ground, x)
        expected = potential_value(partner, x) + constant
        scale = max(abs(extended), abs(expected), ctx.one)
        worst = max(worst, abs(extended - expected) / scale)
    return worst


def potential_shift_check(spec: PotentialSpec, sample_xs: Sequence[XPoint],
                          tolerance: Optional[float] = None) -> bool:
    tolerance = tolerance if tolerance is not None else get_compute_config().chain_tolerance
    return potential_shift_deviation(spec, sample_xs) < tolerance


@dataclass(frozen=True)
class RegularityReport:
    """Krein-Adler prediction against the Sturm count of W_lambda in the z-domain."""
    partition: Partition
    predicted: bool
    observed: bool
    interior_roots: int
    lower_boundary_root: bool
    upper_boundary_root: bool

    @property
    def agree(self) -> bool:
        return self.predicted == self.observed


def classify_regularity(spec: Union[PotentialSpec, Family],
                        indices: SpectralIndices) -> RegularityReport:
    """
    Both regularity verdicts for the chain; agreement is reported, not assumed.

    Roots at a finite end of the z-domain are flagged separately and take no
    part in either verdict.
    """
    family = spec.family if isinstance(spec, PotentialSpec) else spec
    partition = indices_to_partition(indices)
    polynomial = wronskian_polynomial(family, partition)
    count = sturm_root_count(polynomial, Z_DOMAINS[family.kind])
    report = RegularityReport(
        partition=partition,
        predicted=is_adler(partition),
        observed=count.count == 0,
        interior_roots=count.count,
        lower_boundary_root=count.lower_root,
        upper_boundary_root=count.upper_root,
    )
    if count.boundary_root:
        logger.info("Wronskian root on the domain boundary", extra={
            "family": str(family), "indices": str(indices)
        })
    return report


def van_der_corput(i: int, base: int = 2) -> Fraction:
    """i-th element of the base-b radical-inverse sequence in (0, 1)."""
    result = Fraction(0)
    denominator = 1
    while i:
        i, digit = divmod(i, base)
        denominator *= base
        result += Fraction(digit, denominator)
    return result


def _x_preimages(spec: PotentialSpec, z_root) -> List[object]:
    ctx = spec.ctx
    if spec.kind is FamilyKind.HERMITE:
        return [z_root / ctx.sqrt(to_mpf(spec.omega, ctx) / 2)]
    if spec.kind is FamilyKind.LAGUERRE:
        return [ctx.sqrt(2 * z_root / to_mpf(spec.omega, ctx))] if z_root > 0 else []
    return [ctx.acos(z_root) / 2] if -1 < z_root < 1 else []


def numeric_real_roots(poly: UniPoly, ctx) -> List[object]:
    """Real roots by mpmath's polynomial solver; empty if it does not converge."""
    if poly.degree < 1:
        return []
    coefficients = [to_mpf(c, ctx) for c in reversed(poly.coefficients)]
    try:
        roots = ctx.polyroots(coefficients, maxsteps=200, extraprec=ctx.prec)
    except ctx.NoConvergence:
        logger.warning("Root finder did not converge; sampling without pole exclusion",
                       extra={"degree": poly.degree})
        return []
    tolerance = ctx.mpf(2) ** (-(ctx.prec // 3))
    real = []
    for root in roots:
        if abs(ctx.im(root)) <= tolerance * (1 + abs(root)):
            real.append(ctx.re(root))
    return real


def sample_points(spec: PotentialSpec, indices: Optional[SpectralIndices] = None,
                  count: Optional[int] = None, avoid: Sequence[UniPoly] = ()) -> List[Fraction]:
    """
    Deterministic rational points inside the sampling window of the potential.

    Points within ``pole_margin`` (scaled by the window width) of a real root
    of W_lambda, or of any polynomial in ``avoid`` (all in z), are skipped.
    """
    config = get_compute_config()
    count = count if count is not None else config.sample_count
    ctx = spec.ctx
    lower, upper = SAMPLE_WINDOWS[spec.kind]
    width = upper - lower

    polynomials = list(avoid)
    if indices is not None and len(indices):
        polynomials.append(wronskian_polynomial(spec.family, indices_to_partition(indices)))
    excluded = [
        x for poly in polynomials for root in numeric_real_roots(poly, ctx)
        for x in _x_preimages(spec, root)
    ]
    margin = to_mpf(width, ctx) * ctx.mpf(config.pole_margin)

    points: List[Fraction] = []
    i = 0
    while len(points) < count:
        i += 1
        if i > 100 * count + 1000:
            raise DomainError(f"Could not place {count} samples away from poles")
        x = lower + width * van_der_corput(i)
        xv = to_mpf(x, ctx)
        if any(abs(xv - r) <= margin for r in excluded):
            continue
        points.append(x)
    return points


def chain_sample_points(spec: PotentialSpec, indices: SpectralIndices,
                        count: Optional[int] = None) -> List[Fraction]:
    """Samples that also avoid the nodes of every intermediate seed of :func:`iterated_dbt`."""
    prefixes = [
        wronskian_polynomial(spec.family, indices_to_partition(SpectralIndices(indices.indices[:j])))
        for j in range(1, len(indices) + 1)
    ]
    return sample_points(spec, indices, count, avoid=prefixes)
