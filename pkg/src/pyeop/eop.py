"""
Exceptional orthogonal polynomials W_lambda(z).

Two of the four construction routes live here: the direct Wronskian of the
monic polynomials indexed by the chain, and the Noumi-type Jacobi-Trudi
determinant of g-functions. The confluent Schur routes are in
:mod:`pyeop.schur`. Each route reports an :class:`EopResult` whose ``scale``
recovers the Wronskian normalization.
"""

import logging
import time
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Optional, Sequence

from .classical import Family, g_function, monic_poly
from .config import get_compute_config
from .exceptions import EopError
from .kernel.determinant import det, wronskian
from .kernel.polynomial import UniPoly
from .observability import get_observability_manager
from .partitions import Partition, partition_to_indices

logger = logging.getLogger(__name__)


class Route(str, Enum):
    WRONSKIAN = "wronskian"
    NOUMI_JT = "noumi-jt"
    SCHUR_CONFLUENT = "schur-confluent"
    GJT_CONFLUENT = "gjt-confluent"


@dataclass(frozen=True)
class EopResult:
    """
    Output of one route.

    ``scale * polynomial`` is the Wronskian-normalized W_lambda; the scale is 1
    for the Wronskian and Noumi routes and prod_{j<m} j! for the confluent
    Schur routes, which produce S_lambda(z).
    """
    family: Family
    partition: Partition
    polynomial: UniPoly
    route: Route
    scale: int = 1

    @property
    def normalized(self) -> UniPoly:
        return self.polynomial.scale(self.scale)

    @property
    def degree(self) -> int:
        return self.polynomial.degree


def superfactorial(m: int) -> int:
    """prod_{j=1}^{m-1} j!; 1 for m <= 1."""
    result = 1
    for j in range(1, m):
        result *= factorial(j)
    return result


def run_route(route: Route, family: Family, lam: Partition,
              build: Callable[[], EopResult]) -> EopResult:
    """Evaluate one route inside a span and record its duration."""
    manager = get_observability_manager()
    started = time.perf_counter()
    with manager.start_span(f"pyeop.route.{route.value}", family=str(family),
                            partition=str(lam)) as span:
        try:
            result = build()
        except EopError as e:
            manager.record_span_exception(span, e)
            raise
    duration = time.perf_counter() - started
    manager.record_route_evaluation(duration, route=route.value, family=family.kind.value)
    logger.debug("Route evaluated", extra={
        "route": route.value,
        "family": str(family),
        "partition": str(lam),
        "degree": result.degree,
        "duration_seconds": duration,
    })
    return result


def eop_wronskian(family: Family, lam: Partition) -> EopResult:
    """
    W_lambda(z) = W(Pi_{n_1}, ..., Pi_{n_m}) with n = partition_to_indices(lambda).

    The empty chain gives 1.
    """
    def build() -> EopResult:
        indices = partition_to_indices(lam).indices
        if not indices:
            poly = UniPoly.one()
        else:
            poly = wronskian([monic_poly(family, n) for n in indices])
        return EopResult(family, lam, poly, Route.WRONSKIAN)

    return run_route(Route.WRONSKIAN, family, lam, build)


def noumi_matrix(family: Family, lam: Partition) -> Sequence[Sequence[UniPoly]]:
    """Row i, column j holds g^(i)_{lambda_j + i - j} (0-based)."""
    m = len(lam)
    return [[g_function(family, m, i, lam[j] + i - j) for j in range(m)] for i in range(m)]


def eop_noumi_jt(family: Family, lam: Partition) -> EopResult:
    """The Noumi-type Jacobi-Trudi determinant of g-functions."""
    def build() -> EopResult:
        if not len(lam):
            return EopResult(family, lam, UniPoly.one(), Route.NOUMI_JT)
        value = det(noumi_matrix(family, lam))
        poly = value if isinstance(value, UniPoly) else UniPoly.constant(value)
        return EopResult(family, lam, poly, Route.NOUMI_JT)

    return run_route(Route.NOUMI_JT, family, lam, build)


@lru_cache(maxsize=1024)
def wronskian_polynomial(family: Family, lam: Partition) -> UniPoly:
    """Memoized W_lambda for repeated numeric evaluation."""
    return eop_wronskian(family, lam).polynomial


def gauge_factorization_check(family: Family, lam: Partition,
                              sample_points: Sequence[Fraction],
                              omega: Fraction = Fraction(1),
                              tolerance: Optional[float] = None) -> bool:
    """
    Compare the x-Wronskian of the eigenfunctions with psi_0^m (dz/dx)^{m(m-1)/2} W_lambda(z).

    The left side is a numeric determinant of eigenfunction derivatives, the
    right side uses the exact W_lambda. Both sides are compared up to one
    global sign, fixed at the first sample point.

    Raises:
        DomainError: If a sample point is not interior to the x-domain
    """
    from .darboux import PotentialSpec, eigenfunction, gauge_factor, coordinate_jets
    from .kernel.jet import Jet, evaluate_on_jet

    tolerance = tolerance if tolerance is not None else get_compute_config().gauge_tolerance
    spec = PotentialSpec.gauge_frame(family, omega)
    ctx = spec.ctx
    indices = partition_to_indices(lam).indices
    m = len(indices)
    w_lambda = wronskian_polynomial(family, lam)
    order = max(m - 1, 1)

    sign = None
    for x in sample_points:
        spec.check_interior(x)
        X = Jet.variable(x, order, ctx)
        jets = [eigenfunction(spec, n, X) for n in indices]
        if m == 0:
            lhs = ctx.one
        else:
            rows = [[jet.derivative_value(r) for jet in jets] for r in range(m)]
            lhs = ctx.det(ctx.matrix(rows))

        z, dz = coordinate_jets(spec, X)
        rhs = (gauge_factor(spec, X).value ** m
               * dz.value ** (m * (m - 1) // 2)
               * evaluate_on_jet(w_lambda, z).value)

        if sign is None:
            sign = -1 if lhs * rhs < 0 else 1
        scale = max(abs(lhs), abs(rhs))
        if scale == 0:
            continue
        if abs(lhs - sign * rhs) > tolerance * scale:
            logger.info("Gauge factorization mismatch", extra={
                "family": str(family), "partition": str(lam), "x": str(x),
                "lhs": ctx.nstr(lhs, 20), "rhs": ctx.nstr(rhs, 20),
            })
            return False
    return True
