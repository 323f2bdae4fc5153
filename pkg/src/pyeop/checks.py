"""
Acceptance suites run by ``pyeop check``.

Each suite walks a deterministic grid (plus seeded random draws), counts its
cases and collects human-readable failure descriptions. A suite never raises
on a mathematical disagreement; it reports it.
"""

import logging
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from .classical import (
    Family, derivative_rule_check, recurrence_residual
)
from .config import get_compute_config
from .darboux import (
    PotentialSpec, chain_deviation, chain_sample_points,
    classify_regularity, potential_shift_deviation, sample_points, schrodinger_residual
)
from .eop import EopResult, eop_noumi_jt, eop_wronskian, superfactorial
from .exceptions import EopError
from .kernel.determinant import wronskian
from .kernel.polynomial import UniPoly
from .observability import get_observability_manager
from .partitions import (
    Partition, SpectralIndices, has_even_gaps, index_sets_up_to, indices_to_partition,
    is_adler, partition_to_indices, partitions_up_to
)
from .schur import (
    alternant, column_schur, confluent_limit, eop_gjt_confluent, eop_schur_confluent,
    recS_check, vandermonde
)

logger = logging.getLogger(__name__)

LAGUERRE_ALPHAS = (Fraction(1, 2), Fraction(3, 2), Fraction(7, 3))
JACOBI_VALUES = (Fraction(3, 4), Fraction(3, 2), Fraction(5, 2))

THEOREM1_FAMILIES = 200
THEOREM1_MAX_DEGREE = 6
RESIDUAL_LEVELS = 3
CHAIN_LEVELS = 2
CHAIN_MAX_LENGTH = 3
ROUTE_DRAWS = 5
POTENTIAL_DRAWS = 3
CHAIN_SAMPLES = 20


@dataclass
class SuiteReport:
    """Outcome of one suite."""
    suite: str
    cases: int = 0
    failures: List[str] = field(default_factory=list)
    duration: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        self.failures.append(message)

    def to_dict(self) -> Dict:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "failed": len(self.failures),
            "passed": self.passed,
            "failures": list(self.failures),
            "duration_seconds": round(self.duration, 3),
        }


def _random_positive(rng: random.Random, lower: Fraction) -> Fraction:
    return lower + Fraction(rng.randint(1, 30), rng.randint(1, 7))


def route_families(rng: random.Random, draws: int = ROUTE_DRAWS) -> Iterator[Family]:
    """Fixed families of the route grid followed by ``draws`` seeded ones per kind."""
    yield Family.hermite()
    for alpha in LAGUERRE_ALPHAS:
        yield Family.laguerre(alpha)
    for alpha in JACOBI_VALUES:
        for beta in JACOBI_VALUES:
            yield Family.jacobi(alpha, beta)
    for _ in range(draws):
        yield Family.laguerre(_random_positive(rng, Fraction(-1, 2)))
        yield Family.jacobi(_random_positive(rng, Fraction(-1, 2)),
                            _random_positive(rng, Fraction(-1, 2)))


def potential_specs(rng: random.Random,
                    draws: int = POTENTIAL_DRAWS) -> Iterator[PotentialSpec]:
    """Harmonic oscillator and ``draws`` seeded isotonic and TDPT potentials (alpha, beta > 1/2)."""
    yield PotentialSpec.harmonic()
    for _ in range(draws):
        yield PotentialSpec.isotonic(_random_positive(rng, Fraction(1, 2)))
    for _ in range(draws):
        yield PotentialSpec.trigonometric(_random_positive(rng, Fraction(1, 2)),
                                          _random_positive(rng, Fraction(1, 2)))


def _all_routes(family: Family, lam: Partition) -> List[EopResult]:
    return [
        eop_wronskian(family, lam),
        eop_noumi_jt(family, lam),
        eop_schur_confluent(family, lam),
        eop_gjt_confluent(family, lam),
    ]


def run_cross_route(max_weight: int = 6, max_length: int = 3, seed: int = 0) -> SuiteReport:
    """All four routes give the same W-normalized polynomial."""
    report = SuiteReport("cross-route")
    rng = random.Random(seed)
    for family in route_families(rng):
        for lam in partitions_up_to(max_weight, max_length):
            report.cases += 1
            results = _all_routes(family, lam)
            reference = results[0].normalized
            for result in results[1:]:
                if result.normalized != reference:
                    report.fail(
                        f"{family} lambda=({lam}): {result.route.value} gives "
                        f"{result.normalized}, wronskian gives {reference}"
                    )
            if reference.degree != lam.weight:
                report.fail(f"{family} lambda=({lam}): degree {reference.degree} != |lambda|")
    return report


def run_krein_adler(max_weight: int = 6, max_length: int = 3, seed: int = 0) -> SuiteReport:
    """is_adler agrees with the interior Sturm count for every chain with n_max <= max_weight."""
    report = SuiteReport("krein-adler")
    rng = random.Random(seed)
    for spec in potential_specs(rng):
        for indices in index_sets_up_to(max_weight, max_length):
            report.cases += 1
            verdict = classify_regularity(spec, indices)
            if not verdict.agree:
                report.fail(
                    f"{spec} N=({indices}): adler={verdict.predicted}, "
                    f"interior roots={verdict.interior_roots}"
                )
            if verdict.predicted and not has_even_gaps(indices):
                report.fail(f"N=({indices}) is Adler but has an odd gap")
    return report


def _adler_chains(max_weight: int, max_length: int) -> Iterator[SpectralIndices]:
    for indices in index_sets_up_to(max_weight + max_length - 1, max_length):
        lam = indices_to_partition(indices)
        if lam.weight <= max_weight and is_adler(lam):
            yield indices


def _lowest_surviving(indices: SpectralIndices, count: int) -> List[int]:
    levels = []
    level = 0
    while len(levels) < count:
        if level not in indices:
            levels.append(level)
        level += 1
    return levels


def run_residual(max_weight: int = 6, max_length: int = 3, seed: int = 0) -> SuiteReport:
    """
    Schrodinger residuals of the three lowest surviving states of every Adler
    extension and the shape-invariance shift of the first state-deleting step.

    Chain consistency of the iterated transformation runs on every chain of
    length <= 3, regular or not, at samples placed away from its poles.
    """
    config = get_compute_config()
    report = SuiteReport("residual")
    rng = random.Random(seed)
    for spec in potential_specs(rng):
        shift_points = sample_points(spec, count=CHAIN_SAMPLES)
        report.cases += 1
        shift = potential_shift_deviation(spec, shift_points)
        if not shift < config.chain_tolerance:
            report.fail(f"{spec}: potential shift deviation {spec.ctx.nstr(shift, 5)}")

        for indices in _adler_chains(max_weight, max_length):
            points = sample_points(spec, indices)
            for mu in _lowest_surviving(indices, RESIDUAL_LEVELS):
                report.cases += 1
                try:
                    residual = schrodinger_residual(spec, indices, mu, points)
                except EopError as e:
                    report.fail(f"{spec} N=({indices}) mu={mu}: {e}")
                    continue
                if not residual < config.residual_tolerance:
                    report.fail(
                        f"{spec} N=({indices}) mu={mu}: residual {spec.ctx.nstr(residual, 5)}"
                    )

        _check_chains(report, spec, max_weight, min(max_length, CHAIN_MAX_LENGTH))
    return report


def _check_chains(report: SuiteReport, spec: PotentialSpec, n_max: int, m_max: int) -> None:
    """Iterated one-step transformations against the Crum formula, regular or not."""
    tolerance = get_compute_config().chain_tolerance
    for indices in index_sets_up_to(n_max, m_max):
        try:
            chain_points = chain_sample_points(spec, indices, CHAIN_SAMPLES)
        except EopError as e:
            report.cases += 1
            report.fail(f"{spec} N=({indices}) chain samples: {e}")
            continue
        for mu in _lowest_surviving(indices, CHAIN_LEVELS):
            report.cases += 1
            try:
                deviation = chain_deviation(spec, indices, mu, chain_points)
            except EopError as e:
                report.fail(f"{spec} N=({indices}) mu={mu} chain: {e}")
                continue
            if not deviation < tolerance:
                report.fail(
                    f"{spec} N=({indices}) mu={mu} chain deviation "
                    f"{spec.ctx.nstr(deviation, 5)}"
                )


def _random_monic(rng: random.Random, degree: int) -> UniPoly:
    lower = [Fraction(rng.randint(-20, 20), rng.randint(1, 20)) for _ in range(degree)]
    return UniPoly(lower + [Fraction(1)])


def run_theorem1(max_weight: int = 6, max_length: int = 3, seed: int = 0) -> SuiteReport:
    """prod j! times the confluent alternant ratio equals the Wronskian, for random monic families."""
    report = SuiteReport("theorem1")
    rng = random.Random(seed)
    for _ in range(THEOREM1_FAMILIES):
        m = rng.randint(1, max_length)
        degrees = rng.sample(range(THEOREM1_MAX_DEGREE + 1), m)
        polys = [_random_monic(rng, d) for d in degrees]
        report.cases += 1
        lhs = confluent_limit(polys, m).scale(superfactorial(m))
        rhs = wronskian(polys)
        if lhs != rhs:
            report.fail(f"degrees {degrees}: confluent limit {lhs} != Wronskian {rhs}")
    return report


def run_recursions(max_weight: int = 6, max_length: int = 3, seed: int = 0) -> SuiteReport:
    """Exact identities of the classical families, the Schur tables and the index maps."""
    report = SuiteReport("recursions")
    rng = random.Random(seed)
    families = list(route_families(rng))

    for family in families:
        for n in range(1, 31):
            report.cases += 2
            if not derivative_rule_check(family, n):
                report.fail(f"{family}: derivative rule fails at n={n}")
            if recurrence_residual(family, n):
                report.fail(f"{family}: recurrence residual nonzero at n={n}")

        for k in range(0, 11):
            for l in range(1, 6):
                report.cases += 1
                try:
                    column_schur(family, k, l)
                except EopError as e:
                    report.fail(f"{family}: column Schur k={k} l={l}: {e}")

        for lam in partitions_up_to(max_weight, 3, min_length=2):
            for i in range(len(lam) - 1):
                report.cases += 1
                if not recS_check(family, lam, i):
                    report.fail(f"{family} lambda=({lam}): vector recursion fails at i={i}")

    for m in range(1, 5):
        report.cases += 1
        polys = [_random_monic(rng, d) for d in range(m)]
        if alternant(polys, m) != vandermonde(m):
            report.fail(f"monic alternant of size {m} differs from the Vandermonde determinant")

    for indices in index_sets_up_to(10, 4):
        report.cases += 1
        lam = indices_to_partition(indices)
        m = len(indices)
        if lam.weight != sum(indices) - m * (m - 1) // 2:
            report.fail(f"N=({indices}): weight identity fails")
        if partition_to_indices(lam) != indices:
            report.fail(f"N=({indices}): index round trip fails")

    spec = PotentialSpec.harmonic(rng.choice((Fraction(1, 2), Fraction(1), Fraction(2))))
    report.cases += 1
    deviation = potential_shift_deviation(spec, sample_points(spec, count=CHAIN_SAMPLES))
    if not deviation < get_compute_config().chain_tolerance:
        report.fail(f"{spec}: V^(0) != V + omega (deviation {spec.ctx.nstr(deviation, 5)})")
    return report


SuiteRunner = Callable[[int, int, int], SuiteReport]

SUITES: Dict[str, SuiteRunner] = {
    "cross-route": run_cross_route,
    "krein-adler": run_krein_adler,
    "residual": run_residual,
    "theorem1": run_theorem1,
    "recursions": run_recursions,
}


def run_suite(name: str, max_weight: int = 6, max_length: int = 3,
              seed: int = 0) -> SuiteReport:
    """Run one suite inside a span, timing it and counting its cases."""
    runner = SUITES[name]
    manager = get_observability_manager()
    perf = manager.create_performance_logger(f"check.{name}")
    perf.start(max_weight=max_weight, max_length=max_length, seed=seed)
    started = time.perf_counter()
    with manager.start_span(f"pyeop.check.{name}", max_weight=max_weight,
                            max_length=max_length, seed=seed) as span:
        try:
            report = runner(max_weight, max_length, seed)
        except Exception as e:
            manager.record_span_exception(span, e)
            perf.error(e)
            raise
    report.duration = time.perf_counter() - started
    manager.increment_check_cases(report.cases - len(report.failures), suite=name, status="pass")
    manager.increment_check_cases(len(report.failures), suite=name, status="fail")
    perf.complete(success=report.passed, cases=report.cases, failures=len(report.failures))
    return report


def run_suites(names: Optional[List[str]] = None, max_weight: int = 6, max_length: int = 3,
               seed: int = 0) -> Tuple[SuiteReport, ...]:
    """Run the named suites (all of them by default) in a fixed order."""
    names = list(SUITES) if not names else names
    return tuple(run_suite(name, max_weight, max_length, seed) for name in names)
