"""Numeric configuration shared by the Darboux layer and the acceptance suites."""

import threading
from dataclasses import dataclass, replace
from typing import Optional

from .observability import _get_env_int, _get_env_float


@dataclass(frozen=True)
class ComputeConfig:
    """Configuration for extended-precision evaluation and tolerances."""
    # Extended precision
    precision_bits: int = 192

    # Determinants with polynomial entries
    cofactor_limit: int = 6  # largest size expanded by cofactors

    # Tolerances
    residual_tolerance: float = 1e-10
    gauge_tolerance: float = 1e-20
    chain_tolerance: float = 1e-12
    residual_floor: float = 1e-40

    # Sampling
    pole_margin: float = 1e-3  # scaled by the domain width
    sample_count: int = 50

    @classmethod
    def from_env(cls) -> 'ComputeConfig':
        """Create configuration from PYEOP_* environment variables."""
        defaults = cls()
        return cls(
            precision_bits=_get_env_int("PYEOP_PRECISION_BITS", defaults.precision_bits)
            or defaults.precision_bits,
            cofactor_limit=_get_env_int("PYEOP_COFACTOR_LIMIT", defaults.cofactor_limit)
            or defaults.cofactor_limit,
            residual_tolerance=_get_env_float("PYEOP_RESIDUAL_TOLERANCE", defaults.residual_tolerance),
            gauge_tolerance=_get_env_float("PYEOP_GAUGE_TOLERANCE", defaults.gauge_tolerance),
            chain_tolerance=_get_env_float("PYEOP_CHAIN_TOLERANCE", defaults.chain_tolerance),
            residual_floor=_get_env_float("PYEOP_RESIDUAL_FLOOR", defaults.residual_floor),
            pole_margin=_get_env_float("PYEOP_POLE_MARGIN", defaults.pole_margin),
            sample_count=_get_env_int("PYEOP_SAMPLE_COUNT", defaults.sample_count)
            or defaults.sample_count,
        )

    def with_overrides(self, **changes) -> 'ComputeConfig':
        return replace(self, **changes)


_compute_config: Optional[ComputeConfig] = None
_config_lock = threading.Lock()


def get_compute_config() -> ComputeConfig:
    """Return the process-wide configuration, read from the environment on first use."""
    global _compute_config
    if _compute_config is None:
        with _config_lock:
            if _compute_config is None:
                _compute_config = ComputeConfig.from_env()
    return _compute_config


def set_compute_config(config: Optional[ComputeConfig]) -> None:
    """Replace the process-wide configuration; ``None`` re-reads the environment."""
    global _compute_config
    with _config_lock:
        _compute_config = config
