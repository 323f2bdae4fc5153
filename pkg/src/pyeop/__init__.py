"""Exceptional orthogonal polynomials and Darboux-extended potentials in exact arithmetic."""

from .classical import Family, FamilyKind, monic_poly, recurrence_coeffs, g_function
from .partitions import (
    Partition, SpectralIndices, indices_to_partition, partition_to_indices,
    is_adler, reduced_form, double_partition, spectrum_gaps
)
from .eop import EopResult, Route, eop_wronskian, eop_noumi_jt, gauge_factorization_check
from .schur import (
    generalized_schur, eop_schur_confluent, eop_gjt_confluent, generalized_jacobi_trudi,
    ColumnSchurTable, column_schur, recS_check
)
from .darboux import (
    PotentialSpec, ExtendedPotential, RegularityReport,
    potential_value, energy, gauge_factor, eigenfunction,
    extended_potential, extended_eigenfunction,
    one_step_dbt, seed_image, iterated_dbt,
    schrodinger_residual, classify_regularity, potential_shift_check, sample_points
)
from .config import ComputeConfig, get_compute_config, set_compute_config
from .exceptions import (
    # Base exceptions
    EopError, Error,

    # Usage and validation
    UsageError, ParseError, PreconditionError,
    ValidationError, PartitionError, SpectralIndicesError, ParameterRangeError,

    # Computation
    ComputationError, DimensionError, ArityError, DivisibilityError,
    DegenerateInputError, ParameterDegeneracyError, IndexRangeError,
    DomainError, PoleError, InternalError, CheckFailure,

    # Exit code mapping
    ExitCodeMapper
)
from .observability import (
    ObservabilityConfig, ObservabilityManager,
    MetricsConfig, TracingConfig, LoggingConfig,
    initialize_observability, get_observability_manager
)

__version__ = "0.1.0"
__all__ = [
    # Classical families
    'Family',
    'FamilyKind',
    'monic_poly',
    'recurrence_coeffs',
    'g_function',

    # Partitions
    'Partition',
    'SpectralIndices',
    'indices_to_partition',
    'partition_to_indices',
    'is_adler',
    'reduced_form',
    'double_partition',
    'spectrum_gaps',

    # Routes
    'EopResult',
    'Route',
    'eop_wronskian',
    'eop_noumi_jt',
    'eop_schur_confluent',
    'eop_gjt_confluent',
    'gauge_factorization_check',
    'generalized_schur',
    'generalized_jacobi_trudi',
    'ColumnSchurTable',
    'column_schur',
    'recS_check',

    # Potentials
    'PotentialSpec',
    'ExtendedPotential',
    'RegularityReport',
    'potential_value',
    'energy',
    'gauge_factor',
    'eigenfunction',
    'extended_potential',
    'extended_eigenfunction',
    'one_step_dbt',
    'seed_image',
    'iterated_dbt',
    'schrodinger_residual',
    'classify_regularity',
    'potential_shift_check',
    'sample_points',

    # Configuration
    'ComputeConfig',
    'get_compute_config',
    'set_compute_config',

    # Exceptions
    'EopError',
    'Error',
    'UsageError',
    'ParseError',
    'PreconditionError',
    'ValidationError',
    'PartitionError',
    'SpectralIndicesError',
    'ParameterRangeError',
    'ComputationError',
    'DimensionError',
    'ArityError',
    'DivisibilityError',
    'DegenerateInputError',
    'ParameterDegeneracyError',
    'IndexRangeError',
    'DomainError',
    'PoleError',
    'InternalError',
    'CheckFailure',
    'ExitCodeMapper',

    # Observability components
    'ObservabilityConfig',
    'ObservabilityManager',
    'MetricsConfig',
    'TracingConfig',
    'LoggingConfig',
    'initialize_observability',
    'get_observability_manager',
]
