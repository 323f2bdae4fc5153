"""
Partitions and spectral indices of Darboux chains.

A chain deleting the levels n_1 < ... < n_m is encoded equivalently by the
partition lambda_i = n_{m-i+1} - m + i. Partitions keep their trailing zeros
because this map depends on m; ``reduced_form`` is the zero-free view.
"""

from dataclasses import dataclass
from itertools import combinations, groupby
from typing import Iterator, Sequence, Tuple

from .exceptions import ExitCodeMapper, PartitionError, SpectralIndicesError


def _parse_integers(text: str, field_name: str) -> Tuple[int, ...]:
    stripped = text.strip()
    if not stripped:
        return ()
    try:
        return tuple(int(piece) for piece in stripped.split(","))
    except ValueError as e:
        raise ExitCodeMapper.from_value_error(e, field_name, text)


@dataclass(frozen=True)
class SpectralIndices:
    """Strictly increasing nonnegative levels n_1 < ... < n_m."""
    indices: Tuple[int, ...] = ()

    def __post_init__(self):
        indices = tuple(self.indices)
        object.__setattr__(self, "indices", indices)
        if any(n < 0 for n in indices):
            raise SpectralIndicesError(f"Spectral indices must be nonnegative: {indices}")
        if any(a >= b for a, b in zip(indices, indices[1:])):
            raise SpectralIndicesError(
                f"Spectral indices must be strictly increasing (no repeats): {indices}"
            )

    @classmethod
    def parse(cls, text: str) -> 'SpectralIndices':
        """Parse ``"2,3,5"``."""
        return cls(_parse_integers(text, "indices"))

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __contains__(self, level: int) -> bool:
        return level in self.indices

    def __str__(self) -> str:
        return ",".join(str(n) for n in self.indices)


@dataclass(frozen=True)
class Partition:
    """Non-increasing nonnegative parts; trailing zeros are allowed and kept."""
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 0 for p in parts):
            raise PartitionError(f"Partition parts must be nonnegative: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise PartitionError(f"Partition parts must be non-increasing: {parts}")

    @classmethod
    def parse(cls, text: str) -> 'Partition':
        """Parse ``"3,2,2"``."""
        return cls(_parse_integers(text, "partition"))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def shifted(self, amount: int = 1) -> 'Partition':
        """lambda + amount, componentwise."""
        return Partition(tuple(p + amount for p in self.parts))

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


def indices_to_partition(n: SpectralIndices) -> Partition:
    """lambda_i = n_{m-i+1} - m + i."""
    m = len(n)
    ordered = n.indices
    return Partition(tuple(ordered[m - i] - m + i for i in range(1, m + 1)))


def partition_to_indices(lam: Partition) -> SpectralIndices:
    """n_{m-i+1} = lambda_i + m - i."""
    m = len(lam)
    return SpectralIndices(tuple(lam[m - k] + k - 1 for k in range(1, m + 1)))


def weight(lam: Partition) -> int:
    return lam.weight


def reduced_form(lam: Partition) -> Partition:
    parts = list(lam.parts)
    while parts and parts[-1] == 0:
        parts.pop()
    return Partition(tuple(parts))


def double_partition(lam: Partition) -> Partition:
    return Partition(tuple(p for p in lam.parts for _ in range(2)))


def is_adler(lam: Partition) -> bool:
    """Every distinct nonzero part has even multiplicity."""
    return all(len(list(group)) % 2 == 0 for _, group in groupby(reduced_form(lam).parts))


def spectrum_gaps(n: SpectralIndices) -> Tuple[int, ...]:
    """
    Lengths of the runs of consecutive deleted levels, ignoring a run that
    starts at level 0 (it only relabels the ground state).
    """
    gaps = []
    run_start = None
    previous = None
    for level in n.indices:
        if previous is not None and level == previous + 1:
            previous = level
            continue
        if run_start is not None and run_start != 0:
            gaps.append(previous - run_start + 1)
        run_start = previous = level
    if run_start is not None and run_start != 0:
        gaps.append(previous - run_start + 1)
    return tuple(gaps)


def has_even_gaps(n: SpectralIndices) -> bool:
    return all(gap % 2 == 0 for gap in spectrum_gaps(n))


def partitions_up_to(max_weight: int, max_length: int,
                     min_length: int = 1) -> Iterator[Partition]:
    """All partitions of length in [min_length, max_length] and weight <= max_weight, zeros included."""

    def extend(prefix: Sequence[int], remaining_slots: int, budget: int, cap: int):
        if remaining_slots == 0:
            yield Partition(tuple(prefix))
            return
        for part in range(min(cap, budget), -1, -1):
            yield from extend((*prefix, part), remaining_slots - 1, budget - part, part)

    for length in range(min_length, max_length + 1):
        yield from extend((), length, max_weight, max_weight)


def index_sets_up_to(n_max: int, m_max: int, min_length: int = 1) -> Iterator[SpectralIndices]:
    """All strictly increasing index tuples drawn from 0..n_max with 1..m_max entries."""
    for m in range(min_length, m_max + 1):
        for chosen in combinations(range(n_max + 1), m):
            yield SpectralIndices(chosen)
