"""Construction of prime-like subsets from a prime table."""
from dataclasses import dataclass
from typing import Iterable
import logging
import numpy as np

from goldbach_toolkit.exceptions import DomainError, OutOfRangeError
from goldbach_toolkit.rng import splitmix_stream, to_signs
from goldbach_toolkit.sieve.primes import PrimeTable
from goldbach_toolkit.subsets.spec import SubsetKind, SubsetSpec

logger = logging.getLogger(__name__)


def _pack_membership(elements: np.ndarray, limit: int) -> np.ndarray:
    bits = np.zeros(limit // 8 + 1, dtype=np.uint8)
    masks = np.left_shift(np.uint8(1), (elements & 7).astype(np.uint8))
    np.bitwise_or.at(bits, elements >> 3, masks)
    return bits


@dataclass(frozen=True, eq=False)
class IntegerSubset:
    """
    A finite, sorted, duplicate-free set of naturals in [1, spec.limit].

    `membership` is a little-endian bit table over [0, limit]: bit x & 7 of
    byte x >> 3 is set iff x is an element.
    """
    spec: SubsetSpec
    elements: np.ndarray
    membership: np.ndarray

    def __post_init__(self):
        self.elements.flags.writeable = False
        self.membership.flags.writeable = False

    @classmethod
    def from_elements(cls, spec: SubsetSpec, elements: Iterable[int]) -> "IntegerSubset":
        """
        Build a subset from explicit elements.

        Raises:
            DomainError: If the elements are not strictly increasing naturals in [1, spec.limit]
        """
        values = np.array(elements if isinstance(elements, np.ndarray) else list(elements), dtype=np.int64)
        if values.size:
            if values[0] < 1 or int(values[-1]) > spec.limit:
                raise DomainError(f"Subset elements must lie in [1, {spec.limit}]")
            if np.any(np.diff(values) <= 0):
                raise DomainError("Subset elements must be strictly increasing")
        return cls(spec=spec, elements=values, membership=_pack_membership(values, spec.limit))

    @property
    def limit(self) -> int:
        return self.spec.limit

    def __len__(self) -> int:
        return int(self.elements.size)

    def __contains__(self, x: int) -> bool:
        return self.contains(x)

    def contains(self, x: int) -> bool:
        if x < 0 or x > self.spec.limit:
            return False
        return bool((int(self.membership[x >> 3]) >> (x & 7)) & 1)

    def contains_many(self, xs: np.ndarray) -> np.ndarray:
        """Vectorised membership; values outside [0, limit] are reported absent."""
        xs = np.asarray(xs, dtype=np.int64)
        valid = (xs >= 0) & (xs <= self.spec.limit)
        safe = np.where(valid, xs, 0)
        bits = (self.membership[safe >> 3] >> (safe & 7)) & 1
        return valid & (bits == 1)


def _jitter_elements(primes: np.ndarray, seed: int, limit: int) -> np.ndarray:
    signs = to_signs(splitmix_stream(seed, primes.size))
    admitted = []
    # an admitted value lies within 1 of its prime, so only the two most recent can collide
    recent = (None, None)
    for p, delta in zip(primes.tolist(), signs.tolist()):
        value = p + delta
        if value in recent:
            value = p - delta
            if value in recent:
                value = p
        admitted.append(value)
        recent = (recent[1], value)
    values = np.sort(np.asarray(admitted, dtype=np.int64))
    return values[values <= limit]


def build_subset(spec: SubsetSpec, table: PrimeTable) -> IntegerSubset:
    """
    Construct the subset a spec describes.

    primes -> {p <= limit}; shift -> {p + t <= limit}; jitter -> every prime
    p <= limit moved by a seeded delta in {+1, -1}, ascending, where a value
    already taken falls back to p - delta and then to p itself.

    Raises:
        OutOfRangeError: If the prime table does not reach spec.limit + t
    """
    if table.limit < spec.reach:
        raise OutOfRangeError(f"Prime table reaches {table.limit}, the {spec.kind.value} subset needs {spec.reach}")
    if spec.kind == SubsetKind.PRIMES:
        elements = table.prefix(spec.limit).primes
    elif spec.kind == SubsetKind.SHIFT:
        elements = table.prefix(max(spec.limit - spec.t, 0)).primes + spec.t
    else:
        elements = _jitter_elements(table.prefix(spec.limit).primes, spec.seed, spec.limit)
    subset = IntegerSubset.from_elements(spec, elements)
    logger.info("Built %s subset with %d elements up to %d", spec.kind.value, len(subset), spec.limit)
    return subset


def counting_function(subset: IntegerSubset, n: int) -> int:
    """pi_Q(n): the number of elements <= n."""
    if n < 0 or n > subset.spec.limit:
        raise OutOfRangeError(f"n={n} is outside [0, {subset.spec.limit}] covered by the subset")
    return int(np.searchsorted(subset.elements, n, side="right"))
