"""Segmented sieve of Eratosthenes and the prime-counting function."""
from dataclasses import dataclass
from typing import Optional
import logging
import math
import numpy as np

from goldbach_toolkit.config import ToolkitConfig, load_config
from goldbach_toolkit.exceptions import CapacityError, DomainError, OutOfRangeError

logger = logging.getLogger(__name__)

# Rosser-Schoenfeld: pi(x) < 1.25506 x / ln x for x > 1
_PI_UPPER_CONSTANT = 1.25506


@dataclass(frozen=True, eq=False)
class PrimeTable:
    """All primes up to `limit` (inclusive), ascending, as an int64 array."""
    limit: int
    primes: np.ndarray

    def __post_init__(self):
        self.primes.flags.writeable = False

    def __len__(self) -> int:
        return int(self.primes.size)

    def count(self, n: int) -> int:
        return prime_count(self, n)

    def counts(self, ns: np.ndarray) -> np.ndarray:
        """Vectorised pi(n); callers are responsible for the range."""
        return np.searchsorted(self.primes, ns, side="right")

    def prefix(self, limit: int) -> "PrimeTable":
        """The table restricted to primes <= limit."""
        if limit > self.limit:
            raise OutOfRangeError(f"Cannot take a prefix up to {limit} from a table sieved to {self.limit}")
        end = int(np.searchsorted(self.primes, limit, side="right"))
        return PrimeTable(limit=limit, primes=self.primes[:end])


def estimate_sieve_bytes(limit: int, segment_size: int) -> int:
    """Upper estimate of the memory sieve_primes(limit) allocates."""
    if limit < 17:
        prime_bound = limit
    else:
        prime_bound = int(_PI_UPPER_CONSTANT * limit / math.log(limit)) + 1
    # int64 result, one list of per-segment chunks held alongside it, the segment mask
    return 2 * 8 * prime_bound + min(segment_size, limit + 1)


def _small_sieve(limit: int) -> np.ndarray:
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p::p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


def sieve_primes(limit: int, config: Optional[ToolkitConfig] = None) -> PrimeTable:
    """
    Generate every prime <= limit with a segmented sieve.

    Args:
        limit: inclusive upper bound, >= 0
        config: segment size and memory budget (defaults to load_config())

    Returns:
        PrimeTable: the primes in ascending order

    Raises:
        DomainError: If limit is negative
        CapacityError: If the estimated footprint exceeds the memory budget
    """
    if limit < 0:
        raise DomainError(f"Sieve limit must be >= 0, got {limit}")
    config = config or load_config()
    needed = estimate_sieve_bytes(limit, config.segment_size)
    if needed > config.memory_budget_bytes:
        raise CapacityError(
            f"Sieving up to {limit} needs about {needed} bytes, over the memory budget of "
            f"{config.memory_budget_bytes} bytes (GOLDBACH_MEMORY_BUDGET)"
        )
    if limit < 2:
        return PrimeTable(limit=limit, primes=np.array([], dtype=np.int64))

    base = _small_sieve(math.isqrt(limit)).tolist()
    segment = config.segment_size
    chunks = []
    for low in range(2, limit + 1, segment):
        high = min(low + segment, limit + 1)  # exclusive
        mask = np.ones(high - low, dtype=bool)
        for p in base:
            square = p * p
            if square >= high:
                break
            start = max(square, -(-low // p) * p)
            mask[start - low::p] = False
        chunks.append(np.flatnonzero(mask).astype(np.int64) + low)
        logger.debug("Sieved segment [%d, %d)", low, high)
    primes = np.concatenate(chunks)
    logger.info("Sieved %d primes up to %d in %d segments", primes.size, limit, len(chunks))
    return PrimeTable(limit=limit, primes=primes)


def prime_count(table: PrimeTable, n: int) -> int:
    """pi(n), by binary search over the table."""
    if n < 0 or n > table.limit:
        raise OutOfRangeError(f"n={n} is outside [0, {table.limit}] covered by the prime table")
    return int(np.searchsorted(table.primes, n, side="right"))


def pi_approx(n: float) -> float:
    """The asymptotic estimate n / ln(n)."""
    if n <= 1:
        raise DomainError(f"n / ln(n) needs n > 1, got {n}")
    return n / math.log(n)
