"""Range verification of the generalized Goldbach property."""
from dataclasses import dataclass
from typing import List, Optional
import logging
import time
import numpy as np

from goldbach_toolkit.config import ToolkitConfig, load_config
from goldbach_toolkit.exceptions import OutOfRangeError, UsageError
from goldbach_toolkit.parallel import run_sharded, split_range, worker_state
from goldbach_toolkit.sieve.primes import PrimeTable
from goldbach_toolkit.subsets.builder import IntegerSubset, build_subset
from goldbach_toolkit.subsets.spec import SubsetSpec
from goldbach_toolkit.verifier.report import VerificationReport

logger = logging.getLogger(__name__)


@dataclass
class ShardResult:
    counterexamples: List[int]
    max_min_witness: int
    checked_count: int


def sweep_witnesses(subset: IntegerSubset, n_start: int, n_stop: int) -> np.ndarray:
    """
    Smallest q1 representing 2n, for every n in [n_start, n_stop) at once.

    Walks Q ascending; at each q1 the still unresolved n test membership of
    2n - q1 in one vectorised step. An n leaves the pending set when it is
    resolved or when q1 passes it. Entries without a witness stay 0.
    """
    ns = np.arange(n_start, n_stop, dtype=np.int64)
    witnesses = np.zeros(ns.size, dtype=np.int64)
    pending = np.arange(ns.size)
    stop = int(np.searchsorted(subset.elements, n_stop - 1, side="right"))
    for q1 in subset.elements[:stop]:
        reachable = ns[pending] >= q1
        if not reachable.all():
            pending = pending[reachable]
        if pending.size == 0:
            break
        hit = subset.contains_many(2 * ns[pending] - q1)
        witnesses[pending[hit]] = q1
        pending = pending[~hit]
        if pending.size == 0:
            break
    return witnesses


def _verify_shard(n_start: int, n_stop: int, block: int) -> ShardResult:
    subset = worker_state()["subset"]
    result = ShardResult(counterexamples=[], max_min_witness=0, checked_count=0)
    for low in range(n_start, n_stop, block):
        high = min(low + block, n_stop)
        witnesses = sweep_witnesses(subset, low, high)
        failing = np.flatnonzero(witnesses == 0)
        result.counterexamples.extend((2 * (low + failing)).tolist())
        if witnesses.size:
            result.max_min_witness = max(result.max_min_witness, int(witnesses.max()))
        result.checked_count += high - low
    logger.debug("Shard n in [%d, %d): %d counterexamples", n_start, n_stop, len(result.counterexamples))
    return result


def _check_range(subset: IntegerSubset, from_even: int, to_even: int) -> None:
    if from_even % 2 or to_even % 2:
        raise UsageError(f"Range endpoints must be even, got [{from_even}, {to_even}]")
    if from_even < 4:
        raise UsageError(f"Range must start at 4 or above, got {from_even}")
    if from_even > to_even:
        raise UsageError(f"Empty range [{from_even}, {to_even}]")
    if to_even > subset.spec.limit:
        raise OutOfRangeError(f"Range end {to_even} exceeds the subset limit {subset.spec.limit}")


def verify_range(
    subset: IntegerSubset,
    from_even: int,
    to_even: int,
    jobs: int = 1,
    config: Optional[ToolkitConfig] = None,
) -> VerificationReport:
    """
    Check every even 2n in [from_even, to_even] for a representation in Q.

    The range is cut into `jobs` contiguous shards whose results are merged in
    order, so the report does not depend on the degree of parallelism.

    Raises:
        UsageError: If an endpoint is odd, the range starts below 4 or is empty
        OutOfRangeError: If to_even exceeds the subset limit
    """
    _check_range(subset, from_even, to_even)
    config = config or load_config()
    started = time.perf_counter()
    tasks = [(low, high, config.verify_block) for low, high in split_range(from_even // 2, to_even // 2 + 1, jobs)]
    shards = run_sharded(_verify_shard, tasks, jobs=jobs, shared={"subset": subset})
    report = VerificationReport(spec=subset.spec, from_even=from_even, to_even=to_even)
    for shard in shards:
        report.counterexamples.extend(shard.counterexamples)
        report.max_min_witness = max(report.max_min_witness, shard.max_min_witness)
        report.checked_count += shard.checked_count
    report.elapsed = time.perf_counter() - started
    logger.info(
        "Verified %d evens in [%d, %d] for %s: %d counterexamples, largest witness q1 %d",
        report.checked_count,
        from_even,
        to_even,
        subset.spec.kind.value,
        len(report.counterexamples),
        report.max_min_witness,
    )
    return report


def verify_shift_theorem(c: int, limit: int, table: PrimeTable, jobs: int = 1) -> bool:
    """
    Executable check that shifting by c preserves the Goldbach property.

    For every even 2n with 2c + 2 < 2n <= limit, 2n has a representation in
    P_c exactly when 2n - 2c has one in the primes, since (p + c) + (q + c) = 2n
    iff p + q = 2n - 2c.

    Raises:
        UsageError: If limit < 2c + 4
        OutOfRangeError: If the prime table does not reach limit + c
    """
    if c < 0:
        raise UsageError(f"Shift c must be >= 0, got {c}")
    if limit < 2 * c + 4:
        raise UsageError(f"limit must be >= 2c + 4 = {2 * c + 4}, got {limit}")
    top = limit - limit % 2
    shifted = build_subset(SubsetSpec.shift(c, limit), table)
    shifted_failures = verify_range(shifted, 2 * c + 4, top, jobs=jobs).counterexamples
    primes = build_subset(SubsetSpec.primes(max(top - 2 * c, 4)), table)
    prime_failures = verify_range(primes, 4, top - 2 * c, jobs=jobs).counterexamples
    holds = shifted_failures == [even + 2 * c for even in prime_failures]
    logger.info("Shift theorem c=%d up to %d: %s", c, limit, "holds" if holds else "violated")
    return holds
