"""Stochastic oracle for the disjointness model: draw the random subsets and count."""
from dataclasses import dataclass
from typing import Optional
import logging
import math
import numpy as np

from goldbach_toolkit.config import ToolkitConfig, load_config
from goldbach_toolkit.exceptions import DomainError, UsageError
from goldbach_toolkit.parallel import run_sharded, split_range
from goldbach_toolkit.rng import check_seed, splitmix_stream, substream_draws, to_unit_interval

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class McEstimate:
    p_hat: float
    stderr: float
    trials: int
    seed: int
    disjoint_count: int = 0


def _partial_shuffle(n: int, uniforms: np.ndarray) -> np.ndarray:
    """
    First k positions of a partial Fisher-Yates shuffle of range(n), one row per trial.

    Position j swaps with j + floor(u_j * (n - j)); the returned rows are
    uniform k-subsets of {0, ..., n-1} in draw order.
    """
    trials, k = uniforms.shape
    perm = np.tile(np.arange(n, dtype=np.int64), (trials, 1))
    rows = np.arange(trials)
    for j in range(k):
        pick = j + np.minimum((uniforms[:, j] * (n - j)).astype(np.int64), n - j - 1)
        held = perm[rows, j].copy()
        perm[rows, j] = perm[rows, pick]
        perm[rows, pick] = held
    return perm[:, :k]


def count_disjoint(n: int, k1: int, k2: int, keys: np.ndarray) -> int:
    """Number of trials, one per substream key, whose two subsets do not meet."""
    draws = to_unit_interval(substream_draws(keys, k1 + k2))
    first = _partial_shuffle(n, draws[:, :k1])
    second = _partial_shuffle(n, draws[:, k1:])
    rows = np.arange(keys.size)[:, None]
    members = np.zeros((keys.size, n), dtype=bool)
    members[rows, first] = True
    overlap = members[rows, second].any(axis=1)
    return int(np.count_nonzero(~overlap))


def _mc_shard(n: int, k1: int, k2: int, seed: int, start: int, stop: int, block: int) -> int:
    disjoint = 0
    for low in range(start, stop, block):
        high = min(low + block, stop)
        # trial i draws from the substream keyed by output i of the master stream
        keys = splitmix_stream(seed, high - low, offset=low)
        disjoint += count_disjoint(n, k1, k2, keys)
    return disjoint


def mc_disjoint(
    n: int,
    k1: int,
    k2: int,
    trials: int,
    seed: int,
    jobs: int = 1,
    config: Optional[ToolkitConfig] = None,
) -> McEstimate:
    """
    Estimate P(A and B disjoint) for uniform k1- and k2-subsets of {0, ..., n-1}.

    Every trial owns a substream derived from (seed, trial index), so the
    estimate is the same for any split of the trials over `jobs` workers.

    Raises:
        DomainError: If k1 or k2 lies outside [0, n], or the seed is not 64-bit
        UsageError: If trials < 1
    """
    if n < 1 or not 0 <= k1 <= n or not 0 <= k2 <= n:
        raise DomainError(f"Need n >= 1 and 0 <= k1, k2 <= n, got n={n}, k1={k1}, k2={k2}")
    if trials < 1:
        raise UsageError(f"trials must be >= 1, got {trials}")
    seed = check_seed(seed)
    config = config or load_config()
    block = max(1, config.mc_block_entries // n)
    tasks = [(n, k1, k2, seed, low, high, block) for low, high in split_range(0, trials, jobs)]
    disjoint = sum(run_sharded(_mc_shard, tasks, jobs=jobs))
    p_hat = disjoint / trials
    stderr = math.sqrt(p_hat * (1.0 - p_hat) / trials)
    logger.info("MC n=%d k1=%d k2=%d: %d/%d disjoint", n, k1, k2, disjoint, trials)
    return McEstimate(p_hat=p_hat, stderr=stderr, trials=trials, seed=seed, disjoint_count=disjoint)
