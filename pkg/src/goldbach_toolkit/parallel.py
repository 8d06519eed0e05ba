"""Contiguous range sharding with an order-preserving merge."""
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, List, Optional, Sequence, Tuple
import logging

from goldbach_toolkit.exceptions import UsageError

logger = logging.getLogger(__name__)

_WORKER_STATE: dict = {}


def split_range(start: int, stop: int, shards: int) -> List[Tuple[int, int]]:
    """
    Split the half-open integer range [start, stop) into `shards` contiguous pieces.

    Sizes differ by at most one, earlier pieces are the larger ones and empty
    pieces are dropped.
    """
    if shards < 1:
        raise UsageError(f"Shard count must be at least 1, got {shards}")
    total = max(0, stop - start)
    base, extra = divmod(total, shards)
    pieces = []
    low = start
    for index in range(shards):
        size = base + (1 if index < extra else 0)
        if size:
            pieces.append((low, low + size))
        low += size
    return pieces


def _install_state(state: dict) -> None:
    _WORKER_STATE.clear()
    _WORKER_STATE.update(state)


def worker_state() -> dict:
    """Read-only objects shipped once to each worker (subset, tables, ...)."""
    return _WORKER_STATE


def run_sharded(
    func: Callable[..., Any],
    tasks: Sequence[Tuple],
    jobs: int = 1,
    shared: Optional[dict] = None,
) -> List[Any]:
    """
    Apply `func(*task)` to every task and return the results in task order.

    With jobs > 1 the tasks run on a process pool whose workers receive
    `shared` once through the pool initializer; `func` reads it back with
    worker_state(). Results come back in submission order, so any in-order
    merge is independent of the worker count.
    """
    if jobs < 1:
        raise UsageError(f"--jobs must be at least 1, got {jobs}")
    shared = shared or {}
    if jobs == 1 or len(tasks) <= 1:
        _install_state(shared)
        try:
            return [func(*task) for task in tasks]
        finally:
            _WORKER_STATE.clear()
    logger.info("Dispatching %d shards to %d workers", len(tasks), jobs)
    with ProcessPoolExecutor(max_workers=jobs, initializer=_install_state, initargs=(shared,)) as pool:
        futures = [pool.submit(func, *task) for task in tasks]
        return [future.result() for future in futures]
