"""Runtime configuration, read from the environment."""
from dataclasses import dataclass
from pathlib import Path
from typing import Optional
import logging
import os

from goldbach_toolkit.exceptions import UsageError

logger = logging.getLogger(__name__)

CACHE_DIR_ENV = "GOLDBACH_CACHE_DIR"
MEMORY_BUDGET_ENV = "GOLDBACH_MEMORY_BUDGET"


@dataclass(frozen=True)
class ToolkitConfig:
    """Knobs shared by the sieve, the verifier and the Monte Carlo oracle."""
    segment_size: int = 1 << 20
    memory_budget_bytes: int = 2 * 1024 ** 3
    cache_dir: Optional[Path] = None
    verify_block: int = 1 << 20
    mc_block_entries: int = 1 << 22
    default_rel_eps: float = 1e-12


def load_config() -> ToolkitConfig:
    """
    Build a ToolkitConfig from environment variables.

    Returns:
        ToolkitConfig: defaults overridden by GOLDBACH_CACHE_DIR and GOLDBACH_MEMORY_BUDGET

    Raises:
        UsageError: If GOLDBACH_MEMORY_BUDGET is not a positive integer
    """
    cache_dir = os.environ.get(CACHE_DIR_ENV)
    budget = os.environ.get(MEMORY_BUDGET_ENV)
    kwargs = {}
    if cache_dir:
        kwargs["cache_dir"] = Path(cache_dir)
    if budget:
        try:
            value = int(budget)
        except ValueError:
            raise UsageError(f"{MEMORY_BUDGET_ENV} must be an integer number of bytes, got {budget!r}")
        if value <= 0:
            raise UsageError(f"{MEMORY_BUDGET_ENV} must be positive, got {value}")
        kwargs["memory_budget_bytes"] = value
    config = ToolkitConfig(**kwargs)
    logger.debug("Loaded config %s", config)
    return config
