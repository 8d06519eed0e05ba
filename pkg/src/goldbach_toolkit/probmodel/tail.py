"""Tail sums over n >= N and the e^{-sqrt N} bound."""
from dataclasses import dataclass
from typing import Optional, Tuple
import logging
import math
import numpy as np

from goldbach_toolkit.config import ToolkitConfig, load_config
from goldbach_toolkit.exceptions import DomainError, NotFoundError, UsageError
from goldbach_toolkit.probmodel.lemma import DOMAIN_FLOOR
from goldbach_toolkit.probmodel.logprob import LN10, LogProb, log_add

logger = logging.getLogger(__name__)

MAX_TAIL_TERMS = 100_000_000
CROSSOVER_MIN_SCAN = 10_000
_CROSSOVER_BLOCK = 1 << 20


@dataclass(frozen=True)
class TailSum:
    """ln of sum_{n >= N} exp(-n / ln^2 n), with a geometric estimate of the discarded remainder."""
    N: int
    ln_sum: float
    terms_used: int
    truncation_bound_ln: float

    @property
    def log10(self) -> float:
        return self.ln_sum / LN10

    @property
    def remainder_log10(self) -> float:
        return self.truncation_bound_ln / LN10


def _ln_term(n: int) -> float:
    return -n / math.log(n) ** 2


def tail_sum(N: int, rel_eps: Optional[float] = None, config: Optional[ToolkitConfig] = None) -> TailSum:
    """
    Sum exp(-n / ln^2 n) for n = N, N+1, ... in log space.

    After each term the rest of the series is estimated geometrically:
    term(n+1) / (1 - r) with r = exp(-(1 - 2/ln n) / ln^2 n), the decay rate
    of n / ln^2 n at the current n. The rate shrinks as n grows, so this is an
    estimate of the remainder rather than a rigorous bound. Summation stops once
    the estimate drops below rel_eps times the running sum. For n <= e^2 the
    terms still grow and no stop is attempted.

    Raises:
        DomainError: If N < 3
        UsageError: If rel_eps is not in (0, 1)
    """
    if rel_eps is None:
        rel_eps = (config or load_config()).default_rel_eps
    if N < DOMAIN_FLOOR:
        raise DomainError(f"The tail sum needs N >= {DOMAIN_FLOOR}, got {N}")
    if not 0.0 < rel_eps < 1.0:
        raise UsageError(f"rel_eps must lie in (0, 1), got {rel_eps}")
    ln_eps = math.log(rel_eps)
    ln_sum = _ln_term(N)
    n = N
    terms = 1
    while terms < MAX_TAIL_TERMS:
        n += 1
        ln_next = _ln_term(n)
        ln_n = math.log(n)
        if ln_n > 2.0:
            decay = (1.0 - 2.0 / ln_n) / ln_n ** 2
            ln_remainder = ln_next - math.log(-math.expm1(-decay))
            if ln_remainder <= ln_eps + ln_sum:
                logger.debug("Tail from %d converged after %d terms", N, terms)
                return TailSum(N=N, ln_sum=ln_sum, terms_used=terms, truncation_bound_ln=ln_remainder)
        ln_sum = log_add(ln_sum, ln_next)
        terms += 1
    raise NotFoundError(f"Tail from {N} did not reach rel_eps={rel_eps} within {MAX_TAIL_TERMS} terms")


def sqrt_bound(N: float) -> LogProb:
    """The integral bound e^{-sqrt N}."""
    if N < 0:
        raise DomainError(f"sqrt bound needs N >= 0, got {N}")
    return LogProb(-math.sqrt(N))


def inequality_sides(n: float) -> Tuple[float, float]:
    """(n / ln^2 n, sqrt n + ln(2 sqrt n))."""
    root = math.sqrt(n)
    return n / math.log(n) ** 2, root + math.log(2.0 * root)


def _inequality_margin(ns: np.ndarray) -> np.ndarray:
    roots = np.sqrt(ns)
    return ns / np.log(ns) ** 2 - (roots + np.log(2.0 * roots))


def inequality_crossover(scan_limit: int) -> int:
    """
    Smallest n0 such that n / ln^2 n > sqrt n + ln(2 sqrt n) for every integer
    n in [n0, scan_limit].

    The inequality holds for tiny n, fails in between, and holds again from
    n0 on; the scan covers [2, scan_limit] in blocks and also checks that the
    margin is still growing at scan_limit.

    Raises:
        UsageError: If scan_limit < 10^4
        NotFoundError: If the inequality fails at scan_limit or its margin is not increasing there
    """
    if scan_limit < CROSSOVER_MIN_SCAN:
        raise UsageError(f"scan_limit must be >= {CROSSOVER_MIN_SCAN}, got {scan_limit}")
    last_failure = None
    for low in range(2, scan_limit + 1, _CROSSOVER_BLOCK):
        ns = np.arange(low, min(low + _CROSSOVER_BLOCK, scan_limit + 1), dtype=np.float64)
        failing = np.flatnonzero(_inequality_margin(ns) <= 0.0)
        if failing.size:
            last_failure = low + int(failing[-1])
    if last_failure == scan_limit:
        raise NotFoundError(f"The inequality still fails at n={scan_limit}")
    edge = _inequality_margin(np.array([scan_limit - 1, scan_limit], dtype=np.float64))
    if edge[1] <= edge[0]:
        raise NotFoundError(f"The margin is not increasing at n={scan_limit}")
    n0 = 2 if last_failure is None else last_failure + 1
    logger.info("Inequality holds on [%d, %d]", n0, scan_limit)
    return n0
