"""Disjointness probability of the A_n / B_n model and its closed-form bounds."""
from enum import Enum
from typing import Optional, Tuple, Union
import math
import numpy as np

from goldbach_toolkit.exceptions import DomainError, UsageError
from goldbach_toolkit.probmodel.logprob import LogProb
from goldbach_toolkit.subsets.builder import IntegerSubset, counting_function

# ln 2 < 1 makes 1 - 1/ln n negative, so every ln-based formula starts at 3
DOMAIN_FLOOR = 3


class BoundForm(Enum):
    PRODUCT = "product"
    EXPONENTIAL = "exp"


class SizeMode(Enum):
    PAPER = "paper"
    EMPIRICAL = "empirical"


def _parse_form(form: Union[str, BoundForm]) -> BoundForm:
    if isinstance(form, BoundForm):
        return form
    if form == "exponential":
        return BoundForm.EXPONENTIAL
    try:
        return BoundForm(form)
    except ValueError:
        raise UsageError(f"Unknown bound form: {form}")


def exact_disjoint_prob(n: int, k1: int, k2: int) -> LogProb:
    """
    ln P(A and B disjoint) for independent uniform subsets of {0, ..., n-1}
    with |A| = k1 and |B| = k2.

    The four-binomial expression cancels to C(n-k1, k2) / C(n, k2), summed
    in log space as sum_{i<k2} ln(1 - k1 / (n - i)).

    Raises:
        DomainError: If k1 or k2 lies outside [0, n]
    """
    if n < 0 or not 0 <= k1 <= n or not 0 <= k2 <= n:
        raise DomainError(f"Need 0 <= k1, k2 <= n, got n={n}, k1={k1}, k2={k2}")
    if k2 > n - k1:
        return LogProb.zero()
    if k1 == 0 or k2 == 0:
        return LogProb.one()
    remaining = n - np.arange(k2, dtype=np.float64)
    return LogProb(min(0.0, math.fsum(np.log1p(-k1 / remaining).tolist())))


def lemma_bound(n: float, form: Union[str, BoundForm] = BoundForm.EXPONENTIAL) -> LogProb:
    """
    The single-n bound with k1 = k2 = n / ln n substituted.

    product:     (n / ln n) * ln(1 - 1/ln n)
    exponential: -n / ln^2 n

    Since ln(1 - x) < -x the product form is always the smaller (tighter) of the two.
    """
    form = _parse_form(form)
    if n < DOMAIN_FLOOR:
        raise DomainError(f"The lemma bound needs n >= {DOMAIN_FLOOR}, got {n}")
    ln_n = math.log(n)
    if form == BoundForm.PRODUCT:
        return LogProb((n / ln_n) * math.log1p(-1.0 / ln_n))
    return LogProb(-n / ln_n ** 2)


def paper_sizes(n: int) -> Tuple[int, int]:
    """k1 = k2 = floor(n / ln n), the asymptotic counts."""
    if n < DOMAIN_FLOOR:
        raise DomainError(f"Paper-mode sizes need n >= {DOMAIN_FLOOR}, got {n}")
    k = math.floor(n / math.log(n))
    return k, k


def empirical_sizes(subset: IntegerSubset, n: int) -> Tuple[int, int]:
    """k1 = pi_Q(n) and k2 = pi_Q(2n - 1) - pi_Q(n), read off a real subset."""
    k1 = counting_function(subset, n)
    return k1, counting_function(subset, 2 * n - 1) - k1


def model_disjoint_prob(
    n: int,
    mode: Union[str, SizeMode] = SizeMode.PAPER,
    subset: Optional[IntegerSubset] = None,
) -> Tuple[LogProb, int, int]:
    """
    exact_disjoint_prob with the set sizes chosen by `mode`.

    Returns:
        Tuple[LogProb, int, int]: the probability and the (k1, k2) used
    """
    mode = SizeMode(mode) if isinstance(mode, str) else mode
    if mode == SizeMode.EMPIRICAL:
        if subset is None:
            raise UsageError("Empirical mode needs a subset")
        k1, k2 = empirical_sizes(subset, n)
    else:
        k1, k2 = paper_sizes(n)
    return exact_disjoint_prob(n, k1, k2), k1, k2
