"""Single-even Goldbach queries over a subset."""
from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple
import numpy as np

from goldbach_toolkit.exceptions import DomainError, OutOfRangeError
from goldbach_toolkit.subsets.builder import IntegerSubset


@dataclass(frozen=True)
class Witness:
    """A representation 2n = q1 + q2 with q1 <= q2, both in Q."""
    q1: int
    q2: int

    @property
    def even(self) -> int:
        return self.q1 + self.q2


def _check_half(subset: IntegerSubset, n: int, minimum: int) -> None:
    if n < minimum:
        raise DomainError(f"n must be >= {minimum}, got {n}")
    if 2 * n > subset.spec.limit:
        raise OutOfRangeError(f"2n={2 * n} exceeds the subset limit {subset.spec.limit}")


def goldbach_witness(subset: IntegerSubset, n: int) -> Optional[Witness]:
    """
    The representation of 2n with the smallest q1, or None.

    Scans Q ascending up to n and tests membership of 2n - q1.
    """
    _check_half(subset, n, 2)
    even = 2 * n
    stop = int(np.searchsorted(subset.elements, n, side="right"))
    for q1 in subset.elements[:stop]:
        q1 = int(q1)
        if subset.contains(even - q1):
            return Witness(q1=q1, q2=even - q1)
    return None


def build_AB(subset: IntegerSubset, n: int) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """
    Distance sets around n.

    A_n = {n - q : q in Q, q <= n} and B_n = {q - n : q in Q, n <= q < 2n};
    both lie in {0, ..., n - 1} and 2n has a representation iff they meet.
    """
    _check_half(subset, n, 1)
    elements = subset.elements
    below = elements[elements <= n]
    above = elements[(elements >= n) & (elements < 2 * n)]
    return frozenset((n - below).tolist()), frozenset((above - n).tolist())
