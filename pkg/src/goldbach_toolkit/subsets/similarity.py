"""Deviation of a subset's counting function from pi(n)."""
from dataclasses import dataclass
import numpy as np

from goldbach_toolkit.exceptions import OutOfRangeError
from goldbach_toolkit.sieve.primes import PrimeTable
from goldbach_toolkit.subsets.builder import IntegerSubset


@dataclass(frozen=True)
class SimilarityReport:
    c_observed: int
    argmax_n: int
    limit: int

    def to_row(self) -> dict:
        return {"c_observed": self.c_observed, "argmax_n": self.argmax_n}


def similarity_deviation(subset: IntegerSubset, table: PrimeTable) -> SimilarityReport:
    """
    Exact max over 1 <= n <= limit of |pi_Q(n) - pi(n)|.

    Both counting functions are step functions that only move at elements of
    Q or at primes, so the maximum is attained on the merged sorted sequence
    of both; argmax_n is the smallest n attaining it (1 when the deviation is 0).
    """
    limit = subset.spec.limit
    if table.limit < limit:
        raise OutOfRangeError(f"Prime table reaches {table.limit}, the subset needs {limit}")
    primes = table.prefix(limit).primes
    points = np.union1d(subset.elements, primes)
    if points.size == 0:
        return SimilarityReport(c_observed=0, argmax_n=1, limit=limit)
    deviation = np.abs(
        np.searchsorted(subset.elements, points, side="right") - np.searchsorted(primes, points, side="right")
    )
    index = int(np.argmax(deviation))
    c_observed = int(deviation[index])
    argmax_n = int(points[index]) if c_observed else 1
    return SimilarityReport(c_observed=c_observed, argmax_n=argmax_n, limit=limit)
