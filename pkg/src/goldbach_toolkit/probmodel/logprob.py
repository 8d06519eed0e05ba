"""Probabilities carried as natural logarithms."""
from dataclasses import dataclass
import math

from goldbach_toolkit.exceptions import DomainError

LN10 = math.log(10.0)
LOG_ZERO = float("-inf")
LOG_ONE = 0.0


@dataclass(frozen=True, order=True)
class LogProb:
    """ln of a probability; -inf is probability 0."""
    ln_value: float

    def __post_init__(self):
        if math.isnan(self.ln_value) or self.ln_value > 0.0:
            raise DomainError(f"A log-probability must be <= 0, got {self.ln_value}")

    @classmethod
    def zero(cls) -> "LogProb":
        return cls(LOG_ZERO)

    @classmethod
    def one(cls) -> "LogProb":
        return cls(LOG_ONE)

    @property
    def log10(self) -> float:
        return self.ln_value / LN10

    @property
    def value(self) -> float:
        """The plain probability; underflows to 0.0 below about 1e-308."""
        return math.exp(self.ln_value)

    def __mul__(self, other: "LogProb") -> "LogProb":
        return LogProb(self.ln_value + other.ln_value)


def log_add(ln_a: float, ln_b: float) -> float:
    """ln(e^a + e^b) without leaving log space."""
    if ln_a < ln_b:
        ln_a, ln_b = ln_b, ln_a
    if ln_b == LOG_ZERO:
        return ln_a
    return ln_a + math.log1p(math.exp(ln_b - ln_a))


def logsumexp(ln_values) -> float:
    """ln of a sum of exponentials, anchored at the largest term."""
    ln_values = list(ln_values)
    if not ln_values:
        return LOG_ZERO
    maximum = max(ln_values)
    if math.isinf(maximum):
        return maximum
    total = math.fsum(math.expm1(x - maximum) for x in ln_values)
    return maximum + math.log1p(total + float(len(ln_values) - 1))
