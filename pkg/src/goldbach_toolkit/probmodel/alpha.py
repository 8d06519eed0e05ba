"""The alpha equation sharpening e^{-sqrt N} to e^{-N^alpha}."""
from enum import Enum
from dataclasses import dataclass
from typing import Union
import logging
import math

from goldbach_toolkit.exceptions import DomainError, NoRootError
from goldbach_toolkit.probmodel.logprob import LogProb

logger = logging.getLogger(__name__)

ALPHA_MIN_N = 1_000
BISECTION_TOLERANCE = 1e-12
BISECTION_MAX_ITERATIONS = 200
RESIDUAL_FACTOR = 1e-6


class AlphaEquation(Enum):
    """
    CONSISTENT: N/ln^2 N = N^a + (1 - a) ln N - ln a, the form under which
    e^{-n/ln^2 n} < a n^(a-1) e^{-n^a} integrates to e^{-N^a}.
    LITERAL: N/ln^2 N = N^a + (a - 1) ln N + ln a, signs as usually printed.
    """
    CONSISTENT = "consistent"
    LITERAL = "literal"


@dataclass(frozen=True)
class AlphaSolution:
    alpha: float
    residual: float
    alpha_closed_form: float
    N: float
    equation: AlphaEquation = AlphaEquation.CONSISTENT

    def bound(self) -> LogProb:
        """e^{-N^alpha}, with N^alpha evaluated through exp(alpha ln N)."""
        return LogProb(-math.exp(self.alpha * math.log(self.N)))


def alpha_equation(alpha: float, N: float, equation: AlphaEquation = AlphaEquation.CONSISTENT) -> float:
    """LHS - RHS of the defining equation; increasing in alpha on (1/2, 1]."""
    ln_n = math.log(N)
    if equation == AlphaEquation.CONSISTENT:
        correction = (1.0 - alpha) * ln_n - math.log(alpha)
    else:
        correction = (alpha - 1.0) * ln_n + math.log(alpha)
    return math.exp(alpha * ln_n) + correction - N / ln_n ** 2


def alpha_approx(N: float) -> float:
    """1 - 2 ln ln N / ln N."""
    if N <= math.e:
        raise DomainError(f"ln ln N needs N > e, got {N}")
    ln_n = math.log(N)
    return 1.0 - 2.0 * math.log(ln_n) / ln_n


def alpha_solve(N: float, equation: Union[str, AlphaEquation] = AlphaEquation.CONSISTENT) -> AlphaSolution:
    """
    Root of the alpha equation on (1/2, 1) by bisection.

    Raises:
        DomainError: If N < 10^3
        NoRootError: If the equation does not change sign on the bracket,
            or the root misses the residual tolerance 1e-6 * N / ln^2 N
    """
    equation = AlphaEquation(equation) if isinstance(equation, str) else equation
    if N < ALPHA_MIN_N:
        raise DomainError(f"alpha_solve needs N >= {ALPHA_MIN_N}, got {N}")
    low, high = 0.5, 1.0
    f_low = alpha_equation(low, N, equation)
    f_high = alpha_equation(high, N, equation)
    if f_low >= 0.0 or f_high <= 0.0:
        raise NoRootError(
            f"No sign change on (1/2, 1) for N={N}: f(1/2)={f_low:.6g}, f(1)={f_high:.6g}"
        )
    for _ in range(BISECTION_MAX_ITERATIONS):
        if high - low <= BISECTION_TOLERANCE:
            break
        middle = 0.5 * (low + high)
        if alpha_equation(middle, N, equation) < 0.0:
            low = middle
        else:
            high = middle
    alpha = 0.5 * (low + high)
    residual = abs(alpha_equation(alpha, N, equation))
    tolerance = RESIDUAL_FACTOR * N / math.log(N) ** 2
    if residual > tolerance:
        raise NoRootError(f"Bisection for N={N} stopped at residual {residual:.6g} > {tolerance:.6g}")
    logger.debug("alpha(N=%g) = %.12f, residual %.3g", N, alpha, residual)
    return AlphaSolution(
        alpha=alpha,
        residual=residual,
        alpha_closed_form=alpha_approx(N),
        N=N,
        equation=equation,
    )


def alpha_tail_bound(N: float, equation: Union[str, AlphaEquation] = AlphaEquation.CONSISTENT) -> LogProb:
    """e^{-N^alpha} with alpha from alpha_solve(N)."""
    return alpha_solve(N, equation).bound()
