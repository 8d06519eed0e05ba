"""Every reproducible figure of the violation-probability analysis, recomputed."""
from dataclasses import dataclass
from typing import Callable, List
import logging
import polars as pl

from goldbach_toolkit.probmodel.alpha import alpha_solve, alpha_tail_bound
from goldbach_toolkit.probmodel.lemma import BoundForm, lemma_bound
from goldbach_toolkit.probmodel.logprob import LN10
from goldbach_toolkit.probmodel.tail import sqrt_bound, tail_sum

logger = logging.getLogger(__name__)

VERIFIED_THRESHOLD = 4e18


@dataclass
class PaperFigure:
    quantity: str
    paper_value: str
    computed_log10: float
    passed: bool


def _figure(quantity: str, paper_value: str, computed: float, check: Callable[[float], bool]) -> PaperFigure:
    passed = bool(check(computed))
    if not passed:
        logger.warning("%s: computed %.6g does not match %s", quantity, computed, paper_value)
    return PaperFigure(quantity=quantity, paper_value=paper_value, computed_log10=computed, passed=passed)


def paper_figures() -> List[PaperFigure]:
    """
    Recompute the published figures.

    For the alpha row the computed column carries alpha itself; every other
    row carries log10 of the probability or bound.
    """
    alpha = alpha_solve(VERIFIED_THRESHOLD)
    alpha_bound = alpha_tail_bound(VERIFIED_THRESHOLD)
    return [
        _figure("P(10000) exp bound", "<1e-51", lemma_bound(1e4, BoundForm.EXPONENTIAL).log10, lambda x: x < -51),
        _figure("P(40000) exp bound", "<1e-154", lemma_bound(4e4, BoundForm.EXPONENTIAL).log10, lambda x: x < -154),
        _figure("tail sum from n=20000", "~1e-86", tail_sum(20000).log10, lambda x: abs(x + 86) <= 1),
        _figure("tail sum from n=50000", "~1e-183", tail_sum(50000).log10, lambda x: abs(x + 183) <= 1),
        _figure("alpha at N=4e18 (value)", "~0.8", alpha.alpha, lambda x: 0.80 < x < 0.83),
        _figure("e^(-N^alpha) at N=4e18", "<e^(-1e15)", alpha_bound.log10, lambda x: x <= -1e15 / LN10),
        _figure("e^(-sqrt N) at N=1e18", "<e^(-1e9)", sqrt_bound(1e18).log10, lambda x: x <= -1e9 / LN10),
        _figure("e^(-sqrt N) at N=2e18", "<e^(-1.414e9)", sqrt_bound(2e18).log10, lambda x: x <= -1.414e9 / LN10),
        _figure("e^(-sqrt N) at N=1e8", "~1e-4343", sqrt_bound(1e8).log10, lambda x: abs(x + 4343) <= 1),
    ]


def paper_table() -> pl.DataFrame:
    """The figures as a DataFrame with columns quantity, paper_value, computed_log10, pass."""
    figures = paper_figures()
    return pl.DataFrame(
        {
            "quantity": [figure.quantity for figure in figures],
            "paper_value": [figure.paper_value for figure in figures],
            "computed_log10": [float(figure.computed_log10) for figure in figures],
            "pass": [figure.passed for figure in figures],
        }
    )
