from goldbach_toolkit.probmodel.logprob import LogProb, log_add, logsumexp
from goldbach_toolkit.probmodel.lemma import (
    BoundForm,
    SizeMode,
    exact_disjoint_prob,
    lemma_bound,
    paper_sizes,
    empirical_sizes,
    model_disjoint_prob,
)
from goldbach_toolkit.probmodel.tail import TailSum, tail_sum, sqrt_bound, inequality_sides, inequality_crossover
from goldbach_toolkit.probmodel.alpha import (
    AlphaEquation,
    AlphaSolution,
    alpha_equation,
    alpha_solve,
    alpha_approx,
    alpha_tail_bound,
)

__all__ = [
    "LogProb",
    "log_add",
    "logsumexp",
    "BoundForm",
    "SizeMode",
    "exact_disjoint_prob",
    "lemma_bound",
    "paper_sizes",
    "empirical_sizes",
    "model_disjoint_prob",
    "TailSum",
    "tail_sum",
    "sqrt_bound",
    "inequality_sides",
    "inequality_crossover",
    "AlphaEquation",
    "AlphaSolution",
    "alpha_equation",
    "alpha_solve",
    "alpha_approx",
    "alpha_tail_bound",
]
