from goldbach_toolkit.montecarlo.simulation import McEstimate, mc_disjoint, count_disjoint

__all__ = ["McEstimate", "mc_disjoint", "count_disjoint"]
