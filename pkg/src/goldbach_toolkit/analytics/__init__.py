from goldbach_toolkit.analytics.paper_table import PaperFigure, paper_figures, paper_table

__all__ = ["PaperFigure", "paper_figures", "paper_table"]
