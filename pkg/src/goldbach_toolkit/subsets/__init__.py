from goldbach_toolkit.subsets.spec import SubsetKind, SubsetSpec
from goldbach_toolkit.subsets.builder import IntegerSubset, build_subset, counting_function
from goldbach_toolkit.subsets.similarity import SimilarityReport, similarity_deviation
from goldbach_toolkit.subsets.io import export_subset, import_subset, format_subset, parse_subset

__all__ = [
    "SubsetKind",
    "SubsetSpec",
    "IntegerSubset",
    "build_subset",
    "counting_function",
    "SimilarityReport",
    "similarity_deviation",
    "export_subset",
    "import_subset",
    "format_subset",
    "parse_subset",
]
