"""Promotion, evacuation and cyclic sieving on standard Young tableaux."""
from .core import Partition, Tableau, count_syt, enumerate_syt, parse_shape, parse_tableau, transpose
from .descent import DescentVector, extended_descent
from .dynamics import apply_power, dual_evacuate, dual_promote, evacuate, promote
from .embedding import embed, embed_wide, project

__all__ = [
    "DescentVector",
    "Partition",
    "Tableau",
    "apply_power",
    "count_syt",
    "dual_evacuate",
    "dual_promote",
    "embed",
    "embed_wide",
    "enumerate_syt",
    "evacuate",
    "extended_descent",
    "parse_shape",
    "parse_tableau",
    "project",
    "promote",
    "transpose",
]
