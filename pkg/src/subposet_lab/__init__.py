"""Counting copies of posets in families of subsets and extremal search over them."""

from .counting import BudgetExceeded, contains_copy, count_copies, embeddings, is_free
from .dsl import PosetSyntaxError, parse_poset, render
from .families import SetFamily, full_level, level_union, power_set
from .posets import Poset

__all__ = [
    "BudgetExceeded",
    "Poset",
    "PosetSyntaxError",
    "SetFamily",
    "contains_copy",
    "count_copies",
    "embeddings",
    "full_level",
    "is_free",
    "level_union",
    "parse_poset",
    "power_set",
    "render",
]

__version__ = "0.1.0"
