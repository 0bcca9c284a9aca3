"""Finite models for strict omega-categories, Theta-sets and categorical homology."""

from .errors import (CompositionUnavailable, DihomError, DimensionMismatch, Infinite,
                     InvalidCategory, NoBasepoint, NoSort, NotClosed, ShapeTooDeep)
from .pasting import PastingTree, enumerate_trees, parse_tree, tree_chain, tree_disk

__version__ = "0.1.0"
