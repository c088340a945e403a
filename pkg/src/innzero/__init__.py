"""Finite crossed modules, strict 2-groups, INN0 and the structures around them,
with exhaustive checks."""

from .groups import FiniteGroup, make_group
from .tcm import TwoCrossedModule
from .xmod import CrossedModule, CrossedSquare

__version__ = "0.1.0"

__all__ = ["FiniteGroup", "make_group", "CrossedModule", "CrossedSquare", "TwoCrossedModule"]
