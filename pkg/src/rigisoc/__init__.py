"""Skeleton-level computations with rigid isocrystals.

Objects are graded dimension functions on Q/Z-valued characters of a finite
Galois group; simple objects correspond to Galois orbits of such characters.
"""

from .errors import RigIsocError
from .groups import FiniteGroup, cyclic, from_mult_table, from_permutations, klein_four, symmetric3
from .levels import Level, LevelMap, make_level, make_level_map
from .characters import GradingCharacter, character
from .objects import (
    SimpleLabel,
    SkeletonObject,
    decompose,
    make_object,
    make_simple,
    simple_skeleton,
    tensor,
)

__all__ = [
    "RigIsocError",
    "FiniteGroup",
    "cyclic",
    "from_mult_table",
    "from_permutations",
    "klein_four",
    "symmetric3",
    "Level",
    "LevelMap",
    "make_level",
    "make_level_map",
    "GradingCharacter",
    "character",
    "SimpleLabel",
    "SkeletonObject",
    "decompose",
    "make_object",
    "make_simple",
    "simple_skeleton",
    "tensor",
]

__version__ = "0.1.0"
