"""Levels (a finite Galois group plus a denominator bound) and the maps between them."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .errors import DenominatorNotDivisible, NotSurjective
from .groups import FiniteGroup, GroupHom, Subgroup


@dataclass(frozen=True, eq=False)
class Level:
    name: str
    gal: FiniteGroup
    denom: int
    # scratch space for per-level caches (orbit data etc.)
    cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not isinstance(self.denom, int) or self.denom < 1:
            raise ValueError(f"denominator must be a positive integer, got {self.denom!r}")

    @property
    def order(self) -> int:
        return self.gal.order

    def __repr__(self) -> str:
        return f"Level({self.name!r}, |G|={self.gal.order}, denom={self.denom})"


def make_level(name: str, gal: FiniteGroup, denom: int) -> Level:
    return Level(name, gal, denom)


@dataclass(frozen=True, eq=False)
class LevelMap:
    fine: Level
    coarse: Level
    proj: GroupHom

    def __post_init__(self) -> None:
        if self.proj.source is not self.fine.gal or self.proj.target is not self.coarse.gal:
            raise NotSurjective("projection does not run between the levels' groups")
        if not self.proj.is_surjective():
            raise NotSurjective(
                f"projection {self.fine.name} -> {self.coarse.name} is not onto"
            )
        if self.fine.denom % self.coarse.denom:
            raise DenominatorNotDivisible(
                f"coarse denom {self.coarse.denom} does not divide fine denom {self.fine.denom}"
            )

    @cached_property
    def kernel(self) -> Subgroup:
        return self.proj.kernel()

    def then(self, other: LevelMap) -> LevelMap:
        """Composite ``self.fine -> self.coarse = other.fine -> other.coarse``."""
        if other.fine is not self.coarse:
            raise ValueError("level maps are not composable")
        return LevelMap(self.fine, other.coarse, self.proj.then(other.proj))


def make_level_map(fine: Level, coarse: Level, proj: GroupHom | Sequence[int]) -> LevelMap:
    if not isinstance(proj, GroupHom):
        images = tuple(int(x) for x in proj)
        if len(images) != fine.gal.order or any(
            not 0 <= y < coarse.gal.order for y in images
        ):
            raise NotSurjective("projection list has the wrong shape")
        proj = GroupHom(fine.gal, coarse.gal, images)
    return LevelMap(fine, coarse, proj)


def identity_map(level: Level) -> LevelMap:
    return make_level_map(level, level, list(level.gal.elements))


@dataclass(frozen=True)
class BandTransition:
    power: int
    norm_fibers: tuple[tuple[int, ...], ...]


def band_transition_description(m: LevelMap) -> BandTransition:
    """Power map exponent and the norm fibers, indexed by coarse element id."""
    return BandTransition(m.fine.denom // m.coarse.denom, m.proj.fibers())
