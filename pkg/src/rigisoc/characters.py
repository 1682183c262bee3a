"""Q/Z-valued grading characters on a level's group.

A character at a level with denominator ``D`` is stored as a tuple of integer
numerators in ``[0, D)``, one per group element id.  Comparing numerator tuples
lexicographically agrees with comparing the rational values, so the canonical
orbit representative is simply the smallest numerator tuple in the orbit.

The group acts by left translation, ``(g.f)(x) = f(g^-1 x)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import product
from math import gcd, lcm
from typing import Iterable, Iterator, Sequence, Union

from .errors import DenominatorExceedsLevel, LevelMismatch, TowerTooShort
from .groups import Subgroup
from .levels import Level, LevelMap

QLike = Union[Fraction, int, str]


# -- Q/Z scalars ------------------------------------------------------------

def qmodz(x: QLike) -> Fraction:
    """Reduce to the representative in ``[0, 1)``."""
    if isinstance(x, str):
        x = parse_fraction(x)
    return Fraction(x) % 1


def parse_fraction(text: str) -> Fraction:
    text = text.strip()
    if "/" in text:
        p, q = text.split("/")
        return Fraction(int(p), int(q))
    return Fraction(int(text))


def format_q(x: Fraction) -> str:
    """``"p/q"`` in lowest terms; zero prints as ``"0/1"``."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def format_qmodz(x: QLike) -> str:
    return format_q(qmodz(x))


# -- characters -------------------------------------------------------------

class GradingCharacter:
    __slots__ = ("level", "nums")

    def __init__(self, level: Level, nums: Sequence[int]):
        self.level = level
        self.nums = tuple(nums)

    @property
    def vals(self) -> tuple[Fraction, ...]:
        D = self.level.denom
        return tuple(Fraction(n, D) for n in self.nums)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradingCharacter):
            return NotImplemented
        return self.level is other.level and self.nums == other.nums

    def __hash__(self) -> int:
        return hash(self.nums)

    def __lt__(self, other: GradingCharacter) -> bool:
        return self.nums < other.nums

    def __repr__(self) -> str:
        body = ", ".join(format_q(v) for v in self.vals)
        return f"<{self.level.name}: ({body})>"

    def to_strings(self) -> list[str]:
        return [format_q(v) for v in self.vals]


def character(level: Level, vals: Iterable[QLike]) -> GradingCharacter:
    """Build a character from rationals (or ``"p/q"`` strings), reducing mod 1."""
    vals = [qmodz(v) for v in vals]
    if len(vals) != level.gal.order:
        raise LevelMismatch(
            f"character has {len(vals)} values but the group has order {level.gal.order}"
        )
    D = level.denom
    nums = []
    for v in vals:
        if D % v.denominator:
            raise DenominatorExceedsLevel(
                f"value {format_q(v)} has denominator not dividing {D}"
            )
        nums.append(v.numerator * (D // v.denominator))
    return GradingCharacter(level, nums)


def zero(level: Level) -> GradingCharacter:
    return GradingCharacter(level, (0,) * level.gal.order)


def constant(level: Level, value: QLike) -> GradingCharacter:
    return character(level, [value] * level.gal.order)


def _same_level(f: GradingCharacter, g: GradingCharacter) -> None:
    if f.level is not g.level:
        raise LevelMismatch(f"levels {f.level.name} and {g.level.name} differ")


def add(f: GradingCharacter, g: GradingCharacter) -> GradingCharacter:
    _same_level(f, g)
    D = f.level.denom
    return GradingCharacter(f.level, tuple((a + b) % D for a, b in zip(f.nums, g.nums)))


def neg(f: GradingCharacter) -> GradingCharacter:
    D = f.level.denom
    return GradingCharacter(f.level, tuple((-a) % D for a in f.nums))


def exponent(f: GradingCharacter) -> int:
    """Smallest ``m >= 1`` with ``m f = 0``."""
    D = f.level.denom
    return reduce(lcm, (D // gcd(D, n) for n in f.nums), 1)


def act(g: int, f: GradingCharacter) -> GradingCharacter:
    p = f.level.gal.left_translations[g]
    nums = f.nums
    return GradingCharacter(f.level, tuple(nums[y] for y in p))


# -- orbit data (cached per level) -------------------------------------------

@dataclass(frozen=True)
class _OrbitData:
    members: tuple[tuple[int, ...], ...]
    stabilizer: tuple[int, ...]
    sigma: Fraction
    s: int


def _orbit_data(level: Level, nums: tuple[int, ...]) -> _OrbitData:
    cache = level.cache.setdefault("orbits", {})
    hit = cache.get(nums)
    if hit is not None:
        return hit
    images = [tuple(nums[y] for y in p) for p in level.gal.left_translations]
    stab = tuple(g for g, im in enumerate(images) if im == nums)
    sigma = Fraction(sum(nums), level.denom * len(stab)) % 1
    data = _OrbitData(tuple(sorted(set(images))), stab, sigma, sigma.denominator)
    cache[nums] = data
    return data


@dataclass(frozen=True, eq=False)
class CharacterOrbit:
    level: Level
    members: tuple[GradingCharacter, ...]

    @property
    def rep(self) -> GradingCharacter:
        return self.members[0]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, f: GradingCharacter) -> bool:
        return f in self.members

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CharacterOrbit):
            return NotImplemented
        return self.level is other.level and self.rep == other.rep

    def __hash__(self) -> int:
        return hash(self.rep)


def orbit_of(f: GradingCharacter) -> CharacterOrbit:
    data = _orbit_data(f.level, f.nums)
    return CharacterOrbit(f.level, tuple(GradingCharacter(f.level, m) for m in data.members))


def canonical_rep(f: GradingCharacter) -> GradingCharacter:
    return GradingCharacter(f.level, _orbit_data(f.level, f.nums).members[0])


def stabilizer_of(f: GradingCharacter) -> Subgroup:
    return Subgroup(f.level.gal, _orbit_data(f.level, f.nums).stabilizer)


def sigma_and_s(f: GradingCharacter) -> tuple[Fraction, int]:
    """Coset-space sum of ``f`` in Q/Z and its exact denominator."""
    data = _orbit_data(f.level, f.nums)
    return data.sigma, data.s


# -- level change -------------------------------------------------------------

def inflate(f: GradingCharacter, m: LevelMap) -> GradingCharacter:
    if m.coarse is not f.level:
        raise LevelMismatch(f"map coarse level {m.coarse.name} is not {f.level.name}")
    k = m.fine.denom // m.coarse.denom
    nums = f.nums
    return GradingCharacter(m.fine, tuple(nums[y] * k for y in m.proj.images))


def descends_to(f: GradingCharacter, m: LevelMap) -> GradingCharacter | None:
    """The coarse character pulling back to ``f``, or ``None`` if there is none."""
    if m.fine is not f.level:
        raise LevelMismatch(f"map fine level {m.fine.name} is not {f.level.name}")
    k = m.fine.denom // m.coarse.denom
    out = []
    for fiber in m.proj.fibers():
        v = f.nums[fiber[0]]
        if any(f.nums[x] != v for x in fiber) or v % k:
            return None
        out.append(v // k)
    return GradingCharacter(m.coarse, tuple(out))


def absorb_augmentation(
    f: GradingCharacter, tower: Sequence[LevelMap]
) -> tuple[Level, GradingCharacter]:
    """Inflate ``f`` up ``tower`` until its total sum vanishes in Q/Z.

    ``tower[0].coarse`` must be ``f.level`` and each later map must sit directly
    above the previous one.  The first level whose accumulated kernel order is
    divisible by the exponent of ``f`` is returned.
    """
    m = exponent(f)
    current, kernel_product = f, 1
    if kernel_product % m == 0:
        return f.level, f
    below = f.level
    for step in tower:
        if step.coarse is not below:
            raise LevelMismatch("tower does not ascend from the character's level")
        current = inflate(current, step)
        kernel_product *= step.kernel.order
        below = step.fine
        if kernel_product % m == 0:
            return below, current
    raise TowerTooShort(
        f"accumulated kernel order {kernel_product} is not divisible by exponent {m}"
    )


def total_sum(f: GradingCharacter) -> Fraction:
    return Fraction(sum(f.nums), f.level.denom) % 1


def carry_cocycle(b: GradingCharacter, c: GradingCharacter) -> tuple[int, ...]:
    """Per element: 1 when the ``[0,1)`` representatives sum to at least 1."""
    _same_level(b, c)
    D = b.level.denom
    return tuple(int(x + y >= D) for x, y in zip(b.nums, c.nums))


# -- enumeration ----------------------------------------------------------------

def value_numerators(level: Level, max_denominator: int | None = None) -> list[int]:
    """Numerators ``k`` (value ``k/D``) whose reduced denominator is at most the bound."""
    D = level.denom
    bound = D if max_denominator is None else max_denominator
    return [k for k in range(D) if D // gcd(D, k) <= bound]


def all_characters(level: Level, max_denominator: int | None = None) -> Iterator[GradingCharacter]:
    """Every character with value denominators at most the bound, in lexicographic order."""
    vals = value_numerators(level, max_denominator)
    for nums in product(vals, repeat=level.gal.order):
        yield GradingCharacter(level, nums)


def orbit_representatives(
    level: Level, max_denominator: int | None = None
) -> list[GradingCharacter]:
    """Canonical representatives of all orbits, sorted."""
    reps = []
    seen: set[tuple[int, ...]] = set()
    for f in all_characters(level, max_denominator):
        if f.nums in seen:
            continue
        members = _orbit_data(level, f.nums).members
        seen.update(members)
        reps.append(f)
    return reps
