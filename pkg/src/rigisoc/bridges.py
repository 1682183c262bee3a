"""Comparison with classical isocrystals (slope data) and with extended isocrystals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from . import characters as ch
from .characters import GradingCharacter, QLike, format_q
from .errors import DenominatorExceedsLevel, InvalidDimension, LevelMismatch
from .levels import Level
from .objects import SkeletonObject, _validate, tensor
from .reports import CheckReport

Nums = tuple[int, ...]


@dataclass(frozen=True)
class IsocrystalDatum:
    """Newton data: a multiset of ``(slope, dim)`` with the slope denominator dividing ``dim``."""

    slopes: tuple[tuple[Fraction, int], ...]

    def __post_init__(self) -> None:
        for lam, d in self.slopes:
            if d <= 0:
                raise InvalidDimension(f"slope {format_q(lam)} has non-positive dimension {d}")
            if d % lam.denominator:
                raise InvalidDimension(
                    f"dimension {d} is not divisible by the denominator of slope {format_q(lam)}"
                )

    @property
    def dimension(self) -> int:
        return sum(d for _, d in self.slopes)


def isocrystal(pairs: Iterable[tuple[QLike, int]]) -> IsocrystalDatum:
    items = []
    for lam, d in pairs:
        lam = ch.parse_fraction(lam) if isinstance(lam, str) else Fraction(lam)
        items.append((lam, int(d)))
    return IsocrystalDatum(tuple(sorted(items)))


def simple_isocrystal(slope: Fraction) -> IsocrystalDatum:
    slope = Fraction(slope)
    return IsocrystalDatum(((slope, slope.denominator),))


def isoc_tensor(x: IsocrystalDatum, y: IsocrystalDatum) -> IsocrystalDatum:
    """Slopes add and dimensions multiply."""
    acc: dict[Fraction, int] = {}
    for l1, d1 in x.slopes:
        for l2, d2 in y.slopes:
            acc[l1 + l2] = acc.get(l1 + l2, 0) + d1 * d2
    return IsocrystalDatum(tuple(sorted(acc.items())))


def isoc_to_rigisoc(d: IsocrystalDatum, target: Level) -> SkeletonObject:
    """The slope ``lam`` piece goes to the constant character ``-lam`` (mod 1)."""
    D = target.denom
    n = target.gal.order
    out: dict[Nums, int] = {}
    for lam, dim in d.slopes:
        v = (-lam) % 1
        if D % v.denominator:
            raise DenominatorExceedsLevel(
                f"slope {format_q(lam)} needs denominator {v.denominator}, level has {D}"
            )
        c = (v.numerator * (D // v.denominator),) * n
        out[c] = out.get(c, 0) + dim
    return _validate(target, out)


class ExtIsocView:
    """Grading data read as an extended isocrystal; no divisibility requirement."""

    __slots__ = ("level", "raw")

    def __init__(self, level: Level, raw: Mapping[Nums, int]):
        self.level = level
        self.raw = dict(sorted((c, d) for c, d in raw.items() if d))

    @property
    def dims(self) -> dict[GradingCharacter, int]:
        return {GradingCharacter(self.level, c): d for c, d in self.raw.items()}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExtIsocView):
            return NotImplemented
        return self.level is other.level and self.raw == other.raw

    def __hash__(self) -> int:
        return hash(tuple(self.raw.items()))

    def __repr__(self) -> str:
        return f"ExtIsocView({self.level.name}, {len(self.raw)} gradings)"


def rigisoc_to_extisoc(X: SkeletonObject) -> ExtIsocView:
    # Stored Q/Z values already are the [0,1) representatives.
    return ExtIsocView(X.level, X.raw)


@dataclass(frozen=True)
class ExtTensorResult:
    view: ExtIsocView
    carries: tuple[tuple[Nums, Nums, tuple[int, ...]], ...]


def ext_tensor(A: ExtIsocView, B: ExtIsocView) -> ExtTensorResult:
    """Twisted tensor: convolution over Q/Z, plus the carry vector of every support pair."""
    if A.level is not B.level:
        raise LevelMismatch(f"levels {A.level.name} and {B.level.name} differ")
    level = A.level
    D = level.denom
    out: dict[Nums, int] = {}
    carries = []
    for c1, d1 in A.raw.items():
        for c2, d2 in B.raw.items():
            # The twist by the carry line bundle moves the lift in Q, not the class in Q/Z.
            c = tuple((x + y) % D for x, y in zip(c1, c2))
            out[c] = out.get(c, 0) + d1 * d2
            carries.append((c1, c2, tuple(int(x + y >= D) for x, y in zip(c1, c2))))
    return ExtTensorResult(ExtIsocView(level, out), tuple(carries))


def functor_tensor_compat_check(X: SkeletonObject, Y: SkeletonObject) -> CheckReport:
    lhs = rigisoc_to_extisoc(tensor(X, Y))
    rhs = ext_tensor(rigisoc_to_extisoc(X), rigisoc_to_extisoc(Y)).view
    diff = []
    for c in sorted(set(lhs.raw) | set(rhs.raw)):
        a, b = lhs.raw.get(c, 0), rhs.raw.get(c, 0)
        if a != b:
            f = GradingCharacter(X.level, c)
            diff.append({"char": f.to_strings(), "tensor": a, "ext_tensor": b})
    return CheckReport("functor_tensor_compat", not diff, diff or None)


def carry_cocycle_identity(
    b: GradingCharacter, c: GradingCharacter, d: GradingCharacter
) -> bool:
    """``c(b,c) + c(b+c,d) == c(c,d) + c(b,c+d)`` componentwise."""
    if not (b.level is c.level is d.level):
        raise LevelMismatch("characters live at different levels")
    D = b.level.denom
    for x, y, z in zip(b.nums, c.nums, d.nums):
        xy, yz = x + y, y + z
        lhs = (xy >= D) + ((xy % D) + z >= D)
        rhs = (yz >= D) + (x + (yz % D) >= D)
        if lhs != rhs:
            return False
    return True
