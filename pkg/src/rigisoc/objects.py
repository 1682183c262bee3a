"""Objects in skeleton normal form and their classification by simple labels.

An object is recorded by its graded dimension function: a finitely supported
map from grading characters to positive integers.  The support must be a union
of Galois orbits, the dimension must be constant along each orbit, and on the
orbit of a character with invariant ``(Sigma, s)`` the dimension must be a
multiple of ``s``.  Each orbit then contributes ``dim / s`` copies of the
simple object labelled by that orbit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import characters as ch
from .characters import GradingCharacter, CharacterOrbit, QLike
from .errors import (
    DenominatorExceedsLevel,
    IndivisibleMultiplicity,
    InvalidDimension,
    LevelMismatch,
    NonConstantOnOrbit,
    NonOrbitStableSupport,
    NotPrimitive,
    SumNotInOneOverS,
)
from .groups import Subgroup, left_cosets
from .levels import Level, LevelMap

Nums = tuple[int, ...]


# -- simple labels ----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SimpleLabel:
    level: Level
    orbit: CharacterOrbit
    H: Subgroup
    s: int
    sigma: Fraction
    dim: int

    @property
    def rep(self) -> GradingCharacter:
        return self.orbit.rep

    @property
    def index(self) -> int:
        return self.level.gal.order // self.H.order

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleLabel):
            return NotImplemented
        return self.level is other.level and self.rep == other.rep

    def __hash__(self) -> int:
        return hash(self.rep)

    def __repr__(self) -> str:
        return f"SimpleLabel({self.rep!r}, [G:H]={self.index}, s={self.s})"


def _label_from_nums(level: Level, nums: Nums) -> SimpleLabel:
    cache = level.cache.setdefault("labels", {})
    rep = ch._orbit_data(level, nums).members[0]
    hit = cache.get(rep)
    if hit is None:
        data = ch._orbit_data(level, rep)
        orbit = CharacterOrbit(level, tuple(GradingCharacter(level, m) for m in data.members))
        H = Subgroup(level.gal, data.stabilizer)
        index = level.gal.order // H.order
        hit = SimpleLabel(level, orbit, H, data.s, data.sigma, data.s * index)
        cache[rep] = hit
    return hit


def make_simple(f: GradingCharacter, H: Subgroup | None = None) -> SimpleLabel:
    """Label of the simple object containing ``f`` in its grading.

    If ``H`` is supplied it must be exactly the stabilizer of ``f``; otherwise
    ``f`` is induced from a coarser coset space and ``NotPrimitive`` is raised
    with the full stabilizer as witness.
    """
    lbl = _label_from_nums(f.level, f.nums)
    if H is not None:
        stab = ch.stabilizer_of(f)
        if stab.members != H.members:
            raise NotPrimitive(
                f"character is fixed by a subgroup of order {stab.order}, not {H.order}",
                witness=stab,
            )
    return lbl


def simple_labels(level: Level, max_denominator: int | None = None) -> list[SimpleLabel]:
    """All simple labels at ``level`` with value denominators at most the bound."""
    return [_label_from_nums(level, f.nums) for f in ch.orbit_representatives(level, max_denominator)]


# -- skeleton objects ---------------------------------------------------------

class SkeletonObject:
    """Validated graded dimension function.  Treat as immutable."""

    __slots__ = ("level", "_dims", "_hash")

    def __init__(self, level: Level, dims: Mapping[Nums, int]):
        self.level = level
        self._dims = dict(sorted(dims.items()))
        self._hash = None

    @property
    def dims(self) -> dict[GradingCharacter, int]:
        return {GradingCharacter(self.level, c): d for c, d in self._dims.items()}

    @property
    def raw(self) -> dict[Nums, int]:
        return self._dims

    @property
    def support(self) -> list[GradingCharacter]:
        return [GradingCharacter(self.level, c) for c in self._dims]

    def dim_at(self, f: GradingCharacter) -> int:
        return self._dims.get(f.nums, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SkeletonObject):
            return NotImplemented
        return self.level is other.level and self._dims == other._dims

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._dims.items()))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(
            f"{GradingCharacter(self.level, c)!r}: {d}" for c, d in self._dims.items()
        )
        return f"SkeletonObject({self.level.name}; {body})"


def _validate(level: Level, dims: Mapping[Nums, int]) -> SkeletonObject:
    for c, d in dims.items():
        if d < 0:
            raise InvalidDimension(f"negative dimension {d}")
    dims = {c: d for c, d in dims.items() if d}
    orbits = level.cache.setdefault("orbits", {})
    checked: set[Nums] = set()
    for c in sorted(dims):
        if c in checked:
            continue
        data = orbits.get(c) or ch._orbit_data(level, c)
        d = dims[c]
        for member in data.members:
            if member not in dims:
                raise NonOrbitStableSupport(
                    f"support contains {GradingCharacter(level, c)!r} "
                    f"but not its translate {GradingCharacter(level, member)!r}"
                )
        for member in data.members:
            if dims[member] != d:
                raise NonConstantOnOrbit(
                    f"dimensions {d} and {dims[member]} differ on one orbit"
                )
        if d % data.s:
            raise IndivisibleMultiplicity(
                f"dimension {d} on the orbit of {GradingCharacter(level, c)!r} "
                f"is not divisible by s = {data.s}"
            )
        checked.update(data.members)
    return SkeletonObject(level, dims)


def make_object(
    level: Level,
    dims: Mapping[GradingCharacter, int]
    | Iterable[tuple[GradingCharacter | Sequence[QLike], int]],
) -> SkeletonObject:
    """Validate and build an object from characters (or value lists) and dimensions."""
    items = dims.items() if isinstance(dims, Mapping) else dims
    raw: dict[Nums, int] = {}
    for key, d in items:
        f = key if isinstance(key, GradingCharacter) else ch.character(level, key)
        if f.level is not level:
            raise LevelMismatch(f"character lives at {f.level.name}, not {level.name}")
        if isinstance(d, bool) or not isinstance(d, int):
            raise InvalidDimension(f"dimension {d!r} is not an integer")
        if f.nums in raw:
            raise InvalidDimension(f"character {f!r} listed twice")
        raw[f.nums] = d
    return _validate(level, raw)


def zero_object(level: Level) -> SkeletonObject:
    return SkeletonObject(level, {})


def unit(level: Level, copies: int = 1) -> SkeletonObject:
    return _validate(level, {ch.zero(level).nums: copies})


def simple_skeleton(lbl: SimpleLabel) -> SkeletonObject:
    return SkeletonObject(lbl.level, {m.nums: lbl.s for m in lbl.orbit.members})


def _check_levels(X: SkeletonObject, Y: SkeletonObject) -> None:
    if X.level is not Y.level:
        raise LevelMismatch(f"levels {X.level.name} and {Y.level.name} differ")


def decompose(X: SkeletonObject) -> list[tuple[SimpleLabel, int]]:
    """Simple summands with multiplicities, sorted by canonical representative."""
    out = []
    for c, d in X.raw.items():
        data = ch._orbit_data(X.level, c)
        if data.members[0] == c:
            out.append((_label_from_nums(X.level, c), d // data.s))
    return out


def recompose(level: Level, parts: Iterable[tuple[SimpleLabel, int]]) -> SkeletonObject:
    total: dict[Nums, int] = {}
    for lbl, k in parts:
        if lbl.level is not level:
            raise LevelMismatch(f"label lives at {lbl.level.name}, not {level.name}")
        for m in lbl.orbit.members:
            total[m.nums] = total.get(m.nums, 0) + k * lbl.s
    return _validate(level, total)


def tensor_raw(level: Level, A: Mapping[Nums, int], B: Mapping[Nums, int]) -> dict[Nums, int]:
    """Convolution of dimension functions over pointwise addition in Q/Z."""
    D = level.denom
    out: dict[Nums, int] = {}
    get = out.get
    for c1, d1 in A.items():
        for c2, d2 in B.items():
            c = tuple([(a + b) % D for a, b in zip(c1, c2)])
            out[c] = get(c, 0) + d1 * d2
    return out


def tensor(X: SkeletonObject, Y: SkeletonObject) -> SkeletonObject:
    _check_levels(X, Y)
    return _validate(X.level, tensor_raw(X.level, X.raw, Y.raw))


def dual(X: SkeletonObject) -> SkeletonObject:
    D = X.level.denom
    return SkeletonObject(X.level, {tuple((-a) % D for a in c): d for c, d in X.raw.items()})


def direct_sum(X: SkeletonObject, Y: SkeletonObject) -> SkeletonObject:
    _check_levels(X, Y)
    out = dict(X.raw)
    for c, d in Y.raw.items():
        out[c] = out.get(c, 0) + d
    return SkeletonObject(X.level, out)


def newton(X: SkeletonObject) -> SkeletonObject:
    """The Newton datum of an object is its grading, i.e. the skeleton itself."""
    return X


def is_basic(X: SkeletonObject) -> bool:
    # The zero object has empty support and is counted as basic.
    return len(X.raw) <= 1


def fiber_dimension(X: SkeletonObject) -> int:
    return sum(X.raw.values())


@dataclass(frozen=True, order=True)
class LeviFactor:
    index: int
    s: int
    multiplicity: int


@dataclass(frozen=True)
class LeviDescriptor:
    factors: tuple[LeviFactor, ...]

    @property
    def total_dimension(self) -> int:
        return sum(f.index * f.s * f.multiplicity for f in self.factors)


def twisted_levi_of(X: SkeletonObject) -> LeviDescriptor:
    """One factor ``Res GL_s`` of degree ``[G:H]`` per simple summand class."""
    return LeviDescriptor(
        tuple(LeviFactor(lbl.index, lbl.s, k) for lbl, k in decompose(X))
    )


def is_elliptic_levi(d: LeviDescriptor) -> bool:
    return len(d.factors) == 1 and d.factors[0].multiplicity == 1


def is_simple(X: SkeletonObject) -> bool:
    parts = decompose(X)
    return len(parts) == 1 and parts[0][1] == 1


def multiplicity(X: SkeletonObject, lbl: SimpleLabel) -> int:
    if X.level is not lbl.level:
        raise LevelMismatch(f"levels {X.level.name} and {lbl.level.name} differ")
    return X.raw.get(lbl.rep.nums, 0) // lbl.s


def end_dim(X: SkeletonObject) -> int:
    """Sum over summands of ``k^2 * s^2 * [G:H]`` (division-algebra count; derived)."""
    return sum(k * k * lbl.s * lbl.s * lbl.index for lbl, k in decompose(X))


def object_of_basic_class(
    level: Level, H: Subgroup, s: int, a: Sequence[QLike]
) -> SkeletonObject:
    """Object attached to a basic class ``a`` on the cosets ``G/H`` for ``Res GL_s``.

    The full character is ``chi(g) = a[g^-1 H]`` with cosets ordered as in
    ``left_cosets``.  Its total dimension is ``s * [G:H]``; when ``chi`` has a
    larger stabilizer than ``H`` each orbit member carries ``s * [H_chi : H]``.
    """
    G = level.gal
    cosets = left_cosets(G, H)
    if len(a) != len(cosets):
        raise LevelMismatch(f"tuple has {len(a)} entries for {len(cosets)} cosets")
    vals = [ch.qmodz(x) for x in a]
    total = sum(vals, Fraction(0))
    if (total * s).denominator != 1:
        raise SumNotInOneOverS(f"sum {ch.format_qmodz(total)} is not in (1/{s})Z/Z")
    for v in vals:
        if level.denom % v.denominator:
            raise DenominatorExceedsLevel(
                f"value {ch.format_q(v)} has denominator not dividing {level.denom}"
            )
    where = {}
    for i, coset in enumerate(cosets):
        for g in coset:
            where[g] = i
    chi = ch.character(level, [vals[where[G.inv(g)]] for g in G.elements])
    data = ch._orbit_data(level, chi.nums)
    per_member = s * (len(data.stabilizer) // H.order)
    return _validate(level, {m: per_member for m in data.members})


def inflate_object(X: SkeletonObject, m: LevelMap) -> SkeletonObject:
    if m.coarse is not X.level:
        raise LevelMismatch(f"map coarse level {m.coarse.name} is not {X.level.name}")
    out = {
        ch.inflate(GradingCharacter(X.level, c), m).nums: d for c, d in X.raw.items()
    }
    return _validate(m.fine, out)


def inflate_label(lbl: SimpleLabel, m: LevelMap) -> SimpleLabel:
    return make_simple(ch.inflate(lbl.rep, m))
