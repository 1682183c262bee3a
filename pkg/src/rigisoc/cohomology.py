"""Basic classes for ``Res_{E/F} GL_s``: tuples in ``(Q/Z)^m`` whose sum lies in ``(1/s)Z/Z``.

The infinite group is only ever probed through its ``N``-torsion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd
from typing import Callable, Sequence

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from . import characters as ch
from .characters import QLike, format_q
from .errors import ArityMismatch, GroupMismatch, ShapeMismatch, SumNotInOneOverS
from .groups import Subgroup
from .levels import Level
from .objects import SkeletonObject, object_of_basic_class, simple_labels
from .reports import CheckReport, CountReport


@dataclass(frozen=True)
class BasicCohGroup:
    m: int
    s: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.s < 1:
            raise ValueError("m and s must be positive")


@dataclass(frozen=True)
class BasicCohClass:
    group: BasicCohGroup
    values: tuple[Fraction, ...]

    def to_strings(self) -> list[str]:
        return [format_q(v) for v in self.values]


@dataclass(frozen=True)
class PresentationElement:
    a: tuple[int, ...]
    b: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.a) != len(self.b):
            raise ShapeMismatch("a and b have different lengths")
        if sum(self.b, Fraction(0)) != 0:
            raise ShapeMismatch("entries of b must sum to zero")


def _sum_ok(s: int, vals: Sequence[Fraction]) -> bool:
    return (sum(vals, Fraction(0)) * s).denominator == 1


def contains(G: BasicCohGroup, t: Sequence[QLike]) -> bool:
    if len(t) != G.m:
        raise ArityMismatch(f"expected {G.m} entries, got {len(t)}")
    return _sum_ok(G.s, [ch.qmodz(x) for x in t])


def make_class(G: BasicCohGroup, t: Sequence[QLike]) -> BasicCohClass:
    if not contains(G, t):
        raise SumNotInOneOverS(f"entries do not sum into (1/{G.s})Z/Z")
    return BasicCohClass(G, tuple(ch.qmodz(x) for x in t))


def zero_class(G: BasicCohGroup) -> BasicCohClass:
    return BasicCohClass(G, (Fraction(0),) * G.m)


def add(x: BasicCohClass, y: BasicCohClass) -> BasicCohClass:
    if x.group != y.group:
        raise GroupMismatch(f"{x.group} vs {y.group}")
    return BasicCohClass(x.group, tuple((u + v) % 1 for u, v in zip(x.values, y.values)))


def neg(x: BasicCohClass) -> BasicCohClass:
    return BasicCohClass(x.group, tuple((-u) % 1 for u in x.values))


def presentation_map(p: PresentationElement, G: BasicCohGroup) -> BasicCohClass:
    """``(a_i, b_i) -> (b_i - a_i)/s`` in Q/Z."""
    if len(p.a) != G.m:
        raise ShapeMismatch(f"element has {len(p.a)} coordinates, group has m = {G.m}")
    s = G.s
    return BasicCohClass(G, tuple(((bi - ai) / s) % 1 for ai, bi in zip(p.a, p.b)))


def in_kernel_lattice(G: BasicCohGroup, da: Sequence[int], db: Sequence[Fraction]) -> bool:
    """Is ``(da, db)`` in the image of ``{(x mod s, x) : x in Z^m, sum x = 0}``?"""
    if any(v.denominator != 1 for v in db) or sum(db, Fraction(0)) != 0:
        return False
    return all((int(v) - a) % G.s == 0 for a, v in zip(da, db))


def _values_up_to(N: int, lo: int, hi: int) -> list[Fraction]:
    vals = {Fraction(k, q) for q in range(1, N + 1) for k in range(lo * q, hi * q)}
    return sorted(vals)


def presentation_elements(G: BasicCohGroup, N: int) -> list[PresentationElement]:
    """Elements with ``a`` in ``(Z/s)^m`` and ``b_i`` (``i < m``) of denominator at most
    ``N`` in ``[-s, s)``; the last ``b`` entry balances the sum."""
    grid = _values_up_to(N, -G.s, G.s)
    out = []
    for a in product(range(G.s), repeat=G.m):
        for head in product(grid, repeat=G.m - 1):
            b = (*head, -sum(head, Fraction(0)))
            out.append(PresentationElement(a, b))
    return out


def presentation_kernel_check(
    G: BasicCohGroup,
    N: int,
    mapping: Callable[[PresentationElement, BasicCohGroup], BasicCohClass] | None = None,
) -> CheckReport:
    """Two elements share an image iff their difference lies in the kernel lattice.

    Since the lattice is a subgroup, comparing each element with the first
    element of its fibre, and the fibre leaders with each other, covers all pairs.
    """
    mapping = mapping or presentation_map
    fibres: dict[tuple[Fraction, ...], PresentationElement] = {}

    def diff(p: PresentationElement, q: PresentationElement):
        return (
            [x - y for x, y in zip(p.a, q.a)],
            [x - y for x, y in zip(p.b, q.b)],
        )

    def witness(p, q, why):
        return {
            "first": {"a": list(p.a), "b": [format_q(v) for v in p.b]},
            "second": {"a": list(q.a), "b": [format_q(v) for v in q.b]},
            "reason": why,
        }

    name = f"presentation_kernel(m={G.m},s={G.s},N={N})"
    for p in presentation_elements(G, N):
        image = mapping(p, G).values
        leader = fibres.get(image)
        if leader is None:
            fibres[image] = p
        elif not in_kernel_lattice(G, *diff(p, leader)):
            return CheckReport(name, False, witness(p, leader, "same image, difference not in lattice"))
    leaders = list(fibres.values())
    for i, p in enumerate(leaders):
        for q in leaders[:i]:
            if in_kernel_lattice(G, *diff(p, q)):
                return CheckReport(name, False, witness(p, q, "different images, difference in lattice"))
    return CheckReport(name, True, None)


def torsion_members(G: BasicCohGroup, N: int) -> list[tuple[Fraction, ...]]:
    """All members of order dividing ``N``, by direct enumeration."""
    grid = [Fraction(k, N) for k in range(N)]
    return [t for t in product(grid, repeat=G.m) if _sum_ok(G.s, t)]


def image_vs_membership(G: BasicCohGroup, N: int) -> CountReport:
    """Compare presentation-map images of order dividing ``N`` with the membership set."""
    members = set(torsion_members(G, N))
    grid = [Fraction(k, N) for k in range(G.s * N)]
    image = set()
    for a in product(range(G.s), repeat=G.m):
        for head in product(grid, repeat=G.m - 1):
            b = (*head, -sum(head, Fraction(0)))
            t = presentation_map(PresentationElement(a, b), G).values
            if all((x * N).denominator == 1 for x in t):
                image.add(t)
    stray = sorted(image ^ members)
    witness = [format_q(v) for v in stray[0]] if stray else None
    return CountReport(len(image), len(members), not stray, witness)


def torsion_relation_matrix(G: BasicCohGroup, N: int) -> Matrix:
    """Relations of ``{y in Z^m : s*sum(y) = 0 mod N} / N Z^m`` in the basis
    ``e_i - e_m`` (``i < m``), ``N' e_m`` with ``N' = N / gcd(N, s)``."""
    m = G.m
    Np = N // gcd(N, G.s)
    rows = []
    for j in range(m):
        row = [0] * m
        if j < m - 1:
            row[j] = N
        row[m - 1] = N // Np
        rows.append(row)
    return Matrix(rows)


def torsion_structure(G: BasicCohGroup, N: int) -> list[int]:
    """Invariant factors (all > 1, divisibility order) of the ``N``-torsion subgroup."""
    factors = invariant_factors(torsion_relation_matrix(G, N), domain=ZZ)
    return [abs(int(d)) for d in factors if abs(int(d)) != 1]


def newton_of_class(c: BasicCohClass, level: Level, H: Subgroup) -> SkeletonObject:
    index = level.gal.order // H.order
    if index != c.group.m:
        raise ArityMismatch(f"[G:H] = {index} but the class has m = {c.group.m}")
    return object_of_basic_class(level, H, c.group.s, c.values)


def burnside_count(level: Level, max_denominator: int | None = None) -> Fraction:
    G = level.gal
    v = len(ch.value_numerators(level, max_denominator))
    total = sum(v ** (G.order // G.element_order(g)) for g in G.elements)
    return Fraction(total, G.order)


def count_classes_vs_simples(level: Level, N: int | None = None) -> CountReport:
    """Orbit enumeration against Burnside's lemma for characters of denominator at most ``N``."""
    a = len(simple_labels(level, N))
    b = burnside_count(level, N)
    agree = b.denominator == 1 and a == b
    return CountReport(a, int(b) if b.denominator == 1 else -1, agree, None if agree else format_q(b))
