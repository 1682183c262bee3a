"""Finite groups stored as explicit multiplication tables.

Elements are integer ids ``0..order-1`` with ``0`` the identity.  Groups built
from permutations are ordered breadth-first from the identity, expanding each
element by right multiplication with the generators in the order given.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Callable, Hashable, Iterable, Sequence, TypeVar

from .errors import (
    ActionAxiomViolation,
    ClosureTooLarge,
    InvalidGroup,
    NotAHomomorphism,
)

DEFAULT_ORDER_CAP = 10080

Perm = tuple[int, ...]
P = TypeVar("P", bound=Hashable)


def _compose(p: Perm, q: Perm) -> Perm:
    # (p*q)(i) = p(q(i))
    return tuple(p[i] for i in q)


class FiniteGroup:
    """A finite group given by its multiplication table.

    Instances are treated as immutable; equality is identity.
    """

    def __init__(
        self,
        table: Sequence[Sequence[int]],
        *,
        generators: Sequence[int] | None = None,
        perms: Sequence[Perm] | None = None,
        name: str = "",
    ) -> None:
        self._mul = tuple(tuple(int(x) for x in row) for row in table)
        self.order = len(self._mul)
        self.name = name
        # Permutation realisation, when the group came from permutations.
        self.perms = tuple(perms) if perms is not None else None
        inv = [0] * self.order
        for a in range(self.order):
            row = self._mul[a]
            for b in range(self.order):
                if row[b] == 0:
                    inv[a] = b
                    break
        self._inv = tuple(inv)
        if generators is None:
            generators = _greedy_generators(self)
        self.generators = tuple(generators)

    # -- basic arithmetic -------------------------------------------------
    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def identity(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def power(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self._inv[a], -n
        result = 0
        for _ in range(n):
            result = self._mul[result][a]
        return result

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self._mul[x][a]
            k += 1
        return k

    def conj(self, g: int, x: int) -> int:
        """Return ``g x g^-1``."""
        return self._mul[self._mul[g][x]][self._inv[g]]

    @property
    def table(self) -> tuple[tuple[int, ...], ...]:
        return self._mul

    @cached_property
    def left_translations(self) -> tuple[tuple[int, ...], ...]:
        """``left_translations[g][x] = g^-1 x``; pulls functions back along ``g``."""
        return tuple(self._mul[self._inv[g]] for g in self.elements)

    def is_abelian(self) -> bool:
        return all(
            self._mul[a][b] == self._mul[b][a]
            for a in self.elements
            for b in range(a)
        )

    def check_axioms(self) -> None:
        """Exhaustively verify identity, inverses and associativity."""
        n = self.order
        m = self._mul
        for a in range(n):
            if m[0][a] != a or m[a][0] != a:
                raise InvalidGroup(f"id 0 is not a two-sided identity at {a}")
            if m[a][self._inv[a]] != 0 or m[self._inv[a]][a] != 0:
                raise InvalidGroup(f"element {a} has no two-sided inverse")
        for a, b, c in product(range(n), repeat=3):
            if m[m[a][b]][c] != m[a][m[b][c]]:
                raise InvalidGroup(f"associativity fails at {(a, b, c)}")

    def __repr__(self) -> str:
        label = self.name or "FiniteGroup"
        return f"<{label} of order {self.order}>"

    def __len__(self) -> int:
        return self.order


def _greedy_generators(G: FiniteGroup) -> list[int]:
    gens: list[int] = []
    current = {0}
    for x in G.elements:
        if x not in current:
            gens.append(x)
            current = set(subgroup_closure(G, gens).members)
        if len(current) == G.order:
            break
    return gens


def from_permutations(
    generators: Sequence[Sequence[int]],
    degree: int | None = None,
    *,
    cap: int = DEFAULT_ORDER_CAP,
    name: str = "",
) -> FiniteGroup:
    """Close a list of permutations (image lists) under composition."""
    gens = [tuple(int(i) for i in g) for g in generators]
    if degree is None:
        degree = len(gens[0]) if gens else 0
    for g in gens:
        if len(g) != degree or sorted(g) != list(range(degree)):
            raise InvalidGroup(f"generator {list(g)} is not a permutation of {degree} points")
    identity = tuple(range(degree))
    elements = [identity]
    index = {identity: 0}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = _compose(x, g)
            if y not in index:
                if len(elements) >= cap:
                    raise ClosureTooLarge(f"group order exceeds cap {cap}")
                index[y] = len(elements)
                elements.append(y)
                queue.append(y)
    table = [[index[_compose(x, y)] for y in elements] for x in elements]
    gen_ids = []
    for g in gens:
        i = index[g]
        if i != 0 and i not in gen_ids:
            gen_ids.append(i)
    return FiniteGroup(table, generators=gen_ids, perms=elements, name=name)


def from_mult_table(
    table: Sequence[Sequence[int]], *, cap: int = DEFAULT_ORDER_CAP, name: str = ""
) -> FiniteGroup:
    n = len(table)
    if n == 0:
        raise InvalidGroup("empty multiplication table")
    if n > cap:
        raise ClosureTooLarge(f"group order exceeds cap {cap}")
    for row in table:
        if len(row) != n or sorted(row) != list(range(n)):
            raise InvalidGroup("multiplication table is not a Latin square")
    G = FiniteGroup(table, name=name)
    G.check_axioms()
    return G


def cyclic(n: int) -> FiniteGroup:
    if n == 1:
        return from_permutations([], degree=1, name="C1")
    return from_permutations([[*range(1, n), 0]], name=f"C{n}")


def trivial() -> FiniteGroup:
    return from_permutations([], degree=1, name="C1")


def symmetric3() -> FiniteGroup:
    return from_permutations([[1, 0, 2], [1, 2, 0]], name="S3")


def klein_four() -> FiniteGroup:
    return from_permutations([[1, 0, 3, 2], [2, 3, 0, 1]], name="V4")


def direct_product(G: FiniteGroup, H: FiniteGroup, name: str = "") -> FiniteGroup:
    """Direct product with id ``(g, h) -> g * |H| + h``."""
    m = H.order
    table = [
        [G.mul(a // m, b // m) * m + H.mul(a % m, b % m) for b in range(G.order * m)]
        for a in range(G.order * m)
    ]
    return FiniteGroup(table, name=name or f"{G.name}x{H.name}")


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup
    members: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self._member_set

    @cached_property
    def _member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def index(self) -> int:
        return self.parent.order // len(self.members)

    def is_normal(self) -> bool:
        G = self.parent
        return all(G.conj(g, h) in self for g in G.generators for h in self.members)

    def __le__(self, other: Subgroup) -> bool:
        return self._member_set <= other._member_set


def subgroup_closure(G: FiniteGroup, seed: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing ``seed``."""
    gens = sorted(set(seed) - {0})
    members = {0}
    frontier = [0]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = G.mul(x, g)
                if y not in members:
                    members.add(y)
                    new.append(y)
        frontier = new
    return Subgroup(G, tuple(sorted(members)))


def whole(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, tuple(G.elements))


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, (0,))


def left_cosets(G: FiniteGroup, H: Subgroup) -> list[tuple[int, ...]]:
    """Cosets ``gH`` as sorted tuples, ordered by their minimal element."""
    seen: set[int] = set()
    cosets = []
    for g in G.elements:
        if g in seen:
            continue
        coset = tuple(sorted(G.mul(g, h) for h in H.members))
        seen.update(coset)
        cosets.append(coset)
    return cosets


def all_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Every subgroup, sorted by order then members."""
    found = {subgroup_closure(G, [g]).members for g in G.elements}
    frontier = set(found)
    while frontier:
        new = set()
        for a in frontier:
            for b in found:
                c = subgroup_closure(G, set(a) | set(b)).members
                if c not in found and c not in new:
                    new.add(c)
        found |= new
        frontier = new
    return [Subgroup(G, m) for m in sorted(found, key=lambda m: (len(m), m))]


@dataclass(frozen=True)
class GroupHom:
    source: FiniteGroup
    target: FiniteGroup
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.source.order:
            raise NotAHomomorphism("image list length does not match source order")
        if any(not 0 <= y < self.target.order for y in self.images):
            raise NotAHomomorphism("image id out of range")
        S, T, f = self.source, self.target, self.images
        for a in S.elements:
            for b in S.elements:
                if f[S.mul(a, b)] != T.mul(f[a], f[b]):
                    raise NotAHomomorphism(f"map(x*y) != map(x)*map(y) at {(a, b)}")

    def __call__(self, x: int) -> int:
        return self.images[x]

    def is_surjective(self) -> bool:
        return len(set(self.images)) == self.target.order

    def kernel(self) -> Subgroup:
        return Subgroup(self.source, tuple(x for x in self.source.elements if self.images[x] == 0))

    def fibers(self) -> tuple[tuple[int, ...], ...]:
        """Preimage of each target element, indexed by target id."""
        out: list[list[int]] = [[] for _ in self.target.elements]
        for x in self.source.elements:
            out[self.images[x]].append(x)
        return tuple(tuple(f) for f in out)

    def then(self, other: GroupHom) -> GroupHom:
        """Composite ``other ∘ self``."""
        return GroupHom(self.source, other.target, tuple(other.images[y] for y in self.images))


def identity_hom(G: FiniteGroup) -> GroupHom:
    return GroupHom(G, G, tuple(G.elements))


def act_orbit(
    G: FiniteGroup, action: Callable[[int, P], P], start: P
) -> tuple[list[P], Subgroup]:
    """Orbit of ``start`` (first-appearance order over element ids) and its stabilizer.

    The action axioms are spot-checked on the generators over the whole orbit.
    """
    if action(0, start) != start:
        raise ActionAxiomViolation("identity does not fix the start point")
    orbit: list[P] = []
    seen: set = set()
    stab = []
    for g in G.elements:
        p = action(g, start)
        if p == start:
            stab.append(g)
        if p not in seen:
            seen.add(p)
            orbit.append(p)
    for g in G.generators:
        for h in G.generators:
            gh = G.mul(g, h)
            for p in orbit:
                if action(gh, p) != action(g, action(h, p)):
                    raise ActionAxiomViolation(
                        f"(g*h).p != g.(h.p) for generators {g}, {h}"
                    )
    return orbit, Subgroup(G, tuple(stab))
