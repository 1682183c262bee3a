"""Term-level model of the graded coefficient ring and its Weil-group action.

Coefficients are Laurent monomials in the formal symbols ``sigma(pi)``, one per
element ``sigma`` of the Galois group, where ``pi`` stands for the chosen
anti-uniformizer.  A ring element is a finite integer combination of terms
``(grading vector, monomial)``; both vectors are indexed by group element ids.

The Weil group is modelled as ``inertia x| Z``: the pair ``(w, n)`` means
``w * frob^n`` and projects to ``w * fbar^n`` in the Galois group.  Field
automorphisms move symbols by left multiplication of their index.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .errors import (
    InvalidDatum,
    NoCanonicalFrobenius,
    RewriteNotWellDefined,
    SectionNotWellDefined,
)
from .groups import FiniteGroup, GroupHom, Subgroup, subgroup_closure
from .reports import CheckReport

Vec = tuple[int, ...]
Term = tuple[Vec, Vec]  # (grading, symbol exponents)
RElement = dict[Term, int]


# -- ramification data ---------------------------------------------------------

@dataclass(frozen=True, eq=False)
class RamificationDatum:
    gal: FiniteGroup
    inertia: Subgroup
    frob_image: int
    f_degree: int
    name: str = ""

    def __post_init__(self) -> None:
        G, I, fb = self.gal, self.inertia, self.frob_image
        if I.parent is not G:
            raise InvalidDatum("inertia is not a subgroup of the datum's group")
        if not 0 <= fb < G.order:
            raise InvalidDatum(f"frobenius image {fb} is not an element id")
        if not all(G.conj(g, w) in I for g in G.elements for w in I.members):
            raise InvalidDatum("inertia subgroup is not normal")
        if subgroup_closure(G, [*I.members, fb]).order != G.order:
            raise InvalidDatum("inertia and the frobenius image do not generate the group")
        if self.f_degree < 1 or G.power(fb, self.f_degree) not in I:
            raise NoCanonicalFrobenius(
                f"frobenius image to the power {self.f_degree} is not in inertia"
            )
        if self.f_degree * I.order != G.order:
            raise InvalidDatum(
                f"residue degree {self.f_degree} differs from [G:inertia] = {G.order // I.order}"
            )

    def phi(self, w: int) -> int:
        """Conjugation by the frobenius image, an automorphism of inertia."""
        return self.gal.conj(self.frob_image, w)

    @property
    def inertia_mask(self) -> tuple[bool, ...]:
        return tuple(g in self.inertia for g in self.gal.elements)


def make_datum(
    gal: FiniteGroup, inertia: Iterable[int], frob_image: int, f_degree: int, name: str = ""
) -> RamificationDatum:
    members = tuple(sorted(set(inertia)))
    if subgroup_closure(gal, members).members != members:
        raise InvalidDatum("inertia set is not a subgroup")
    return RamificationDatum(gal, Subgroup(gal, members), frob_image, f_degree, name)


# -- the Weil group stand-in --------------------------------------------------------

@dataclass(frozen=True)
class WElement:
    omega: int
    n: int


def w_mul(d: RamificationDatum, x: WElement, y: WElement) -> WElement:
    G = d.gal
    # phi^n is conjugation by fbar^n, for either sign of n
    twisted = G.conj(G.power(d.frob_image, x.n), y.omega)
    return WElement(G.mul(x.omega, twisted), x.n + y.n)


def w_project(d: RamificationDatum, x: WElement) -> int:
    return d.gal.mul(x.omega, d.gal.power(d.frob_image, x.n))


def w_identity() -> WElement:
    return WElement(0, 0)


def w_elements(d: RamificationDatum, bound: int) -> list[WElement]:
    return [WElement(w, n) for n in range(-bound, bound + 1) for w in d.inertia.members]


def canonical_frobenius(d: RamificationDatum) -> WElement:
    """The element ``(fbar^-f, f)``: ``f`` frobenius steps followed by the inertia
    element that brings the projection back to the identity."""
    G = d.gal
    w = G.power(d.frob_image, -d.f_degree)
    if w not in d.inertia:
        raise NoCanonicalFrobenius("fbar^f is not in inertia")
    return WElement(w, d.f_degree)


# -- ring arithmetic ----------------------------------------------------------------

def basis(grading: Sequence[int], monomial: Sequence[int] | None = None) -> RElement:
    g = tuple(grading)
    mono = tuple(monomial) if monomial is not None else (0,) * len(g)
    return {(g, mono): 1}


def r_add(x: RElement, y: RElement) -> RElement:
    out = dict(x)
    for t, c in y.items():
        v = out.get(t, 0) + c
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return out


def r_multiply(x: RElement, y: RElement) -> RElement:
    """Gradings add and monomials multiply."""
    out: RElement = {}
    for (b1, m1), c1 in x.items():
        for (b2, m2), c2 in y.items():
            t = (
                tuple(u + v for u, v in zip(b1, b2)),
                tuple(u + v for u, v in zip(m1, m2)),
            )
            v = out.get(t, 0) + c1 * c2
            if v:
                out[t] = v
            else:
                out.pop(t, None)
    return out


def _translate(G: FiniteGroup, g: int, v: Vec) -> Vec:
    """``v'[t] = v[g^-1 t]``: move the entry at ``s`` to ``g s``."""
    p = G.left_translations[g]
    return tuple(v[y] for y in p)


def _map_terms(x: RElement, fn: Callable[[Vec, Vec], Term]) -> RElement:
    out: RElement = {}
    for (b, m), c in x.items():
        t = fn(b, m)
        out[t] = out.get(t, 0) + c
    return {t: c for t, c in out.items() if c}


def inertia_act(d: RamificationDatum, w: int, x: RElement) -> RElement:
    G = d.gal
    return _map_terms(x, lambda b, m: (_translate(G, w, b), _translate(G, w, m)))


def frobenius_step(d: RamificationDatum, x: RElement, frob_image: int | None = None) -> RElement:
    """One frobenius: grading ``b -> b(fbar^-1 .)`` with the scalar
    ``prod_{s in inertia} s(pi)^{b(fbar^-1 s)}`` and symbols moved by ``fbar``."""
    G = d.gal
    fb = d.frob_image if frob_image is None else frob_image
    mask = d.inertia_mask

    def step(b: Vec, m: Vec) -> Term:
        nb = _translate(G, fb, b)
        nm = _translate(G, fb, m)
        nm = tuple(e + (nb[t] if mask[t] else 0) for t, e in enumerate(nm))
        return nb, nm

    return _map_terms(x, step)


def frobenius_inverse_step(d: RamificationDatum, x: RElement) -> RElement:
    """Inverse frobenius: grading ``b -> b(fbar .)`` with the scalar
    ``prod_{s in inertia} (fbar^-1 s)(pi)^{-b(s)}``."""
    G = d.gal
    fi = G.inv(d.frob_image)
    # the scalar lives on the coset fbar^-1 * inertia, where b(s) = nb(fbar^-1 s)
    shifted = {G.mul(fi, w) for w in d.inertia.members}
    mask = tuple(t in shifted for t in G.elements)

    def step(b: Vec, m: Vec) -> Term:
        nb = _translate(G, fi, b)
        nm = _translate(G, fi, m)
        nm = tuple(e - (nb[t] if mask[t] else 0) for t, e in enumerate(nm))
        return nb, nm

    return _map_terms(x, step)


def w_act(d: RamificationDatum, w: WElement, x: RElement) -> RElement:
    """Action of ``(omega, n)``: ``n`` frobenius steps, then inertia ``omega``."""
    y = x
    if w.n >= 0:
        for _ in range(w.n):
            y = frobenius_step(d, y)
    else:
        for _ in range(-w.n):
            y = frobenius_inverse_step(d, y)
    return inertia_act(d, w.omega, y)


ActFn = Callable[[RamificationDatum, WElement, RElement], RElement]


# -- serialization helpers for reports -------------------------------------------------

def r_to_json(x: RElement) -> list[dict]:
    return [
        {"grading": list(b), "symbols": list(m), "coeff": c}
        for (b, m), c in sorted(x.items())
    ]


def _w_json(w: WElement) -> dict:
    return {"omega": w.omega, "n": w.n}


def _test_elements(d: RamificationDatum, entries: Sequence[int]) -> Iterator[RElement]:
    n = d.gal.order
    pi = tuple(int(i == 0) for i in range(n))
    for b in product(entries, repeat=n):
        yield basis(b, (0,) * n)
        yield basis(b, pi)


# -- checks -----------------------------------------------------------------------------

def check_action_homomorphism(
    d: RamificationDatum, bound: int = 2, act: ActFn | None = None
) -> CheckReport:
    """``act(w1 w2, x) == act(w1, act(w2, x))`` for ``|n| <= bound``."""
    act = act or w_act
    ws = w_elements(d, bound)
    xs = list(_test_elements(d, (-1, 0, 1)))
    name = f"action_homomorphism({d.name or 'datum'}, L={bound})"
    first = {(w, i): act(d, w, x) for w in ws for i, x in enumerate(xs)}
    for w1 in ws:
        for w2 in ws:
            w12 = w_mul(d, w1, w2)
            for i, x in enumerate(xs):
                lhs = act(d, w12, x)
                rhs = act(d, w1, first[(w2, i)])
                if lhs != rhs:
                    return CheckReport(name, False, {
                        "w1": _w_json(w1), "w2": _w_json(w2), "x": r_to_json(x),
                        "product_action": r_to_json(lhs), "composed_action": r_to_json(rhs),
                    })
    return CheckReport(name, True, None)


def check_lift_independence(d: RamificationDatum) -> CheckReport:
    """Acting by ``w * frob`` agrees with the frobenius recipe built from the lift ``w * fbar``."""
    name = f"lift_independence({d.name or 'datum'})"
    G = d.gal
    for w in d.inertia.members:
        alt = G.mul(w, d.frob_image)
        for x in _test_elements(d, (-1, 0, 1)):
            lhs = w_act(d, WElement(w, 1), x)
            rhs = frobenius_step(d, x, frob_image=alt)
            if lhs != rhs:
                return CheckReport(name, False, {
                    "omega": w, "x": r_to_json(x),
                    "composite": r_to_json(lhs), "alternative_lift": r_to_json(rhs),
                })
    return CheckReport(name, True, None)


def check_canonical_frobenius(d: RamificationDatum) -> CheckReport:
    """The canonical element fixes every grading and scales ``1_b`` by ``prod_s s(pi)^{b_s}``."""
    fe = canonical_frobenius(d)
    name = f"canonical_frobenius({d.name or 'datum'})"
    n = d.gal.order
    for b in product(range(-2, 3), repeat=n):
        got = w_act(d, fe, basis(b))
        want = {(b, b): 1}
        if got != want:
            return CheckReport(name, False, {
                "b": list(b), "got": r_to_json(got), "expected": r_to_json(want),
            })
    return CheckReport(name, True, None)


def section(d: RamificationDatum) -> list[WElement]:
    """``s(g) = (g fbar^-n, n)`` with the least ``n`` in ``[0, f)`` making it valid."""
    G = d.gal
    out = []
    for g in G.elements:
        for n in range(d.f_degree):
            w = G.mul(g, G.power(d.frob_image, -n))
            if w in d.inertia:
                out.append(WElement(w, n))
                break
        else:
            raise SectionNotWellDefined(f"no normal form for element {g}")
    return out


def section_cocycle(d: RamificationDatum) -> list[list[int]]:
    """``c[g1][g2]`` with ``s(g1) s(g2) = fE^c s(g1 g2)``."""
    G = d.gal
    s = section(d)
    fe = canonical_frobenius(d)
    f = d.f_degree
    table = []
    for g1 in G.elements:
        row = []
        for g2 in G.elements:
            lhs = w_mul(d, s[g1], s[g2])
            g12 = G.mul(g1, g2)
            k, r = divmod(lhs.n - s[g12].n, f)
            if r:
                raise SectionNotWellDefined(f"exponent gap at {(g1, g2)} is not a multiple of {f}")
            rhs = s[g12]
            power = fe if k >= 0 else WElement(G.power(fe.omega, -1), -f)
            for _ in range(abs(k)):
                rhs = w_mul(d, power, rhs)
            if rhs != lhs:
                raise SectionNotWellDefined(f"normal form mismatch at {(g1, g2)}")
            row.append(k)
        table.append(row)
    return table


def check_mu_cocycle(d: RamificationDatum) -> CheckReport:
    """``c(g3, g2 g1) + c(g2, g1) == c(g3 g2, g1) + c(g3, g2)`` for all triples."""
    G = d.gal
    c = section_cocycle(d)
    name = f"mu_cocycle({d.name or 'datum'})"
    for g3, g2, g1 in product(G.elements, repeat=3):
        lhs = c[g3][G.mul(g2, g1)] + c[g2][g1]
        rhs = c[G.mul(g3, g2)][g1] + c[g3][g2]
        if lhs != rhs:
            return CheckReport(name, False, {"triple": [g3, g2, g1], "lhs": lhs, "rhs": rhs})
    return CheckReport(name, True, None)


def check_central(d: RamificationDatum, bound: int = 2) -> CheckReport:
    fe = canonical_frobenius(d)
    name = f"canonical_frobenius_central({d.name or 'datum'})"
    for w in w_elements(d, bound):
        if w_mul(d, fe, w) != w_mul(d, w, fe):
            return CheckReport(name, False, {"w": _w_json(w)})
    return CheckReport(name, True, None)


# -- transition between levels ---------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Tower:
    """A fine datum over a coarse one with the projection between their groups."""

    fine: RamificationDatum
    coarse: RamificationDatum
    proj: GroupHom
    name: str = ""

    def __post_init__(self) -> None:
        p = self.proj
        if p.source is not self.fine.gal or p.target is not self.coarse.gal:
            raise InvalidDatum("projection does not run between the data's groups")
        if not p.is_surjective():
            raise InvalidDatum("projection is not onto")
        if p(self.fine.frob_image) != self.coarse.frob_image:
            raise InvalidDatum("projection does not carry frobenius image to frobenius image")
        if sorted({p(w) for w in self.fine.inertia.members}) != list(self.coarse.inertia.members):
            raise InvalidDatum("projection does not carry inertia onto inertia")

    @property
    def ramified_kernel(self) -> tuple[int, ...]:
        """Inertia elements over the identity: the group of the totally ramified top layer."""
        return tuple(w for w in self.fine.inertia.members if self.proj(w) == 0)


Rewrite = Callable[[Tower, int], Vec]


def norm_rewrite(tower: Tower, sigma: int) -> Vec:
    """Monomial over the fine group equal to ``sigma(pi_E)``, i.e. ``prod_t (lift t)(pi_K)``
    over the ramified kernel.  With ``sigma = omega fbar_E^n`` in normal form, lifts are
    ``omega' fbar_K^n`` with ``omega'`` an inertia element over ``omega``."""
    K = tower.fine.gal
    E = tower.coarse
    omega, n = section(E)[sigma].omega, section(E)[sigma].n
    top = K.power(tower.fine.frob_image, n)
    lifts = [K.mul(x, top) for x in tower.fine.inertia.members if tower.proj(x) == omega]
    results = set()
    for lift in lifts:
        m = [0] * K.order
        for t in tower.ramified_kernel:
            m[K.mul(lift, t)] += 1
        results.add(tuple(m))
    if len(results) != 1:
        raise RewriteNotWellDefined(f"rewrite of symbol {sigma} depends on the lift")
    return results.pop()


def rewrite_monomial(tower: Tower, mono: Vec, rewrite: Rewrite | None = None) -> Vec:
    rewrite = rewrite or norm_rewrite
    out = [0] * tower.fine.gal.order
    for sigma, e in enumerate(mono):
        if e:
            for t, k in enumerate(rewrite(tower, sigma)):
                out[t] += e * k
    return tuple(out)


def check_transition_scalar(tower: Tower, rewrite: Rewrite | None = None) -> CheckReport:
    """Fine frobenius on an inflated grading equals the rewritten coarse frobenius."""
    p = tower.proj.images
    name = f"transition_scalar({tower.name or 'tower'})"
    for b in product((-1, 0, 1), repeat=tower.coarse.gal.order):
        c = tuple(b[p[t]] for t in tower.fine.gal.elements)
        fine = frobenius_step(tower.fine, basis(c))
        coarse = frobenius_step(tower.coarse, basis(b))
        pushed: RElement = {}
        for (g, m), k in coarse.items():
            t = (tuple(g[p[x]] for x in tower.fine.gal.elements), rewrite_monomial(tower, m, rewrite))
            pushed[t] = pushed.get(t, 0) + k
        if fine != pushed:
            return CheckReport(name, False, {
                "b": list(b), "fine": r_to_json(fine), "coarse_rewritten": r_to_json(pushed),
            })
    return CheckReport(name, True, None)


def descent_suite(d: RamificationDatum, bound: int = 2) -> list[CheckReport]:
    return [
        check_action_homomorphism(d, bound),
        check_lift_independence(d),
        check_canonical_frobenius(d),
        check_mu_cocycle(d),
    ]
