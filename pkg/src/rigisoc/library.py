"""Bundled groups, ramification data, towers and the default workspace contents."""

from __future__ import annotations

from . import groups as gr
from .groups import GroupHom
from .symbolic import RamificationDatum, Tower, make_datum


def unramified(n: int) -> RamificationDatum:
    G = gr.cyclic(n)
    return make_datum(G, [0], G.generators[0] if n > 1 else 0, n, name=f"unramified_Z{n}")


def totally_ramified(n: int) -> RamificationDatum:
    G = gr.cyclic(n)
    return make_datum(G, G.elements, 0, 1, name=f"ramified_Z{n}")


def biquadratic() -> RamificationDatum:
    # Klein four ids: 0 = e, 1 = a, 2 = b, 3 = ab; inertia <a>, frobenius image b.
    G = gr.klein_four()
    return make_datum(G, [0, 1], 2, 2, name="biquadratic")


def bundled_data() -> dict[str, RamificationDatum]:
    data = {
        "unramified_quadratic": unramified(2),
        "unramified_cubic": unramified(3),
        "ramified_quadratic": totally_ramified(2),
        "ramified_cubic": totally_ramified(3),
        "biquadratic": biquadratic(),
    }
    for name, d in data.items():
        object.__setattr__(d, "name", name)
    return data


def biquadratic_over_ramified_quadratic() -> Tower:
    fine = biquadratic()
    coarse = totally_ramified(2)
    # a -> generator, b -> identity
    proj = GroupHom(fine.gal, coarse.gal, (0, 1, 0, 1))
    return Tower(fine, coarse, proj, name="biquadratic/ramified_quadratic")


def trivial_tower(d: RamificationDatum) -> Tower:
    return Tower(d, d, gr.identity_hom(d.gal), name=f"{d.name}/{d.name}")


def bundled_towers() -> dict[str, Tower]:
    t = biquadratic_over_ramified_quadratic()
    return {t.name: t}
