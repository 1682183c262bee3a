from __future__ import annotations

from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given, strategies as st

from rigisoc import characters as ch
from rigisoc import groups as gr
from rigisoc.errors import DenominatorExceedsLevel, LevelMismatch, TowerTooShort
from rigisoc.levels import identity_map, make_level, make_level_map


def test_parse_and_format():
    assert ch.parse_fraction("3/4") == F(3, 4)
    assert ch.parse_fraction("-1/3") == F(-1, 3)
    assert ch.format_q(F(0)) == "0/1"
    assert ch.format_qmodz(F(-1, 3)) == "2/3"
    assert ch.qmodz("5/2") == F(1, 2)


def test_character_construction(quad):
    f = ch.character(quad, ["0", "1/2"])
    assert f.vals == (F(0), F(1, 2))
    assert ch.character(quad, [F(3, 2), F(-1, 2)]).vals == (F(1, 2), F(1, 2))
    with pytest.raises(DenominatorExceedsLevel):
        ch.character(quad, [F(1, 3), 0])
    with pytest.raises(LevelMismatch):
        ch.character(quad, [0])


def test_action_vectors(quad, cubic):
    f = ch.character(quad, [0, F(1, 2)])
    assert ch.act(0, f) == f
    assert ch.act(1, f).vals == (F(1, 2), F(0))
    g = ch.character(cubic, [0, F(1, 3), F(2, 3)])
    assert ch.act(1, g).vals == (F(2, 3), F(0), F(1, 3))


def test_orbit_vectors(quad, quad6):
    c = ch.constant(quad, F(1, 2))
    assert len(ch.orbit_of(c)) == 1 and ch.stabilizer_of(c).order == 2
    f = ch.character(quad, [0, F(1, 2)])
    assert {m.vals for m in ch.orbit_of(f).members} == {(0, F(1, 2)), (F(1, 2), 0)}
    assert ch.stabilizer_of(f).order == 1
    g = ch.character(quad6, [F(1, 3), F(2, 3)])
    assert len(ch.orbit_of(g)) == 2 and ch.stabilizer_of(g).order == 1
    assert ch.canonical_rep(ch.act(1, g)) == ch.canonical_rep(g)


def test_sigma_and_s_vectors(quad, quad6):
    assert ch.sigma_and_s(ch.zero(quad)) == (F(0), 1)
    assert ch.sigma_and_s(ch.constant(quad, F(1, 2))) == (F(1, 2), 2)
    assert ch.sigma_and_s(ch.character(quad6, [F(1, 3), F(2, 3)])) == (F(0), 1)


def test_inflate_and_descend():
    L4 = make_level("z4", gr.cyclic(4), 4)
    L2 = make_level("z2", gr.cyclic(2), 2)
    m = make_level_map(L4, L2, [0, 1, 0, 1])
    f = ch.character(L2, [0, F(1, 2)])
    up = ch.inflate(f, m)
    assert up.vals == (0, F(1, 2), 0, F(1, 2))
    assert ch.descends_to(up, m) == f
    assert ch.descends_to(ch.character(L4, [0, F(1, 4), F(1, 2), F(3, 4)]), m) is None
    assert ch.inflate(f, identity_map(L2)) == f
    c = ch.constant(L4, F(1, 2))
    B = make_level("b4", gr.trivial(), 4)
    assert ch.descends_to(c, make_level_map(L4, B, [0] * 4)).vals == (F(1, 2),)


def test_absorb_vectors():
    B = make_level("b2", gr.trivial(), 2)
    Q = make_level("q2", gr.cyclic(2), 2)
    step = make_level_map(Q, B, [0, 0])
    z = ch.zero(B)
    assert ch.absorb_augmentation(z, [step]) == (B, z)
    level, g = ch.absorb_augmentation(ch.constant(B, F(1, 2)), [step])
    assert level is Q and g.vals == (F(1, 2), F(1, 2)) and ch.total_sum(g) == 0
    B3 = make_level("b6", gr.trivial(), 6)
    Q6 = make_level("q6", gr.cyclic(2), 6)
    with pytest.raises(TowerTooShort):
        ch.absorb_augmentation(ch.constant(B3, F(1, 3)), [make_level_map(Q6, B3, [0, 0])])


def test_carry_vectors(quad, quad6):
    z = ch.zero(quad)
    assert ch.carry_cocycle(z, z) == (0, 0)
    h = ch.constant(quad, F(1, 2))
    assert ch.carry_cocycle(h, h) == (1, 1)
    b = ch.character(quad6, [F(1, 3), F(2, 3)])
    assert ch.carry_cocycle(b, b) == (0, 1)


def burnside_oracle(G, values):
    # number of functions G -> values constant on the cycles of left translation
    total = 0
    for g in G.elements:
        p = G.left_translations[g]
        seen, cycles = set(), 0
        for x in G.elements:
            if x not in seen:
                cycles += 1
                y = x
                while y not in seen:
                    seen.add(y)
                    y = p[y]
        total += values ** cycles
    assert total % G.order == 0
    return total // G.order


@pytest.mark.parametrize("G", [gr.cyclic(2), gr.cyclic(3), gr.cyclic(4), gr.symmetric3(), gr.klein_four()])
@pytest.mark.parametrize("D", [1, 2, 3, 4])
def test_orbit_count_matches_cycle_burnside(G, D):
    L = make_level("t", G, D)
    assert len(ch.orbit_representatives(L)) == burnside_oracle(G, D)


def test_value_numerators_respect_bound():
    L = make_level("b12", gr.trivial(), 12)
    assert [F(k, 12) for k in ch.value_numerators(L, 4)] == [
        0, F(1, 4), F(1, 3), F(1, 2), F(2, 3), F(3, 4)
    ]


LEVELS = [
    make_level("c2_6", gr.cyclic(2), 6),
    make_level("c3_4", gr.cyclic(3), 4),
    make_level("s3_6", gr.symmetric3(), 6),
    make_level("v4_4", gr.klein_four(), 4),
]


@st.composite
def chars(draw, k=1):
    L = draw(st.sampled_from(LEVELS))
    out = [
        ch.GradingCharacter(L, draw(st.lists(st.integers(0, L.denom - 1),
                                             min_size=L.order, max_size=L.order)))
        for _ in range(k)
    ]
    g = draw(st.integers(0, L.order - 1))
    h = draw(st.integers(0, L.order - 1))
    return L, out, g, h


@given(chars())
def test_action_is_group_action(data):
    L, (f,), g, h = data
    assert ch.act(L.gal.mul(g, h), f) == ch.act(g, ch.act(h, f))
    assert ch.act(0, f) == f


@given(chars())
def test_orbit_stabilizer(data):
    L, (f,), g, _ = data
    assert len(ch.orbit_of(f)) * ch.stabilizer_of(f).order == L.order
    assert ch.sigma_and_s(ch.act(g, f)) == ch.sigma_and_s(f)
    m = ch.exponent(f)
    assert all(m * x % L.denom == 0 for x in f.nums)


@given(chars(k=2))
def test_action_is_additive(data):
    L, (f, g), x, _ = data
    assert ch.act(x, ch.add(f, g)) == ch.add(ch.act(x, f), ch.act(x, g))
    assert ch.add(f, ch.neg(f)) == ch.zero(L)


@given(chars(k=3))
def test_carry_cocycle_identity(data):
    _, (b, c, d), _, _ = data
    lhs = [x + y for x, y in zip(ch.carry_cocycle(b, c), ch.carry_cocycle(ch.add(b, c), d))]
    rhs = [x + y for x, y in zip(ch.carry_cocycle(c, d), ch.carry_cocycle(b, ch.add(c, d)))]
    assert lhs == rhs


def test_sigma_matches_coset_sum_oracle():
    # Sigma = sum over the cosets of the stabilizer, computed from coset representatives.
    for L in LEVELS[:3]:
        for f in ch.all_characters(L):
            stab = ch.stabilizer_of(f)
            cosets = gr.left_cosets(L.gal, stab)
            # f(h x) = f(x) for h in the stabilizer, so f is constant on blocks H x
            blocks = {frozenset(L.gal.mul(h, x) for h in stab.members) for x in L.gal.elements}
            total = sum(F(f.nums[min(b)], L.denom) for b in blocks) % 1
            assert total == ch.sigma_and_s(f)[0]
            assert len(blocks) == len(cosets)
