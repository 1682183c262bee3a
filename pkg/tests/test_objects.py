from __future__ import annotations

from collections import Counter
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from rigisoc import characters as ch
from rigisoc import groups as gr
from rigisoc import objects as ob
from rigisoc.errors import (
    IndivisibleMultiplicity,
    InvalidDimension,
    LevelMismatch,
    NonConstantOnOrbit,
    NonOrbitStableSupport,
    NotPrimitive,
    SumNotInOneOverS,
)
from rigisoc.levels import make_level, make_level_map

H2 = F(1, 2)


def vals_of(X):
    return {tuple(f.vals): d for f, d in X.dims.items()}


def convolution_oracle(X, Y):
    """Pair sums over Q/Z computed on Fraction values."""
    out = Counter()
    for a, d1 in vals_of(X).items():
        for b, d2 in vals_of(Y).items():
            out[tuple((x + y) % 1 for x, y in zip(a, b))] += d1 * d2
    return dict(out)


def S(level, *vals):
    return ob.simple_skeleton(ob.make_simple(ch.character(level, vals)))


def test_make_simple_vectors(quad):
    u = ob.make_simple(ch.zero(quad))
    assert (u.H.order, u.s, u.dim) == (2, 1, 1)
    h = ob.make_simple(ch.constant(quad, H2))
    assert (h.H.order, h.sigma, h.s, h.dim) == (2, H2, 2, 2)
    t = ob.make_simple(ch.character(quad, [0, H2]))
    assert (t.H.order, t.sigma, t.s, t.dim) == (1, H2, 2, 4)


def test_make_simple_third(quad6):
    lbl = ob.make_simple(ch.character(quad6, [F(1, 3), F(2, 3)]))
    assert (lbl.H.order, lbl.sigma, lbl.s, lbl.dim) == (1, 0, 1, 2)


def test_not_primitive_witness(quad):
    f = ch.constant(quad, H2)
    with pytest.raises(NotPrimitive) as exc:
        ob.make_simple(f, gr.trivial_subgroup(quad.gal))
    assert exc.value.witness.order == 2
    assert ob.make_simple(f, gr.whole(quad.gal)).s == 2


def test_simple_skeleton_vectors(quad):
    assert vals_of(ob.unit(quad)) == {(0, 0): 1}
    assert vals_of(S(quad, H2, H2)) == {(H2, H2): 2}
    assert vals_of(S(quad, 0, H2)) == {(0, H2): 2, (H2, 0): 2}


def test_validation_vectors(quad):
    assert vals_of(ob.make_object(quad, [([0, 0], 3)])) == {(0, 0): 3}
    with pytest.raises(NonOrbitStableSupport):
        ob.make_object(quad, [([0, H2], 1)])
    with pytest.raises(IndivisibleMultiplicity):
        ob.make_object(quad, [([H2, H2], 1)])
    with pytest.raises(NonConstantOnOrbit):
        ob.make_object(quad, [([0, H2], 2), ([H2, 0], 4)])
    with pytest.raises(InvalidDimension):
        ob.make_object(quad, [([0, 0], -1)])
    with pytest.raises(InvalidDimension):
        ob.make_object(quad, [([0, 0], 1), (["0", "0"], 1)])
    assert ob.make_object(quad, [([0, 0], 0)]) == ob.zero_object(quad)


def test_decompose_vectors(quad):
    assert [(l.rep.vals, k) for l, k in ob.decompose(ob.unit(quad, 3))] == [((0, 0), 3)]
    X = ob.make_object(quad, [([H2, H2], 4)])
    assert [(l.rep.vals, k) for l, k in ob.decompose(X)] == [((H2, H2), 2)]
    X = ob.make_object(quad, [([0, 0], 8), ([H2, H2], 8)])
    assert [(l.rep.vals, k) for l, k in ob.decompose(X)] == [((0, 0), 8), ((H2, H2), 4)]


def test_tensor_vectors(quad, quad6):
    X = S(quad, 0, H2)
    assert ob.tensor(X, ob.unit(quad)) == X
    assert vals_of(ob.tensor(S(quad, H2, H2), S(quad, H2, H2))) == {(0, 0): 4}
    assert vals_of(ob.tensor(X, X)) == {(0, 0): 8, (H2, H2): 8}
    T = S(quad6, F(1, 3), F(2, 3))
    assert vals_of(ob.tensor(T, T)) == {(0, 0): 2, (F(1, 3), F(2, 3)): 1, (F(2, 3), F(1, 3)): 1}
    parts = [(l.rep.vals, k) for l, k in ob.decompose(ob.tensor(T, T))]
    assert parts == [((0, 0), 2), ((F(1, 3), F(2, 3)), 1)]


def test_tensor_level_mismatch(quad, quad6):
    with pytest.raises(LevelMismatch):
        ob.tensor(ob.unit(quad), ob.unit(quad6))


def test_dual_vectors(quad, quad6):
    assert ob.dual(ob.unit(quad)) == ob.unit(quad)
    X = S(quad, 0, H2)
    assert ob.dual(X) == X
    T = S(quad6, F(1, 3), F(2, 3))
    assert ob.dual(T) == S(quad6, F(2, 3), F(1, 3)) == T


def test_newton_and_basic(quad):
    assert ob.is_basic(ob.unit(quad))
    assert ob.is_basic(S(quad, H2, H2))
    assert not ob.is_basic(S(quad, 0, H2))
    assert ob.newton(S(quad, 0, H2)) == S(quad, 0, H2)


def test_fiber_dimension_and_levi(quad):
    assert ob.fiber_dimension(ob.unit(quad)) == 1
    X = S(quad, 0, H2)
    assert ob.fiber_dimension(X) == 4
    assert ob.twisted_levi_of(ob.unit(quad)).factors == (ob.LeviFactor(1, 1, 1),)
    d = ob.twisted_levi_of(X)
    assert d.factors == (ob.LeviFactor(2, 2, 1),) and ob.is_elliptic_levi(d)
    d = ob.twisted_levi_of(ob.direct_sum(ob.unit(quad), S(quad, H2, H2)))
    assert len(d.factors) == 2 and not ob.is_elliptic_levi(d)
    assert d.total_dimension == 3


def test_is_simple(quad):
    assert ob.is_simple(ob.unit(quad))
    assert not ob.is_simple(ob.unit(quad, 2))
    assert ob.is_simple(S(quad, 0, H2))


def test_basic_class_objects(quad):
    G = quad.gal
    assert ob.object_of_basic_class(quad, gr.whole(G), 1, [0]) == ob.unit(quad)
    assert ob.object_of_basic_class(quad, gr.whole(G), 2, [H2]) == S(quad, H2, H2)
    # sum 0 with s = 2: not simple, two copies' worth in dimension 4 at the zero grading
    X = ob.object_of_basic_class(quad, gr.trivial_subgroup(G), 2, [0, 0])
    assert X == ob.unit(quad, 4)
    with pytest.raises(SumNotInOneOverS):
        ob.object_of_basic_class(quad, gr.whole(G), 1, [H2])


def test_end_dim_vectors(quad, quad6):
    assert ob.end_dim(ob.unit(quad)) == 1
    T = S(quad6, F(1, 3), F(2, 3))
    assert ob.end_dim(T) == 2 == ob.multiplicity(ob.tensor(T, ob.dual(T)), ob.make_simple(ch.zero(quad6)))
    assert ob.end_dim(S(quad, H2, H2)) == 4


def test_inflation():
    L4 = make_level("z4", gr.cyclic(4), 4)
    L2 = make_level("z2", gr.cyclic(2), 2)
    m = make_level_map(L4, L2, [0, 1, 0, 1])
    X = ob.inflate_object(S(L2, 0, H2), m)
    assert vals_of(X) == {(0, H2, 0, H2): 2, (H2, 0, H2, 0): 2}
    lbl = ob.inflate_label(ob.make_simple(ch.character(L2, [0, H2])), m)
    assert lbl.H.order == 2 and lbl.s == 2


def test_simple_label_counts(quad):
    assert len(ob.simple_labels(quad)) == 3
    assert len(ob.simple_labels(make_level("c3", gr.cyclic(3), 2))) == 4


LEVELS = [
    make_level("c2_6", gr.cyclic(2), 6),
    make_level("c3_4", gr.cyclic(3), 4),
    make_level("s3_2", gr.symmetric3(), 2),
    make_level("v4_4", gr.klein_four(), 4),
]


@st.composite
def objects(draw, k=2):
    L = draw(st.sampled_from(LEVELS))
    labels = ob.simple_labels(L)
    out = []
    for _ in range(k):
        parts = draw(st.lists(st.tuples(st.sampled_from(labels), st.integers(1, 3)), max_size=3))
        out.append(ob.recompose(L, parts))
    return L, out


@given(objects(k=2))
def test_tensor_matches_oracle(data):
    L, (X, Y) = data
    assert vals_of(ob.tensor(X, Y)) == convolution_oracle(X, Y)


@given(objects(k=3))
def test_tensor_laws(data):
    L, (X, Y, Z) = data
    assert ob.tensor(X, Y) == ob.tensor(Y, X)
    assert ob.tensor(ob.tensor(X, Y), Z) == ob.tensor(X, ob.tensor(Y, Z))
    assert ob.tensor(X, ob.direct_sum(Y, Z)) == ob.direct_sum(ob.tensor(X, Y), ob.tensor(X, Z))
    assert ob.fiber_dimension(ob.tensor(X, Y)) == ob.fiber_dimension(X) * ob.fiber_dimension(Y)
    assert ob.dual(ob.dual(X)) == X
    assert ob.dual(ob.tensor(X, Y)) == ob.tensor(ob.dual(X), ob.dual(Y))


@given(objects(k=1))
def test_decompose_round_trip(data):
    L, (X,) = data
    parts = ob.decompose(X)
    assert ob.recompose(L, parts) == X
    assert sum(k * lbl.dim for lbl, k in parts) == ob.fiber_dimension(X)
    assert ob.twisted_levi_of(X).total_dimension == ob.fiber_dimension(X)


@given(objects(k=1))
def test_end_dim_is_unit_multiplicity(data):
    L, (X,) = data
    one = ob.make_simple(ch.zero(L))
    assert ob.end_dim(X) == ob.multiplicity(ob.tensor(X, ob.dual(X)), one)


@st.composite
def basic_classes(draw):
    L = draw(st.sampled_from(LEVELS))
    subgroups = gr.all_subgroups(L.gal)
    H = draw(st.sampled_from(subgroups))
    m = L.order // H.order
    s = draw(st.sampled_from([k for k in range(1, L.denom + 1) if L.denom % k == 0]))
    vals = draw(st.lists(st.integers(0, L.denom - 1), min_size=m, max_size=m))
    a = [F(v, L.denom) for v in vals]
    # move the last entry so the sum lands in (1/s)Z/Z
    excess = sum(a, F(0)) * s % 1 / s
    a[-1] = (a[-1] - excess) % 1
    return L, H, s, a


@given(basic_classes())
def test_basic_class_dimension(data):
    L, H, s, a = data
    X = ob.object_of_basic_class(L, H, s, a)
    assert ob.fiber_dimension(X) == s * (L.order // H.order)
