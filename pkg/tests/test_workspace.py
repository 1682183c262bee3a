from __future__ import annotations

import json

import pytest
from hypothesis import given, strategies as st

from rigisoc import bridges as br
from rigisoc import groups as gr
from rigisoc import library as lib
from rigisoc import objects as ob
from rigisoc import workspace as wsm
from rigisoc.errors import InvalidGroup, LevelMismatch, UnknownName


def test_default_workspace_contents():
    ws = wsm.load_workspace()
    assert set(ws.levels) == {"base", "quad", "quad6", "cubic", "s3"}
    assert {m.coarse.name for m in ws.maps_from(ws.level("s3"))} == {"quad", "base"}
    assert set(lib.bundled_data()) <= set(ws.data)
    assert ob.fiber_dimension(ws.objects["S_0_half"]) == 4


def test_group_round_trip():
    for G in (gr.symmetric3(), gr.klein_four(), gr.cyclic(5)):
        H = wsm.group_from_json(json.loads(json.dumps(wsm.group_to_json(G))))
        assert H.table == G.table
    with pytest.raises(InvalidGroup):
        wsm.group_from_json({"elements": []})


def test_datum_round_trip():
    for d in lib.bundled_data().values():
        e = wsm.datum_from_json(json.loads(json.dumps(wsm.datum_to_json(d))), d.name)
        assert e.gal.table == d.gal.table
        assert (e.inertia.members, e.frob_image, e.f_degree) == (d.inertia.members, d.frob_image, d.f_degree)


def test_isocrystal_round_trip():
    d = br.isocrystal([("1/3", 3), ("-1/2", 4), (0, 1)])
    assert wsm.isocrystal_from_json(wsm.isocrystal_to_json(d)) == d


def test_resolve_object():
    ws = wsm.load_workspace()
    quad = ws.level("quad")
    assert ws.resolve_object("S_half", quad) is ws.objects["S_half"]
    with pytest.raises(LevelMismatch):
        ws.resolve_object("S_half", ws.level("base"))
    with pytest.raises(UnknownName):
        ws.resolve_object("nothing")
    assert ws.resolve_object("1/2,1/2", quad) == ws.objects["S_half"]


def test_unknown_names():
    ws = wsm.load_workspace()
    with pytest.raises(UnknownName):
        ws.level("nope")
    with pytest.raises(UnknownName):
        ws.datum("nope")
    with pytest.raises(UnknownName):
        wsm.workspace_from_json({"levels": [
            {"name": "a", "group": {"permutation_generators": []}, "denom": 1},
            {"name": "a", "group": {"permutation_generators": []}, "denom": 1},
        ]})


WS = wsm.load_workspace()


@given(st.sampled_from(["quad", "quad6", "cubic", "s3"]), st.data())
def test_object_json_round_trip(name, data):
    L = WS.level(name)
    labels = ob.simple_labels(L, 3)
    parts = data.draw(st.lists(st.tuples(st.sampled_from(labels), st.integers(1, 3)), max_size=3))
    X = ob.recompose(L, parts)
    doc = json.loads(json.dumps(wsm.object_to_json(X)))
    assert WS.object_from_json(doc) == X
