"""JSON (de)serialization and the named workspace used by the command line."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from . import characters as ch
from . import groups as gr
from .bridges import IsocrystalDatum, isocrystal
from .characters import GradingCharacter, format_q
from .cohomology import BasicCohGroup
from .errors import InvalidGroup, LevelMismatch, UnknownName
from .levels import Level, LevelMap, make_level, make_level_map
from .library import bundled_data, bundled_towers
from .objects import SimpleLabel, SkeletonObject, make_object, make_simple, simple_skeleton
from .symbolic import RamificationDatum, Tower, make_datum

ENV_VAR = "RIGISOC_WORKSPACE"


# -- groups ----------------------------------------------------------------------

def group_from_json(obj: Any) -> gr.FiniteGroup:
    if not isinstance(obj, dict):
        raise InvalidGroup("group must be an object")
    if "permutation_generators" in obj:
        gens = obj["permutation_generators"]
        degree = obj.get("degree")
        if degree is None and not gens:
            degree = 1
        return gr.from_permutations(gens, degree)
    if "mult_table" in obj:
        return gr.from_mult_table(obj["mult_table"])
    raise InvalidGroup("group needs 'permutation_generators' or 'mult_table'")


def group_to_json(G: gr.FiniteGroup) -> dict:
    return {"mult_table": [list(row) for row in G.table]}


# -- characters, objects, labels ----------------------------------------------------

def char_to_json(f: GradingCharacter) -> list[str]:
    return f.to_strings()


def object_to_json(X: SkeletonObject) -> dict:
    return {
        "level": X.level.name,
        "dims": [
            {"char": GradingCharacter(X.level, c).to_strings(), "dim": d}
            for c, d in X.raw.items()
        ],
    }


def label_to_json(lbl: SimpleLabel) -> dict:
    return {
        "level": lbl.level.name,
        "rep": lbl.rep.to_strings(),
        "index": lbl.index,
        "s": lbl.s,
        "sigma": format_q(lbl.sigma),
        "dim": lbl.dim,
    }


def isocrystal_from_json(obj: dict) -> IsocrystalDatum:
    return isocrystal((item["slope"], item["dim"]) for item in obj["slopes"])


def isocrystal_to_json(d: IsocrystalDatum) -> dict:
    return {"slopes": [{"slope": format_q(lam), "dim": dim} for lam, dim in d.slopes]}


def cohgroup_from_json(obj: dict) -> BasicCohGroup:
    return BasicCohGroup(int(obj["m"]), int(obj["s"]))


def datum_from_json(obj: dict, name: str = "") -> RamificationDatum:
    G = group_from_json(obj["group"])
    return make_datum(G, obj["inertia"], int(obj["frob_image"]), int(obj["f_degree"]), name)


def datum_to_json(d: RamificationDatum) -> dict:
    return {
        "group": group_to_json(d.gal),
        "inertia": list(d.inertia.members),
        "frob_image": d.frob_image,
        "f_degree": d.f_degree,
    }


# -- workspace ---------------------------------------------------------------------------

@dataclass
class Workspace:
    levels: dict[str, Level] = field(default_factory=dict)
    maps: list[LevelMap] = field(default_factory=list)
    objects: dict[str, SkeletonObject] = field(default_factory=dict)
    data: dict[str, RamificationDatum] = field(default_factory=dict)
    towers: dict[str, Tower] = field(default_factory=dict)

    def level(self, name: str) -> Level:
        try:
            return self.levels[name]
        except KeyError:
            raise UnknownName(f"no level named {name!r}") from None

    def datum(self, name: str) -> RamificationDatum:
        try:
            return self.data[name]
        except KeyError:
            raise UnknownName(f"no ramification datum named {name!r}") from None

    def maps_from(self, level: Level) -> list[LevelMap]:
        return [m for m in self.maps if m.fine is level]

    def resolve_object(self, token: str, level: Level | None = None) -> SkeletonObject:
        """A named object, or an inline character ``"v1,v2,..."`` read as its simple."""
        if token in self.objects:
            X = self.objects[token]
            if level is not None and X.level is not level:
                raise LevelMismatch(
                    f"object {token!r} lives at {X.level.name}, not {level.name}"
                )
            return X
        if level is None:
            raise UnknownName(f"no object named {token!r} (inline characters need --level)")
        try:
            vals = [ch.parse_fraction(v) for v in token.split(",")]
        except (ValueError, ZeroDivisionError):
            raise UnknownName(f"no object named {token!r}") from None
        return simple_skeleton(make_simple(ch.character(level, vals)))

    def object_from_json(self, obj: dict) -> SkeletonObject:
        level = self.level(obj["level"])
        return make_object(level, [(item["char"], item["dim"]) for item in obj["dims"]])


def workspace_from_json(doc: dict) -> Workspace:
    ws = Workspace()
    level_docs = doc.get("levels", [])
    for item in level_docs:
        name = item["name"]
        if name in ws.levels:
            raise UnknownName(f"level {name!r} declared twice")
        ws.levels[name] = make_level(name, group_from_json(item["group"]), int(item["denom"]))
    for item in level_docs:
        fine = ws.levels[item["name"]]
        for m in item.get("maps", []):
            ws.maps.append(make_level_map(fine, ws.level(m["coarse"]), m["proj"]))
    ws.data.update(bundled_data())
    for name, d in doc.get("data", {}).items():
        ws.data[name] = datum_from_json(d, name)
    ws.towers.update(bundled_towers())
    for name, obj in doc.get("objects", {}).items():
        ws.objects[name] = ws.object_from_json(obj)
    return ws


def _sign_images(G: gr.FiniteGroup) -> list[int]:
    out = []
    for p in G.perms:
        seen, parity = set(), 0
        for i in range(len(p)):
            if i in seen:
                continue
            j, length = i, 0
            while j not in seen:
                seen.add(j)
                j = p[j]
                length += 1
            parity ^= (length - 1) & 1
        out.append(parity)
    return out


def default_workspace_json() -> dict:
    s3 = gr.symmetric3()
    return {
        "levels": [
            {"name": "base", "group": {"permutation_generators": []}, "denom": 1},
            {
                "name": "quad",
                "group": {"permutation_generators": [[1, 0]]},
                "denom": 2,
                "maps": [{"coarse": "base", "proj": [0, 0]}],
            },
            {
                "name": "quad6",
                "group": {"permutation_generators": [[1, 0]]},
                "denom": 6,
                "maps": [{"coarse": "quad", "proj": [0, 1]}],
            },
            {
                "name": "cubic",
                "group": {"permutation_generators": [[1, 2, 0]]},
                "denom": 3,
                "maps": [{"coarse": "base", "proj": [0, 0, 0]}],
            },
            {
                "name": "s3",
                "group": {"permutation_generators": [[1, 0, 2], [1, 2, 0]]},
                "denom": 6,
                "maps": [
                    {"coarse": "quad", "proj": _sign_images(s3)},
                    {"coarse": "base", "proj": [0] * 6},
                ],
            },
        ],
        "objects": {
            "unit": {"level": "quad", "dims": [{"char": ["0/1", "0/1"], "dim": 1}]},
            "S_half": {"level": "quad", "dims": [{"char": ["1/2", "1/2"], "dim": 2}]},
            "S_0_half": {
                "level": "quad",
                "dims": [
                    {"char": ["0/1", "1/2"], "dim": 2},
                    {"char": ["1/2", "0/1"], "dim": 2},
                ],
            },
            "S_third": {
                "level": "quad6",
                "dims": [
                    {"char": ["1/3", "2/3"], "dim": 1},
                    {"char": ["2/3", "1/3"], "dim": 1},
                ],
            },
            "unit_base": {"level": "base", "dims": [{"char": ["0/1"], "dim": 1}]},
        },
    }


def load_workspace(path: str | os.PathLike | None = None) -> Workspace:
    """Load from ``path``, else from ``$RIGISOC_WORKSPACE``, else the built-in default."""
    path = path or os.environ.get(ENV_VAR)
    if not path:
        return workspace_from_json(default_workspace_json())
    with open(Path(path), encoding="utf-8") as fh:
        return workspace_from_json(json.load(fh))
