"""Group, scene and report files."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .errors import InputError
from .permgroup import PermGroup, Permutation

REPORT_SCHEMA_VERSION = 1


@dataclass
class GroupFile:
    """A parsed group file: the group, its named subgroups and any extra metadata."""

    name: str
    group: PermGroup
    subgroups: dict[str, PermGroup] = field(default_factory=dict)
    meta: dict[str, Any] = field(default_factory=dict)

    def subgroup(self, name: str) -> PermGroup:
        if name not in self.subgroups:
            raise InputError(f"group file {self.name!r} declares no subgroup {name!r}")
        return self.subgroups[name]


def _perm(degree: int, spec) -> Permutation:
    if not isinstance(spec, list) or not all(isinstance(c, list) for c in spec):
        raise InputError(f"expected a list of cycles, got {spec!r}")
    try:
        return Permutation.from_cycles(degree, spec)
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad permutation {spec!r}: {exc}") from exc


def parse_group(obj: dict, name: str = "") -> GroupFile:
    if not isinstance(obj, dict):
        raise InputError("group file must hold a JSON object")
    try:
        degree = int(obj["degree"])
        gens_spec = obj.get("generators", [])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"group file needs an integer 'degree': {exc}") from exc
    if degree < 1:
        raise InputError("degree must be positive")
    gens = [_perm(degree, g) for g in gens_spec]
    G = PermGroup(degree, gens)
    subgroups = {}
    for sub_name, items in (obj.get("subgroups") or {}).items():
        if not isinstance(items, list):
            raise InputError(f"subgroup {sub_name!r} must be a list")
        sub_gens = []
        for item in items:
            if isinstance(item, int):
                if not 0 <= item < len(gens):
                    raise InputError(f"subgroup {sub_name!r} refers to missing generator {item}")
                sub_gens.append(gens[item])
            else:
                sub_gens.append(_perm(degree, item))
        H = PermGroup(degree, sub_gens)
        if not H.is_subgroup_of(G):
            raise InputError(f"subgroup {sub_name!r} is not contained in the group")
        subgroups[sub_name] = H
    meta = {k: v for k, v in obj.items() if k not in ("degree", "generators", "subgroups")}
    return GroupFile(obj.get("name", name), G, subgroups, meta)


def load_group(path: str | Path) -> GroupFile:
    path = Path(path)
    try:
        obj = json.loads(path.read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    return parse_group(obj, path.stem)


def group_to_json(G: PermGroup, subgroups: dict[str, PermGroup] | None = None, **meta) -> dict:
    out: dict[str, Any] = dict(meta)
    out["degree"] = G.degree
    out["generators"] = [g.cycles() for g in G.generators]
    if subgroups:
        out["subgroups"] = {k: [h.cycles() for h in H.generators] for k, H in subgroups.items()}
    return out


def scene_from_file(gf: GroupFile, scene: str | None = None, p: int | None = None):
    """Build an ActionScene from named subgroups (optionally a named scene entry)."""
    from .correspond import ActionScene

    names = {"G": "G", "N": "N", "P": "P"}
    prime = gf.meta.get("p")
    if scene is not None:
        scenes = gf.meta.get("scenes") or {}
        if scene not in scenes:
            raise InputError(f"no scene named {scene!r}")
        entry = scenes[scene]
        names.update({k: entry[k] for k in ("G", "N", "P") if k in entry})
        prime = entry.get("p", prime)
    if p is not None:
        prime = p
    if prime is None:
        raise InputError("no prime given for the scene")
    return ActionScene(gf.group, gf.subgroup(names["G"]), gf.subgroup(names["N"]),
                       gf.subgroup(names["P"]), int(prime), scene or gf.name)


def dump_report(payload: dict, path: str | Path | None) -> str:
    text = json.dumps(payload, indent=2, sort_keys=True, default=str)
    if path is not None:
        Path(path).write_text(text + "\n")
    return text
