"""JSON file formats for spaces, maps, lax objects/morphisms and families.

Output is canonical: keys sorted, set families sorted by (size, members),
so loading and re-dumping a canonical file is the identity.
"""

from __future__ import annotations

import json
import os

from .errors import ParseError, SchemaError
from .famx import FamMorphism, FamObject, fam_morphism, fam_object
from .finspace import CMap, FiniteSpace, build_space, cmap
from .laxcomma import LaxMorphism, LaxObject, lax_morphism, lax_object


def load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}:{exc.lineno}: {exc.msg}") from exc


def to_json(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def _need(data, field, kind, where):
    if not isinstance(data, dict) or field not in data:
        raise SchemaError(f"{where}: missing field {field!r}")
    value = data[field]
    if kind is not None and not isinstance(value, kind):
        raise SchemaError(f"{where}: field {field!r} has the wrong type")
    return value


def space_from_dict(data, where="space") -> FiniteSpace:
    points = _need(data, "points", list, where)
    topology = _need(data, "topology", dict, where)
    kind = _need(topology, "kind", str, f"{where}.topology")
    name = data.get("name", "")
    if kind == "opens":
        opens = _need(topology, "opens", list, f"{where}.topology")
        return build_space(points, opens=[list(o) for o in opens], name=name)
    if kind == "order":
        le = _need(topology, "le", list, f"{where}.topology")
        return build_space(points, order=[tuple(p) for p in le], name=name)
    raise SchemaError(f"{where}.topology: unknown kind {kind!r}")


def space_to_dict(space: FiniteSpace) -> dict:
    if space.provenance == "opens":
        topology = {
            "kind": "opens",
            "opens": [sorted(o) for o in space.open_sets()],
        }
    else:
        topology = {
            "kind": "order",
            "le": sorted([x, y] for (x, y) in space.le if x != y),
        }
    return {"name": space.name, "points": list(space.points), "topology": topology}


def _resolve_space(value, where, relative_to=None):
    """A space field may be inline or a path to a space file."""
    if isinstance(value, str):
        path = value
        if relative_to and not os.path.isabs(path):
            path = os.path.join(os.path.dirname(relative_to), path)
        return space_from_dict(load_json(path), where=path)
    return space_from_dict(value, where=where)


def map_from_dict(data, where="map", relative_to=None) -> CMap:
    source = _resolve_space(_need(data, "source", None, where), f"{where}.source", relative_to)
    target = _resolve_space(_need(data, "target", None, where), f"{where}.target", relative_to)
    table = _need(data, "map", dict, where)
    return cmap(source, target, table)


def map_to_dict(m: CMap) -> dict:
    return {
        "source": space_to_dict(m.source),
        "target": space_to_dict(m.target),
        "map": dict(m.table),
    }


def lax_object_from_dict(data, where="object", base=None, relative_to=None) -> LaxObject:
    if base is None:
        base = _resolve_space(_need(data, "base", None, where), f"{where}.base", relative_to)
    space = _resolve_space(_need(data, "space", None, where), f"{where}.space", relative_to)
    alpha = _need(data, "alpha", dict, where)
    return lax_object(space, base, alpha)


def lax_object_to_dict(obj: LaxObject) -> dict:
    return {
        "base": space_to_dict(obj.base),
        "space": space_to_dict(obj.space),
        "alpha": dict(obj.alpha.table),
    }


def lax_morphism_from_dict(data, where="morphism", relative_to=None) -> LaxMorphism:
    base = _resolve_space(_need(data, "base", None, where), f"{where}.base", relative_to)
    src = lax_object_from_dict(
        _need(data, "source", dict, where), f"{where}.source", base, relative_to
    )
    tgt = lax_object_from_dict(
        _need(data, "target", dict, where), f"{where}.target", base, relative_to
    )
    table = _need(data, "map", dict, where)
    return lax_morphism(cmap(src.space, tgt.space, table), src, tgt)


def lax_morphism_to_dict(m: LaxMorphism) -> dict:
    return {
        "base": space_to_dict(m.source.base),
        "source": {
            "space": space_to_dict(m.source.space),
            "alpha": dict(m.source.alpha.table),
        },
        "target": {
            "space": space_to_dict(m.target.space),
            "alpha": dict(m.target.alpha.table),
        },
        "map": dict(m.underlying.table),
    }


def family_from_dict(data, where="family", relative_to=None) -> FamObject:
    base = _resolve_space(_need(data, "base", None, where), f"{where}.base", relative_to)
    index = _need(data, "index", list, where)
    values = _need(data, "values", dict, where)
    if sorted(values) != sorted(index):
        raise SchemaError(f"{where}: values not total over index")
    return fam_object(base, values)


def family_to_dict(fam: FamObject) -> dict:
    return {
        "base": space_to_dict(fam.base),
        "index": list(fam.index),
        "values": dict(fam.values),
    }


def fam_morphism_from_dict(data, where="morphism", relative_to=None) -> FamMorphism:
    base_val = _need(data, "base", None, where)
    base = _resolve_space(base_val, f"{where}.base", relative_to)
    src_data = dict(_need(data, "source", dict, where))
    tgt_data = dict(_need(data, "target", dict, where))
    src_data.setdefault("base", base_val)
    tgt_data.setdefault("base", base_val)
    values_s = _need(src_data, "values", dict, f"{where}.source")
    values_t = _need(tgt_data, "values", dict, f"{where}.target")
    src = fam_object(base, values_s)
    tgt = fam_object(base, values_t)
    table = _need(data, "map", dict, where)
    return fam_morphism(table, src, tgt)


def parallel_pair_from_dict(data, where="pair", relative_to=None):
    """A parallel pair of lax morphisms sharing source and target objects."""
    base_val = _need(data, "base", None, where)
    base = _resolve_space(base_val, f"{where}.base", relative_to)
    src = lax_object_from_dict(
        _need(data, "source", dict, where), f"{where}.source", base, relative_to
    )
    tgt = lax_object_from_dict(
        _need(data, "target", dict, where), f"{where}.target", base, relative_to
    )
    f = lax_morphism(cmap(src.space, tgt.space, _need(data, "f", dict, where)), src, tgt)
    g = lax_morphism(cmap(src.space, tgt.space, _need(data, "g", dict, where)), src, tgt)
    return f, g


def cone_from_dict(data, where="cone", relative_to=None):
    """A space with legs into lax objects, the input of an initial lift."""
    base = _resolve_space(_need(data, "base", None, where), f"{where}.base", relative_to)
    space = _resolve_space(_need(data, "space", None, where), f"{where}.space", relative_to)
    legs = []
    for i, leg in enumerate(_need(data, "legs", list, where)):
        obj = lax_object_from_dict(
            _need(leg, "target", dict, f"{where}.legs[{i}]"),
            f"{where}.legs[{i}].target",
            base,
            relative_to,
        )
        table = _need(leg, "map", dict, f"{where}.legs[{i}]")
        legs.append((cmap(space, obj.space, table), obj))
    return space, legs, base
