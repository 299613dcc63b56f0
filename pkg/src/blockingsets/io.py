"""JSON formats for geometries, point sets and designs.

PointSet documents look like::

    {"geometry": {"type": "PG", "dim": 2, "field": {"p": 2, "k": 2, "modulus": [1, 1, 1]}},
     "points": [[0, 1, 1], ...],
     "provenance": {"construction": "hermitian-curve", "q": 4}}

with coordinates as integer field encodings.  A point set on an abstract
design uses ``{"geometry": {"type": "design", "v": ..., "blocks": [...]}}``
and lists point indices instead of coordinates.
"""

from __future__ import annotations

import json
from pathlib import Path

from .blocking import PointSet
from .designs import Design, design_from_blocks
from .errors import GeometryError, GeometryMismatch, ParseError
from .galois import Field
from .geometry import ProjectiveSpace, pg_create


def _read(source) -> dict:
    if isinstance(source, dict):
        return source
    try:
        if isinstance(source, Path) or not str(source).lstrip().startswith(("{", "[")):
            text = Path(source).read_text()
        else:
            text = str(source)
        data = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ParseError("top-level JSON value must be an object")
    return data


def geometry_to_json(geometry) -> dict:
    if isinstance(geometry, ProjectiveSpace):
        return geometry.to_json()
    return {"type": "design", **geometry.to_json()}


def geometry_from_json(data: dict):
    try:
        kind = data["type"]
        if kind == "PG":
            field = data["field"]
            try:
                F = Field.from_json(field)
            except (GeometryError, ValueError) as exc:
                raise GeometryMismatch(f"bad field description {field}: {exc}") from exc
            return pg_create(int(data["dim"]), F)
        if kind == "design":
            return design_from_blocks(int(data["v"]), data["blocks"])
    except (KeyError, TypeError) as exc:
        raise ParseError(f"incomplete geometry description: {exc}") from exc
    raise GeometryMismatch(f"unknown geometry type {data.get('type')!r}")


def point_set_to_json(S: PointSet) -> dict:
    geom = S.geometry
    out = {"geometry": geometry_to_json(geom)}
    if isinstance(geom, ProjectiveSpace):
        out["points"] = [list(p.coords) for p in S.points()]
    else:
        out["points"] = S.indices()
    out["provenance"] = S.provenance or {}
    return out


def load_point_set(source) -> PointSet:
    data = _read(source)
    if "geometry" not in data or "points" not in data:
        raise ParseError("a point set needs 'geometry' and 'points'")
    geom = geometry_from_json(data["geometry"])
    raw = data["points"]
    if not isinstance(raw, list):
        raise ParseError("'points' must be a list")
    indices = []
    for entry in raw:
        if isinstance(geom, ProjectiveSpace):
            if not isinstance(entry, list) or not all(isinstance(c, int) for c in entry):
                raise ParseError(f"point {entry!r} is not a list of integers")
            if len(entry) != geom.n + 1:
                raise GeometryMismatch(f"point {entry} has {len(entry)} coordinates, "
                                       f"PG({geom.n},{geom.q}) needs {geom.n + 1}")
            if any(not 0 <= c < geom.q for c in entry):
                raise GeometryMismatch(f"point {entry} has coordinates outside GF({geom.q})")
            if not any(entry):
                raise ParseError("the zero vector is not a point")
            indices.append(geom.point_index(entry))
        else:
            if not isinstance(entry, int) or not 0 <= entry < geom.num_points:
                raise GeometryMismatch(f"point index {entry!r} outside the design")
            indices.append(entry)
    if len(set(indices)) != len(indices):
        raise ParseError("a point is listed more than once")
    prov = data.get("provenance")
    return PointSet.from_indices(geom, indices, prov if isinstance(prov, dict) else None)


def dump_point_set(S: PointSet, path=None) -> str:
    text = json.dumps(point_set_to_json(S), indent=None, separators=(",", ":"))
    if path is not None:
        Path(path).write_text(text + "\n")
    return text


def load_design(source) -> Design:
    data = _read(source)
    try:
        return Design.from_json(data)
    except (KeyError, TypeError) as exc:
        raise ParseError(f"a design needs 'v' and 'blocks': {exc}") from exc


def dump_design(design: Design, path=None) -> str:
    text = json.dumps(design.to_json(), separators=(",", ":"))
    if path is not None:
        Path(path).write_text(text + "\n")
    return text
