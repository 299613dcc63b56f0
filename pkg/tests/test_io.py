import json

import pytest

from blockingsets import (
    baer_complement,
    dump_design,
    dump_point_set,
    field_of_order,
    hermitian_curve,
    load_design,
    load_point_set,
    pg_create,
)
from blockingsets.errors import GeometryMismatch, NonConstantLambda, ParseError


def test_roundtrip_file(tmp_path):
    S = baer_complement(9)
    path = tmp_path / "s.json"
    dump_point_set(S, path)
    T = load_point_set(path)
    assert T == S
    assert T.provenance == {"construction": "baer-complement", "q": 9}


def test_roundtrip_text_and_format():
    S = hermitian_curve(4)
    text = dump_point_set(S)
    doc = json.loads(text)
    assert doc["geometry"] == {"type": "PG", "dim": 2, "field": {"p": 2, "k": 2, "modulus": [1, 1, 1]}}
    assert len(doc["points"]) == 9 and all(len(p) == 3 for p in doc["points"])
    assert load_point_set(text) == S
    assert load_point_set(doc) == S


def test_unnormalized_coordinates_are_accepted():
    P = pg_create(2, field_of_order(3))
    doc = {"geometry": P.to_json(), "points": [[2, 2, 0], [0, 0, 2]]}
    S = load_point_set(doc)
    assert S.indices() == sorted([P.point_index([1, 1, 0]), 0])


@pytest.mark.parametrize("doc,err", [
    ("{bad", ParseError),
    ('{"points": []}', ParseError),
    ({"geometry": {"type": "PG", "dim": 2, "field": {"p": 3, "k": 1, "modulus": [0, 1]}},
      "points": [[0, 1]]}, GeometryMismatch),
    ({"geometry": {"type": "PG", "dim": 2, "field": {"p": 3, "k": 1, "modulus": [0, 1]}},
      "points": [[0, 1, 5]]}, GeometryMismatch),
    ({"geometry": {"type": "PG", "dim": 2, "field": {"p": 3, "k": 1, "modulus": [0, 1]}},
      "points": [[0, 1, 1], [0, 2, 2]]}, ParseError),
    ({"geometry": {"type": "PG", "dim": 2, "field": {"p": 2, "k": 2, "modulus": [0, 0, 1]}},
      "points": []}, GeometryMismatch),
    ({"geometry": {"type": "AG"}, "points": []}, GeometryMismatch),
    ({"geometry": {"type": "PG", "dim": 2, "field": {"p": 3, "k": 1, "modulus": [0, 1]}},
      "points": ["x"]}, ParseError),
])
def test_malformed(doc, err):
    with pytest.raises(err):
        load_point_set(doc)


def test_missing_file():
    with pytest.raises(ParseError):
        load_point_set("/nonexistent/file.json")


def test_design_geometry_and_design_files(tmp_path):
    blocks = [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]]
    doc = {"geometry": {"type": "design", "v": 7, "blocks": blocks}, "points": [0, 1, 3]}
    S = load_point_set(doc)
    assert S.indices() == [0, 1, 3]
    assert json.loads(dump_point_set(S))["points"] == [0, 1, 3]
    path = tmp_path / "d.json"
    path.write_text(json.dumps({"v": 7, "blocks": blocks}))
    d = load_design(path)
    assert d.params == (7, 7, 3, 3, 1)
    assert load_design(dump_design(d)).params == d.params
    with pytest.raises(NonConstantLambda):
        load_design({"v": 4, "blocks": [[0, 1, 2], [0, 1, 3]]})
    with pytest.raises(ParseError):
        load_design({"blocks": []})
