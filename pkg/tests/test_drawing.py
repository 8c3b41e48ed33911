"""Drawing structure, validation taxonomy, restriction, serialization."""

from fractions import Fraction

import pytest

from lenscross.drawing import (
    Arc,
    Drawing,
    Edge,
    ParseError,
    SchemaError,
    VIOLATION_ARC_THROUGH_VERTEX,
    VIOLATION_BREAKPOINT,
    VIOLATION_IMPROPER_TOUCH,
    VIOLATION_OVERLAP,
    VIOLATION_SELF_INTERSECTION,
    VIOLATION_TRIPLE_POINT,
    degree_sequence,
    drawing,
    from_json_data,
    load,
    restricted,
    save,
    to_json_data,
    validate,
)
from lenscross.geometry import pt


def test_structural_rejections():
    with pytest.raises(ValueError):
        Arc((pt(0, 0),))
    with pytest.raises(ValueError):
        Arc((pt(0, 0), pt(0, 0)))
    with pytest.raises(ValueError):
        Edge(2, 2, Arc((pt(0, 0), pt(1, 1))))
    with pytest.raises(ValueError):
        # duplicate vertex placement
        drawing([(0, 0), (0, 0)], [])
    with pytest.raises(ValueError):
        # arc does not start at its vertex
        Drawing((pt(0, 0), pt(2, 0)), (Edge(0, 1, Arc((pt(1, 0), pt(2, 0)))),))


def test_degree_sequence_counts_parallels():
    d = drawing(
        [(0, 0), (4, 0), (2, 3)],
        [
            (0, 1, None),
            (0, 1, [(0, 0), (2, -1), (4, 0)]),
            (0, 2, None),
        ],
    )
    assert degree_sequence(d) == (3, 2, 1)
    assert validate(d).ok


def test_valid_crossing_pair():
    d = drawing([(0, 0), (4, 4), (0, 4), (4, 0)], [(0, 1, None), (2, 3, None)])
    rep = validate(d)
    assert rep.ok and rep.violations == ()


def kinds(d):
    return sorted({v.kind for v in validate(d).violations})


def test_violation_arc_through_vertex():
    d = drawing([(0, 0), (4, 0), (2, 0)], [(0, 1, None)])
    assert kinds(d) == [VIOLATION_ARC_THROUGH_VERTEX]


def test_violation_improper_touch():
    d = drawing([(0, 0), (4, 0), (2, 3)], [(0, 1, None), (2, 1, [(2, 3), (2, 0), (4, 0)])])
    found = kinds(d)
    assert VIOLATION_IMPROPER_TOUCH in found or VIOLATION_OVERLAP in found


def test_violation_overlap():
    d = drawing([(0, 0), (4, 0), (1, 0), (3, 0)], [(0, 1, None), (2, 3, None)])
    assert VIOLATION_OVERLAP in kinds(d)


def test_violation_breakpoint_incidence():
    # second edge passes exactly through the first edge's breakpoint
    d = drawing(
        [(0, 0), (4, 0), (2, -2), (2, 4)],
        [(0, 1, [(0, 0), (2, 1), (4, 0)]), (2, 3, None)],
    )
    assert VIOLATION_BREAKPOINT in kinds(d)


def test_violation_triple_point():
    d = drawing(
        [(0, 0), (4, 4), (0, 4), (4, 0), (0, 2), (4, 2)],
        [(0, 1, None), (2, 3, None), (4, 5, None)],
    )
    rep = validate(d)
    assert not rep.ok
    triple = [v for v in rep.violations if v.kind == VIOLATION_TRIPLE_POINT]
    assert len(triple) == 1
    assert triple[0].edges == (0, 1, 2)
    assert triple[0].point == pt(2, 2)


def test_violation_self_intersection():
    d = drawing(
        [(0, 0), (4, 0)],
        [(0, 1, [(0, 0), (4, 2), (0, 2), (4, 1), (2, Fraction(3, 2)), (4, 0)])],
    )
    assert VIOLATION_SELF_INTERSECTION in kinds(d)


def test_shared_endpoint_is_not_reported():
    d = drawing([(0, 0), (4, 0), (2, 3)], [(0, 1, None), (0, 2, None), (1, 2, None)])
    assert validate(d).ok


def test_validation_report_json_shape():
    d = drawing([(0, 0), (4, 0), (2, 0)], [(0, 1, None)])
    doc = validate(d).to_json_dict()
    assert doc["ok"] is False
    assert doc["violations"][0]["kind"] == VIOLATION_ARC_THROUGH_VERTEX
    assert doc["violations"][0]["point"] == [2, 0]


def test_restricted_remaps_ids():
    d = drawing(
        [(0, 0), (4, 0), (2, 3), (9, 9)],
        [(0, 1, None), (0, 2, None), (1, 2, None), (0, 3, None)],
    )
    sub, vmap, kept = restricted(d, [0, 2, 3])
    assert vmap == {0: 0, 2: 1, 3: 2}
    assert kept == (1, 3)
    assert sub.vertex_count == 3 and sub.edge_count == 2
    assert sub.edges[0].u == 0 and sub.edges[0].v == 1
    # explicit edge choice must respect endpoints
    with pytest.raises(ValueError):
        restricted(d, [0, 1], edge_ids=[1])
    sub2, _, kept2 = restricted(d, [0, 1, 2], edge_ids=[2, 0])
    assert kept2 == (0, 2)


def test_json_round_trip():
    d = drawing(
        [(0, 0), (1, Fraction(2, 3))],
        [(0, 1, [(0, 0), (Fraction(1, 2), 5), (1, Fraction(2, 3))])],
    )
    text = save(d)
    back = load(text)
    assert back == d
    assert save(back) == text
    data = to_json_data(d)
    assert data["vertices"][1] == [1, "2/3"]
    assert from_json_data(data) == d


def test_load_accepts_bytes():
    d = drawing([(0, 0), (3, 1)], [(0, 1, None)])
    assert load(save(d).encode("utf-8")) == d


@pytest.mark.parametrize(
    "mutate",
    [
        lambda data: data.pop("edges"),
        lambda data: data.update(extra=1),
        lambda data: data["edges"][0].pop("arc"),
        lambda data: data["edges"][0].update(u="0"),
        lambda data: data["edges"][0].update(u=True),
        lambda data: data["edges"][0].update(v=7),
        lambda data: data["edges"][0].update(u=1, v=1),
        lambda data: data["edges"][0]["arc"].pop(),
        lambda data: data["edges"][0]["arc"].__setitem__(0, [9, 9]),
        lambda data: data["vertices"].__setitem__(0, [0]),
    ],
)
def test_schema_rejections(mutate):
    d = drawing([(0, 0), (3, 1)], [(0, 1, None)])
    data = to_json_data(d)
    mutate(data)
    with pytest.raises((SchemaError, ParseError)):
        from_json_data(data)


@pytest.mark.parametrize("bad", [0.5, "1/0", "1/-2", "3/4/5", "x/y", None, [1]])
def test_coordinate_rejections(bad):
    data = {
        "vertices": [[0, 0], [bad, 1]],
        "edges": [{"u": 0, "v": 1, "arc": [[0, 0], [bad, 1]]}],
    }
    with pytest.raises((ParseError, SchemaError)):
        from_json_data(data)


def test_load_rejects_malformed_text():
    with pytest.raises(ParseError):
        load("{not json")
    with pytest.raises(SchemaError):
        load("[]")
