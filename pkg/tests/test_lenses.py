"""Parallel classes, lens extraction, separation verdicts."""

import pytest

from lenscross.crossings import count_crossings
from lenscross.drawing import drawing
from lenscross.generators import (
    gen_nested_lenses,
    gen_random_separated,
    gen_semicircle,
)
from lenscross.geometry import PolygonLocation, locate_in_simple_polygon
from lenscross.lenses import (
    CrossingParallelPair,
    lenses,
    multiplicity,
    parallel_classes,
    separated_verdict,
)
from oracles import lens_count_oracle


def test_parallel_classes_grouping():
    d = drawing(
        [(0, 0), (4, 0), (2, 3)],
        [
            (0, 1, None),
            (1, 0, [(4, 0), (2, -2), (0, 0)]),
            (0, 2, None),
        ],
    )
    classes = parallel_classes(d)
    assert [c.endpoints for c in classes] == [(0, 1), (0, 2)]
    assert classes[0].edge_ids == (0, 1)
    assert classes[0].multiplicity == 2
    assert multiplicity(d) == 2
    assert multiplicity(drawing([(0, 0)], [])) == 0


def two_parallel_with_witness():
    return drawing(
        [(0, 0), (6, 0), (3, 1)],
        [(0, 1, [(0, 0), (3, 3), (6, 0)]), (0, 1, None)],
    )


def test_single_lens_with_witness():
    d = two_parallel_with_witness()
    recs = lenses(d)
    assert len(recs) == 1
    rec = recs[0]
    assert rec.endpoints == (0, 1)
    assert rec.edge_ids == (0, 1)
    assert rec.interior_vertices == (2,)
    assert rec.size == 1
    # the witness really is inside the reported polygon
    assert (
        locate_in_simple_polygon(d.vertex_points[2], rec.polygon)
        is PolygonLocation.INSIDE
    )
    v = separated_verdict(d)
    assert v.separated and v.single_crossing and v.issues == ()


def test_empty_lens_issue():
    d = drawing(
        [(0, 0), (6, 0)],
        [(0, 1, [(0, 0), (3, 3), (6, 0)]), (0, 1, None)],
    )
    v = separated_verdict(d)
    assert not v.separated
    assert [i.kind for i in v.issues] == ["empty_lens"]
    assert v.issues[0].edges == (0, 1)


def test_crossing_parallel_pair_issue():
    # two parallel edges that cross once between their endpoints
    d = drawing(
        [(0, 0), (6, 0)],
        [
            (0, 1, [(0, 0), (2, 2), (4, -2), (6, 0)]),
            (0, 1, None),
        ],
    )
    v = separated_verdict(d)
    assert not v.separated
    assert any(i.kind == "crossing_parallel_pair" for i in v.issues)
    with pytest.raises(CrossingParallelPair):
        lenses(d)


def test_double_crossing_pair_issue():
    d = drawing(
        [(0, 1), (6, 1), (0, 0), (6, 0)],
        [(0, 1, None), (2, 3, [(0, 0), (3, 2), (6, 0)])],
    )
    v = separated_verdict(d)
    assert v.separated  # no parallel classes of size 2, so vacuously fine
    assert not v.single_crossing
    assert [i.kind for i in v.issues] == ["double_crossing_pair"]
    assert "2 crossings" in v.issues[0].detail


@pytest.mark.parametrize("h", range(1, 8))
def test_nested_family_lens_structure(h):
    d = gen_nested_lenses(h)
    recs = lenses(d)
    # h parallel arcs form h - 1 adjacent lenses, one witness apiece
    assert len(recs) == lens_count_oracle(d) == h - 1
    assert [r.edge_ids for r in recs] == [(j, j + 1) for j in range(h - 1)]
    assert [r.interior_vertices for r in recs] == [(j + 2,) for j in range(h - 1)]
    v = separated_verdict(d)
    assert v.separated and v.single_crossing


def test_innermost_lens_rule():
    # three parallel edges stacked: only adjacent pairs form lenses, the
    # outermost pair is crowded by the middle arc
    d = drawing(
        [(0, 0), (8, 0), (4, 1), (4, 3)],
        [
            (0, 1, None),
            (0, 1, [(0, 0), (4, 2), (8, 0)]),
            (0, 1, [(0, 0), (4, 4), (8, 0)]),
        ],
    )
    recs = lenses(d)
    assert [r.edge_ids for r in recs] == [(0, 1), (1, 2)]
    assert lens_count_oracle(d) == 2
    by_pair = {r.edge_ids: r.interior_vertices for r in recs}
    assert by_pair[(0, 1)] == (2,)
    assert by_pair[(1, 2)] == (3,)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_semicircle_classes_do_not_cross(n):
    d = gen_semicircle(n)
    report = count_crossings(d)
    for cls in parallel_classes(d):
        for a in range(cls.multiplicity):
            for b in range(a + 1, cls.multiplicity):
                assert report.count(cls.edge_ids[a], cls.edge_ids[b]) == 0
    recs = lenses(d, report)
    assert len(recs) == lens_count_oracle(d)
    assert all(r.size >= 1 for r in recs)


def test_random_instances_meet_lens_oracle():
    for seed in range(12):
        d = gen_random_separated(4 + seed % 7, extra_parallel=seed % 3, seed=seed)
        assert len(lenses(d)) == lens_count_oracle(d)


def test_verdict_json_shape():
    doc = separated_verdict(two_parallel_with_witness()).to_json_dict()
    assert doc == {
        "separated": True,
        "single_crossing": True,
        "issues": [],
        "lens_count": 1,
    }
