"""Decomposition loop: degree gate, stop rules, audited splits."""

from fractions import Fraction

import pytest

from lenscross.bounds import TooLarge
from lenscross.decompose import (
    DegreeTooHigh,
    decompose,
    default_k,
    _stop_index,
)
from lenscross.exactnum import LogQuotient
from lenscross.generators import (
    gen_convex_complete,
    gen_nested_lenses,
    gen_random_separated,
)
from lenscross.lenses import NotSeparated
from lenscross.drawing import drawing


def test_default_k_shape():
    assert default_k(5, 4) == Fraction(0)
    assert default_k(5, 5) == Fraction(0)
    k = default_k(2, 6)
    assert isinstance(k, LogQuotient)
    # 1e-10 * 36 / 4 = 9e-10, arg e/n = 3
    assert k.coeff == Fraction(9, 10**10)
    assert k.arg == Fraction(3)


def test_stop_index_values():
    assert _stop_index(10, Fraction(0)) is None
    # threshold 1e-6 * 10 / 1e-6 = 10: largest i with (5/4)^i <= 10 is 10
    assert _stop_index(10, Fraction(1, 10**6)) == 10
    assert _stop_index(10, Fraction(10)) is None  # threshold 1e-5 < 1
    # log-form k: threshold becomes (e / coeff) log2(arg) exactly
    k = LogQuotient(Fraction(1, 10**6), Fraction(4))
    assert _stop_index(1, k) == _stop_index(1, Fraction(1, 10**6) / 2)


def test_degree_gate():
    d = gen_nested_lenses(4)  # hub degree 4, ceiling 2e/n = 2
    with pytest.raises(DegreeTooHigh):
        decompose(d)
    trace = decompose(d, delta_override=4)
    assert trace.delta == 4


def test_rejects_unseparated_input():
    with pytest.raises(NotSeparated):
        decompose(
            drawing([(0, 0), (6, 0)], [(0, 1, [(0, 0), (3, 3), (6, 0)]), (0, 1, None)])
        )


def test_k_zero_never_splits():
    # default k is 0 for e <= n: every member is rich, quiescence after
    # one stage
    d = gen_nested_lenses(4)
    trace = decompose(d, delta_override=4)
    assert trace.k_repr == "0"
    assert trace.stop_rule == "quiescence"
    assert len(trace.stages) == 1
    assert all(m.action == "kept" for m in trace.stages[0].members)
    assert trace.final_heavy_edges == d.edge_count


def test_forced_split_on_nested():
    # any positive k makes the crossing-free nest poor, so stage 0 splits
    trace = decompose(gen_nested_lenses(4), k_override=Fraction(1), delta_override=4)
    s0 = trace.stages[0].members
    assert len(s0) == 1 and s0[0].action == "split"
    rec = s0[0].split
    assert rec.sizes_ok and rec.parts_valid and rec.width_bound_ok
    assert trace.all_splits_ok
    p1, p2 = rec.part_vertices
    assert sorted(p1 + p2) == sorted(set(p1 + p2))  # vertex-disjoint
    assert set(p1) | set(p2) == set(range(trace.n))


def test_convex_k4_quiescence_run():
    trace = decompose(gen_convex_complete(4), k_override=Fraction(1, 2))
    assert trace.stop_rule == "quiescence"
    assert trace.all_splits_ok
    widths = [
        m.split.width
        for s in trace.stages
        for m in s.members
        if m.split is not None
    ]
    assert widths == [3, 2]
    # every stage's members partition the vertex set
    for stage in trace.stages:
        seen = [v for m in stage.members for v in m.vertices]
        assert sorted(seen) == list(range(trace.n))


def test_counter_rule_on_convex_k5():
    trace = decompose(gen_convex_complete(5))
    assert trace.stop_rule == "counter"
    assert trace.stop_index == 45
    assert len(trace.stages) == 46
    assert trace.all_splits_ok
    for stage in trace.stages:
        seen = sorted(v for m in stage.members for v in m.vertices)
        assert seen == list(range(5))


def test_final_members_vertex_disjoint_and_complete():
    trace = decompose(
        gen_random_separated(8, 1, 4), k_override=Fraction(1, 3), delta_override=8
    )
    assert trace.all_splits_ok
    seen = sorted(v for m in trace.final_members for v in m.vertices)
    assert seen == list(range(trace.n))
    # final heavy edges sum over rich members only
    assert trace.final_heavy_edges == sum(
        m.e for m in trace.final_members if m.crossing_rich
    )


def test_split_members_shrink_below_four_fifths():
    trace = decompose(gen_convex_complete(5), k_override=Fraction(1, 4))
    for stage in trace.stages:
        for m in stage.members:
            if m.split is None:
                continue
            for part in m.split.part_vertices:
                assert 5 * len(part) <= 4 * m.v


def test_deleted_edges_leave_the_decomposition():
    trace = decompose(gen_convex_complete(4), k_override=Fraction(1, 2))
    deleted = {
        eid
        for s in trace.stages
        for m in s.members
        if m.split is not None
        for eid in m.split.deleted_edges
    }
    surviving = {eid for m in trace.final_members for eid in m.edge_ids}
    assert not deleted & surviving


def test_k_override_validation():
    d = gen_nested_lenses(3)
    with pytest.raises(ValueError):
        decompose(d, k_override=Fraction(-1), delta_override=3)


def test_too_large_member_propagates():
    # n = 12 > bisection limit and k high enough to demand a split
    d = gen_random_separated(12, 0, 2)
    with pytest.raises(TooLarge):
        decompose(d, k_override=Fraction(5), delta_override=100)


def test_trace_json_shape():
    doc = decompose(
        gen_nested_lenses(4), k_override=Fraction(1), delta_override=4
    ).to_json_dict()
    assert doc["k"] == "1"
    assert doc["stop_rule"] in ("counter", "quiescence")
    assert doc["all_splits_ok"] is True
    assert doc["stages"][0]["members"][0]["action"] == "split"
    split = doc["stages"][0]["members"][0]["split"]
    assert set(split) == {
        "width",
        "deleted_edges",
        "part_vertices",
        "sizes_ok",
        "parts_valid",
        "width_bound_ok",
    }
