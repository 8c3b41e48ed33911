"""Shared fixtures: the instance corpus and thrackle-premise families.

The corpus fixture is session scoped because building ~500 seeded
instances and their crossing reports takes tens of seconds; every
criterion that quantifies over "the corpus" reads the same list.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import pytest
from hypothesis import HealthCheck, settings

from lenscross.crossings import CrossingReport, count_crossings
from lenscross.drawing import Arc, Drawing, Edge
from lenscross.generators import (
    _circle_point,
    gen_convex_complete,
    gen_nested_lenses,
    gen_random_separated,
    gen_semicircle,
)
from lenscross.lenses import SeparatedVerdict, separated_verdict

settings.register_profile(
    "suite",
    max_examples=60,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("suite")

RANDOM_CORPUS_SIZE = 485


@dataclass(frozen=True)
class CorpusItem:
    label: str
    drawing: Drawing
    report: CrossingReport
    verdict: SeparatedVerdict


def _item(label: str, d: Drawing) -> CorpusItem:
    report = count_crossings(d)
    verdict = separated_verdict(d, report)
    return CorpusItem(label, d, report, verdict)


@pytest.fixture(scope="session")
def ssc_corpus() -> Tuple[CorpusItem, ...]:
    """Separated single-crossing instances, n <= 12, all seeded."""
    items = []
    for k in range(1, 9):
        items.append(_item(f"nested-{k}", gen_nested_lenses(k)))
    for n in range(3, 10):
        items.append(_item(f"convex-{n}", gen_convex_complete(n)))
    for n in (2, 3):
        items.append(_item(f"semicircle-{n}", gen_semicircle(n)))
    for seed in range(RANDOM_CORPUS_SIZE):
        n = 3 + seed % 10
        extra = seed % 3
        d = gen_random_separated(n, extra_parallel=extra, seed=seed)
        items.append(_item(f"random-n{n}-x{extra}-s{seed}", d))
    for it in items:
        assert it.verdict.separated and it.verdict.single_crossing, it.label
        assert it.drawing.vertex_count <= 12, it.label
    assert len(items) >= 500
    return tuple(items)


@pytest.fixture(scope="session")
def semicircle_family():
    """The two-semicircle drawings for n = 2..6, shared by the engine
    agreement and construction-certification criteria."""
    return {n: gen_semicircle(n) for n in range(2, 7)}


def star_polygon(n: int, shift: Fraction = Fraction(0)) -> Drawing:
    """Cycle on n convex points joining each to the vertex n//2 further.

    For odd n every pair of independent chords crosses, the classic
    maximal-crossing cycle drawing.  The quadratic jitter on the circle
    parameters matters: with evenly spaced parameters and 3 | n, three
    chords meet in one point for every uniform spacing, so the points
    must break the symmetry individually.
    """
    if n < 5 or n % 2 == 0:
        raise ValueError("need odd n >= 5")
    step = n // 2
    points = tuple(
        _circle_point(Fraction(i) + shift + Fraction(i * i, 101)) for i in range(n)
    )
    edges = []
    for i in range(n):
        u, v = sorted((i, (i + step) % n))
        edges.append(Edge(u, v, Arc((points[u], points[v]))))
    return Drawing(points, tuple(edges))


def crossing_matching(m: int, shift: Fraction = Fraction(0)) -> Drawing:
    """m pairwise-crossing chords: 2m convex points, chord i to i+m.

    Any two such chords interleave around the circle, so they cross no
    matter where the points sit.
    """
    if m < 2:
        raise ValueError("need at least two chords")
    points = tuple(_circle_point(Fraction(i) + shift) for i in range(2 * m))
    edges = tuple(
        Edge(i, i + m, Arc((points[i], points[i + m]))) for i in range(m)
    )
    return Drawing(points, edges)


def _fan(k: int) -> Drawing:
    hub = _circle_point(Fraction(-3))
    leaves = tuple(_circle_point(Fraction(i)) for i in range(k))
    points = (hub,) + leaves
    edges = tuple(Edge(0, i + 1, Arc((hub, leaves[i]))) for i in range(k))
    return Drawing(points, edges)


@pytest.fixture(scope="session")
def pentagram() -> Drawing:
    return star_polygon(5)


@pytest.fixture(scope="session")
def thrackle_instances(pentagram):
    """At least 20 drawings satisfying the mutual-crossing premise:
    simple, single-crossing, every independent pair crossing."""
    out = [("pentagram", pentagram)]
    for n in (7, 9, 11, 13, 15):
        out.append((f"star-{n}", star_polygon(n)))
    for n in (5, 7, 9):
        out.append((f"star-{n}-shift", star_polygon(n, Fraction(1, 3))))
    for m in range(2, 7):
        out.append((f"matching-{m}", crossing_matching(m)))
    for m in (2, 3, 4):
        out.append((f"matching-{m}-shift", crossing_matching(m, Fraction(2, 5))))
    # premise vacuous: no independent pairs at all
    out.append(("triangle", gen_convex_complete(3)))
    for k in (3, 4, 5):
        out.append((f"fan-{k}", _fan(k)))
    assert len(out) >= 20
    return tuple(out)
