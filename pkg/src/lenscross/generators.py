"""Drawing families used throughout the test corpus and experiments.

Four constructions: a family of nested parallel arcs whose lenses each
hold one witness vertex; complete graphs on rational points in convex
position; the two-semicircle family on collinear vertices (the drawing
showing that pairs crossing twice ruin the edge bound: it is separated
with Theta(n^3) edges); and a seeded random family of plane subgraphs
with slim parallel detours.

Everything is exact.  Circle points come from the tangent half-angle
parametrization ((1-t^2)/(1+t^2), 2t/(1+t^2)), which keeps coordinates
rational at the cost of unevenly spaced samples.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .crossings import count_crossings
from .drawing import (
    Arc,
    Drawing,
    Edge,
    InvalidDrawing,
    VIOLATION_BREAKPOINT,
    VIOLATION_TRIPLE_POINT,
    validate,
)
from .geometry import Point
from .lenses import separated_verdict


class DegenerateDiscretization(RuntimeError):
    """Polyline stand-ins collided; retry with more segments per arc."""


class GenerationExhausted(RuntimeError):
    """Random generation failed to produce a valid instance in budget."""


@dataclass(frozen=True)
class GeneratorSpec:
    """Declarative recipe for one instance; `build` dispatches on family."""

    family: str  # nested | convex | semicircle | random
    n: int = 0
    k: int = 0
    seed: int = 0
    segments_per_arc: int = 32
    extra_parallel: int = 0
    label: str = ""


def build(spec: GeneratorSpec) -> Drawing:
    if spec.family == "nested":
        return gen_nested_lenses(spec.k or spec.n)
    if spec.family == "convex":
        return gen_convex_complete(spec.n)
    if spec.family == "semicircle":
        return gen_semicircle(spec.n, spec.segments_per_arc)
    if spec.family == "random":
        return gen_random_separated(spec.n, spec.extra_parallel, spec.seed)
    raise ValueError(f"unknown family {spec.family!r}")


# ---------------------------------------------------------------------------
# nested lenses


def gen_nested_lenses(k: int) -> Drawing:
    """Two hubs joined by k nested arcs; every lens holds one witness.

    Vertices: hubs 0 and 1 at (-k-1, 0) and (k+1, 0), witnesses 2..k at
    (0, h + 1/2).  Edge h bumps through (0, h).  Separated and crossing
    free by construction; e = k, n = k + 1.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    left = Point(Fraction(-k - 1), Fraction(0))
    right = Point(Fraction(k + 1), Fraction(0))
    points = [left, right]
    for h in range(1, k):
        points.append(Point(Fraction(0), Fraction(2 * h + 1, 2)))
    edges = []
    for h in range(1, k + 1):
        arc = Arc((left, Point(Fraction(0), Fraction(h)), right))
        edges.append(Edge(0, 1, arc))
    return Drawing(tuple(points), tuple(edges))


# ---------------------------------------------------------------------------
# convex complete


def _circle_point(t: Fraction) -> Point:
    den = 1 + t * t
    return Point((1 - t * t) / den, 2 * t / den)


def gen_convex_complete(n: int, attempts: int = 40) -> Drawing:
    """Straight-line K_n on rational circle points.

    Points on a circle are automatically in convex position and never
    collinear, so the only way validation can fail is three chords
    through a common point; the parameters are then shifted and the
    drawing rebuilt.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    for attempt in range(attempts):
        shift = Fraction(attempt, 97)
        points = tuple(_circle_point(Fraction(i) + shift) for i in range(n))
        edges = tuple(
            Edge(i, j, Arc((points[i], points[j])))
            for i in range(n)
            for j in range(i + 1, n)
        )
        d = Drawing(points, edges)
        if validate(d).ok:
            return d
    raise GenerationExhausted(f"no concurrency-free K_{n} in {attempts} shifts")


# ---------------------------------------------------------------------------
# semicircle family


def _half_turn(m: int, big_m: int) -> Tuple[Fraction, Fraction]:
    # (cos, sin) of the angle swept after m of big_m steps along a half
    # turn, from the half-angle substitution t = m/(big_m - m)
    a = big_m - m
    den = a * a + m * m
    return Fraction(a * a - m * m, den), Fraction(2 * a * m, den)


def _semicircle(start: Fraction, end: Fraction, upper: bool, big_m: int) -> List[Point]:
    """Polyline from (start, 0) to (end, 0) along the semicircle over the
    diameter between them, in the chosen half-plane."""
    center = (start + end) / 2
    dx = start - center
    radius = abs(dx)
    sign = 1 if upper else -1
    pts = []
    for m in range(big_m + 1):
        c, s = _half_turn(m, big_m)
        pts.append(Point(center + dx * c, sign * radius * s))
    return pts


def _edge_triples(n: int) -> List[Tuple[int, int, int]]:
    # (i, k, j), 1-based, i <= k < j; sorted so ids are reproducible
    return [
        (i, k, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        for k in range(i, j)
    ]


def _axis_points(n: int) -> Dict[Tuple[int, int, int], Fraction]:
    """The waypoint in gap (k, k+1) for each triple: k + r/(D+1) with D
    the number of edges routed through that gap and r the rank of (i, j)
    among them.  All waypoints are distinct by construction."""
    by_gap: Dict[int, List[Tuple[int, int, int]]] = {}
    for triple in _edge_triples(n):
        by_gap.setdefault(triple[1], []).append(triple)
    out = {}
    for k, triples in by_gap.items():
        den = k * (n - k) + 1
        for r, triple in enumerate(sorted(triples), start=1):
            out[triple] = k + Fraction(r, den)
    return out


def gen_semicircle(n: int, segments_per_arc: int = 32) -> Drawing:
    """The two-semicircle drawing on vertices (1,0)..(n,0).

    One edge per triple i <= k < j: an upper semicircle from i to a
    waypoint in gap (k, k+1), then a lower semicircle on to j, giving
    j - i parallel edges per vertex pair and (n^3 - n)/6 edges in all.

    Semicircles sharing a vertex are internally tangent there, so equal
    sampling would make their first chords collinear.  Each half-arc
    therefore gets its own segment count, ranked by radius within its
    tangency group: bigger circles are cut finer, which also keeps the
    first chords ordered the same way as the arcs themselves.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if segments_per_arc < 8:
        raise ValueError("segments_per_arc must be at least 8")
    triples = _edge_triples(n)
    waypoints = _axis_points(n)

    # rank upper halves by radius among arcs leaving the same left
    # vertex, lower halves among arcs entering the same right vertex
    upper_rank: Dict[Tuple[int, int, int], int] = {}
    lower_rank: Dict[Tuple[int, int, int], int] = {}
    by_left: Dict[int, List] = {}
    by_right: Dict[int, List] = {}
    for triple in triples:
        by_left.setdefault(triple[0], []).append(triple)
        by_right.setdefault(triple[2], []).append(triple)
    for i, group in by_left.items():
        group.sort(key=lambda tr: waypoints[tr])  # radius = (p - i)/2
        for rank, tr in enumerate(group):
            upper_rank[tr] = rank
    for j, group in by_right.items():
        group.sort(key=lambda tr: waypoints[tr], reverse=True)  # radius = (j - p)/2
        for rank, tr in enumerate(group):
            lower_rank[tr] = rank

    vertices = tuple(Point(Fraction(v), Fraction(0)) for v in range(1, n + 1))
    for attempt in range(3):
        bump = 11 * attempt
        edges = []
        for triple in triples:
            i, k, j = triple
            p = waypoints[triple]
            up = _semicircle(
                Fraction(i), p, True, segments_per_arc + upper_rank[triple] + bump
            )
            down = _semicircle(
                p, Fraction(j), False, segments_per_arc + lower_rank[triple] + bump
            )
            edges.append(Edge(i - 1, j - 1, Arc(tuple(up) + tuple(down[1:]))))
        d = Drawing(vertices, tuple(edges))
        report = validate(d)
        if report.ok:
            return d
        kinds = {v.kind for v in report.violations}
        if not kinds <= {VIOLATION_BREAKPOINT, VIOLATION_TRIPLE_POINT}:
            break
    raise DegenerateDiscretization(
        f"semicircle drawing n={n} failed validation at {segments_per_arc} "
        f"segments per arc; retry denser"
    )


# ---------------------------------------------------------------------------
# random separated


def gen_random_separated(n: int, extra_parallel: int, seed: int) -> Drawing:
    """Seeded random separated single-crossing instance.

    Starts from a random noncrossing straight-line subgraph on distinct
    integer points, then tries to add up to ``extra_parallel`` parallel
    companions, each a two-segment detour bulging past some witness
    vertex so the new lens is nonempty.  Every candidate is accepted
    only if the whole drawing still validates and stays separated and
    single-crossing, so the output is correct by construction.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    rng = random.Random(seed)
    span = 4 * n
    for _ in range(200):
        seen = set()
        while len(seen) < n:
            seen.add((rng.randrange(span + 1), rng.randrange(span + 1)))
        points = tuple(Point(Fraction(x), Fraction(y)) for x, y in sorted(seen))
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        rng.shuffle(pairs)
        edges: List[Edge] = []
        for u, v in pairs:
            candidate = Edge(u, v, Arc((points[u], points[v])))
            trial = Drawing(points, tuple(edges) + (candidate,))
            try:
                if count_crossings(trial).total == 0:
                    edges.append(candidate)
            except InvalidDrawing:
                continue
        if not edges:
            continue
        keep = max(1, rng.randrange(len(edges)) + 1)
        rng.shuffle(edges)
        edges = edges[:keep]
        d = Drawing(points, tuple(edges))
        d = _add_parallel_detours(d, extra_parallel, rng)
        return d
    raise GenerationExhausted(f"no base instance for n={n}, seed={seed}")


def _add_parallel_detours(d: Drawing, budget: int, rng: random.Random) -> Drawing:
    added = 0
    attempts = 0
    while added < budget and attempts < 40 * (budget + 1):
        attempts += 1
        if not d.edges:
            break
        eid = rng.randrange(len(d.edges))
        base = d.edges[eid]
        u, v = base.u, base.v
        others = [w for w in range(d.vertex_count) if w not in (u, v)]
        if not others:
            break
        w = others[rng.randrange(len(others))]
        wp = d.vertex_points[w]
        mid = Point(
            (d.vertex_points[u].x + d.vertex_points[v].x) / 2,
            (d.vertex_points[u].y + d.vertex_points[v].y) / 2,
        )
        if wp == mid:
            continue
        # bulge just past w, away from the chord midpoint, with a small
        # seeded jitter to dodge coincidences
        delta = Fraction(1, 4 + rng.randrange(8))
        jx = Fraction(rng.randrange(-3, 4), 64)
        jy = Fraction(rng.randrange(-3, 4), 64)
        q = Point(
            wp.x + (wp.x - mid.x) * delta + jx,
            wp.y + (wp.y - mid.y) * delta + jy,
        )
        if q == d.vertex_points[u] or q == d.vertex_points[v]:
            continue
        try:
            candidate = Edge(u, v, Arc((d.vertex_points[u], q, d.vertex_points[v])))
            trial = Drawing(d.vertex_points, d.edges + (candidate,))
        except ValueError:
            continue
        if not validate(trial).ok:
            continue
        verdict = separated_verdict(trial)
        if verdict.separated and verdict.single_crossing:
            d = trial
            added += 1
    return d
