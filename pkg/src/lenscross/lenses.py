"""Parallel edge classes, lenses, and the separation verdict.

Edges sharing an unordered endpoint pair form a parallel class.  When no
two edges of a class cross each other, their arcs meet only at the two
shared vertices, so the class is linearly ordered in the plane and each
consecutive pair bounds a bigon face: a lens.  A pair of class edges is
consecutive exactly when no third class edge runs strictly inside the
closed curve the pair bounds, which is what the probe test below checks.

A drawing is separated when parallel edges never cross and every lens
has at least one vertex strictly inside.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .crossings import CrossingReport, count_crossings
from .drawing import Drawing
from .geometry import (
    Point,
    PolygonLocation,
    locate_in_simple_polygon,
)


class CrossingParallelPair(ValueError):
    """Two edges with the same endpoints cross; lenses are undefined."""

    def __init__(self, edge_a: int, edge_b: int):
        self.edge_a = edge_a
        self.edge_b = edge_b
        super().__init__(f"parallel edges {edge_a} and {edge_b} cross")


class NotSeparated(ValueError):
    """Operation requires a separated drawing."""


class NotSingleCrossing(ValueError):
    """Operation requires that no two edges cross more than once."""


@dataclass(frozen=True)
class ParallelClass:
    """All edges joining one unordered vertex pair, singletons included."""

    endpoints: Tuple[int, int]
    edge_ids: Tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.edge_ids)


@dataclass(frozen=True)
class LensRecord:
    """One lens: the bounding parallel pair and what sits inside it."""

    endpoints: Tuple[int, int]
    edge_ids: Tuple[int, int]
    polygon: Tuple[Point, ...]
    interior_vertices: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.interior_vertices)


@dataclass(frozen=True)
class SeparationIssue:
    kind: str
    edges: Tuple[int, ...]
    detail: str = ""


@dataclass(frozen=True)
class SeparatedVerdict:
    separated: bool
    single_crossing: bool
    issues: Tuple[SeparationIssue, ...]
    lens_records: Tuple[LensRecord, ...]

    def to_json_dict(self) -> dict:
        return {
            "separated": self.separated,
            "single_crossing": self.single_crossing,
            "issues": [
                {"kind": i.kind, "edges": list(i.edges), "detail": i.detail}
                for i in self.issues
            ],
            "lens_count": len(self.lens_records),
        }


def parallel_classes(d: Drawing) -> Tuple[ParallelClass, ...]:
    """Edge ids grouped by unordered endpoint pair, pairs in sorted order."""
    groups: Dict[Tuple[int, int], List[int]] = {}
    for eid, e in enumerate(d.edges):
        pair = (e.u, e.v) if e.u < e.v else (e.v, e.u)
        groups.setdefault(pair, []).append(eid)
    return tuple(
        ParallelClass(pair, tuple(sorted(ids))) for pair, ids in sorted(groups.items())
    )


def multiplicity(d: Drawing) -> int:
    """Largest parallel class size; 1 for a simple graph, 0 if edgeless."""
    classes = parallel_classes(d)
    return max((c.multiplicity for c in classes), default=0)


def _arc_probe(d: Drawing, edge_id: int) -> Point:
    # any point strictly inside the arc works; class arcs are disjoint
    # from each other except at the two shared vertices
    pts = d.edges[edge_id].arc.points
    if len(pts) > 2:
        return pts[len(pts) // 2]
    a, b = pts
    return Point((a.x + b.x) / 2, (a.y + b.y) / 2)


def _lens_polygon(d: Drawing, edge_a: int, edge_b: int) -> Tuple[Point, ...]:
    first = d.edges[edge_a].arc.points
    second = d.edges[edge_b].arc.points
    if first[0] != second[0]:
        # arcs drawn in opposite directions; walk the second one as-is
        second = tuple(reversed(second))
    return tuple(first) + tuple(second[-2:0:-1])


def _class_crossing_pairs(
    cls: ParallelClass, report: CrossingReport
) -> List[Tuple[int, int]]:
    ids = cls.edge_ids
    return [
        (ids[a], ids[b])
        for a in range(len(ids))
        for b in range(a + 1, len(ids))
        if report.count(ids[a], ids[b]) > 0
    ]


def _class_lenses(
    d: Drawing, cls: ParallelClass, report: CrossingReport
) -> List[LensRecord]:
    ids = cls.edge_ids
    bad = _class_crossing_pairs(cls, report)
    if bad:
        raise CrossingParallelPair(*bad[0])
    if len(ids) < 2:
        return []
    probes = {eid: _arc_probe(d, eid) for eid in ids}
    out: List[LensRecord] = []
    for a_pos in range(len(ids)):
        for b_pos in range(a_pos + 1, len(ids)):
            ea, eb = ids[a_pos], ids[b_pos]
            polygon = _lens_polygon(d, ea, eb)
            crowded = False
            for other in ids:
                if other == ea or other == eb:
                    continue
                loc = locate_in_simple_polygon(probes[other], polygon)
                if loc is PolygonLocation.INSIDE:
                    crowded = True
                    break
            if crowded:
                continue
            interior = tuple(
                w
                for w, wp in enumerate(d.vertex_points)
                if w not in cls.endpoints
                and locate_in_simple_polygon(wp, polygon) is PolygonLocation.INSIDE
            )
            out.append(LensRecord(cls.endpoints, (ea, eb), polygon, interior))
    return out


def lenses(d: Drawing, report: Optional[CrossingReport] = None) -> Tuple[LensRecord, ...]:
    """Every lens of the drawing, sorted by endpoint pair then edge pair.

    Raises :class:`CrossingParallelPair` when some parallel pair crosses,
    and :class:`~lenscross.drawing.InvalidDrawing` for bad drawings.
    A class of multiplicity m contributes exactly m - 1 lenses.
    """
    if report is None:
        report = count_crossings(d)
    records: List[LensRecord] = []
    for cls in parallel_classes(d):
        records.extend(_class_lenses(d, cls, report))
    records.sort(key=lambda r: (r.endpoints, r.edge_ids))
    return tuple(records)


def separated_verdict(
    d: Drawing, report: Optional[CrossingReport] = None
) -> SeparatedVerdict:
    """Separation and single-crossing status with explicit issues.

    Classes whose edges cross internally yield ``crossing_parallel_pair``
    issues and no lens records; lenses of the remaining classes with no
    vertex inside yield ``empty_lens``; edge pairs crossing twice or more
    yield ``double_crossing_pair``.
    """
    if report is None:
        report = count_crossings(d)
    issues: List[SeparationIssue] = []
    records: List[LensRecord] = []
    for cls in parallel_classes(d):
        bad = _class_crossing_pairs(cls, report)
        if bad:
            issues.extend(
                SeparationIssue(
                    "crossing_parallel_pair",
                    pair,
                    f"between vertices {cls.endpoints[0]} and {cls.endpoints[1]}",
                )
                for pair in bad
            )
            continue
        records.extend(_class_lenses(d, cls, report))
    records.sort(key=lambda r: (r.endpoints, r.edge_ids))
    for rec in records:
        if not rec.interior_vertices:
            issues.append(
                SeparationIssue(
                    "empty_lens",
                    rec.edge_ids,
                    f"between vertices {rec.endpoints[0]} and {rec.endpoints[1]}",
                )
            )
    for (i, j), c in sorted(report.pair_counts.items()):
        if c > 1:
            issues.append(
                SeparationIssue("double_crossing_pair", (i, j), f"{c} crossings")
            )
    separated = not any(
        i.kind in ("crossing_parallel_pair", "empty_lens") for i in issues
    )
    single = not any(i.kind == "double_crossing_pair" for i in issues)
    return SeparatedVerdict(separated, single, tuple(issues), tuple(records))
