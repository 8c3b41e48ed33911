"""Exact crossing reports for validated drawings.

Two independent engines produce the same report: a brute-force pass over
all segment pairs, and a sweep over x-sorted segments with an active
set.  Both refuse drawings that fail general position, since crossing
counts are only meaningful there.  The brute-force engine is the
reference; the sweep exists to be fast and to disagree loudly in tests
if either traversal is wrong.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .drawing import (
    Drawing,
    InvalidDrawing,
    ScanOutcome,
    classify_segment_pair,
    scan_all_pairs,
    segment_records,
    triple_point_violations,
    vertex_incidence_violations,
    encode_point,
)
from .geometry import Point

EdgePair = Tuple[int, int]


@dataclass(frozen=True)
class CrossingReport:
    """Exact crossing data; ``pair_counts`` holds only crossing pairs."""

    pair_counts: Dict[EdgePair, int]
    total: int
    max_pair: int
    crossing_points: Tuple[Tuple[EdgePair, Point], ...]

    def count(self, i: int, j: int) -> int:
        pair = (i, j) if i < j else (j, i)
        return self.pair_counts.get(pair, 0)

    def to_json_dict(self) -> dict:
        return {
            "total": self.total,
            "max_pair": self.max_pair,
            "pairs": [
                {"edges": [i, j], "count": c}
                for (i, j), c in sorted(self.pair_counts.items())
            ],
            "points": [
                {"edges": [i, j], "point": encode_point(p)}
                for (i, j), p in self.crossing_points
            ],
        }


def _report_from_scan(outcome: ScanOutcome) -> CrossingReport:
    if outcome.violations:
        ordered = tuple(
            sorted(
                outcome.violations,
                key=lambda v: (v.kind, v.edges, () if v.point is None else v.point.key()),
            )
        )
        raise InvalidDrawing(ordered)
    counts = dict(sorted(outcome.pair_counts.items()))
    points = tuple(
        sorted(outcome.crossing_points, key=lambda item: (item[0], item[1].key()))
    )
    total = sum(counts.values())
    max_pair = max(counts.values(), default=0)
    return CrossingReport(counts, total, max_pair, points)


def count_crossings(d: Drawing) -> CrossingReport:
    """Reference engine: all segment pairs, exact arithmetic throughout.

    Raises :class:`InvalidDrawing` when the drawing fails validation.
    """
    return _report_from_scan(scan_all_pairs(d))


def _scan_sweep(d: Drawing) -> ScanOutcome:
    recs = segment_records(d)
    order = sorted(range(len(recs)), key=lambda i: (recs[i].x0, recs[i].x1, i))
    active: Dict[int, None] = {}
    expiry: List[Tuple[int, int]] = []
    violations = []
    pair_counts: Dict[EdgePair, int] = {}
    points: List[Tuple[EdgePair, Point]] = []
    for idx in order:
        rec = recs[idx]
        while expiry and expiry[0][0] < rec.x0:
            _, dead = heapq.heappop(expiry)
            active.pop(dead, None)
        for other_idx in active:
            other = recs[other_idx]
            if other.y0 > rec.y1 or other.y1 < rec.y0:
                continue
            violation, cross = classify_segment_pair(d, other, rec)
            if violation is not None:
                violations.append(violation)
            elif cross is not None:
                pair = (
                    (other.edge_id, rec.edge_id)
                    if other.edge_id < rec.edge_id
                    else (rec.edge_id, other.edge_id)
                )
                pair_counts[pair] = pair_counts.get(pair, 0) + 1
                points.append((pair, cross))
        active[idx] = None
        heapq.heappush(expiry, (rec.x1, idx))
    violations.extend(vertex_incidence_violations(d))
    violations.extend(triple_point_violations(points))
    return ScanOutcome(violations, pair_counts, points)


def count_crossings_sweep(d: Drawing) -> CrossingReport:
    """Sweep engine: segments enter at their left bound and expire past
    their right bound, so only x-overlapping pairs are examined.  Agrees
    with :func:`count_crossings` field by field on every drawing."""
    return _report_from_scan(_scan_sweep(d))


def is_single_crossing(d: Drawing, report: Optional[CrossingReport] = None) -> bool:
    """True when no two edges cross more than once."""
    if report is None:
        report = count_crossings(d)
    return report.max_pair <= 1
