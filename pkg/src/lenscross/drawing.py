"""Topological multigraph drawings: vertices at exact rational points,
edges drawn as polyline arcs.

A drawing is structurally sound when every arc is a polyline with at
least one segment, consecutive polyline points are distinct, and the two
ends of each arc sit exactly on the drawn endpoints of its edge.  Those
invariants are enforced at construction time.  General position on top
of that (no overlapping arcs, no arc through a vertex, no three arcs
through one interior point, intersections only in segment interiors) is
checked by :func:`validate`, which reports exact witnesses rather than a
bare boolean.

Parallel edges are permitted and are the interesting case downstream;
loops are not.  Adjacent edges may cross.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .geometry import (
    Intersection,
    IntersectionKind,
    Point,
    Segment,
    as_rational,
    point_on_closed_segment,
    segment_intersection,
)

VertexId = int


class ParseError(ValueError):
    """Input that is not syntactically a drawing (bad JSON, bad coordinate)."""


class SchemaError(ValueError):
    """Well-formed JSON that violates the drawing schema (loops, bad ids)."""


class InvalidDrawing(ValueError):
    """A drawing failed general-position validation where validity was required."""

    def __init__(self, violations: Tuple["Violation", ...]):
        self.violations = violations
        preview = "; ".join(v.describe() for v in violations[:3])
        more = "" if len(violations) <= 3 else f" (+{len(violations) - 3} more)"
        super().__init__(f"drawing fails validation: {preview}{more}")


@dataclass(frozen=True)
class Arc:
    """Polyline support of one drawn edge."""

    points: Tuple[Point, ...]

    def __post_init__(self):
        if len(self.points) < 2:
            raise ValueError("arc needs at least two points")
        for a, b in zip(self.points, self.points[1:]):
            if a == b:
                raise ValueError(f"repeated consecutive arc point {a}")

    def segments(self) -> List[Segment]:
        return [Segment(a, b) for a, b in zip(self.points, self.points[1:])]


@dataclass(frozen=True)
class Edge:
    u: VertexId
    v: VertexId
    arc: Arc

    def __post_init__(self):
        if self.u == self.v:
            raise ValueError(f"loop edge at vertex {self.u}")
        if self.u < 0 or self.v < 0:
            raise ValueError("vertex ids must be nonnegative")

    def endpoints(self) -> frozenset:
        return frozenset((self.u, self.v))


@dataclass(frozen=True)
class Drawing:
    """An immutable drawing; edge ids are positions in ``edges``."""

    vertex_points: Tuple[Point, ...]
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        seen: Dict[Point, int] = {}
        for i, p in enumerate(self.vertex_points):
            if p in seen:
                raise ValueError(
                    f"vertices {seen[p]} and {i} share the point {p}"
                )
            seen[p] = i
        n = len(self.vertex_points)
        for eid, e in enumerate(self.edges):
            if e.u >= n or e.v >= n:
                raise ValueError(f"edge {eid} references a missing vertex")
            if e.arc.points[0] != self.vertex_points[e.u]:
                raise ValueError(
                    f"edge {eid}: arc starts at {e.arc.points[0]}, vertex {e.u} "
                    f"is drawn at {self.vertex_points[e.u]}"
                )
            if e.arc.points[-1] != self.vertex_points[e.v]:
                raise ValueError(
                    f"edge {eid}: arc ends away from its drawn endpoint"
                )

    @property
    def vertex_count(self) -> int:
        return len(self.vertex_points)

    @property
    def edge_count(self) -> int:
        return len(self.edges)


def drawing(vertices: Sequence[Tuple], edges: Sequence[Tuple[int, int, Sequence[Tuple]]]) -> Drawing:
    """Convenience constructor from bare coordinate tuples.

    ``edges`` entries are ``(u, v, arc_points)``; an empty/None arc means
    the straight segment between the two endpoints.
    """
    pts = tuple(Point(as_rational(x), as_rational(y)) for x, y in vertices)
    built = []
    for u, v, arc_points in edges:
        if not arc_points:
            arc = Arc((pts[u], pts[v]))
        else:
            arc = Arc(tuple(Point(as_rational(x), as_rational(y)) for x, y in arc_points))
        built.append(Edge(u, v, arc))
    return Drawing(pts, tuple(built))


def degree_sequence(d: Drawing) -> Tuple[int, ...]:
    """Vertex degrees with parallel edges counted per copy, vertex id order."""
    degs = [0] * d.vertex_count
    for e in d.edges:
        degs[e.u] += 1
        degs[e.v] += 1
    return tuple(degs)


# ---------------------------------------------------------------------------
# validation


VIOLATION_ARC_THROUGH_VERTEX = "arc_through_vertex"
VIOLATION_IMPROPER_TOUCH = "improper_touch"
VIOLATION_OVERLAP = "overlap"
VIOLATION_BREAKPOINT = "breakpoint_incidence"
VIOLATION_TRIPLE_POINT = "triple_point"
VIOLATION_SELF_INTERSECTION = "self_intersection"


@dataclass(frozen=True)
class Violation:
    kind: str
    edges: Tuple[int, ...]
    point: Optional[Point] = None
    note: str = ""

    def describe(self) -> str:
        where = f" at {self.point}" if self.point is not None else ""
        extra = f" ({self.note})" if self.note else ""
        return f"{self.kind} on edges {list(self.edges)}{where}{extra}"


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: Tuple[Violation, ...]

    def to_json_dict(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [
                {
                    "kind": v.kind,
                    "edges": list(v.edges),
                    "point": None if v.point is None else encode_point(v.point),
                    "note": v.note,
                }
                for v in self.violations
            ],
        }


_BBOX_SCALE = 1 << 20


def _floor_scaled(value) -> int:
    f = Fraction(value)
    return (f.numerator * _BBOX_SCALE) // f.denominator


def _ceil_scaled(value) -> int:
    f = Fraction(value)
    return -((-f.numerator * _BBOX_SCALE) // f.denominator)


@dataclass(frozen=True)
class SegRec:
    """One arc segment with conservative integer bounding box.

    The scaled bounds are used only to skip pairs that provably cannot
    meet; every decision about pairs that survive the filter is exact.
    """

    edge_id: int
    seg_idx: int
    a: Point
    b: Point
    x0: int
    x1: int
    y0: int
    y1: int


def segment_records(d: Drawing) -> List[SegRec]:
    recs: List[SegRec] = []
    for eid, e in enumerate(d.edges):
        pts = e.arc.points
        for i in range(len(pts) - 1):
            a, b = pts[i], pts[i + 1]
            xs = (a.x, b.x) if a.x <= b.x else (b.x, a.x)
            ys = (a.y, b.y) if a.y <= b.y else (b.y, a.y)
            recs.append(
                SegRec(
                    eid,
                    i,
                    a,
                    b,
                    _floor_scaled(xs[0]),
                    _ceil_scaled(xs[1]),
                    _floor_scaled(ys[0]),
                    _ceil_scaled(ys[1]),
                )
            )
    return recs


def _is_arc_terminal(d: Drawing, rec: SegRec, p: Point) -> bool:
    pts = d.edges[rec.edge_id].arc.points
    if rec.seg_idx == 0 and p == pts[0]:
        return True
    if rec.seg_idx == len(pts) - 2 and p == pts[-1]:
        return True
    return False


def classify_segment_pair(
    d: Drawing, r1: SegRec, r2: SegRec
) -> Tuple[Optional[Violation], Optional[Point]]:
    """Exact outcome for one segment pair that survived the bbox filter.

    Returns ``(violation, crossing_point)``; at most one of the two is
    set.  Pairs from the same arc are checked for self-intersection,
    pairs from distinct arcs for general-position violations and proper
    crossings.
    """
    res = segment_intersection(Segment(r1.a, r1.b), Segment(r2.a, r2.b))
    kind = res.kind
    if r1.edge_id == r2.edge_id:
        adjacent = abs(r1.seg_idx - r2.seg_idx) == 1
        if kind is IntersectionKind.DISJOINT:
            return None, None
        if adjacent and kind is IntersectionKind.ENDPOINT_TOUCH:
            return None, None
        lo, hi = sorted((r1.seg_idx, r2.seg_idx))
        return (
            Violation(
                VIOLATION_SELF_INTERSECTION,
                (r1.edge_id,),
                res.point,
                f"segments {lo} and {hi}",
            ),
            None,
        )

    pair = (r1.edge_id, r2.edge_id) if r1.edge_id < r2.edge_id else (r2.edge_id, r1.edge_id)
    if kind is IntersectionKind.DISJOINT:
        return None, None
    if kind is IntersectionKind.PROPER_CROSS:
        return None, res.point
    if kind is IntersectionKind.OVERLAP:
        return Violation(VIOLATION_OVERLAP, pair, None, "collinear overlap"), None
    if kind is IntersectionKind.ENDPOINT_TOUCH:
        p = res.point
        if _is_arc_terminal(d, r1, p) and _is_arc_terminal(d, r2, p):
            # arcs meeting at a drawn vertex they share; legitimate
            return None, None
        return Violation(VIOLATION_BREAKPOINT, pair, p, "meeting at a polyline breakpoint"), None
    # IMPROPER_TOUCH: an endpoint of one segment inside the other
    p = res.point
    if _is_arc_terminal(d, r1, p) or _is_arc_terminal(d, r2, p):
        return Violation(VIOLATION_IMPROPER_TOUCH, pair, p, "arc endpoint inside another arc"), None
    return Violation(VIOLATION_BREAKPOINT, pair, p, "breakpoint inside a segment"), None


def vertex_incidence_violations(d: Drawing) -> List[Violation]:
    """Arcs passing through any drawn vertex away from their proper ends."""
    out: List[Violation] = []
    for eid, e in enumerate(d.edges):
        pts = e.arc.points
        interior = pts[1:-1]
        for w, wp in enumerate(d.vertex_points):
            for q in interior:
                if q == wp:
                    out.append(
                        Violation(
                            VIOLATION_ARC_THROUGH_VERTEX,
                            (eid,),
                            wp,
                            f"breakpoint at vertex {w}",
                        )
                    )
            for i in range(len(pts) - 1):
                a, b = pts[i], pts[i + 1]
                if wp == a or wp == b:
                    continue
                if point_on_closed_segment(wp, a, b):
                    out.append(
                        Violation(
                            VIOLATION_ARC_THROUGH_VERTEX,
                            (eid,),
                            wp,
                            f"vertex {w} inside a segment",
                        )
                    )
    return out


def triple_point_violations(
    crossings: Iterable[Tuple[Tuple[int, int], Point]]
) -> List[Violation]:
    by_point: Dict[Point, set] = {}
    for (i, j), p in crossings:
        by_point.setdefault(p, set()).update((i, j))
    out = []
    for p, edges in sorted(by_point.items(), key=lambda kv: kv[0].key()):
        if len(edges) >= 3:
            out.append(
                Violation(VIOLATION_TRIPLE_POINT, tuple(sorted(edges)), p, "common interior point")
            )
    return out


@dataclass
class ScanOutcome:
    violations: List[Violation]
    pair_counts: Dict[Tuple[int, int], int]
    crossing_points: List[Tuple[Tuple[int, int], Point]]


def scan_all_pairs(d: Drawing) -> ScanOutcome:
    """Exhaustive pairwise segment scan: every violation and every proper
    crossing, found by brute force over all segment pairs."""
    recs = segment_records(d)
    nseg = len(recs)
    x0 = [r.x0 for r in recs]
    x1 = [r.x1 for r in recs]
    y0 = [r.y0 for r in recs]
    y1 = [r.y1 for r in recs]
    violations: List[Violation] = []
    pair_counts: Dict[Tuple[int, int], int] = {}
    points: List[Tuple[Tuple[int, int], Point]] = []
    for i in range(nseg):
        xi0 = x0[i]
        xi1 = x1[i]
        yi0 = y0[i]
        yi1 = y1[i]
        ri = recs[i]
        for j in range(i + 1, nseg):
            if x0[j] > xi1 or x1[j] < xi0 or y0[j] > yi1 or y1[j] < yi0:
                continue
            violation, cross = classify_segment_pair(d, ri, recs[j])
            if violation is not None:
                violations.append(violation)
            elif cross is not None:
                rj = recs[j]
                pair = (
                    (ri.edge_id, rj.edge_id)
                    if ri.edge_id < rj.edge_id
                    else (rj.edge_id, ri.edge_id)
                )
                pair_counts[pair] = pair_counts.get(pair, 0) + 1
                points.append((pair, cross))
    violations.extend(vertex_incidence_violations(d))
    violations.extend(triple_point_violations(points))
    return ScanOutcome(violations, pair_counts, points)


def validate(d: Drawing) -> ValidationReport:
    """General-position check with exact witnesses.

    Reported violation kinds: arcs through a vertex, improper touches,
    collinear overlaps, intersections at polyline breakpoints, three or
    more arcs through one interior point, and arc self-intersections.
    Shared endpoints of adjacent edges are legitimate and not reported.
    """
    outcome = scan_all_pairs(d)
    ordered = tuple(
        sorted(
            outcome.violations,
            key=lambda v: (v.kind, v.edges, () if v.point is None else v.point.key()),
        )
    )
    return ValidationReport(ok=not ordered, violations=ordered)


# ---------------------------------------------------------------------------
# restriction


def restricted(
    d: Drawing,
    vertex_ids: Sequence[int],
    edge_ids: Optional[Sequence[int]] = None,
) -> Tuple[Drawing, Dict[int, int], Tuple[int, ...]]:
    """Sub-drawing induced by ``vertex_ids`` (optionally a chosen edge subset).

    Returns the new drawing, the old-to-new vertex id map, and the kept
    old edge ids in their new order.  When ``edge_ids`` is omitted every
    edge with both endpoints kept survives.
    """
    kept = sorted(set(vertex_ids))
    vmap = {old: new for new, old in enumerate(kept)}
    keep_set = set(kept)
    if edge_ids is None:
        chosen = [i for i, e in enumerate(d.edges) if e.u in keep_set and e.v in keep_set]
    else:
        chosen = sorted(set(edge_ids))
        for i in chosen:
            e = d.edges[i]
            if e.u not in keep_set or e.v not in keep_set:
                raise ValueError(f"edge {i} has an endpoint outside the kept vertices")
    new_edges = tuple(
        Edge(vmap[d.edges[i].u], vmap[d.edges[i].v], d.edges[i].arc) for i in chosen
    )
    sub = Drawing(tuple(d.vertex_points[v] for v in kept), new_edges)
    return sub, vmap, tuple(chosen)


# ---------------------------------------------------------------------------
# serialization


def encode_coord(value: Fraction):
    f = Fraction(value)
    if f.denominator == 1:
        return f.numerator
    return f"{f.numerator}/{f.denominator}"


def encode_point(p: Point) -> list:
    return [encode_coord(p.x), encode_coord(p.y)]


def _decode_coord(raw, where: str) -> Fraction:
    if isinstance(raw, bool):
        raise ParseError(f"{where}: booleans are not coordinates")
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, float):
        raise ParseError(f"{where}: floating-point coordinate {raw!r} rejected")
    if isinstance(raw, str):
        parts = raw.split("/")
        if len(parts) != 2:
            raise ParseError(f"{where}: malformed rational {raw!r}, expected 'p/q'")
        try:
            num = int(parts[0])
            den = int(parts[1])
        except ValueError as exc:
            raise ParseError(f"{where}: malformed rational {raw!r}") from exc
        if den <= 0:
            raise ParseError(f"{where}: denominator must be positive in {raw!r}")
        return Fraction(num, den)
    raise ParseError(f"{where}: coordinate must be int or 'p/q', got {type(raw).__name__}")


def _decode_point(raw, where: str) -> Point:
    if not isinstance(raw, (list, tuple)) or len(raw) != 2:
        raise ParseError(f"{where}: point must be a [x, y] pair")
    return Point(_decode_coord(raw[0], f"{where}[0]"), _decode_coord(raw[1], f"{where}[1]"))


def to_json_data(d: Drawing) -> dict:
    return {
        "vertices": [encode_point(p) for p in d.vertex_points],
        "edges": [
            {
                "u": e.u,
                "v": e.v,
                "arc": [encode_point(p) for p in e.arc.points],
            }
            for e in d.edges
        ],
    }


def save(d: Drawing) -> str:
    """Canonical JSON text for a drawing (stable bytes for equal inputs)."""
    return json.dumps(to_json_data(d), indent=2) + "\n"


def from_json_data(data) -> Drawing:
    if not isinstance(data, dict):
        raise SchemaError("top level must be an object")
    for key in ("vertices", "edges"):
        if key not in data:
            raise SchemaError(f"missing key {key!r}")
    unknown = set(data) - {"vertices", "edges"}
    if unknown:
        raise SchemaError(f"unknown keys {sorted(unknown)}")
    raw_vertices = data["vertices"]
    raw_edges = data["edges"]
    if not isinstance(raw_vertices, list) or not isinstance(raw_edges, list):
        raise SchemaError("'vertices' and 'edges' must be arrays")
    points = tuple(
        _decode_point(rv, f"vertices[{i}]") for i, rv in enumerate(raw_vertices)
    )
    n = len(points)
    edges = []
    for i, re in enumerate(raw_edges):
        where = f"edges[{i}]"
        if not isinstance(re, dict):
            raise SchemaError(f"{where}: must be an object")
        missing = {"u", "v", "arc"} - set(re)
        if missing:
            raise SchemaError(f"{where}: missing {sorted(missing)}")
        u, v = re["u"], re["v"]
        if not isinstance(u, int) or not isinstance(v, int) or isinstance(u, bool) or isinstance(v, bool):
            raise SchemaError(f"{where}: u and v must be integers")
        if not 0 <= u < n or not 0 <= v < n:
            raise SchemaError(f"{where}: vertex id out of range")
        if u == v:
            raise SchemaError(f"{where}: loop edges are not allowed")
        if not isinstance(re["arc"], list) or len(re["arc"]) < 2:
            raise SchemaError(f"{where}: arc must list at least two points")
        arc_points = tuple(
            _decode_point(rp, f"{where}.arc[{k}]") for k, rp in enumerate(re["arc"])
        )
        try:
            arc = Arc(arc_points)
            edge = Edge(u, v, arc)
        except ValueError as exc:
            raise SchemaError(f"{where}: {exc}") from exc
        if arc_points[0] != points[u] or arc_points[-1] != points[v]:
            raise SchemaError(f"{where}: arc ends do not match the drawn endpoints")
        edges.append(edge)
    try:
        return Drawing(points, tuple(edges))
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def load(text) -> Drawing:
    """Parse a drawing from JSON text or bytes."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return from_json_data(data)
