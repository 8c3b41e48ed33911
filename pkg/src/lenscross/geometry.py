"""Exact planar geometry over rational coordinates.

Every predicate in this module works on arbitrary-precision rationals
(``fractions.Fraction``) and returns a discrete classification.  No
floating point is consulted anywhere, so each answer is a certificate
rather than an estimate.  Degenerate configurations (collinear triples,
touching endpoints, overlapping collinear segments) are classified
explicitly instead of being perturbed away.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum
from fractions import Fraction
from typing import Optional, Sequence, Tuple

Rational = Fraction


class NonSimplePolygon(ValueError):
    """Polygon handed to a point-location query self-intersects."""


def as_rational(value) -> Fraction:
    """Coerce an exact number (int, Fraction, or a ``"p/q"`` string) to Fraction.

    Floats are rejected on purpose: a binary float silently misrepresents
    most decimal inputs, and exactness is the whole point of this kernel.
    """
    if isinstance(value, float):
        raise TypeError(
            "floating-point coordinates are not accepted; pass int, Fraction, or 'p/q'"
        )
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


@dataclass(frozen=True)
class Point:
    """A point with exact rational coordinates.

    Coordinates may be ``int`` or ``Fraction``; both are exact and mix
    freely under arithmetic and comparison.
    """

    x: Fraction
    y: Fraction

    def __repr__(self) -> str:  # compact: Fraction reprs are noisy
        return f"Point({self.x}, {self.y})"

    def key(self) -> Tuple[Fraction, Fraction]:
        """Sort key (x, then y) for deterministic orderings."""
        return (self.x, self.y)


def pt(x, y) -> Point:
    """Build a Point, coercing exact inputs through :func:`as_rational`."""
    return Point(as_rational(x), as_rational(y))


@dataclass(frozen=True)
class Segment:
    """A closed straight segment with distinct endpoints."""

    a: Point
    b: Point

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError(f"degenerate segment at {self.a}")

    def reversed(self) -> "Segment":
        return Segment(self.b, self.a)


class Orientation(IntEnum):
    """Position of a query point relative to a directed line.

    The integer values are the sign of the underlying determinant, so
    ``-orientation`` flips left and right.
    """

    LEFT = 1
    COLLINEAR = 0
    RIGHT = -1


def _sign(value) -> int:
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0


def _orient_sign(px, py, qx, qy, rx, ry) -> int:
    # sign of the 2x2 determinant | q-p  r-p |, exact in rational arithmetic
    return _sign((qx - px) * (ry - py) - (qy - py) * (rx - px))


def orient(p: Point, q: Point, r: Point) -> Orientation:
    """Orientation of r relative to the directed line p -> q.

    LEFT means the determinant of (q - p, r - p) is positive.  Exact for
    all rational inputs, including collinear triples.
    """
    return Orientation(_orient_sign(p.x, p.y, q.x, q.y, r.x, r.y))


class IntersectionKind(Enum):
    DISJOINT = "disjoint"
    PROPER_CROSS = "proper_cross"
    ENDPOINT_TOUCH = "endpoint_touch"
    IMPROPER_TOUCH = "improper_touch"
    OVERLAP = "overlap"


@dataclass(frozen=True)
class Intersection:
    """Classification of a segment pair, with the witness point when the
    intersection is a single point (absent for DISJOINT and OVERLAP)."""

    kind: IntersectionKind
    point: Optional[Point] = None


_DISJOINT = Intersection(IntersectionKind.DISJOINT)


def point_on_closed_segment(p: Point, a: Point, b: Point) -> bool:
    """Exact membership of p in the closed segment [a, b] (a != b allowed equal to p)."""
    if _orient_sign(a.x, a.y, b.x, b.y, p.x, p.y) != 0:
        return False
    if min(a.x, b.x) <= p.x <= max(a.x, b.x) and min(a.y, b.y) <= p.y <= max(a.y, b.y):
        return True
    return False


def _strictly_inside_collinear(p: Point, a: Point, b: Point) -> bool:
    # assumes p collinear with segment (a, b); strict interior test on the
    # dominant axis so zero-width spans cannot fool the comparison
    if a.x != b.x:
        lo, hi = (a.x, b.x) if a.x < b.x else (b.x, a.x)
        return lo < p.x < hi
    lo, hi = (a.y, b.y) if a.y < b.y else (b.y, a.y)
    return lo < p.y < hi


def _line_intersection_point(a: Point, b: Point, c: Point, d: Point) -> Point:
    # meeting point of lines ab and cd, which must not be parallel
    rx, ry = b.x - a.x, b.y - a.y
    sx, sy = d.x - c.x, d.y - c.y
    denom = rx * sy - ry * sx
    t = ((c.x - a.x) * sy - (c.y - a.y) * sx) / denom
    return Point(a.x + t * rx, a.y + t * ry)


def segment_intersection(s1: Segment, s2: Segment) -> Intersection:
    """Exact classification of how two segments meet.

    PROPER_CROSS carries the crossing point, which lies strictly inside
    both segments.  A single shared point that is an endpoint of both
    segments is ENDPOINT_TOUCH; an endpoint of one in the interior of the
    other is IMPROPER_TOUCH.  Collinear segments sharing more than a
    point are OVERLAP.  Everything else is DISJOINT.
    """
    a, b = s1.a, s1.b
    c, d = s2.a, s2.b

    o1 = _orient_sign(a.x, a.y, b.x, b.y, c.x, c.y)
    o2 = _orient_sign(a.x, a.y, b.x, b.y, d.x, d.y)

    if o1 == 0 and o2 == 0:
        return _collinear_classify(a, b, c, d)

    o3 = _orient_sign(c.x, c.y, d.x, d.y, a.x, a.y)
    o4 = _orient_sign(c.x, c.y, d.x, d.y, b.x, b.y)

    # shared endpoints first: non-collinear segments meet in at most one
    # point, so a shared endpoint is the entire intersection
    for p in (a, b):
        if p == c or p == d:
            return Intersection(IntersectionKind.ENDPOINT_TOUCH, p)

    if o1 == 0:
        if _strictly_inside_collinear(c, a, b):
            return Intersection(IntersectionKind.IMPROPER_TOUCH, c)
        return _DISJOINT
    if o2 == 0:
        if _strictly_inside_collinear(d, a, b):
            return Intersection(IntersectionKind.IMPROPER_TOUCH, d)
        return _DISJOINT
    if o3 == 0:
        if _strictly_inside_collinear(a, c, d):
            return Intersection(IntersectionKind.IMPROPER_TOUCH, a)
        return _DISJOINT
    if o4 == 0:
        if _strictly_inside_collinear(b, c, d):
            return Intersection(IntersectionKind.IMPROPER_TOUCH, b)
        return _DISJOINT

    if o1 != o2 and o3 != o4:
        return Intersection(
            IntersectionKind.PROPER_CROSS, _line_intersection_point(a, b, c, d)
        )
    return _DISJOINT


def _collinear_classify(a: Point, b: Point, c: Point, d: Point) -> Intersection:
    # all four points on one line; lexicographic (x, y) keys order points
    # consistently along any line, vertical ones included
    ka, kb = sorted((a.key(), b.key()))
    kc, kd = sorted((c.key(), d.key()))
    lo = max(ka, kc)
    hi = min(kb, kd)
    if lo > hi:
        return _DISJOINT
    if lo == hi:
        p = Point(*lo)
        if p in (a, b) and p in (c, d):
            return Intersection(IntersectionKind.ENDPOINT_TOUCH, p)
        return Intersection(IntersectionKind.IMPROPER_TOUCH, p)
    return Intersection(IntersectionKind.OVERLAP)


class PolygonLocation(Enum):
    INSIDE = "inside"
    ON_BOUNDARY = "on_boundary"
    OUTSIDE = "outside"


def _polygon_edges(polygon: Sequence[Point]):
    m = len(polygon)
    for i in range(m):
        yield polygon[i], polygon[(i + 1) % m]


def polygon_is_simple(polygon: Sequence[Point]) -> bool:
    """Exhaustive exact simplicity check (quadratic in edge count).

    Adjacent edges must meet exactly in their shared vertex; non-adjacent
    edges must be disjoint.  Repeated or collinear-overlapping vertices
    fail the check.
    """
    m = len(polygon)
    if m < 3:
        return False
    for i in range(m):
        if polygon[i] == polygon[(i + 1) % m]:
            return False
    edges = [Segment(a, b) for a, b in _polygon_edges(polygon)]
    for i in range(m):
        for j in range(i + 1, m):
            adjacent = (j == i + 1) or (i == 0 and j == m - 1)
            res = segment_intersection(edges[i], edges[j])
            if adjacent:
                if res.kind is not IntersectionKind.ENDPOINT_TOUCH:
                    return False
            elif res.kind is not IntersectionKind.DISJOINT:
                return False
    return True


def locate_in_simple_polygon(p: Point, polygon: Sequence[Point]) -> PolygonLocation:
    """Point location against a polygon the caller guarantees to be simple.

    Crossing-parity ray cast.  The ray direction is searched
    deterministically among (1, t) for t = 1, 2, 3, ... until the
    supporting line through p avoids every polygon vertex, which makes
    every boundary meeting a clean transversal crossing.
    """
    for a, b in _polygon_edges(polygon):
        if point_on_closed_segment(p, a, b):
            return PolygonLocation.ON_BOUNDARY

    t = _ray_direction(p, polygon)
    parity = 0
    for a, b in _polygon_edges(polygon):
        # side of the ray's supporting line: sign of (1,t) x (v - p)
        sa = _sign((a.y - p.y) - t * (a.x - p.x))
        sb = _sign((b.y - p.y) - t * (b.x - p.x))
        if sa == sb:  # both strictly one side; no vertex sits on the line
            continue
        # the segment crosses the line once; keep it when the crossing
        # parameter along direction (1, t) is positive
        rx, ry = b.x - a.x, b.y - a.y
        denom = ry - t * rx  # nonzero: endpoints straddle the line
        s_num = (a.y - p.y) - t * (a.x - p.x)
        u = -s_num / denom  # position along the edge, in (0, 1)
        cross_x = a.x + u * rx - p.x
        # s > 0 along (1, t) iff the x-offset is positive (direction has dx=1)
        if cross_x > 0:
            parity ^= 1
    return PolygonLocation.INSIDE if parity else PolygonLocation.OUTSIDE


def _ray_direction(p: Point, polygon: Sequence[Point]) -> int:
    bad = set()
    for v in polygon:
        if v.x != p.x:
            bad.add((v.y - p.y) / (v.x - p.x))
    t = 1
    while t in bad:
        t += 1
    return t


def point_in_polygon(p: Point, polygon: Sequence[Point]) -> PolygonLocation:
    """Exact point location in a simple polygon.

    Raises :class:`NonSimplePolygon` when the boundary self-intersects.
    The vertex order (clockwise or counterclockwise) and the starting
    vertex do not affect the answer.
    """
    if not polygon_is_simple(polygon):
        raise NonSimplePolygon(f"polygon with {len(polygon)} vertices is not simple")
    return locate_in_simple_polygon(p, polygon)
