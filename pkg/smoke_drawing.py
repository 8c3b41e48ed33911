import sys

sys.path.insert(0, "src")

from fractions import Fraction as F

from lenscross.drawing import (
    Arc,
    Drawing,
    Edge,
    InvalidDrawing,
    ParseError,
    SchemaError,
    degree_sequence,
    drawing,
    load,
    restricted,
    save,
    validate,
)
from lenscross.crossings import count_crossings, count_crossings_sweep, is_single_crossing
from lenscross.geometry import Point

# 1. proper cross
d1 = drawing(
    [(0, 0), (2, 2), (0, 2), (2, 0)],
    [(0, 1, None), (2, 3, None)],
)
rep = validate(d1)
assert rep.ok, rep
cr = count_crossings(d1)
assert cr.total == 1 and cr.max_pair == 1
assert cr.crossing_points[0][1] == Point(F(1), F(1))
assert count_crossings_sweep(d1) == cr
assert is_single_crossing(d1)

# 2. shared endpoint path, no crossing
d2 = drawing([(0, 0), (1, 1), (2, 0)], [(0, 1, None), (1, 2, None)])
assert validate(d2).ok
assert count_crossings(d2).total == 0

# 3. arc through a vertex
d3 = drawing([(0, 0), (2, 0), (1, 0)], [(0, 1, None)])
r3 = validate(d3)
assert not r3.ok
assert any(v.kind == "arc_through_vertex" for v in r3.violations), r3
try:
    count_crossings(d3)
    raise AssertionError("expected InvalidDrawing")
except InvalidDrawing as exc:
    assert exc.violations

# 4. overlap
d4 = drawing(
    [(0, 0), (3, 0), (1, 0), (2, 0)],
    [(0, 1, None), (2, 3, None)],
)
r4 = validate(d4)
kinds4 = {v.kind for v in r4.violations}
assert "overlap" in kinds4, r4
# endpoints of edge 1 interior to edge 0 also put arcs through vertices
assert "arc_through_vertex" in kinds4

# 5. breakpoint incidence: edge 1 bends exactly on edge 0's interior
d5 = drawing(
    [(0, 0), (4, 0), (1, 2), (3, 2)],
    [(0, 1, None), (2, 3, [(1, 2), (2, 0), (3, 2)])],
)
r5 = validate(d5)
assert any(v.kind == "breakpoint_incidence" for v in r5.violations), r5

# 6. improper touch: vertex of edge 1 sits inside edge 0's arc
d6 = drawing(
    [(0, 0), (4, 0), (2, 0), (2, 2)],
    [(0, 1, None), (2, 3, None)],
)
r6 = validate(d6)
kinds6 = {v.kind for v in r6.violations}
assert "improper_touch" in kinds6, r6
assert "arc_through_vertex" in kinds6

# 7. triple point at origin
d7 = drawing(
    [(-1, 0), (1, 0), (0, -1), (0, 1), (-1, -1), (1, 1)],
    [(0, 1, None), (2, 3, None), (4, 5, None)],
)
r7 = validate(d7)
assert any(v.kind == "triple_point" for v in r7.violations), r7

# 8. self-intersecting arc
d8 = drawing(
    [(0, 0), (3, 1)],
    [(0, 1, [(0, 0), (4, 0), (4, 2), (2, -1), (3, 1)])],
)
r8 = validate(d8)
assert any(v.kind == "self_intersection" for v in r8.violations), r8

# 9. bigon: two parallel edges, no crossing
d9 = drawing(
    [(0, 0), (4, 0)],
    [(0, 1, [(0, 0), (2, 1), (4, 0)]), (0, 1, [(0, 0), (2, -1), (4, 0)])],
)
assert validate(d9).ok
assert count_crossings(d9).total == 0
assert degree_sequence(d9) == (2, 2)

# 10. pentagram: 5 convex points, the 5 "diagonal" chords, each pair crossing once
pent_pts = [(0, 0), (4, 0), (6, 3), (2, 6), (-2, 3)]
diags = [(i, (i + 2) % 5) for i in range(5)]
d10 = drawing(pent_pts, [(u, v, None) for u, v in diags])
r10 = validate(d10)
assert r10.ok, r10
c10 = count_crossings(d10)
assert c10.total == 5, c10.total
assert c10.max_pair == 1
assert count_crossings_sweep(d10) == c10

# 11. json round-trip
text = save(d10)
d10b = load(text)
assert d10b == d10
assert save(d10b) == text

# rational coords round-trip
dr = drawing([(F(1, 3), 0), (1, F(7, 2))], [(0, 1, None)])
assert load(save(dr)) == dr
assert '"1/3"' in save(dr)

# parse/schema errors
for bad, exc_type in [
    ("{not json", ParseError),
    ('{"vertices": [[0.5, 0]], "edges": []}', ParseError),
    ('{"vertices": [[0, 0]], "edges": [], "extra": 1}', SchemaError),
    ('{"vertices": [[0, 0], [1, 1]], "edges": [{"u": 0, "v": 0, "arc": [[0,0],[1,1]]}]}', SchemaError),
    ('{"vertices": [[0, 0], [1, 1]], "edges": [{"u": 0, "v": 5, "arc": [[0,0],[1,1]]}]}', SchemaError),
    ('{"vertices": [[0, 0], [0, 0]], "edges": []}', SchemaError),
    ('{"vertices": [[0, 0], [1, 1]], "edges": [{"u": 0, "v": 1, "arc": [[0,0],[2,2]]}]}', SchemaError),
]:
    try:
        load(bad)
        raise AssertionError(f"expected {exc_type.__name__} for {bad[:40]}")
    except exc_type:
        pass

# 12. restriction
sub, vmap, kept = restricted(d10, [0, 2, 3])
assert sub.vertex_count == 3
assert kept == (0, 3), kept
assert vmap == {0: 0, 2: 1, 3: 2}
assert validate(sub).ok

print("drawing OK")
