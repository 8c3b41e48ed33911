import sys
import time

sys.path.insert(0, "src")

from lenscross.crossings import count_crossings, is_single_crossing
from lenscross.drawing import degree_sequence, validate
from lenscross.generators import (
    gen_convex_complete,
    gen_nested_lenses,
    gen_random_separated,
    gen_semicircle,
)
from lenscross.lenses import lenses, parallel_classes, separated_verdict


def comb4(n):
    return n * (n - 1) * (n - 2) * (n - 3) // 24


# nested
for k in range(1, 7):
    d = gen_nested_lenses(k)
    assert d.vertex_count == k + 1 and d.edge_count == k
    rep = count_crossings(d)
    assert rep.total == 0
    recs = lenses(d, rep)
    assert len(recs) == k - 1, (k, len(recs))
    assert all(r.size == 1 for r in recs)
    v = separated_verdict(d, rep)
    assert v.separated and v.single_crossing, (k, v.issues)
print("nested OK")

# convex
for n in range(3, 8):
    d = gen_convex_complete(n)
    rep = count_crossings(d)
    assert rep.total == comb4(n), (n, rep.total)
    assert rep.max_pair <= 1
    v = separated_verdict(d, rep)
    assert v.separated and v.single_crossing
print("convex OK")

# semicircle small
for n in (2, 3, 4, 5):
    t0 = time.time()
    d = gen_semicircle(n)
    expect_e = (n**3 - n) // 6
    assert d.edge_count == expect_e, (n, d.edge_count, expect_e)
    rep = count_crossings(d)
    v = separated_verdict(d, rep)
    classes = parallel_classes(d)
    # parallel pairs never cross
    for cls in classes:
        for a in range(len(cls.edge_ids)):
            for b in range(a + 1, len(cls.edge_ids)):
                assert rep.count(cls.edge_ids[a], cls.edge_ids[b]) == 0, (
                    n,
                    cls.endpoints,
                )
    assert v.separated, (n, [i for i in v.issues if i.kind != "double_crossing_pair"])
    assert rep.max_pair <= 2, (n, rep.max_pair)
    print(
        f"semicircle n={n}: e={d.edge_count} cr={rep.total} max_pair={rep.max_pair} "
        f"single={v.single_crossing} lenses={len(v.lens_records)} "
        f"[{time.time()-t0:.1f}s]"
    )
    if n >= 5:
        assert rep.max_pair == 2, (n, rep.max_pair)
        assert not v.single_crossing

# random
for seed in range(6):
    d = gen_random_separated(6, 2, seed)
    rep = count_crossings(d)
    v = separated_verdict(d, rep)
    assert v.separated and v.single_crossing, (seed, v.issues)
    print(
        f"random seed={seed}: n={d.vertex_count} e={d.edge_count} "
        f"m={max(c.multiplicity for c in parallel_classes(d))} cr={rep.total} "
        f"lenses={len(v.lens_records)}"
    )
print("random OK")
