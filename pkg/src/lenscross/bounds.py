"""Closed-form bounds checked against measured drawings, plus an exact
small-instance bisection width.

Bound values mixing rationals with logarithms are kept symbolic
(LogProduct / LogQuotient) and compared exactly; a verdict is True,
False, or None for not-applicable, never a guess.  The bisection search
is exhaustive and intended for n <= 10, e <= 16; everything downstream
that needs larger instances must stay within those caps per member.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .crossings import CrossingReport, count_crossings
from .drawing import Drawing, degree_sequence, restricted, validate, InvalidDrawing
from .exactnum import LogProduct, LogQuotient
from .lenses import (
    NotSeparated,
    NotSingleCrossing,
    SeparatedVerdict,
    parallel_classes,
    separated_verdict,
)


class DomainError(ValueError):
    """Bound formulas need at least two vertices."""


class TooLarge(ValueError):
    """Instance exceeds the exhaustive-search limits."""


class TooSmall(ValueError):
    """No bipartition with both parts within the size cap exists."""


SEPARATED_COEFF = Fraction(1, 10**25)
DEFAULT_C_PARAM = Fraction(1, 64)

BISECTION_MAX_VERTICES = 10
BISECTION_MAX_EDGES = 16


@dataclass(frozen=True)
class BoundValues:
    """Formula values for given (n, e, m); None when out of domain.

    classic_lower and multiplicity_lower carry the caller's constant;
    separated_lower carries the fixed 10^-25 coefficient.  All three
    are defined only for e >= 4n.  edge_cap is 64 n^2 log2 n and
    euler_lower is e - 3n, both total.
    """

    n: int
    e: int
    m: int
    c_param: Fraction
    classic_lower: Optional[Fraction]
    multiplicity_lower: Optional[Fraction]
    separated_lower: Optional[LogQuotient]
    euler_lower: int
    edge_cap: LogProduct


def evaluate_bounds(
    n: int, e: int, m: int = 1, c_param: Fraction = DEFAULT_C_PARAM
) -> BoundValues:
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    if e < 0:
        raise ValueError("edge count cannot be negative")
    if m < 1:
        raise ValueError("multiplicity is at least 1")
    c_param = Fraction(c_param)
    dense = e >= 4 * n
    e3 = Fraction(e) ** 3
    classic = c_param * e3 / n**2 if dense else None
    multi = c_param * e3 / (m * n**2) if dense else None
    separated = (
        LogQuotient(SEPARATED_COEFF * e3 / n**2, Fraction(e, n)) if dense else None
    )
    return BoundValues(
        n=n,
        e=e,
        m=m,
        c_param=c_param,
        classic_lower=classic,
        multiplicity_lower=multi,
        separated_lower=separated,
        euler_lower=e - 3 * n,
        edge_cap=LogProduct(Fraction(64 * n * n), n),
    )


@dataclass(frozen=True)
class BoundReport:
    n: int
    e: int
    m: int
    cr_actual: int
    separated: bool
    single_crossing: bool
    values: BoundValues
    verdicts: Dict[str, Optional[bool]]

    def to_json_dict(self) -> dict:
        def show(v):
            if v is None:
                return None
            return str(v)

        return {
            "n": self.n,
            "e": self.e,
            "m": self.m,
            "cr_actual": self.cr_actual,
            "separated": self.separated,
            "single_crossing": self.single_crossing,
            "values": {
                "classic_lower": show(self.values.classic_lower),
                "multiplicity_lower": show(self.values.multiplicity_lower),
                "separated_lower": show(self.values.separated_lower),
                "euler_lower": self.values.euler_lower,
                "edge_cap": str(self.values.edge_cap),
            },
            "verdicts": dict(self.verdicts),
        }


def check_drawing_bounds(
    d: Drawing,
    c_param: Fraction = DEFAULT_C_PARAM,
    report: Optional[CrossingReport] = None,
    verdict: Optional[SeparatedVerdict] = None,
) -> BoundReport:
    """Measure a drawing and compare it against every applicable bound.

    The edge cap and the crossing lower bounds that assume separation
    are gated on the separated single-crossing verdict; the plain
    multiplicity bound needs only e >= 4n, and the classic form
    additionally requires a simple graph.  Verdict None means the
    bound's hypotheses do not hold for this drawing.
    """
    if report is None:
        report = count_crossings(d)
    if verdict is None:
        verdict = separated_verdict(d, report)
    n = d.vertex_count
    e = d.edge_count
    classes = parallel_classes(d)
    m = max((c.multiplicity for c in classes), default=0)
    cr = report.total
    values = evaluate_bounds(n, e, max(m, 1), c_param)
    ssc = verdict.separated and verdict.single_crossing
    dense = e >= 4 * n
    verdicts: Dict[str, Optional[bool]] = {
        "edge_cap": (e <= values.edge_cap) if ssc else None,
        "euler_crossing_lower": (cr >= values.euler_lower) if ssc else None,
        "separated_crossing_lower": (
            (cr >= values.separated_lower) if (ssc and dense) else None
        ),
        "multiplicity_crossing_lower": (
            (cr >= values.multiplicity_lower) if dense else None
        ),
        "classic_crossing_lower": (
            (cr >= values.classic_lower) if (dense and m == 1) else None
        ),
    }
    return BoundReport(
        n=n,
        e=e,
        m=m,
        cr_actual=cr,
        separated=verdict.separated,
        single_crossing=verdict.single_crossing,
        values=values,
        verdicts=verdicts,
    )


# ---------------------------------------------------------------------------
# mutual-crossing (thrackle-premise) bound


@dataclass(frozen=True)
class ThrackleCheck:
    premise_holds: bool
    bound_holds: bool
    simple: bool
    single_crossing: bool
    noncrossing_independent_pairs: Tuple[Tuple[int, int], ...]

    def to_json_dict(self) -> dict:
        return {
            "premise_holds": self.premise_holds,
            "bound_holds": self.bound_holds,
            "simple": self.simple,
            "single_crossing": self.single_crossing,
            "noncrossing_independent_pairs": [
                list(p) for p in self.noncrossing_independent_pairs
            ],
        }


def thrackle_check(d: Drawing, report: Optional[CrossingReport] = None) -> ThrackleCheck:
    """Premise: simple, single-crossing, and every independent pair
    crosses (necessarily exactly once).  Conclusion: e <= 4n.  The
    implication premise -> conclusion is the law tests enforce; both
    flags are reported unconditionally."""
    if report is None:
        report = count_crossings(d)
    simple = all(c.multiplicity == 1 for c in parallel_classes(d))
    single = report.max_pair <= 1
    missing: List[Tuple[int, int]] = []
    for i in range(d.edge_count):
        ei = d.edges[i]
        for j in range(i + 1, d.edge_count):
            ej = d.edges[j]
            if ei.endpoints() & ej.endpoints():
                continue
            if report.count(i, j) != 1:
                missing.append((i, j))
    premise = simple and single and not missing
    bound = d.edge_count <= 4 * d.vertex_count
    return ThrackleCheck(premise, bound, simple, single, tuple(missing))


# ---------------------------------------------------------------------------
# exact bisection width


@dataclass(frozen=True)
class BisectionResult:
    width: int
    partition: Tuple[Tuple[int, ...], Tuple[int, ...]]
    deleted_edges: Tuple[int, ...]
    parts_valid: bool

    def to_json_dict(self) -> dict:
        return {
            "width": self.width,
            "partition": [list(self.partition[0]), list(self.partition[1])],
            "deleted_edges": list(self.deleted_edges),
            "parts_valid": self.parts_valid,
        }


def _part_ok(d: Drawing, vertices: Sequence[int], edge_ids: Sequence[int]) -> bool:
    sub, _, _ = restricted(d, vertices, edge_ids)
    v = separated_verdict(sub)
    return v.separated and v.single_crossing


def _repair_candidates(
    d: Drawing, edge_ids: Sequence[int], report: CrossingReport
) -> List[int]:
    """Edges whose deletion can matter for condition (iii): members of
    multi-edge parallel classes, and edges of pairs crossing twice or
    more.  Deleting any other edge changes neither lens structure of the
    surviving classes nor any overfull crossing pair."""
    keep = set(edge_ids)
    sub_pairs: Dict[Tuple[int, int], List[int]] = {}
    for eid in edge_ids:
        e = d.edges[eid]
        pair = (e.u, e.v) if e.u < e.v else (e.v, e.u)
        sub_pairs.setdefault(pair, []).append(eid)
    cands = set()
    for ids in sub_pairs.values():
        if len(ids) > 1:
            cands.update(ids)
    for (a, b), c in report.pair_counts.items():
        if c >= 2 and a in keep and b in keep:
            cands.add(a)
            cands.add(b)
    return sorted(cands)


def _min_repair(
    d: Drawing,
    vertices: Sequence[int],
    edge_ids: Sequence[int],
    report: CrossingReport,
) -> Optional[Tuple[int, ...]]:
    """Smallest (then lexicographically first) deletion subset making the
    induced part separated single-crossing; None if impossible."""
    if _part_ok(d, vertices, edge_ids):
        return ()
    cands = _repair_candidates(d, edge_ids, report)
    base = list(edge_ids)
    for size in range(1, len(cands) + 1):
        for combo in itertools.combinations(cands, size):
            dropped = set(combo)
            survivors = [eid for eid in base if eid not in dropped]
            if _part_ok(d, vertices, survivors):
                return combo
    return None


def bisection_width_exact(d: Drawing) -> BisectionResult:
    """Minimum deletions so the rest splits into parts of at most 4n/5
    vertices with no edge between them, each part separated and
    single-crossing.  Exhaustive over bipartitions; per bipartition all
    cross edges must go, and a minimal repair subset restores part
    validity.  Raises TooLarge beyond n=10 or e=16, TooSmall when no
    admissible bipartition exists (n < 2)."""
    rep = validate(d)
    if not rep.ok:
        raise InvalidDrawing(rep.violations)
    n = d.vertex_count
    e = d.edge_count
    if n < 2:
        raise TooSmall(f"n={n}: no bipartition with both parts below the cap")
    if n > BISECTION_MAX_VERTICES or e > BISECTION_MAX_EDGES:
        raise TooLarge(
            f"n={n}, e={e} beyond exhaustive limits "
            f"({BISECTION_MAX_VERTICES}, {BISECTION_MAX_EDGES})"
        )
    report = count_crossings(d)
    others = list(range(1, n))
    best: Optional[Tuple[int, Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]] = None
    for mask in range(1 << (n - 1)):
        side1 = [0] + [others[i] for i in range(n - 1) if mask >> i & 1]
        size1 = len(side1)
        if 5 * size1 > 4 * n or 5 * (n - size1) > 4 * n:
            continue
        in1 = [False] * n
        for v in side1:
            in1[v] = True
        side2 = [v for v in range(n) if not in1[v]]
        cross = []
        intra1 = []
        intra2 = []
        for eid, edge in enumerate(d.edges):
            if in1[edge.u] != in1[edge.v]:
                cross.append(eid)
            elif in1[edge.u]:
                intra1.append(eid)
            else:
                intra2.append(eid)
        if best is not None and len(cross) > best[0]:
            # repairs only add edges, so this bipartition cannot win
            continue
        r1 = _min_repair(d, side1, intra1, report)
        if r1 is None:
            continue
        r2 = _min_repair(d, side2, intra2, report)
        if r2 is None:
            continue
        deleted = tuple(sorted(cross + list(r1) + list(r2)))
        cand = (len(deleted), tuple(side1), tuple(side2), deleted)
        if best is None or (cand[0], cand[1]) < (best[0], best[1]):
            best = cand
    if best is None:
        raise TooSmall(f"n={n}: no bipartition satisfies the size cap")
    width, side1, side2, deleted = best
    set1, set2 = set(side1), set(side2)
    keep1 = [i for i, ed in enumerate(d.edges)
             if i not in deleted and ed.u in set1 and ed.v in set1]
    keep2 = [i for i, ed in enumerate(d.edges)
             if i not in deleted and ed.u in set2 and ed.v in set2]
    parts_valid = _part_ok(d, side1, keep1) and _part_ok(d, side2, keep2)
    return BisectionResult(width, (side1, side2), deleted, parts_valid)


@dataclass(frozen=True)
class BisectionBoundCheck:
    width: int
    radicand: int
    bound_approx: float
    holds: bool
    result: BisectionResult

    def to_json_dict(self) -> dict:
        return {
            "width": self.width,
            "radicand": self.radicand,
            "bound_approx": self.bound_approx,
            "holds": self.holds,
            "partition": [list(self.result.partition[0]), list(self.result.partition[1])],
        }


def check_bisection_bound(d: Drawing) -> BisectionBoundCheck:
    """Verify width <= 22 sqrt(crossings + sum of squared degrees + n),
    decided exactly as width^2 <= 484 * radicand.  Requires a separated
    single-crossing drawing within the exhaustive-search limits."""
    report = count_crossings(d)
    verdict = separated_verdict(d, report)
    if not verdict.separated:
        raise NotSeparated("bisection bound stated for separated drawings")
    if not verdict.single_crossing:
        raise NotSingleCrossing("bisection bound stated for single-crossing drawings")
    result = bisection_width_exact(d)
    degs = degree_sequence(d)
    radicand = report.total + sum(x * x for x in degs) + d.vertex_count
    holds = result.width**2 <= 484 * radicand
    return BisectionBoundCheck(
        width=result.width,
        radicand=radicand,
        bound_approx=22.0 * radicand**0.5,
        holds=holds,
        result=result,
    )
