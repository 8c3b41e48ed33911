"""Iterative decomposition of a drawing into crossing-dense pieces.

Starting from the whole drawing, each stage splits every member that is
still crossing-poor (fewer crossings than k times its edges) yet large
(more vertices than (4/5)^(i+1) of the original count), using the exact
bisection from :mod:`lenscross.bounds`.  Members violating either test
ride along unchanged.  The stage counter stops at the largest i0 with
(5/4)^i0 <= 1e-6 e/k when that threshold is meaningful, otherwise the
process runs until a stage splits nothing.

Every split is audited on the spot: part sizes, part validity, and the
width bound 40 (sqrt(k e(H)) + sqrt(v(H))), all decided exactly.  The
default k is 1e-10 e^2 / (n^2 log2(e/n)) for e > n and zero otherwise;
k_override substitutes any nonnegative rational.

Splitting relies on the exhaustive bisection, so members must stay
within its instance limits; TooLarge propagates otherwise.  The whole
drawing must come in separated, single-crossing, and with maximum degree
at most ceil(2e/n) (delta_override lifts the cap when a caller wants the
process anyway).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .bounds import bisection_width_exact
from .crossings import count_crossings
from .drawing import Drawing, degree_sequence, restricted
from .exactnum import LogProduct, LogQuotient, le_scaled_sqrt_sum
from .lenses import NotSeparated, NotSingleCrossing, separated_verdict

SPLIT_SCALE = 40
K_COEFF = Fraction(1, 10**10)
STOP_COEFF = Fraction(1, 10**6)

KParam = Union[Fraction, LogQuotient]


class DegreeTooHigh(ValueError):
    """Maximum degree exceeds the 2e/n ceiling the process assumes."""


def default_k(n: int, e: int) -> KParam:
    """1e-10 e^2 / (n^2 log2(e/n)), collapsing to 0 when e <= n."""
    if n < 1:
        raise ValueError("need at least one vertex")
    if e <= n:
        return Fraction(0)
    return LogQuotient(K_COEFF * e * e / (n * n), Fraction(e, n))


@dataclass(frozen=True)
class SplitRecord:
    width: int
    deleted_edges: Tuple[int, ...]
    part_vertices: Tuple[Tuple[int, ...], Tuple[int, ...]]
    sizes_ok: bool
    parts_valid: bool
    width_bound_ok: bool

    def to_json_dict(self) -> dict:
        return {
            "width": self.width,
            "deleted_edges": list(self.deleted_edges),
            "part_vertices": [list(p) for p in self.part_vertices],
            "sizes_ok": self.sizes_ok,
            "parts_valid": self.parts_valid,
            "width_bound_ok": self.width_bound_ok,
        }


@dataclass(frozen=True)
class MemberRecord:
    """One member as a stage saw it.  Vertex and edge ids refer to the
    original drawing."""

    vertices: Tuple[int, ...]
    edge_ids: Tuple[int, ...]
    crossings: int
    crossing_rich: bool
    action: str  # "kept" or "split"
    split: Optional[SplitRecord]

    @property
    def v(self) -> int:
        return len(self.vertices)

    @property
    def e(self) -> int:
        return len(self.edge_ids)

    def to_json_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edge_ids": list(self.edge_ids),
            "v": self.v,
            "e": self.e,
            "crossings": self.crossings,
            "crossing_rich": self.crossing_rich,
            "action": self.action,
            "split": self.split.to_json_dict() if self.split else None,
        }


@dataclass(frozen=True)
class StageRecord:
    index: int
    members: Tuple[MemberRecord, ...]

    def to_json_dict(self) -> dict:
        return {
            "index": self.index,
            "members": [m.to_json_dict() for m in self.members],
        }


@dataclass(frozen=True)
class DecompositionTrace:
    n: int
    e: int
    delta: int
    k_repr: str
    stop_index: Optional[int]
    stop_rule: str  # "counter" or "quiescence"
    stages: Tuple[StageRecord, ...]
    final_members: Tuple[MemberRecord, ...]
    final_heavy_edges: int
    all_splits_ok: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "e": self.e,
            "delta": self.delta,
            "k": self.k_repr,
            "stop_index": self.stop_index,
            "stop_rule": self.stop_rule,
            "stages": [s.to_json_dict() for s in self.stages],
            "final_members": [m.to_json_dict() for m in self.final_members],
            "final_heavy_edges": self.final_heavy_edges,
            "all_splits_ok": self.all_splits_ok,
        }


def _scaled_k(k: KParam, e_h: int) -> Union[Fraction, LogQuotient]:
    if isinstance(k, LogQuotient):
        return LogQuotient(k.coeff * e_h, k.arg)
    return k * e_h


def _stop_index(e: int, k: KParam) -> Optional[int]:
    """Largest i with (5/4)^i <= 1e-6 e/k; None when no i qualifies or
    k is zero."""
    if isinstance(k, LogQuotient):
        if k.coeff == 0:
            return None
        # e / (c / log2 a) = (e / c) log2 a
        threshold = LogProduct(STOP_COEFF * e / k.coeff, k.arg)
    else:
        if k == 0:
            return None
        threshold = STOP_COEFF * e / k
    ratio = Fraction(5, 4)
    if threshold < 1:
        return None
    i = 0
    while ratio ** (i + 1) <= threshold:
        i += 1
    return i


@dataclass
class _Member:
    vertices: Tuple[int, ...]
    edge_ids: Tuple[int, ...]


def _member_stats(d: Drawing, m: _Member):
    sub, vmap, kept = restricted(d, m.vertices, m.edge_ids)
    report = count_crossings(sub)
    return sub, vmap, kept, report.total


def decompose(
    d: Drawing,
    k_override: Optional[Fraction] = None,
    delta_override: Optional[int] = None,
) -> DecompositionTrace:
    report = count_crossings(d)
    verdict = separated_verdict(d, report)
    if not verdict.separated:
        raise NotSeparated("decomposition assumes a separated drawing")
    if not verdict.single_crossing:
        raise NotSingleCrossing("decomposition assumes a single-crossing drawing")
    n = d.vertex_count
    e = d.edge_count
    if n < 1:
        raise ValueError("need at least one vertex")
    delta = delta_override if delta_override is not None else -(-2 * e // n)
    degs = degree_sequence(d)
    max_deg = max(degs, default=0)
    if max_deg > delta:
        raise DegreeTooHigh(f"max degree {max_deg} exceeds ceiling {delta}")
    if k_override is not None:
        k: KParam = Fraction(k_override)
        if k < 0:
            raise ValueError("k must be nonnegative")
    else:
        k = default_k(n, e)

    stop = _stop_index(e, k)
    rule = "counter" if stop is not None else "quiescence"

    members = [_Member(tuple(range(n)), tuple(range(e)))]
    stages: List[StageRecord] = []
    i = 0
    while True:
        if stop is not None and i > stop:
            break
        recs: List[MemberRecord] = []
        next_members: List[_Member] = []
        any_split = False
        for m in members:
            sub, vmap, kept, cr = _member_stats(d, m)
            v_h, e_h = sub.vertex_count, sub.edge_count
            ke = _scaled_k(k, e_h)
            rich = not (cr < ke)
            wants_split = (not rich) and (5 ** (i + 1) * v_h > 4 ** (i + 1) * n)
            if not wants_split:
                recs.append(
                    MemberRecord(m.vertices, m.edge_ids, cr, rich, "kept", None)
                )
                next_members.append(m)
                continue
            any_split = True
            result = bisection_width_exact(sub)
            inv = {new: old for old, new in vmap.items()}
            part1 = tuple(sorted(inv[x] for x in result.partition[0]))
            part2 = tuple(sorted(inv[x] for x in result.partition[1]))
            deleted = tuple(sorted(kept[x] for x in result.deleted_edges))
            sizes_ok = (
                5 * len(part1) <= 4 * v_h and 5 * len(part2) <= 4 * v_h
            )
            bound_ok = le_scaled_sqrt_sum(result.width, SPLIT_SCALE, ke, v_h)
            split = SplitRecord(
                width=result.width,
                deleted_edges=deleted,
                part_vertices=(part1, part2),
                sizes_ok=sizes_ok,
                parts_valid=result.parts_valid,
                width_bound_ok=bound_ok,
            )
            recs.append(
                MemberRecord(m.vertices, m.edge_ids, cr, rich, "split", split)
            )
            gone = set(deleted)
            set1, set2 = set(part1), set(part2)
            edges1 = tuple(
                eid for eid in m.edge_ids
                if eid not in gone
                and d.edges[eid].u in set1 and d.edges[eid].v in set1
            )
            edges2 = tuple(
                eid for eid in m.edge_ids
                if eid not in gone
                and d.edges[eid].u in set2 and d.edges[eid].v in set2
            )
            next_members.append(_Member(part1, edges1))
            next_members.append(_Member(part2, edges2))
        stages.append(StageRecord(i, tuple(recs)))
        members = next_members
        i += 1
        if stop is None and not any_split:
            break

    finals: List[MemberRecord] = []
    heavy_edges = 0
    for m in members:
        sub, _, _, cr = _member_stats(d, m)
        ke = _scaled_k(k, sub.edge_count)
        rich = not (cr < ke)
        if rich:
            heavy_edges += sub.edge_count
        finals.append(MemberRecord(m.vertices, m.edge_ids, cr, rich, "final", None))

    splits_ok = all(
        r.split.sizes_ok and r.split.parts_valid and r.split.width_bound_ok
        for s in stages
        for r in s.members
        if r.split is not None
    )
    return DecompositionTrace(
        n=n,
        e=e,
        delta=delta,
        k_repr=str(k),
        stop_index=stop,
        stop_rule=rule,
        stages=tuple(stages),
        final_members=tuple(finals),
        final_heavy_edges=heavy_edges,
        all_splits_ok=splits_ok,
    )
