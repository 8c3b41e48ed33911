"""Command-line front end.

Every subcommand reads a drawing file (except gen), emits one JSON
document, and exits 0 when all checks it ran came out clean, 1 when a
check failed, and 2 on usage or input errors.  Output depends only on
argv and file contents; seeds default to 0, never to entropy.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

from . import bounds as bounds_mod
from . import replay as replay_mod
from .crossings import count_crossings, count_crossings_sweep
from .decompose import DegreeTooHigh
from .decompose import decompose as run_decompose
from .drawing import InvalidDrawing, ParseError, SchemaError, load, save, validate
from .generators import (
    DegenerateDiscretization,
    GenerationExhausted,
    GeneratorSpec,
    build,
)
from .lenses import (
    CrossingParallelPair,
    NotSeparated,
    NotSingleCrossing,
    lenses,
    separated_verdict,
)
from .svg import RenderOptions, render_svg

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def _emit(doc, out: Optional[str] = None) -> None:
    text = json.dumps(doc, indent=2) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _error(kind: str, message: str, as_json: bool, **extra) -> int:
    if as_json:
        payload = {"error": {"kind": kind, "message": message, **extra}}
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stderr.write(f"error ({kind}): {message}\n")
    return EXIT_USAGE


def _load_drawing(path: str, as_json: bool):
    try:
        with open(path, "rb") as fh:
            return load(fh.read()), None
    except FileNotFoundError:
        return None, _error("io", f"no such file: {path}", as_json)
    except (ParseError, SchemaError) as ex:
        return None, _error("parse", str(ex), as_json)


def _violations_doc(ex: InvalidDrawing) -> dict:
    return {
        "error": {
            "kind": "invalid_drawing",
            "message": "drawing violates general-position laws",
            "violations": [
                {
                    "kind": v.kind,
                    "edges": list(v.edges),
                    "note": v.note,
                }
                for v in ex.violations
            ],
        }
    }


def _fraction_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as ex:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from ex


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="lenscross")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a drawing")
    p.add_argument("--family", required=True,
                   choices=["nested", "convex", "semicircle", "random"])
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--extra-parallel", type=int, default=0)
    p.add_argument("--segments-per-arc", type=int, default=32)
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--json", action="store_true")

    for name in ("validate", "cross", "lenses", "check", "bisect"):
        p = sub.add_parser(name)
        p.add_argument("file")
        p.add_argument("--json", action="store_true")
        if name == "cross":
            p.add_argument("--engine", choices=["naive", "sweep"], default="naive")

    p = sub.add_parser("replay", help="replay the edge-cap argument")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("decompose", help="split into crossing-dense pieces")
    p.add_argument("file")
    p.add_argument("--k-override", type=_fraction_arg, default=None)
    p.add_argument("--delta-override", type=int, default=None)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("render", help="write an SVG picture")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--shade-lenses", action="store_true")
    p.add_argument("--json", action="store_true")
    return top


def _cmd_gen(args) -> int:
    spec = GeneratorSpec(
        family=args.family,
        n=args.n,
        k=args.k,
        seed=args.seed,
        segments_per_arc=args.segments_per_arc,
        extra_parallel=args.extra_parallel,
    )
    try:
        d = build(spec)
    except (ValueError, DegenerateDiscretization, GenerationExhausted) as ex:
        return _error("generation", str(ex), args.json)
    text = save(d)
    if args.output is None:
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return EXIT_OK


def _cmd_validate(args) -> int:
    d, err = _load_drawing(args.file, args.json)
    if d is None:
        return err
    report = validate(d)
    _emit(report.to_json_dict())
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _cmd_cross(args) -> int:
    d, err = _load_drawing(args.file, args.json)
    if d is None:
        return err
    engine = count_crossings_sweep if args.engine == "sweep" else count_crossings
    try:
        report = engine(d)
    except InvalidDrawing as ex:
        _emit(_violations_doc(ex))
        return EXIT_CHECK_FAILED
    _emit({"engine": args.engine, **report.to_json_dict()})
    return EXIT_OK


def _cmd_lenses(args) -> int:
    d, err = _load_drawing(args.file, args.json)
    if d is None:
        return err
    try:
        verdict = separated_verdict(d)
    except InvalidDrawing as ex:
        _emit(_violations_doc(ex))
        return EXIT_CHECK_FAILED
    doc = verdict.to_json_dict()
    doc["lenses"] = [
        {
            "endpoints": list(r.endpoints),
            "edge_ids": list(r.edge_ids),
            "interior_vertices": list(r.interior_vertices),
        }
        for r in verdict.lens_records
    ]
    _emit(doc)
    return EXIT_OK


def _cmd_check(args) -> int:
    d, err = _load_drawing(args.file, args.json)
    if d is None:
        return err
    try:
        report = count_crossings(d)
    except InvalidDrawing as ex:
        _emit(_violations_doc(ex))
        return EXIT_CHECK_FAILED
    verdict = separated_verdict(d, report)
    try:
        bound_report = bounds_mod.check_drawing_bounds(d, report=report, verdict=verdict)
    except bounds_mod.DomainError as ex:
        return _error("domain", str(ex), args.json)
    doc = {
        "separation": verdict.to_json_dict(),
        "bounds": bound_report.to_json_dict(),
    }
    _emit(doc)
    failed = any(v is False for v in bound_report.verdicts.values())
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def _cmd_bisect(args) -> int:
    d, err = _load_drawing(args.file, args.json)
    if d is None:
        return err
    try:
        chk = bounds_mod.check_bisection_bound(d)
    except InvalidDrawing as ex:
        _emit(_violations_doc(ex))
        return EXIT_CHECK_FAILED
    except NotSeparated as ex:
        return _error("not_separated", str(ex), args.json)
    except NotSingleCrossing as ex:
        return _error("not_single_crossing", str(ex), args.json)
    except bounds_mod.TooLarge as ex:
        return _error("too_large", str(ex), args.json)
    except bounds_mod.TooSmall as ex:
        return _error("too_small", str(ex), args.json)
    _emit(chk.to_json_dict())
    return EXIT_OK if chk.holds else EXIT_CHECK_FAILED


def _cmd_replay(args) -> int:
    d, err = _load_drawing(args.file, args.json)
    if d is None:
        return err
    try:
        report = count_crossings(d)
        trace = replay_mod.replay_edge_bound(
            d, seed=args.seed, trials=args.trials, report=report
        )
        stats = replay_mod.sampling_statistics(
            d, seed=args.seed, trials=max(args.trials, 1),
            report=report, trace=trace,
        )
    except InvalidDrawing as ex:
        _emit(_violations_doc(ex))
        return EXIT_CHECK_FAILED
    except NotSeparated as ex:
        return _error("not_separated", str(ex), args.json)
    except NotSingleCrossing as ex:
        return _error("not_single_crossing", str(ex), args.json)
    doc = trace.to_json_dict()
    doc["sampling"] = stats.to_json_dict()
    _emit(doc)
    ok = trace.all_required_ok and trace.all_trials_ok
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _cmd_decompose(args) -> int:
    d, err = _load_drawing(args.file, args.json)
    if d is None:
        return err
    try:
        trace = run_decompose(
            d, k_override=args.k_override, delta_override=args.delta_override
        )
    except InvalidDrawing as ex:
        _emit(_violations_doc(ex))
        return EXIT_CHECK_FAILED
    except NotSeparated as ex:
        return _error("not_separated", str(ex), args.json)
    except NotSingleCrossing as ex:
        return _error("not_single_crossing", str(ex), args.json)
    except DegreeTooHigh as ex:
        return _error("degree_too_high", str(ex), args.json)
    except bounds_mod.TooLarge as ex:
        return _error("too_large", str(ex), args.json)
    _emit(trace.to_json_dict())
    return EXIT_OK if trace.all_splits_ok else EXIT_CHECK_FAILED


def _cmd_render(args) -> int:
    d, err = _load_drawing(args.file, args.json)
    if d is None:
        return err
    report = None
    lens_records = ()
    if args.shade_lenses:
        try:
            report = count_crossings(d)
            lens_records = lenses(d, report)
        except InvalidDrawing as ex:
            _emit(_violations_doc(ex))
            return EXIT_CHECK_FAILED
        except CrossingParallelPair as ex:
            return _error("crossing_parallel_pair", str(ex), args.json)
    else:
        try:
            report = count_crossings(d)
        except InvalidDrawing:
            report = None  # draw the arcs anyway, just without crossing dots
    options = RenderOptions(
        shade_lenses=args.shade_lenses, highlight_crossings=report is not None
    )
    text = render_svg(d, options, lens_records=lens_records, report=report)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(text)
    return EXIT_OK


_DISPATCH = {
    "gen": _cmd_gen,
    "validate": _cmd_validate,
    "cross": _cmd_cross,
    "lenses": _cmd_lenses,
    "check": _cmd_check,
    "bisect": _cmd_bisect,
    "replay": _cmd_replay,
    "decompose": _cmd_decompose,
    "render": _cmd_render,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return _DISPATCH[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
