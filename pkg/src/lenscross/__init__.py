"""Exact toolkit for crossings and lenses in topological multigraph
drawings: validation, crossing counts, separation verdicts, bound
checks, a replayable counting argument, and exact small-instance
bisection, all over rational coordinates.
"""

from .bounds import (
    BisectionResult,
    BoundReport,
    BoundValues,
    DomainError,
    ThrackleCheck,
    TooLarge,
    TooSmall,
    bisection_width_exact,
    check_bisection_bound,
    check_drawing_bounds,
    evaluate_bounds,
    thrackle_check,
)
from .crossings import (
    CrossingReport,
    count_crossings,
    count_crossings_sweep,
    is_single_crossing,
)
from .decompose import DecompositionTrace, DegreeTooHigh, decompose, default_k
from .drawing import (
    Arc,
    Drawing,
    Edge,
    InvalidDrawing,
    ParseError,
    SchemaError,
    ValidationReport,
    Violation,
    degree_sequence,
    drawing,
    from_json_data,
    load,
    restricted,
    save,
    to_json_data,
    validate,
)
from .exactnum import LogProduct, LogQuotient, cmp_log2, sign_linear_log
from .generators import GeneratorSpec, build
from .geometry import (
    IntersectionKind,
    Orientation,
    Point,
    orient,
    point_in_polygon,
    segment_intersection,
)
from .lenses import (
    CrossingParallelPair,
    LensRecord,
    NotSeparated,
    NotSingleCrossing,
    ParallelClass,
    SeparatedVerdict,
    lenses,
    multiplicity,
    parallel_classes,
    separated_verdict,
)
from .replay import ReplayTrace, SamplingStats, replay_edge_bound, sampling_statistics
from .svg import RenderOptions, render_svg

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "BisectionResult",
    "BoundReport",
    "BoundValues",
    "CrossingParallelPair",
    "CrossingReport",
    "DecompositionTrace",
    "DegreeTooHigh",
    "DomainError",
    "Drawing",
    "Edge",
    "GeneratorSpec",
    "IntersectionKind",
    "InvalidDrawing",
    "LensRecord",
    "LogProduct",
    "LogQuotient",
    "NotSeparated",
    "NotSingleCrossing",
    "Orientation",
    "ParallelClass",
    "ParseError",
    "Point",
    "RenderOptions",
    "ReplayTrace",
    "SamplingStats",
    "SchemaError",
    "SeparatedVerdict",
    "ThrackleCheck",
    "TooLarge",
    "TooSmall",
    "ValidationReport",
    "Violation",
    "bisection_width_exact",
    "build",
    "check_bisection_bound",
    "check_drawing_bounds",
    "cmp_log2",
    "count_crossings",
    "count_crossings_sweep",
    "decompose",
    "default_k",
    "degree_sequence",
    "drawing",
    "evaluate_bounds",
    "from_json_data",
    "is_single_crossing",
    "lenses",
    "load",
    "multiplicity",
    "orient",
    "parallel_classes",
    "point_in_polygon",
    "render_svg",
    "replay_edge_bound",
    "restricted",
    "sampling_statistics",
    "save",
    "segment_intersection",
    "separated_verdict",
    "sign_linear_log",
    "thrackle_check",
    "to_json_data",
    "validate",
]
