"""Static SVG rendering of drawings.

The one place floats are allowed: output coordinates are formatted to
nine significant digits, which is far below visual resolution and keeps
the bytes deterministic.  Element order is fixed (shaded lenses, then
edges by id, then crossing markers, then vertices by id) so identical
inputs produce identical files.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .crossings import CrossingReport
from .drawing import Drawing
from .geometry import Point
from .lenses import LensRecord

_PALETTE = (
    "#1f6f8b",
    "#b04a5a",
    "#3d8f5f",
    "#8a6d3b",
    "#5b5ea6",
    "#a85ca0",
)


@dataclass(frozen=True)
class RenderOptions:
    size: int = 640
    margin: float = 24.0
    stroke_width: float = 1.6
    vertex_radius: float = 3.4
    shade_lenses: bool = False
    highlight_crossings: bool = False
    background: str = "#ffffff"
    lens_fill: str = "#7fb2d9"
    lens_opacity: float = 0.35
    crossing_color: str = "#c0392b"
    label_vertices: bool = True


def _fmt(x: float) -> str:
    return f"{x:.9g}"


class _Mapper:
    def __init__(self, d: Drawing, opts: RenderOptions):
        xs: List[float] = []
        ys: List[float] = []
        for p in d.vertex_points:
            xs.append(float(p.x))
            ys.append(float(p.y))
        for e in d.edges:
            for p in e.arc.points:
                xs.append(float(p.x))
                ys.append(float(p.y))
        if not xs:
            xs = ys = [0.0]
        self.min_x, self.max_x = min(xs), max(xs)
        self.min_y, self.max_y = min(ys), max(ys)
        spread = max(self.max_x - self.min_x, self.max_y - self.min_y, 1e-9)
        inner = opts.size - 2 * opts.margin
        self.scale = inner / spread
        self.margin = opts.margin
        self.height = opts.size

    def map(self, p: Point) -> Tuple[float, float]:
        x = self.margin + (float(p.x) - self.min_x) * self.scale
        y = self.margin + (self.max_y - float(p.y)) * self.scale
        return x, y


def _polyline_attr(points: Sequence[Point], mapper: _Mapper) -> str:
    return " ".join(
        f"{_fmt(x)},{_fmt(y)}" for x, y in (mapper.map(p) for p in points)
    )


def render_svg(
    d: Drawing,
    options: Optional[RenderOptions] = None,
    lens_records: Sequence[LensRecord] = (),
    report: Optional[CrossingReport] = None,
) -> str:
    """Render to standalone SVG text.

    Pass ``lens_records`` with ``shade_lenses`` to fill lens regions,
    and a crossing ``report`` with ``highlight_crossings`` to mark
    crossing points.
    """
    opts = options or RenderOptions()
    mapper = _Mapper(d, opts)
    out: List[str] = []
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{opts.size}" '
        f'height="{opts.size}" viewBox="0 0 {opts.size} {opts.size}">'
    )
    out.append(f'<rect width="100%" height="100%" fill="{opts.background}"/>')
    if opts.shade_lenses:
        for rec in lens_records:
            out.append(
                f'<polygon points="{_polyline_attr(rec.polygon, mapper)}" '
                f'fill="{opts.lens_fill}" fill-opacity="{opts.lens_opacity}" '
                f'stroke="none"/>'
            )
    for eid, e in enumerate(d.edges):
        color = _PALETTE[eid % len(_PALETTE)]
        out.append(
            f'<polyline points="{_polyline_attr(e.arc.points, mapper)}" '
            f'fill="none" stroke="{color}" '
            f'stroke-width="{opts.stroke_width}" stroke-linejoin="round"/>'
        )
    if opts.highlight_crossings and report is not None:
        for _, p in report.crossing_points:
            x, y = mapper.map(p)
            out.append(
                f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{opts.vertex_radius * 0.7:.9g}" '
                f'fill="none" stroke="{opts.crossing_color}" stroke-width="1.1"/>'
            )
    for vid, p in enumerate(d.vertex_points):
        x, y = mapper.map(p)
        out.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{opts.vertex_radius}" '
            f'fill="#222222" stroke="none"/>'
        )
        if opts.label_vertices:
            out.append(
                f'<text x="{_fmt(x + 5.0)}" y="{_fmt(y - 5.0)}" '
                f'font-family="sans-serif" font-size="11" fill="#222222">{vid}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
