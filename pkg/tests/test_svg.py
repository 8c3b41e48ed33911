"""SVG rendering: structure and byte determinism."""

from lenscross.crossings import count_crossings
from lenscross.generators import gen_convex_complete, gen_nested_lenses
from lenscross.lenses import lenses
from lenscross.svg import RenderOptions, render_svg


def test_basic_structure():
    d = gen_nested_lenses(3)
    text = render_svg(d)
    assert text.startswith("<svg ")
    assert text.endswith("</svg>\n")
    assert text.count("<polyline ") == d.edge_count
    assert text.count("<circle ") == d.vertex_count
    assert text.count("<text ") == d.vertex_count
    assert "viewBox" in text
    assert "nan" not in text.lower() and "inf" not in text.lower()


def test_lens_shading_adds_polygons():
    d = gen_nested_lenses(4)
    recs = lenses(d)
    opts = RenderOptions(shade_lenses=True)
    text = render_svg(d, opts, lens_records=recs)
    assert text.count("<polygon ") == len(recs) == 3
    plain = render_svg(d, RenderOptions(shade_lenses=False), lens_records=recs)
    assert "<polygon " not in plain


def test_crossing_markers():
    d = gen_convex_complete(5)
    report = count_crossings(d)
    opts = RenderOptions(highlight_crossings=True, label_vertices=False)
    text = render_svg(d, opts, report=report)
    # one marker circle per crossing on top of one dot per vertex
    assert text.count("<circle ") == report.total + d.vertex_count
    assert "<text " not in text


def test_byte_determinism():
    d = gen_convex_complete(6)
    report = count_crossings(d)
    opts = RenderOptions(shade_lenses=True, highlight_crossings=True)
    a = render_svg(d, opts, lens_records=lenses(d, report), report=report)
    b = render_svg(d, opts, lens_records=lenses(d, report), report=report)
    assert a == b


def test_render_survives_degenerate_extent():
    from lenscross.drawing import drawing

    d = drawing([(0, 0), (0, 5)], [(0, 1, None)])  # zero x-spread
    text = render_svg(d)
    assert "</svg>" in text
