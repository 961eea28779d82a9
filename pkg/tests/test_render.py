import xml.etree.ElementTree as ET

import pytest

from arrowhead import render
from arrowhead.curves import er_expand, gasket_tiles
from arrowhead.lattice import to_cartesian
from arrowhead.paths import walk

SVG_NS = "{http://www.w3.org/2000/svg}"


def _parse(svg: str) -> ET.Element:
    return ET.fromstring(svg)


def _curve_points(k):
    digits = er_expand("105", k).digits
    return [to_cartesian(p) for p in walk((0, 0), digits)]


def test_render_curve_is_well_formed_svg():
    svg = render.render_curve(_curve_points(2))
    root = _parse(svg)
    assert root.tag == f"{SVG_NS}svg"
    paths = root.findall(f"{SVG_NS}path")
    assert len(paths) == 1
    d = paths[0].get("d")
    assert d.startswith("M ")
    assert d.count("L ") == 9  # one line command per digit


def test_render_curve_viewbox_matches_size():
    spec = render.RenderSpec(scale=50, margin=5)
    svg = render.render_curve(_curve_points(1), spec)
    root = _parse(svg)
    width = float(root.get("width"))
    height = float(root.get("height"))
    # level 1 spans 2 lattice units wide and sqrt(3)/2 high
    assert width == pytest.approx(2 * 50 + 2 * 5)
    assert height == pytest.approx(50 * 3**0.5 / 2 + 2 * 5, abs=1e-3)
    view_box = root.get("viewBox").split()
    assert float(view_box[2]) == width
    assert float(view_box[3]) == height


def test_render_curve_rejects_empty_polyline():
    with pytest.raises(render.EmptyPolylineError):
        render.render_curve([])


def test_render_gasket_polygon_counts():
    for n, k, expected in ((2, 1, 3), (2, 2, 9), (4, 2, 100)):
        svg = render.render_gasket(gasket_tiles(n, k))
        root = _parse(svg)
        polygons = root.findall(f"{SVG_NS}polygon")
        assert len(polygons) == expected
        assert not root.findall(f"{SVG_NS}path")
        for poly in polygons:
            assert len(poly.get("points").split()) == 3


def test_render_gasket_overlay_has_curve_on_top():
    tiles = gasket_tiles(2, 2)
    svg = render.render_gasket(tiles, curve=_curve_points(2))
    root = _parse(svg)
    children = list(root)
    assert len(root.findall(f"{SVG_NS}polygon")) == 9
    assert len(root.findall(f"{SVG_NS}path")) == 1
    assert children[-1].tag == f"{SVG_NS}path"  # curve drawn after the tiles


def test_curve_vertices_lie_on_tile_corners():
    # Every vertex of the overlaid curve is a corner of some rendered tile.
    svg = render.render_gasket(gasket_tiles(2, 2), curve=_curve_points(2))
    root = _parse(svg)
    corner_coords = set()
    for poly in root.findall(f"{SVG_NS}polygon"):
        corner_coords.update(poly.get("points").split())
    path_d = root.find(f"{SVG_NS}path").get("d")
    nums = [t for t in path_d.split() if t not in ("M", "L")]
    curve_coords = {f"{nums[i]},{nums[i + 1]}" for i in range(0, len(nums), 2)}
    assert curve_coords <= corner_coords


def test_render_is_deterministic():
    tiles = gasket_tiles(3, 1)
    assert render.render_gasket(tiles) == render.render_gasket(tiles)


def test_render_spec_validation():
    with pytest.raises(ValueError):
        render.RenderSpec(scale=0)
    with pytest.raises(ValueError):
        render.RenderSpec(stroke_width=-1)
    with pytest.raises(ValueError):
        render.RenderSpec(margin=-0.5)


def test_render_spec_colors_appear_in_output():
    spec = render.RenderSpec(tile_fill="#112233", curve_color="#445566")
    svg = render.render_gasket(gasket_tiles(2, 1), spec, curve=_curve_points(1))
    assert "#112233" in svg
    assert "#445566" in svg
