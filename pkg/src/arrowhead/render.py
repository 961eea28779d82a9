"""Deterministic SVG output for curves and gasket approximations.

Input coordinates are Cartesian lattice units; the renderer scales them,
flips the y axis so the triangle rests on its base, and writes plain SVG
1.1 text.  Numbers are formatted to fixed precision so equal inputs give
byte-identical documents.
"""

from dataclasses import dataclass
from typing import Iterable, Sequence

from .curves import GasketApproximation
from .lattice import tile_corners, to_cartesian

__all__ = ["RenderSpec", "EmptyPolylineError", "render_curve", "render_gasket"]

Coord = tuple[float, float]


class EmptyPolylineError(ValueError):
    """Nothing to draw."""


@dataclass(frozen=True)
class RenderSpec:
    """Presentation knobs for the SVG output."""

    scale: float = 100.0
    stroke_width: float = 2.0
    margin: float = 10.0
    overlay: bool = False
    tile_fill: str = "#8c8c8c"
    curve_color: str = "#000000"

    def __post_init__(self) -> None:
        if self.scale <= 0:
            raise ValueError(f"scale must be positive, got {self.scale}")
        if self.stroke_width <= 0:
            raise ValueError(f"stroke width must be positive, got {self.stroke_width}")
        if self.margin < 0:
            raise ValueError(f"margin must not be negative, got {self.margin}")


class _Frame:
    """Scale plus y flip from lattice units into the SVG viewport."""

    def __init__(self, points: Iterable[Coord], spec: RenderSpec):
        pts = list(points)
        if not pts:
            raise EmptyPolylineError("no points to render")
        self.min_x = min(p[0] for p in pts)
        self.max_y = max(p[1] for p in pts)
        min_y = min(p[1] for p in pts)
        max_x = max(p[0] for p in pts)
        self.spec = spec
        self.width = (max_x - self.min_x) * spec.scale + 2 * spec.margin
        self.height = (self.max_y - min_y) * spec.scale + 2 * spec.margin

    def project(self, p: Coord) -> Coord:
        s, m = self.spec.scale, self.spec.margin
        return ((p[0] - self.min_x) * s + m, (self.max_y - p[1]) * s + m)


def _fmt(v: float) -> str:
    return f"{v:.4f}"


def _document(frame: _Frame, body: list[str]) -> str:
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(frame.width)}" height="{_fmt(frame.height)}" '
        f'viewBox="0 0 {_fmt(frame.width)} {_fmt(frame.height)}">\n'
    )
    return head + "".join(line + "\n" for line in body) + "</svg>\n"


def _path_element(polyline: Sequence[Coord], frame: _Frame) -> str:
    points = [frame.project(p) for p in polyline]
    parts = [f"M {_fmt(points[0][0])} {_fmt(points[0][1])}"]
    parts.extend(f"L {_fmt(x)} {_fmt(y)}" for x, y in points[1:])
    spec = frame.spec
    return (
        f'<path d="{" ".join(parts)}" fill="none" stroke="{spec.curve_color}" '
        f'stroke-width="{_fmt(spec.stroke_width)}" stroke-linejoin="round" '
        f'stroke-linecap="round"/>'
    )


def render_curve(polyline: Sequence[Coord], spec: RenderSpec = RenderSpec()) -> str:
    """SVG document with the polyline as a single path element."""
    if not polyline:
        raise EmptyPolylineError("empty polyline")
    frame = _Frame(polyline, spec)
    return _document(frame, [_path_element(polyline, frame)])


def render_gasket(
    g: GasketApproximation,
    spec: RenderSpec = RenderSpec(),
    curve: Sequence[Coord] | None = None,
) -> str:
    """SVG document with one polygon per dark tile, optionally a curve on top."""
    corner_points = [
        to_cartesian(c) for t in g.tiles for c in tile_corners(t)
    ]
    all_points = corner_points + (list(curve) if curve else [])
    frame = _Frame(all_points, spec)
    body = []
    for tile in sorted(g.tiles, key=lambda t: (t[1], t[0])):
        corners = [frame.project(to_cartesian(c)) for c in tile_corners(tile)]
        pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in corners)
        body.append(f'<polygon points="{pts}" fill="{spec.tile_fill}"/>')
    if curve:
        body.append(_path_element(curve, frame))
    return _document(frame, body)
