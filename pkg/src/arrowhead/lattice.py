"""Integer geometry of the triangular grid.

Points live in axial coordinates (x, y): x counts unit steps along the
base, y counts steps up-right.  The Cartesian embedding is
X = x + y/2, Y = y*sqrt(3)/2, so a unit step along either axis has
length 1.  A grid with m points per side is the triangle

    {(x, y) : x >= 0, y >= 0, x + y <= m - 1}

with corners A = (0, 0) at the pole, B = (m-1, 0) on the base axis and
C = (0, m-1) above it (counterclockwise orientation).

Edge directions are absolute codes d in 0..5 meaning d*60 degrees
counterclockwise from the base axis.  All path logic stays in exact
integer arithmetic; Cartesian floats appear only for rendering and
distance checks.

An order-n pattern divides the triangle into n^2 unit tiles, of which
the n(n+1)/2 upward-facing ("dark") ones matter here.  A dark tile is
keyed by its lower-left corner (x, y); its corners are (x, y),
(x+1, y), (x, y+1) and each lattice edge lies on exactly one dark tile.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

Point = tuple[int, int]

SQRT3 = math.sqrt(3.0)

# Axial displacement of a unit step in direction d (d*60 degrees).
DIRECTION_STEPS: tuple[Point, ...] = (
    (1, 0),
    (0, 1),
    (-1, 1),
    (-1, 0),
    (0, -1),
    (1, -1),
)


class OutOfGridError(ValueError):
    """An edge or point falls outside the grid it is required to lie in."""


def triangular_number(n: int) -> int:
    """n-th triangular number n(n+1)/2 (n >= 1)."""
    return n * (n + 1) // 2


def step(p: Point, d: int) -> Point:
    """Point one unit step from p in direction d (no containment check)."""
    dx, dy = DIRECTION_STEPS[d]
    return (p[0] + dx, p[1] + dy)


def opposite(d: int) -> int:
    return (d + 3) % 6


def to_cartesian(p: Point) -> tuple[float, float]:
    x, y = p
    return (x + y / 2.0, y * SQRT3 / 2.0)


@dataclass(frozen=True)
class GridSpec:
    """Triangular point grid of an order-n pattern.

    The inscribed grid holds the n(n+1)/2 dark-tile centroids (keyed by
    the tiles' axial keys); the overall grid holds the (n+1)(n+2)/2
    tile corner points.
    """

    order: int
    role: str  # "inscribed" | "overall"

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError(f"grid order must be >= 1, got {self.order}")
        if self.role not in ("inscribed", "overall"):
            raise ValueError(f"unknown grid role {self.role!r}")

    @property
    def side(self) -> int:
        """Points per side: n for inscribed, n+1 for overall."""
        return self.order if self.role == "inscribed" else self.order + 1

    @property
    def point_count(self) -> int:
        return triangular_number(self.side)

    def contains(self, p: Point) -> bool:
        x, y = p
        return x >= 0 and y >= 0 and x + y <= self.side - 1

    def points(self):
        """All grid points in row-major order (y rows, x within row)."""
        for y in range(self.side):
            for x in range(self.side - y):
                yield (x, y)


def edge_to_tile(p: Point, d: int, grid: GridSpec | None = None) -> Point:
    """Key of the unique upward tile having the edge (p, step(p, d)) as a side.

    Constant on undirected edges: edge_to_tile(step(p, d), opposite(d))
    gives the same tile.  With a grid argument, raises OutOfGridError
    when either endpoint leaves the grid.
    """
    if grid is not None and not (grid.contains(p) and grid.contains(step(p, d))):
        raise OutOfGridError(f"edge {p} direction {d} leaves the {grid.role} grid")
    x, y = p
    if d < 2:  # base edge rightward, or left side upward
        return (x, y)
    if d < 4:  # hypotenuse or base edge, seen from the right corner
        return (x - 1, y)
    return (x, y - 1)  # seen from the top corner


def tile_corners(t: Point) -> tuple[Point, Point, Point]:
    x, y = t
    return ((x, y), (x + 1, y), (x, y + 1))


def tile_centroid(t: Point) -> tuple[float, float]:
    """Cartesian centroid of a dark tile; centroids form a unit-spaced lattice."""
    x, y = t
    return (x + y / 2.0 + 0.5, SQRT3 * (y + 1.0 / 3.0) / 2.0)


def dark_tiles(n: int):
    """Keys of the n(n+1)/2 upward tiles of an order-n pattern, row-major."""
    for y in range(n):
        for x in range(n - y):
            yield (x, y)
