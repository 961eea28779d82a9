import math

import pytest

from arrowhead import lattice

SQRT3 = math.sqrt(3.0)


def test_direction_steps_are_unit_sixty_degree_rotations():
    for d, (dx, dy) in enumerate(lattice.DIRECTION_STEPS):
        x, y = lattice.to_cartesian((dx, dy))
        assert math.hypot(x, y) == pytest.approx(1.0, abs=1e-12)
        angle = math.atan2(y, x) % (2 * math.pi)
        assert angle == pytest.approx(d * math.pi / 3, abs=1e-12)


def test_triangular_number_matches_sum():
    for n in range(0, 50):
        assert lattice.triangular_number(n) == sum(range(1, n + 1))


def test_step_and_opposite_round_trip():
    for p in [(0, 0), (3, 2), (-1, 5)]:
        for d in range(6):
            assert lattice.step(lattice.step(p, d), lattice.opposite(d)) == p


def test_step_rejects_bad_direction():
    with pytest.raises((IndexError, ValueError)):
        lattice.step((0, 0), 6)


def test_to_cartesian_values():
    assert lattice.to_cartesian((0, 0)) == (0.0, 0.0)
    assert lattice.to_cartesian((2, 0)) == (2.0, 0.0)
    x, y = lattice.to_cartesian((0, 2))
    assert (x, y) == pytest.approx((1.0, SQRT3))


def test_grid_spec_counts_and_membership():
    for n in range(1, 8):
        for role, side in (("inscribed", n), ("overall", n + 1)):
            grid = lattice.GridSpec(n, role)
            assert grid.side == side
            pts = list(grid.points())
            assert len(pts) == grid.point_count == lattice.triangular_number(side)
            assert len(set(pts)) == len(pts)
            for x, y in pts:
                assert x >= 0 and y >= 0 and x + y <= side - 1
                assert grid.contains((x, y))
            assert not grid.contains((side, 0))
            assert not grid.contains((-1, 0))
            assert not grid.contains((0, side))
            # corners A, B, C
            assert grid.contains((0, 0))
            assert grid.contains((side - 1, 0))
            assert grid.contains((0, side - 1))


def test_grid_spec_rejects_bad_arguments():
    with pytest.raises(ValueError):
        lattice.GridSpec(0, "inscribed")
    with pytest.raises(ValueError):
        lattice.GridSpec(3, "diagonal")


def test_edge_to_tile_six_case_vectors():
    assert lattice.edge_to_tile((2, 1), 0) == (2, 1)
    assert lattice.edge_to_tile((2, 1), 1) == (2, 1)
    assert lattice.edge_to_tile((2, 1), 2) == (1, 1)
    assert lattice.edge_to_tile((2, 1), 3) == (1, 1)
    assert lattice.edge_to_tile((2, 1), 4) == (2, 0)
    assert lattice.edge_to_tile((2, 1), 5) == (2, 0)


def test_edge_to_tile_endpoints_are_tile_corners():
    # Oracle: both endpoints of the edge must be corners of the tile.
    n = 5
    grid = lattice.GridSpec(n, "overall")
    for p in grid.points():
        for d in range(6):
            q = lattice.step(p, d)
            if not grid.contains(q):
                continue
            tile = lattice.edge_to_tile(p, d)
            corners = lattice.tile_corners(tile)
            assert p in corners and q in corners


def test_edge_to_tile_grid_check():
    grid = lattice.GridSpec(2, "overall")
    assert lattice.edge_to_tile((0, 0), 0, grid) == (0, 0)
    with pytest.raises(lattice.OutOfGridError):
        lattice.edge_to_tile((2, 0), 0, grid)


def test_tile_centroid_is_mean_of_corner_coordinates():
    for tile in [(0, 0), (2, 1), (5, 3)]:
        xs, ys = zip(*(lattice.to_cartesian(c) for c in lattice.tile_corners(tile)))
        cx, cy = lattice.tile_centroid(tile)
        assert cx == pytest.approx(sum(xs) / 3, abs=1e-12)
        assert cy == pytest.approx(sum(ys) / 3, abs=1e-12)


def test_dark_tiles_count_and_range():
    for n in range(2, 8):
        tiles = list(lattice.dark_tiles(n))
        assert len(tiles) == lattice.triangular_number(n)
        assert len(set(tiles)) == len(tiles)
        grid = lattice.GridSpec(n, "overall")
        for t in tiles:
            for c in lattice.tile_corners(t):
                assert grid.contains(c)
