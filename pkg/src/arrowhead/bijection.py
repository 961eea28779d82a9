"""Digit-pair transform between well-formed paths and tiling paths.

A well-formed path and its tiling path describe the same permutation of
the dark tiles.  Each consecutive pair (a, b) of the zero-supplemented
W string names the tile entered/left around one inscribed point, and
the table below gives the direction of the tiling edge lying on that
tile.  Read by rows then columns, (a, b), it maps W to S; read
transposed, (b, a), it maps S back to W.  Blocked cells are exactly the
pairs w_pair_allowed forbids.
"""

from __future__ import annotations

from .paths import supplement, w_pair_allowed

# 6x6 partial map; None marks a blocked pair.  Rows 2m and 2m+1 agree.
TRANSFORM_TABLE: tuple[tuple[int | None, ...], ...] = (
    (0, 1, 1, None, None, 0),
    (0, 1, 1, None, None, 0),
    (None, 2, 2, 3, 3, None),
    (None, 2, 2, 3, 3, None),
    (5, None, None, 4, 4, 5),
    (5, None, None, 4, 4, 5),
)


class BlockedPairError(ValueError):
    """A lookup hit a blocked cell; the input was not a valid W/S string."""

    def __init__(self, index: int | None, pair: tuple[int, int]):
        self.index = index
        self.pair = pair
        where = "" if index is None else f" at digit index {index}"
        super().__init__(f"blocked direction pair {pair}{where}")


def transform_code(a: int, b: int) -> int | None:
    """Table cell for the pair (a, b); None when the pair is blocked."""
    return TRANSFORM_TABLE[a][b]


def w_to_s(digits: str) -> str:
    """Tiling-path digits for a well-formed path (one digit longer)."""
    sup = supplement(digits)
    out = []
    for i in range(len(sup) - 1):
        a, b = int(sup[i]), int(sup[i + 1])
        c = TRANSFORM_TABLE[a][b]
        if c is None:
            raise BlockedPairError(i, (a, b))
        out.append(chr(48 + c))
    return "".join(out)


def s_to_w(digits: str) -> str:
    """Well-formed-path digits for a tiling path (one digit shorter).

    Consecutive S pairs are read through the transposed table."""
    out = []
    for i in range(len(digits) - 1):
        a, b = int(digits[i + 1]), int(digits[i])
        c = TRANSFORM_TABLE[a][b]
        if c is None:
            raise BlockedPairError(i, (b, a))
        out.append(chr(48 + c))
    return "".join(out)


def _check_table() -> None:
    # The table is the stored artifact, the predicate is the formula;
    # refuse to load if they ever drift apart.
    for a in range(6):
        for b in range(6):
            blocked = TRANSFORM_TABLE[a][b] is None
            if blocked == w_pair_allowed(a, b):
                raise AssertionError(
                    f"transform table and pair predicate disagree at ({a}, {b})"
                )


_check_table()
