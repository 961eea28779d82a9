"""Recursive arrowhead curve approximations and the gasket tile oracle.

Level-k curves are built from a generator path by repeated substitution.
Edge rewriting (ER) starts from the single digit "0" and replaces every
digit by a rotated, and for odd digits reflected, copy of an S generator;
the result traces the dark tiles of the level-k gasket.  Node rewriting
(NR) is carried through the pair bijection: transform the W generator to
its S twin, expand by ER, transform back.

The level-k gasket F_n(k) is the set of dark tile keys reached by
replacing every dark tile of the level k-1 figure with a scaled copy of
the generator pattern; `is_dark_digitwise` is the positional base-n oracle
for membership in that set.
"""

import math
from dataclasses import dataclass

from .bijection import s_to_w, w_to_s
from .lattice import GridSpec, Point, edge_to_tile, step, triangular_number
from .paths import parse_digits, s_pair_allowed, validate_s, validate_w

__all__ = [
    "CurveString",
    "GasketApproximation",
    "VerificationReport",
    "SizeGuardError",
    "DEFAULT_TILE_CAP",
    "substitute_digit",
    "er_expand",
    "nr_expand",
    "gasket_tiles",
    "is_dark_digitwise",
    "verify_er",
    "verify_nr",
    "hausdorff_dimension",
]

DEFAULT_TILE_CAP = 10**7


class SizeGuardError(ValueError):
    """The requested approximation exceeds the configured tile cap."""


@dataclass(frozen=True)
class CurveString:
    """A level-k curve approximation as a digit string."""

    order: int
    method: str
    level: int
    digits: str

    def __post_init__(self) -> None:
        if self.method not in ("ER", "NR"):
            raise ValueError(f"unknown curve method {self.method!r}")
        if self.level < 0:
            raise ValueError(f"negative level {self.level}")

    def __str__(self) -> str:
        return self.digits


@dataclass(frozen=True)
class GasketApproximation:
    """Dark tile keys of the level-k gasket on the side n**k lattice."""

    order: int
    level: int
    tiles: frozenset[Point]


@dataclass(frozen=True)
class VerificationReport:
    """First violated assertion of a curve check, or a clean pass."""

    ok: bool
    failure: str | None = None
    index: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def _order_from_s(digits: str) -> int:
    length = len(digits)
    n = int(math.isqrt(2 * length))
    if length < 1 or triangular_number(n) != length:
        raise ValueError(f"length {length} is not a triangular number")
    return n


def _order_from_w(digits: str) -> int:
    length = len(digits) + 1
    n = int(math.isqrt(2 * length))
    if length < 2 or triangular_number(n) != length:
        raise ValueError(f"length {len(digits)} is not a triangular number minus one")
    return n


def substitute_digit(d: int, generator: str) -> str:
    """Copy of the generator rotated onto direction d.

    Even d rotates by d*60 degrees; odd d composes the rotation with a
    reflection, which in direction codes is g -> (d - g) mod 6.
    """
    codes = parse_digits(generator)
    if d % 2 == 0:
        return "".join(str((g + d) % 6) for g in codes)
    return "".join(str((d - g) % 6) for g in codes)


def er_expand(generator: str, k: int, cap: int = DEFAULT_TILE_CAP) -> CurveString:
    """Level-k edge-rewriting expansion of an S generator."""
    n = _order_from_s(generator)
    if not validate_s(generator, n):
        raise ValueError(f"{generator!r} is not a valid S path of order {n}")
    if k < 0:
        raise ValueError(f"negative level {k}")
    if triangular_number(n) ** k > cap:
        raise SizeGuardError(f"level {k} needs {triangular_number(n)**k} digits, cap is {cap}")
    digits = "0"
    for _ in range(k):
        digits = "".join(substitute_digit(d, generator) for d in parse_digits(digits))
    return CurveString(order=n, method="ER", level=k, digits=digits)


def nr_expand(generator: str, k: int, cap: int = DEFAULT_TILE_CAP) -> CurveString:
    """Level-k node-rewriting expansion of a W generator."""
    n = _order_from_w(generator)
    if not validate_w(generator, n):
        raise ValueError(f"{generator!r} is not a valid W path of order {n}")
    er = er_expand(w_to_s(generator), k, cap)
    return CurveString(order=n, method="NR", level=k, digits=s_to_w(er.digits))


def gasket_tiles(n: int, k: int, cap: int = DEFAULT_TILE_CAP) -> GasketApproximation:
    """Dark tile keys of F_n(k) by recursive replacement."""
    if n < 2:
        raise ValueError(f"gasket order must be >= 2, got {n}")
    if k < 0:
        raise ValueError(f"negative level {k}")
    if triangular_number(n) ** k > cap:
        raise SizeGuardError(f"level {k} needs {triangular_number(n)**k} tiles, cap is {cap}")
    tiles = {(0, 0)}
    for _ in range(k):
        tiles = {
            (n * x + dx, n * y + dy)
            for x, y in tiles
            for dy in range(n)
            for dx in range(n - dy)
        }
    return GasketApproximation(order=n, level=k, tiles=frozenset(tiles))


def is_dark_digitwise(n: int, k: int, t: Point) -> bool:
    """Whether tile key t belongs to F_n(k), by base-n digits.

    A key survives all k replacement rounds exactly when every pair of
    base-n digits of its coordinates fits inside the generator pattern.
    """
    x, y = t
    if x < 0 or y < 0 or x + y > n**k - 1:
        raise ValueError(f"tile key {t} outside the side {n**k} lattice")
    for _ in range(k):
        if x % n + y % n > n - 1:
            return False
        x //= n
        y //= n
    return True


def verify_er(c: CurveString, cap: int = DEFAULT_TILE_CAP) -> VerificationReport:
    """Check that an ER curve string traces the gasket correctly.

    The walk from (0,0) must be self-avoiding on the side n**k lattice,
    respect the S pair rules, put each edge on a distinct dark tile of
    F_n(k), cover all of them, and end at (n**k, 0).
    """
    n, k = c.order, c.level
    side = n**k
    expected = triangular_number(n) ** k
    try:
        codes = parse_digits(c.digits)
    except ValueError as exc:
        return VerificationReport(False, str(exc), None)
    if len(codes) != expected:
        return VerificationReport(
            False, f"length {len(codes)} differs from the level-{k} edge count {expected}", None
        )
    gasket = gasket_tiles(n, k, cap).tiles
    grid = GridSpec(side, "overall")
    pos = (0, 0)
    seen = {pos}
    used: set[Point] = set()
    for i, d in enumerate(codes):
        if i > 0 and not s_pair_allowed(codes[i - 1], d):
            return VerificationReport(False, f"pair ({codes[i-1]},{d}) breaks the S turn rules", i)
        tile = edge_to_tile(pos, d)
        if tile not in gasket:
            return VerificationReport(False, f"edge lies on tile {tile} outside the gasket", i)
        if tile in used:
            return VerificationReport(False, f"tile {tile} consumed twice", i)
        used.add(tile)
        q = step(pos, d)
        if not grid.contains(q):
            return VerificationReport(False, f"walk leaves the lattice at {q}", i)
        if q in seen:
            return VerificationReport(False, f"walk revisits {q}", i)
        seen.add(q)
        pos = q
    if pos != (side, 0):
        return VerificationReport(False, f"walk ends at {pos}, not ({side}, 0)", None)
    if len(used) != len(gasket):
        return VerificationReport(
            False, f"walk covers {len(used)} of {len(gasket)} dark tiles", None
        )
    return VerificationReport(True)


def verify_nr(c: CurveString, cap: int = DEFAULT_TILE_CAP) -> VerificationReport:
    """Check that an NR curve string is Hamiltonian on the gasket keys.

    The walk over tile keys starts on (0,0), moves one unit step per digit,
    stays on dark keys of F_n(k), visits each exactly once, and ends on
    (n**k - 1, 0).
    """
    n, k = c.order, c.level
    expected = triangular_number(n) ** k
    try:
        codes = parse_digits(c.digits)
    except ValueError as exc:
        return VerificationReport(False, str(exc), None)
    if len(codes) != expected - 1:
        return VerificationReport(
            False, f"length {len(codes)} differs from the level-{k} node count minus one", None
        )
    gasket = gasket_tiles(n, k, cap).tiles
    key = (0, 0)
    if key not in gasket:
        return VerificationReport(False, "start key (0, 0) is not a dark tile", None)
    seen = {key}
    for i, d in enumerate(codes):
        key = step(key, d)
        if key not in gasket:
            return VerificationReport(False, f"walk leaves the dark set at {key}", i)
        if key in seen:
            return VerificationReport(False, f"walk revisits dark tile {key}", i)
        seen.add(key)
    if key != (n**k - 1, 0):
        return VerificationReport(False, f"walk ends at {key}, not ({n**k - 1}, 0)", None)
    if len(seen) != len(gasket):
        return VerificationReport(False, f"walk covers {len(seen)} of {len(gasket)} dark tiles", None)
    return VerificationReport(True)


def hausdorff_dimension(n: int) -> float:
    """Dimension of the order-n gasket, log base n of T_n."""
    if n < 2:
        raise ValueError(f"gasket order must be >= 2, got {n}")
    return math.log(triangular_number(n)) / math.log(n)
