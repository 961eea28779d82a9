"""Direction-code strings and the three path families on a generator pattern.

A path of order n is written as a string of ASCII digits 0-5, one per
edge, e.g. "111544015".  Three kinds are distinguished:

* H: Hamiltonian path on the inscribed grid from A to B: visits all
  n(n+1)/2 points, never turning straight back.
* W: well-formed H path: after supplementing the string with a leading
  and a trailing 0, no pair of consecutive codes turns 120 degrees
  right after an even code or 120 degrees left after an odd code.
  W paths are exactly the H paths transformable into tiling paths.
* S: tiling path on the overall grid: n(n+1)/2 edges from A to B,
  self-avoiding, every edge lying on a distinct dark tile.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import GridSpec, Point, edge_to_tile, step, triangular_number

PATH_KINDS = ("H", "W", "S")


class DegenerateOrderError(ValueError):
    """Order n < 2 carries no usable path."""


def h_pair_allowed(a: int, b: int) -> bool:
    """Consecutive edges may not turn straight back."""
    return (b - a) % 6 != 3


def w_pair_allowed(a: int, b: int) -> bool:
    """No turn-back; no 120-degree right turn after an even code, nor
    120-degree left turn after an odd one."""
    if (b - a) % 6 == 3:
        return False
    if a % 2 == 0:
        return b != (a + 4) % 6
    return b != (a + 2) % 6


def s_pair_allowed(a: int, b: int) -> bool:
    """No turn-back; no turn re-entering the dark tile just left."""
    if (b - a) % 6 == 3:
        return False
    if a % 2 == 0:
        return b != (a + 2) % 6
    return b != (a + 4) % 6


def parse_digits(digits: str) -> list[int]:
    out = []
    for i, ch in enumerate(digits):
        if ch < "0" or ch > "5":
            raise ValueError(f"invalid direction code {ch!r} at index {i}")
        out.append(ord(ch) - 48)
    return out


def supplement(digits: str) -> str:
    """W string framed by the virtual base-direction edges: 0<digits>0."""
    return "0" + digits + "0"


def walk(start: Point, digits: str) -> list[Point]:
    """Points visited walking the digit string from start; len(digits)+1 entries."""
    pts = [start]
    p = start
    for d in parse_digits(digits):
        p = step(p, d)
        pts.append(p)
    return pts


def validate_h(digits: str, n: int) -> bool:
    if n < 2 or len(digits) != triangular_number(n) - 1:
        return False
    try:
        codes = parse_digits(digits)
    except ValueError:
        return False
    grid = GridSpec(n, "inscribed")
    p = (0, 0)
    seen = {p}
    prev = None
    for d in codes:
        if prev is not None and not h_pair_allowed(prev, d):
            return False
        p = step(p, d)
        if not grid.contains(p) or p in seen:
            return False
        seen.add(p)
        prev = d
    return p == (n - 1, 0)


def validate_w(digits: str, n: int) -> bool:
    if not validate_h(digits, n):
        return False
    sup = parse_digits(supplement(digits))
    return all(w_pair_allowed(a, b) for a, b in zip(sup, sup[1:]))


def validate_s(digits: str, n: int) -> bool:
    if n < 2 or len(digits) != triangular_number(n):
        return False
    try:
        codes = parse_digits(digits)
    except ValueError:
        return False
    grid = GridSpec(n, "overall")
    p = (0, 0)
    seen = {p}
    tiles = set()
    for d in codes:
        q = step(p, d)
        if not grid.contains(q) or q in seen:
            return False
        t = edge_to_tile(p, d)
        if t in tiles:
            return False
        tiles.add(t)
        seen.add(q)
        p = q
    if p != (n, 0):
        return False
    # every dark tile hit exactly once
    return len(tiles) == triangular_number(n)


_VALIDATORS = {"H": validate_h, "W": validate_w, "S": validate_s}


def first_violation(digits: str, n: int, kind: str) -> tuple[str, int | None] | None:
    """Description and digit index of the first broken rule, None if valid.

    Checks run in walk order so the reported index is the earliest failing
    digit; whole-path properties (length, endpoint, coverage) carry index
    None.  Agrees with validate() on every input.
    """
    if kind not in PATH_KINDS:
        raise ValueError(f"unknown path kind {kind!r}")
    if n < 2:
        return (f"order {n} admits no paths", None)
    try:
        codes = parse_digits(digits)
    except ValueError as exc:
        return (str(exc), int(str(exc).rsplit(" ", 1)[-1]))
    inscribed = kind in ("H", "W")
    expected = triangular_number(n) - 1 if inscribed else triangular_number(n)
    if len(codes) != expected:
        return (f"expected {expected} digits for kind {kind} order {n}, got {len(codes)}", None)
    grid = GridSpec(n, "inscribed" if inscribed else "overall")
    goal = (n - 1, 0) if inscribed else (n, 0)
    pair_rule = {"H": h_pair_allowed, "W": w_pair_allowed, "S": s_pair_allowed}[kind]
    p = (0, 0)
    seen = {p}
    tiles = set()
    for i, d in enumerate(codes):
        if i > 0 and not pair_rule(codes[i - 1], d):
            return (f"forbidden turn ({codes[i-1]},{d})", i)
        if i == 0 and kind == "W" and not w_pair_allowed(0, d):
            return (f"forbidden leading turn (0,{d})", i)
        q = step(p, d)
        if not grid.contains(q):
            return (f"walk leaves the grid at {q}", i)
        if q in seen:
            return (f"walk revisits {q}", i)
        if kind == "S":
            t = edge_to_tile(p, d)
            if t in tiles:
                return (f"tile {t} consumed twice", i)
            tiles.add(t)
        seen.add(q)
        p = q
    if kind == "W" and not w_pair_allowed(codes[-1], 0):
        return (f"forbidden trailing turn ({codes[-1]},0)", len(codes) - 1)
    if p != goal:
        return (f"walk ends at {p}, not {goal}", None)
    if kind == "S" and len(tiles) != triangular_number(n):
        return (f"covers {len(tiles)} of {triangular_number(n)} dark tiles", None)
    return None


def validate(digits: str, n: int, kind: str) -> bool:
    return _VALIDATORS[kind](digits, n)


def trivial_w(n: int) -> str:
    """Zigzag well-formed path, constructible for every order n >= 2.

    Repeatedly heads up-right to the slanted side, turns down-right,
    descends down-left to the base and turns right, each leg one step
    shorter than the last; even orders finish with one arrowhead "15".
    """
    if n < 2:
        raise DegenerateOrderError(f"no nontrivial path of order {n}")
    out = []
    j = 1
    rounds = (n - 1) // 2 if n % 2 else (n - 2) // 2
    for _ in range(rounds):
        out.append("1" * (n - j))
        out.append("5")
        j += 1
        out.append("4" * (n - j))
        out.append("0")
        j += 1
    if n % 2 == 0:
        out.append("15")
    return "".join(out)


@dataclass(frozen=True)
class PathString:
    """A validated digit string of a given kind and order."""

    order: int
    kind: str
    digits: str

    def __post_init__(self) -> None:
        if self.kind not in PATH_KINDS:
            raise ValueError(f"unknown path kind {self.kind!r}")
        if not validate(self.digits, self.order, self.kind):
            raise ValueError(
                f"{self.digits!r} is not a valid {self.kind} path of order {self.order}"
            )

    def to_record(self) -> dict:
        return {"n": self.order, "kind": self.kind, "digits": self.digits}

    @classmethod
    def from_record(cls, record: dict) -> "PathString":
        return cls(record["n"], record["kind"], record["digits"])
