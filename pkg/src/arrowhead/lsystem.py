"""Lindenmayer rules compiled from W generators, with a turtle interpreter.

Every consecutive digit pair of the zero-supplemented W string maps to a
short symbol group over the alphabet A, B, +, -; concatenating the groups
gives the edge-rewriting production for A, and swapping letters and turn
signs (the mirror rule) gives B.  Inserting an F between the groups and
renaming A, B to the silent variables X, Y yields the node-rewriting pair.

Turtle semantics: A, B and F draw one unit segment, X and Y are silent,
"+" turns 60 degrees clockwise and "-" counterclockwise, heading starts at
direction code 0.  The walk is tracked in exact lattice integers and
converted to Cartesian floats only at the end.
"""

import math
from dataclasses import dataclass, field

from .bijection import BlockedPairError
from .lattice import step, to_cartesian
from .paths import parse_digits, supplement, validate_w

__all__ = [
    "SYMBOL_TABLE",
    "LSystemRuleSet",
    "table3",
    "mirror",
    "er_rules",
    "nr_rules",
    "expand",
    "expand_and_walk",
    "rules_text",
]

# Symbol groups per digit pair (a row, b column); None marks the blocked
# pairs, the same pattern the pair transform table blocks.
SYMBOL_TABLE: tuple[tuple[str | None, ...], ...] = (
    ("A", "-B", "-B-", None, None, "A+"),
    ("+A", "B", "B-", None, None, "+A+"),
    (None, "A+", "A", "-B", "-B-", None),
    (None, "+A+", "+A", "B", "B-", None),
    ("-B-", None, None, "A+", "A", "-B"),
    ("B-", None, None, "+A+", "+A", "B"),
)

_MIRROR = str.maketrans("ABXY+-", "BAYX-+")


@dataclass(frozen=True)
class LSystemRuleSet:
    """Axiom, productions and the group decomposition they came from."""

    axiom: str
    productions: dict[str, str]
    turn: int = 60
    groups: dict[str, tuple[str, ...]] = field(default_factory=dict)


def table3(a: int, b: int) -> str:
    """Symbol group for the digit pair (a, b)."""
    cell = SYMBOL_TABLE[a][b]
    if cell is None:
        raise BlockedPairError(None, (a, b))
    return cell


def mirror(rule: str) -> str:
    """Swap A with B (X with Y) and + with -, keeping the order."""
    return rule.translate(_MIRROR)


def er_rules(w: str) -> LSystemRuleSet:
    """Edge-rewriting rule set of a W generator."""
    length = len(w) + 1
    n = int(math.isqrt(2 * length))
    if n * (n + 1) // 2 != length or not validate_w(w, n):
        raise ValueError(f"{w!r} is not a valid W path")
    sup = parse_digits(supplement(w))
    groups = tuple(table3(a, b) for a, b in zip(sup, sup[1:]))
    a_rule = "".join(groups)
    return LSystemRuleSet(
        axiom="A",
        productions={"A": a_rule, "B": mirror(a_rule)},
        groups={"A": groups, "B": tuple(mirror(g) for g in groups)},
    )


def nr_rules(er: LSystemRuleSet) -> LSystemRuleSet:
    """Node-rewriting rule set derived from an edge-rewriting one.

    Needs the group decomposition carried by er_rules; the flat production
    string does not determine the group boundaries.
    """
    if "A" not in er.groups:
        raise ValueError("rule set lacks the group decomposition of er_rules")
    x_groups = tuple(g.translate(str.maketrans("AB", "XY")) for g in er.groups["A"])
    x_rule = "F".join(x_groups)
    y_rule = mirror(x_rule)
    return LSystemRuleSet(
        axiom="X",
        productions={"X": x_rule, "Y": y_rule},
        groups={"X": x_groups, "Y": tuple(mirror(g) for g in x_groups)},
    )


def expand(rules: LSystemRuleSet, k: int) -> str:
    """Rewrite the axiom k times; symbols without a production are fixed."""
    if k < 0:
        raise ValueError(f"negative level {k}")
    s = rules.axiom
    for _ in range(k):
        s = "".join(rules.productions.get(ch, ch) for ch in s)
    return s


def expand_and_walk(rules: LSystemRuleSet, k: int) -> list[tuple[float, float]]:
    """Cartesian polyline drawn by the level-k expansion."""
    pos = (0, 0)
    heading = 0
    points = [pos]
    for ch in expand(rules, k):
        if ch == "+":
            heading = (heading - 1) % 6
        elif ch == "-":
            heading = (heading + 1) % 6
        elif ch in "ABF":
            pos = step(pos, heading)
            points.append(pos)
        elif ch not in "XY":
            raise ValueError(f"unknown turtle symbol {ch!r}")
    return [to_cartesian(p) for p in points]


def rules_text(rules: LSystemRuleSet) -> str:
    """One line per production, preceded by the axiom line."""
    lines = [f"axiom={rules.axiom}"]
    lines.extend(f"{var}={rules.productions[var]}" for var in sorted(rules.productions))
    return "\n".join(lines) + "\n"
