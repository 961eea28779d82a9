"""Paths, tilings and recursive arrowhead curves on triangular grids.

The package enumerates Hamiltonian (H), well-formed (W) and tiling (S)
paths on the generator pattern of order n, converts between W and S
strings digit-pair by digit-pair, expands generators into level-k curve
approximations by edge or node rewriting, compiles W generators into
L-system rules, verifies the curve invariants and renders SVG figures.
"""

__version__ = "0.1.0"

from .bijection import BlockedPairError, TRANSFORM_TABLE, s_to_w, transform_code, w_to_s
from .curves import (
    CurveString,
    DEFAULT_TILE_CAP,
    GasketApproximation,
    SizeGuardError,
    VerificationReport,
    er_expand,
    gasket_tiles,
    hausdorff_dimension,
    is_dark_digitwise,
    nr_expand,
    substitute_digit,
    verify_er,
    verify_nr,
)
from .enumeration import (
    EnumerationReport,
    MAX_ORDER,
    TABLE2_MAX_ORDER,
    count_equality_check,
    count_paths,
    enumerate_paths,
    iter_paths,
)
from .lattice import (
    DIRECTION_STEPS,
    GridSpec,
    OutOfGridError,
    Point,
    dark_tiles,
    edge_to_tile,
    opposite,
    step,
    tile_centroid,
    tile_corners,
    to_cartesian,
    triangular_number,
)
from .lsystem import (
    LSystemRuleSet,
    SYMBOL_TABLE,
    er_rules,
    expand,
    expand_and_walk,
    mirror,
    nr_rules,
    rules_text,
    table3,
)
from .paths import (
    DegenerateOrderError,
    PATH_KINDS,
    PathString,
    first_violation,
    h_pair_allowed,
    parse_digits,
    s_pair_allowed,
    supplement,
    trivial_w,
    validate,
    validate_h,
    validate_s,
    validate_w,
    w_pair_allowed,
    walk,
)
from .render import EmptyPolylineError, RenderSpec, render_curve, render_gasket

__all__ = [
    "__version__",
    "BlockedPairError",
    "TRANSFORM_TABLE",
    "s_to_w",
    "transform_code",
    "w_to_s",
    "CurveString",
    "DEFAULT_TILE_CAP",
    "GasketApproximation",
    "SizeGuardError",
    "VerificationReport",
    "er_expand",
    "gasket_tiles",
    "hausdorff_dimension",
    "is_dark_digitwise",
    "nr_expand",
    "substitute_digit",
    "verify_er",
    "verify_nr",
    "EnumerationReport",
    "MAX_ORDER",
    "TABLE2_MAX_ORDER",
    "count_equality_check",
    "count_paths",
    "enumerate_paths",
    "iter_paths",
    "DIRECTION_STEPS",
    "GridSpec",
    "OutOfGridError",
    "Point",
    "dark_tiles",
    "edge_to_tile",
    "opposite",
    "step",
    "tile_centroid",
    "tile_corners",
    "to_cartesian",
    "triangular_number",
    "LSystemRuleSet",
    "SYMBOL_TABLE",
    "er_rules",
    "expand",
    "expand_and_walk",
    "mirror",
    "nr_rules",
    "rules_text",
    "table3",
    "DegenerateOrderError",
    "PATH_KINDS",
    "PathString",
    "first_violation",
    "h_pair_allowed",
    "parse_digits",
    "s_pair_allowed",
    "supplement",
    "trivial_w",
    "validate",
    "validate_h",
    "validate_s",
    "validate_w",
    "w_pair_allowed",
    "walk",
    "EmptyPolylineError",
    "RenderSpec",
    "render_curve",
    "render_gasket",
]
