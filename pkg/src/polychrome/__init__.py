"""ABA-free hypergraphs, shallow hitting sets and polychromatic colorings."""

from .abafree import (
    EdgeRelation,
    InvariantError,
    NotAbaFreeError,
    Violation,
    check_aba_free,
    check_abab_free,
    check_abab_lower,
    compare_edges,
    find_aba_order,
    linear_extension,
    shrink_edge,
    unskippable_vertices,
)
from .coloring import (
    ColoringTrace,
    balanced_color,
    color_aba,
    color_dual_pshp,
    color_pshp,
    color_sphere,
    epsilon_net,
    epsilon_net_partition,
    generic_color,
    polychromatic_oracle,
)
from .families import hk_family, no_shallow_family, sharpness_family
from .geom import (
    ConvexChain,
    PointSet2D,
    build_bottomless,
    build_halfplanes,
    build_intervals,
    build_unbounded_convex,
)
from .hitting import (
    dual_pshp_hitting,
    min_shallowness_oracle,
    minimal_unskippable_hitting,
    pshp_hitting,
    sphere_hitting,
)
from .hypercore import (
    Coloring,
    HittingSet,
    OrderedHypergraph,
    PreconditionError,
    containment_free_reduce,
    dual,
    restrict,
    verify_hitting,
    verify_polychromatic,
)
from .kernels import BACKEND
from .pshp import (
    NoCommonPointError,
    PshpRepresentation,
    SphereRepresentation,
    dual_representation,
    find_cover,
    helly_extend,
    polar,
    pushback,
    pushfront,
    top_bottom_vertices,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Coloring",
    "ColoringTrace",
    "ConvexChain",
    "EdgeRelation",
    "HittingSet",
    "InvariantError",
    "NoCommonPointError",
    "NotAbaFreeError",
    "OrderedHypergraph",
    "PointSet2D",
    "PreconditionError",
    "PshpRepresentation",
    "SphereRepresentation",
    "Violation",
    "balanced_color",
    "build_bottomless",
    "build_halfplanes",
    "build_intervals",
    "build_unbounded_convex",
    "check_aba_free",
    "check_abab_free",
    "check_abab_lower",
    "color_aba",
    "color_dual_pshp",
    "color_pshp",
    "color_sphere",
    "compare_edges",
    "containment_free_reduce",
    "dual",
    "dual_pshp_hitting",
    "dual_representation",
    "epsilon_net",
    "epsilon_net_partition",
    "find_aba_order",
    "find_cover",
    "generic_color",
    "hk_family",
    "helly_extend",
    "linear_extension",
    "min_shallowness_oracle",
    "minimal_unskippable_hitting",
    "no_shallow_family",
    "polar",
    "polychromatic_oracle",
    "pshp_hitting",
    "pushback",
    "pushfront",
    "restrict",
    "sharpness_family",
    "shrink_edge",
    "sphere_hitting",
    "top_bottom_vertices",
    "unskippable_vertices",
    "verify_hitting",
    "verify_polychromatic",
]
