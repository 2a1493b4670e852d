"""Tube radii and distances between thin tubes in hyperbolic solid tori."""

from .bounds import (
    BoundsCertificate,
    check_bounds,
    cgm_power_search,
    depth_lower_bound,
    j_function,
    lower_bound,
    mult_gap_bound,
    r_min_for,
    upper_bound,
)
from .geometry import (
    CylindricalPoint,
    cyl_distance,
    euclidean_distance,
    project_geodesic_length,
    torus_area,
    trad,
)
from .sharpness import biringer_radius_check, biringer_torus, sharpness_example
from .trig import NEG_INF, arccosh_ext, f_cosh, g_cos, sym_mod
from .tube import (
    ELLIPTIC,
    EmptyThinPartError,
    ModelSolidTorus,
    Realizer,
    TubeRadiusResult,
    cusp_distance,
    injrad_at_radius,
    power_for,
    tube_distance,
    tube_radius,
    tube_radius_oracle,
)

__version__ = "0.1.0"
