"""Pants graphs of punctured spheres: Z_n, X_5, X_n and their exhaustion.

Pants decompositions are passed as dicts, e.g. ``{"n": 5, "chords": [[1, 3], [1, 4]]}``
or ``{"n": 5, "curves": [{"coords": [...]}, ...]}``.
"""

from ._pantsgraph import (
    BudgetExceeded,
    Curve,
    Fragment,
    PantsGraphError,
    Word,
    adjacent,
    build_x5,
    build_xn,
    build_zn,
    chain_curves,
    exhaustion,
    farey_exhaustion,
    gamma_family,
    intersection_number,
    normalize_edge,
    normalize_vertex,
    verify_all,
    verify_farey,
    verify_orbit_cover,
    verify_overlap_contains,
    verify_overlap_n5,
    verify_restriction_iso,
    verify_x5_shape,
    verify_z5_pentagon,
)

__all__ = [
    "BudgetExceeded",
    "Curve",
    "Fragment",
    "PantsGraphError",
    "Word",
    "adjacent",
    "build_x5",
    "build_xn",
    "build_zn",
    "chain_curves",
    "exhaustion",
    "farey_exhaustion",
    "gamma_family",
    "intersection_number",
    "normalize_edge",
    "normalize_vertex",
    "verify_all",
    "verify_farey",
    "verify_orbit_cover",
    "verify_overlap_contains",
    "verify_overlap_n5",
    "verify_restriction_iso",
    "verify_x5_shape",
    "verify_z5_pentagon",
]

__version__ = "0.1.0"
