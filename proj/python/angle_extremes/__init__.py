"""Minimum-angle analysis of point configurations in the Euclidean and
hyperbolic planes: exact triple-angle oracles, extremal-point certificates,
regular n-gon constructions, and a maxi-min optimizer."""

from ._core import (
    GeometryError,
    SchemaError,
    angle_at,
    constructive_witness,
    convex_hull,
    disk_for_area,
    hyp_angle_at,
    hyp_distance,
    inscribed_regular_ngon,
    min_angle,
    optimize,
    regular_ngon,
    regular_simplex,
    regularity_score,
    scale_sweep,
    triangle_report,
    validate_ngon,
    verify_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "GeometryError",
    "SchemaError",
    "angle_at",
    "constructive_witness",
    "convex_hull",
    "disk_for_area",
    "hyp_angle_at",
    "hyp_distance",
    "inscribed_regular_ngon",
    "min_angle",
    "optimize",
    "regular_ngon",
    "regular_simplex",
    "regularity_score",
    "scale_sweep",
    "triangle_report",
    "validate_ngon",
    "verify_theorem",
]
