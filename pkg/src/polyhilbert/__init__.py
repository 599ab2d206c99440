"""Hilbert geometry on convex polygons.

Distances, Finsler norms and metric balls of the Hilbert metric, the
coordinatewise atanh model of the square, a bi-Lipschitz flattening of any
convex polygon onto the l1 plane, and the explicit constants that bound it.
"""
from .core import (
    ChordParam,
    ConvexPolygon,
    RayExit,
    Vec2,
    chord,
    cross_ratio,
    finsler_norm,
    hilbert_distance,
    metric_ball,
    ray_exit,
    segment_length,
    validate_polygon,
)
from .flatten import FanDecomposition, build_fan, forward, inverse, jacobian, locate_triangle
from .kernels import BACKEND

__all__ = [
    "BACKEND",
    "ChordParam",
    "ConvexPolygon",
    "FanDecomposition",
    "RayExit",
    "Vec2",
    "build_fan",
    "chord",
    "cross_ratio",
    "finsler_norm",
    "forward",
    "hilbert_distance",
    "inverse",
    "jacobian",
    "locate_triangle",
    "metric_ball",
    "ray_exit",
    "segment_length",
    "validate_polygon",
]
