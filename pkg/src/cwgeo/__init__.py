"""Geodesic shortest paths in simple polygons.

One classic linear-space algorithm (Lee-Preparata over a triangulation) and
three constant-workspace algorithms (constrained-Delaunay navigation,
trapezoid walking, MakeStep), plus a brute-force oracle, a workspace meter,
a random-polygon generator and a benchmark CLI.
"""
from .geom import Orientation, Point, in_circle, orient, ray_segment_intersection, segments_properly_cross
from .polygon import (BoundaryPoint, Containment, EdgeRef, PathQuery, Polygon, PolygonError,
                      apply_shear, choose_shear_epsilon, contains, general_position_report,
                      load_polygon, serialize_polygon)

__all__ = [
    "Orientation", "Point", "orient", "in_circle", "segments_properly_cross",
    "ray_segment_intersection",
    "Polygon", "PolygonError", "EdgeRef", "BoundaryPoint", "PathQuery", "Containment",
    "load_polygon", "serialize_polygon", "contains", "apply_shear",
    "choose_shear_epsilon", "general_position_report",
]

__version__ = "0.1.0"
