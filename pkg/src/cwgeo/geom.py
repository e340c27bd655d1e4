"""Scalar geometric predicates and constructions.

Everything here is orientation-based; angles are never computed.  All
predicates use plain double-precision determinants, and COLLINEAR means the
determinant is exactly zero.  Callers that need tolerance against rounding
(points constructed on edges) carry edge references instead.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple


class GeometryError(ValueError):
    pass


class Orientation(Enum):
    LEFT = 1
    COLLINEAR = 0
    RIGHT = -1

    def flipped(self) -> "Orientation":
        return Orientation(-self.value)


@dataclass(frozen=True, slots=True)
class Point:
    x: float
    y: float

    def __iter__(self):
        yield self.x
        yield self.y

    def tuple(self) -> Tuple[float, float]:
        return (self.x, self.y)

    def distance_to(self, other: "Point") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def __repr__(self) -> str:
        return f"Point({self.x!r}, {self.y!r})"


def cross(ox: float, oy: float, ax: float, ay: float, bx: float, by: float) -> float:
    """Twice the signed area of triangle (o, a, b)."""
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


def orient(a: Point, b: Point, c: Point) -> Orientation:
    """Position of c relative to the directed line through a and b."""
    det = cross(a.x, a.y, b.x, b.y, c.x, c.y)
    if det > 0.0:
        return Orientation.LEFT
    if det < 0.0:
        return Orientation.RIGHT
    return Orientation.COLLINEAR


def segments_properly_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True iff the open segments ab and cd share exactly one interior point.

    Endpoint touching and collinear overlap are not proper crossings.
    """
    o1 = cross(a.x, a.y, b.x, b.y, c.x, c.y)
    o2 = cross(a.x, a.y, b.x, b.y, d.x, d.y)
    o3 = cross(c.x, c.y, d.x, d.y, a.x, a.y)
    o4 = cross(c.x, c.y, d.x, d.y, b.x, b.y)
    return ((o1 > 0.0) != (o2 > 0.0)) and ((o3 > 0.0) != (o4 > 0.0)) \
        and o1 != 0.0 and o2 != 0.0 and o3 != 0.0 and o4 != 0.0


def in_circle(a: Point, b: Point, c: Point, d: Point) -> float:
    """Signed in-circle test: positive iff d is strictly inside the circumcircle
    of the counterclockwise triangle abc, zero iff cocircular.
    """
    if orient(a, b, c) is Orientation.COLLINEAR:
        raise GeometryError("degenerate triangle")
    adx = a.x - d.x
    ady = a.y - d.y
    bdx = b.x - d.x
    bdy = b.y - d.y
    cdx = c.x - d.x
    cdy = c.y - d.y
    alift = adx * adx + ady * ady
    blift = bdx * bdx + bdy * bdy
    clift = cdx * cdx + cdy * cdy
    return (alift * (bdx * cdy - cdx * bdy)
            + blift * (cdx * ady - adx * cdy)
            + clift * (adx * bdy - bdx * ady))


def ray_segment_intersection(origin: Point, through: Point, c: Point, d: Point
                             ) -> Optional[Tuple[Point, float]]:
    """Intersection of the ray origin->through with the closed segment cd.

    Returns (hit point, ray parameter t) with t measured so that `through`
    has t = 1, or None.  Parallel and collinear configurations yield None.
    """
    rx = through.x - origin.x
    ry = through.y - origin.y
    sx = d.x - c.x
    sy = d.y - c.y
    denom = rx * sy - ry * sx
    if denom == 0.0:
        return None
    qpx = c.x - origin.x
    qpy = c.y - origin.y
    t = (qpx * sy - qpy * sx) / denom
    u = (qpx * ry - qpy * rx) / denom
    if t < 0.0 or u < 0.0 or u > 1.0:
        return None
    return Point(origin.x + t * rx, origin.y + t * ry), t
