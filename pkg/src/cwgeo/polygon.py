"""The read-only simple-polygon input model.

A Polygon stores its vertices counterclockwise in two immutable float64
arrays; the arrays play the role of the read-only input tape.  Points placed
on edge interiors are carried together with an edge reference so that later
boundary walks are immune to rounding in the constructed coordinates.
"""
from __future__ import annotations

import io
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

from .geom import Orientation, Point, orient


class PolygonError(ValueError):
    pass


class Containment(Enum):
    OUTSIDE = 0
    INSIDE = 1
    BOUNDARY = 2


@dataclass(frozen=True, slots=True)
class EdgeRef:
    """Edge i is the segment from vertex i to vertex (i+1) mod n."""
    index: int


@dataclass(frozen=True, slots=True)
class BoundaryPoint:
    """A point on the polygon boundary plus the edge it logically lies on."""
    point: Point
    edge: EdgeRef


@dataclass(frozen=True, slots=True)
class PathQuery:
    s: Point
    t: Point


class Polygon:
    """Simple polygon with counterclockwise vertices, immutable after load."""

    __slots__ = ("xs", "ys", "n", "__weakref__")

    def __init__(self, vertices: Sequence[Tuple[float, float]] | np.ndarray,
                 validate: bool = True):
        arr = np.asarray(vertices, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise PolygonError("expected an (n, 2) array of coordinates")
        n = arr.shape[0]
        if n < 3:
            raise PolygonError("degenerate: fewer than 3 vertices")
        if not np.all(np.isfinite(arr)):
            raise PolygonError("coordinates must be finite")
        area2 = _signed_area2(arr[:, 0], arr[:, 1])
        if area2 == 0.0:
            raise PolygonError("degenerate: zero area")
        if area2 < 0.0:
            arr = arr[::-1].copy()
        xs = np.ascontiguousarray(arr[:, 0])
        ys = np.ascontiguousarray(arr[:, 1])
        if validate:
            _validate_simple(xs, ys)
        xs.flags.writeable = False
        ys.flags.writeable = False
        self.xs = xs
        self.ys = ys
        self.n = n

    def __len__(self) -> int:
        return self.n

    def vertex(self, i: int) -> Point:
        i %= self.n
        return Point(float(self.xs[i]), float(self.ys[i]))

    def vertices(self) -> List[Point]:
        return [Point(float(x), float(y)) for x, y in zip(self.xs, self.ys)]

    def next_index(self, i: int) -> int:
        return (i + 1) % self.n

    def prev_index(self, i: int) -> int:
        return (i - 1) % self.n

    def edge(self, i: int) -> Tuple[Point, Point]:
        return self.vertex(i), self.vertex(i + 1)

    def signed_area(self) -> float:
        return 0.5 * _signed_area2(self.xs, self.ys)

    def __repr__(self) -> str:
        return f"Polygon(n={self.n})"


def _signed_area2(xs: np.ndarray, ys: np.ndarray) -> float:
    return float(np.sum(xs * np.roll(ys, -1) - np.roll(xs, -1) * ys))


def _validate_simple(xs: np.ndarray, ys: np.ndarray) -> None:
    """Raise unless the closed boundary is simple.  O(n^2)."""
    n = len(xs)
    pts = np.stack([xs, ys], axis=1)
    if len(np.unique(pts, axis=0)) != n:
        raise PolygonError("not simple: repeated vertex")
    for i in range(n):
        if xs[i] == xs[(i + 1) % n] and ys[i] == ys[(i + 1) % n]:
            raise PolygonError("not simple: zero-length edge")
    ax, ay = xs, ys
    bx, by = np.roll(xs, -1), np.roll(ys, -1)
    for i in range(n):
        # Proper crossing of edge i against all non-adjacent edges j > i.
        js = np.arange(i + 2, n if i > 0 else n - 1)
        if len(js) == 0:
            continue
        o1 = _cross_arr(ax[i], ay[i], bx[i], by[i], ax[js], ay[js])
        o2 = _cross_arr(ax[i], ay[i], bx[i], by[i], bx[js], by[js])
        o3 = _cross_arr(ax[js], ay[js], bx[js], by[js], ax[i], ay[i])
        o4 = _cross_arr(ax[js], ay[js], bx[js], by[js], bx[i], by[i])
        crossing = ((o1 > 0) != (o2 > 0)) & ((o3 > 0) != (o4 > 0)) \
            & (o1 != 0) & (o2 != 0) & (o3 != 0) & (o4 != 0)
        if np.any(crossing):
            raise PolygonError("not simple")
        # A vertex lying in the open interior of a non-incident edge also
        # breaks simplicity (touching boundary).
        for j in js:
            for px, py in ((ax[j], ay[j]), (bx[j], by[j])):
                if _on_open_segment(ax[i], ay[i], bx[i], by[i], px, py):
                    raise PolygonError("not simple: vertex on edge")
            if _on_open_segment(ax[j], ay[j], bx[j], by[j], ax[i], ay[i]) or \
               _on_open_segment(ax[j], ay[j], bx[j], by[j], bx[i], by[i]):
                raise PolygonError("not simple: vertex on edge")


def _cross_arr(ox, oy, ax_, ay_, bx_, by_):
    return (ax_ - ox) * (by_ - oy) - (ay_ - oy) * (bx_ - ox)


def _on_open_segment(ax_, ay_, bx_, by_, px, py) -> bool:
    if _cross_arr(ax_, ay_, bx_, by_, px, py) != 0.0:
        return False
    if (px == ax_ and py == ay_) or (px == bx_ and py == by_):
        return False
    return min(ax_, bx_) <= px <= max(ax_, bx_) and min(ay_, by_) <= py <= max(ay_, by_)


def load_polygon(source: Union[str, bytes, io.IOBase]) -> Polygon:
    """Parse the polygon text format.

    First line: integer n.  Then n lines "x y".  Lines starting with '#'
    are ignored.  Clockwise input is silently reversed.
    """
    if isinstance(source, bytes):
        text = source.decode("utf-8")
    elif isinstance(source, str):
        text = source
    else:
        data = source.read()
        text = data.decode("utf-8") if isinstance(data, bytes) else data
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise PolygonError("empty polygon file")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise PolygonError(f"bad vertex count line: {lines[0]!r}") from exc
    if n < 3:
        raise PolygonError("degenerate: fewer than 3 vertices")
    if len(lines) - 1 < n:
        raise PolygonError(f"expected {n} vertex lines, got {len(lines) - 1}")
    verts = []
    for ln in lines[1:n + 1]:
        parts = ln.split()
        if len(parts) != 2:
            raise PolygonError(f"bad vertex line: {ln!r}")
        try:
            verts.append((float(parts[0]), float(parts[1])))
        except ValueError as exc:
            raise PolygonError(f"bad vertex line: {ln!r}") from exc
    return Polygon(verts)


def serialize_polygon(p: Polygon) -> str:
    """Inverse of load_polygon; coordinates round-trip bit-exactly."""
    out = [str(p.n)]
    for x, y in zip(p.xs, p.ys):
        out.append(f"{float(x)!r} {float(y)!r}")
    return "\n".join(out) + "\n"


def contains(p: Polygon, q: Point) -> Containment:
    """Even-odd classification; BOUNDARY only on exact incidence."""
    xs, ys = p.xs, p.ys
    nx, ny = np.roll(xs, -1), np.roll(ys, -1)
    d = _cross_arr(xs, ys, nx, ny, q.x, q.y)
    on = (d == 0.0) & (np.minimum(xs, nx) <= q.x) & (q.x <= np.maximum(xs, nx)) \
        & (np.minimum(ys, ny) <= q.y) & (q.y <= np.maximum(ys, ny))
    if np.any(on):
        return Containment.BOUNDARY
    straddle = (ys > q.y) != (ny > q.y)
    with np.errstate(divide="ignore", invalid="ignore"):
        xhit = xs + (q.y - ys) * (nx - xs) / (ny - ys)
    inside = np.count_nonzero(straddle & (xhit > q.x)) % 2 == 1
    return Containment.INSIDE if inside else Containment.OUTSIDE


def apply_shear(p: Polygon, epsilon: float) -> Polygon:
    """Map every vertex (x, y) to (x + epsilon*y, y)."""
    if epsilon <= 0.0:
        raise PolygonError("epsilon must be positive")
    arr = np.stack([p.xs + epsilon * p.ys, p.ys], axis=1)
    # A shear is an area-preserving affine bijection, so simplicity and
    # orientation survive; skip the quadratic validation.
    return Polygon(arr, validate=False)


def undo_shear_point(q: Point, epsilon: float) -> Point:
    return Point(q.x - epsilon * q.y, q.y)


def shear_point(q: Point, epsilon: float) -> Point:
    return Point(q.x + epsilon * q.y, q.y)


def choose_shear_epsilon(p: Polygon) -> float:
    """A positive epsilon strictly below (min positive x-gap) / (2 max|y|),
    guaranteeing the shear keeps the strict x-order of all vertices.
    """
    uniq = np.unique(p.xs)
    if len(uniq) < 2:
        raise PolygonError("internal error: all vertices share one x-coordinate")
    min_gap = float(np.min(np.diff(uniq)))
    max_abs_y = float(np.max(np.abs(p.ys)))
    if max_abs_y == 0.0:
        raise PolygonError("internal error: flat polygon")
    return min_gap / (4.0 * max_abs_y)


@dataclass(frozen=True)
class GeneralPositionReport:
    collinear_triples: List[Tuple[int, int, int]]
    equal_x_pairs: List[Tuple[int, int]]
    equal_y_pairs: List[Tuple[int, int]]

    @property
    def in_general_position(self) -> bool:
        return not self.collinear_triples and not self.equal_x_pairs


def general_position_report(p: Polygon) -> GeneralPositionReport:
    """Brute-force scan for collinear triples and equal-coordinate pairs."""
    n = p.n
    triples = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if orient(p.vertex(i), p.vertex(j), p.vertex(k)) is Orientation.COLLINEAR:
                    triples.append((i, j, k))
    eq_x = [(i, j) for i in range(n) for j in range(i + 1, n) if p.xs[i] == p.xs[j]]
    eq_y = [(i, j) for i in range(n) for j in range(i + 1, n) if p.ys[i] == p.ys[j]]
    return GeneralPositionReport(triples, eq_x, eq_y)
