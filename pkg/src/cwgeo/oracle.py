"""Independent brute-force references used to verify the path algorithms.

Nothing in here shares code with the constant-workspace algorithms: paths
come from a visibility-graph Dijkstra, the constrained Delaunay reference is
built by ear clipping plus Lawson flips, and the trapezoidation reference is
a full slab sweep.  All of it is desk-scale only and never benchmarked.
"""
from __future__ import annotations

import heapq
import math
import weakref
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

import numpy as np

from .geom import Orientation, Point, in_circle, orient
from .polygon import Containment, PathQuery, Polygon, PolygonError, contains
from .triangulate import triangulate_ear_clipping


class CocircularDegeneracyError(PolygonError):
    pass


def _cross_arr(ox, oy, ax, ay, bx, by):
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


def points_visible(p: Polygon, a: Point, b: Point) -> bool:
    """Closed-set visibility: the segment ab may graze reflex vertices and
    run along edges, but may not leave the polygon."""
    if a.x == b.x and a.y == b.y:
        return True
    xs, ys = p.xs, p.ys
    nx_, ny_ = np.roll(xs, -1), np.roll(ys, -1)
    o1 = _cross_arr(a.x, a.y, b.x, b.y, xs, ys)
    o2 = _cross_arr(a.x, a.y, b.x, b.y, nx_, ny_)
    o3 = _cross_arr(xs, ys, nx_, ny_, a.x, a.y)
    o4 = _cross_arr(xs, ys, nx_, ny_, b.x, b.y)
    proper = ((o1 > 0) != (o2 > 0)) & ((o3 > 0) != (o4 > 0)) \
        & (o1 != 0) & (o2 != 0) & (o3 != 0) & (o4 != 0)
    if np.any(proper):
        return False
    # Split the segment at every boundary touch and check one interior
    # sample per piece.
    dx, dy = b.x - a.x, b.y - a.y
    L2 = dx * dx + dy * dy
    on_seg = (o1 == 0.0) & (np.minimum(a.x, b.x) <= xs) & (xs <= np.maximum(a.x, b.x)) \
        & (np.minimum(a.y, b.y) <= ys) & (ys <= np.maximum(a.y, b.y))
    events = [0.0, 1.0]
    for i in np.nonzero(on_seg)[0]:
        t = ((xs[i] - a.x) * dx + (ys[i] - a.y) * dy) / L2
        if 0.0 < t < 1.0:
            events.append(float(t))
    events.sort()
    for t0, t1 in zip(events, events[1:]):
        if t1 - t0 < 1e-15:
            continue
        tm = 0.5 * (t0 + t1)
        mid = Point(a.x + tm * dx, a.y + tm * dy)
        if contains(p, mid) is Containment.OUTSIDE:
            return False
    return True


_VIS_CACHE: "weakref.WeakKeyDictionary[Polygon, np.ndarray]" = weakref.WeakKeyDictionary()


def _vertex_visibility(p: Polygon) -> np.ndarray:
    mat = _VIS_CACHE.get(p)
    if mat is not None:
        return mat
    n = p.n
    mat = np.zeros((n, n), dtype=bool)
    verts = p.vertices()
    for i in range(n):
        for j in range(i + 1, n):
            if points_visible(p, verts[i], verts[j]):
                mat[i, j] = mat[j, i] = True
    _VIS_CACHE[p] = mat
    return mat


def oracle_shortest_path(p: Polygon, q: PathQuery) -> List[Point]:
    """Geodesic path by Dijkstra on the visibility graph over {s, t} and the
    polygon vertices.  Ties in length are broken toward fewer vertices."""
    s, t = q.s, q.t
    if contains(p, s) is not Containment.INSIDE or contains(p, t) is not Containment.INSIDE:
        raise ValueError("query endpoints must lie strictly inside the polygon")
    if s.x == t.x and s.y == t.y:
        return [s]
    if points_visible(p, s, t):
        return [s, t]
    n = p.n
    verts = p.vertices()
    mat = _vertex_visibility(p)
    s_vis = [points_visible(p, s, v) for v in verts]
    t_vis = [points_visible(p, t, v) for v in verts]

    # Node ids: 0 = s, 1 = t, 2 + i = vertex i.
    def coords(node: int) -> Point:
        if node == 0:
            return s
        if node == 1:
            return t
        return verts[node - 2]

    def edges(node: int):
        if node == 0:
            for i in range(n):
                if s_vis[i]:
                    yield 2 + i
        elif node == 1:
            return
        else:
            i = node - 2
            if t_vis[i]:
                yield 1
            for j in range(n):
                if mat[i, j]:
                    yield 2 + j

    dist: Dict[int, Tuple[float, int]] = {0: (0.0, 0)}
    parent: Dict[int, int] = {}
    heap = [(0.0, 0, 0)]
    seen: Set[int] = set()
    while heap:
        d, hops, node = heapq.heappop(heap)
        if node in seen:
            continue
        seen.add(node)
        if node == 1:
            break
        cn = coords(node)
        for nb in edges(node):
            cb = coords(nb)
            nd = d + math.hypot(cb.x - cn.x, cb.y - cn.y)
            key = (nd, hops + 1)
            if nb not in dist or key < dist[nb]:
                dist[nb] = key
                parent[nb] = node
                heapq.heappush(heap, (nd, hops + 1, nb))
    if 1 not in seen:
        raise PolygonError("no path found; polygon connectivity broken")
    path = [1]
    while path[-1] != 0:
        path.append(parent[path[-1]])
    path.reverse()
    return [coords(node) for node in path]


def oracle_cdt(p: Polygon) -> FrozenSet[Tuple[int, int, int]]:
    """The constrained Delaunay triangulation as canonical index triples.

    Built by Lawson flips from an ear-clipping seed; an exactly-cocircular
    flippable quadruple makes the CDT non-unique and raises.
    """
    tri = triangulate_ear_clipping(p)
    verts = p.vertices()
    tris: Dict[int, Tuple[int, int, int]] = {i: t for i, t in enumerate(tri.triangles)}
    next_id = len(tris)
    edge_map: Dict[FrozenSet[int], Set[int]] = {}

    def add_tri(tid, t):
        tris[tid] = t
        for u, v in ((t[0], t[1]), (t[1], t[2]), (t[2], t[0])):
            edge_map.setdefault(frozenset((u, v)), set()).add(tid)

    def drop_tri(tid):
        t = tris.pop(tid)
        for u, v in ((t[0], t[1]), (t[1], t[2]), (t[2], t[0])):
            edge_map[frozenset((u, v))].discard(tid)

    for tid, t in list(tris.items()):
        for u, v in ((t[0], t[1]), (t[1], t[2]), (t[2], t[0])):
            edge_map.setdefault(frozenset((u, v)), set()).add(tid)

    n = p.n

    def is_boundary(key: FrozenSet[int]) -> bool:
        u, v = sorted(key)
        return (v - u) % n == 1 or (u - v) % n == 1

    queue = [key for key in edge_map if not is_boundary(key)]
    guard = 0
    while queue:
        guard += 1
        if guard > 20 * n * n:
            raise PolygonError("Delaunay flipping failed to terminate")
        key = queue.pop()
        tids = edge_map.get(key)
        if tids is None or len(tids) != 2:
            continue
        t1_id, t2_id = sorted(tids)
        t1, t2 = tris[t1_id], tris[t2_id]
        u, v = sorted(key)
        c = next(x for x in t1 if x not in key)
        d = next(x for x in t2 if x not in key)
        # in_circle wants t1 in CCW order with its own vertices.
        a1, b1, c1 = t1
        val = in_circle(verts[a1], verts[b1], verts[c1], verts[d])
        if val == 0.0:
            raise CocircularDegeneracyError(
                f"cocircular degeneracy on quadruple {sorted((u, v, c, d))}")
        if val > 0.0:
            drop_tri(t1_id)
            drop_tri(t2_id)
            nt1 = _ccw(verts, (u, c, d))
            nt2 = _ccw(verts, (v, c, d))
            add_tri(next_id, nt1)
            add_tri(next_id + 1, nt2)
            next_id += 2
            for outer in (frozenset((u, c)), frozenset((c, v)),
                          frozenset((v, d)), frozenset((d, u))):
                if not is_boundary(outer):
                    queue.append(outer)
    return frozenset(tuple(sorted(t)) for t in tris.values())


def _ccw(verts: List[Point], t: Tuple[int, int, int]) -> Tuple[int, int, int]:
    a, b, c = t
    o = orient(verts[a], verts[b], verts[c])
    if o is Orientation.COLLINEAR:
        raise PolygonError("degenerate triangle during flip")
    return (a, b, c) if o is Orientation.LEFT else (a, c, b)


@dataclass(frozen=True)
class OracleTrapezoid:
    top_edge: int
    bot_edge: int
    left_x: float
    right_x: float
    left_v: int
    right_v: int


def oracle_trapezoidation(p: Polygon) -> List[OracleTrapezoid]:
    """Full vertical decomposition by slab sweep; requires distinct x."""
    xs, ys = p.xs, p.ys
    n = p.n
    if len(np.unique(xs)) != n:
        raise PolygonError("duplicate x-coordinates; shear the polygon first")
    order = np.argsort(xs)
    sorted_x = xs[order]
    nx_ = np.roll(xs, -1)
    open_cells: Dict[Tuple[int, int], Tuple[float, int]] = {}
    out: List[OracleTrapezoid] = []
    for k in range(n - 1):
        x0, x1 = sorted_x[k], sorted_x[k + 1]
        midx = 0.5 * (x0 + x1)
        span = (xs - midx) * (nx_ - midx) < 0.0
        idx = np.nonzero(span)[0]
        ye = ys[idx] + (np.roll(ys, -1)[idx] - ys[idx]) * (midx - xs[idx]) / (nx_[idx] - xs[idx])
        sort2 = np.argsort(ye)
        stacked = idx[sort2]
        if len(stacked) % 2 != 0:
            raise PolygonError("odd edge count in slab; polygon not simple?")
        new_cells: Dict[Tuple[int, int], Tuple[float, int]] = {}
        for m in range(0, len(stacked), 2):
            bot, top = int(stacked[m]), int(stacked[m + 1])
            keypair = (top, bot)
            if keypair in open_cells:
                new_cells[keypair] = open_cells.pop(keypair)
            else:
                new_cells[keypair] = (float(x0), int(order[k]))
        for (top, bot), (lx, lv) in open_cells.items():
            out.append(OracleTrapezoid(top, bot, lx, float(x0), lv, int(order[k])))
        open_cells = new_cells
    last_x, last_v = float(sorted_x[-1]), int(order[-1])
    for (top, bot), (lx, lv) in open_cells.items():
        out.append(OracleTrapezoid(top, bot, lx, last_x, lv, last_v))
    return out


def trapezoid_area(p: Polygon, tr: OracleTrapezoid) -> float:
    def edge_y(e, x):
        j = (e + 1) % p.n
        x1, y1, x2, y2 = p.xs[e], p.ys[e], p.xs[j], p.ys[j]
        if x == x1:
            return y1
        if x == x2:
            return y2
        return y1 + (y2 - y1) * (x - x1) / (x2 - x1)

    h_l = edge_y(tr.top_edge, tr.left_x) - edge_y(tr.bot_edge, tr.left_x)
    h_r = edge_y(tr.top_edge, tr.right_x) - edge_y(tr.bot_edge, tr.right_x)
    return 0.5 * (h_l + h_r) * (tr.right_x - tr.left_x)
