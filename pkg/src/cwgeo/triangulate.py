"""Polygon triangulation by ear clipping, with the dual tree.

This module is deliberately linear-space: it exists to feed the classic
Lee-Preparata algorithm, not the constant-workspace ones.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from .geom import Orientation, Point, orient
from .polygon import Polygon, PolygonError


@dataclass
class Triangulation:
    """Triangles as CCW vertex-index triples plus dual adjacency."""
    triangles: List[Tuple[int, int, int]]
    diagonals: List[Tuple[int, int]]
    neighbors: List[List[Tuple[int, Tuple[int, int]]]]  # per triangle: (other id, shared diagonal)

    def triangle_count(self) -> int:
        return len(self.triangles)


def triangulate_ear_clipping(p: Polygon) -> Triangulation:
    """O(n^2)-ish ear clipping producing exactly n-2 triangles."""
    n = p.n
    xs, ys = p.xs, p.ys
    ring = list(range(n))
    triangles: List[Tuple[int, int, int]] = []

    def is_ear(pos: int) -> bool:
        a = ring[pos - 1]
        v = ring[pos]
        b = ring[(pos + 1) % len(ring)]
        o = _cross3(xs, ys, a, v, b)
        if o <= 0.0:
            return False
        others = np.array([i for i in ring if i not in (a, v, b)], dtype=np.int64)
        if len(others) == 0:
            return True
        px, py = xs[others], ys[others]
        # Closed-triangle containment blocks the ear; grazing counts.
        d1 = _cross_arr(xs[a], ys[a], xs[v], ys[v], px, py)
        d2 = _cross_arr(xs[v], ys[v], xs[b], ys[b], px, py)
        d3 = _cross_arr(xs[b], ys[b], xs[a], ys[a], px, py)
        return not bool(np.any((d1 >= 0) & (d2 >= 0) & (d3 >= 0)))

    guard = 0
    while len(ring) > 3:
        guard += 1
        if guard > 4 * n:
            raise PolygonError("ear clipping failed; polygon may be degenerate")
        clipped = False
        for pos in range(len(ring)):
            if is_ear(pos):
                a = ring[pos - 1]
                v = ring[pos]
                b = ring[(pos + 1) % len(ring)]
                triangles.append((a, v, b))
                del ring[pos]
                clipped = True
                break
        if not clipped:
            raise PolygonError("no ear found; polygon may be degenerate")
    a, v, b = ring
    if _cross3(xs, ys, a, v, b) <= 0.0:
        raise PolygonError("degenerate final triangle")
    triangles.append((a, v, b))
    return _build_dual(p, triangles)


def _cross3(xs, ys, i, j, k) -> float:
    return (xs[j] - xs[i]) * (ys[k] - ys[i]) - (ys[j] - ys[i]) * (xs[k] - xs[i])


def _cross_arr(ox, oy, ax, ay, bx, by):
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


def _build_dual(p: Polygon, triangles: List[Tuple[int, int, int]]) -> Triangulation:
    n = p.n
    by_side: Dict[Tuple[int, int], List[int]] = {}
    for tid, (a, b, c) in enumerate(triangles):
        for u, v in ((a, b), (b, c), (c, a)):
            key = (u, v) if u < v else (v, u)
            by_side.setdefault(key, []).append(tid)
    diagonals = []
    neighbors: List[List[Tuple[int, Tuple[int, int]]]] = [[] for _ in triangles]
    for (u, v), tids in by_side.items():
        if (v - u) % n == 1 or (u - v) % n == 1:
            continue  # polygon edge, not a diagonal
        if len(tids) != 2:
            raise PolygonError(f"diagonal {(u, v)} not shared by exactly two triangles")
        diagonals.append((u, v))
        t0, t1 = tids
        neighbors[t0].append((t1, (u, v)))
        neighbors[t1].append((t0, (u, v)))
    return Triangulation(triangles, diagonals, neighbors)


def locate_triangle(p: Polygon, tr: Triangulation, q: Point) -> int:
    """Smallest triangle id whose closed triangle contains q."""
    xs, ys = p.xs, p.ys
    for tid, (a, b, c) in enumerate(tr.triangles):
        d1 = _cross_arr(xs[a], ys[a], xs[b], ys[b], q.x, q.y)
        d2 = _cross_arr(xs[b], ys[b], xs[c], ys[c], q.x, q.y)
        d3 = _cross_arr(xs[c], ys[c], xs[a], ys[a], q.x, q.y)
        if d1 >= 0 and d2 >= 0 and d3 >= 0:
            return tid
    raise PolygonError("point not covered by any triangle")


def dual_path(tr: Triangulation, frm: int, to: int, meter=None) -> List[Tuple[int, int]]:
    """Diagonals along the unique dual-tree path, in crossing order."""
    if frm == to:
        return []
    tcount = len(tr.triangles)
    if meter is not None:
        meter.charge(3 * tcount)
    parent: List[Optional[int]] = [None] * tcount
    parent_diag: List[Optional[Tuple[int, int]]] = [None] * tcount
    seen = [False] * tcount
    seen[frm] = True
    queue = deque([frm])
    while queue:
        cur = queue.popleft()
        if cur == to:
            break
        for nb, diag in tr.neighbors[cur]:
            if not seen[nb]:
                seen[nb] = True
                parent[nb] = cur
                parent_diag[nb] = diag
                queue.append(nb)
    if not seen[to]:
        raise PolygonError("dual graph is disconnected")
    path = []
    cur = to
    while cur != frm:
        path.append(parent_diag[cur])
        cur = parent[cur]
    path.reverse()
    if meter is not None:
        meter.release(3 * tcount)
    return path
