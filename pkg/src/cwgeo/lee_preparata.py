"""Classic linear-time, linear-space funnel algorithm over a triangulation."""
from __future__ import annotations

from typing import List, Optional, Tuple

from .geom import Orientation, Point, orient
from .polygon import PathQuery, Polygon, PolygonError
from .triangulate import Triangulation, dual_path, locate_triangle
from .workspace import MeteredDeque, WorkspaceMeter

LEFT = "left"
RIGHT = "right"

S_REF = -1
T_REF = -2


class Funnel:
    """Cusp plus two concave chains stored in one deque.

    The deque runs from the left chain tip over the cusp to the right chain
    tip; entries are vertex indices (or the s/t sentinels).  Push/pop
    counters witness the amortized linear bound.
    """

    def __init__(self, lookup, left_ref: int, cusp_ref: int, right_ref: int,
                 meter: Optional[WorkspaceMeter] = None):
        self._pt = lookup
        self.deque = MeteredDeque(meter, words_per_item=1)
        self.deque.append(left_ref)
        self.deque.append(cusp_ref)
        self.deque.append(right_ref)
        self.cusp = cusp_ref

    @property
    def pushes(self) -> int:
        return self.deque.pushes

    @property
    def pops(self) -> int:
        return self.deque.pops

    def cusp_point(self) -> Point:
        return self._pt(self.cusp)

    def left_chain(self) -> List[int]:
        """Refs from the vertex nearest the cusp out to the left chain tip."""
        out = []
        for ref in self.deque:
            if ref == self.cusp:
                break
            out.append(ref)
        out.reverse()
        return out

    def right_chain(self) -> List[int]:
        out = []
        seen_cusp = False
        for ref in self.deque:
            if seen_cusp:
                out.append(ref)
            elif ref == self.cusp:
                seen_cusp = True
        return out

    def step(self, ref: int, side: str) -> List[int]:
        """Merge one new diagonal endpoint; returns emitted path refs."""
        pt = self._pt
        f = self.deque
        w = pt(ref)
        emitted: List[int] = []
        if side == RIGHT:
            while f[-1] != self.cusp and orient(pt(f[-2]), pt(f[-1]), w) is not Orientation.RIGHT:
                f.pop()
            if f[-1] == self.cusp:
                while len(f) > 1 and orient(pt(f[-1]), pt(f[-2]), w) is Orientation.LEFT:
                    emitted.append(f.pop())
                self.cusp = f[-1]
            f.append(ref)
        elif side == LEFT:
            while f[0] != self.cusp and orient(pt(f[1]), pt(f[0]), w) is not Orientation.LEFT:
                f.popleft()
            if f[0] == self.cusp:
                while len(f) > 1 and orient(pt(f[0]), pt(f[1]), w) is Orientation.RIGHT:
                    emitted.append(f.popleft())
                self.cusp = f[0]
            f.appendleft(ref)
        else:
            raise ValueError(f"side must be {LEFT!r} or {RIGHT!r}")
        return emitted


def funnel_step(funnel: Funnel, ref: int, side: str) -> Tuple[Funnel, List[int]]:
    """Functional wrapper around Funnel.step."""
    emitted = funnel.step(ref, side)
    return funnel, emitted


def lp_shortest_path(p: Polygon, tr: Triangulation, q: PathQuery,
                     meter: Optional[WorkspaceMeter] = None) -> List[Point]:
    """Geodesic from s to t by walking the dual-tree diagonals with a funnel."""
    s, t = q.s, q.t

    def pt(ref: int) -> Point:
        if ref == S_REF:
            return s
        if ref == T_REF:
            return t
        return p.vertex(ref)

    if s.x == t.x and s.y == t.y:
        return [s]
    if meter is not None:
        meter.charge(8)  # locator scalars and loop registers
    s_tri = locate_triangle(p, tr, s)
    t_tri = locate_triangle(p, tr, t)
    if s_tri == t_tri:
        if meter is not None:
            meter.release(8)
        return [s, t]

    diagonals = dual_path(tr, s_tri, t_tri, meter=meter)
    if meter is not None:
        meter.charge(2 * len(diagonals))

    a, b = diagonals[0]
    o = orient(s, pt(a), pt(b))
    if o is Orientation.LEFT:
        funnel = Funnel(pt, b, S_REF, a, meter=meter)
    else:
        funnel = Funnel(pt, a, S_REF, b, meter=meter)

    out_refs: List[int] = []
    steps = [(u, v) for u, v in diagonals[1:]]
    steps.append((diagonals[-1][0], T_REF))
    for u, v in steps:
        f = funnel.deque
        if u == f[0] or v == f[0]:
            new = v if u == f[0] else u
            out_refs.extend(funnel.step(new, RIGHT))
        elif u == f[-1] or v == f[-1]:
            new = v if u == f[-1] else u
            out_refs.extend(funnel.step(new, LEFT))
        else:
            raise PolygonError("funnel lost track of the diagonal sequence")

    f = funnel.deque
    if f[0] == T_REF:
        while f[-1] != funnel.cusp:
            f.pop()
        while len(f):
            out_refs.append(f.pop())
    elif f[-1] == T_REF:
        while f[0] != funnel.cusp:
            f.popleft()
        while len(f):
            out_refs.append(f.popleft())
    else:
        out_refs.append(funnel.cusp)
        out_refs.append(T_REF)

    lp_shortest_path.stats = {
        "pushes": funnel.pushes,
        "pops": funnel.pops,
        "diagonals": len(diagonals),
    }
    if meter is not None:
        # Remaining container words (already drained funnel) and registers.
        meter.release(2 * len(diagonals))
        meter.release(8)
    path = [pt(r) for r in out_refs]
    return path
