"""Pure-numpy lane of the hot boundary-scan kernels.

Every function here has a twin in `_numba` with identical semantics; the
tests compare the two lanes on random inputs.  All kernels read only the
two coordinate arrays plus scalars and return scalars or small tuples, so
they model constant-workspace boundary scans.
"""
from __future__ import annotations

import math

import numpy as np

BACKEND_NAME = "numpy"


def _cross(ox, oy, ax, ay, bx, by):
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


def seg_crossings(xs, ys, ax, ay, bx, by, s0=-1, s1=-1, s2=-1, s3=-1):
    """Number of polygon edges properly crossing the open segment ab."""
    n = len(xs)
    cx, cy = xs, ys
    dx_, dy_ = np.roll(xs, -1), np.roll(ys, -1)
    o1 = _cross(ax, ay, bx, by, cx, cy)
    o2 = _cross(ax, ay, bx, by, dx_, dy_)
    o3 = _cross(cx, cy, dx_, dy_, ax, ay)
    o4 = _cross(cx, cy, dx_, dy_, bx, by)
    proper = ((o1 > 0) != (o2 > 0)) & ((o3 > 0) != (o4 > 0)) \
        & (o1 != 0) & (o2 != 0) & (o3 != 0) & (o4 != 0)
    for s in (s0, s1, s2, s3):
        if s >= 0:
            proper[s] = False
    return int(np.count_nonzero(proper))


def ray_first_hit(xs, ys, ox, oy, tx, ty, tmin, s0=-1, s1=-1, s2=-1, s3=-1):
    """First proper hit of the ray origin->(tx,ty) against edge interiors.

    The through point has ray parameter 1.  Only hits with parameter
    strictly above tmin and edge parameter strictly inside (0, 1) count.
    Returns (edge, t, u, hx, hy); edge is -1 when there is no hit.
    """
    n = len(xs)
    rx, ry = tx - ox, ty - oy
    cx, cy = xs, ys
    sx = np.roll(xs, -1) - cx
    sy = np.roll(ys, -1) - cy
    denom = rx * sy - ry * sx
    qpx = cx - ox
    qpy = cy - oy
    with np.errstate(divide="ignore", invalid="ignore"):
        t = (qpx * sy - qpy * sx) / denom
        u = (qpx * ry - qpy * rx) / denom
    ok = (denom != 0) & (t > tmin) & (u > 0.0) & (u < 1.0)
    for s in (s0, s1, s2, s3):
        if s >= 0:
            ok[s] = False
    if not np.any(ok):
        return -1, math.nan, math.nan, math.nan, math.nan
    idx = np.nonzero(ok)[0]
    best = idx[np.argmin(t[idx])]
    tb = float(t[best])
    return int(best), tb, float(u[best]), ox + tb * rx, oy + tb * ry


def _wedge_ok(xs, ys, i, dx, dy):
    n = len(xs)
    ax = xs[(i + 1) % n] - xs[i]
    ay = ys[(i + 1) % n] - ys[i]
    bx = xs[(i - 1) % n] - xs[i]
    by = ys[(i - 1) % n] - ys[i]
    s = ax * by - ay * bx
    cad = ax * dy - ay * dx
    cdb = dx * by - dy * bx
    if s > 0.0:
        return cad > 0.0 and cdb > 0.0
    if s < 0.0:
        return cad > 0.0 or cdb > 0.0
    if ax * bx + ay * by < 0.0:
        return cad > 0.0
    return False


def _segment_inside(xs, ys, i, j):
    n = len(xs)
    if (j - i) % n == 1 or (i - j) % n == 1:
        return True
    dxi = xs[j] - xs[i]
    dyi = ys[j] - ys[i]
    if not _wedge_ok(xs, ys, i, dxi, dyi):
        return False
    if not _wedge_ok(xs, ys, j, -dxi, -dyi):
        return False
    return seg_crossings(xs, ys, xs[i], ys[i], xs[j], ys[j]) == 0


def _incircle(ax, ay, bx, by, cx, cy, dx_, dy_):
    adx = ax - dx_
    ady = ay - dy_
    bdx = bx - dx_
    bdy = by - dy_
    cdx = cx - dx_
    cdy = cy - dy_
    return ((adx * adx + ady * ady) * (bdx * cdy - cdx * bdy)
            + (bdx * bdx + bdy * bdy) * (cdx * ady - adx * cdy)
            + (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady))


def third_vertex(xs, ys, u, v):
    """Constrained-Delaunay third vertex strictly left of directed edge u->v.

    Returns (w, flag) with flag 0 = ok, 1 = no candidate, 2 = cocircular tie.
    Vertices collinear with uv are ignored.  O(n^2).
    """
    n = len(xs)
    ux, uy, vx, vy = xs[u], ys[u], xs[v], ys[v]

    def valid(w):
        if w == u or w == v:
            return False
        if _cross(ux, uy, vx, vy, xs[w], ys[w]) <= 0.0:
            return False
        return _segment_inside(xs, ys, u, w) and _segment_inside(xs, ys, w, v)

    best = -1
    for w in range(n):
        if not valid(w):
            continue
        if best < 0 or _incircle(ux, uy, vx, vy, xs[best], ys[best], xs[w], ys[w]) > 0.0:
            best = w
    if best < 0:
        return -1, 1
    for w in range(n):
        if w == best or w == u or w == v:
            continue
        if _cross(ux, uy, vx, vy, xs[w], ys[w]) <= 0.0:
            continue
        if _incircle(ux, uy, vx, vy, xs[best], ys[best], xs[w], ys[w]) == 0.0 and valid(w):
            return best, 2
    return best, 0


def split_part_contains(xs, ys, eA, tA, pax, pay, eB, tB, pbx, pby, qx, qy):
    """Point-in-subpolygon test for the part bounded by the boundary chain
    from hit A counterclockwise to hit B plus the closing chord B->A.

    Hits are (edge index, edge parameter, exact coordinates); a vertex hit
    is passed as (its outgoing edge, 0.0).  Horizontal-ray parity count.
    """
    n = len(xs)
    cnt = 0

    def hseg(x1, y1, x2, y2):
        if (y1 > qy) != (y2 > qy):
            xint = x1 + (x2 - x1) * (qy - y1) / (y2 - y1)
            return 1 if xint > qx else 0
        return 0

    if eA == eB and tB >= tA:
        cnt += hseg(pax, pay, pbx, pby)
    else:
        walk = (eB - eA) % n
        cnt += hseg(pax, pay, xs[(eA + 1) % n], ys[(eA + 1) % n])
        for k in range(1, walk):
            e = (eA + k) % n
            cnt += hseg(xs[e], ys[e], xs[(e + 1) % n], ys[(e + 1) % n])
        cnt += hseg(xs[eB], ys[eB], pbx, pby)
    cnt += hseg(pbx, pby, pax, pay)
    return cnt % 2 == 1


def _edge_y_at(xs, ys, e, x):
    n = len(xs)
    x1, y1 = xs[e], ys[e]
    x2, y2 = xs[(e + 1) % n], ys[(e + 1) % n]
    if x == x1:
        return y1
    if x == x2:
        return y2
    return y1 + (y2 - y1) * (x - x1) / (x2 - x1)


def trapezoid_locate(xs, ys, qx, qy):
    """Locate the vertical trapezoid containing an interior point.

    Requires pairwise distinct vertex x-coordinates and qx not equal to any
    vertex x.  Returns (top_edge, bot_edge, left_x, right_x, left_v, right_v);
    top_edge is -1 when no edge lies above q (q outside).  O(n).
    """
    n = len(xs)
    nx_, ny_ = np.roll(xs, -1), np.roll(ys, -1)
    span = (xs - qx) * (nx_ - qx) < 0.0
    with np.errstate(divide="ignore", invalid="ignore"):
        ye = ys + (ny_ - ys) * (qx - xs) / (nx_ - xs)
    above = span & (ye > qy)
    below = span & (ye < qy)
    if not np.any(above) or not np.any(below):
        return -1, -1, math.nan, math.nan, -1, -1
    ia = np.nonzero(above)[0]
    top_e = int(ia[np.argmin(ye[ia])])
    ib = np.nonzero(below)[0]
    bot_e = int(ib[np.argmax(ye[ib])])

    def left_end(e):
        j = (e + 1) % n
        return e if xs[e] < xs[j] else j

    def right_end(e):
        j = (e + 1) % n
        return j if xs[e] < xs[j] else e

    lt, lb = left_end(top_e), left_end(bot_e)
    lv = lt if xs[lt] > xs[lb] else lb
    lx = xs[lv]
    rt, rb = right_end(top_e), right_end(bot_e)
    rv = rt if xs[rt] < xs[rb] else rb
    rx = xs[rv]
    for w in range(n):
        xw = xs[w]
        if lx < xw < qx:
            if _edge_y_at(xs, ys, bot_e, xw) < ys[w] < _edge_y_at(xs, ys, top_e, xw):
                lx = xw
                lv = w
        elif qx < xw < rx:
            if _edge_y_at(xs, ys, bot_e, xw) < ys[w] < _edge_y_at(xs, ys, top_e, xw):
                rx = xw
                rv = w
    return top_e, bot_e, float(lx), float(rx), int(lv), int(rv)


def wall_bracket(xs, ys, wx, my, from_left):
    """Edges immediately above/below height my on the vertical line x = wx,
    counted on the half-open side given by from_left.

    Returns (upper_edge, lower_edge, count_below).
    """
    n = len(xs)
    upper_e = -1
    lower_e = -1
    upper_y = math.inf
    lower_y = -math.inf
    below = 0
    for e in range(n):
        x1, x2 = xs[e], xs[(e + 1) % n]
        lo, hi = (x1, x2) if x1 < x2 else (x2, x1)
        if from_left:
            if not (lo < wx <= hi):
                continue
        else:
            if not (lo <= wx < hi):
                continue
        yv = _edge_y_at(xs, ys, e, wx)
        if yv > my:
            if yv < upper_y:
                upper_y = yv
                upper_e = e
        elif yv < my:
            below += 1
            if yv > lower_y:
                lower_y = yv
                lower_e = e
    return upper_e, lower_e, below


def nearest_x_below(xs, wx):
    mask = xs < wx
    if not np.any(mask):
        return -1
    idx = np.nonzero(mask)[0]
    return int(idx[np.argmax(xs[idx])])


def nearest_x_above(xs, wx):
    mask = xs > wx
    if not np.any(mask):
        return -1
    idx = np.nonzero(mask)[0]
    return int(idx[np.argmin(xs[idx])])


def find_crossing_pair(xs, ys):
    """Lexicographically first pair of non-adjacent edges that properly
    cross, or (-1, -1).  O(n^2)."""
    n = len(xs)
    nx_, ny_ = np.roll(xs, -1), np.roll(ys, -1)
    for i in range(n - 2):
        j0 = i + 2
        j1 = n - 1 if i == 0 else n
        js = np.arange(j0, j1)
        if len(js) == 0:
            continue
        o1 = _cross(xs[i], ys[i], nx_[i], ny_[i], xs[js], ys[js])
        o2 = _cross(xs[i], ys[i], nx_[i], ny_[i], nx_[js], ny_[js])
        o3 = _cross(xs[js], ys[js], nx_[js], ny_[js], xs[i], ys[i])
        o4 = _cross(xs[js], ys[js], nx_[js], ny_[js], nx_[i], ny_[i])
        proper = ((o1 > 0) != (o2 > 0)) & ((o3 > 0) != (o4 > 0)) \
            & (o1 != 0) & (o2 != 0) & (o3 != 0) & (o4 != 0)
        hit = np.nonzero(proper)[0]
        if len(hit):
            return i, int(js[hit[0]])
    return -1, -1


def warmup():
    pass
