"""Numba lane of the hot boundary-scan kernels.

Scalar loops jitted with @njit(cache=True); semantics mirror `_numpy`
exactly.  These are the inner O(n) and O(n^2) scans that dominate the
running time of the path algorithms.
"""
from __future__ import annotations

import math

import numpy as np
from numba import njit

BACKEND_NAME = "numba"

_JIT = dict(cache=True, fastmath=False, nogil=True)


@njit(**_JIT)
def _cross(ox, oy, ax, ay, bx, by):
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


@njit(**_JIT)
def seg_crossings(xs, ys, ax, ay, bx, by, s0=-1, s1=-1, s2=-1, s3=-1):
    n = len(xs)
    cnt = 0
    for e in range(n):
        if e == s0 or e == s1 or e == s2 or e == s3:
            continue
        cx = xs[e]
        cy = ys[e]
        j = e + 1
        if j == n:
            j = 0
        dx_ = xs[j]
        dy_ = ys[j]
        o1 = _cross(ax, ay, bx, by, cx, cy)
        o2 = _cross(ax, ay, bx, by, dx_, dy_)
        o3 = _cross(cx, cy, dx_, dy_, ax, ay)
        o4 = _cross(cx, cy, dx_, dy_, bx, by)
        if ((o1 > 0.0) != (o2 > 0.0)) and ((o3 > 0.0) != (o4 > 0.0)) \
                and o1 != 0.0 and o2 != 0.0 and o3 != 0.0 and o4 != 0.0:
            cnt += 1
    return cnt


@njit(**_JIT)
def ray_first_hit(xs, ys, ox, oy, tx, ty, tmin, s0=-1, s1=-1, s2=-1, s3=-1):
    n = len(xs)
    rx = tx - ox
    ry = ty - oy
    best = -1
    bt = math.inf
    bu = math.nan
    for e in range(n):
        if e == s0 or e == s1 or e == s2 or e == s3:
            continue
        cx = xs[e]
        cy = ys[e]
        j = e + 1
        if j == n:
            j = 0
        sx = xs[j] - cx
        sy = ys[j] - cy
        denom = rx * sy - ry * sx
        if denom == 0.0:
            continue
        qpx = cx - ox
        qpy = cy - oy
        t = (qpx * sy - qpy * sx) / denom
        u = (qpx * ry - qpy * rx) / denom
        if t > tmin and 0.0 < u < 1.0 and t < bt:
            best = e
            bt = t
            bu = u
    if best < 0:
        return -1, math.nan, math.nan, math.nan, math.nan
    return best, bt, bu, ox + bt * rx, oy + bt * ry


@njit(**_JIT)
def _wedge_ok(xs, ys, i, dx, dy):
    n = len(xs)
    ip = i - 1
    if ip < 0:
        ip = n - 1
    iq = i + 1
    if iq == n:
        iq = 0
    ax = xs[iq] - xs[i]
    ay = ys[iq] - ys[i]
    bx = xs[ip] - xs[i]
    by = ys[ip] - ys[i]
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


@njit(**_JIT)
def _segment_inside(xs, ys, i, j):
    n = len(xs)
    d = (j - i) % n
    if d == 1 or d == n - 1:
        return True
    dxi = xs[j] - xs[i]
    dyi = ys[j] - ys[i]
    if not _wedge_ok(xs, ys, i, dxi, dyi):
        return False
    if not _wedge_ok(xs, ys, j, -dxi, -dyi):
        return False
    return seg_crossings(xs, ys, xs[i], ys[i], xs[j], ys[j]) == 0


@njit(**_JIT)
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


@njit(**_JIT)
def _tv_valid(xs, ys, u, v, w):
    if w == u or w == v:
        return False
    if _cross(xs[u], ys[u], xs[v], ys[v], xs[w], ys[w]) <= 0.0:
        return False
    return _segment_inside(xs, ys, u, w) and _segment_inside(xs, ys, w, v)


@njit(**_JIT)
def third_vertex(xs, ys, u, v):
    n = len(xs)
    ux = xs[u]
    uy = ys[u]
    vx = xs[v]
    vy = ys[v]
    best = -1
    for w in range(n):
        if not _tv_valid(xs, ys, u, v, w):
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
        if _incircle(ux, uy, vx, vy, xs[best], ys[best], xs[w], ys[w]) == 0.0 \
                and _tv_valid(xs, ys, u, v, w):
            return best, 2
    return best, 0


@njit(**_JIT)
def _hseg(x1, y1, x2, y2, qx, qy):
    if (y1 > qy) != (y2 > qy):
        xint = x1 + (x2 - x1) * (qy - y1) / (y2 - y1)
        if xint > qx:
            return 1
    return 0


@njit(**_JIT)
def split_part_contains(xs, ys, eA, tA, pax, pay, eB, tB, pbx, pby, qx, qy):
    n = len(xs)
    cnt = 0
    if eA == eB and tB >= tA:
        cnt += _hseg(pax, pay, pbx, pby, qx, qy)
    else:
        walk = (eB - eA) % n
        j = eA + 1
        if j == n:
            j = 0
        cnt += _hseg(pax, pay, xs[j], ys[j], qx, qy)
        for k in range(1, walk):
            e = eA + k
            if e >= n:
                e -= n
            j = e + 1
            if j == n:
                j = 0
            cnt += _hseg(xs[e], ys[e], xs[j], ys[j], qx, qy)
        cnt += _hseg(xs[eB], ys[eB], pbx, pby, qx, qy)
    cnt += _hseg(pbx, pby, pax, pay, qx, qy)
    return cnt % 2 == 1


@njit(**_JIT)
def _edge_y_at(xs, ys, e, x):
    n = len(xs)
    j = e + 1
    if j == n:
        j = 0
    x1 = xs[e]
    y1 = ys[e]
    x2 = xs[j]
    y2 = ys[j]
    if x == x1:
        return y1
    if x == x2:
        return y2
    return y1 + (y2 - y1) * (x - x1) / (x2 - x1)


@njit(**_JIT)
def trapezoid_locate(xs, ys, qx, qy):
    n = len(xs)
    top_e = -1
    bot_e = -1
    top_y = math.inf
    bot_y = -math.inf
    for e in range(n):
        j = e + 1
        if j == n:
            j = 0
        x1 = xs[e]
        x2 = xs[j]
        if (x1 - qx) * (x2 - qx) < 0.0:
            ye = ys[e] + (ys[j] - ys[e]) * (qx - x1) / (x2 - x1)
            if ye > qy:
                if ye < top_y:
                    top_y = ye
                    top_e = e
            elif ye < qy:
                if ye > bot_y:
                    bot_y = ye
                    bot_e = e
    if top_e < 0 or bot_e < 0:
        return -1, -1, math.nan, math.nan, -1, -1

    jt = top_e + 1
    if jt == n:
        jt = 0
    jb = bot_e + 1
    if jb == n:
        jb = 0
    lt = top_e if xs[top_e] < xs[jt] else jt
    rt = jt if xs[top_e] < xs[jt] else top_e
    lb = bot_e if xs[bot_e] < xs[jb] else jb
    rb = jb if xs[bot_e] < xs[jb] else bot_e
    lv = lt if xs[lt] > xs[lb] else lb
    lx = xs[lv]
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
    return top_e, bot_e, lx, rx, lv, rv


@njit(**_JIT)
def wall_bracket(xs, ys, wx, my, from_left):
    n = len(xs)
    upper_e = -1
    lower_e = -1
    upper_y = math.inf
    lower_y = -math.inf
    below = 0
    for e in range(n):
        j = e + 1
        if j == n:
            j = 0
        x1 = xs[e]
        x2 = xs[j]
        lo = x1 if x1 < x2 else x2
        hi = x2 if x1 < x2 else x1
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


@njit(**_JIT)
def nearest_x_below(xs, wx):
    best = -1
    bx = -math.inf
    for i in range(len(xs)):
        if wx > xs[i] > bx:
            bx = xs[i]
            best = i
    return best


@njit(**_JIT)
def nearest_x_above(xs, wx):
    best = -1
    bx = math.inf
    for i in range(len(xs)):
        if wx < xs[i] < bx:
            bx = xs[i]
            best = i
    return best


@njit(**_JIT)
def find_crossing_pair(xs, ys):
    n = len(xs)
    for i in range(n - 2):
        j1 = n - 1 if i == 0 else n
        ix = xs[i]
        iy = ys[i]
        i2 = i + 1
        jx = xs[i2]
        jy = ys[i2]
        for j in range(i + 2, j1):
            k = j + 1
            if k == n:
                k = 0
            o1 = _cross(ix, iy, jx, jy, xs[j], ys[j])
            o2 = _cross(ix, iy, jx, jy, xs[k], ys[k])
            o3 = _cross(xs[j], ys[j], xs[k], ys[k], ix, iy)
            o4 = _cross(xs[j], ys[j], xs[k], ys[k], jx, jy)
            if ((o1 > 0.0) != (o2 > 0.0)) and ((o3 > 0.0) != (o4 > 0.0)) \
                    and o1 != 0.0 and o2 != 0.0 and o3 != 0.0 and o4 != 0.0:
                return i, j
    return -1, -1


def warmup():
    """Compile every kernel on a tiny triangle so timed runs never pay JIT."""
    xs = np.array([0.0, 2.0, 1.0])
    ys = np.array([0.0, 0.25, 2.0])
    xs.flags.writeable = False
    ys.flags.writeable = False
    seg_crossings(xs, ys, 0.5, 0.5, 1.0, 1.0)
    ray_first_hit(xs, ys, 0.9, 0.5, 1.0, 0.6, 0.0)
    third_vertex(xs, ys, 0, 1)
    split_part_contains(xs, ys, 0, 0.0, 0.0, 0.0, 1, 0.0, 2.0, 0.25, 0.9, 0.5)
    trapezoid_locate(xs, ys, 0.9, 0.5)
    wall_bracket(xs, ys, 1.0, 0.5, True)
    nearest_x_below(xs, 1.0)
    nearest_x_above(xs, 1.0)
    find_crossing_pair(xs, ys)
