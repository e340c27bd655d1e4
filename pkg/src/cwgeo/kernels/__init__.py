"""Hot-kernel backend selection.

The environment flag GEODESIC_KERNELS chooses the lane:

    GEODESIC_KERNELS=numba   jitted scalar loops (default when numba imports)
    GEODESIC_KERNELS=numpy   pure-numpy vectorized fallback

Both lanes export the same functions with identical semantics.
"""
from __future__ import annotations

import os

_ENV = "GEODESIC_KERNELS"


def _select():
    choice = os.environ.get(_ENV, "").strip().lower()
    if choice == "numpy":
        from . import _numpy as lane
        return lane
    if choice == "numba":
        from . import _numba as lane
        return lane
    if choice:
        raise ValueError(f"{_ENV} must be 'numba' or 'numpy', got {choice!r}")
    try:
        from . import _numba as lane
    except ImportError:
        from . import _numpy as lane
    return lane


_lane = _select()

BACKEND_NAME = _lane.BACKEND_NAME
seg_crossings = _lane.seg_crossings
ray_first_hit = _lane.ray_first_hit
third_vertex = _lane.third_vertex
split_part_contains = _lane.split_part_contains
trapezoid_locate = _lane.trapezoid_locate
wall_bracket = _lane.wall_bracket
nearest_x_below = _lane.nearest_x_below
nearest_x_above = _lane.nearest_x_above
find_crossing_pair = _lane.find_crossing_pair
warmup = _lane.warmup
