"""Workspace accounting: peak mutable words of algorithm-local state.

The meter counts machine words of the algorithm's own mutable state
(scalars, indices, point registers, growable container contents) at the
charge/release points the algorithms declare.  It models the scalar
reference semantics of each algorithm: a vectorized kernel evaluating a
boundary scan still accounts for the scan's fixed register set, not for
library-internal temporaries.  The read-only input and the write-only
output path are never counted.
"""
from __future__ import annotations

import time
from collections import deque
from typing import Callable, Dict, List, Optional, Tuple

from .geom import Point
from .polygon import PathQuery, Polygon

WORDS_SCALAR = 1
WORDS_REF = 1
WORDS_POINT = 2


class WorkspaceMeter:
    """Monotone peak counter over explicit charge/release events."""

    __slots__ = ("current", "peak")

    def __init__(self):
        self.current = 0
        self.peak = 0

    def charge(self, words: int) -> None:
        self.current += words
        if self.current > self.peak:
            self.peak = self.current

    def release(self, words: int) -> None:
        self.current -= words
        if self.current < 0:
            raise RuntimeError("workspace meter released more than charged")


class MeteredDeque:
    """Deque whose contents are charged to the meter, with push/pop counters."""

    __slots__ = ("_d", "_meter", "_words", "pushes", "pops")

    def __init__(self, meter: Optional[WorkspaceMeter], words_per_item: int = 1):
        self._d = deque()
        self._meter = meter
        self._words = words_per_item
        self.pushes = 0
        self.pops = 0

    def __len__(self):
        return len(self._d)

    def __getitem__(self, i):
        return self._d[i]

    def append(self, item):
        self.pushes += 1
        if self._meter is not None:
            self._meter.charge(self._words)
        self._d.append(item)

    def appendleft(self, item):
        self.pushes += 1
        if self._meter is not None:
            self._meter.charge(self._words)
        self._d.appendleft(item)

    def pop(self):
        self.pops += 1
        if self._meter is not None:
            self._meter.release(self._words)
        return self._d.pop()

    def popleft(self):
        self.pops += 1
        if self._meter is not None:
            self._meter.release(self._words)
        return self._d.popleft()

    def __iter__(self):
        return iter(self._d)


ALGORITHM_IDS = ("lee_preparata", "delaunay", "trapezoid", "makestep")


def run_algorithm(algorithm: str, p: Polygon, q: PathQuery,
                  triangulation=None, meter: Optional[WorkspaceMeter] = None) -> List[Point]:
    """Dispatch one shortest-path run.  For lee_preparata the triangulation
    must be precomputed; it is not part of the measured work."""
    if algorithm == "lee_preparata":
        from .lee_preparata import lp_shortest_path
        from .triangulate import triangulate_ear_clipping
        tr = triangulation if triangulation is not None else triangulate_ear_clipping(p)
        return lp_shortest_path(p, tr, q, meter=meter)
    if algorithm == "delaunay":
        from .delaunay_cw import delaunay_shortest_path
        return delaunay_shortest_path(p, q, meter=meter)
    if algorithm == "trapezoid":
        from .trapezoid_cw import trapezoid_shortest_path
        return trapezoid_shortest_path(p, q, meter=meter)
    if algorithm == "makestep":
        from .makestep_cw import makestep_shortest_path
        return makestep_shortest_path(p, q, meter=meter)
    raise ValueError(f"unknown algorithm {algorithm!r}")


def metered_run(algorithm: str, p: Polygon, q: PathQuery,
                triangulation=None) -> Tuple[List[Point], int, float]:
    """One metered invocation: (path, peak workspace words, processor time)."""
    meter = WorkspaceMeter()
    t0 = time.process_time()
    path = run_algorithm(algorithm, p, q, triangulation=triangulation, meter=meter)
    elapsed = time.process_time() - t0
    return path, meter.peak, elapsed
