"""Fully asynchronous dynamics: the transition graph on {0,1}^n and queries over it.

Traversals run on the implicit successor function, so distance queries on
large hosts never need the full adjacency structure in memory.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .netcore import BooleanNetwork, Configuration, SizeError, as_configuration

ASYNC_GRAPH_CAP = 20
DIAMETER_CAP = 14


class Unreachable(enum.Enum):
    UNREACHABLE = "unreachable"

    def __repr__(self):
        return "UNREACHABLE"

    def __str__(self):
        return "unreachable"


UNREACHABLE = Unreachable.UNREACHABLE
Distance = Union[int, Unreachable]


def unstable_masks(f: BooleanNetwork) -> list[int]:
    # bit i of delta[x] is set iff component i+1 is unstable at x
    return (f.image ^ np.arange(1 << f.n)).tolist()


def _succ_ints(x: int, d: int) -> list[int]:
    out = []
    while d:
        low = d & -d
        out.append(x ^ low)
        d ^= low
    return out


@dataclass(frozen=True)
class AsyncGraph:
    """Materialized asynchronous graph; ``adjacency[x]`` lists successors of state ``x``."""

    n: int
    network: BooleanNetwork
    adjacency: tuple[tuple[int, ...], ...]

    def transitions(self) -> list[tuple[int, int]]:
        """All ``(x, y)`` pairs ordered by source state then flipped component."""
        return [(x, y) for x, ys in enumerate(self.adjacency) for y in ys]

    def out_degree(self, x: int) -> int:
        return len(self.adjacency[x])


def async_graph(f: BooleanNetwork, cap: int = ASYNC_GRAPH_CAP) -> AsyncGraph:
    if f.n > cap:
        raise SizeError(f"refusing to materialize 2**{f.n} states (cap n <= {cap}); use successors()")
    delta = unstable_masks(f)
    adjacency = tuple(tuple(_succ_ints(x, d)) for x, d in enumerate(delta))
    return AsyncGraph(f.n, f, adjacency)


def successors(f: BooleanNetwork, x: Configuration) -> set[Configuration]:
    x = as_configuration(f.n, x)
    d = int(f.image[x.bits]) ^ x.bits
    return {Configuration(f.n, y) for y in _succ_ints(x.bits, d)}


def transition_component(x: Configuration, y: Configuration) -> int:
    """The 1-based component in which ``x`` and ``y`` differ (they must differ in exactly one)."""
    d = x.bits ^ y.bits
    if d == 0 or d & (d - 1):
        raise ValueError(f"{x} and {y} do not differ in exactly one component")
    return d.bit_length()


def bfs_distances(f: BooleanNetwork, source: int, delta: list[int] | None = None) -> dict[int, int]:
    """Shortest path lengths from integer state ``source`` to every reachable state."""
    if delta is None:
        delta = unstable_masks(f)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        d = delta[x]
        while d:
            low = d & -d
            y = x ^ low
            d ^= low
            if y not in dist:
                dist[y] = dx
                queue.append(y)
    return dist


def distance(f: BooleanNetwork, x: Configuration, y: Configuration) -> Distance:
    x = as_configuration(f.n, x)
    y = as_configuration(f.n, y)
    if x == y:
        return 0
    delta = unstable_masks(f)
    dist = {x.bits: 0}
    queue = deque([x.bits])
    while queue:
        u = queue.popleft()
        d = delta[u]
        while d:
            low = d & -d
            v = u ^ low
            d ^= low
            if v not in dist:
                if v == y.bits:
                    return dist[u] + 1
                dist[v] = dist[u] + 1
                queue.append(v)
    return UNREACHABLE


def diameter(f: BooleanNetwork, cap: int = DIAMETER_CAP) -> int:
    """Largest finite distance over all ordered pairs (0 when there are no transitions)."""
    if f.n > cap:
        raise SizeError(f"all-pairs BFS over 2**{f.n} states exceeds the cap n <= {cap}")
    delta = unstable_masks(f)
    best = 0
    for x in range(1 << f.n):
        if delta[x]:
            best = max(best, max(bfs_distances(f, x, delta).values()))
    return best


def fixed_points(f: BooleanNetwork) -> list[Configuration]:
    """Fixed points in increasing integer order."""
    idx = np.flatnonzero(f.image == np.arange(1 << f.n))
    return [Configuration(f.n, int(b)) for b in idx]


def has_geodesic(f: BooleanNetwork, x: Configuration, y: Configuration) -> bool:
    x = as_configuration(f.n, x)
    y = as_configuration(f.n, y)
    d = distance(f, x, y)
    return d is not UNREACHABLE and d == x.hamming(y)


def geodesic_basin(f: BooleanNetwork, y: Configuration) -> np.ndarray:
    """Boolean mask of the states having a geodesic to ``y``.

    A path is a geodesic exactly when every step moves one component onto its
    value in ``y``, so the basin is the backward closure of ``y`` under such
    steps. Runs in O(n 2^n) without computing distances.
    """
    y = as_configuration(f.n, y)
    delta = unstable_masks(f)
    n = f.n
    basin = np.zeros(1 << n, dtype=bool)
    basin[y.bits] = True
    stack = [y.bits]
    while stack:
        w = stack.pop()
        agree = ~(w ^ y.bits) & ((1 << n) - 1)
        while agree:
            low = agree & -agree
            agree ^= low
            z = w ^ low
            # z differs from y at this component and updating it lands on w
            if delta[z] & low and not basin[z]:
                basin[z] = True
                stack.append(z)
    return basin


def geodesic_fixed_point(f: BooleanNetwork, x: Configuration) -> Configuration | None:
    """Smallest fixed point reachable from ``x`` by a geodesic, or ``None``."""
    x = as_configuration(f.n, x)
    fps = fixed_points(f)
    if not fps:
        return None
    dist = bfs_distances(f, x.bits)
    for y in fps:
        if dist.get(y.bits) == x.hamming(y):
            return y
    return None


def simulate(f: BooleanNetwork, x0: Configuration, schedule: Sequence[int]) -> list[Configuration]:
    """Trajectory under a finite asynchronous schedule of 1-based component indices."""
    x0 = as_configuration(f.n, x0)
    traj = [x0]
    x = x0.bits
    for t, i in enumerate(schedule):
        if not 1 <= i <= f.n:
            raise ValueError(f"schedule entry {i} at step {t} is outside 1..{f.n}")
        bit = 1 << (i - 1)
        x = (x & ~bit) | (int(f.image[x]) & bit)
        traj.append(Configuration(f.n, x))
    return traj


def has_two_cycle(f: BooleanNetwork) -> bool:
    delta = np.asarray(unstable_masks(f))
    states = np.arange(1 << f.n)
    for i in range(f.n):
        bit = 1 << i
        lower = states[(states & bit) == 0]
        if ((delta[lower] & bit) & (delta[lower | bit] & bit)).any():
            return True
    return False


def find_cycle(f: BooleanNetwork) -> list[int] | None:
    """A directed cycle of the asynchronous graph as a list of integer states, or ``None``."""
    delta = unstable_masks(f)
    color = [0] * (1 << f.n)  # 0 new, 1 on stack, 2 done
    for root in range(1 << f.n):
        if color[root]:
            continue
        color[root] = 1
        path = [root]
        iters = [iter(_succ_ints(root, delta[root]))]
        while iters:
            nxt = next(iters[-1], None)
            if nxt is None:
                color[path.pop()] = 2
                iters.pop()
            elif color[nxt] == 1:
                return path[path.index(nxt):]
            elif color[nxt] == 0:
                color[nxt] = 1
                path.append(nxt)
                iters.append(iter(_succ_ints(nxt, delta[nxt])))
    return None

