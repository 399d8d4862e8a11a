"""
Vertex Cover -> Line Point Cover -> Point Line Cover.

Phase one doubles the graph so that the parameter doubles exactly. Phase two
places the doubled graph's vertices on a special grid point set (general
position, no parallel pair-lines, no three pair-lines concurrent outside the
set, distinct x-coordinates) and turns every edge into the line through its
endpoints.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional, Sequence

import numpy as np

from config import DEFAULT_SEED, SPECIAL_POINT_MAX_TRIALS, VC_BRUTE_FORCE_MAX_VERTICES, VERIFY_MAX_POINTS
from duality import LpcInstance, SlopeLine, dualize_lpc
from errors import CapExceededError, ConstructionError, InvalidInstanceError
from geometry import Orientation, Point, intersect, line_through, orientation
from plc import PlcInstance

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Graph:
    """Simple undirected loopless graph on vertices ``0 .. n-1``."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 0:
            raise InvalidInstanceError(f"vertex count must be non-negative, got {self.n}")
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise InvalidInstanceError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidInstanceError(f"edge ({u}, {v}) outside vertex range 0..{self.n - 1}")
            normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, frozenset(edges))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(b if a == v else a for a, b in self.edges if v in (a, b))


@dataclass(frozen=True)
class VcInstance:
    graph: Graph
    k: int

    def __post_init__(self):
        if not 0 <= self.k <= self.graph.n:
            raise InvalidInstanceError(f"k must lie in 0..{self.graph.n}, got {self.k}")


@dataclass(frozen=True)
class LpcReduction:
    """Every intermediate of one Vertex Cover -> Line Point Cover run."""

    source: VcInstance
    doubled: Graph
    points: tuple[Point, ...]
    instance: LpcInstance
    seed: int


def double_graph(graph: Graph) -> Graph:
    """Two copies of the graph plus both cross edges per original edge; v1 is ``v + n``."""
    n = graph.n
    edges = set()
    for u, v in graph.edges:
        for i in (0, n):
            for j in (0, n):
                edges.add((u + i, v + j))
    return Graph.from_edges(2 * n, edges)


def vc_brute_force(inst: VcInstance) -> bool:
    """True iff some set of at most k vertices touches every edge."""
    n = inst.graph.n
    if n > VC_BRUTE_FORCE_MAX_VERTICES:
        raise CapExceededError(f"vertex cover brute force is capped at {VC_BRUTE_FORCE_MAX_VERTICES} vertices, got {n}")
    edge_masks = [(1 << u) | (1 << v) for u, v in inst.graph.edges]
    for size in range(inst.k + 1):
        for chosen in combinations(range(n), size):
            cover = sum(1 << v for v in chosen)
            if all(cover & e for e in edge_masks):
                return True
    return False


# ---------------------------------------------------------------------------
# Special point sets
# ---------------------------------------------------------------------------

def _direction(line) -> tuple[int, int]:
    g = math.gcd(line.a, line.b)
    return line.a // g, line.b // g


def _first_violation(points: Sequence[Point]) -> Optional[str]:
    """Name of the first special-position property ``points`` breaks, or None."""
    if len({p.x for p in points}) != len(points):
        return "two points share an x-coordinate"
    for p, q, r in combinations(points, 3):
        if orientation(p, q, r) == Orientation.COLLINEAR:
            return f"points {p}, {q}, {r} are collinear"
    lines = [line_through(p, q) for p, q in combinations(points, 2)]
    directions = set()
    for line in lines:
        direction = _direction(line)
        if direction in directions:
            return f"pair-line {line} is parallel to another pair-line"
        directions.add(direction)
    members = set(points)
    crossings: set[Point] = set()
    for l1, l2 in combinations(lines, 2):
        crossing = intersect(l1, l2)
        if crossing is None or crossing in members:
            continue
        if crossing in crossings:
            return f"three pair-lines meet at {crossing} outside the set"
        crossings.add(crossing)
    return None


def verify_special_properties(points: Sequence[Point]) -> bool:
    """Exhaustively check the special-position properties (at most VERIFY_MAX_POINTS points)."""
    if len(points) > VERIFY_MAX_POINTS:
        raise CapExceededError(f"special-position verification is capped at {VERIFY_MAX_POINTS} points, got {len(points)}")
    violation = _first_violation(points)
    if violation:
        logger.debug(f"Special-position check failed: {violation}")
    return violation is None


@lru_cache(maxsize=64)
def special_point_set(m: int, seed: int = DEFAULT_SEED) -> tuple[Point, ...]:
    """
    ``m`` points with integer coordinates in ``[0, m**6)`` in special position.

    Points are drawn one at a time from the grid with a seeded generator and
    kept when the enlarged set still passes every property check.
    """
    if m < 1:
        raise InvalidInstanceError(f"point count must be positive, got {m}")
    side = m ** 6
    rng = np.random.default_rng(seed)
    points: list[Point] = []
    rejected = 0
    while len(points) < m:
        for _ in range(SPECIAL_POINT_MAX_TRIALS):
            x, y = (int(v) for v in rng.integers(0, side, size=2))
            candidate = Point(x, y)
            if _first_violation(points + [candidate]) is None:
                points.append(candidate)
                break
            rejected += 1
        else:
            raise ConstructionError(
                f"no admissible grid point found after {SPECIAL_POINT_MAX_TRIALS} trials "
                f"(m={m}, placed {len(points)})"
            )
    logger.info(f"Special point set: m={m}, grid side {side}, seed={seed}, {rejected} rejected samples")
    return tuple(points)


# ---------------------------------------------------------------------------
# Reductions
# ---------------------------------------------------------------------------

def build_lpc_reduction(inst: VcInstance, seed: int = DEFAULT_SEED) -> LpcReduction:
    """Run both phases and keep every intermediate for inspection."""
    doubled = double_graph(inst.graph)
    if not doubled.edges:
        return LpcReduction(inst, doubled, (), LpcInstance((), 2 * inst.k), seed)
    points = special_point_set(doubled.n, seed)
    lines = tuple(
        SlopeLine.from_line(line_through(points[u], points[v])) for u, v in doubled.sorted_edges()
    )
    logger.info(f"Vertex cover reduction: {inst.graph.n} vertices -> {len(lines)} lines, k'={2 * inst.k}")
    return LpcReduction(inst, doubled, points, LpcInstance(lines, 2 * inst.k), seed)


def vc_to_lpc(inst: VcInstance, seed: int = DEFAULT_SEED) -> LpcInstance:
    """Equivalent Line Point Cover instance with parameter 2k."""
    return build_lpc_reduction(inst, seed).instance


def vc_to_plc(inst: VcInstance, seed: int = DEFAULT_SEED) -> PlcInstance:
    """Equivalent Point Line Cover instance with parameter 2k."""
    return dualize_lpc(vc_to_lpc(inst, seed))
