"""
Point-line duality and the Line Point Cover -> Point Line Cover reduction.

A non-vertical line ``y = m*x + c`` is dual to the point ``(m, -c)`` and a
point ``(a, b)`` is dual to the line ``y = a*x - b``; incidence is preserved
in both directions, so covering lines by k points is the same question as
covering the dual points by k lines.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from config import LPC_BRUTE_FORCE_MAX_LINES
from errors import CapExceededError, DuplicateLineError, InvalidInstanceError
from geometry import Line, Point, as_rational, intersect, on_line
from plc import PlcInstance

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class SlopeLine:
    """The non-vertical line ``y = m*x + c``."""

    m: Fraction
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "m", as_rational(self.m, name="slope"))
        object.__setattr__(self, "c", as_rational(self.c, name="intercept"))

    def to_line(self) -> Line:
        return Line.from_slope_intercept(self.m, self.c)

    def contains(self, p: Point) -> bool:
        return p.y == self.m * p.x + self.c

    @classmethod
    def from_line(cls, line: Line) -> "SlopeLine":
        form = line.slope_intercept()
        if form is None:
            raise InvalidInstanceError(f"vertical line {line} has no slope-intercept form")
        return cls(*form)


@dataclass(frozen=True)
class LpcInstance:
    """Distinct non-vertical lines and the number of points allowed to cover them."""

    lines: tuple[SlopeLine, ...]
    k: int

    def __post_init__(self):
        lines = tuple(l if isinstance(l, SlopeLine) else SlopeLine(*l) for l in self.lines)
        object.__setattr__(self, "lines", lines)
        if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 0:
            raise InvalidInstanceError(f"k must be a non-negative integer, got {self.k!r}")
        if len(set(lines)) != len(lines):
            raise DuplicateLineError("line set contains duplicates")

    @property
    def m(self) -> int:
        return len(self.lines)


@dataclass(frozen=True)
class ShearResult:
    """Lines after the coordinate change ``(x, y) -> (x + t*y, y)``."""

    t: int
    lines: tuple[SlopeLine, ...]


def dual_point(line: SlopeLine) -> Point:
    """``y = m*x + c`` -> ``(m, -c)``."""
    return Point(line.m, -line.c)


def dualize_point(p: Point) -> SlopeLine:
    """``(a, b)`` -> ``y = a*x - b``."""
    return SlopeLine(p.x, -p.y)


def dualize_lpc(inst: LpcInstance) -> PlcInstance:
    """
    The Point Line Cover instance with the same parameter and the same incidences.

    Answers agree whenever no two input lines are parallel. Parallel lines
    dualize to points on a common vertical line, which covers them with one
    line although no single point meets both primal lines.
    """
    slopes = [line.m for line in inst.lines]
    if len(set(slopes)) != len(slopes):
        logger.warning("Parallel input lines: the dual instance may need fewer lines than the input needs points")
    return PlcInstance(tuple(dual_point(line) for line in inst.lines), inst.k)


def shear_point(p: Point, t: int) -> Point:
    return Point(p.x + t * p.y, p.y)


def shear_line(line: Line, t: int) -> Line:
    """Image of ``line`` under the shear: ``a*X + (b - a*t)*Y + c = 0``."""
    return Line.from_coefficients(line.a, line.b - line.a * t, line.c)


def shear_to_slope_intercept(lines: Sequence[Line]) -> ShearResult:
    """Shear by the smallest t >= 0 that leaves no image line vertical."""
    forbidden = set()
    for line in lines:
        if line.a != 0 and line.b % line.a == 0 and line.b // line.a >= 0:
            forbidden.add(line.b // line.a)
    t = 0
    while t in forbidden:
        t += 1
    if t:
        logger.debug(f"Shear t={t} avoids {len(forbidden)} vertical directions")
    return ShearResult(t, tuple(SlopeLine.from_line(shear_line(line, t)) for line in lines))


# ---------------------------------------------------------------------------
# Brute-force Line Point Cover
# ---------------------------------------------------------------------------

def lpc_candidate_points(lines: Sequence[SlopeLine]) -> list[Point]:
    """Pairwise intersections plus the y-intercept of every line, deduplicated."""
    geometric = [line.to_line() for line in lines]
    found: set[Point] = set()
    for l1, l2 in combinations(geometric, 2):
        point = intersect(l1, l2)
        if point is not None:
            found.add(point)
    found.update(Point(0, line.c) for line in lines)
    return sorted(found)


def lpc_min_cover(inst: LpcInstance) -> int:
    """Exact minimum number of points covering every line of ``inst``."""
    if inst.m > LPC_BRUTE_FORCE_MAX_LINES:
        raise CapExceededError(
            f"brute-force line point cover is capped at {LPC_BRUTE_FORCE_MAX_LINES} lines, got {inst.m}"
        )
    geometric = [line.to_line() for line in inst.lines]
    hits = []
    for point in lpc_candidate_points(inst.lines):
        mask = 0
        for i, line in enumerate(geometric):
            if on_line(point, line):
                mask |= 1 << i
        hits.append(mask)
    memo: dict[int, int] = {0: 0}

    def best(mask: int) -> int:
        if mask not in memo:
            low = mask & -mask
            memo[mask] = 1 + min(best(mask & ~hit) for hit in hits if hit & low)
        return memo[mask]

    return best((1 << inst.m) - 1)


def lpc_decide(inst: LpcInstance) -> bool:
    return lpc_min_cover(inst) <= inst.k
