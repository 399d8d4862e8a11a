"""Seeded Point Line Cover instance generators on the integer grid ``[0, g)^2``."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from errors import InfeasibleSpecError
from geometry import Line, Point, line_through
from plc import PlcInstance

logger = logging.getLogger(__name__)

MAX_PLANTED_LINE_TRIALS = 1_000

# primitive steps, so every planted line passes through at least two grid points
PLANTED_DIRECTIONS = ((1, 0), (0, 1), (1, 1), (1, -1), (1, 2), (2, 1), (1, -2), (2, -1))


class GeneratorKind(str, Enum):
    PLANTED = "planted"
    UNIFORM = "uniform"
    GRID = "grid"


@dataclass(frozen=True)
class GeneratorSpec:
    """
    ``planted``: n points drawn from k random grid lines, so min cover <= k.
    ``uniform``: n distinct uniform grid points.
    ``grid``: the full ``rows x cols`` lattice (both default to g).
    """

    kind: GeneratorKind
    n: int = 0
    k: int = 0
    g: int = 2
    seed: int = 0
    rows: Optional[int] = None
    cols: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "kind", GeneratorKind(self.kind))
        if self.n < 0 or self.k < 0 or self.g < 1:
            raise InfeasibleSpecError(f"need n >= 0, k >= 0 and g >= 1, got n={self.n}, k={self.k}, g={self.g}")
        if not 0 <= self.seed < 2 ** 64:
            raise InfeasibleSpecError(f"seed must be a 64-bit unsigned integer, got {self.seed}")


def _lattice_points_on(line: Line, p: Point, g: int) -> list[Point]:
    """Grid points of ``[0, g)^2`` on the line through ``p``."""
    dx, dy = line.direction()
    step = math.gcd(dx, dy)
    dx, dy = dx // step, dy // step
    found = []
    for t in range(-g, g + 1):
        x, y = int(p.x) + t * dx, int(p.y) + t * dy
        if 0 <= x < g and 0 <= y < g:
            found.append(Point(x, y))
    return found


def _draw_lines(spec: GeneratorSpec, rng: np.random.Generator) -> dict[Line, Point]:
    lines: dict[Line, Point] = {}
    trials = 0
    while len(lines) < spec.k:
        if trials == MAX_PLANTED_LINE_TRIALS:
            raise InfeasibleSpecError(f"could not draw {spec.k} distinct lines on a {spec.g}x{spec.g} grid")
        trials += 1
        x, y = (int(v) for v in rng.integers(0, spec.g, size=2))
        dx, dy = PLANTED_DIRECTIONS[int(rng.integers(len(PLANTED_DIRECTIONS)))]
        if 0 <= x + dx < spec.g and 0 <= y + dy < spec.g:
            p = Point(x, y)
            lines.setdefault(line_through(p, Point(x + dx, y + dy)), p)
    return lines


def _planted(spec: GeneratorSpec, rng: np.random.Generator) -> PlcInstance:
    if spec.k == 0:
        if spec.n > 0:
            raise InfeasibleSpecError("planted instances with points need k >= 1")
        return PlcInstance((), 0)
    if spec.g < 2:
        raise InfeasibleSpecError(f"a {spec.g}x{spec.g} grid has no lines through two points")
    largest = 0
    for _ in range(MAX_PLANTED_LINE_TRIALS):
        lines = _draw_lines(spec, rng)
        pool = sorted({q for line, p in lines.items() for q in _lattice_points_on(line, p, spec.g)})
        if len(pool) >= spec.n:
            chosen = sorted(int(i) for i in rng.choice(len(pool), size=spec.n, replace=False))
            return PlcInstance(tuple(pool[i] for i in chosen), spec.k)
        largest = max(largest, len(pool))
    raise InfeasibleSpecError(f"{spec.k} planted lines hold at most {largest} grid points, need {spec.n}")


def _uniform(spec: GeneratorSpec, rng: np.random.Generator) -> PlcInstance:
    cells = spec.g * spec.g
    if spec.n > cells:
        raise InfeasibleSpecError(f"cannot place {spec.n} distinct points on a {spec.g}x{spec.g} grid")
    chosen = [int(i) for i in rng.choice(cells, size=spec.n, replace=False)]
    return PlcInstance(tuple(Point(i % spec.g, i // spec.g) for i in chosen), spec.k)


def _grid(spec: GeneratorSpec) -> PlcInstance:
    rows = spec.rows if spec.rows is not None else spec.g
    cols = spec.cols if spec.cols is not None else spec.g
    return PlcInstance(tuple(Point(x, y) for y in range(rows) for x in range(cols)), spec.k)


def generate(spec: GeneratorSpec) -> PlcInstance:
    """Build the instance described by ``spec``; identical specs give identical instances."""
    rng = np.random.default_rng(spec.seed)
    if spec.kind == GeneratorKind.PLANTED:
        inst = _planted(spec, rng)
    elif spec.kind == GeneratorKind.UNIFORM:
        inst = _uniform(spec, rng)
    else:
        inst = _grid(spec)
    logger.info(f"Generated {spec.kind.value} instance: n={inst.n}, k={inst.k}, seed={spec.seed}")
    return inst
