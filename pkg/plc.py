"""
Point Line Cover instances, kernelization and exact solvers.

The kernel implements the two classic reduction rules: a line through at
least k+1 points is mandatory, and once no such line exists k lines cover at
most k^2 points. Solvers work on bitmasks over the input point list so that
sub-instances never recompute candidate lines.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from config import BRUTE_FORCE_MAX_POINTS
from errors import CapExceededError, DuplicatePointError, InvalidInstanceError
from geometry import Line, Point, has_distinct_points, line_through, on_line

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PlcInstance:
    """A set of distinct points and the number of lines allowed to cover them."""

    points: tuple[Point, ...]
    k: int

    def __post_init__(self):
        points = tuple(p if isinstance(p, Point) else Point(*p) for p in self.points)
        object.__setattr__(self, "points", points)
        if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 0:
            raise InvalidInstanceError(f"k must be a non-negative integer, got {self.k!r}")
        seen: set[Point] = set()
        for p in points:
            if p in seen:
                raise DuplicatePointError(f"duplicate point {p}")
            seen.add(p)

    @property
    def n(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class CandidateLine:
    """A line through at least two input points and every input index it covers."""

    line: Line
    indices: tuple[int, ...]

    @property
    def mask(self) -> int:
        mask = 0
        for i in self.indices:
            mask |= 1 << i
        return mask


@dataclass(frozen=True)
class MandatoryLine:
    """One firing of the mandatory-line rule."""

    line: Line
    covered: int
    k_before: int


@dataclass(frozen=True)
class KernelReport:
    """
    Outcome of :func:`kernelize`.

    ``decided`` is True/False when a rule settled the instance; ``reduced``
    then only records the state the rule fired on. When ``decided`` is None
    the reduced instance has at most ``k**2`` points and the same answer as
    the input.
    """

    reduced: PlcInstance
    mandatory_lines: tuple[Line, ...]
    decided: Optional[bool]
    firings: tuple[MandatoryLine, ...] = field(default=())


@dataclass(frozen=True)
class SetCoverEncoding:
    """A kernel rewritten as Set Cover: each relevant line is a bitmask over the kernel points."""

    universe_size: int
    k: int
    lines: tuple[Line, ...]
    sets: tuple[int, ...]

    @property
    def bits(self) -> int:
        return len(self.sets) * self.universe_size


def _check_distinct(points: Sequence[Point]) -> None:
    if not has_distinct_points(points):
        raise DuplicatePointError("point set contains duplicates")


def candidate_lines(points: Sequence[Point]) -> list[CandidateLine]:
    """Every line through two or more of ``points``, with its full covered index set, in canonical line order."""
    _check_distinct(points)
    covered: dict[Line, set[int]] = {}
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            line = line_through(points[i], points[j])
            members = covered.setdefault(line, set())
            members.add(i)
            members.add(j)
    return [CandidateLine(line, tuple(sorted(members))) for line, members in sorted(covered.items())]


def _singleton_line(p: Point) -> Line:
    return Line.from_coefficients(0, 1, -p.y)


def _points_of(points: Sequence[Point], mask: int) -> tuple[Point, ...]:
    return tuple(p for i, p in enumerate(points) if mask >> i & 1)


# ---------------------------------------------------------------------------
# Kernelization
# ---------------------------------------------------------------------------

@dataclass
class _ReductionState:
    remaining: int
    k: int
    firings: list[MandatoryLine]
    decided: Optional[bool] = None


def _reduce(lines: Sequence[CandidateLine], masks: Sequence[int], remaining: int, k: int) -> _ReductionState:
    """Apply the reduction rules to fixpoint on a sub-instance given as a bitmask."""
    state = _ReductionState(remaining, k, [])
    while True:
        if state.remaining == 0:
            state.decided = True
            return state
        if state.k == 0:
            state.decided = False
            return state
        for candidate, mask in zip(lines, masks):
            count = (mask & state.remaining).bit_count()
            if count >= state.k + 1:
                state.firings.append(MandatoryLine(candidate.line, count, state.k))
                state.remaining &= ~mask
                state.k -= 1
                break
        else:
            if state.remaining.bit_count() > state.k * state.k:
                state.decided = False
            return state


def kernelize(inst: PlcInstance) -> KernelReport:
    """Exhaustively apply the mandatory-line and k^2 rules."""
    lines = candidate_lines(inst.points)
    masks = [c.mask for c in lines]
    state = _reduce(lines, masks, (1 << inst.n) - 1, inst.k)
    for firing in state.firings:
        logger.info(f"Mandatory line {firing.line} covers {firing.covered} points (k={firing.k_before})")
    reduced = PlcInstance(_points_of(inst.points, state.remaining), state.k)
    if state.decided is not None:
        logger.info(f"Kernel decided instance: {'yes' if state.decided else 'no'}")
    return KernelReport(
        reduced=reduced,
        mandatory_lines=tuple(f.line for f in state.firings),
        decided=state.decided,
        firings=tuple(state.firings),
    )


def set_cover_encoding(report: KernelReport) -> SetCoverEncoding:
    """Encode an undecided kernel as a Set Cover instance over its points."""
    if report.decided is not None:
        return SetCoverEncoding(0, report.reduced.k, (), ())
    lines = candidate_lines(report.reduced.points)
    return SetCoverEncoding(
        universe_size=report.reduced.n,
        k=report.reduced.k,
        lines=tuple(c.line for c in lines),
        sets=tuple(c.mask for c in lines),
    )


# ---------------------------------------------------------------------------
# Exact oracle
# ---------------------------------------------------------------------------

def _min_cover_search(points: Sequence[Point]) -> tuple[int, list[Line]]:
    if len(points) > BRUTE_FORCE_MAX_POINTS:
        raise CapExceededError(
            f"brute-force min cover is capped at {BRUTE_FORCE_MAX_POINTS} points, got {len(points)}"
        )
    lines = candidate_lines(points)
    through: list[list[CandidateLine]] = [[] for _ in points]
    for candidate in lines:
        for i in candidate.indices:
            through[i].append(candidate)
    masks = {candidate.line: candidate.mask for candidate in lines}
    memo: dict[int, tuple[int, Optional[Line], int]] = {0: (0, None, 0)}

    def best(mask: int) -> int:
        if mask in memo:
            return memo[mask][0]
        low = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << low)
        choice = (1 + best(rest), _singleton_line(points[low]), rest)
        for candidate in through[low]:
            after = mask & ~masks[candidate.line]
            size = 1 + best(after)
            if size < choice[0]:
                choice = (size, candidate.line, after)
        memo[mask] = choice
        return choice[0]

    full = (1 << len(points)) - 1
    size = best(full)
    witness: list[Line] = []
    mask = full
    while mask:
        _, line, mask = memo[mask]
        witness.append(line)
    return size, witness


def brute_force_min_cover(points: Sequence[Point]) -> int:
    """Exact minimum number of lines covering ``points`` (capped at BRUTE_FORCE_MAX_POINTS)."""
    _check_distinct(points)
    return _min_cover_search(points)[0]


def min_cover_lines(points: Sequence[Point]) -> list[Line]:
    """An optimal cover; points covered alone get the horizontal line through them."""
    _check_distinct(points)
    return _min_cover_search(points)[1]


# ---------------------------------------------------------------------------
# FPT branching
# ---------------------------------------------------------------------------

class _BranchSearch:
    """Kernelize-then-branch search on the first remaining point."""

    def __init__(self, points: Sequence[Point]):
        self.points = points
        self.lines = candidate_lines(points)
        self.masks = [c.mask for c in self.lines]
        self.failed: set[tuple[int, int]] = set()
        self.nodes = 0

    def _pairing(self, remaining: int) -> list[Line]:
        chosen = [p for i, p in enumerate(self.points) if remaining >> i & 1]
        cover = [line_through(chosen[i], chosen[i + 1]) for i in range(0, len(chosen) - 1, 2)]
        if len(chosen) % 2:
            cover.append(_singleton_line(chosen[-1]))
        return cover

    def search(self, remaining: int, k: int) -> Optional[list[Line]]:
        self.nodes += 1
        key = (remaining, k)
        if key in self.failed:
            return None
        state = _reduce(self.lines, self.masks, remaining, k)
        forced = [f.line for f in state.firings]
        if state.decided is True:
            return forced
        if state.decided is False:
            self.failed.add(key)
            return None

        rest, budget = state.remaining, state.k
        n = rest.bit_count()
        first = (rest & -rest).bit_length() - 1
        if rest == 1 << first:
            return forced + [_singleton_line(self.points[first])]
        if 2 * budget >= n:
            return forced + self._pairing(rest)
        largest = max((m & rest).bit_count() for m in self.masks)
        if budget * largest < n:
            self.failed.add(key)
            return None

        branches = [
            (covered.bit_count(), candidate.line, covered)
            for candidate, mask in zip(self.lines, self.masks)
            if mask >> first & 1 and (covered := mask & rest).bit_count() >= 2
        ]
        branches.sort(key=lambda b: (-b[0], b[1]))
        for _, line, covered in branches:
            sub = self.search(rest & ~covered, budget - 1)
            if sub is not None:
                return forced + [line] + sub
        self.failed.add(key)
        return None


def fpt_cover(inst: PlcInstance) -> Optional[list[Line]]:
    """A cover with at most ``inst.k`` lines found by bounded branching, or None."""
    search = _BranchSearch(inst.points)
    cover = search.search((1 << inst.n) - 1, inst.k)
    logger.debug(f"Branching explored {search.nodes} nodes for n={inst.n}, k={inst.k}")
    return cover


def fpt_decide(inst: PlcInstance) -> bool:
    """True iff the points can be covered by at most k lines."""
    return fpt_cover(inst) is not None


def decide(inst: PlcInstance) -> bool:
    """Min cover <= k, via the exact oracle under its cap and branching above it."""
    if inst.n <= BRUTE_FORCE_MAX_POINTS:
        return brute_force_min_cover(inst.points) <= inst.k
    return fpt_decide(inst)


def solve(inst: PlcInstance) -> Optional[list[Line]]:
    """A witness cover of size at most k, or None for no-instances."""
    if inst.n <= BRUTE_FORCE_MAX_POINTS:
        cover = min_cover_lines(inst.points)
        return cover if len(cover) <= inst.k else None
    return fpt_cover(inst)


def covers(lines: Iterable[Line], points: Iterable[Point]) -> bool:
    """True iff every point lies on at least one of the lines."""
    lines = list(lines)
    return all(any(on_line(p, line) for line in lines) for p in points)
