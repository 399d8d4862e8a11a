"""
Order types of ordered planar point sets.

An order type assigns every lexicographically ordered index triple
``i < j < k`` the orientation of ``(p_i, p_j, p_k)``; its string form (OTR)
is the sequence of those signs. Two point sets are combinatorially
equivalent when some orderings give identical order types, and equivalent
sets have identical Point Line Cover answers, so the canonical OTR (the
lexicographic minimum over all orderings) is a complete invariant for the
problem.
"""

from __future__ import annotations

import logging
import math
import time
from bisect import bisect_left
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from itertools import combinations, permutations
from typing import Callable, Optional, Sequence

from config import CANONICAL_MAX_POINTS, ENUMERATION_BUDGET
from errors import BudgetExceededError, CapExceededError, DuplicatePointError, FormatSyntaxError, InvalidInstanceError
from geometry import Point, has_distinct_points, orientation
from plc import brute_force_min_cover

logger = logging.getLogger(__name__)

SYMBOLS = {-1: "-", 0: "0", 1: "+"}
SYMBOL_VALUES = {symbol: value for value, symbol in SYMBOLS.items()}


@lru_cache(maxsize=None)
def index_triples(n: int) -> tuple[tuple[int, int, int], ...]:
    """All ``(i, j, k)`` with ``i < j < k < n`` in increasing lexicographic order."""
    return tuple(combinations(range(n), 3))


@dataclass(frozen=True, order=True)
class Otr:
    """Order type representation; compares lexicographically with ``- < 0 < +``."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != math.comb(self.n, 3):
            raise InvalidInstanceError(f"an OTR on {self.n} points has {math.comb(self.n, 3)} entries, got {len(self.values)}")
        if any(v not in SYMBOLS for v in self.values):
            raise InvalidInstanceError("OTR entries must be -1, 0 or +1")

    def to_string(self) -> str:
        return "".join(SYMBOLS[v] for v in self.values)

    @classmethod
    def from_string(cls, n: int, text: str) -> "Otr":
        try:
            values = tuple(SYMBOL_VALUES[ch] for ch in text)
        except KeyError as exc:
            raise FormatSyntaxError(f"unknown order type symbol {exc.args[0]!r}") from exc
        return cls(n, values)

    def __str__(self) -> str:
        return self.to_string()


# ---------------------------------------------------------------------------
# Single point sets
# ---------------------------------------------------------------------------

def _check_distinct(points: Sequence[Point]) -> None:
    if not has_distinct_points(points):
        raise DuplicatePointError("order types need pairwise distinct points")


def otr(points: Sequence[Point]) -> Otr:
    """Order type of ``points`` in the given order."""
    _check_distinct(points)
    return Otr(len(points), tuple(int(orientation(points[i], points[j], points[k])) for i, j, k in index_triples(len(points))))


OrientationTable = list[list[list[int]]]


def _extend_table(n: int, sign: Callable[[int, int, int], int]) -> OrientationTable:
    """Full ``n x n x n`` orientation table from the signs of increasing triples."""
    table = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i, j, k in index_triples(n):
        s = sign(i, j, k)
        table[i][j][k] = table[j][k][i] = table[k][i][j] = s
        table[j][i][k] = table[i][k][j] = table[k][j][i] = -s
    return table


def _canonical_from_table(n: int, table: OrientationTable) -> tuple[Otr, tuple[int, ...]]:
    """Minimum OTR over all orderings and one ordering that attains it."""
    triples = index_triples(n)
    best: Optional[list[int]] = None
    best_order: tuple[int, ...] = tuple(range(n))
    for order in permutations(range(n)):
        candidate = []
        smaller = best is None
        for idx, (i, j, k) in enumerate(triples):
            v = table[order[i]][order[j]][order[k]]
            if not smaller:
                if v > best[idx]:
                    break
                if v < best[idx]:
                    smaller = True
            candidate.append(v)
        else:
            if smaller:
                best, best_order = candidate, order
    return Otr(n, tuple(best)), best_order


def _check_cap(points: Sequence[Point]) -> None:
    if len(points) > CANONICAL_MAX_POINTS:
        raise CapExceededError(f"canonical order types are capped at {CANONICAL_MAX_POINTS} points, got {len(points)}")


def canonical_form(points: Sequence[Point]) -> tuple[Otr, tuple[Point, ...]]:
    """Canonical OTR and the reordering of ``points`` that realizes it."""
    _check_cap(points)
    _check_distinct(points)
    table = _extend_table(len(points), lambda i, j, k: int(orientation(points[i], points[j], points[k])))
    key, order = _canonical_from_table(len(points), table)
    return key, tuple(points[i] for i in order)


def canonical_otr(points: Sequence[Point]) -> Otr:
    """Lexicographically smallest OTR over all orderings of ``points``."""
    return canonical_form(points)[0]


def equivalent(first: Sequence[Point], second: Sequence[Point]) -> bool:
    """True iff the two point sets are combinatorially equivalent."""
    _check_cap(first)
    _check_cap(second)
    if len(first) != len(second):
        return False
    return canonical_otr(first) == canonical_otr(second)


# ---------------------------------------------------------------------------
# Grid catalogs
# ---------------------------------------------------------------------------

class CatalogMode(str, Enum):
    CANONICAL = "canonical"
    ORDERED = "ordered"


@dataclass(frozen=True)
class CatalogEntry:
    otr: Otr
    representative: tuple[Point, ...]
    min_cover: int


@dataclass(frozen=True)
class OrderTypeCatalog:
    """Sorted, deduplicated order types realized on a ``grid x grid`` integer grid."""

    n: int
    grid: int
    entries: tuple[CatalogEntry, ...]
    mode: CatalogMode = CatalogMode.CANONICAL

    def __len__(self) -> int:
        return len(self.entries)

    @cached_property
    def keys(self) -> list[Otr]:
        return [entry.otr for entry in self.entries]

    def locate(self, key: Otr) -> Optional[CatalogEntry]:
        position = bisect_left(self.keys, key)
        if position < len(self.entries) and self.keys[position] == key:
            return self.entries[position]
        return None


def grid_points(g: int) -> list[Point]:
    return [Point(x, y) for x in range(g) for y in range(g)]


def enumeration_work(n: int, g: int, mode: CatalogMode = CatalogMode.CANONICAL) -> int:
    """Work units charged against the enumeration budget."""
    subsets = math.comb(g * g, n)
    return subsets * math.factorial(n) if mode == CatalogMode.ORDERED else subsets


def enumerate_grid_order_types(
    n: int,
    g: int,
    mode: CatalogMode = CatalogMode.CANONICAL,
    budget: int = ENUMERATION_BUDGET,
) -> OrderTypeCatalog:
    """
    Every order type realized by an ``n``-subset of the ``g x g`` grid.

    Canonical mode keeps one canonical OTR per equivalence class; ordered mode
    keeps the OTR of every ordering of every subset. Each entry carries a
    representative ordered point set and its exact minimum line cover.
    """
    mode = CatalogMode(mode)
    if n < 0 or g < 1:
        raise InvalidInstanceError(f"enumeration needs n >= 0 and g >= 1, got n={n}, g={g}")
    if mode == CatalogMode.CANONICAL and n > CANONICAL_MAX_POINTS:
        raise CapExceededError(f"canonical order types are capped at {CANONICAL_MAX_POINTS} points, got {n}")
    work = enumeration_work(n, g, mode)
    if work > budget:
        raise BudgetExceededError(f"enumerating n={n} on a {g}x{g} grid costs {work} units, budget is {budget}")

    start = time.perf_counter()
    universe = grid_points(g)

    @lru_cache(maxsize=None)
    def grid_sign(a: int, b: int, c: int) -> int:
        return int(orientation(universe[a], universe[b], universe[c]))

    found: dict[Otr, tuple[Point, ...]] = {}
    covers: dict[tuple[Point, ...], int] = {}
    for subset in combinations(range(len(universe)), n):
        table = _extend_table(n, lambda i, j, k: grid_sign(subset[i], subset[j], subset[k]))
        if mode == CatalogMode.CANONICAL:
            key, order = _canonical_from_table(n, table)
            if key not in found:
                found[key] = tuple(universe[subset[i]] for i in order)
            continue
        for order in permutations(range(n)):
            key = Otr(n, tuple(table[order[i]][order[j]][order[k]] for i, j, k in index_triples(n)))
            if key not in found:
                found[key] = tuple(universe[subset[i]] for i in order)

    entries = []
    for key in sorted(found):
        representative = found[key]
        point_set = tuple(sorted(representative))
        if point_set not in covers:
            covers[point_set] = brute_force_min_cover(representative)
        entries.append(CatalogEntry(key, representative, covers[point_set]))
    logger.info(
        f"Catalog n={n} grid={g} mode={mode.value}: {len(entries)} order types "
        f"from {math.comb(g * g, n)} subsets in {time.perf_counter() - start:.2f}s"
    )
    return OrderTypeCatalog(n, g, tuple(entries), mode)
