"""
Bit-accounted simulation of the order-type binary-search oracle protocol.

Alice holds a Point Line Cover instance and runs in polynomial time; Bob is
unbounded and holds the sorted catalog of order types realizable on the
shared grid. Only bits Alice sends count toward the cost:

1. Alice sends n, self-delimited.
2. Alice computes her OTR (canonical, or in input order for ordered catalogs).
3. Bob builds the catalog for (n, grid).
4. Bob sends the median OTR of his live interval; Alice answers in two bits
   whether hers is smaller, equal or larger. Repeat until "equal".
5. Bob sends the located entry's minimum cover; Alice outputs min_cover <= k.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Optional

from config import CANONICAL_MAX_POINTS
from errors import CapExceededError, CatalogMissError, InvalidInstanceError, OffGridError
from order_types import CatalogMode, Otr, OrderTypeCatalog, canonical_otr, enumerate_grid_order_types, otr
from plc import PlcInstance, kernelize

logger = logging.getLogger(__name__)

GRID_NOTE = (
    "Bob enumerates order types realized on the shared grid only; "
    "on-grid inputs make this restricted catalog complete."
)


class Direction(str, Enum):
    ALICE_TO_BOB = "A->B"
    BOB_TO_ALICE = "B->A"


class Comparison(Enum):
    """Alice's two-bit reply to a median OTR."""

    SMALLER = "00"
    EQUAL = "01"
    LARGER = "10"


_OTR_BITS = {-1: "00", 0: "01", 1: "10"}


@dataclass(frozen=True)
class Message:
    direction: Direction
    bits: str
    label: str

    @property
    def length(self) -> int:
        return len(self.bits)


@dataclass(frozen=True)
class ProtocolConfig:
    """Shared knowledge of both players."""

    grid: int
    mode: CatalogMode = CatalogMode.CANONICAL
    kernelize_first: bool = False
    max_points: int = CANONICAL_MAX_POINTS

    def __post_init__(self):
        if self.grid < 2:
            raise InvalidInstanceError(f"grid side must be at least 2, got {self.grid}")
        object.__setattr__(self, "mode", CatalogMode(self.mode))


@dataclass
class ProtocolTranscript:
    n: int
    k: int
    grid: int
    mode: CatalogMode
    messages: list[Message] = field(default_factory=list)
    rounds: int = 0
    answer: Optional[bool] = None
    catalog_size: int = 0
    alice_otr: Optional[Otr] = None
    located: Optional[Otr] = None
    min_cover: Optional[int] = None
    kernel_decided: Optional[bool] = None

    @property
    def alice_cost_bits(self) -> int:
        return sum(m.length for m in self.messages if m.direction == Direction.ALICE_TO_BOB)

    @property
    def bob_bits(self) -> int:
        return sum(m.length for m in self.messages if m.direction == Direction.BOB_TO_ALICE)

    def send(self, direction: Direction, bits: str, label: str) -> None:
        self.messages.append(Message(direction, bits, label))


def encode_length_prefixed(value: int) -> str:
    """Unary bit-length, a zero separator, then the binary digits."""
    if value < 0:
        raise InvalidInstanceError(f"cannot encode negative value {value}")
    digits = format(value, "b")
    return "1" * len(digits) + "0" + digits


def decode_length_prefixed(bits: str) -> int:
    width = bits.index("0")
    return int(bits[width + 1:2 * width + 1], 2)


def encode_otr(key: Otr) -> str:
    return "".join(_OTR_BITS[v] for v in key.values)


def cost_bound(n: int, catalog_size: int) -> int:
    """Upper bound on Alice's bits: the n encoding plus two bits per binary-search round."""
    if catalog_size < 1:
        raise InvalidInstanceError(f"catalog size must be positive, got {catalog_size}")
    rounds = (catalog_size - 1).bit_length() + 1
    return len(encode_length_prefixed(n)) + 2 * rounds


@lru_cache(maxsize=32)
def bob_catalog(n: int, grid: int, mode: CatalogMode = CatalogMode.CANONICAL) -> OrderTypeCatalog:
    """Bob's sorted catalog, shared across runs."""
    return enumerate_grid_order_types(n, grid, mode)


def _check_on_grid(inst: PlcInstance, grid: int) -> None:
    for p in inst.points:
        if not p.is_integral or not (0 <= p.x < grid and 0 <= p.y < grid):
            raise OffGridError(f"point {p} is not an integer point of the {grid}x{grid} grid")


def _compare(mine: Otr, theirs: Otr) -> Comparison:
    if mine < theirs:
        return Comparison.SMALLER
    if mine > theirs:
        return Comparison.LARGER
    return Comparison.EQUAL


def run_protocol(
    inst: PlcInstance,
    cfg: ProtocolConfig,
    catalog: Optional[OrderTypeCatalog] = None,
) -> ProtocolTranscript:
    """Play the protocol on ``inst`` and return the full transcript."""
    _check_on_grid(inst, cfg.grid)
    transcript = ProtocolTranscript(n=inst.n, k=inst.k, grid=cfg.grid, mode=cfg.mode)

    if cfg.kernelize_first:
        report = kernelize(inst)
        if report.decided is not None:
            transcript.kernel_decided = report.decided
            transcript.answer = report.decided
            logger.info("Kernel decided the instance locally; protocol cost 0 bits")
            return transcript
        inst = report.reduced
        transcript.n, transcript.k = inst.n, inst.k

    n = inst.n
    if cfg.mode == CatalogMode.CANONICAL and n > cfg.max_points:
        raise CapExceededError(f"protocol is capped at {cfg.max_points} points, got {n}")

    # Step 1
    transcript.send(Direction.ALICE_TO_BOB, encode_length_prefixed(n), f"n={n}")
    if n == 0:
        transcript.min_cover = 0
        transcript.send(Direction.BOB_TO_ALICE, encode_length_prefixed(0), "min_cover=0")
        transcript.answer = True
        return transcript

    # Step 2
    mine = canonical_otr(inst.points) if cfg.mode == CatalogMode.CANONICAL else otr(inst.points)
    transcript.alice_otr = mine

    # Step 3
    if catalog is None:
        catalog = bob_catalog(n, cfg.grid, cfg.mode)
    if catalog.n != n or catalog.grid != cfg.grid or catalog.mode != cfg.mode:
        raise InvalidInstanceError(
            f"catalog is for n={catalog.n}, grid={catalog.grid}, mode={catalog.mode.value}; "
            f"protocol needs n={n}, grid={cfg.grid}, mode={cfg.mode.value}"
        )
    transcript.catalog_size = len(catalog)

    # Step 4
    lo, hi = 0, len(catalog) - 1
    entry = None
    while lo <= hi:
        mid = (lo + hi) // 2
        median = catalog.entries[mid].otr
        transcript.send(Direction.BOB_TO_ALICE, encode_otr(median), f"median[{mid}]={median}")
        reply = _compare(mine, median)
        transcript.send(Direction.ALICE_TO_BOB, reply.value, reply.name.lower())
        transcript.rounds += 1
        logger.debug(f"Round {transcript.rounds}: interval [{lo}, {hi}], reply {reply.name.lower()}")
        if reply == Comparison.EQUAL:
            entry = catalog.entries[mid]
            break
        if reply == Comparison.SMALLER:
            hi = mid - 1
        else:
            lo = mid + 1
    if entry is None:
        raise CatalogMissError(f"order type {mine} is not in the n={n} catalog of the {cfg.grid}x{cfg.grid} grid")
    transcript.located = entry.otr

    # Step 5
    transcript.min_cover = entry.min_cover
    transcript.send(Direction.BOB_TO_ALICE, encode_length_prefixed(entry.min_cover), f"min_cover={entry.min_cover}")
    transcript.answer = entry.min_cover <= inst.k
    logger.info(
        f"Protocol n={n} grid={cfg.grid}: {transcript.rounds} rounds, "
        f"{transcript.alice_cost_bits} bits from Alice, answer {'yes' if transcript.answer else 'no'}"
    )
    return transcript
