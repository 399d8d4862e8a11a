import math
from itertools import combinations

import numpy as np
import pytest

from errors import CapExceededError, CatalogMissError, InvalidInstanceError, OffGridError
from geometry import Point
from order_types import CatalogMode, OrderTypeCatalog, canonical_otr, enumerate_grid_order_types, otr
from plc import PlcInstance, brute_force_min_cover, kernelize
from protocol import (
    Direction,
    ProtocolConfig,
    bob_catalog,
    cost_bound,
    decode_length_prefixed,
    encode_length_prefixed,
    run_protocol,
)
from tests.strategies import full_sweeps, grid


def check_run(points, k, grid_side, mode=CatalogMode.CANONICAL):
    inst = PlcInstance(points, k)
    transcript = run_protocol(inst, ProtocolConfig(grid=grid_side, mode=mode))
    catalog = bob_catalog(len(points), grid_side, mode)

    assert transcript.answer == (brute_force_min_cover(points) <= k)
    assert transcript.alice_cost_bits <= cost_bound(len(points), len(catalog))
    assert transcript.rounds <= math.ceil(math.log2(len(catalog))) + 1
    expected = canonical_otr(points) if mode == CatalogMode.CANONICAL else otr(points)
    assert transcript.located.to_string() == expected.to_string()
    return transcript


def test_length_prefixed_encoding():
    assert encode_length_prefixed(0) == "100"
    assert encode_length_prefixed(3) == "11011"
    assert encode_length_prefixed(5) == "1110101"
    for value in (0, 1, 2, 7, 8, 1000):
        assert decode_length_prefixed(encode_length_prefixed(value) + "0110") == value
    with pytest.raises(InvalidInstanceError):
        encode_length_prefixed(-1)


def test_cost_bound():
    assert cost_bound(3, 1) == 5 + 2
    assert cost_bound(4, 8) == 7 + 2 * 4
    with pytest.raises(InvalidInstanceError):
        cost_bound(3, 0)


def test_single_entry_catalog_needs_one_round():
    transcript = check_run((Point(0, 0), Point(1, 0), Point(0, 1)), 1, 2)
    assert transcript.catalog_size == 1
    assert transcript.rounds == 1
    assert transcript.alice_cost_bits == 7
    assert transcript.answer is False


def test_collinear_triple_on_3x3_grid():
    transcript = check_run((Point(0, 0), Point(1, 1), Point(2, 2)), 1, 3)
    assert transcript.answer is True
    assert transcript.min_cover == 1


def test_empty_instance_short_circuits():
    transcript = run_protocol(PlcInstance((), 0), ProtocolConfig(grid=2))
    assert transcript.answer is True
    assert transcript.rounds == 0
    assert transcript.alice_cost_bits == len(encode_length_prefixed(0))


def test_bob_bits_are_not_counted():
    transcript = check_run(grid(2, 2), 1, 3)
    alice = sum(m.length for m in transcript.messages if m.direction == Direction.ALICE_TO_BOB)
    assert transcript.alice_cost_bits == alice
    assert transcript.bob_bits > 0
    assert transcript.alice_cost_bits + transcript.bob_bits == sum(m.length for m in transcript.messages)


def test_replies_are_two_bits():
    transcript = check_run(tuple(Point(x, x * x % 4) for x in range(4)), 2, 4)
    replies = [m for m in transcript.messages if m.direction == Direction.ALICE_TO_BOB][1:]
    assert len(replies) == transcript.rounds
    assert all(m.bits in ("00", "01", "10") for m in replies)
    assert replies[-1].bits == "01"


def test_off_grid_points_are_rejected():
    with pytest.raises(OffGridError):
        run_protocol(PlcInstance((Point(0, 0), Point(3, 0)), 1), ProtocolConfig(grid=3))
    with pytest.raises(OffGridError):
        run_protocol(PlcInstance((Point(0, 0), Point(-1, 0)), 1), ProtocolConfig(grid=3))


def test_protocol_caps_and_config():
    with pytest.raises(InvalidInstanceError):
        ProtocolConfig(grid=1)
    with pytest.raises(CapExceededError):
        run_protocol(PlcInstance(grid(3, 3), 3), ProtocolConfig(grid=3))


def test_wrong_catalog_is_rejected():
    catalog = enumerate_grid_order_types(3, 3)
    with pytest.raises(InvalidInstanceError, match="catalog is for"):
        run_protocol(PlcInstance(grid(2, 2), 2), ProtocolConfig(grid=3), catalog)


def test_incomplete_catalog_misses():
    full = enumerate_grid_order_types(3, 3)
    partial = OrderTypeCatalog(3, 3, full.entries[:1])
    with pytest.raises(CatalogMissError):
        run_protocol(PlcInstance((Point(0, 0), Point(1, 1), Point(2, 2)), 1), ProtocolConfig(grid=3), partial)


def test_ordered_mode_uses_input_order():
    points = (Point(1, 0), Point(0, 0), Point(0, 1))
    transcript = check_run(points, 2, 2, CatalogMode.ORDERED)
    assert transcript.alice_otr == otr(points)
    assert transcript.mode == CatalogMode.ORDERED


def test_kernelize_first_can_skip_communication():
    inst = PlcInstance(tuple(Point(x, 0) for x in range(4)) + (Point(0, 1),), 2)
    transcript = run_protocol(inst, ProtocolConfig(grid=4, kernelize_first=True))
    assert transcript.kernel_decided is None
    assert transcript.n == 1 and transcript.k == 1
    assert transcript.answer is True

    decided = run_protocol(PlcInstance(tuple(Point(x, x * x % 5) for x in range(5)), 0),
                           ProtocolConfig(grid=5, kernelize_first=True))
    assert decided.kernel_decided is False
    assert decided.alice_cost_bits == 0
    assert decided.messages == []


@pytest.mark.parametrize("size", [3, 4])
def test_protocol_matches_oracle_on_every_subset(size):
    cells = grid(4, 4)
    for subset in combinations(cells, size):
        for k in range(size + 1):
            check_run(subset, k, 4)


def test_protocol_on_sampled_five_point_sets():
    rng = np.random.default_rng(11)
    cells = grid(3, 3)
    for _ in range(40):
        chosen = tuple(cells[int(i)] for i in rng.choice(len(cells), size=5, replace=False))
        for k in range(5):
            check_run(chosen, k, 3)


def test_kernelize_first_matches_plain_protocol():
    rng = np.random.default_rng(5)
    cells = grid(4, 4)
    for _ in range(60):
        chosen = tuple(cells[int(i)] for i in rng.choice(len(cells), size=6, replace=False))
        k = int(rng.integers(0, 3))
        inst = PlcInstance(chosen, k)
        transcript = run_protocol(inst, ProtocolConfig(grid=4, kernelize_first=True))
        assert transcript.answer == (brute_force_min_cover(chosen) <= k)
        if kernelize(inst).decided is not None:
            assert transcript.alice_cost_bits == 0


@full_sweeps
def test_protocol_on_sampled_five_point_sets_of_the_4x4_grid():
    rng = np.random.default_rng(0)
    cells = grid(4, 4)
    for _ in range(300):
        chosen = tuple(cells[int(i)] for i in rng.choice(len(cells), size=5, replace=False))
        for k in range(5):
            check_run(chosen, k, 4)
