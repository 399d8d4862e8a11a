from fractions import Fraction
from itertools import combinations, permutations

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from errors import BudgetExceededError, CapExceededError, DuplicatePointError, InvalidInstanceError
from geometry import Point, collinear
from order_types import (
    CatalogMode,
    Otr,
    canonical_form,
    canonical_otr,
    enumerate_grid_order_types,
    equivalent,
    grid_points,
    index_triples,
    otr,
)
from plc import brute_force_min_cover
from tests.strategies import grid_point_sets


def test_index_triples_are_lexicographic():
    assert index_triples(4) == ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))
    assert index_triples(2) == ()


def test_otr_examples(triangle_points):
    assert otr(triangle_points).to_string() == "+"
    assert otr([Point(0, 0), Point(1, 1), Point(2, 2)]).to_string() == "0"
    square = [Point(0, 0), Point(1, 0), Point(0, 1), Point(1, 1)]
    assert otr(square).values == (1, 1, -1, -1)


def test_otr_rejects_duplicates():
    with pytest.raises(DuplicatePointError):
        otr([Point(0, 0), Point(0, 0), Point(1, 1)])


def test_otr_ordering_and_string_forms():
    assert Otr(3, (-1,)) < Otr(3, (0,)) < Otr(3, (1,))
    assert Otr.from_string(4, "+0-+") == Otr(4, (1, 0, -1, 1))
    with pytest.raises(InvalidInstanceError):
        Otr(4, (1,))


def test_canonical_otr_examples(triangle_points):
    assert canonical_otr(triangle_points).to_string() == "-"
    assert canonical_otr([Point(0, 0), Point(1, 1), Point(2, 2)]).to_string() == "0"
    scaled = [Point(0, 0), Point(2, 0), Point(0, 2)]
    assert canonical_otr(triangle_points) == canonical_otr(scaled)


def test_canonical_form_returns_realizing_order():
    points = [Point(3, 1), Point(0, 0), Point(5, 7), Point(1, 4), Point(2, 2)]
    key, ordered = canonical_form(points)
    assert otr(ordered) == key
    assert sorted(ordered) == sorted(points)


def test_canonical_otr_is_capped():
    with pytest.raises(CapExceededError):
        canonical_otr([Point(x, x * x) for x in range(9)])


def test_equivalent_examples(triangle_points):
    assert equivalent(triangle_points, triangle_points[::-1])
    assert not equivalent([Point(0, 0), Point(1, 1), Point(2, 2)], triangle_points)
    assert not equivalent(triangle_points, triangle_points[:2])


@st.composite
def affine_images(draw):
    points = draw(grid_point_sets(side=6, max_size=7))
    a, b, c, d = (draw(st.fractions(-3, 3, max_denominator=3)) for _ in range(4))
    assume(a * d - b * c > 0)
    shift = (draw(st.integers(-5, 5)), draw(st.integers(-5, 5)))
    image = [Point(a * p.x + b * p.y + shift[0], c * p.x + d * p.y + shift[1]) for p in points]
    return points, draw(st.permutations(image))


@given(affine_images())
@settings(max_examples=100, deadline=None)
def test_positive_affine_images_are_equivalent(pair):
    points, image = pair
    assert equivalent(points, image)
    assert brute_force_min_cover(points) == brute_force_min_cover(image)


same_size_pairs = st.integers(0, 6).flatmap(
    lambda n: st.tuples(grid_point_sets(side=4, max_size=n, min_size=n), grid_point_sets(side=4, max_size=n, min_size=n))
)


@given(same_size_pairs)
@settings(max_examples=100, deadline=None)
def test_equivalent_sets_share_min_cover(pair):
    first, second = pair
    if equivalent(first, second):
        assert brute_force_min_cover(first) == brute_force_min_cover(second)


def test_catalog_examples():
    small = enumerate_grid_order_types(3, 2)
    assert [(e.otr.to_string(), e.min_cover) for e in small.entries] == [("-", 2)]

    larger = enumerate_grid_order_types(3, 3)
    assert [(e.otr.to_string(), e.min_cover) for e in larger.entries] == [("-", 2), ("0", 1)]

    single = enumerate_grid_order_types(1, 4)
    assert len(single) == 1
    assert single.entries[0].otr == Otr(1, ())
    assert single.entries[0].min_cover == 1


def test_catalog_min_covers_match_the_oracle():
    catalog = enumerate_grid_order_types(4, 3)
    assert catalog.keys == sorted(catalog.keys)
    for entry in catalog.entries:
        assert canonical_otr(entry.representative) == entry.otr
        assert brute_force_min_cover(entry.representative) == entry.min_cover


def test_catalog_locate():
    catalog = enumerate_grid_order_types(3, 3)
    assert catalog.locate(Otr(3, (0,))).min_cover == 1
    assert catalog.locate(Otr(3, (1,))) is None


def test_ordered_catalog_contains_every_ordering():
    catalog = enumerate_grid_order_types(3, 3, CatalogMode.ORDERED)
    assert [e.otr.to_string() for e in catalog.entries] == ["-", "0", "+"]
    assert catalog.mode == CatalogMode.ORDERED
    for entry in catalog.entries:
        assert otr(entry.representative) == entry.otr


@pytest.mark.parametrize("g", [2, 3, 4])
def test_catalog_locates_every_grid_subset(g):
    catalog = enumerate_grid_order_types(4, g)
    for subset in combinations(grid_points(g), 4):
        entry = catalog.locate(canonical_otr(subset))
        assert entry is not None
        assert entry.min_cover == brute_force_min_cover(subset)


def test_ordered_catalog_locates_every_ordering():
    catalog = enumerate_grid_order_types(3, 3, CatalogMode.ORDERED)
    for subset in combinations(grid_points(3), 3):
        for ordering in permutations(subset):
            assert catalog.locate(otr(ordering)) is not None


@pytest.mark.parametrize("n, mode", [(3, CatalogMode.CANONICAL), (4, CatalogMode.CANONICAL), (3, CatalogMode.ORDERED)])
def test_catalogs_only_grow_with_the_grid(n, mode):
    catalogs = [enumerate_grid_order_types(n, g, mode) for g in (2, 3, 4)]
    for smaller, larger in zip(catalogs, catalogs[1:]):
        assert len(smaller) <= len(larger)
        assert all(larger.locate(key) is not None for key in smaller.keys)


def _collinear_index_sets(points):
    return {
        indices
        for size in range(3, len(points) + 1)
        for indices in combinations(range(len(points)), size)
        if collinear([points[i] for i in indices])
    }


def test_equivalent_orderings_share_collinear_index_sets():
    classes = {}
    for subset in combinations(grid_points(3), 5):
        key, ordered = canonical_form(subset)
        classes.setdefault(key, []).append(ordered)
    assert any(len(members) > 1 for members in classes.values())
    for members in classes.values():
        expected = _collinear_index_sets(members[0])
        for ordered in members[1:]:
            assert _collinear_index_sets(ordered) == expected


@given(same_size_pairs)
@settings(max_examples=100, deadline=None)
def test_collinearity_transfers_between_equivalent_sets(pair):
    first, second = (canonical_form(points) for points in pair)
    if first[0] == second[0]:
        assert _collinear_index_sets(first[1]) == _collinear_index_sets(second[1])


def test_enumeration_limits():
    with pytest.raises(CapExceededError):
        enumerate_grid_order_types(9, 3)
    with pytest.raises(BudgetExceededError):
        enumerate_grid_order_types(6, 5, budget=1000)
    with pytest.raises(InvalidInstanceError):
        enumerate_grid_order_types(3, 0)


def test_rational_points_have_order_types(half):
    points = [Point(half, 0), Point(0, half), Point(Fraction(1, 3), Fraction(1, 3))]
    assert otr(points).to_string() == "-"
