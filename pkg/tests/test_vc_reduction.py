from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from duality import lpc_decide
from errors import CapExceededError, InvalidInstanceError
from geometry import Point
from plc import decide
from tests.strategies import full_sweeps
from vc_reduction import (
    Graph,
    VcInstance,
    build_lpc_reduction,
    double_graph,
    special_point_set,
    vc_brute_force,
    vc_to_lpc,
    vc_to_plc,
    verify_special_properties,
)


def all_graphs(n):
    pairs = list(combinations(range(n), 2))
    for chosen in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pair for i, pair in enumerate(pairs) if chosen >> i & 1])


def test_graph_normalizes_and_validates_edges():
    assert Graph.from_edges(3, [(2, 0)]).edges == frozenset({(0, 2)})
    with pytest.raises(InvalidInstanceError, match="loop"):
        Graph.from_edges(2, [(1, 1)])
    with pytest.raises(InvalidInstanceError, match="outside"):
        Graph.from_edges(2, [(0, 2)])
    with pytest.raises(InvalidInstanceError):
        VcInstance(Graph(2, frozenset()), 3)


def test_double_graph_examples(k2_graph, triangle_graph):
    doubled = double_graph(k2_graph)
    assert doubled.n == 4
    assert doubled.edges == frozenset({(0, 1), (0, 3), (1, 2), (2, 3)})
    assert all(len(doubled.neighbors(v)) == 2 for v in range(4))

    assert double_graph(Graph(3, frozenset())) == Graph(6, frozenset())

    doubled_triangle = double_graph(triangle_graph)
    assert doubled_triangle.n == 6
    assert len(doubled_triangle.edges) == 12


@st.composite
def graphs(draw, max_vertices=6):
    n = draw(st.integers(1, max_vertices))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@given(graphs())
def test_doubled_copies_share_their_neighbourhood(graph):
    doubled = double_graph(graph)
    n = graph.n
    for v in range(n):
        expected = frozenset(u + shift for u in graph.neighbors(v) for shift in (0, n))
        assert doubled.neighbors(v) == expected
        assert doubled.neighbors(v + n) == expected
        assert v + n not in doubled.neighbors(v)


def test_vc_brute_force_examples(k2_graph, triangle_graph):
    assert vc_brute_force(VcInstance(k2_graph, 1))
    assert not vc_brute_force(VcInstance(triangle_graph, 1))
    cycle = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert vc_brute_force(VcInstance(cycle, 2))
    assert not vc_brute_force(VcInstance(cycle, 1))


def test_vc_brute_force_is_capped():
    with pytest.raises(CapExceededError):
        vc_brute_force(VcInstance(Graph(17, frozenset()), 0))


@pytest.mark.parametrize("graph_size", range(0, 5))
def test_doubling_doubles_the_vertex_cover(graph_size):
    for graph in all_graphs(graph_size):
        for k in range(graph_size + 1):
            assert vc_brute_force(VcInstance(graph, k)) == vc_brute_force(VcInstance(double_graph(graph), 2 * k))


@pytest.mark.parametrize("m", range(1, 11))
def test_special_point_set_passes_verifier(m):
    points = special_point_set(m)
    assert len(points) == m
    assert all(0 <= p.x < m ** 6 and 0 <= p.y < m ** 6 and p.is_integral for p in points)
    assert verify_special_properties(points)


def test_special_point_set_is_deterministic_per_seed():
    assert special_point_set(6, 3) == special_point_set(6, 3)
    assert special_point_set(6, 3) != special_point_set(6, 4)


def test_verify_special_properties_rejects_bad_sets():
    assert not verify_special_properties([Point(0, 0), Point(1, 1), Point(2, 2)])
    assert not verify_special_properties([Point(0, 0), Point(1, 0), Point(0, 1), Point(1, 1)])
    # (0,0),(1,3),(2,1),(3,4): pair-lines (0,0)-(1,3) and (2,1)-(3,4) share slope 3
    assert not verify_special_properties([Point(0, 0), Point(1, 3), Point(2, 1), Point(3, 4)])
    assert verify_special_properties([Point(0, 0)])


def test_verify_special_properties_is_capped():
    with pytest.raises(CapExceededError):
        verify_special_properties(special_point_set(10) + tuple(Point(i, -i * i) for i in range(1, 4)))


def test_vc_to_lpc_examples(k2_graph, triangle_graph):
    k2 = vc_to_lpc(VcInstance(k2_graph, 1))
    assert k2.m == 4 and k2.k == 2
    assert lpc_decide(k2)

    tri = vc_to_lpc(VcInstance(triangle_graph, 1))
    assert tri.m == 12 and tri.k == 2
    assert not lpc_decide(tri)

    empty = vc_to_lpc(VcInstance(Graph(3, frozenset()), 0))
    assert empty.m == 0 and empty.k == 0


def test_vc_to_plc_examples(k2_graph, triangle_graph):
    k2 = vc_to_plc(VcInstance(k2_graph, 1))
    assert k2.n == 4 and k2.k == 2 and decide(k2)

    tri = vc_to_plc(VcInstance(triangle_graph, 1))
    assert tri.n == 12 and tri.k == 2 and not decide(tri)

    empty = vc_to_plc(VcInstance(Graph(0, frozenset()), 0))
    assert empty.n == 0 and empty.k == 0 and decide(empty)


def test_build_lpc_reduction_keeps_intermediates(triangle_graph):
    reduction = build_lpc_reduction(VcInstance(triangle_graph, 2), seed=5)
    assert reduction.doubled == double_graph(triangle_graph)
    assert reduction.points == special_point_set(6, 5)
    assert reduction.instance.k == 4
    for (u, v), line in zip(reduction.doubled.sorted_edges(), reduction.instance.lines):
        assert line.contains(reduction.points[u]) and line.contains(reduction.points[v])


@pytest.mark.parametrize("graph_size", range(0, 4))
def test_reduction_chain_preserves_answers(graph_size):
    for graph in all_graphs(graph_size):
        for k in range(graph_size + 1):
            inst = VcInstance(graph, k)
            assert vc_brute_force(inst) == decide(vc_to_plc(inst))


@full_sweeps
@pytest.mark.parametrize("graph_size", [4, 5])
def test_reduction_chain_preserves_answers_on_larger_graphs(graph_size):
    for graph in all_graphs(graph_size):
        for k in range(graph_size + 1):
            inst = VcInstance(graph, k)
            expected = vc_brute_force(inst)
            assert vc_brute_force(VcInstance(double_graph(graph), 2 * k)) == expected
            assert decide(vc_to_plc(inst)) == expected
