from __future__ import annotations

import random

import pytest

from wborient.core import (
    GraphBuilder,
    MixedGraph,
    Orientation,
    cut_degree,
    degree,
    edge_direction_for_bit,
    in_degree,
    induced,
    inner_edges,
    is_eulerian,
    out_degree,
    reverse_arcs,
)
from wborient.errors import GraphError, PreconditionError

from conftest import random_digraph, random_multigraph


def directed_triangle() -> MixedGraph:
    return MixedGraph.build(range(3), arcs=[(0, 1), (1, 2), (2, 0)])


class TestMixedGraph:
    def test_loops_rejected(self):
        with pytest.raises(GraphError, match="loop"):
            MixedGraph.build([0, 1], [(0, 0)])
        with pytest.raises(GraphError, match="loop"):
            MixedGraph.build([0, 1], arcs=[(1, 1)])

    def test_unknown_endpoint_rejected(self):
        with pytest.raises(GraphError):
            MixedGraph.build([0, 1], [(0, 2)])
        with pytest.raises(GraphError):
            MixedGraph(frozenset([0, 1]), {}, {0: (0, 5)})

    def test_edge_and_arc_ids_disjoint(self):
        with pytest.raises(GraphError, match="collides"):
            MixedGraph(frozenset([0, 1, 2]), {0: (0, 1)}, {0: (1, 2)})

    def test_edges_canonicalized_low_high(self):
        G = MixedGraph(frozenset([0, 5]), {3: (5, 0)}, {})
        assert G.edges[3] == (0, 5)

    def test_parallel_edges_individually_addressable(self, theta):
        assert sorted(theta.edges) == [0, 1, 2]
        assert all(pair == (0, 1) for pair in theta.edges.values())

    def test_value_equality_and_hash(self, theta):
        other = MixedGraph(frozenset([0, 1]), {0: (1, 0), 1: (0, 1), 2: (0, 1)}, {})
        assert other == theta
        assert hash(other) == hash(theta)

    def test_builder_ids_dense_in_insertion_order(self):
        b = GraphBuilder()
        u, v, w = b.add_vertices(3)
        e0 = b.add_edge(u, v)
        a1 = b.add_arc(v, w)
        e2 = b.add_edge(u, w)
        G = b.build()
        assert (e0, a1, e2) == (0, 1, 2)
        assert G.edges == {0: (0, 1), 2: (0, 2)}
        assert G.arcs == {1: (1, 2)}

    def test_builder_duplicate_vertex(self):
        b = GraphBuilder()
        b.add_vertex(4)
        with pytest.raises(GraphError):
            b.add_vertex(4)


class TestDegrees:
    def test_theta_degree_both_vertices(self, theta):
        assert degree(theta, 0) == 3
        assert degree(theta, 1) == 3

    def test_isolated_vertex(self):
        G = MixedGraph.build([0, 1, 2], [(0, 1)])
        assert degree(G, 2) == 0

    def test_unknown_vertex(self, theta):
        with pytest.raises(GraphError):
            degree(theta, 9)

    def test_degree_rejects_arcs(self):
        with pytest.raises(GraphError):
            degree(directed_triangle(), 0)

    def test_cut_of_everything_is_zero(self, k4):
        assert cut_degree(k4, k4.vertices) == 0

    def test_singleton_cut_is_degree(self, k4):
        for v in k4.vertices:
            assert cut_degree(k4, v) == degree(k4, v)
            assert inner_edges(k4, {v}) == 0

    def test_handshake_identity_random(self):
        rng = random.Random(20240)
        for _ in range(30):
            G = random_multigraph(rng)
            vs = sorted(G.vertices)
            X = {v for v in vs if rng.random() < 0.5}
            lhs = sum(degree(G, v) for v in X)
            assert lhs == cut_degree(G, X) + 2 * inner_edges(G, X)


class TestArcDegrees:
    def test_directed_triangle_singletons(self):
        D = directed_triangle()
        for v in D.vertices:
            assert out_degree(D, v) == 1
            assert in_degree(D, v) == 1

    def test_all_vertices_zero(self):
        D = directed_triangle()
        assert out_degree(D, D.vertices) == 0
        assert in_degree(D, D.vertices) == 0

    def test_in_degree_is_out_of_complement(self):
        rng = random.Random(5)
        for _ in range(20):
            D = random_digraph(rng)
            X = {v for v in D.vertices if rng.random() < 0.4}
            assert in_degree(D, X) == out_degree(D, D.vertices - X)

    def test_out_minus_in_sums_over_members(self):
        rng = random.Random(6)
        for _ in range(20):
            D = random_digraph(rng)
            X = {v for v in D.vertices if rng.random() < 0.5}
            diff = out_degree(D, X) - in_degree(D, X)
            assert diff == sum(out_degree(D, v) - in_degree(D, v) for v in X)


class TestReverseArcs:
    def test_empty_set_is_identity(self):
        D = directed_triangle()
        assert reverse_arcs(D, ()) == D

    def test_reversing_cycle_preserves_out_degrees(self):
        D = directed_triangle()
        R = reverse_arcs(D, D.arc_ids())
        for v in D.vertices:
            assert out_degree(R, v) == out_degree(D, v)
        assert R.arcs[0] == (1, 0)

    def test_involution(self):
        rng = random.Random(7)
        for _ in range(20):
            D = random_digraph(rng)
            S = [a for a in D.arcs if rng.random() < 0.5]
            assert reverse_arcs(reverse_arcs(D, S), S) == D

    def test_unknown_arc(self):
        with pytest.raises(GraphError):
            reverse_arcs(directed_triangle(), [99])


class TestInduced:
    def test_full_vertex_set_is_identity(self, k4):
        assert induced(k4, k4.vertices) == k4

    def test_empty(self, k4):
        sub = induced(k4, ())
        assert not sub.vertices and not sub.edges

    def test_ids_preserved(self, k4):
        sub = induced(k4, {0, 1, 2})
        assert set(sub.edges) <= set(k4.edges)
        for e, pair in sub.edges.items():
            assert k4.edges[e] == pair

    def test_composition_is_intersection(self):
        rng = random.Random(8)
        for _ in range(20):
            F = random_multigraph(rng)
            vs = sorted(F.vertices)
            X = {v for v in vs if rng.random() < 0.7}
            Y = {v for v in vs if rng.random() < 0.7}
            assert induced(induced(F, X), X & Y) == induced(F, X & Y)


class TestEulerian:
    def test_directed_cycle(self):
        assert is_eulerian(directed_triangle())

    def test_single_arc(self):
        assert not is_eulerian(MixedGraph.build([0, 1], arcs=[(0, 1)]))

    def test_empty(self):
        assert is_eulerian(MixedGraph.build([0, 1]))


class TestOrientation:
    def test_direction_must_match_endpoints(self, theta):
        with pytest.raises(GraphError):
            Orientation(theta, {0: (0, 0)})
        with pytest.raises(GraphError):
            Orientation(theta, {7: (0, 1)})

    def test_partial_and_total(self, theta):
        partial = Orientation(theta, {0: (0, 1)})
        assert not partial.is_total
        assert partial.free_edges() == [1, 2]
        total = partial.extend({1: (1, 0), 2: (0, 1)})
        assert total.is_total
        assert total.require_total() is total
        with pytest.raises(PreconditionError):
            partial.require_total()

    def test_extend_rejects_reorientation(self, theta):
        partial = Orientation(theta, {0: (0, 1)})
        with pytest.raises(PreconditionError):
            partial.extend({0: (1, 0)})

    def test_digraph_view_keeps_ids(self, theta):
        D = Orientation(theta, {0: (0, 1), 1: (1, 0), 2: (0, 1)})
        dig = D.as_digraph()
        assert dig.arcs == {0: (0, 1), 1: (1, 0), 2: (0, 1)}
        assert dig.is_digraph

    def test_out_in_degrees(self, theta):
        D = Orientation(theta, {0: (0, 1), 1: (1, 0), 2: (0, 1)})
        assert D.out_degrees() == {0: 2, 1: 1}
        assert D.in_degrees() == {0: 1, 1: 2}

    def test_induced_orientation(self, k4):
        D = Orientation(k4, {e: k4.edges[e] for e in k4.edges})
        sub = D.induced({0, 1, 2})
        assert set(sub.direction) == set(induced(k4, {0, 1, 2}).edges)

    def test_requires_arc_free_base(self):
        with pytest.raises(GraphError):
            Orientation(directed_triangle(), {})


def test_edge_direction_for_bit(theta):
    assert edge_direction_for_bit(theta, 0, 0) == (0, 1)
    assert edge_direction_for_bit(theta, 0, 1) == (1, 0)
    with pytest.raises(GraphError):
        edge_direction_for_bit(theta, 9, 0)
