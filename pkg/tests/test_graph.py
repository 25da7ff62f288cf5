"""
Tests for graphs, walks and forests
"""

import pytest

from gainmat.errors import GraphError, MalformedWalkError
from gainmat.gains import GainSignedGraph, half, link, loop, loose
from gainmat.graph import (
    Edge, EdgeKind, Forest, Graph, Step, Walk, circles, closed_walk, components,
    concat_walks, core_edges, cyclomatic, is_circle, is_closed, reverse_walk,
    spanning_forest, walk_vertices,
)


def graph_of(n, specs):
    return GainSignedGraph.from_specs(n, specs).graph


def k4():
    return graph_of(4, [link(i, j) for i in range(4) for j in range(i + 1, 4)])


class TestGraphValidation:
    """Test cases for graph construction"""

    def test_duplicate_ids(self):
        """Test duplicate edge ids are rejected"""
        edges = (Edge.make(0, 'link', [0, 1]), Edge.make(0, 'link', [1, 0]))
        with pytest.raises(GraphError, match='duplicate'):
            Graph(2, edges)

    def test_link_with_equal_ends(self):
        """Test a link needs two distinct ends"""
        with pytest.raises(GraphError, match='equal endpoints'):
            Graph(2, (Edge.make(0, 'link', [1, 1]),))

    def test_vertex_out_of_range(self):
        """Test edges must stay inside the vertex set"""
        with pytest.raises(GraphError, match='outside'):
            Graph(2, (Edge.make(0, 'half', [2]),))

    def test_wrong_end_count(self):
        """Test a half edge has exactly one end"""
        with pytest.raises(GraphError):
            Graph(2, (Edge.make(0, 'half', [0, 1]),))

    def test_loop_from_one_vertex(self):
        """Test a loop given one vertex gets both ends there"""
        edge = Edge.make(3, 'loop', [1])
        assert edge.vertices == (1, 1)

    def test_negative_vertex_count(self):
        """Test n must be non-negative"""
        with pytest.raises(GraphError):
            Graph(-1)

    def test_unknown_edge(self):
        """Test looking up a missing edge id"""
        g = graph_of(2, [link(0, 1)])
        with pytest.raises(GraphError):
            g.edge(5)
        with pytest.raises(GraphError):
            g.check_subset({0, 5})

    def test_degrees(self):
        """Test a loop counts twice and a half edge once"""
        g = graph_of(2, [link(0, 1), loop(0), half(1)])
        assert g.degrees(g.edge_ids) == {0: 3, 1: 2}


class TestWalks:
    """Test cases for walks"""

    def test_vertices(self):
        """Test walking a path"""
        g = graph_of(3, [link(0, 1), link(1, 2)])
        w = Walk(0, (Step(0, 0), Step(1, 0)))
        assert walk_vertices(g, w) == [0, 1, 2]

    def test_wrong_slot(self):
        """Test a step must leave from the current vertex"""
        g = graph_of(3, [link(0, 1), link(1, 2)])
        with pytest.raises(MalformedWalkError):
            walk_vertices(g, Walk(0, (Step(0, 1),)))

    def test_half_edge_as_step(self):
        """Test half edges may only open or close a walk"""
        g = graph_of(1, [half(0)])
        with pytest.raises(MalformedWalkError):
            walk_vertices(g, Walk(0, (Step(0, 0),)))

    def test_ultrawalk(self):
        """Test a walk between two half edges"""
        g = graph_of(2, [half(0), link(0, 1), half(1)])
        w = Walk(0, (Step(1, 0),), head=0, tail=2)
        assert walk_vertices(g, w) == [0, 1]
        assert w.edge_sequence() == [0, 1, 2]
        assert not is_closed(g, w)

    def test_reverse(self):
        """Test reversing swaps slots and half edges"""
        g = graph_of(2, [half(0), link(0, 1)])
        back = reverse_walk(g, Walk(0, (Step(1, 0),), head=0))
        assert back == Walk(1, (Step(1, 1),), head=None, tail=0)

    def test_concat_mismatch(self):
        """Test concatenated walks must meet"""
        g = graph_of(3, [link(0, 1), link(1, 2)])
        with pytest.raises(MalformedWalkError):
            concat_walks(g, Walk(0, (Step(0, 0),)), Walk(2))

    def test_closed_walk_triangle(self):
        """Test traversing a triangle from a root"""
        g = graph_of(3, [link(0, 1), link(1, 2), link(0, 2)])
        w = closed_walk(g, {0, 1, 2}, 0)
        assert w.edge_sequence() == [0, 1, 2]
        assert walk_vertices(g, w) == [0, 1, 2, 0]
        assert is_closed(g, w)

    def test_closed_walk_needs_circle(self):
        """Test a path is not a circle"""
        g = graph_of(3, [link(0, 1), link(1, 2)])
        with pytest.raises(GraphError):
            closed_walk(g, {0, 1}, 0)


class TestComponents:
    """Test cases for components and forests"""

    def test_isolated_vertices_are_blocks(self):
        """Test every vertex lies in some block"""
        g = graph_of(4, [link(0, 1), loose()])
        comps = components(g, g.edge_ids)
        assert comps.blocks == (frozenset({0, 1}), frozenset({2}), frozenset({3}))
        assert comps.loose == frozenset({1})

    def test_cyclomatic_triangle(self):
        """Test a triangle has one independent circle"""
        g = graph_of(3, [link(0, 1), link(1, 2), link(0, 2)])
        assert cyclomatic(g, g.edge_ids) == 1

    def test_cyclomatic_loose_edge(self):
        """Test a loose edge adds one"""
        g = graph_of(1, [loose()])
        assert cyclomatic(g, g.edge_ids) == 1

    def test_spanning_forest_lowest_ids(self):
        """Test parallel links prefer the lower id"""
        g = graph_of(3, [link(0, 1), link(0, 1), link(1, 2)])
        assert spanning_forest(g, g.edge_ids) == frozenset({0, 2})

    def test_forest_rejects_circle(self):
        """Test a forest may not contain a circle"""
        g = graph_of(2, [link(0, 1), link(0, 1)])
        with pytest.raises(GraphError):
            Forest(g, {0, 1})

    def test_forest_path(self):
        """Test the walk between two forest vertices"""
        g = graph_of(3, [link(0, 1), link(1, 2)])
        path = Forest(g, {0, 1}).path(2, 0)
        assert walk_vertices(g, path) == [2, 1, 0]

    def test_core_edges(self):
        """Test pendant links are pruned"""
        g = graph_of(4, [link(0, 1), link(1, 2), link(0, 2), link(2, 3)])
        assert core_edges(g, g.edge_ids) == frozenset({0, 1, 2})


class TestCircles:
    """Test cases for circle enumeration"""

    def test_k4_circles(self):
        """Test K4 has four triangles and three squares"""
        g = k4()
        found = circles(g, g.edge_ids)
        assert len(found) == 7
        assert sum(1 for c in found if len(c) == 3) == 4

    def test_loop_is_circle(self):
        """Test a loop is a circle of length one"""
        g = graph_of(1, [loop(0)])
        assert is_circle(g, {0})
        assert circles(g, {0}) == [frozenset({0})]

    def test_half_edge_not_circle(self):
        """Test a half edge is not a circle"""
        g = graph_of(1, [half(0)])
        assert not is_circle(g, {0})
        assert g.edge(0).kind is EdgeKind.HALF
