"""
Tests for independence certificates and hypercircuit classes
"""

import pytest

from gainmat.gains import E_INF, GainSignedGraph, half, link, loop, loose
from gainmat.matroid import GainSignedMatroid
from gainmat.taxonomy import (
    ComponentKind, HypercircuitClass, classify_hypercircuit, edge_components,
    independence_certificate,
)


def only_circuit(u):
    found = GainSignedMatroid(u).circuits()
    assert len(found) == 1
    return found[0]


class TestEdgeComponents:
    """Test cases for splitting edge sets into pieces"""

    def test_loose_edges_and_extra_point_are_separate(self):
        """Test loose edges and inf form their own pieces"""
        u = GainSignedGraph.from_specs(3, [link(0, 1), link(1, 2), loose(1), loose(2)])
        pieces = edge_components(u, {0, 1, 2, 3, E_INF})
        assert pieces == [frozenset({E_INF}), frozenset({0, 1}), frozenset({2}), frozenset({3})]

    def test_isolated_vertices_form_no_piece(self):
        """Test vertices without edges are skipped"""
        u = GainSignedGraph.from_specs(4, [link(0, 1), link(2, 3)])
        assert edge_components(u, {1}) == [frozenset({1})]


class TestIndependenceCertificate:
    """Test cases for structural independence"""

    def test_negative_triangle(self):
        """Test an unbalanced unicycle is independent"""
        u = GainSignedGraph.from_specs(3, [link(0, 1, -1, 1), link(1, 2, -1, 1), link(0, 2, -1, 1)])
        certificate = independence_certificate(u, {0, 1, 2})
        assert certificate.independent
        assert certificate.components[0].kind is ComponentKind.UNBALANCED_UNICYCLE
        assert certificate.components[0].excess == 0
        assert certificate.special is None

    def test_non_neutral_positive_circle(self):
        """Test a non-neutral balanced circle is the special component"""
        u = GainSignedGraph.from_specs(2, [link(0, 1, 1, 0), link(0, 1, 1, 1)])
        certificate = independence_certificate(u, {0, 1})
        assert certificate.independent
        assert certificate.components[0].kind is ComponentKind.BALANCED_UNICYCLE
        assert certificate.special == frozenset({0, 1})

    def test_neutral_positive_circle(self):
        """Test a neutral balanced circle is dependent"""
        u = GainSignedGraph.from_specs(2, [link(0, 1, 1, 0), link(0, 1, 1, 0)])
        assert not independence_certificate(u, {0, 1}).independent

    def test_two_special_components(self):
        """Test only one component may carry excess 1"""
        u = GainSignedGraph.from_specs(1, [loose(1), loose(2)])
        certificate = independence_certificate(u, {0, 1})
        assert [c.kind for c in certificate.components] == [ComponentKind.LOOSE_EDGE] * 2
        assert not certificate.independent

    def test_extra_point(self):
        """Test inf alone is independent and special"""
        u = GainSignedGraph.from_specs(1, [])
        certificate = independence_certificate(u, {E_INF})
        assert certificate.independent
        assert certificate.components[0].kind is ComponentKind.EXTRA_POINT
        assert certificate.special == frozenset({E_INF})

    def test_unbalanced_handcuff(self):
        """Test a handcuff with a non-neutral circuit is independent"""
        u = GainSignedGraph.from_specs(2, [loop(0, -1, 0), link(0, 1), loop(1, -1, 1)])
        certificate = independence_certificate(u, {0, 1, 2})
        assert certificate.components[0].kind is ComponentKind.UNBALANCED_HANDCUFF
        assert certificate.independent

    def test_certificate_agrees_with_rank(self):
        """Test the matroid cross-check on a half edge pair"""
        u = GainSignedGraph.from_specs(2, [half(0, 1), link(0, 1), half(1, 1)])
        matroid = GainSignedMatroid(u)
        assert matroid.certificate({0, 1, 2}).independent == (matroid.rank({0, 1, 2}) == 3)


class TestHypercircuitClasses:
    """Test cases for naming hypercircuits"""

    def test_neutral_digon(self):
        """Test a neutral positive digon"""
        u = GainSignedGraph.from_specs(2, [link(0, 1, 1, 0), link(0, 1, 1, 0)])
        assert only_circuit(u) == (frozenset({0, 1}), HypercircuitClass.NEUTRAL_SIGN_CIRCUIT)

    def test_neutral_loose_edge(self):
        """Test a neutral loose edge is a matroid loop"""
        u = GainSignedGraph.from_specs(1, [loose(0)])
        assert only_circuit(u) == (frozenset({0}), HypercircuitClass.NEUTRAL_SIGN_CIRCUIT)

    def test_disjoint_pair(self):
        """Test two non-neutral loose edges"""
        u = GainSignedGraph.from_specs(1, [loose(1), loose(2)])
        assert only_circuit(u) == (frozenset({0, 1}), HypercircuitClass.DISJOINT_PAIR)

    def test_balanced_theta(self):
        """Test three parallel positive links with distinct gains"""
        u = GainSignedGraph.from_specs(2, [link(0, 1, 1, 0), link(0, 1, 1, 1), link(0, 1, 1, 2)])
        assert only_circuit(u) == (frozenset({0, 1, 2}), HypercircuitClass.BALANCED_THETA)

    def test_tight_positive_pair(self):
        """Test two non-neutral positive loops at one vertex"""
        u = GainSignedGraph.from_specs(1, [loop(0, 1, 1), loop(0, 1, 2)])
        assert only_circuit(u) == (frozenset({0, 1}), HypercircuitClass.TIGHT_POSITIVE_PAIR)

    def test_contrabalanced_triple(self):
        """Test three negative loops with distinct gains"""
        u = GainSignedGraph.from_specs(1, [loop(0, -1, 0), loop(0, -1, 1), loop(0, -1, 2)])
        assert only_circuit(u) == (frozenset({0, 1, 2}), HypercircuitClass.CONTRABALANCED_TRIPLE)

    def test_extra_point_pair(self):
        """Test inf with a non-neutral loose edge"""
        u = GainSignedGraph.from_specs(1, [loose(1)])
        assert classify_hypercircuit(u, {0, E_INF}) is HypercircuitClass.DISJOINT_PAIR

    def test_quadruple_path(self):
        """Test four parallel paths, two of each sign"""
        u = GainSignedGraph.from_specs(2, [link(0, 1, 1, 0), link(0, 1, 1, 1), link(0, 1, -1, 0),
                                           link(0, 1, -1, 1)])
        c = only_circuit(u)
        assert c == frozenset({0, 1, 2, 3})
        assert classify_hypercircuit(u, c) is HypercircuitClass.QUADRUPLE_PATH

    def test_theta_with_ear(self):
        """Test an unbalanced theta with a negative ear on one of its paths"""
        u = GainSignedGraph.from_specs(3, [link(0, 1, 1, 0), link(0, 1, -1, 1), link(0, 2, 1, 2),
                                           link(2, 1, 1, 4), link(0, 2, -1, 8)])
        c = only_circuit(u)
        assert c == frozenset({0, 1, 2, 3, 4})
        assert classify_hypercircuit(u, c) is HypercircuitClass.THETA_WITH_EAR

    def test_antibalanced_k4(self):
        """Test a K4 with every edge negative"""
        pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
        gains = [1, 2, 4, 8, 16, 32]
        u = GainSignedGraph.from_specs(4, [link(a, b, -1, g) for (a, b), g in zip(pairs, gains)])
        c = only_circuit(u)
        assert c == frozenset(range(6))
        assert classify_hypercircuit(u, c) is HypercircuitClass.ANTIBALANCED_K4

    def test_k4_with_positive_triangles_is_not_antibalanced(self):
        """Test three positive circles alone do not make an antibalanced K4"""
        pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
        u = GainSignedGraph.from_specs(4, [link(a, b, -1 if (a, b) == (0, 1) else 1, i)
                                           for i, (a, b) in enumerate(pairs)])
        with pytest.raises(AssertionError):
            classify_hypercircuit(u, frozenset(range(6)))

    def test_two_positive_circles_of_no_known_shape(self):
        """Test positive loops on a negative digon match neither two-circle class"""
        u = GainSignedGraph.from_specs(2, [loop(0, 1, 1), loop(1, 1, 2), link(0, 1, 1, 0),
                                           link(0, 1, -1, 0)])
        with pytest.raises(AssertionError):
            classify_hypercircuit(u, frozenset(range(4)))

    def test_unknown_shape(self):
        """Test a set with three pieces is no hypercircuit"""
        u = GainSignedGraph.from_specs(1, [loose(1), loose(2), loose(3)])
        with pytest.raises(AssertionError):
            classify_hypercircuit(u, {0, 1, 2})
