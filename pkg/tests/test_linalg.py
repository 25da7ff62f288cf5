"""
Tests for the exact vector representation
"""

import random
from fractions import Fraction

import pytest

from gainmat.errors import EmbeddingError
from gainmat.gains import E_INF, GainSignedGraph, half, link, loop, loose
from gainmat.graph import closed_walk
from gainmat.groups import INTEGERS, RATIONALS, IntegersMod
from gainmat.linalg import (
    RATIONAL_FIELD, ExactMatrix, PrimeField, edge_vector, exact_rank, field_for_group, incidence_matrix,
    project_frame, rref, verify_rank_theorem, walk_vector,
)
from gainmat.matroid import GainSignedMatroid
from gainmat.signed import frame_rank
from gainmat.verify import random_instance


class TestFields:
    """Test cases for exact fields"""

    def test_rationals_for_integers(self):
        """Test Z and Q embed in the rationals"""
        assert field_for_group(INTEGERS) is RATIONAL_FIELD
        assert field_for_group(RATIONALS) is RATIONAL_FIELD

    def test_prime_modulus(self):
        """Test Zmod p embeds in F_p"""
        assert field_for_group(IntegersMod(5)) == PrimeField(5)

    def test_bad_moduli(self):
        """Test even and composite moduli have no field"""
        with pytest.raises(EmbeddingError):
            field_for_group(IntegersMod(2))
        with pytest.raises(EmbeddingError):
            field_for_group(IntegersMod(9))

    def test_mismatched_prime(self):
        """Test Zmod 5 does not embed in F_7"""
        with pytest.raises(EmbeddingError):
            field_for_group(IntegersMod(5), prime=7)

    def test_prime_field_embeds_fractions(self):
        """Test one half in F_5"""
        assert PrimeField(5).embed(Fraction(1, 2)) == 3
        with pytest.raises(EmbeddingError):
            PrimeField(5).embed(Fraction(1, 5))

    def test_characteristic_two(self):
        """Test F_2 is refused"""
        with pytest.raises(EmbeddingError):
            PrimeField(2)


class TestVectors:
    """Test cases for edge and walk vectors"""

    def test_positive_link(self):
        """Test a positive link gives e_w - e_v plus its gain"""
        u = GainSignedGraph.from_specs(2, [link(0, 1, 1, 3)])
        assert edge_vector(u, 0) == [3, -1, 1]

    def test_negative_loop(self):
        """Test a negative loop doubles its tau value"""
        u = GainSignedGraph.from_specs(1, [loop(0, -1, 1)])
        assert edge_vector(u, 0) == [1, 2]

    def test_positive_loop(self):
        """Test a positive loop leaves only its gain"""
        u = GainSignedGraph.from_specs(1, [loop(0, 1, 4)])
        assert edge_vector(u, 0) == [4, 0]

    def test_half_and_loose(self):
        """Test half and loose edge vectors"""
        u = GainSignedGraph.from_specs(2, [half(1, 2), loose(5)])
        assert edge_vector(u, 0) == [2, 0, 1]
        assert edge_vector(u, 1) == [5, 0, 0]

    def test_extra_point(self):
        """Test inf is the gain axis"""
        u = GainSignedGraph.from_specs(2, [])
        assert edge_vector(u, E_INF) == [1, 0, 0]

    def test_closed_walk_vector(self):
        """Test a positive closed walk leaves its gain on the gain axis"""
        u = GainSignedGraph.from_specs(3, [link(0, 1, 1, 1), link(1, 2, 1, 2), link(0, 2, 1, 5)])
        assert walk_vector(u, closed_walk(u.graph, {0, 1, 2}, 0)) == [-2, 0, 0, 0]


class TestRanks:
    """Test cases for exact ranks"""

    def test_negative_triangle(self):
        """Test the negative triangle vectors are independent"""
        u = GainSignedGraph.from_specs(3, [link(0, 1, -1, 1), link(1, 2, -1, 1), link(0, 2, -1, 1)])
        assert exact_rank(incidence_matrix(u)) == 3

    def test_frame_projection(self):
        """Test dropping the gain row gives the frame rank"""
        u = GainSignedGraph.from_specs(3, [link(0, 1, 1, 1), link(1, 2, 1, 1), link(0, 2, 1, 7), half(2)])
        m = incidence_matrix(u)
        assert exact_rank(project_frame(m)) == frame_rank(u.sg, u.graph.edge_ids)

    def test_select(self):
        """Test column selection by edge id"""
        u = GainSignedGraph.from_specs(2, [link(0, 1, 1, 0), link(0, 1, 1, 0), link(0, 1, 1, 1)])
        m = incidence_matrix(u)
        assert exact_rank(m.select({0, 1})) == 1
        assert exact_rank(m.select({0, 2})) == 2
        assert exact_rank(m.select(set())) == 0

    def test_rref(self):
        """Test reduced row echelon form"""
        assert rref([[1, 2], [2, 4]]) == [(1, 2)]
        assert rref([[0, 2, 4], [1, 1, 1]]) == [(1, 0, -1), (0, 1, 2)]

    def test_rref_with_fractions(self):
        """Test rational entries reduce exactly"""
        assert rref([[Fraction(1, 2), Fraction(1, 3)]]) == [(1, Fraction(2, 3))]
        assert rref([[2, 1], [4, 3]]) == [(1, 0), (0, 1)]
        assert rref([]) == []

    def test_rational_rank(self):
        """Test rows scaled by a fraction are dependent"""
        assert exact_rank(ExactMatrix(RATIONAL_FIELD, [[Fraction(1, 2), 1], [1, 2]])) == 1
        assert exact_rank(ExactMatrix(RATIONAL_FIELD, [[Fraction(1, 3), 1], [1, 2]])) == 2

    def test_prime_field_rank(self):
        """Test a matrix singular mod 3 but not over Q"""
        rows = [[1, 2], [2, 1]]
        assert exact_rank(ExactMatrix(PrimeField(3), rows)) == 1
        assert exact_rank(ExactMatrix(RATIONAL_FIELD, rows)) == 2


@pytest.mark.oracle
class TestRankTheorem:
    """Test cases comparing combinatorial and matrix ranks"""

    def test_random_instances(self):
        """Test random integer instances in both matroids"""
        rng = random.Random(7)
        for _ in range(15):
            u = random_instance(rng, n=3, m=5)
            for extended in (False, True):
                report = verify_rank_theorem(GainSignedMatroid(u, extended))
                assert report.passed, report.mismatches

    def test_prime_modulus_instances(self):
        """Test random Zmod 5 instances"""
        rng = random.Random(3)
        for _ in range(10):
            u = random_instance(rng, n=3, m=5, group=IntegersMod(5))
            assert verify_rank_theorem(GainSignedMatroid(u, True)).passed

    def test_wrong_field_is_detected(self):
        """Test gain 3 vanishes in F_3 and the ranks disagree"""
        u = GainSignedGraph.from_specs(2, [link(0, 1, 1, 0), link(0, 1, 1, 3)])
        report = verify_rank_theorem(GainSignedMatroid(u), field=PrimeField(3))
        assert not report.passed
        assert report.mismatches[0] == (frozenset({0, 1}), 2, 1)

    def test_sampled_subsets(self):
        """Test sampling subsets"""
        u = GainSignedGraph.from_specs(2, [link(0, 1, 1, 0), link(0, 1, -1, 1), half(0, 1)])
        report = verify_rank_theorem(GainSignedMatroid(u), 'sample', samples=10, rng=random.Random(2))
        assert report.passed
        assert report.checked == 10
