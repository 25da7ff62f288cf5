"""
Tests for the matroid of a gain signed graph
"""

import random
from fractions import Fraction

import pytest

from gainmat.config import GainmatConfig
from gainmat.errors import BudgetExceeded
from gainmat.gains import E_INF, GainSignedGraph, half, link, loop, loose
from gainmat.groups import RATIONALS, IntegersMod
from gainmat.matroid import FlatKind, GainSignedMatroid, check_rank_axioms


def negative_triangle(gain=1, group=None):
    specs = [link(0, 1, -1, gain), link(1, 2, -1, gain), link(0, 2, -1, gain)]
    return GainSignedGraph.from_specs(3, specs, group) if group else GainSignedGraph.from_specs(3, specs)


def digon(a, b):
    return GainSignedGraph.from_specs(2, [link(0, 1, 1, a), link(0, 1, 1, b)])


class TestRank:
    """Test cases for rank = n - b + delta"""

    def test_negative_triangle(self):
        """Test the all-negative triangle with gain 1 has full rank"""
        assert GainSignedMatroid(negative_triangle()).rank({0, 1, 2}) == 3

    def test_neutral_digon(self):
        """Test a neutral digon has rank 1"""
        matroid = GainSignedMatroid(digon(0, 0))
        assert matroid.rank({0, 1}) == 1
        assert matroid.nullity({0, 1}) == 1

    def test_non_neutral_digon(self):
        """Test a non-neutral digon is independent"""
        matroid = GainSignedMatroid(digon(0, 1))
        assert matroid.rank({0, 1}) == 2
        assert matroid.is_independent({0, 1})

    def test_empty_set(self):
        """Test the empty set has rank 0"""
        assert GainSignedMatroid(digon(0, 1)).rank(set()) == 0

    def test_neutral_loose_edge_is_loop(self):
        """Test a neutral loose edge has rank 0"""
        matroid = GainSignedMatroid(GainSignedGraph.from_specs(1, [loose(0)]))
        assert matroid.rank({0}) == 0

    def test_non_neutral_loose_edge(self):
        """Test a non-neutral loose edge has rank 1"""
        matroid = GainSignedMatroid(GainSignedGraph.from_specs(1, [loose(3)]))
        assert matroid.rank({0}) == 1

    def test_half_edge(self):
        """Test a half edge raises the rank of its vertex"""
        matroid = GainSignedMatroid(GainSignedGraph.from_specs(2, [half(0, 5)]))
        assert matroid.rank({0}) == 1

    def test_extra_point(self):
        """Test inf behaves as a non-neutral loose edge"""
        matroid = GainSignedMatroid(digon(0, 0), extended=True)
        assert matroid.ground_set == frozenset({0, 1, E_INF})
        assert matroid.rank({E_INF}) == 1
        assert matroid.rank({0, 1, E_INF}) == 2

    def test_extra_point_needs_extension(self):
        """Test inf is rejected by the plain matroid"""
        with pytest.raises(ValueError):
            GainSignedMatroid(digon(0, 0)).rank({E_INF})

    def test_unknown_edge(self):
        """Test ids outside the ground set are rejected"""
        with pytest.raises(ValueError):
            GainSignedMatroid(digon(0, 0)).rank({7})


class TestClosure:
    """Test cases for structural closure"""

    def test_neutral_digon(self):
        """Test a neutral parallel edge lies in the closure"""
        assert GainSignedMatroid(digon(0, 0)).closure({0}) == frozenset({0, 1})

    def test_non_neutral_digon(self):
        """Test a non-neutral parallel edge stays out of the closure"""
        assert GainSignedMatroid(digon(0, 1)).closure({0}) == frozenset({0})

    def test_neutral_loose_edge_in_every_closure(self):
        """Test loops of the matroid lie in the closure of the empty set"""
        u = GainSignedGraph.from_specs(1, [loose(0), loose(1)])
        assert GainSignedMatroid(u).closure(set()) == frozenset({0})

    def test_hyperfrustrated_set(self):
        """Test a hyperfrustrated set spans its frame closure"""
        u = GainSignedGraph.from_specs(2, [link(0, 1, 1, 0), link(0, 1, 1, 1), link(0, 1, 1, 7), loose(2)])
        assert GainSignedMatroid(u).closure({0, 1}) == frozenset({0, 1, 2, 3})

    def test_extended_closure_adds_extra_point(self):
        """Test a hyperfrustrated set spans inf"""
        matroid = GainSignedMatroid(digon(0, 1), extended=True)
        assert matroid.closure({0, 1}) == frozenset({0, 1, E_INF})
        assert matroid.closure({E_INF}) == frozenset({E_INF})

    def test_closure_matches_rank(self):
        """Test the structural closure against the rank closure"""
        u = GainSignedGraph.from_specs(3, [link(0, 1, 1, 1), link(1, 2, -1, 0), loop(2, -1, 1), half(0, 1)])
        matroid = GainSignedMatroid(u, extended=True)
        for s in ({0}, {1, 2}, {0, 3}, {2, E_INF}, set()):
            assert matroid.closure(s) == matroid.rank_closure(s)


class TestEnumeration:
    """Test cases for flats, circuits, bases and cocircuits"""

    def test_flats_of_neutral_digon(self):
        """Test the two flats of a neutral digon"""
        flats = [f for f, _ in GainSignedMatroid(digon(0, 0)).flats()]
        assert flats == [frozenset(), frozenset({0, 1})]

    def test_flats_of_non_neutral_digon(self):
        """Test the four flats of a free matroid on two elements"""
        flats = [f for f, _ in GainSignedMatroid(digon(0, 1)).flats()]
        assert flats == [frozenset(), frozenset({0}), frozenset({1}), frozenset({0, 1})]

    def test_hyperbalanced_flats(self):
        """Test filtering to hyperbalanced flats"""
        flats = [f for f, _ in GainSignedMatroid(digon(0, 1)).flats(hyperbalanced_only=True)]
        assert flats == [frozenset(), frozenset({0}), frozenset({1})]

    def test_bases(self):
        """Test the bases of a neutral digon"""
        assert GainSignedMatroid(digon(0, 0)).bases() == [frozenset({0}), frozenset({1})]

    def test_coatoms(self):
        """Test the coatoms are the flats one rank below the top"""
        assert GainSignedMatroid(digon(0, 1)).coatoms() == [frozenset({0}), frozenset({1})]

    def test_cocircuits(self):
        """Test a neutral digon has a single cocircuit"""
        assert GainSignedMatroid(digon(0, 0)).cocircuits() == [frozenset({0, 1})]

    def test_budget(self):
        """Test enumeration refuses ground sets over the budget"""
        matroid = GainSignedMatroid(negative_triangle(), config=GainmatConfig(max_subset_edges=2))
        with pytest.raises(BudgetExceeded):
            matroid.flats()

    def test_is_hyperbalancing(self):
        """Test removing the odd edge out leaves a hyperbalanced set"""
        u = GainSignedGraph.from_specs(2, [link(0, 1, 1, 0), link(0, 1, 1, 0), link(0, 1, 1, 1)])
        matroid = GainSignedMatroid(u)
        assert matroid.is_hyperbalancing({2})
        assert not matroid.is_hyperbalancing({0})


class TestFlatDescriptor:
    """Test cases for flat descriptors"""

    def test_negative_triangle_needs_rationals(self):
        """Test the witness is lifted to the rationals"""
        u = negative_triangle()
        descriptor = GainSignedMatroid(u).flat_descriptor({0, 1, 2})
        assert descriptor.kind is FlatKind.HYPERBALANCED
        assert descriptor.group == RATIONALS
        assert descriptor.theta == {0: Fraction(-1, 2), 1: Fraction(-1, 2), 2: Fraction(-1, 2)}
        assert descriptor.edge_set(u) == frozenset({0, 1, 2})

    def test_hyperfrustrated_descriptor(self):
        """Test a hyperfrustrated flat regenerates from U, pi and zeta"""
        u = digon(0, 1)
        descriptor = GainSignedMatroid(u).flat_descriptor({0, 1})
        assert descriptor.kind is FlatKind.HYPERFRUSTRATED
        assert descriptor.partition == (frozenset({0, 1}),)
        assert descriptor.edge_set(u) == frozenset({0, 1})
        assert descriptor.edge_set(u, extended=True) == frozenset({0, 1, E_INF})

    def test_even_modulus_lifts_to_double(self):
        """Test a witness needing a half of 1 mod 4 is found mod 8"""
        u = negative_triangle(group=IntegersMod(4))
        descriptor = GainSignedMatroid(u).flat_descriptor({0, 1, 2})
        assert descriptor.group == IntegersMod(8)
        assert descriptor.theta is not None
        assert descriptor.edge_set(u) == frozenset({0, 1, 2})

    def test_odd_modulus_needs_no_lift(self):
        """Test 2 is invertible mod 5"""
        descriptor = GainSignedMatroid(negative_triangle(group=IntegersMod(5))).flat_descriptor({0, 1, 2})
        assert descriptor.group == IntegersMod(5)

    @pytest.mark.parametrize('group', [None, IntegersMod(4), IntegersMod(6), IntegersMod(2)])
    def test_descriptors_regenerate_every_flat(self, group):
        """Test edge_set round-trips each flat"""
        specs = [link(0, 1, 1, 1), link(1, 2, -1, 0), loop(2, -1, 1), loose(0), link(0, 2, -1, 3), half(1, 1)]
        u = GainSignedGraph.from_specs(3, specs, group) if group else GainSignedGraph.from_specs(3, specs)
        for extended in (False, True):
            matroid = GainSignedMatroid(u, extended=extended)
            for flat, descriptor in matroid.flats():
                assert descriptor.edge_set(u, extended) == flat


class TestRankAxioms:
    """Test cases for the rank axiom checker"""

    def test_matroid_passes(self):
        """Test a real rank function passes"""
        matroid = GainSignedMatroid(digon(0, 1), extended=True)
        report = check_rank_axioms(matroid.rank, matroid.ground_set)
        assert report.passed
        assert report.checked > 1

    def test_empty_set_rank(self):
        """Test R1 catches a nonzero empty rank"""
        report = check_rank_axioms(lambda s: 1, [0])
        assert not report.passed
        assert report.axiom == 'R1'

    def test_jump_by_two(self):
        """Test R2 catches a rank that jumps"""
        report = check_rank_axioms(lambda s: 2 * len(s), [0, 1])
        assert report.axiom == 'R2'
        assert report.witness == (frozenset(), 0)

    def test_submodularity(self):
        """Test R3' catches two spanned elements that are not jointly spanned"""
        report = check_rank_axioms(lambda s: 1 if s == frozenset({0, 1}) else 0, [0, 1])
        assert report.axiom == "R3'"

    def test_sampled_mode(self):
        """Test sampling also passes a real rank function"""
        matroid = GainSignedMatroid(negative_triangle())
        report = check_rank_axioms(matroid.rank, matroid.ground_set, 'sampled', 20, random.Random(1))
        assert report.passed

    def test_unknown_mode(self):
        """Test an unknown mode is rejected"""
        with pytest.raises(ValueError):
            check_rank_axioms(lambda s: len(s), [0], 'sometimes')
