"""
gainmat - Matroids of gain signed graphs

Rank, closure, flats, circuits and minors of the matroid of a gain signed
graph with gains in an abelian group, an exact linear-algebra oracle for
it, and the affinographic hyperplane arrangements, chromatic polynomials
and polytope dimensions it governs.
"""

__version__ = '1.0.0'
__author__ = 'gainmat contributors'

from .arrangement import FamilySpec, build_arrangement, chromatic_polynomials, count_regions, generate_family
from .errors import GainMatError
from .gains import E_INF, GainSignedGraph, half, link, loop, loose
from .groups import INTEGERS, RATIONALS, IntegersMod
from .instance import dumps, load, loads
from .matroid import GainSignedMatroid
from .minors import contract, delete, minor
from .polytope import PolytopeQuery, polytope_dimension

__all__ = [
    'E_INF',
    'FamilySpec',
    'GainMatError',
    'GainSignedGraph',
    'GainSignedMatroid',
    'INTEGERS',
    'IntegersMod',
    'PolytopeQuery',
    'RATIONALS',
    'build_arrangement',
    'chromatic_polynomials',
    'contract',
    'count_regions',
    'delete',
    'dumps',
    'generate_family',
    'half',
    'link',
    'load',
    'loads',
    'loop',
    'loose',
    'minor',
    'polytope_dimension',
]
