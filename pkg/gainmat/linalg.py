"""
Exact vector representation of a gain signed graph

Edge e becomes z(e) in K^(1+n): row 0 carries the gain, row 1 + i the
orientation at vertex i. The extra point is (1, 0, ..., 0). Ranks are exact,
over the rationals or over an odd prime field.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
from typing import Any, Iterable, List, Optional, Sequence, Tuple

from sympy import GF, ZZ, Matrix, ilcm, isprime
from sympy.polys.matrices import DomainMatrix

from .errors import EmbeddingError
from .gains import E_INF, GainSignedGraph
from .graph import Walk, walk_vertices
from .groups import AbelianGroup, Integers, IntegersMod, Rationals


class RationalField:
    """The rationals, as Fraction"""

    name = 'Q'
    characteristic = 0

    def embed(self, value: Any) -> Fraction:
        return Fraction(value)

    def zero(self) -> Fraction:
        return Fraction(0)

    def reduce(self, a):
        return Fraction(a)

    def __repr__(self):
        return 'RationalField()'


class PrimeField:
    """Integers modulo an odd prime p"""

    def __init__(self, p: int):
        if isinstance(p, bool) or not isinstance(p, int) or p == 2 or not isprime(p):
            raise EmbeddingError(f'modulus {p!r} is not an odd prime')
        self.p = p
        self.characteristic = p
        self.name = f'F{p}'

    def embed(self, value: Any) -> int:
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise EmbeddingError(f'{value} has no image mod {self.p}')
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def zero(self) -> int:
        return 0

    def reduce(self, a):
        return a % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(('PrimeField', self.p))

    def __repr__(self):
        return f'PrimeField({self.p})'


RATIONAL_FIELD = RationalField()


def field_for_group(group: AbelianGroup, prime: Optional[int] = None):
    """
    The exact field a gain group embeds in: the rationals for Z and Q, the
    prime field for Zmod p with p an odd prime.

    Raises:
        EmbeddingError: For even or composite moduli, or a prime that does not
            match the group
    """
    if isinstance(group, (Integers, Rationals)):
        if prime is not None:
            return PrimeField(prime)
        return RATIONAL_FIELD
    if isinstance(group, IntegersMod):
        if group.m == 2 or not isprime(group.m):
            raise EmbeddingError(f'{group} does not embed in a field of characteristic other than 2')
        if prime is not None and prime != group.m:
            raise EmbeddingError(f'{group} does not embed in F{prime}')
        return PrimeField(group.m)
    raise EmbeddingError(f'no exact field for group {group}')


@dataclass
class ExactMatrix:
    """Rows of exact scalars; `labels` names the columns (edge ids, E_INF for the extra point)"""
    field: Any
    rows: List[List[Any]]
    labels: Tuple[int, ...] = ()

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else len(self.labels))

    def column(self, j: int) -> List[Any]:
        return [row[j] for row in self.rows]

    def select(self, labels: Iterable[int]) -> 'ExactMatrix':
        """Column submatrix for the given labels, in label order"""
        index = {label: j for j, label in enumerate(self.labels)}
        chosen = [index[label] for label in sorted(labels)]
        return ExactMatrix(self.field, [[row[j] for j in chosen] for row in self.rows],
                           tuple(self.labels[j] for j in chosen))


def edge_vector(u: GainSignedGraph, e: int, field=RATIONAL_FIELD) -> List[Any]:
    """
    z(e) = phi(e) e0 + tau(v, e) e_v + tau(w, e) e_w; a loop adds both end
    values into one row, so a negative loop gives +-2.
    """
    vector = [field.zero()] * (1 + u.n)
    if e == E_INF:
        vector[0] = field.embed(1)
        return vector
    edge = u.graph.edge(e)
    vector[0] = field.embed(u.gain(e))
    for end in edge.ends:
        vector[1 + end.vertex] = field.reduce(vector[1 + end.vertex] + u.tau(e, end.slot))
    return vector


def incidence_matrix(u: GainSignedGraph, s: Optional[Iterable[int]] = None,
                     field=RATIONAL_FIELD) -> ExactMatrix:
    """Columns z(e) for e in s (default: every edge), in increasing id order"""
    labels = tuple(sorted(u.graph.edge_ids if s is None else frozenset(s)))
    columns = [edge_vector(u, e, field) for e in labels]
    rows = [[column[i] for column in columns] for i in range(1 + u.n)]
    return ExactMatrix(field, rows, labels)


def project_frame(m: ExactMatrix) -> ExactMatrix:
    """Drop the gain row, leaving the signed-graph representation"""
    return ExactMatrix(m.field, [list(row) for row in m.rows[1:]], m.labels)


def _integer_rows(rows: Sequence[Sequence[Any]]) -> List[List[int]]:
    """Scale each rational row by its common denominator"""
    scaled = []
    for row in rows:
        row = [Fraction(x) for x in row]
        d = int(reduce(ilcm, (x.denominator for x in row), 1))
        scaled.append([int(x * d) for x in row])
    return scaled


def _domain_matrix(field, rows: Sequence[Sequence[Any]]) -> DomainMatrix:
    if isinstance(field, PrimeField):
        return DomainMatrix.from_Matrix(Matrix(rows)).convert_to(GF(field.p))
    return DomainMatrix.from_Matrix(Matrix(_integer_rows(rows))).convert_to(ZZ)


def exact_rank(m: ExactMatrix) -> int:
    """Rank over the matrix field; fraction-free over ZZ for the rationals"""
    if not m.rows or not m.rows[0]:
        return 0
    dm = _domain_matrix(m.field, m.rows)
    if isinstance(m.field, PrimeField):
        return dm.rank()
    return len(dm.rref_den()[2])


def rref(rows: Sequence[Sequence[Any]]) -> List[Tuple[Fraction, ...]]:
    """Reduced row echelon form over the rationals, zero rows dropped"""
    if not rows or not rows[0]:
        return []
    reduced, den, pivots = _domain_matrix(RATIONAL_FIELD, rows).rref_den()
    den = int(den)
    return [tuple(Fraction(int(x), den) for x in row)
            for row in reduced.to_list()[:len(pivots)]]


def walk_vector(u: GainSignedGraph, w: Walk, field=RATIONAL_FIELD) -> List[Any]:
    """
    z(W): each step adds sigma(W_0,i-1) times z of the step's edge as
    oriented away from u_{i-1}, that is with tau(u_{i-1}, e_i) = -1.
    An initial half edge adds its own vector oriented into the walk, a
    terminal one its vector scaled by -sigma of the walk before it.
    """
    walk_vertices(u.graph, w)
    total = [field.zero()] * (1 + u.n)

    def add(vector, scale):
        for i, x in enumerate(vector):
            total[i] = field.reduce(total[i] + scale * x)

    if w.head is not None:
        add(edge_vector(u, w.head, field), u.tau(w.head, 0))
    running = 1
    for step in w.steps:
        add(edge_vector(u, step.edge, field), -running * u.tau(step.edge, step.slot))
        running *= u.sign(step.edge)
    if w.tail is not None:
        add(edge_vector(u, w.tail, field), -running * u.tau(w.tail, 0))
    return total


@dataclass(frozen=True)
class RankTheoremReport:
    passed: bool
    checked: int
    mismatches: Tuple[Tuple[frozenset, int, int], ...] = ()


def verify_rank_theorem(matroid, subsets: str = 'all', samples: int = 200,
                        rng: Optional[random.Random] = None, field=None,
                        max_mismatches: int = 5) -> RankTheoremReport:
    """
    Compare the combinatorial rank with the exact rank of z(S).

    Args:
        matroid: GainSignedMatroid, extended or not
        subsets: 'all' subsets of the ground set, or a random 'sample'
        samples: Number of sampled subsets
        rng: Random source for sampling
        field: Exact field (default: the one the gain group embeds in)
        max_mismatches: Stop after this many disagreements

    Returns:
        RankTheoremReport listing (S, combinatorial rank, matrix rank)
    """
    u = matroid.u
    field = field or field_for_group(u.group)
    ground = sorted(matroid.ground_set)
    full = incidence_matrix(u, ground, field)
    if subsets == 'all':
        chosen = (frozenset(c) for size in range(len(ground) + 1) for c in combinations(ground, size))
    elif subsets == 'sample':
        rng = rng or random.Random(0)
        chosen = (frozenset(e for e in ground if rng.random() < 0.5) for _ in range(samples))
    else:
        raise ValueError(f'unknown subset mode {subsets!r}')
    checked = 0
    mismatches = []
    for s in chosen:
        checked += 1
        combinatorial = matroid.rank(s)
        algebraic = exact_rank(full.select(s))
        if combinatorial != algebraic:
            mismatches.append((s, combinatorial, algebraic))
            if len(mismatches) >= max_mismatches:
                break
    return RankTheoremReport(not mismatches, checked, tuple(mismatches))
