"""
Affinographic hyperplane arrangements

Edge e with ends at x_i, x_j gives the hyperplane
tau(v_i, e) x_i + tau(v_j, e) x_j = -phi(e). A half edge gives
tau x_i = -phi(e); a loose edge gives 0 = -phi(e), the whole space when
neutral and the empty set otherwise.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations, product
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from sympy import Poly, Symbol, ZZ

from .config import GainmatConfig
from .errors import BudgetExceeded, DegenerateArrangementError, EmbeddingError, GainMatError
from .gains import E_INF, EdgeSpec, GainSignedGraph, half, is_hyperbalanced, link, loop
from .graph import EdgeKind
from .groups import INTEGERS, Integers, Rationals
from .linalg import rref
from .matroid import GainSignedMatroid
from .signed import balanced_components, frame_rank


lam = Symbol('lam')


class HyperplaneKind(str, Enum):
    PROPER = 'proper'
    DEGENERATE = 'degenerate'
    PHANTOM = 'phantom'
    INFINITE = 'infinite'


@dataclass(frozen=True)
class Hyperplane:
    """sum(coefficients[i] * x_i) = constant"""
    edge: int
    coefficients: Tuple[Fraction, ...]
    constant: Fraction
    kind: HyperplaneKind

    def describe(self) -> str:
        if self.kind is HyperplaneKind.INFINITE:
            return 'h_inf'
        terms = []
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            sign = '-' if a < 0 else '+'
            size = '' if abs(a) == 1 else f'{abs(a)}*'
            terms.append(f'{sign} {size}x{i}')
        left = ' '.join(terms).lstrip('+ ') if terms else '0'
        if left.startswith('- '):
            left = '-' + left[2:]
        return f'{left} = {self.constant}'


def _real_gain(u: GainSignedGraph, e: int) -> Fraction:
    if not isinstance(u.group, (Integers, Rationals)):
        raise EmbeddingError(f'gains in {u.group} are not real numbers')
    return Fraction(u.gain(e))


def build_arrangement(u: GainSignedGraph, projective: bool = False) -> List[Hyperplane]:
    """
    One hyperplane per edge, in edge id order; `projective` appends the
    infinite hyperplane.

    Raises:
        EmbeddingError: If the gains are not rational numbers
    """
    hyperplanes = []
    for edge in sorted(u.graph.edges, key=lambda e: e.id):
        coefficients = [Fraction(0)] * u.n
        for end in edge.ends:
            coefficients[end.vertex] += u.tau(edge.id, end.slot)
        constant = -_real_gain(u, edge.id)
        if any(coefficients):
            kind = HyperplaneKind.PROPER
        elif constant == 0:
            kind = HyperplaneKind.DEGENERATE
        else:
            kind = HyperplaneKind.PHANTOM
        hyperplanes.append(Hyperplane(edge.id, tuple(coefficients), constant, kind))
    if projective:
        hyperplanes.append(Hyperplane(E_INF, (Fraction(0),) * u.n, Fraction(1), HyperplaneKind.INFINITE))
    return hyperplanes


# -- families ------------------------------------------------------------------

FAMILIES = (
    'shi', 'catalan', 'linial', 'sign-symmetric-shi', 'shi-threshold',
    'linial-threshold', 'catalan-threshold', 'generalized-threshold', 'custom-deformation',
)

SIGN_PATTERNS = ('positive', 'both-loops', 'both', 'negative')


@dataclass(frozen=True)
class FamilySpec:
    """
    A named affinographic family on n vertices. k and l give the gain
    window [-k, l] for the generalized threshold and custom deformation
    families; sign_pattern picks the custom deformation's edge signs.
    """
    family: str
    n: int
    k: int = 0
    l: int = 0
    sign_pattern: str = 'positive'


def _pairs(n: int):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _family_specs(spec: FamilySpec) -> List[EdgeSpec]:
    n = spec.n
    window = list(range(-spec.k, spec.l + 1))
    family = spec.family
    if family == 'shi':
        return [link(i, j, 1, g) for i, j in _pairs(n) for g in (0, 1)]
    if family == 'catalan':
        return [link(i, j, 1, g) for i, j in _pairs(n) for g in (-1, 0, 1)]
    if family == 'linial':
        return [link(i, j, 1, 1) for i, j in _pairs(n)]
    if family == 'sign-symmetric-shi':
        return [link(i, j, s, g) for i, j in _pairs(n) for s in (1, -1) for g in (0, 1)]
    if family == 'shi-threshold':
        return [link(i, j, -1, g) for i, j in _pairs(n) for g in (0, 1)]
    if family == 'linial-threshold':
        return ([link(i, j, -1, 1) for i, j in _pairs(n)]
                + [half(i, g) for i in range(n) for g in (0, 1)])
    if family == 'catalan-threshold':
        return [link(i, j, -1, g) for i, j in _pairs(n) for g in (-1, 0, 1)]
    if family == 'generalized-threshold':
        return [link(i, j, -1, g) for i, j in _pairs(n) for g in window]
    if family == 'custom-deformation':
        pattern = spec.sign_pattern
        if pattern not in SIGN_PATTERNS:
            raise GainMatError(f'Unknown sign pattern: {pattern!r}. Available: {", ".join(SIGN_PATTERNS)}')
        signs = {'positive': (1,), 'negative': (-1,)}.get(pattern, (1, -1))
        specs = [link(i, j, s, g) for i, j in _pairs(n) for s in signs for g in window]
        if pattern == 'both-loops':
            specs += [loop(i, -1, g) for i in range(n) for g in window]
        return specs
    raise GainMatError(f'Unknown family: {family!r}. Available: {", ".join(FAMILIES)}')


def generate_family(spec: FamilySpec) -> GainSignedGraph:
    """
    Gain signed graph of a named family, edges in (i, j, sign, gain) order.

    Raises:
        GainMatError: For an unknown family, n < 1 or an empty window
    """
    if isinstance(spec.n, bool) or not isinstance(spec.n, int) or spec.n < 1:
        raise GainMatError(f'family needs n >= 1, got {spec.n!r}')
    if spec.k < 0 or spec.l < 0:
        raise GainMatError(f'gain window [-{spec.k}, {spec.l}] must contain 0')
    return GainSignedGraph.from_specs(spec.n, _family_specs(spec), INTEGERS)


# -- polynomials ---------------------------------------------------------------

class ChromaticPolynomials(NamedTuple):
    chi: Poly
    chi_balanced: Poly
    chi_infinity: Poly


def _poly(coefficients: Dict[int, int]) -> Poly:
    top = max(coefficients, default=0)
    return Poly([coefficients.get(d, 0) for d in range(top, -1, -1)], lam, domain=ZZ)


def _zero() -> Poly:
    return Poly(0, lam, domain=ZZ)


def _has_neutral_loose(u: GainSignedGraph) -> bool:
    return any(edge.kind is EdgeKind.LOOSE and u.group.is_zero(u.gain(edge.id))
               for edge in u.graph.edges)


def _guard(u: GainSignedGraph, config: Optional[GainmatConfig]):
    limit = (config or GainmatConfig()).get('max_subset_edges')
    if len(u.graph.edges) > limit:
        raise BudgetExceeded('subset expansion', limit, len(u.graph.edges))


def chromatic_polynomials(u: GainSignedGraph, config: Optional[GainmatConfig] = None) -> ChromaticPolynomials:
    """
    chi and chi^b by expansion over all edge subsets S:
    (-1)^|S| lam^(n - rank S), chi^b over hyperbalanced S only. chi_inf is the
    characteristic polynomial of the central arrangement in dimension 1 + n,
    (-1)^|S| lam^(n + 1 - rank S) over S and S + e_inf, which stays a
    polynomial when no component is balanced. All three are 0 when a
    neutral loose edge exists.
    """
    _guard(u, config)
    if _has_neutral_loose(u):
        return ChromaticPolynomials(_zero(), _zero(), _zero())
    n = u.n
    chi: Dict[int, int] = {}
    balanced: Dict[int, int] = {}
    infinity: Dict[int, int] = {}
    ground = sorted(u.graph.edge_ids)
    for size in range(len(ground) + 1):
        sign = -1 if size % 2 else 1
        for combo in combinations(ground, size):
            frame = frame_rank(u.sg, combo)
            hyperbalanced = is_hyperbalanced(u, combo)
            r = frame if hyperbalanced else frame + 1
            chi[n - r] = chi.get(n - r, 0) + sign
            infinity[n + 1 - r] = infinity.get(n + 1 - r, 0) + sign
            infinity[n - frame] = infinity.get(n - frame, 0) - sign
            if hyperbalanced:
                balanced[n - r] = balanced.get(n - r, 0) + sign
    return ChromaticPolynomials(_poly(chi), _poly(balanced), _poly(infinity))


def _mobius_polynomial(matroid: GainSignedMatroid, hyperbalanced_only: bool, shift: int = 0) -> Poly:
    flats = [f for f, _ in matroid.flats(hyperbalanced_only=hyperbalanced_only)]
    if flats and flats[0]:
        return _zero()
    mu: Dict[frozenset, int] = {}
    coefficients: Dict[int, int] = {}
    n = matroid.u.n
    for flat in flats:
        below = [g for g in mu if g < flat]
        mu[flat] = 1 if not flat else -sum(mu[g] for g in below)
        degree = n + shift - matroid.rank(flat)
        coefficients[degree] = coefficients.get(degree, 0) + mu[flat]
    return _poly(coefficients)


def chromatic_by_flats(u: GainSignedGraph, config: Optional[GainmatConfig] = None) -> ChromaticPolynomials:
    """Same polynomials from the Moebius function of the flat (semi)lattices"""
    if _has_neutral_loose(u):
        return ChromaticPolynomials(_zero(), _zero(), _zero())
    plain = GainSignedMatroid(u, False, config)
    extended = GainSignedMatroid(u, True, config)
    return ChromaticPolynomials(
        _mobius_polynomial(plain, False),
        _mobius_polynomial(plain, True),
        _mobius_polynomial(extended, False, shift=1),
    )


# -- regions -------------------------------------------------------------------

@dataclass(frozen=True)
class RegionCount:
    regions: int
    bounded_regions: int
    relatively_bounded_regions: int
    regions_infinity: int


def count_regions(u: GainSignedGraph, config: Optional[GainmatConfig] = None) -> RegionCount:
    """
    Region counts of the real arrangement from its chromatic polynomials:
    (-1)^n chi^b(-1) regions; (-1)^r chi^b(1) regions bounded modulo the
    lineality space, r the frame rank of E, which are bounded outright when
    the arrangement is essential; (-1)^(n+1) chi_inf(-1) regions of the
    central arrangement in dimension 1 + n.

    Raises:
        EmbeddingError: If the gains are not real
        DegenerateArrangementError: If some hyperplane is the whole space
    """
    hyperplanes = build_arrangement(u)
    degenerate = [h.edge for h in hyperplanes
                  if h.kind is HyperplaneKind.DEGENERATE]
    if degenerate:
        raise DegenerateArrangementError(f'edges {degenerate} give degenerate hyperplanes')
    polys = chromatic_polynomials(u, config)
    n = u.n
    edges = u.graph.edge_ids
    rank = frame_rank(u.sg, edges)
    relative = (-1) ** rank * int(polys.chi_balanced.eval(1))
    essential = balanced_components(u.sg, edges).bcount == 0
    return RegionCount(
        regions=(-1) ** n * int(polys.chi_balanced.eval(-1)),
        bounded_regions=relative if essential else 0,
        relatively_bounded_regions=relative,
        regions_infinity=(-1) ** (n + 1) * int(polys.chi_infinity.eval(-1)),
    )


# -- the affine intersection semilattice ----------------------------------------

def _system(hyperplanes: Sequence[Hyperplane]):
    return [list(h.coefficients) + [h.constant] for h in hyperplanes]


def _intersect(hyperplanes: Sequence[Hyperplane], n: int) -> Optional[Tuple[Tuple[Fraction, ...], ...]]:
    """Canonical RREF of the augmented system, or None if the intersection is empty"""
    if not hyperplanes:
        return ()
    reduced = rref(_system(hyperplanes))
    for row in reduced:
        if all(x == 0 for x in row[:n]) and row[n] != 0:
            return None
    return tuple(reduced)


def intersection_semilattice(hyperplanes: Sequence[Hyperplane], n: int,
                             limit: int = 16) -> Dict[Tuple, int]:
    """
    Every nonempty intersection of a subfamily, keyed by its canonical
    reduced echelon system, mapped to its dimension. The infinite
    hyperplane is skipped.
    """
    usable = [h for h in hyperplanes if h.kind is not HyperplaneKind.INFINITE]
    if len(usable) > limit:
        raise BudgetExceeded('intersection semilattice', limit, len(usable))
    flats: Dict[Tuple, int] = {}
    for size in range(len(usable) + 1):
        for combo in combinations(usable, size):
            key = _intersect(combo, n)
            if key is not None:
                flats[key] = n - len(key)
    return flats


def affine_characteristic_polynomial(hyperplanes: Sequence[Hyperplane], n: int,
                                     limit: int = 16) -> Poly:
    """Sum over subfamilies with nonempty intersection of (-1)^|S| lam^dim"""
    usable = [h for h in hyperplanes if h.kind is not HyperplaneKind.INFINITE]
    if len(usable) > limit:
        raise BudgetExceeded('characteristic polynomial', limit, len(usable))
    coefficients: Dict[int, int] = {}
    for size in range(len(usable) + 1):
        sign = -1 if size % 2 else 1
        for combo in combinations(usable, size):
            key = _intersect(combo, n)
            if key is not None:
                dimension = n - len(key)
                coefficients[dimension] = coefficients.get(dimension, 0) + sign
    return _poly(coefficients)


def sample_regions(hyperplanes: Iterable[Hyperplane], n: int, radius: int = 4,
                   steps_per_unit: int = 6) -> int:
    """
    Count sign vectors of grid points lying on no hyperplane. Regions too
    thin for the grid are missed, so this is only a sanity check.
    """
    proper = [h for h in hyperplanes if h.kind is HyperplaneKind.PROPER]
    offset = Fraction(1, 2 * steps_per_unit + 1)
    axis = [Fraction(i, steps_per_unit) + offset
            for i in range(-radius * steps_per_unit, radius * steps_per_unit + 1)]
    seen = set()
    for point in product(axis, repeat=n):
        vector = []
        for h in proper:
            value = sum(a * x for a, x in zip(h.coefficients, point)) - h.constant
            if value == 0:
                break
            vector.append(value > 0)
        else:
            seen.add(tuple(vector))
    return len(seen)
