"""
The matroid M(U) of a gain signed graph and its extension M_inf(U)

rank(S) = n - b(S) + delta(S), where b counts sign-balanced components of
(V, S) and delta is 0 exactly when S is hyperbalanced. A set holding the
extra point is hyperfrustrated.
"""

import random
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Any, Callable, Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

from .config import GainmatConfig
from .errors import BudgetExceeded
from .gains import (
    E_INF, GainSignedGraph, edge_sets_of_potentials, hyperbalance_witness,
    is_hyperbalanced, is_neutral, lift_to_cover,
)
from .graph import EdgeKind, EdgeSet
from .groups import AbelianGroup
from .signed import FrameBasis, balanced_components, frame_basis, frame_closure
from .taxonomy import HypercircuitClass, IndependenceCertificate, classify_hypercircuit, independence_certificate


class FlatKind(str, Enum):
    HYPERBALANCED = 'hyperbalanced'
    HYPERFRUSTRATED = 'hyperfrustrated'


@dataclass(frozen=True)
class FlatDescriptor:
    """
    Data (U, pi, zeta, theta) regenerating a closed set.

    A hyperfrustrated flat is [E:U] + [E(zeta):pi] + E^0, plus the extra
    point in the extended matroid. A hyperbalanced flat is
    [E(theta):U] + [E(theta,zeta):pi] + E^00. theta lives in `group`, the
    cover of the gain group (Q over Z, Zmod 2m over Zmod m) when a
    potential needs halves the gain group lacks.
    """
    unbalanced: FrozenSet[int]
    partition: Tuple[FrozenSet[int], ...]
    zeta: Mapping[int, int]
    theta: Optional[Mapping[int, Any]]
    kind: FlatKind
    group: Optional[AbelianGroup] = None

    def edge_set(self, u: GainSignedGraph, extended: bool = False) -> EdgeSet:
        g = u.graph
        block_of = {v: i for i, block in enumerate(self.partition) for v in block}

        def inside_u(edge):
            return bool(edge.ends) and all(v in self.unbalanced for v in edge.vertices)

        def inside_block(edge):
            if not edge.is_ordinary or not all(v in block_of for v in edge.vertices):
                return False
            a, b = edge.vertices
            return block_of[a] == block_of[b] and u.sign(edge.id) == self.zeta[a] * self.zeta[b]

        if self.kind is FlatKind.HYPERFRUSTRATED:
            chosen = {edge.id for edge in g.edges
                      if edge.kind is EdgeKind.LOOSE or inside_u(edge) or inside_block(edge)}
            if extended:
                chosen.add(E_INF)
            return frozenset(chosen)
        if self.theta is None:
            raise ValueError(f'no gain potential over {u.group} for this flat')
        lifted = u if self.group is None or self.group == u.group else lift_to_cover(u)
        if lifted is None or (self.group is not None and lifted.group != self.group):
            raise ValueError(f'theta over {self.group} does not fit gains over {u.group}')
        neutral = edge_sets_of_potentials(lifted, self.theta).neutral
        return frozenset(edge.id for edge in g.edges
                         if edge.id in neutral
                         and (edge.kind is EdgeKind.LOOSE or inside_u(edge) or inside_block(edge)))


@dataclass(frozen=True)
class AxiomReport:
    passed: bool
    checked: int
    axiom: Optional[str] = None
    witness: Optional[Tuple] = None


class GainSignedMatroid:
    """
    M(U) over the edge ids of a gain signed graph, or M_inf(U) when
    `extended` adds the extra point E_INF to the ground set.
    """

    def __init__(self, u: GainSignedGraph, extended: bool = False,
                 config: Optional[GainmatConfig] = None):
        self.u = u
        self.extended = extended
        self.config = config or GainmatConfig()
        self._ranks: Dict[FrozenSet[int], int] = {}

    @property
    def ground_set(self) -> EdgeSet:
        ground = self.u.graph.edge_ids
        return ground | {E_INF} if self.extended else ground

    def _check(self, s: Iterable[int]) -> Tuple[EdgeSet, bool]:
        s = frozenset(s)
        if E_INF in s and not self.extended:
            raise ValueError('the extra point belongs only to the extended matroid')
        return self.u.graph.check_subset(s - {E_INF}), E_INF in s

    def is_hyperbalanced(self, s: Iterable[int]) -> bool:
        edges, infinite = self._check(s)
        return not infinite and is_hyperbalanced(self.u, edges)

    def rank(self, s: Iterable[int]) -> int:
        s = frozenset(s)
        cached = self._ranks.get(s)
        if cached is not None:
            return cached
        edges, infinite = self._check(s)
        delta = 1 if infinite or not is_hyperbalanced(self.u, edges) else 0
        value = self.u.n - balanced_components(self.u.sg, edges).bcount + delta
        self._ranks[s] = value
        return value

    def nullity(self, s: Iterable[int]) -> int:
        s = frozenset(s)
        return len(s) - self.rank(s)

    def is_independent(self, s: Iterable[int]) -> bool:
        return self.certificate(s).independent

    def certificate(self, s: Iterable[int]) -> IndependenceCertificate:
        """
        Structural independence certificate, checked against the nullity.

        Raises:
            AssertionError: If the structure and the rank disagree
        """
        s = frozenset(s)
        self._check(s)
        certificate = independence_certificate(self.u, s)
        if certificate.independent != (self.nullity(s) == 0):
            raise AssertionError(
                f'edge set {_show(s)}: structure says independent={certificate.independent}, '
                f'nullity is {self.nullity(s)}'
            )
        return certificate

    def closure(self, s: Iterable[int]) -> EdgeSet:
        """Closure by the structural formulas for hyperbalanced and hyperfrustrated sets"""
        s = frozenset(s)
        edges, infinite = self._check(s)
        u = self.u
        if infinite or not is_hyperbalanced(u, edges):
            closed = frame_closure(u.sg, edges) | edges
            return closed | {E_INF} if self.extended else closed
        basis = frame_basis(u.sg, edges)
        structure = FrameBasis(u.sg, basis)
        closed = set(edges)
        for e in sorted(frame_closure(u.sg, edges) - edges):
            circuit = structure.fundamental_circuit(e)
            if circuit is not None and is_neutral(u, circuit):
                closed.add(e)
        return frozenset(closed)

    def rank_closure(self, s: Iterable[int]) -> EdgeSet:
        """Closure straight from the rank function: {e : rank(s + e) = rank(s)}"""
        s = frozenset(s)
        base = self.rank(s)
        return frozenset(e for e in self.ground_set if e in s or self.rank(s | {e}) == base)

    def flat_descriptor(self, flat: Iterable[int]) -> FlatDescriptor:
        flat = frozenset(flat)
        edges, infinite = self._check(flat)
        info = balanced_components(self.u.sg, edges)
        if infinite or not is_hyperbalanced(self.u, edges):
            return FlatDescriptor(info.unbalanced, info.pib, info.zeta, None, FlatKind.HYPERFRUSTRATED)
        group = self.u.group
        witness = hyperbalance_witness(self.u, edges)
        if witness is None:
            lifted = lift_to_cover(self.u)
            if lifted is not None:
                group = lifted.group
                witness = hyperbalance_witness(lifted, edges)
        theta = witness[1] if witness is not None else None
        return FlatDescriptor(info.unbalanced, info.pib, info.zeta, theta,
                              FlatKind.HYPERBALANCED, group if theta is not None else None)

    def _guard(self, what: str, limit_key: str):
        limit = self.config.get(limit_key)
        size = len(self.ground_set)
        if size > limit:
            raise BudgetExceeded(what, limit, size)

    def flats(self, hyperbalanced_only: bool = False) -> List[Tuple[EdgeSet, FlatDescriptor]]:
        """
        All closed sets, found by closing F + e from closure(empty set)
        outwards. Sorted by rank, then by edge ids.
        """
        self._guard('flats', 'max_subset_edges')
        ground = self.ground_set
        start = self.closure(frozenset())
        seen = {start}
        frontier = [start]
        while frontier:
            following = []
            for flat in frontier:
                for e in sorted(ground - flat):
                    bigger = self.closure(flat | {e})
                    if bigger not in seen:
                        seen.add(bigger)
                        following.append(bigger)
            frontier = following
        result = sorted(seen, key=lambda f: (self.rank(f), _order(f)))
        if hyperbalanced_only:
            result = [f for f in result if self.is_hyperbalanced(f)]
        return [(f, self.flat_descriptor(f)) for f in result]

    def circuits(self) -> List[Tuple[EdgeSet, HypercircuitClass]]:
        """Minimal dependent sets by size, each with its structural class"""
        self._guard('circuits', 'max_circuit_edges')
        ground = sorted(self.ground_set)
        found: List[EdgeSet] = []
        for size in range(1, len(ground) + 1):
            for combo in combinations(ground, size):
                candidate = frozenset(combo)
                if any(c <= candidate for c in found):
                    continue
                if self.rank(candidate) < size:
                    found.append(candidate)
        return [(c, classify_hypercircuit(self.u, c)) for c in found]

    def bases(self) -> List[EdgeSet]:
        self._guard('bases', 'max_subset_edges')
        full = self.rank(self.ground_set)
        return [frozenset(combo) for combo in combinations(sorted(self.ground_set), full)
                if self.rank(combo) == full]

    def coatoms(self) -> List[EdgeSet]:
        top = self.rank(self.ground_set)
        return [f for f, _ in self.flats() if self.rank(f) == top - 1]

    def cocircuits(self) -> List[EdgeSet]:
        ground = self.ground_set
        return sorted((ground - f for f in self.coatoms()), key=_order)

    def is_hyperbalancing(self, s: Iterable[int]) -> bool:
        """True if removing s leaves a hyperbalanced set"""
        return self.is_hyperbalanced(self.ground_set - frozenset(s))


def _order(s: Iterable[int]) -> Tuple[int, ...]:
    return tuple(sorted(s))


def _show(s: Iterable[int]) -> str:
    return '{' + ', '.join('inf' if e == E_INF else str(e) for e in sorted(s)) + '}'


def check_rank_axioms(rank: Callable[[FrozenSet[int]], int], ground: Iterable[int],
                      mode: str = 'exhaustive', samples: int = 500,
                      rng: Optional[random.Random] = None) -> AxiomReport:
    """
    Check R1 (rank of the empty set is 0), R2 (adding an element raises the
    rank by 0 or 1) and R3' (if rank(S+e) = rank(S+f) = rank(S) then
    rank(S+e+f) = rank(S)).

    Args:
        rank: Rank function on frozensets
        ground: Ground set
        mode: 'exhaustive' over every S, or 'sampled'
        samples: Number of random S in sampled mode
        rng: Random source for sampled mode

    Returns:
        AxiomReport with the first counterexample, if any
    """
    ground = sorted(ground)
    if rank(frozenset()) != 0:
        return AxiomReport(False, 1, 'R1', (frozenset(),))
    if mode == 'exhaustive':
        subsets = (frozenset(combo) for size in range(len(ground) + 1)
                   for combo in combinations(ground, size))
    elif mode == 'sampled':
        rng = rng or random.Random(0)
        subsets = (frozenset(e for e in ground if rng.random() < 0.5) for _ in range(samples))
    else:
        raise ValueError(f'unknown axiom mode {mode!r}')
    checked = 1
    for s in subsets:
        base = rank(s)
        outside = [e for e in ground if e not in s]
        level = []
        for e in outside:
            checked += 1
            step = rank(s | {e}) - base
            if step not in (0, 1):
                return AxiomReport(False, checked, 'R2', (s, e))
            if step == 0:
                level.append(e)
        for e, f in combinations(level, 2):
            checked += 1
            if rank(s | {e, f}) != base:
                return AxiomReport(False, checked, "R3'", (s, e, f))
    return AxiomReport(True, checked)
