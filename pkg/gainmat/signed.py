"""
Signed graphs: signs, orientations, balance, switching, and the frame
matroid primitives (rank, basis, fundamental sign circuits, closure)
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Mapping, NamedTuple, Optional, Tuple, Union

from .errors import GraphError, OrientationError, SignatureError
from .graph import (
    EdgeKind, EdgeSet, Forest, Graph, Walk, closed_walk, components,
    concat_walks, reverse_walk, spanning_forest, walk_vertices, Step,
)


SignSwitcher = Mapping[int, int]


@dataclass(frozen=True)
class SignedGraph:
    graph: Graph
    sigma: Mapping[int, int]

    def __post_init__(self):
        for edge in self.graph.edges:
            sign = self.sigma.get(edge.id)
            if sign not in (1, -1):
                raise SignatureError(f'edge {edge.id} needs sign +1 or -1, got {sign!r}')
            if edge.kind is EdgeKind.HALF and sign != -1:
                raise SignatureError(f'half edge {edge.id} must be negative')
            if edge.kind is EdgeKind.LOOSE and sign != 1:
                raise SignatureError(f'loose edge {edge.id} must be positive')
        extra = set(self.sigma) - self.graph.edge_ids
        if extra:
            raise SignatureError(f'signs given for unknown edges {sorted(extra)}')

    @property
    def n(self) -> int:
        return self.graph.n

    def sign(self, eid: int) -> int:
        return self.sigma[eid]


@dataclass(frozen=True)
class Orientation:
    """One value tau(v, e) in {+1, -1} per edge end, keyed by (edge id, slot)"""
    tau: Mapping[Tuple[int, int], int]

    def at(self, eid: int, slot: int) -> int:
        return self.tau[(eid, slot)]

    def validate(self, sg: SignedGraph):
        for edge in sg.graph.edges:
            for end in edge.ends:
                if self.tau.get((edge.id, end.slot)) not in (1, -1):
                    raise OrientationError(f'edge {edge.id} slot {end.slot} needs tau +1 or -1')
            if edge.is_ordinary and self.at(edge.id, 0) * self.at(edge.id, 1) != -sg.sign(edge.id):
                raise OrientationError(
                    f'edge {edge.id}: tau values {self.at(edge.id, 0)}, {self.at(edge.id, 1)} '
                    f'do not match sign {sg.sign(edge.id)}'
                )


def sign_of_walk(sg: SignedGraph, w: Walk) -> int:
    """Product of edge signs along w with multiplicity; half edges count -1"""
    walk_vertices(sg.graph, w)
    sign = 1
    for eid in w.edge_sequence():
        sign *= sg.sign(eid)
    return sign


def switch_signs(sg: SignedGraph, orientation: Orientation,
                 zeta: SignSwitcher) -> Tuple[SignedGraph, Orientation]:
    """Apply a sign switcher; vertices missing from zeta keep +1"""
    g = sg.graph
    sigma = {}
    tau = {}
    for edge in g.edges:
        sign = sg.sign(edge.id)
        if edge.is_ordinary:
            u, v = edge.vertices
            sign = zeta.get(u, 1) * sign * zeta.get(v, 1)
        sigma[edge.id] = sign
        for end in edge.ends:
            tau[(edge.id, end.slot)] = zeta.get(end.vertex, 1) * orientation.at(edge.id, end.slot)
    return SignedGraph(g, sigma), Orientation(tau)


def tree_potential(sg: SignedGraph, forest: Forest) -> Dict[int, int]:
    """Switcher on every vertex that makes each forest edge positive; roots get +1"""
    zeta = {}
    for block in forest.blocks():
        root = min(block)
        zeta[root] = 1
        for parent, child, eid in forest.bfs(root):
            zeta[child] = sg.sign(eid) * zeta[parent]
    return zeta


def _agrees(sg: SignedGraph, eid: int, zeta: SignSwitcher) -> bool:
    """True if an ordinary edge has sign zeta(v)zeta(w)"""
    u, v = sg.graph.edge(eid).vertices
    return sg.sign(eid) == zeta[u] * zeta[v]


class BalanceInfo(NamedTuple):
    bcount: int
    pib: Tuple[FrozenSet[int], ...]
    unbalanced: FrozenSet[int]
    zeta: Dict[int, int]
    blocks: Tuple[FrozenSet[int], ...]
    forest: EdgeSet


def balanced_components(sg: SignedGraph, s: Iterable[int]) -> BalanceInfo:
    """
    Balanced components of (V, s) by a switching search: find zeta making a
    spanning forest positive, then look for half edges and for non-forest
    edges whose sign disagrees with zeta.

    Returns:
        BalanceInfo with b(S), the partition pi_b(S), U(S), and the
        potential zeta restricted to V minus U
    """
    g = sg.graph
    s = g.check_subset(s)
    forest_edges = spanning_forest(g, s)
    zeta = tree_potential(sg, Forest(g, forest_edges))
    comps = components(g, s)
    block_of = comps.block_index()
    bad = set()
    for eid in s:
        edge = g.edge(eid)
        if edge.kind is EdgeKind.HALF:
            bad.add(block_of[edge.vertices[0]])
        elif edge.is_ordinary and not _agrees(sg, eid, zeta):
            bad.add(block_of[edge.vertices[0]])
    pib = tuple(block for i, block in enumerate(comps.blocks) if i not in bad)
    unbalanced = frozenset(v for i in bad for v in comps.blocks[i])
    balanced_zeta = {v: z for v, z in zeta.items() if v not in unbalanced}
    return BalanceInfo(len(pib), pib, unbalanced, balanced_zeta, comps.blocks, forest_edges)


def is_balanced(sg: SignedGraph, s: Iterable[int]) -> bool:
    return not balanced_components(sg, s).unbalanced


def frame_rank(sg: SignedGraph, s: Iterable[int]) -> int:
    return sg.n - balanced_components(sg, s).bcount


def frame_basis(sg: SignedGraph, s: Iterable[int]) -> EdgeSet:
    """Spanning forest of s plus the lowest-id unbalancing edge of each unbalanced component"""
    g = sg.graph
    s = g.check_subset(s)
    forest = spanning_forest(g, s)
    zeta = tree_potential(sg, Forest(g, forest))
    block_of = components(g, s).block_index()
    closing: Dict[int, int] = {}
    for eid in sorted(s - forest):
        edge = g.edge(eid)
        if edge.kind is EdgeKind.LOOSE:
            continue
        if edge.kind is EdgeKind.HALF or not _agrees(sg, eid, zeta):
            closing.setdefault(block_of[edge.vertices[0]], eid)
    return forest | frozenset(closing.values())


# -- sign circuits -------------------------------------------------------------

@dataclass(frozen=True)
class PositiveCircle:
    walk: Walk

    @property
    def edges(self) -> EdgeSet:
        return frozenset(step.edge for step in self.walk.steps)


@dataclass(frozen=True)
class LooseEdge:
    edge: int

    @property
    def edges(self) -> EdgeSet:
        return frozenset([self.edge])


@dataclass(frozen=True)
class NegativeFigure:
    """A half edge at `root`, or a negative circle traversed from `root`"""
    root: int
    half_edge: Optional[int] = None
    walk: Optional[Walk] = None

    @property
    def edges(self) -> EdgeSet:
        if self.half_edge is not None:
            return frozenset([self.half_edge])
        return frozenset(step.edge for step in self.walk.steps)


@dataclass(frozen=True)
class Handcuff:
    fig1: NegativeFigure
    fig2: NegativeFigure
    path: Walk

    @property
    def edges(self) -> EdgeSet:
        return self.fig1.edges | self.fig2.edges | frozenset(step.edge for step in self.path.steps)


SignCircuit = Union[PositiveCircle, LooseEdge, Handcuff]


class _Figure(NamedTuple):
    edges: EdgeSet
    vertices: FrozenSet[int]
    half_edge: Optional[int]


class FrameBasis:
    """
    An independent set of the frame matroid, prepared for fundamental
    circuit queries. Each component is a tree, or a tree plus one edge
    closing a negative figure.
    """

    def __init__(self, sg: SignedGraph, b: Iterable[int]):
        g = sg.graph
        self.sg = sg
        self.edges = g.check_subset(b)
        self.forest = Forest(g, spanning_forest(g, self.edges))
        self.zeta = tree_potential(sg, self.forest)
        self.block_of = {v: i for i, block in enumerate(self.forest.blocks()) for v in block}
        self.figures: Dict[int, _Figure] = {}
        for eid in sorted(self.edges - self.forest.edges):
            edge = g.edge(eid)
            if edge.kind is EdgeKind.LOOSE:
                raise GraphError(f'loose edge {eid} is dependent in the frame matroid')
            block = self.block_of[edge.vertices[0]]
            if block in self.figures:
                raise GraphError(f'edge set {sorted(self.edges)} is dependent in the frame matroid')
            figure = self._figure_of(eid)
            if figure is None:
                raise GraphError(f'edge {eid} closes a positive circle in {sorted(self.edges)}')
            self.figures[block] = figure

    def _figure_of(self, eid: int) -> Optional[_Figure]:
        """The negative figure formed by eid with the forest, None if it closes a positive circle"""
        g = self.sg.graph
        edge = g.edge(eid)
        if edge.kind is EdgeKind.HALF:
            return _Figure(frozenset([eid]), frozenset(edge.vertices), eid)
        circle = self._circle(eid)
        if _agrees(self.sg, eid, self.zeta):
            return None
        return _Figure(circle, frozenset(v for c in circle for v in g.edge(c).vertices), None)

    def _circle(self, eid: int) -> EdgeSet:
        u, v = self.sg.graph.edge(eid).vertices
        if u == v:
            return frozenset([eid])
        return frozenset(step.edge for step in self.forest.path(u, v).steps) | {eid}

    def fundamental_circuit(self, e: int) -> Optional[SignCircuit]:
        g = self.sg.graph
        if e in self.edges:
            raise GraphError(f'edge {e} already belongs to the basis')
        edge = g.edge(e)
        if edge.kind is EdgeKind.LOOSE:
            return LooseEdge(e)
        if edge.kind is EdgeKind.HALF:
            figure = self.figures.get(self.block_of[edge.vertices[0]])
            if figure is None:
                return None
            return self._pair(self._figure_of(e), figure)
        u, v = edge.vertices
        if self.block_of[u] == self.block_of[v]:
            if _agrees(self.sg, e, self.zeta):
                circle = self._circle(e)
                root = min(w for c in circle for w in g.edge(c).vertices)
                return PositiveCircle(closed_walk(g, circle, root))
            figure = self.figures.get(self.block_of[u])
            if figure is None:
                return None
            return self._pair(self._figure_of(e), figure)
        first = self.figures.get(self.block_of[u])
        second = self.figures.get(self.block_of[v])
        if first is None or second is None:
            return None
        into_u = self._approach(first.vertices, u)
        out_of_v = reverse_walk(g, self._approach(second.vertices, v))
        path = concat_walks(g, into_u, Walk(u, (Step(e, edge.slot_at(u)),)), out_of_v)
        return self._handcuff(first, second, path)

    def _approach(self, figure_vertices: FrozenSet[int], target: int) -> Walk:
        """Forest path from the figure vertex nearest to target, on to target"""
        vertices = self.forest.vertex_path(target, min(figure_vertices))
        cut = next(i for i, w in enumerate(vertices) if w in figure_vertices)
        return self.forest.walk_along(list(reversed(vertices[:cut + 1])))

    def _pair(self, first: _Figure, second: _Figure) -> SignCircuit:
        g = self.sg.graph
        if first.edges & second.edges:
            circle = first.edges ^ second.edges
            root = min(w for c in circle for w in g.edge(c).vertices)
            return PositiveCircle(closed_walk(g, circle, root))
        common = first.vertices & second.vertices
        if common:
            path = Walk(min(common))
        else:
            vertices = self.forest.vertex_path(min(first.vertices), min(second.vertices))
            start = max(i for i, w in enumerate(vertices) if w in first.vertices)
            stop = next(i for i in range(start, len(vertices)) if vertices[i] in second.vertices)
            path = self.forest.walk_along(vertices[start:stop + 1])
        return self._handcuff(first, second, path)

    def _handcuff(self, first: _Figure, second: _Figure, path: Walk) -> Handcuff:
        g = self.sg.graph
        if min(second.edges) < min(first.edges):
            first, second = second, first
            path = reverse_walk(g, path)
        end = walk_vertices(g, path)[-1]
        return Handcuff(_rooted(g, first, path.start), _rooted(g, second, end), path)


def _rooted(g: Graph, figure: _Figure, root: int) -> NegativeFigure:
    if figure.half_edge is not None:
        return NegativeFigure(root, half_edge=figure.half_edge)
    return NegativeFigure(root, walk=closed_walk(g, figure.edges, root))


def fundamental_sign_circuit(sg: SignedGraph, b: Iterable[int], e: int) -> Optional[SignCircuit]:
    """
    The unique sign circuit in b + e, or None if e raises the frame rank of b.

    Raises:
        GraphError: If e is in b or b is dependent in the frame matroid
    """
    return FrameBasis(sg, b).fundamental_circuit(e)


def sign_circuit_of(sg: SignedGraph, c: Iterable[int]) -> SignCircuit:
    """Structure of an edge set known to be a circuit of the frame matroid"""
    c = sg.graph.check_subset(c)
    basis = frame_basis(sg, c)
    rest = sorted(c - basis)
    if len(rest) != 1:
        raise GraphError(f'edge set {sorted(c)} is not a sign circuit')
    circuit = FrameBasis(sg, basis).fundamental_circuit(rest[0])
    if circuit is None or circuit.edges != c:
        raise GraphError(f'edge set {sorted(c)} is not a sign circuit')
    return circuit


def frame_closure(sg: SignedGraph, s: Iterable[int]) -> EdgeSet:
    """[E:U] together with the edges of E(zeta) inside balanced blocks, plus all loose edges"""
    g = sg.graph
    info = balanced_components(sg, s)
    block_of = {v: i for i, block in enumerate(info.pib) for v in block}
    closed = set()
    for edge in g.edges:
        vertices = edge.vertices
        if edge.kind is EdgeKind.LOOSE:
            closed.add(edge.id)
        elif all(v in info.unbalanced for v in vertices):
            closed.add(edge.id)
        elif (edge.is_ordinary and all(v in block_of for v in vertices)
              and block_of[vertices[0]] == block_of[vertices[1]]
              and _agrees(sg, edge.id, info.zeta)):
            closed.add(edge.id)
    return frozenset(closed)


def is_frame_circuit(sg: SignedGraph, s: Iterable[int]) -> bool:
    s = sg.graph.check_subset(s)
    if not s or frame_rank(sg, s) != len(s) - 1:
        return False
    return all(frame_rank(sg, s - {e}) == len(s) - 1 for e in s)


def sign_circuits(sg: SignedGraph, s: Iterable[int]) -> List[EdgeSet]:
    """All sign circuits inside s by exhaustive search; for small edge sets"""
    s = sorted(sg.graph.check_subset(s))
    found: List[EdgeSet] = []
    for size in range(1, len(s) + 1):
        for combo in combinations(s, size):
            candidate = frozenset(combo)
            if any(c <= candidate for c in found):
                continue
            if frame_rank(sg, candidate) < size:
                found.append(candidate)
    return found
