"""
Graphs with links, loops, half edges and loose edges

Vertices are 0-based integers below n. Every edge end records its vertex and
an end slot (0 or 1), so the two ends of a loop stay distinguishable.
"""

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

import networkx as nx

from .errors import GraphError, MalformedWalkError


EdgeSet = FrozenSet[int]


class EdgeKind(str, Enum):
    LINK = 'link'
    LOOP = 'loop'
    HALF = 'half'
    LOOSE = 'loose'


END_COUNT = {
    EdgeKind.LINK: 2,
    EdgeKind.LOOP: 2,
    EdgeKind.HALF: 1,
    EdgeKind.LOOSE: 0,
}


@dataclass(frozen=True)
class End:
    vertex: int
    slot: int


@dataclass(frozen=True)
class Edge:
    id: int
    kind: EdgeKind
    ends: Tuple[End, ...] = ()

    @classmethod
    def make(cls, eid: int, kind, vertices: Sequence[int] = ()) -> 'Edge':
        """Build an edge from its kind and the vertices of its ends, in slot order"""
        kind = EdgeKind(kind)
        vertices = tuple(vertices)
        if kind is EdgeKind.LOOP and len(vertices) == 1:
            vertices = vertices * 2
        return cls(eid, kind, tuple(End(v, slot) for slot, v in enumerate(vertices)))

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(end.vertex for end in self.ends)

    @property
    def is_ordinary(self) -> bool:
        """True for links and loops, the edges with two ends"""
        return self.kind in (EdgeKind.LINK, EdgeKind.LOOP)

    def slot_at(self, vertex: int) -> int:
        for end in self.ends:
            if end.vertex == vertex:
                return end.slot
        raise MalformedWalkError(f'edge {self.id} is not incident with vertex {vertex}')

    def other_slot(self, slot: int) -> int:
        return 1 - slot


@dataclass(frozen=True)
class Graph:
    n: int
    edges: Tuple[Edge, ...] = ()
    _index: Dict[int, Edge] = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 0:
            raise GraphError(f'vertex count must be a non-negative integer, got {self.n!r}')
        index = {}
        for edge in self.edges:
            if edge.id in index:
                raise GraphError(f'duplicate edge id {edge.id}')
            if edge.id < 0:
                raise GraphError(f'edge ids must be non-negative, got {edge.id}')
            if len(edge.ends) != END_COUNT[edge.kind]:
                raise GraphError(
                    f'{edge.kind.value} edge {edge.id} needs {END_COUNT[edge.kind]} ends, '
                    f'got {len(edge.ends)}'
                )
            for slot, end in enumerate(edge.ends):
                if end.slot != slot:
                    raise GraphError(f'edge {edge.id} has ends out of slot order')
                if not 0 <= end.vertex < self.n:
                    raise GraphError(f'edge {edge.id} references vertex {end.vertex} outside [0, {self.n})')
            if edge.kind is EdgeKind.LINK and edge.ends[0].vertex == edge.ends[1].vertex:
                raise GraphError(f'link {edge.id} has equal endpoints')
            if edge.kind is EdgeKind.LOOP and edge.ends[0].vertex != edge.ends[1].vertex:
                raise GraphError(f'loop {edge.id} has distinct endpoints')
            index[edge.id] = edge
        object.__setattr__(self, '_index', index)

    def edge(self, eid: int) -> Edge:
        try:
            return self._index[eid]
        except KeyError:
            raise GraphError(f'no edge with id {eid}')

    @property
    def edge_ids(self) -> EdgeSet:
        return frozenset(self._index)

    def check_subset(self, s: Iterable[int]) -> EdgeSet:
        s = frozenset(s)
        unknown = s - self.edge_ids
        if unknown:
            raise GraphError(f'unknown edge ids: {sorted(unknown)}')
        return s

    def of_kind(self, s: Iterable[int], *kinds: EdgeKind) -> List[int]:
        """Ids in s of the given kinds, in increasing order"""
        return sorted(eid for eid in s if self._index[eid].kind in kinds)

    def degrees(self, s: Iterable[int]) -> Dict[int, int]:
        """Vertex degrees in s; a loop counts twice and a half edge once"""
        degree: Dict[int, int] = {}
        for eid in s:
            for v in self._index[eid].vertices:
                degree[v] = degree.get(v, 0) + 1
        return degree


# -- walks -------------------------------------------------------------------

@dataclass(frozen=True)
class Step:
    """One edge of a walk, left through its end `slot`"""
    edge: int
    slot: int


@dataclass(frozen=True)
class Walk:
    """
    A walk u0 e1 u1 ... el ul, optionally an ultrawalk with an initial
    half edge `head` at u0 and a terminal half edge `tail` at ul.
    """
    start: int
    steps: Tuple[Step, ...] = ()
    head: Optional[int] = None
    tail: Optional[int] = None

    @property
    def length(self) -> int:
        return len(self.steps)

    def edge_sequence(self) -> List[int]:
        """Edge ids in traversal order, half edges included"""
        sequence = [step.edge for step in self.steps]
        if self.head is not None:
            sequence.insert(0, self.head)
        if self.tail is not None:
            sequence.append(self.tail)
        return sequence


def walk_vertices(g: Graph, w: Walk) -> List[int]:
    """
    Validate a walk and list its vertices u0..ul.

    Raises:
        MalformedWalkError: If an edge is not incident with its declared vertex
    """
    if not 0 <= w.start < g.n:
        raise MalformedWalkError(f'walk starts at vertex {w.start} outside [0, {g.n})')
    try:
        if w.head is not None:
            _check_half(g, w.head, w.start)
        current = w.start
        vertices = [current]
        for step in w.steps:
            edge = g.edge(step.edge)
            if not edge.is_ordinary or step.slot not in (0, 1):
                raise MalformedWalkError(f'walk step uses {edge.kind.value} edge {edge.id}')
            if edge.ends[step.slot].vertex != current:
                raise MalformedWalkError(
                    f'edge {edge.id} slot {step.slot} is not at vertex {current}'
                )
            current = edge.ends[1 - step.slot].vertex
            vertices.append(current)
        if w.tail is not None:
            _check_half(g, w.tail, current)
    except GraphError as e:
        if isinstance(e, MalformedWalkError):
            raise
        raise MalformedWalkError(str(e))
    return vertices


def _check_half(g: Graph, eid: int, vertex: int):
    edge = g.edge(eid)
    if edge.kind is not EdgeKind.HALF or edge.ends[0].vertex != vertex:
        raise MalformedWalkError(f'edge {eid} is not a half edge at vertex {vertex}')


def is_closed(g: Graph, w: Walk) -> bool:
    vertices = walk_vertices(g, w)
    return w.head is None and w.tail is None and vertices[0] == vertices[-1]


def reverse_walk(g: Graph, w: Walk) -> Walk:
    vertices = walk_vertices(g, w)
    steps = tuple(Step(step.edge, 1 - step.slot) for step in reversed(w.steps))
    return Walk(vertices[-1], steps, head=w.tail, tail=w.head)


def concat_walks(g: Graph, *walks: Walk) -> Walk:
    """Concatenate walks; each must end where the next one starts"""
    if not walks:
        raise MalformedWalkError('nothing to concatenate')
    first = walks[0]
    steps: List[Step] = list(first.steps)
    end = walk_vertices(g, first)[-1]
    for index, w in enumerate(walks[1:], start=1):
        if w.start != end:
            raise MalformedWalkError(f'walk {index} starts at {w.start}, expected {end}')
        if w.head is not None or walks[index - 1].tail is not None:
            raise MalformedWalkError('half edges may only open or close the whole walk')
        steps.extend(w.steps)
        end = walk_vertices(g, w)[-1]
    return Walk(first.start, tuple(steps), head=first.head, tail=walks[-1].tail)


def closed_walk(g: Graph, edges: Iterable[int], root: int) -> Walk:
    """
    Traverse a circle once from `root`, leaving root along its lowest-id
    circle edge.

    Raises:
        GraphError: If the edges do not form a circle through root
    """
    remaining = set(edges)
    current = root
    steps = []
    while remaining:
        candidates = sorted(eid for eid in remaining
                            if g.edge(eid).is_ordinary and current in g.edge(eid).vertices)
        if not candidates:
            raise GraphError(f'edges {sorted(edges)} do not form a circle through {root}')
        edge = g.edge(candidates[0])
        slot = edge.slot_at(current)
        steps.append(Step(edge.id, slot))
        current = edge.ends[1 - slot].vertex
        remaining.discard(edge.id)
        if current == root and remaining:
            raise GraphError(f'edges {sorted(edges)} do not form a single circle')
    if current != root or not steps:
        raise GraphError(f'edges {sorted(edges)} do not form a circle through {root}')
    return Walk(root, tuple(steps))


# -- components and forests ---------------------------------------------------

class Components(NamedTuple):
    blocks: Tuple[FrozenSet[int], ...]
    loose: EdgeSet

    def block_index(self) -> Dict[int, int]:
        return {v: i for i, block in enumerate(self.blocks) for v in block}


def _link_graph(g: Graph, s: Iterable[int]) -> nx.Graph:
    simple = nx.Graph()
    simple.add_nodes_from(range(g.n))
    for eid in s:
        edge = g.edge(eid)
        if edge.kind is EdgeKind.LINK:
            simple.add_edge(*edge.vertices)
    return simple


def components(g: Graph, s: Iterable[int]) -> Components:
    """Vertex components of the spanning subgraph (V, s) plus the loose edges of s"""
    s = g.check_subset(s)
    blocks = sorted((frozenset(c) for c in nx.connected_components(_link_graph(g, s))), key=min)
    return Components(tuple(blocks), frozenset(g.of_kind(s, EdgeKind.LOOSE)))


def cyclomatic(g: Graph, s: Iterable[int]) -> int:
    """xi(S) = |S| - n + c(S); loose and half edges each add one"""
    s = g.check_subset(s)
    return len(s) - g.n + len(components(g, s).blocks)


def spanning_forest(g: Graph, s: Iterable[int]) -> EdgeSet:
    """Maximal acyclic set of links in s, lowest edge id first"""
    s = g.check_subset(s)
    multi = nx.MultiGraph()
    multi.add_nodes_from(range(g.n))
    for eid in g.of_kind(s, EdgeKind.LINK):
        multi.add_edge(*g.edge(eid).vertices, key=eid, id=eid)
    chosen = nx.minimum_spanning_edges(multi, algorithm='kruskal', weight='id', keys=True, data=False)
    return frozenset(key for _, _, key in chosen)


class Forest:
    """A forest of links with path queries"""

    def __init__(self, g: Graph, edges: Iterable[int]):
        self.graph = g
        self.edges = g.check_subset(edges)
        self._tree = nx.Graph()
        self._tree.add_nodes_from(range(g.n))
        for eid in sorted(self.edges):
            edge = g.edge(eid)
            if edge.kind is not EdgeKind.LINK:
                raise GraphError(f'{edge.kind.value} edge {eid} cannot belong to a forest')
            u, v = edge.vertices
            if nx.has_path(self._tree, u, v):
                raise GraphError(f'edges {sorted(self.edges)} contain a circle')
            self._tree.add_edge(u, v, id=eid)

    def blocks(self) -> List[FrozenSet[int]]:
        return sorted((frozenset(c) for c in nx.connected_components(self._tree)), key=min)

    def vertex_path(self, u: int, v: int) -> List[int]:
        try:
            return nx.shortest_path(self._tree, u, v)
        except nx.NetworkXNoPath:
            raise GraphError(f'vertices {u} and {v} lie in different trees')

    def walk_along(self, vertices: Sequence[int]) -> Walk:
        """The walk through consecutive forest edges of a vertex sequence"""
        steps = []
        for a, b in zip(vertices, vertices[1:]):
            eid = self._tree[a][b]['id']
            steps.append(Step(eid, self.graph.edge(eid).slot_at(a)))
        return Walk(vertices[0], tuple(steps))

    def path(self, u: int, v: int) -> Walk:
        return self.walk_along(self.vertex_path(u, v))

    def bfs(self, root: int) -> Iterator[Tuple[int, int, int]]:
        """(parent, child, edge id) in breadth-first order from root"""
        for parent, child in nx.bfs_edges(self._tree, root):
            yield parent, child, self._tree[parent][child]['id']


def tree_path(g: Graph, forest: Iterable[int], u: int, v: int) -> Walk:
    return Forest(g, forest).path(u, v)


def core_edges(g: Graph, s: Iterable[int]) -> EdgeSet:
    """Prune pendant trees: repeatedly drop links with an end of degree 1"""
    core = set(g.check_subset(s))
    while True:
        degree = g.degrees(core)
        pendant = [eid for eid in core
                   if g.edge(eid).kind is EdgeKind.LINK
                   and min(degree[v] for v in g.edge(eid).vertices) == 1]
        if not pendant:
            return frozenset(core)
        core.difference_update(pendant)


def is_circle(g: Graph, s: Iterable[int]) -> bool:
    """True if s is the edge set of one circle (a loop, a digon, ...)"""
    s = frozenset(s)
    if not s or any(not g.edge(eid).is_ordinary for eid in s):
        return False
    if any(d != 2 for d in g.degrees(s).values()):
        return False
    touched = {v for eid in s for v in g.edge(eid).vertices}
    return sum(1 for block in components(g, s).blocks if block & touched) == 1


def circles(g: Graph, s: Iterable[int], limit: int = 12) -> List[EdgeSet]:
    """
    All circles contained in s, found as cycle-space combinations of the
    fundamental circles of a spanning forest.

    Args:
        g: Graph
        s: Edge set
        limit: Largest cycle-space dimension to expand

    Returns:
        Circles as edge sets, sorted by their sorted edge ids
    """
    s = g.check_subset(s)
    forest = Forest(g, spanning_forest(g, s))
    fundamental = []
    for eid in g.of_kind(s, EdgeKind.LINK, EdgeKind.LOOP):
        if eid in forest.edges:
            continue
        edge = g.edge(eid)
        u, v = edge.vertices
        path = forest.path(u, v) if u != v else Walk(u)
        fundamental.append(frozenset(step.edge for step in path.steps) | {eid})
    if len(fundamental) > limit:
        raise GraphError(f'cycle space of dimension {len(fundamental)} is too large to expand')
    found = []
    for size in range(1, len(fundamental) + 1):
        for combo in combinations(fundamental, size):
            total: FrozenSet[int] = frozenset()
            for circle in combo:
                total = total ^ circle
            if is_circle(g, total):
                found.append(total)
    return sorted(set(found), key=sorted)
