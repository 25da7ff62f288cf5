"""
Dimensions of point configurations read off a gain signed graph

Every family of points here is the set of vectors z(e) of a graph whose
gains are all 1: the affine point x(e) sits at e0 + x(e) in K^(1+n), so
dimensions come from the matroid rank.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Set, Tuple

from .errors import GainMatError, GraphError, MalformedWalkError, OrientationError
from .gains import GainSignedGraph, is_hyperbalanced, link, loop
from .graph import Walk, components, walk_vertices
from .groups import INTEGERS
from .linalg import ExactMatrix, incidence_matrix
from .matroid import GainSignedMatroid


POINT_FAMILIES = ('edge', 'bidirected', 'arc', 'double-arc')

Arc = Tuple[int, int]


@dataclass(frozen=True)
class PolytopeQuery:
    """
    Which points to measure. `pairs` are the undirected edges for edge
    points, or (tail, head) arcs for arc and double arc points; `graph`
    is the bidirected graph for bidirected edge points (its gains are
    ignored).
    """
    points: str
    n: int
    pairs: Tuple[Arc, ...] = ()
    graph: Optional[GainSignedGraph] = None

    @classmethod
    def from_graph(cls, points: str, u: GainSignedGraph) -> 'PolytopeQuery':
        """
        Read a query off an instance. Arcs point from the end with tau = -1
        to the end with tau = +1.

        Raises:
            GainMatError: For an unknown point family
            GraphError: If edge or arc points meet a half or loose edge
            OrientationError: If arc points meet a negative edge
        """
        _check_family(points)
        if points == 'bidirected':
            return cls(points, u.n, graph=u)
        pairs = []
        for edge in sorted(u.graph.edges, key=lambda e: e.id):
            if not edge.is_ordinary:
                raise GraphError(f'{points} points need links and loops; edge {edge.id} is {edge.kind.value}')
            if points == 'edge':
                pairs.append(edge.vertices)
                continue
            if u.sign(edge.id) != 1:
                raise OrientationError(f'edge {edge.id} is negative, so it is not an arc')
            tail_slot = 0 if u.tau(edge.id, 0) == -1 else 1
            pairs.append((edge.ends[tail_slot].vertex, edge.ends[1 - tail_slot].vertex))
        return cls(points, u.n, tuple(pairs))


def _check_family(points: str):
    if points not in POINT_FAMILIES:
        raise GainMatError(f'Unknown point family: {points!r}. Available: {", ".join(POINT_FAMILIES)}')


def edge_point_graph(n: int, edges: Sequence[Arc]) -> GainSignedGraph:
    """All-negative extraverted graph with gain 1: edge ij gives e_i + e_j"""
    specs = [loop(i, -1, 1, (1, 1)) if i == j else link(i, j, -1, 1, (1, 1)) for i, j in edges]
    return GainSignedGraph.from_specs(n, specs, INTEGERS)


def arc_point_graph(n: int, arcs: Sequence[Arc]) -> GainSignedGraph:
    """Directed graph with gain 1: arc (i, j) gives e_j - e_i"""
    specs = [loop(i, 1, 1, (-1, 1)) if i == j else link(i, j, 1, 1, (-1, 1)) for i, j in arcs]
    return GainSignedGraph.from_specs(n, specs, INTEGERS)


def unit_gains(u: GainSignedGraph) -> GainSignedGraph:
    """The same bidirected graph with every gain set to 1 over the integers"""
    return GainSignedGraph(u.sg, u.orientation, {eid: 1 for eid in u.graph.edge_ids}, INTEGERS)


def double_digraph(n: int, arcs: Sequence[Arc]) -> Tuple[int, Tuple[Arc, ...]]:
    """
    Vertex doubling: v- is vertex v and v+ is vertex n + v; arc (i, j)
    becomes (i-, j+).
    """
    return 2 * n, tuple((i, n + j) for i, j in arcs)


def _component_count(u: GainSignedGraph) -> int:
    return len(components(u.graph, u.graph.edge_ids).blocks)


def digraph_circles_poised(n: int, arcs: Sequence[Arc]) -> bool:
    """True if every circle of the digraph has as many arcs each way"""
    u = arc_point_graph(n, arcs)
    return is_hyperbalanced(u, u.graph.edge_ids)


def point_graph(q: PolytopeQuery) -> GainSignedGraph:
    """The gain-1 graph whose edge vectors are the homogenized points of the query"""
    _check_family(q.points)
    if q.points == 'bidirected':
        if q.graph is None:
            raise GainMatError('bidirected points need a graph')
        return unit_gains(q.graph)
    if q.points == 'edge':
        return edge_point_graph(q.n, q.pairs)
    if q.points == 'arc':
        return arc_point_graph(q.n, q.pairs)
    return arc_point_graph(*double_digraph(q.n, q.pairs))


def point_matrix(q: PolytopeQuery) -> ExactMatrix:
    """Homogenized points as the columns of a (1+n)-row matrix"""
    return incidence_matrix(point_graph(q))


def polytope_dimension(q: PolytopeQuery) -> int:
    """
    Dimension of the points of a query.

    Edge points report the affine dimension of the edge polytope, the
    matroid rank minus one. The other families report n - b(E) + delta,
    the rank of their homogenized vectors: n - c(G), plus 1 when some
    circle is unpoised, for arc points and 2n - c of the doubled digraph
    for double arc points.
    """
    u = point_graph(q)
    if q.points == 'arc':
        return q.n - _component_count(u) + (0 if digraph_circles_poised(q.n, q.pairs) else 1)
    if q.points == 'double-arc':
        return 2 * q.n - _component_count(u)
    rank = GainSignedMatroid(u).rank(u.graph.edge_ids)
    return rank - 1 if q.points == 'edge' else rank


def poise_bipartition(u: GainSignedGraph, w: Walk) -> Optional[Tuple[Set[int], Set[int]]]:
    """
    Split the edges of a closed walk, or of a walk between half edges, into
    A and B: the first edge goes to A, the next edge stays in the same set
    at a coherent vertex and switches at an incoherent one.

    Returns:
        (A, B), or None if an edge lands in both sets or a closed walk
        switches an odd number of times

    Raises:
        MalformedWalkError: If the walk is neither closed nor half edge to
            half edge
    """
    vertices = walk_vertices(u.graph, w)
    closed = w.head is None and w.tail is None and bool(w.steps) and vertices[0] == vertices[-1]
    if not closed and (w.head is None or w.tail is None):
        raise MalformedWalkError('poise needs a closed walk or a walk from a half edge to a half edge')

    # (edge id, tau at the vertex it leaves, tau at the vertex it reaches)
    passes: List[Tuple[int, int, int]] = []
    if w.head is not None:
        passes.append((w.head, 0, u.tau(w.head, 0)))
    for step in w.steps:
        passes.append((step.edge, u.tau(step.edge, step.slot), u.tau(step.edge, 1 - step.slot)))
    if w.tail is not None:
        passes.append((w.tail, u.tau(w.tail, 0), 0))

    side = {passes[0][0]: 0}
    current = 0
    for (_, _, arriving), (eid, leaving, _) in zip(passes, passes[1:]):
        if -arriving * leaving == -1:
            current = 1 - current
        if side.setdefault(eid, current) != current:
            return None
    if closed:
        last_arrival = passes[-1][2]
        first_leaving = passes[0][1]
        if -last_arrival * first_leaving == -1:
            current = 1 - current
        if current != side[passes[0][0]]:
            return None
    a = {eid for eid, s in side.items() if s == 0}
    b = {eid for eid, s in side.items() if s == 1}
    return a, b


def is_poised(u: GainSignedGraph, w: Walk) -> bool:
    """True if the A/B split of the walk is well defined with |A| = |B|"""
    split = poise_bipartition(u, w)
    return split is not None and len(split[0]) == len(split[1])
