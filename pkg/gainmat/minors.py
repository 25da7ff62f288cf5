"""
Deletion and contraction of edge sets
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Tuple

from .errors import ContractionObstruction
from .gains import E_INF, GainSignedGraph, hyperbalance_witness, is_hyperbalanced, switch_gains
from .graph import Edge, EdgeKind, Graph
from .groups import TRIVIAL
from .signed import Orientation, SignedGraph, balanced_components, switch_signs


@dataclass(frozen=True)
class MinorResult:
    """
    A contraction. `blocks[i]` is the set of original vertices that became
    vertex i; `vertex_map` sends each surviving original vertex to its new
    id. When `gains_erased` is set the graph is over the trivial group.
    """
    graph: GainSignedGraph
    gains_erased: bool
    blocks: Tuple[FrozenSet[int], ...]
    vertex_map: Dict[int, int]


def _rebuild(n: int, edges, sigma, tau, phi, group) -> GainSignedGraph:
    return GainSignedGraph(SignedGraph(Graph(n, tuple(edges)), sigma), Orientation(tau), phi, group)


def delete(u: GainSignedGraph, s: Iterable[int]) -> GainSignedGraph:
    """Remove the edges of s; vertices and the remaining edge ids are kept"""
    s = u.graph.check_subset(s)
    kept = [edge for edge in u.graph.edges if edge.id not in s]
    sigma = {edge.id: u.sign(edge.id) for edge in kept}
    tau = {(edge.id, end.slot): u.tau(edge.id, end.slot) for edge in kept for end in edge.ends}
    phi = {edge.id: u.gain(edge.id) for edge in kept}
    return _rebuild(u.n, kept, sigma, tau, phi, u.group)


def contract(u: GainSignedGraph, s: Iterable[int]) -> MinorResult:
    """
    Contract s, which may hold the extra point.

    A hyperbalanced s is first switched so all its edges are neutral and
    its balanced components positive; the remaining edges keep their
    switched gains. Otherwise gains are erased. The new vertices are the
    balanced components of s, numbered by their lowest original vertex;
    vertices of unbalanced components disappear, turning links into half
    or loose edges.

    Raises:
        ContractionObstruction: If s is hyperbalanced but no neutralizing
            gain switcher exists in the gain group
    """
    s = frozenset(s)
    edges = u.graph.check_subset(s - {E_INF})
    erased = E_INF in s or not is_hyperbalanced(u, edges)
    if erased:
        work = GainSignedGraph(u.sg, u.orientation, {eid: 0 for eid in u.graph.edge_ids}, TRIVIAL)
    else:
        witness = hyperbalance_witness(u, edges)
        if witness is None:
            raise ContractionObstruction(
                f'edge set {sorted(edges)} is hyperbalanced but cannot be switched neutral over {u.group}'
            )
        work = switch_gains(u, witness[1])
    info = balanced_components(u.sg, edges)
    sg, orientation = switch_signs(work.sg, work.orientation, info.zeta)

    blocks = tuple(sorted(info.pib, key=min))
    vertex_map = {v: i for i, block in enumerate(blocks) for v in block}
    new_edges, sigma, tau, phi = [], {}, {}, {}
    for edge in u.graph.edges:
        if edge.id in edges:
            continue
        ends = [(vertex_map[end.vertex], end.slot) for end in edge.ends if end.vertex in vertex_map]
        if edge.kind is EdgeKind.LOOSE or not ends:
            kind, sign = EdgeKind.LOOSE, 1
        elif len(ends) == 1:
            kind, sign = EdgeKind.HALF, -1
        else:
            kind = EdgeKind.LOOP if ends[0][0] == ends[1][0] else EdgeKind.LINK
            sign = sg.sign(edge.id)
        new_edges.append(Edge.make(edge.id, kind, [vertex for vertex, _ in ends]))
        sigma[edge.id] = sign
        for new_slot, (_, old_slot) in enumerate(ends):
            tau[(edge.id, new_slot)] = orientation.at(edge.id, old_slot)
        phi[edge.id] = work.gain(edge.id)
    graph = _rebuild(len(blocks), new_edges, sigma, tau, phi, work.group)
    return MinorResult(graph, erased, blocks, vertex_map)


def minor(u: GainSignedGraph, delete_ids: Iterable[int] = (),
          contract_ids: Iterable[int] = ()) -> MinorResult:
    """Delete one set, then contract a disjoint one"""
    delete_ids = frozenset(delete_ids)
    contract_ids = frozenset(contract_ids)
    overlap = delete_ids & contract_ids
    if overlap:
        raise ValueError(f'edges {sorted(overlap)} are both deleted and contracted')
    return contract(delete(u, delete_ids), contract_ids)


def canonical_form(u: GainSignedGraph) -> Tuple:
    """Comparable summary of a gain signed graph; edge ids are kept as they are"""
    rows = []
    for edge in sorted(u.graph.edges, key=lambda e: e.id):
        rows.append((edge.id, edge.kind.value, edge.vertices, u.sign(edge.id),
                     tuple(u.tau(edge.id, end.slot) for end in edge.ends),
                     u.group.format(u.gain(edge.id))))
    return (u.n, str(u.group), tuple(rows))
