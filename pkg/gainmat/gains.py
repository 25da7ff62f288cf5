"""
Gain signed graphs

A gain signed graph carries, besides signs, an orientation tau and a gain
phi(e) in an abelian group for the stored orientation of each edge.
Reorienting an edge negates both of its tau values and its gain.
"""

from dataclasses import dataclass, replace
from typing import Any, Dict, Iterable, Mapping, NamedTuple, Optional, Sequence, Tuple

from .errors import GraphError, NotHyperbalancedError, NotPseudoforestError, OrientationError
from .graph import (
    Edge, EdgeKind, EdgeSet, Forest, Graph, Walk, components,
    concat_walks, reverse_walk, spanning_forest, walk_vertices,
)
from .groups import AbelianGroup, INTEGERS
from .signed import (
    FrameBasis, LooseEdge, Orientation, PositiveCircle, SignCircuit,
    SignedGraph, SignSwitcher, frame_basis, sign_of_walk, switch_signs, tree_potential,
)


# The extra point of the extended matroid. It is not an edge: it never
# appears in walks or sign circuits and behaves as a non-neutral loose edge.
E_INF = -1

GainSwitcher = Mapping[int, Any]


@dataclass(frozen=True)
class EdgeSpec:
    """Description of one edge for GainSignedGraph.from_specs"""
    kind: EdgeKind
    vertices: Tuple[int, ...]
    sign: int
    tau: Tuple[int, ...]
    gain: Any


def link(u: int, v: int, sign: int = 1, gain: Any = 0, tau: Optional[Sequence[int]] = None) -> EdgeSpec:
    """A link; positive links default to tau = (-1, +1), negative ones to (+1, +1)"""
    if tau is None:
        tau = (-1, 1) if sign > 0 else (1, 1)
    return EdgeSpec(EdgeKind.LINK, (u, v), sign, tuple(tau), gain)


def loop(v: int, sign: int = -1, gain: Any = 0, tau: Optional[Sequence[int]] = None) -> EdgeSpec:
    if tau is None:
        tau = (-1, 1) if sign > 0 else (1, 1)
    return EdgeSpec(EdgeKind.LOOP, (v, v), sign, tuple(tau), gain)


def half(v: int, gain: Any = 0, tau: int = 1) -> EdgeSpec:
    return EdgeSpec(EdgeKind.HALF, (v,), -1, (tau,), gain)


def loose(gain: Any = 0) -> EdgeSpec:
    return EdgeSpec(EdgeKind.LOOSE, (), 1, (), gain)


@dataclass(frozen=True)
class GainSignedGraph:
    sg: SignedGraph
    orientation: Orientation
    phi: Mapping[int, Any]
    group: AbelianGroup = INTEGERS

    def __post_init__(self):
        self.orientation.validate(self.sg)
        missing = self.sg.graph.edge_ids - set(self.phi)
        if missing:
            raise GraphError(f'edges without gains: {sorted(missing)}')
        object.__setattr__(self, 'phi', {eid: self.group.normalize(self.phi[eid])
                                         for eid in sorted(self.sg.graph.edge_ids)})

    @classmethod
    def from_specs(cls, n: int, specs: Iterable[EdgeSpec], group: AbelianGroup = INTEGERS,
                   first_id: int = 0) -> 'GainSignedGraph':
        """Build a gain signed graph with consecutive edge ids"""
        edges, sigma, tau, phi = [], {}, {}, {}
        for eid, spec in enumerate(specs, start=first_id):
            edges.append(Edge.make(eid, spec.kind, spec.vertices))
            sigma[eid] = spec.sign
            if len(spec.tau) != len(spec.vertices):
                raise OrientationError(f'edge {eid} needs {len(spec.vertices)} tau values')
            for slot, value in enumerate(spec.tau):
                tau[(eid, slot)] = value
            phi[eid] = spec.gain
        sg = SignedGraph(Graph(n, tuple(edges)), sigma)
        return cls(sg, Orientation(tau), phi, group)

    @property
    def graph(self) -> Graph:
        return self.sg.graph

    @property
    def n(self) -> int:
        return self.sg.graph.n

    def sign(self, eid: int) -> int:
        return self.sg.sign(eid)

    def tau(self, eid: int, slot: int) -> int:
        return self.orientation.at(eid, slot)

    def gain(self, eid: int) -> Any:
        return self.phi[eid]

    def neutral_edges(self) -> EdgeSet:
        return frozenset(eid for eid, g in self.phi.items() if self.group.is_zero(g))


def lift_to_cover(u: GainSignedGraph) -> Optional[GainSignedGraph]:
    """u with its gains carried into the group's cover, or None if it has none"""
    cover = u.group.cover()
    if cover is None:
        return None
    group, embed = cover
    return replace(u, group=group, phi={eid: embed(gain) for eid, gain in u.phi.items()})


def reorient(u: GainSignedGraph, e: int) -> GainSignedGraph:
    """Reverse edge e: negate its tau values and its gain"""
    edge = u.graph.edge(e)
    tau = dict(u.orientation.tau)
    for end in edge.ends:
        tau[(e, end.slot)] = -tau[(e, end.slot)]
    phi = dict(u.phi)
    phi[e] = u.group.neg(phi[e])
    return replace(u, orientation=Orientation(tau), phi=phi)


def switch_gains(u: GainSignedGraph, theta: GainSwitcher) -> GainSignedGraph:
    """phi(e) + tau(v,e)theta(v) over the ends of e; loose edges unchanged"""
    group = u.group
    phi = {}
    for edge in u.graph.edges:
        gain = u.gain(edge.id)
        for end in edge.ends:
            shift = theta.get(end.vertex, group.zero)
            gain = group.add(gain, group.int_scale(u.tau(edge.id, end.slot), shift))
        phi[edge.id] = gain
    return replace(u, phi=phi)


def sign_switched(u: GainSignedGraph, zeta: SignSwitcher) -> GainSignedGraph:
    """Switch signs and orientation by zeta; gains are unchanged"""
    sg, orientation = switch_signs(u.sg, u.orientation, zeta)
    return replace(u, sg=sg, orientation=orientation)


def commute_switcher(zeta: SignSwitcher, theta: GainSwitcher, group: AbelianGroup) -> Dict[int, Any]:
    """theta^zeta(v) = zeta(v)theta(v), so that zeta then theta equals theta^zeta then zeta"""
    return {v: group.int_scale(zeta.get(v, 1), t) for v, t in theta.items()}


def walk_gain(u: GainSignedGraph, w: Walk) -> Any:
    """
    Gain of a walk or ultrawalk, accumulated left to right.

    Each step e_i leaving u_{i-1} adds -phi(e_i) sigma(W_{0,i-1}) tau(u_{i-1}, e_i).
    An initial half edge adds tau(u0, e0) phi(e0); a terminal half edge adds
    -phi(e) sigma(W_0l) tau(ul, e), where W_0l is the walk between the half edges.
    """
    group = u.group
    walk_vertices(u.graph, w)
    total = group.zero
    running = 1
    if w.head is not None:
        total = group.int_scale(u.tau(w.head, 0), u.gain(w.head))
    for step in w.steps:
        coefficient = -running * u.tau(step.edge, step.slot)
        total = group.add(total, group.int_scale(coefficient, u.gain(step.edge)))
        running *= u.sign(step.edge)
    if w.tail is not None:
        coefficient = -running * u.tau(w.tail, 0)
        total = group.add(total, group.int_scale(coefficient, u.gain(w.tail)))
    return total


def circuit_walk(sg: SignedGraph, c: SignCircuit) -> Walk:
    """
    Closed walk or half-to-half ultrawalk whose gain is the gain of c:
    C1 P C2 P^-1 for two circles, e1 P C2 P^-1 e1 for a half edge and a
    circle, e1 P e2 for two half edges.
    """
    g = sg.graph
    if isinstance(c, PositiveCircle):
        return c.walk
    if isinstance(c, LooseEdge):
        raise GraphError('a loose edge has no circuit walk')
    first, second, path = c.fig1, c.fig2, c.path
    if first.half_edge is None and second.half_edge is not None:
        first, second, path = second, first, reverse_walk(g, path)
    back = reverse_walk(g, path)
    if first.half_edge is None:
        return concat_walks(g, first.walk, path, second.walk, back)
    if second.half_edge is None:
        body = concat_walks(g, path, second.walk, back)
        return Walk(body.start, body.steps, head=first.half_edge, tail=first.half_edge)
    return Walk(path.start, path.steps, head=first.half_edge, tail=second.half_edge)


def circuit_gain(u: GainSignedGraph, c: SignCircuit) -> Any:
    """Gain of a sign circuit, well defined up to negation"""
    if isinstance(c, LooseEdge):
        return u.gain(c.edge)
    return walk_gain(u, circuit_walk(u.sg, c))


def is_neutral(u: GainSignedGraph, c: SignCircuit) -> bool:
    return u.group.is_zero(circuit_gain(u, c))


def neutralize_pseudoforest(u: GainSignedGraph, t: Iterable[int]) -> Dict[int, Any]:
    """
    Gain switcher making every edge of a pseudoforest neutral.

    theta(v) = sigma(T_rv)[theta0 - phi(T_rv)] with r the lowest vertex of
    each tree, theta0 = 0 for a bare tree and theta0 = phi(T_re) for a tree
    carrying the half edge e.

    Raises:
        NotPseudoforestError: If t has a circle, a loop, a loose edge, or two
            half edges in one component
    """
    g = u.graph
    group = u.group
    t = g.check_subset(t)
    links = [eid for eid in t if g.edge(eid).kind is EdgeKind.LINK]
    halves = [eid for eid in t if g.edge(eid).kind is EdgeKind.HALF]
    if len(links) + len(halves) != len(t):
        raise NotPseudoforestError(f'{sorted(t)} has loops or loose edges')
    try:
        forest = Forest(g, links)
    except GraphError as e:
        raise NotPseudoforestError(str(e))
    blocks = forest.blocks()
    block_of = {v: i for i, block in enumerate(blocks) for v in block}
    attached: Dict[int, int] = {}
    for eid in sorted(halves):
        block = block_of[g.edge(eid).vertices[0]]
        if block in attached:
            raise NotPseudoforestError(f'component of vertex {g.edge(eid).vertices[0]} has two half edges')
        attached[block] = eid
    theta = {}
    for i, block in enumerate(blocks):
        root = min(block)
        theta0 = group.zero
        if i in attached:
            h = attached[i]
            to_half = forest.path(root, g.edge(h).vertices[0])
            theta0 = walk_gain(u, Walk(to_half.start, to_half.steps, tail=h))
        for v in block:
            path = forest.path(root, v)
            theta[v] = group.int_scale(sign_of_walk(u.sg, path), group.sub(theta0, walk_gain(u, path)))
    return theta


def is_hyperbalanced(u: GainSignedGraph, s: Iterable[int]) -> bool:
    """True if every fundamental sign circuit of a frame basis of s is neutral"""
    s = u.graph.check_subset(s)
    basis = frame_basis(u.sg, s)
    structure = FrameBasis(u.sg, basis)
    for e in sorted(s - basis):
        circuit = structure.fundamental_circuit(e)
        if circuit is None:
            raise AssertionError(f'edge {e} has no fundamental circuit in a basis of {sorted(s)}')
        if not is_neutral(u, circuit):
            return False
    return True


def hyperbalance_witness(u: GainSignedGraph, s: Iterable[int]) -> Optional[Tuple[Dict[int, int], Dict[int, Any]]]:
    """
    Switchers showing s can be made neutral.

    zeta makes a spanning forest of s positive. theta first neutralizes that
    forest, then shifts each unbalanced component by a constant: minus a
    half-edge gain, or half of a negative-edge gain. switch_gains(u, theta)
    gives gain 0 on every edge of s.

    Returns:
        (zeta, theta), or None when the group has no required half

    Raises:
        NotHyperbalancedError: If s is not hyperbalanced
    """
    g = u.graph
    group = u.group
    s = g.check_subset(s)
    if not is_hyperbalanced(u, s):
        raise NotHyperbalancedError(f'edge set {sorted(s)} is hyperfrustrated')
    forest = Forest(g, spanning_forest(g, s))
    zeta = tree_potential(u.sg, forest)
    theta = neutralize_pseudoforest(u, forest.edges)
    switched = switch_gains(u, theta)
    for block in components(g, s).blocks:
        inside = sorted(eid for eid in s
                        if g.edge(eid).ends and g.edge(eid).vertices[0] in block)
        halves = [eid for eid in inside if g.edge(eid).kind is EdgeKind.HALF]
        negatives = [eid for eid in inside if g.edge(eid).is_ordinary
                     and u.sign(eid) != zeta[g.edge(eid).vertices[0]] * zeta[g.edge(eid).vertices[1]]]
        if halves:
            h = halves[0]
            t = zeta[g.edge(h).vertices[0]] * u.tau(h, 0)
            shift = group.neg(group.int_scale(t, switched.gain(h)))
        elif negatives:
            e = negatives[0]
            t = zeta[g.edge(e).vertices[0]] * u.tau(e, 0)
            shift = group.halve(group.neg(group.int_scale(t, switched.gain(e))))
            if shift is None:
                return None
        else:
            continue
        for v in block:
            theta[v] = group.add(theta[v], group.int_scale(zeta[v], shift))
    result = switch_gains(u, theta)
    stuck = [eid for eid in s if not group.is_zero(result.gain(eid))]
    if stuck:
        raise AssertionError(f'switching left edges {sorted(stuck)} non-neutral')
    return zeta, theta


class PotentialEdgeSets(NamedTuple):
    neutral: EdgeSet
    signed: Optional[EdgeSet]
    neutral_signed: Optional[EdgeSet]


def edge_sets_of_potentials(u: GainSignedGraph, theta: GainSwitcher,
                            zeta: Optional[SignSwitcher] = None) -> PotentialEdgeSets:
    """
    E(theta): edges neutral after switching by theta, neutral loose edges included.
    E(zeta): links and loops inside the domain of zeta with sign zeta(v)zeta(w).
    E(theta, zeta): their intersection.
    """
    neutral = switch_gains(u, theta).neutral_edges()
    if zeta is None:
        return PotentialEdgeSets(neutral, None, None)
    signed = frozenset(
        edge.id for edge in u.graph.edges
        if edge.is_ordinary and all(v in zeta for v in edge.vertices)
        and u.sign(edge.id) == zeta[edge.vertices[0]] * zeta[edge.vertices[1]]
    )
    return PotentialEdgeSets(neutral, signed, neutral & signed)
