"""
Structural classification of independent sets and hypercircuits

Both are decided from the underlying graph, the signs of circles and the
neutrality of sign circuits; the matroid module cross-checks them against
ranks.
"""

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import FrozenSet, Iterable, List, Optional, Tuple

from .gains import E_INF, GainSignedGraph, is_hyperbalanced, is_neutral
from .graph import EdgeKind, EdgeSet, circles, closed_walk, components, core_edges, cyclomatic
from .signed import is_balanced, is_frame_circuit, sign_circuit_of, sign_of_walk


class HypercircuitClass(str, Enum):
    NEUTRAL_SIGN_CIRCUIT = 'NeutralSignCircuit'
    DISJOINT_PAIR = 'DisjointPair'
    CONTRABALANCED_TRIPLE = 'ContrabalancedTriple'
    THETA_PLUS_LOLLIPOP = 'ThetaPlusLollipop'
    LINKED_CIRCLES = 'LinkedCircles'
    BALANCED_THETA = 'BalancedTheta'
    TIGHT_POSITIVE_PAIR = 'TightPositivePair'
    QUADRUPLE_PATH = 'QuadruplePath'
    ANTIBALANCED_K4 = 'AntibalancedK4'
    THETA_WITH_EAR = 'ThetaWithEar'


class ComponentKind(str, Enum):
    TREE = 'tree'
    UNBALANCED_UNICYCLE = 'unbalanced-unicycle'
    BALANCED_UNICYCLE = 'balanced-unicycle'
    LOOSE_EDGE = 'loose-edge'
    EXTRA_POINT = 'extra-point'
    UNBALANCED_THETA = 'unbalanced-theta'
    UNBALANCED_HANDCUFF = 'unbalanced-handcuff'
    OTHER = 'other'


@dataclass(frozen=True)
class ComponentCertificate:
    edges: EdgeSet
    kind: ComponentKind
    excess: int
    hyperfrustrated: bool


@dataclass(frozen=True)
class IndependenceCertificate:
    """
    Per edge component: its shape and its excess xi - u, where u is 1 for
    an unbalanced component. The set is independent when every excess is
    at most 1 and the single component with excess 1, if any, is
    hyperfrustrated; that component is `special`.
    """
    independent: bool
    components: Tuple[ComponentCertificate, ...]
    special: Optional[EdgeSet]


def edge_components(u: GainSignedGraph, s: Iterable[int]) -> List[EdgeSet]:
    """
    Edge sets of the connected pieces of s. Every loose edge and the extra
    point form pieces of their own; isolated vertices form none.
    """
    s = frozenset(s)
    g = u.graph
    edges = g.check_subset(s - {E_INF})
    block_of = components(g, edges).block_index()
    grouped = {}
    pieces = []
    for eid in sorted(edges):
        edge = g.edge(eid)
        if edge.kind is EdgeKind.LOOSE:
            pieces.append(frozenset([eid]))
        else:
            grouped.setdefault(block_of[edge.vertices[0]], set()).add(eid)
    pieces.extend(frozenset(group) for group in grouped.values())
    if E_INF in s:
        pieces.append(frozenset([E_INF]))
    return sorted(pieces, key=min)


def _component_shape(u: GainSignedGraph, piece: EdgeSet) -> ComponentKind:
    g = u.graph
    if piece == {E_INF}:
        return ComponentKind.EXTRA_POINT
    if len(piece) == 1 and g.edge(next(iter(piece))).kind is EdgeKind.LOOSE:
        return ComponentKind.LOOSE_EDGE
    xi = cyclomatic(g, piece)
    balanced = is_balanced(u.sg, piece)
    if xi == 0:
        return ComponentKind.TREE
    if xi == 1:
        return ComponentKind.BALANCED_UNICYCLE if balanced else ComponentKind.UNBALANCED_UNICYCLE
    if xi == 2 and not balanced:
        core = core_edges(g, piece)
        if len(circles(g, core)) == 3:
            return ComponentKind.UNBALANCED_THETA
        return ComponentKind.UNBALANCED_HANDCUFF
    return ComponentKind.OTHER


def _excess(u: GainSignedGraph, piece: EdgeSet) -> int:
    if piece == {E_INF}:
        return 1
    g = u.graph
    xi = cyclomatic(g, piece)
    return xi - (0 if is_balanced(u.sg, piece) else 1)


def _hyperfrustrated(u: GainSignedGraph, piece: EdgeSet) -> bool:
    return E_INF in piece or not is_hyperbalanced(u, piece)


def independence_certificate(u: GainSignedGraph, s: Iterable[int]) -> IndependenceCertificate:
    """Classify each edge component of s and decide independence from the shapes"""
    certificates = []
    for piece in edge_components(u, s):
        certificates.append(ComponentCertificate(
            piece, _component_shape(u, piece), _excess(u, piece), _hyperfrustrated(u, piece),
        ))
    heavy = [c for c in certificates if c.excess >= 1]
    independent = (all(c.excess <= 1 for c in certificates)
                   and len(heavy) <= 1
                   and all(c.hyperfrustrated for c in heavy))
    special = heavy[0].edges if independent and heavy else None
    return IndependenceCertificate(independent, tuple(certificates), special)


def _positive_circles(u: GainSignedGraph, s: EdgeSet) -> List[EdgeSet]:
    g = u.graph
    found = []
    for circle in circles(g, s):
        root = min(v for eid in circle for v in g.edge(eid).vertices)
        if sign_of_walk(u.sg, closed_walk(g, circle, root)) == 1:
            found.append(circle)
    return found


def _sign(u: GainSignedGraph, edges: Iterable[int]) -> int:
    sign = 1
    for eid in edges:
        sign *= u.sign(eid)
    return sign


def _branch_paths(g, s: EdgeSet) -> Optional[List[Tuple[int, int, EdgeSet]]]:
    """
    The maximal paths of s whose inner vertices have degree 2, as
    (end, end, edges); None when s has a half or loose edge or a pendant.
    """
    if any(not g.edge(eid).is_ordinary for eid in s):
        return None
    branch = {v for v, d in g.degrees(s).items() if d >= 3}
    incident = {}
    for eid in sorted(s):
        a, b = g.edge(eid).vertices
        incident.setdefault(a, []).append(eid)
        if b != a:
            incident.setdefault(b, []).append(eid)
    used = set()
    paths = []
    for start in sorted(branch):
        for first in incident[start]:
            if first in used:
                continue
            v, eid, edges = start, first, []
            while True:
                used.add(eid)
                edges.append(eid)
                a, b = g.edge(eid).vertices
                v = b if v == a else a
                if v in branch:
                    break
                eid = next((e for e in incident[v] if e not in used), None)
                if eid is None:
                    return None
            paths.append((start, v, frozenset(edges)))
    return paths


def _shape(g, s: EdgeSet) -> Tuple[List[int], Optional[List[Tuple[int, int, EdgeSet]]]]:
    degrees = g.degrees(s)
    return sorted(d for d in degrees.values() if d != 2), _branch_paths(g, s)


def _theta(g, s: EdgeSet) -> Optional[Tuple[FrozenSet[int], List[EdgeSet]]]:
    """The two hubs and three constituent paths of s, if s is a theta graph"""
    branch, paths = _shape(g, s)
    if branch != [3, 3] or paths is None or len(paths) != 3:
        return None
    hubs = {frozenset((a, b)) for a, b, _ in paths}
    if len(hubs) != 1 or len(next(iter(hubs))) != 2:
        return None
    return next(iter(hubs)), [edges for _, _, edges in paths]


def _is_quadruple_path(u: GainSignedGraph, c: EdgeSet) -> bool:
    """Four internally disjoint paths between two vertices, two of each sign"""
    branch, paths = _shape(u.graph, c)
    if branch != [4, 4] or paths is None or len(paths) != 4:
        return False
    if len({frozenset((a, b)) for a, b, _ in paths}) != 1 or any(a == b for a, b, _ in paths):
        return False
    return sorted(_sign(u, edges) for _, _, edges in paths) == [-1, -1, 1, 1]


def _is_theta_with_ear(u: GainSignedGraph, c: EdgeSet) -> bool:
    """
    A theta graph plus a path ear whose ends lie on one constituent path,
    not both at the hubs, closing a negative circle with that path.
    """
    g = u.graph
    branch, paths = _shape(g, c)
    if branch not in ([3, 3, 3, 3], [3, 3, 4]) or paths is None:
        return False
    for a, b, ear in paths:
        if a == b:
            continue
        theta = _theta(g, c - ear)
        if theta is None or theta[0] == {a, b}:
            continue
        for constituent in theta[1]:
            touched = {v for eid in constituent for v in g.edge(eid).vertices}
            if a in touched and b in touched:
                closed = circles(g, constituent | ear)
                if len(closed) == 1 and _sign(u, closed[0]) == -1:
                    return True
    return False


def _is_antibalanced_k4(u: GainSignedGraph, c: EdgeSet) -> bool:
    """A subdivided K4 in which every triangle is negative"""
    g = u.graph
    branch, paths = _shape(g, c)
    if branch != [3, 3, 3, 3] or paths is None or len(paths) != 6:
        return False
    sides = {frozenset((a, b)): edges for a, b, edges in paths}
    if len(sides) != 6 or any(len(pair) != 2 for pair in sides):
        return False
    corners = sorted({v for pair in sides for v in pair})
    return all(
        _sign(u, sides[frozenset((x, y))] | sides[frozenset((y, z))] | sides[frozenset((x, z))]) == -1
        for x, y, z in combinations(corners, 3)
    )


def classify_hypercircuit(u: GainSignedGraph, c: Iterable[int]) -> HypercircuitClass:
    """
    Name the shape of a hypercircuit.

    Raises:
        AssertionError: If c matches none of the known shapes
    """
    c = frozenset(c)
    g = u.graph
    pieces = edge_components(u, c)
    if len(pieces) == 2:
        return HypercircuitClass.DISJOINT_PAIR
    if len(pieces) != 1:
        raise AssertionError(f'hypercircuit {sorted(c)} has {len(pieces)} edge components')
    if E_INF not in c and is_frame_circuit(u.sg, c):
        if not is_neutral(u, sign_circuit_of(u.sg, c)):
            raise AssertionError(f'sign circuit {sorted(c)} is dependent but not neutral')
        return HypercircuitClass.NEUTRAL_SIGN_CIRCUIT
    if E_INF in c:
        raise AssertionError(f'extra point inside connected hypercircuit {sorted(c)}')
    branch = sorted(d for d in g.degrees(c).values() if d >= 3)
    if is_balanced(u.sg, c):
        if 4 in branch:
            return HypercircuitClass.TIGHT_POSITIVE_PAIR
        if branch == [3, 3]:
            return HypercircuitClass.BALANCED_THETA
        raise AssertionError(f'balanced hypercircuit {sorted(c)} is neither a theta nor a tight pair')
    positive = _positive_circles(u, c)
    if len(positive) == 0:
        return HypercircuitClass.CONTRABALANCED_TRIPLE
    if len(positive) == 1:
        every = circles(g, c)
        shares_edge = any(a & b for i, a in enumerate(every) for b in every[i + 1:])
        if shares_edge:
            return HypercircuitClass.THETA_PLUS_LOLLIPOP
        return HypercircuitClass.LINKED_CIRCLES
    if len(positive) == 2:
        if _is_quadruple_path(u, c):
            return HypercircuitClass.QUADRUPLE_PATH
        if _is_theta_with_ear(u, c):
            return HypercircuitClass.THETA_WITH_EAR
        raise AssertionError(f'hypercircuit {sorted(c)} with two positive circles is neither '
                             f'a quadruple path nor a theta with an ear')
    if len(positive) == 3:
        if _is_antibalanced_k4(u, c):
            return HypercircuitClass.ANTIBALANCED_K4
        raise AssertionError(f'hypercircuit {sorted(c)} with three positive circles is not an antibalanced K4')
    raise AssertionError(f'hypercircuit {sorted(c)} has {len(positive)} positive circles')
