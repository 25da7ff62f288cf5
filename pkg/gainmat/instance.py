"""
Instance files: a gain signed graph as JSON

    {
      "version": 1,
      "group": "Z",
      "n": 2,
      "edges": [
        {"ends": [0, 1], "gain": "1", "id": 0, "kind": "link", "sign": 1, "tau": [-1, 1]}
      ]
    }

Gains are strings so that rationals and large integers stay exact. An
optional "note" records where a file came from, for example a contraction
that erased the gains.
"""

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from .errors import GainMatError, InstanceError
from .gains import GainSignedGraph
from .graph import END_COUNT, Edge, EdgeKind, Graph
from .groups import group_from_name
from .signed import Orientation, SignedGraph


VERSION = 1

ERASED_NOTE = 'gains erased by contracting a set that is not hyperbalanced'


@dataclass(frozen=True)
class Instance:
    graph: GainSignedGraph
    note: Optional[str] = None


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _require(doc: Dict[str, Any], key: str, path: str, source: Optional[str]) -> Any:
    if key not in doc:
        raise InstanceError(f'missing field {key!r}', path=path or None, source=source)
    return doc[key]


def _parse_edge(raw: Any, index: int, n: int, group, source: Optional[str]):
    path = f'edges[{index}]'
    if not isinstance(raw, dict):
        raise InstanceError('edge must be an object', path=path, source=source)

    def fail(message, field=None):
        raise InstanceError(message, path=f'{path}.{field}' if field else path, source=source)

    eid = _require(raw, 'id', path, source)
    if not _is_int(eid) or eid < 0:
        fail(f'edge id must be a non-negative integer, got {eid!r}', 'id')
    kind_name = _require(raw, 'kind', path, source)
    try:
        kind = EdgeKind(kind_name)
    except (ValueError, TypeError):
        fail(f'unknown kind {kind_name!r}', 'kind')
    ends = raw.get('ends', [])
    if not isinstance(ends, list) or not all(_is_int(v) for v in ends):
        fail('ends must be a list of vertex numbers', 'ends')
    if kind is EdgeKind.LOOP and len(ends) == 1:
        ends = ends * 2
    if len(ends) != END_COUNT[kind]:
        fail(f'a {kind.value} edge has {END_COUNT[kind]} ends, got {len(ends)}', 'ends')
    for v in ends:
        if not 0 <= v < n:
            fail(f'vertex {v} outside [0, {n})', 'ends')
    if kind is EdgeKind.LINK and ends[0] == ends[1]:
        fail('a link needs two distinct ends', 'ends')
    if kind is EdgeKind.LOOP and ends[0] != ends[1]:
        fail('a loop needs both ends at one vertex', 'ends')

    default_sign = {EdgeKind.HALF: -1, EdgeKind.LOOSE: 1}.get(kind)
    sign = raw.get('sign', default_sign)
    if not _is_int(sign) or sign not in (1, -1):
        fail(f'sign must be 1 or -1, got {sign!r}', 'sign')
    if default_sign is not None and sign != default_sign:
        fail(f'a {kind.value} edge has sign {default_sign}', 'sign')

    tau = raw.get('tau', [] if kind is EdgeKind.LOOSE else None)
    if tau is None:
        fail('missing field \'tau\'')
    if not isinstance(tau, list) or len(tau) != len(ends) or any(not _is_int(t) or t not in (1, -1) for t in tau):
        fail(f'tau needs one value +1 or -1 per end, got {tau!r}', 'tau')
    if len(tau) == 2 and tau[0] * tau[1] != -sign:
        fail(f'tau values {tau} do not match sign {sign}', 'tau')

    gain_text = _require(raw, 'gain', path, source)
    if not isinstance(gain_text, (str, int)) or isinstance(gain_text, bool):
        fail(f'gain must be a string, got {gain_text!r}', 'gain')
    try:
        gain = group.parse(str(gain_text))
    except GainMatError as e:
        fail(str(e), 'gain')
    return Edge.make(eid, kind, ends), sign, tau, gain


def loads(text: str, source: Optional[str] = None) -> Instance:
    """
    Parse an instance file.

    Args:
        text: File contents
        source: File name used in error messages

    Returns:
        Instance holding the graph and the optional note

    Raises:
        InstanceError: With the line and column of a JSON syntax error, or
            the path of the offending field
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InstanceError(e.msg, line=e.lineno, column=e.colno, source=source)
    if not isinstance(doc, dict):
        raise InstanceError('instance must be a JSON object', line=1, column=1, source=source)

    version = _require(doc, 'version', '', source)
    if version != VERSION:
        raise InstanceError(f'unsupported version {version!r}', path='version', source=source)
    try:
        group = group_from_name(_require(doc, 'group', '', source))
    except InstanceError:
        raise
    except GainMatError as e:
        raise InstanceError(str(e), path='group', source=source)
    n = _require(doc, 'n', '', source)
    if not _is_int(n) or n < 0:
        raise InstanceError(f'n must be a non-negative integer, got {n!r}', path='n', source=source)
    raw_edges = doc.get('edges', [])
    if not isinstance(raw_edges, list):
        raise InstanceError('edges must be a list', path='edges', source=source)
    note = doc.get('note')
    if note is not None and not isinstance(note, str):
        raise InstanceError('note must be a string', path='note', source=source)

    edges: List[Edge] = []
    sigma, tau, phi = {}, {}, {}
    for index, raw in enumerate(raw_edges):
        edge, sign, values, gain = _parse_edge(raw, index, n, group, source)
        if edge.id in sigma:
            raise InstanceError(f'duplicate edge id {edge.id}', path=f'edges[{index}].id', source=source)
        edges.append(edge)
        sigma[edge.id] = sign
        for slot, value in enumerate(values):
            tau[(edge.id, slot)] = value
        phi[edge.id] = gain
    try:
        sg = SignedGraph(Graph(n, tuple(edges)), sigma)
        graph = GainSignedGraph(sg, Orientation(tau), phi, group)
    except GainMatError as e:
        raise InstanceError(str(e), path='edges', source=source)
    return Instance(graph, note)


def load(path: Union[str, Path]) -> Instance:
    """Read an instance file from disk"""
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except (OSError, UnicodeDecodeError) as e:
        raise InstanceError(f'cannot read file: {e}', source=str(path))
    return loads(text, source=str(path))


def edge_record(u: GainSignedGraph, eid: int) -> Dict[str, Any]:
    edge = u.graph.edge(eid)
    return {
        'id': eid,
        'kind': edge.kind.value,
        'ends': list(edge.vertices),
        'sign': u.sign(eid),
        'tau': [u.tau(eid, end.slot) for end in edge.ends],
        'gain': u.group.format(u.gain(eid)),
    }


def dumps(u: GainSignedGraph, note: Optional[str] = None) -> str:
    """
    Serialize in canonical form: header keys in a fixed order, one edge per
    line with sorted keys, edges by id.
    """
    lines = ['{', f'  "version": {VERSION},', f'  "group": {json.dumps(str(u.group))},', f'  "n": {u.n},']
    if note is not None:
        lines.append(f'  "note": {json.dumps(note)},')
    records = [json.dumps(edge_record(u, edge.id), sort_keys=True)
               for edge in sorted(u.graph.edges, key=lambda e: e.id)]
    if records:
        lines.append('  "edges": [')
        lines.extend(f'    {record},' for record in records[:-1])
        lines.append(f'    {records[-1]}')
        lines.append('  ]')
    else:
        lines.append('  "edges": []')
    lines.append('}')
    return '\n'.join(lines) + '\n'


def dump(u: GainSignedGraph, path: Union[str, Path], note: Optional[str] = None):
    Path(path).write_text(dumps(u, note), encoding='utf-8')
