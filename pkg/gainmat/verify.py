"""
Instance corpora and the oracle battery run by `gainmat verify`

Each check compares two independent computations of the same matroid
data and reports the first disagreement it meets, with subsets visited
by increasing size so the witness is as small as the search allows.
"""

import random
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from pathlib import Path
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .config import GainmatConfig
from .errors import ContractionObstruction, EmbeddingError
from .gains import (
    E_INF, EdgeSpec, GainSignedGraph, half, link, loop, loose, reorient,
    sign_switched, switch_gains,
)
from .groups import INTEGERS, AbelianGroup, IntegersMod
from .instance import dumps, load
from .linalg import field_for_group, verify_rank_theorem
from .matroid import GainSignedMatroid, check_rank_axioms
from .minors import contract, delete
from .signed import frame_rank


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    checked: int
    witness: Optional[str] = None
    skipped: bool = False


@dataclass
class VerifySummary:
    instances: int = 0
    checks: int = 0
    failures: List[Tuple[str, CheckResult]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def _show(s: Iterable[int]) -> str:
    return '{' + ', '.join('inf' if e == E_INF else str(e) for e in sorted(s)) + '}'


def _subsets(ground: Sequence[int]) -> Iterator[frozenset]:
    for size in range(len(ground) + 1):
        for combo in combinations(ground, size):
            yield frozenset(combo)


# -- instance generators -------------------------------------------------------

def _random_gain(rng: random.Random, group: AbelianGroup, gain_range: int):
    if isinstance(group, IntegersMod):
        return rng.randrange(group.m)
    return rng.randint(-gain_range, gain_range)


def random_instance(rng: random.Random, n: int = 4, m: int = 6, gain_range: int = 2,
                    group: AbelianGroup = INTEGERS) -> GainSignedGraph:
    """
    A random gain signed graph with n vertices and m edges: mostly links,
    some loops and half edges, the odd loose edge.
    """
    specs: List[EdgeSpec] = []
    for _ in range(m):
        gain = _random_gain(rng, group, gain_range)
        roll = rng.random()
        if n >= 2 and roll < 0.6:
            u, v = rng.sample(range(n), 2)
            specs.append(link(u, v, rng.choice((1, -1)), gain))
        elif n >= 1 and roll < 0.75:
            specs.append(loop(rng.randrange(n), rng.choice((1, -1)), gain))
        elif n >= 1 and roll < 0.95:
            specs.append(half(rng.randrange(n), gain))
        else:
            specs.append(loose(gain))
    return GainSignedGraph.from_specs(n, specs, group)


def edge_types(n: int, gains: Sequence[int] = (-1, 0, 1)) -> List[EdgeSpec]:
    """Every edge with reference orientation on n vertices: links and loops of both signs, half and loose edges"""
    types = []
    for g in gains:
        for u, v in combinations(range(n), 2):
            types.extend((link(u, v, 1, g), link(u, v, -1, g)))
        for v in range(n):
            types.extend((loop(v, 1, g), loop(v, -1, g), half(v, g)))
        types.append(loose(g))
    return types


def exhaustive_instances(max_n: int = 3, max_edges: int = 4,
                         gains: Sequence[int] = (-1, 0, 1)) -> Iterator[GainSignedGraph]:
    """Every multiset of edge types with at most max_edges edges, for 1 <= n <= max_n"""
    for n in range(1, max_n + 1):
        types = edge_types(n, gains)
        for m in range(max_edges + 1):
            for combo in combinations_with_replacement(range(len(types)), m):
                yield GainSignedGraph.from_specs(n, [types[i] for i in combo], INTEGERS)


def corpus_instances(directory: Union[str, Path]) -> Iterator[Tuple[str, GainSignedGraph]]:
    for path in sorted(Path(directory).glob('*.json')):
        yield path.name, load(path).graph


# -- the checks ----------------------------------------------------------------

def check_rank_theorem(u: GainSignedGraph, config: GainmatConfig) -> CheckResult:
    """Combinatorial rank against exact matrix rank, in both matroids"""
    try:
        exact = field_for_group(u.group)
    except EmbeddingError:
        return CheckResult('rank-theorem', True, 0, skipped=True)
    checked = 0
    for extended in (False, True):
        matroid = GainSignedMatroid(u, extended, config)
        mode = 'all' if len(matroid.ground_set) <= config.get('max_subset_edges') else 'sample'
        report = verify_rank_theorem(matroid, mode, samples=config.get('axiom_samples'),
                                     field=exact, max_mismatches=1)
        checked += report.checked
        if not report.passed:
            s, combinatorial, algebraic = report.mismatches[0]
            return CheckResult('rank-theorem', False, checked,
                               f'{_show(s)}: rank {combinatorial}, matrix rank {algebraic}')
    return CheckResult('rank-theorem', True, checked)


def check_axioms(u: GainSignedGraph, config: GainmatConfig,
                 rng: Optional[random.Random] = None) -> CheckResult:
    checked = 0
    for extended in (False, True):
        matroid = GainSignedMatroid(u, extended, config)
        report = check_rank_axioms(matroid.rank, matroid.ground_set, config.get('axiom_mode'),
                                   config.get('axiom_samples'), rng)
        checked += report.checked
        if not report.passed:
            return CheckResult('axioms', False, checked, _axiom_witness(report.axiom, report.witness))
    return CheckResult('axioms', True, checked)


def _axiom_witness(axiom: str, witness: Tuple) -> str:
    s, *elements = witness
    tail = ''.join(f', {"inf" if e == E_INF else e}' for e in elements)
    return f'{axiom} at S={_show(s)}{tail}'


def check_circuits(u: GainSignedGraph, config: GainmatConfig) -> CheckResult:
    """
    Every minimal dependent set gets exactly one structural class, and the
    structural independence test agrees with it.
    """
    matroid = GainSignedMatroid(u, False, config)
    checked = 0
    try:
        for circuit, _ in matroid.circuits():
            checked += 1
            if matroid.certificate(circuit).independent:
                return CheckResult('circuits', False, checked, f'{_show(circuit)} certified independent')
            for e in circuit:
                if not matroid.certificate(circuit - {e}).independent:
                    return CheckResult('circuits', False, checked, f'{_show(circuit - {e})} certified dependent')
    except AssertionError as e:
        return CheckResult('circuits', False, checked, str(e))
    return CheckResult('circuits', True, checked)


def check_closure(u: GainSignedGraph, config: GainmatConfig) -> CheckResult:
    """Structural closure against closure read off the rank function"""
    checked = 0
    for extended in (False, True):
        matroid = GainSignedMatroid(u, extended, config)
        for s in _subsets(sorted(matroid.ground_set)):
            checked += 1
            structural = matroid.closure(s)
            by_rank = matroid.rank_closure(s)
            if structural != by_rank:
                return CheckResult('closure', False, checked,
                                   f'S={_show(s)}: {_show(structural)} vs {_show(by_rank)}')
    return CheckResult('closure', True, checked)


def check_flats(u: GainSignedGraph, config: GainmatConfig) -> CheckResult:
    """Each flat's descriptor regenerates exactly that flat, in both matroids"""
    checked = 0
    for extended in (False, True):
        matroid = GainSignedMatroid(u, extended, config)
        for flat, descriptor in matroid.flats():
            checked += 1
            try:
                regenerated = descriptor.edge_set(u, extended)
            except ValueError as e:
                return CheckResult('flats', False, checked, f'{_show(flat)}: {e}')
            if regenerated != flat:
                return CheckResult('flats', False, checked,
                                   f'{_show(flat)} regenerates as {_show(regenerated)}')
    return CheckResult('flats', True, checked)


def check_minors(u: GainSignedGraph, config: GainmatConfig,
                 rng: Optional[random.Random] = None) -> CheckResult:
    """
    For disjoint S and A: rank of A after contracting S is
    rank(A + S) - rank(S); deleting T and contracting S give the same
    file in either order.
    """
    rng = rng or random.Random(0)
    matroid = GainSignedMatroid(u, False, config)
    ground = sorted(u.graph.edge_ids)
    checked = 0
    for _ in range(config.get('minor_pairs')):
        s = frozenset(e for e in ground if rng.random() < 0.4)
        rest = [e for e in ground if e not in s]
        a = frozenset(e for e in rest if rng.random() < 0.5)
        t = frozenset(e for e in rest if e not in a and rng.random() < 0.5)
        try:
            contracted = contract(u, s)
        except ContractionObstruction:
            continue
        checked += 1
        expected = matroid.rank(a | s) - matroid.rank(s)
        actual = GainSignedMatroid(contracted.graph, False, config).rank(a)
        if actual != expected:
            return CheckResult('minors', False, checked,
                               f'S={_show(s)} A={_show(a)}: rank {actual}, expected {expected}')
        first = contract(delete(u, t), s)
        second = delete(contracted.graph, t)
        if dumps(first.graph) != dumps(second):
            return CheckResult('minors', False, checked,
                               f'S={_show(s)} T={_show(t)}: delete and contract do not commute')
    return CheckResult('minors', True, checked)


def check_extra_point(u: GainSignedGraph, config: GainmatConfig) -> CheckResult:
    """
    Contracting the extra point leaves the frame matroid: for every A,
    rank(A + inf) - 1, the frame rank of A and the rank of A in the
    contraction all agree.
    """
    extended = GainSignedMatroid(u, True, config)
    contracted = GainSignedMatroid(contract(u, {E_INF}).graph, False, config)
    checked = 0
    for a in _subsets(sorted(u.graph.edge_ids)):
        checked += 1
        lowered = extended.rank(a | {E_INF}) - 1
        frame = frame_rank(u.sg, a)
        after = contracted.rank(a)
        if not lowered == frame == after:
            return CheckResult('extra-point', False, checked,
                               f'A={_show(a)}: rank(A + inf) - 1 = {lowered}, frame rank {frame}, '
                               f'rank after contraction {after}')
    return CheckResult('extra-point', True, checked)


def random_switching(u: GainSignedGraph, rng: random.Random, gain_range: int = 2) -> GainSignedGraph:
    """Switch signs by a random zeta, gains by a random theta, and reorient random edges"""
    zeta = {v: rng.choice((1, -1)) for v in range(u.n)}
    theta = {v: _random_gain(rng, u.group, gain_range) for v in range(u.n)}
    switched = switch_gains(sign_switched(u, zeta), theta)
    for eid in sorted(u.graph.edge_ids):
        if u.graph.edge(eid).ends and rng.random() < 0.5:
            switched = reorient(switched, eid)
    return switched


def check_switching(u: GainSignedGraph, config: GainmatConfig,
                    rng: Optional[random.Random] = None, rounds: int = 2) -> CheckResult:
    """Switching and reorienting leave every rank unchanged"""
    rng = rng or random.Random(0)
    original = GainSignedMatroid(u, True, config)
    checked = 0
    for _ in range(rounds):
        other = GainSignedMatroid(random_switching(u, rng, config.get('gain_range')), True, config)
        for s in _subsets(sorted(original.ground_set)):
            checked += 1
            if original.rank(s) != other.rank(s):
                return CheckResult('switching', False, checked,
                                   f'S={_show(s)}: rank {original.rank(s)} becomes {other.rank(s)}')
    return CheckResult('switching', True, checked)


def corrupted_rank(rank: Callable[[frozenset], int], target: frozenset) -> Callable[[frozenset], int]:
    """A rank function that is off by one on a single set"""
    def wrong(s):
        s = frozenset(s)
        return rank(s) + 1 if s == target else rank(s)
    return wrong


def check_negative_control(u: GainSignedGraph, config: GainmatConfig) -> CheckResult:
    """The axiom checker must notice a rank function corrupted on one set"""
    matroid = GainSignedMatroid(u, True, config)
    ground = sorted(matroid.ground_set)
    target = frozenset(ground[:1])
    report = check_rank_axioms(corrupted_rank(matroid.rank, target), ground, 'exhaustive')
    if report.passed:
        return CheckResult('negative-control', False, report.checked,
                           f'rank corrupted at {_show(target)} went unnoticed')
    return CheckResult('negative-control', True, report.checked)


def run_battery(u: GainSignedGraph, config: Optional[GainmatConfig] = None,
                rng: Optional[random.Random] = None) -> List[CheckResult]:
    """Every check on one instance"""
    config = config or GainmatConfig()
    rng = rng or random.Random(0)
    return [
        check_rank_theorem(u, config),
        check_axioms(u, config, rng),
        check_circuits(u, config),
        check_closure(u, config),
        check_flats(u, config),
        check_minors(u, config, rng),
        check_extra_point(u, config),
        check_switching(u, config, rng),
        check_negative_control(u, config),
    ]


def verify_instances(instances: Iterable[Tuple[str, GainSignedGraph]],
                     config: Optional[GainmatConfig] = None, seed: int = 0,
                     on_result: Optional[Callable[[str, CheckResult], None]] = None) -> VerifySummary:
    """
    Run the battery over named instances.

    Args:
        instances: (name, graph) pairs
        config: Budgets and sampling settings
        seed: Seed of the random source shared by the sampled checks
        on_result: Called with each instance name and check result

    Returns:
        VerifySummary with every failure
    """
    config = config or GainmatConfig()
    rng = random.Random(seed)
    summary = VerifySummary()
    for name, u in instances:
        summary.instances += 1
        for result in run_battery(u, config, rng):
            summary.checks += 1
            if on_result is not None:
                on_result(name, result)
            if not result.passed:
                summary.failures.append((name, result))
    return summary


def random_corpus(seed: int, count: int, config: Optional[GainmatConfig] = None,
                  group: AbelianGroup = INTEGERS) -> Iterator[Tuple[str, GainSignedGraph]]:
    """`count` random instances drawn from one seed, sized by the [random] settings"""
    config = config or GainmatConfig()
    rng = random.Random(seed)
    for index in range(count):
        n = rng.randint(1, config.get('random_vertices'))
        m = rng.randint(0, config.get('random_edges'))
        yield f'random-{seed}-{index}', random_instance(rng, n, m, config.get('gain_range'), group)


def exhaustive_corpus(max_n: int = 3, max_edges: int = 4,
                      limit: Optional[int] = None) -> Iterator[Tuple[str, GainSignedGraph]]:
    for index, u in enumerate(exhaustive_instances(max_n, max_edges)):
        if limit is not None and index >= limit:
            return
        yield f'exhaustive-{index}', u
