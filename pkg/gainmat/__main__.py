"""
Command-line entry point for gainmat
Reads an instance file and prints matroid, arrangement or polytope data as
JSON lines, with a short summary on standard error
"""

import argparse
import sys
from pathlib import Path

from . import __version__
from .arrangement import (
    FAMILIES, SIGN_PATTERNS, FamilySpec, build_arrangement, chromatic_by_flats,
    chromatic_polynomials, count_regions, generate_family,
)
from .config import GainmatConfig, create_default_config
from .errors import BudgetExceeded, GainMatError
from .gains import E_INF
from .groups import group_from_name
from .instance import ERASED_NOTE, dumps, load
from .matroid import GainSignedMatroid
from .minors import minor
from .polytope import POINT_FAMILIES, PolytopeQuery, polytope_dimension
from .report import ReportWriter, edge_list, polynomial_coefficients
from .verify import corpus_instances, exhaustive_corpus, random_corpus, verify_instances


EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_INTERRUPTED = 130


def parse_ids(text, allow_inf=True):
    """
    Parse an edge id list such as "0,2,inf"; an empty string is the empty set

    Raises:
        GainMatError: On anything but integers and `inf`
    """
    ids = set()
    for token in (t.strip() for t in (text or '').split(',')):
        if not token:
            continue
        if token == 'inf' and allow_inf:
            ids.add(E_INF)
            continue
        try:
            value = int(token)
        except ValueError:
            raise GainMatError(f'Invalid edge id: {token!r}')
        if value < 0:
            raise GainMatError(f'Invalid edge id: {token!r}')
        ids.add(value)
    return frozenset(ids)


def _config(args):
    return GainmatConfig.from_file(
        Path(args.config) if args.config else None,
        max_subset_edges=args.max_subsets,
        max_circuit_edges=args.max_edges,
        force_color=True if args.force_color else None,
        pretty=True if args.pretty else None,
    )


def _writer(config):
    return ReportWriter(pretty=config.pretty, force_color=config.force_color)


def _matroid(args, config):
    u = load(args.file).graph
    return GainSignedMatroid(u, extended=args.extended, config=config)


# -- commands ------------------------------------------------------------------

def cmd_rank(args, config, report):
    matroid = _matroid(args, config)
    s = matroid.ground_set if args.subset is None else parse_ids(args.subset)
    rank = matroid.rank(s)
    report.record({'command': 'rank', 'subset': s, 'rank': rank, 'extended': args.extended})
    report.title('rank')
    report.field('subset', edge_list(s))
    report.field('rank', rank)
    return EXIT_OK


def cmd_independent(args, config, report):
    matroid = _matroid(args, config)
    s = parse_ids(args.subset)
    certificate = matroid.certificate(s)
    report.record({
        'command': 'independent',
        'subset': s,
        'independent': certificate.independent,
        'components': [{'edges': c.edges, 'kind': c.kind, 'excess': c.excess,
                        'hyperfrustrated': c.hyperfrustrated} for c in certificate.components],
        'special': certificate.special,
    })
    report.title('independent')
    report.field('subset', edge_list(s))
    report.field('independent', certificate.independent)
    return EXIT_OK


def cmd_closure(args, config, report):
    matroid = _matroid(args, config)
    s = parse_ids(args.subset)
    closed = matroid.closure(s)
    report.record({'command': 'closure', 'subset': s, 'closure': closed, 'rank': matroid.rank(s)})
    report.title('closure')
    report.field('closure', edge_list(closed))
    return EXIT_OK


def cmd_circuits(args, config, report):
    matroid = _matroid(args, config)
    found = matroid.circuits()
    for circuit, kind in found:
        report.record({'command': 'circuits', 'circuit': circuit, 'class': kind})
    report.title('circuits')
    report.field('count', len(found))
    return EXIT_OK


def cmd_bases(args, config, report):
    matroid = _matroid(args, config)
    found = matroid.bases()
    for basis in found:
        report.record({'command': 'bases', 'basis': basis})
    report.title('bases')
    report.field('count', len(found))
    return EXIT_OK


def cmd_cocircuits(args, config, report):
    matroid = _matroid(args, config)
    found = matroid.cocircuits()
    for cocircuit in found:
        report.record({'command': 'cocircuits', 'cocircuit': cocircuit})
    report.title('cocircuits')
    report.field('count', len(found))
    return EXIT_OK


def cmd_flats(args, config, report):
    matroid = _matroid(args, config)
    found = matroid.flats(hyperbalanced_only=args.hyperbalanced)
    for flat, descriptor in found:
        report.record({
            'command': 'flats',
            'flat': flat,
            'rank': matroid.rank(flat),
            'kind': descriptor.kind,
            'unbalanced': sorted(descriptor.unbalanced),
            'partition': [sorted(block) for block in descriptor.partition],
            'zeta': dict(descriptor.zeta),
            'theta': None if descriptor.theta is None else {
                v: (descriptor.group or matroid.u.group).format(t) for v, t in descriptor.theta.items()
            },
        })
    report.title('flats')
    report.field('count', len(found))
    return EXIT_OK


def cmd_minor(args, config, report):
    u = load(args.file).graph
    result = minor(u, parse_ids(args.delete, allow_inf=False), parse_ids(args.contract))
    report.output.write(dumps(result.graph, ERASED_NOTE if result.gains_erased else None))
    report.output.flush()
    report.title('minor')
    report.field('vertices', f'{u.n} -> {result.graph.n}')
    report.field('edges', f'{len(u.graph.edges)} -> {len(result.graph.graph.edges)}')
    report.field('gains erased', result.gains_erased)
    return EXIT_OK


def _family_spec(args):
    return FamilySpec(args.family, args.n, args.k, args.l, args.sign_pattern)


def cmd_family(args, config, report):
    u = generate_family(_family_spec(args))
    report.output.write(dumps(u))
    report.output.flush()
    report.title('family')
    report.field('family', args.family)
    report.field('edges', len(u.graph.edges))
    return EXIT_OK


def cmd_arrangement(args, config, report):
    if args.family:
        u = generate_family(_family_spec(args))
    elif args.file:
        u = load(args.file).graph
    else:
        raise GainMatError('arrangement needs --family or an instance file')
    for h in build_arrangement(u, projective=args.projective):
        report.record({'command': 'arrangement', 'edge': 'inf' if h.edge == E_INF else h.edge,
                       'hyperplane': h.describe(), 'kind': h.kind})
    polys = chromatic_by_flats(u, config) if args.by_flats else chromatic_polynomials(u, config)
    counts = count_regions(u, config)
    report.record({
        'command': 'arrangement',
        'chi': polynomial_coefficients(polys.chi),
        'chi_balanced': polynomial_coefficients(polys.chi_balanced),
        'chi_infinity': polynomial_coefficients(polys.chi_infinity),
        'regions': counts.regions,
        'bounded_regions': counts.bounded_regions,
        'relatively_bounded_regions': counts.relatively_bounded_regions,
        'regions_infinity': counts.regions_infinity,
    })
    report.title('arrangement')
    report.field('chi', polys.chi.as_expr())
    report.field('chi^b', polys.chi_balanced.as_expr())
    report.field('chi_inf', polys.chi_infinity.as_expr())
    report.field('regions', counts.regions)
    report.field('bounded regions', counts.bounded_regions)
    return EXIT_OK


def cmd_polytope(args, config, report):
    u = load(args.file).graph
    dimension = polytope_dimension(PolytopeQuery.from_graph(args.points, u))
    report.record({'command': 'polytope', 'points': args.points, 'dimension': dimension})
    report.title('polytope')
    report.field('points', args.points)
    report.field('dimension', dimension)
    return EXIT_OK


def cmd_verify(args, config, report):
    if args.corpus:
        instances = corpus_instances(args.corpus)
    elif args.random:
        seed, count = args.random
        instances = random_corpus(seed, count, config, group_from_name(args.group))
    elif args.exhaustive:
        instances = exhaustive_corpus(args.max_n, args.max_edges_per_instance, args.limit)
    else:
        raise GainMatError('verify needs --corpus, --random or --exhaustive')

    def on_result(name, result):
        if not result.passed:
            report.record({'command': 'verify', 'instance': name, 'check': result.name,
                           'passed': False, 'witness': result.witness})

    summary = verify_instances(instances, config, args.seed, on_result)
    report.record({'command': 'verify', 'instances': summary.instances, 'checks': summary.checks,
                   'failures': len(summary.failures), 'passed': summary.passed})
    report.title('verify')
    report.field('instances', summary.instances)
    report.field('checks', summary.checks)
    for name, result in summary.failures[:5]:
        report.field(f'{name} {result.name}', result.witness)
    report.status(summary.passed, f'{len(summary.failures)} failures' if summary.failures else None)
    return EXIT_OK if summary.passed else EXIT_VERIFY_FAILED


def cmd_init_config(args, config, report):
    path = create_default_config(Path(args.path) if args.path else None)
    report.title('init-config')
    report.field('written', path)
    return EXIT_OK


COMMANDS = {
    'rank': cmd_rank,
    'independent': cmd_independent,
    'closure': cmd_closure,
    'circuits': cmd_circuits,
    'bases': cmd_bases,
    'cocircuits': cmd_cocircuits,
    'flats': cmd_flats,
    'minor': cmd_minor,
    'family': cmd_family,
    'arrangement': cmd_arrangement,
    'polytope': cmd_polytope,
    'verify': cmd_verify,
    'init-config': cmd_init_config,
}


def _add_common(p):
    p.add_argument('--config', default=None, help='Configuration file (default: search .gainmat.toml)')
    p.add_argument('--max-subsets', type=int, default=None,
                   help='Largest ground set for subset enumerations (default: 16)')
    p.add_argument('--max-edges', type=int, default=None,
                   help='Largest ground set for the circuit search (default: 20)')
    p.add_argument('--force-color', action='store_true',
                   help='Force color output even if terminal does not support it')
    p.add_argument('--pretty', action='store_true', help='Highlight JSON lines on colour terminals')


def _add_family(p, required=False):
    p.add_argument('--family', required=required, choices=FAMILIES, help='Named arrangement family')
    p.add_argument('--n', type=int, default=2, help='Number of vertices (default: 2)')
    p.add_argument('--k', type=int, default=0, help='Gain window lower bound -k (default: 0)')
    p.add_argument('--l', type=int, default=0, help='Gain window upper bound l (default: 0)')
    p.add_argument('--sign-pattern', default='positive', choices=SIGN_PATTERNS,
                   help='Edge signs of the custom deformation (default: positive)')


def build_parser():
    parser = argparse.ArgumentParser(
        prog='gainmat',
        description='gainmat - Matroids and arrangements of gain signed graphs',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""Examples:
  gainmat rank triangle.json
  gainmat closure --subset 0,1 --extended triangle.json
  gainmat circuits digon.json
  gainmat minor --contract 0 --delete 3 graph.json
  gainmat arrangement --family shi --n 3
  gainmat polytope --points edge c4.json
  gainmat verify --random 42 500"""
    )
    parser.add_argument('-v', '--version', action='version', version=f'gainmat {__version__}')
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    for name, help_text in (('rank', 'Rank of an edge set (default: the ground set)'),
                            ('independent', 'Independence certificate of an edge set'),
                            ('closure', 'Closure of an edge set (default: the empty set)'),
                            ('circuits', 'All circuits with their structural class'),
                            ('bases', 'All bases'),
                            ('cocircuits', 'All cocircuits'),
                            ('flats', 'All flats with their descriptors')):
        p = sub.add_parser(name, help=help_text)
        p.add_argument('file', help='Instance file')
        p.add_argument('--extended', action='store_true', help='Add the extra point inf to the ground set')
        if name in ('rank', 'independent', 'closure'):
            p.add_argument('--subset', default=None if name == 'rank' else '',
                           help='Comma separated edge ids; inf is the extra point')
        if name == 'flats':
            p.add_argument('--hyperbalanced', action='store_true', help='Only hyperbalanced flats')
        _add_common(p)

    p = sub.add_parser('minor', help='Delete and contract edges, printing the minor as an instance file')
    p.add_argument('file', help='Instance file')
    p.add_argument('--delete', default='', help='Edge ids to delete')
    p.add_argument('--contract', default='', help='Edge ids to contract')
    _add_common(p)

    p = sub.add_parser('family', help='Print a named family as an instance file')
    _add_family(p, required=True)
    _add_common(p)

    p = sub.add_parser('arrangement', help='Hyperplanes, chromatic polynomials and region counts')
    p.add_argument('file', nargs='?', default=None, help='Instance file (or use --family)')
    _add_family(p)
    p.add_argument('--projective', action='store_true', help='List the infinite hyperplane too')
    p.add_argument('--by-flats', action='store_true', help='Compute polynomials from the flats')
    _add_common(p)

    p = sub.add_parser('polytope', help='Dimension of edge, bidirected, arc or double arc points')
    p.add_argument('file', help='Instance file')
    p.add_argument('--points', required=True, choices=POINT_FAMILIES, help='Point family')
    _add_common(p)

    p = sub.add_parser('verify', help='Run the oracle battery')
    source = p.add_mutually_exclusive_group()
    source.add_argument('--corpus', default=None, help='Directory of instance files')
    source.add_argument('--random', nargs=2, type=int, metavar=('SEED', 'COUNT'),
                        help='Random instances from a seed')
    source.add_argument('--exhaustive', action='store_true', help='Every small instance')
    p.add_argument('--group', default='Z', help='Gain group of random instances (default: Z)')
    p.add_argument('--max-n', type=int, default=3, help='Vertices of exhaustive instances (default: 3)')
    p.add_argument('--max-edges-per-instance', type=int, default=4,
                   help='Edges of exhaustive instances (default: 4)')
    p.add_argument('--limit', type=int, default=None, help='Stop after this many exhaustive instances')
    p.add_argument('--seed', type=int, default=0, help='Seed of the sampled checks (default: 0)')
    _add_common(p)

    p = sub.add_parser('init-config', help='Write a default configuration file')
    p.add_argument('path', nargs='?', default=None, help='Target (default: ~/.gainmat/config.toml)')
    p.set_defaults(config=None, max_subsets=None, max_edges=None, force_color=False, pretty=False)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        config = _config(args)
        report = _writer(config)
        return COMMANDS[args.command](args, config, report)
    except BudgetExceeded as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except KeyboardInterrupt:
        print("\nInterrupted", file=sys.stderr)
        return EXIT_INTERRUPTED
    except Exception as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_VERIFY_FAILED


if __name__ == '__main__':
    sys.exit(main())
