"""
Command line front end.  Every solver is a subcommand that reads a text file
(or flags), writes TSV (default) or JSON to stdout and reports problems on
stderr.  Exit codes:  0 success, 1 no solution, 2 bad input or usage,
3 --verify found a mismatch.
"""

import sys
import json
import argparse
import warnings

from typing import Any, Dict, List, Optional, Sequence

from .graph import Category
from .matching_classify import classify_unweighted, classify_weighted
from .mst_classify import classify_mst_edges, classify_spanning_tree_edges
from .flow import CriticalMode, max_flow, upward_critical, upward_critical_undirected
from .geometry import (DEFAULT_LEPS, DEFAULT_UEPS, DegenerateTriangleWarning,
                       NoTriangleError, TriangleInstance, balanced_arrangement,
                       polygon_reconstruct, triangle_from_median_closed,
                       triangle_from_median_search)
from . import oracle
from .data import read_bipartite, read_flow, read_multigraph, read_polygon
from .util import format_float, parse_decimal

__version__ = '0.1'
__all__ = ['EXIT_OK', 'EXIT_NO_SOLUTION', 'EXIT_INPUT', 'EXIT_MISMATCH', 'build_parser', 'run']


EXIT_OK = 0
EXIT_NO_SOLUTION = 1
EXIT_INPUT = 2
EXIT_MISMATCH = 3


class _UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    """
    ArgumentParser that raises instead of exiting on a usage error so that
    run() can report it as a one-line diagnostic.
    """

    def error(self, message):
        raise _UsageError(message)


def _out(line: str=''):
    sys.stdout.write(line+'\n')


def _err(line: str):
    sys.stderr.write(line+'\n')


def _dump(payload: Dict[str, Any]):
    _out(json.dumps(payload, indent=2))


def _report_mismatches(report: oracle.OracleReport):
    _err(f"verify: {len(report.mismatches)} mismatch(es)")
    for key,expected,actual in report.mismatches:
        expected = expected.name if isinstance(expected, Category) else expected
        actual = actual.name if isinstance(actual, Category) else actual
        _err(f"mismatch\t{key}\texpected={expected}\tactual={actual}")


def _vertex_label(key) -> str:
    side, index = key
    return f"{side}{index}"


def _edge_rows(edges, categories: Dict[int, Category]) -> List[Dict[str, Any]]:
    return [{'id': e.id, 'u': e.u, 'v': e.v, 'category': categories[e.id].name} for e in edges]


def _cmd_classify_matching(args) -> int:
    g = read_bipartite(args.file, weighted=args.weighted)
    if args.weighted:
        result = classify_weighted(g)
    else:
        result = classify_unweighted(g)

    if args.verbose:
        size = result.matching.size
        if args.weighted:
            cost = result.matching.cost / g.cost_scale if g.cost_scale != 1 else result.matching.cost
            _err(f"# matching size {size}, cost {cost}")
        else:
            _err(f"# matching size {size}")

    if args.json:
        _dump({'edges': _edge_rows(g.edges, result.edge_category),
               'vertices': [{'vertex': _vertex_label(key), 'category': cat.name}
                            for key,cat in result.vertex_category.items()],
               'status': 'ok'})
    else:
        for edge in g.edges:
            _out(f"edge\t{edge.id}\t{edge.u}\t{edge.v}\t{result.edge_category[edge.id].name}")
        for key in g.vertices:
            _out(f"vertex\t{_vertex_label(key)}\t{result.vertex_category[key].name}")

    if args.verify:
        family = [m.edges for m in oracle.enum_optimal_matchings(g, args.weighted)]
        ends = {edge.id: g.endpoints(edge.id) for edge in g.edges}
        expected = oracle.classification_from_enumeration(ends, family, g.vertices)
        report = oracle.compare(expected, result)
        if not report.ok:
            _report_mismatches(report)
            return EXIT_MISMATCH
    return EXIT_OK


def _cmd_classify_mst(args) -> int:
    g = read_multigraph(args.file, costs=not args.no_costs)
    if args.no_costs:
        categories = classify_spanning_tree_edges(g)
    else:
        categories = classify_mst_edges(g)

    if args.verbose:
        counts = {cat: sum(1 for c in categories.values() if c is cat) for cat in Category}
        _err("# "+', '.join(f"{cat.name} {counts[cat]}" for cat in Category))

    if args.json:
        _dump({'edges': _edge_rows(g.edges, categories), 'vertices': [], 'status': 'ok'})
    else:
        for edge in g.edges:
            _out(f"edge\t{edge.id}\t{edge.u}\t{edge.v}\t{categories[edge.id].name}")

    if args.verify:
        trees = oracle.enum_min_spanning_trees(g)
        ends = {edge.id: (edge.u, edge.v) for edge in g.edges}
        expected = oracle.classification_from_enumeration(ends, trees)
        report = oracle.compare(expected.edge_category, categories)
        if not report.ok:
            _report_mismatches(report)
            return EXIT_MISMATCH
    return EXIT_OK


def _cmd_critical_edges(args) -> int:
    net = read_flow(args.file, directed=not args.undirected)
    mode = CriticalMode(args.mode)
    assignment = max_flow(net)
    if net.directed:
        critical = upward_critical(net, mode, assignment)
    else:
        critical = upward_critical_undirected(net, mode, assignment)
    value = assignment.value

    if args.verbose:
        _err(f"# flow value {value}, {len(critical)} critical ({mode.value} mode)")
        if net.n <= oracle.MAX_FLOW_VERTICES:
            agreement = oracle.flow_mode_agreement([net])
            _err(f"# mode agreement {agreement:.2f}")

    arcs = [net.arcs[i] for i in sorted(critical)]
    if args.json:
        _dump({'edges': [{'id': a.id, 'u': a.u, 'v': a.v} for a in arcs],
               'vertices': [], 'value': value, 'status': 'ok'})
    else:
        for arc in arcs:
            _out(f"critical\t{arc.id}\t{arc.u}\t{arc.v}")

    if args.verify:
        expected = oracle.flow_increment_oracle(net)
        if mode is CriticalMode.RESIDUAL:
            report = oracle.compare(expected, critical)
        else:
            ## PAPER mode may miss arcs but must never report a false one
            extra = [(i, False, True) for i in sorted(critical - expected)]
            report = oracle.OracleReport(expected, critical, extra)
        cut = oracle.max_flow_by_cuts(net)
        if cut != value:
            report.mismatches.append(('value', cut, value))
        if not report.ok:
            _report_mismatches(report)
            return EXIT_MISMATCH
    return EXIT_OK


def _emit_points(args, points, status: str, extra: Optional[Dict[str, Any]]=None):
    p = args.precision
    if args.json:
        payload = {'vertices': [{'index': i, 'x': float(format_float(x, p)), 'y': float(format_float(y, p))}
                                for i,(x,y) in enumerate(points or [], 1)],
                   'status': status}
        if extra:
            payload.update(extra)
        _dump(payload)
    elif points is None:
        _out("NO SOLUTION")
    else:
        for i,(x,y) in enumerate(points, 1):
            _out(f"vertex\t{i}\t{format_float(x, p)}\t{format_float(y, p)}")


def _save_plot(args, draw):
    if not args.plot:
        return
    try:
        from matplotlib.figure import Figure
    except ImportError:
        raise ValueError("--plot needs matplotlib")
    fig = Figure()
    draw(fig)
    fig.savefig(args.plot)
    if args.verbose:
        _err(f"# saved figure to {args.plot}")


def _parse_weights(text: str) -> List:
    tokens = [token.strip() for token in text.split(',')]
    if any(not token for token in tokens):
        raise ValueError(f"Empty weight in '{text}'")
    return [parse_decimal(token) for token in tokens]


def _cmd_balanced_points(args) -> int:
    weights = _parse_weights(args.weights)
    points = balanced_arrangement(weights)
    _emit_points(args, points, 'ok' if points is not None else 'no-solution')
    if points is None:
        return EXIT_NO_SOLUTION

    def draw(fig):
        from .plot import plot_points
        plot_points(points, labels=[str(w) for w in weights], fig=fig)
    _save_plot(args, draw)
    return EXIT_OK


def _cmd_reconstruct_polygon(args) -> int:
    inst = read_polygon(args.file)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter('always')
        result = polygon_reconstruct(inst, refine=args.refine)
    for w in caught:
        _err(f"# warning: {w.message}")

    if args.verbose:
        _err(f"# x axis {result.x_status.value}, y axis {result.y_status.value}")

    axes = {'x': result.x_status.value, 'y': result.y_status.value}
    if args.json:
        status = 'ok' if result.vertices is not None else 'no-solution'
        _emit_points(args, result.vertices, status, {'axes': axes})
    else:
        _out(f"status\t{axes['x']}\t{axes['y']}")
        _emit_points(args, result.vertices, '')
    if result.vertices is None:
        return EXIT_NO_SOLUTION

    def draw(fig):
        from .plot import plot_polygon
        plot_polygon(result.vertices, inst.points, fig=fig)
    _save_plot(args, draw)
    return EXIT_OK


def _cmd_triangle_median(args) -> int:
    inst = TriangleInstance(args.lb, args.lc, args.lm)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter('always')
        try:
            if args.method == 'closed':
                triangle = triangle_from_median_closed(inst)
            else:
                triangle = triangle_from_median_search(inst, leps=args.leps, ueps=args.ueps)
        except NoTriangleError as e:
            triangle = None
            if args.verbose:
                _err(f"# {e}")

    status = 'ok'
    for w in caught:
        _err(f"# warning: {w.message}")
        if issubclass(w.category, DegenerateTriangleWarning):
            status = 'degenerate'
    if triangle is None:
        status = 'no-solution'

    _emit_points(args, list(triangle) if triangle is not None else None, status)
    if triangle is None:
        return EXIT_NO_SOLUTION

    def draw(fig):
        from .plot import plot_triangle
        plot_triangle(triangle, fig=fig)
    _save_plot(args, draw)
    return EXIT_OK


def _add_common(parser: argparse.ArgumentParser, verify: bool=False, geometry: bool=False):
    parser.add_argument('-j', '--json', action='store_true',
                        help='write JSON instead of TSV')
    parser.add_argument('-v', '--verbose', action='store_true',
                        help='print a short summary to stderr')
    if verify:
        parser.add_argument('--verify', action='store_true',
                            help='check the result against a brute-force oracle (small instances only)')
    if geometry:
        parser.add_argument('-p', '--precision', type=int, default=9,
                            help='number of decimal places for coordinates')
        parser.add_argument('--plot', type=str,
                            help='save a figure of the result to this file (needs matplotlib)')


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog='netdesign',
        description='classify graph elements against optimal matchings, spanning trees and flows, and solve planar construction problems',
        formatter_class=argparse.ArgumentDefaultsHelpFormatter
        )
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True

    p = subparsers.add_parser('classify-matching', formatter_class=argparse.ArgumentDefaultsHelpFormatter,
                              help='classify edges and vertices against maximum matchings')
    p.add_argument('file', type=str,
                   help='bipartite graph file')
    p.add_argument('-w', '--weighted', action='store_true',
                   help='classify against minimum cost maximum matchings')
    _add_common(p, verify=True)
    p.set_defaults(func=_cmd_classify_matching)

    p = subparsers.add_parser('classify-mst', formatter_class=argparse.ArgumentDefaultsHelpFormatter,
                              help='classify edges against minimum spanning trees')
    p.add_argument('file', type=str,
                   help='multigraph file')
    p.add_argument('-n', '--no-costs', action='store_true',
                   help='the file has no costs, classify against all spanning trees')
    _add_common(p, verify=True)
    p.set_defaults(func=_cmd_classify_mst)

    p = subparsers.add_parser('critical-edges', formatter_class=argparse.ArgumentDefaultsHelpFormatter,
                              help='find the upward critical arcs of a flow network')
    p.add_argument('file', type=str,
                   help='flow network file')
    p.add_argument('-m', '--mode', type=str, choices=[m.value for m in CriticalMode],
                   default=CriticalMode.RESIDUAL.value,
                   help='criticality test')
    p.add_argument('-u', '--undirected', action='store_true',
                   help='treat every arc as an undirected edge')
    _add_common(p, verify=True)
    p.set_defaults(func=_cmd_critical_edges)

    p = subparsers.add_parser('balanced-points', formatter_class=argparse.ArgumentDefaultsHelpFormatter,
                              help='place weighted points with triangle areas equal to weight sums')
    p.add_argument('--weights', type=str, required=True,
                   help='comma separated weights w1,...,wN (wN-1 = wN)')
    _add_common(p, geometry=True)
    p.set_defaults(func=_cmd_balanced_points)

    p = subparsers.add_parser('reconstruct-polygon', formatter_class=argparse.ArgumentDefaultsHelpFormatter,
                              help='reconstruct a polygon from its ratio points')
    p.add_argument('file', type=str,
                   help='polygon instance file')
    p.add_argument('-r', '--refine', type=int, default=2,
                   help='iterative refinement passes')
    _add_common(p, geometry=True)
    p.set_defaults(func=_cmd_reconstruct_polygon)

    p = subparsers.add_parser('triangle-median', formatter_class=argparse.ArgumentDefaultsHelpFormatter,
                              help='build a triangle from two sides and a median')
    p.add_argument('--lb', type=float, required=True,
                   help='length of side AC')
    p.add_argument('--lc', type=float, required=True,
                   help='length of side AB')
    p.add_argument('--lm', type=float, required=True,
                   help='length of the median from A')
    p.add_argument('--method', type=str, choices=['closed', 'search'], default='closed',
                   help='construction method')
    p.add_argument('--leps', type=float, default=DEFAULT_LEPS,
                   help='length tolerance for the search method')
    p.add_argument('--ueps', type=float, default=DEFAULT_UEPS,
                   help='angle tolerance for the search method')
    _add_common(p, geometry=True)
    p.set_defaults(func=_cmd_triangle_median)

    return parser


def run(argv: Optional[Sequence[str]]=None) -> int:
    """
    Parse the command line and run one subcommand.  Returns the exit code.
    """

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        _err(f"error: {e}")
        return EXIT_INPUT
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else EXIT_OK

    try:
        return args.func(args)
    except (ValueError, oracle.OracleRefusal) as e:
        _err(f"error: {e}")
        return EXIT_INPUT
    except OSError as e:
        _err(f"error: {e.filename}: {e.strerror}")
        return EXIT_INPUT
