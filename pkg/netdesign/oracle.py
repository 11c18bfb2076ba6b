"""
Brute-force reference implementations.  Everything here is exponential and
guarded by hard size limits; it exists to check the fast classifiers on small
instances (tests and the --verify command line flag).
"""

from itertools import combinations

from typing import Any, Dict, FrozenSet, Hashable, Iterable, List, Mapping, NamedTuple, Sequence, Set, Tuple, Union

from .graph import Category, Dsu, Multigraph, is_connected
from .matching import BipartiteGraph, Matching
from .matching_classify import Classification
from .flow import CriticalMode, FlowNetwork, max_flow, upward_critical, upward_critical_undirected

__version__ = '0.1'
__all__ = ['OracleRefusal', 'OracleReport', 'enum_optimal_matchings',
           'enum_min_spanning_trees', 'max_flow_by_cuts', 'flow_increment_oracle',
           'classification_from_enumeration', 'compare', 'flow_mode_agreement']


MAX_MATCHING_PRODUCT = 20
MAX_TREE_EDGES = 12
MAX_FLOW_VERTICES = 12


class OracleRefusal(RuntimeError):
    """
    Raised when an instance is too large for a brute-force oracle.
    """

    pass


class OracleReport(NamedTuple):
    expected: Any
    actual: Any
    mismatches: List[Tuple[Hashable, Any, Any]]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def enum_optimal_matchings(g: BipartiteGraph, weighted: bool) -> List[Matching]:
    """
    Enumerate every maximum cardinality matching of a bipartite multigraph
    (every minimum cost one if `weighted`) by exhaustive recursion over the
    edges.  Parallel edges give distinct matchings.
    """

    if g.nL*g.nR > MAX_MATCHING_PRODUCT:
        raise OracleRefusal(f"Matching oracle limited to nL*nR <= {MAX_MATCHING_PRODUCT}, found {g.nL*g.nR}")
    if weighted and not g.has_costs:
        raise ValueError("Weighted matching oracle requires a cost on every edge")

    found: List[FrozenSet[int]] = []
    def extend(start, chosen, used_left, used_right):
        found.append(frozenset(chosen))
        for i in range(start, g.m):
            edge = g.edges[i]
            if edge.u in used_left or edge.v in used_right:
                continue
            chosen.append(i)
            used_left.add(edge.u)
            used_right.add(edge.v)
            extend(i+1, chosen, used_left, used_right)
            chosen.pop()
            used_left.discard(edge.u)
            used_right.discard(edge.v)

    extend(0, [], set(), set())

    size = max(len(ids) for ids in found)
    matchings = []
    for ids in found:
        if len(ids) != size:
            continue
        cost = sum(g.edges[i].cost for i in ids) if weighted else 0
        matchings.append(Matching(ids, cost))

    if weighted:
        best = min(m.cost for m in matchings)
        matchings = [m for m in matchings if m.cost == best]
    return matchings


def enum_min_spanning_trees(g: Multigraph) -> List[FrozenSet[int]]:
    """
    Enumerate every minimum spanning tree of a connected multigraph by trying
    all (n-1)-edge subsets.  Edges without costs count as zero, so a costless
    graph yields all of its spanning trees.
    """

    if g.m > MAX_TREE_EDGES:
        raise OracleRefusal(f"Spanning tree oracle limited to m <= {MAX_TREE_EDGES}, found {g.m}")
    if not is_connected(g):
        raise ValueError("Spanning tree oracle requires a connected multigraph")

    trees = []
    for subset in combinations(range(g.m), max(g.n-1, 0)):
        d = Dsu(g.n)
        if all(d.union(g.edges[i].u, g.edges[i].v) for i in subset):
            cost = sum(g.edges[i].cost or 0 for i in subset)
            trees.append((cost, frozenset(subset)))

    best = min(cost for cost,_ in trees)
    return [tree for cost,tree in trees if cost == best]


def max_flow_by_cuts(net: FlowNetwork) -> int:
    """
    Maximum flow value computed independently of any flow algorithm as the
    minimum capacity over all cuts separating the sources from the sinks.
    """

    if net.n > MAX_FLOW_VERTICES:
        raise OracleRefusal(f"Flow oracle limited to n <= {MAX_FLOW_VERTICES}, found {net.n}")

    terminals = set(net.sources) | set(net.sinks)
    free = [x for x in range(1, net.n+1) if x not in terminals]
    best = None
    for mask in range(1 << len(free)):
        side = set(net.sources)
        side.update(x for bit,x in enumerate(free) if mask >> bit & 1)

        cut = 0
        for arc in net.arcs:
            if arc.u in side and arc.v not in side:
                cut += arc.cap
            elif not net.directed and arc.v in side and arc.u not in side:
                cut += arc.cap
        if best is None or cut < best:
            best = cut
    return best


def flow_increment_oracle(net: FlowNetwork) -> Set[int]:
    """
    Return the ids of the arcs whose capacity increase by one unit raises the
    maximum flow value.  Works for directed and undirected networks.
    """

    if net.n > MAX_FLOW_VERTICES:
        raise OracleRefusal(f"Flow oracle limited to n <= {MAX_FLOW_VERTICES}, found {net.n}")

    base = max_flow(net).value
    critical = set()
    for arc in net.arcs:
        if max_flow(net.with_capacity(arc.id, arc.cap+1)).value > base:
            critical.add(arc.id)
    return critical


def classification_from_enumeration(edges: Mapping[int, Sequence[Hashable]],
                                    family: Sequence[Iterable[int]],
                                    vertices: Iterable[Hashable]=()) -> Classification:
    """
    Classify elements from an explicit family of edge sets.  `edges` maps each
    edge id to its endpoints; an edge is EVERY if it is in every member of the
    family, SOME if in at least one and NEVER otherwise.  Vertices are
    classified the same way by whether a member covers them.
    """

    family = [frozenset(member) for member in family]
    if not family:
        raise ValueError("Cannot classify against an empty family")

    def category(count):
        if count == len(family):
            return Category.EVERY
        if count > 0:
            return Category.SOME
        return Category.NEVER

    edge_category = {}
    for i in edges:
        edge_category[i] = category(sum(1 for member in family if i in member))

    vertex_category = {}
    covers = [set(x for i in member for x in edges[i]) for member in family]
    for x in vertices:
        vertex_category[x] = category(sum(1 for cover in covers if x in cover))

    return Classification(edge_category, vertex_category)


def _flatten(value) -> Dict[Hashable, Any]:
    if isinstance(value, Classification):
        flat = {('edge', k): v for k,v in value.edge_category.items()}
        flat.update({('vertex', k): v for k,v in value.vertex_category.items()})
        return flat
    if isinstance(value, Mapping):
        return dict(value)
    raise TypeError(f"Cannot compare values of type {type(value).__name__}")


def compare(expected: Union[Classification, Mapping, Set], actual: Union[Classification, Mapping, Set]) -> OracleReport:
    """
    Elementwise comparison of an oracle result with a solver result.  Both must
    be of the same shape:  Classifications or mappings over the same element
    universe (a ValueError otherwise), or sets of ids (compared by
    membership).
    """

    if isinstance(expected, (set, frozenset)) and isinstance(actual, (set, frozenset)):
        mismatches = [(i, i in expected, i in actual) for i in sorted(expected ^ actual)]
        return OracleReport(expected, actual, mismatches)

    flat_expected = _flatten(expected)
    flat_actual = _flatten(actual)
    if set(flat_expected) != set(flat_actual):
        raise ValueError("Cannot compare results over different element universes")

    mismatches = []
    for key in sorted(flat_expected, key=repr):
        if flat_expected[key] != flat_actual[key]:
            mismatches.append((key, flat_expected[key], flat_actual[key]))
    return OracleReport(expected, actual, mismatches)


def flow_mode_agreement(nets: Iterable[FlowNetwork], verbose: bool=False) -> float:
    """
    Fraction of networks on which PAPER and RESIDUAL mode report the same
    critical arcs.  This is reported, never expected to be 1.  With `verbose`
    each disagreement is printed.
    """

    total = agree = 0
    for net in nets:
        finder = upward_critical if net.directed else upward_critical_undirected
        total += 1
        paper, residual = finder(net, CriticalMode.PAPER), finder(net, CriticalMode.RESIDUAL)
        if paper == residual:
            agree += 1
        elif verbose:
            print(f"Network {total-1}: paper mode misses arcs {sorted(residual - paper)}")
    if verbose:
        print(f"  Modes agree on {agree} of {total} networks")
    return agree / total if total else 1.0
