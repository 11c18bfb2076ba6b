import enum
from collections import deque

from typing import Dict, NamedTuple, Optional, Set

from .graph import Category, Digraph, scc
from .matching import BipartiteGraph, Matching, max_matching, min_cost_max_matching
from .typehints import VertexKey

__version__ = '0.1'
__all__ = ['ResidualSide', 'Classification', 'build_residual', 'zero_cost_cycle_edges',
           'classify_weighted', 'classify_unweighted']


class ResidualSide(enum.Enum):
    """
    Which auxiliary vertex is added to the residual digraph:  S attached to
    the left side or T attached to the right side.
    """

    S_SIDE = 'S'
    T_SIDE = 'T'


class Classification(NamedTuple):
    edge_category: Dict[int, Category]
    vertex_category: Dict[VertexKey, Category]
    matching: Optional[Matching] = None


def _check_matching(g: BipartiteGraph, m: Matching):
    used = set()
    for i in m.edges:
        if not 0 <= i < g.m:
            raise ValueError(f"Matching refers to unknown edge {i}")
        for key in g.endpoints(i):
            if key in used:
                raise ValueError(f"Matching uses vertex {key[0]}{key[1]} more than once")
            used.add(key)


def _vertex_key(g: BipartiteGraph, x: int) -> Optional[VertexKey]:
    """
    Translate a residual digraph vertex back to a ('L'|'R', index) key.  The
    auxiliary vertex maps to None.
    """

    if x <= g.nL:
        return ('L', x)
    if x <= g.nL + g.nR:
        return ('R', x - g.nL)
    return None


def build_residual(g: BipartiteGraph, m: Matching, side: ResidualSide,
                   with_costs: bool=True) -> Digraph:
    """
    Build the residual digraph of a bipartite graph with respect to matching
    m.  Left vertex u becomes digraph vertex u, right vertex v becomes nL+v and
    the auxiliary vertex (S or T) is nL+nR+1.  Matched edges point right to
    left with cost -c, unmatched edges left to right with cost c.  For S_SIDE
    the zero-cost arcs are S->u for unmatched left u and u->S for matched left
    u; for T_SIDE they are v->T for unmatched right v and T->v for matched
    right v.  Arcs induced by graph edges carry the edge id as their origin.
    """

    _check_matching(g, m)

    nL, nR = g.nL, g.nR
    aux = nL + nR + 1
    matched_left, matched_right = set(), set()
    for i in m.edges:
        edge = g.edges[i]
        matched_left.add(edge.u)
        matched_right.add(edge.v)

    arcs = []
    for edge in g.edges:
        cost = 0
        if with_costs:
            if edge.cost is None:
                raise ValueError(f"Edge {edge.id} has no cost")
            cost = edge.cost
        if edge.id in m.edges:
            arcs.append((nL+edge.v, edge.u, -cost, edge.id))
        else:
            arcs.append((edge.u, nL+edge.v, cost, edge.id))

    if side is ResidualSide.S_SIDE:
        for u in range(1, nL+1):
            if u in matched_left:
                arcs.append((u, aux, 0))
            else:
                arcs.append((aux, u, 0))
    elif side is ResidualSide.T_SIDE:
        for v in range(1, nR+1):
            if v in matched_right:
                arcs.append((aux, nL+v, 0))
            else:
                arcs.append((nL+v, aux, 0))
    else:
        raise ValueError(f"Unknown residual side '{side}'")

    return Digraph(aux, arcs)


def _potentials(g: Digraph) -> list:
    """
    Shortest path distances from a virtual root joined to every vertex by a
    zero-cost arc (queue-based Bellman-Ford, exact arithmetic).  Raises a
    RuntimeError if a negative cost cycle is found.
    """

    n = g.n
    adjacency = g.out_arcs()
    dist = [0]*(n+1)
    ## Number of arcs on the current best path from the virtual root
    hops = [1]*(n+1)
    queued = [True]*(n+1)
    queue = deque(range(1, n+1))
    while queue:
        a = queue.popleft()
        queued[a] = False
        for arc in adjacency[a]:
            nd = dist[a] + arc.cost
            b = arc.head
            if nd < dist[b]:
                dist[b] = nd
                hops[b] = hops[a] + 1
                if hops[b] > n:
                    raise RuntimeError("Negative cost cycle in residual digraph - matching not optimal")
                if not queued[b]:
                    queued[b] = True
                    queue.append(b)
    return dist


def zero_cost_cycle_edges(g: Digraph) -> Set[int]:
    """
    Return the ids of the arcs that lie on at least one cycle whose total cost
    is exactly zero.  The digraph must not contain a negative cost cycle.

    Potentials from a virtual root make every reduced cost
    c(a->b) + p(a) - p(b) non-negative without changing cycle sums, so a
    zero-cost cycle uses only arcs of reduced cost zero.  An arc is on such a
    cycle iff it joins two vertices of the same strongly connected component
    of the reduced-cost-zero subgraph.
    """

    dist = _potentials(g)

    tight = [arc for arc in g.arcs if arc.cost + dist[arc.tail] - dist[arc.head] == 0]
    tight_graph = Digraph(g.n, [(arc.tail, arc.head) for arc in tight])
    component = scc(tight_graph)

    return {arc.id for arc in tight if component[arc.tail] == component[arc.head]}


def _same_component_arcs(g: Digraph) -> Set[int]:
    component = scc(g)
    return {arc.id for arc in g.arcs if component[arc.tail] == component[arc.head]}


def _categorize(g: BipartiteGraph, m: Matching, exchangeable: Set[int],
                removable, touched) -> Classification:
    """
    Shared final step:  edges in `exchangeable` are SOME, the rest of M is
    EVERY and everything else NEVER.  Matched vertices outside `removable`
    are EVERY, vertices in `touched` are SOME and the rest NEVER.
    """

    edge_category = {}
    for edge in g.edges:
        if edge.id in exchangeable:
            edge_category[edge.id] = Category.SOME
        elif edge.id in m.edges:
            edge_category[edge.id] = Category.EVERY
        else:
            edge_category[edge.id] = Category.NEVER

    covered = set()
    for i in m.edges:
        covered.update(g.endpoints(i))

    vertex_category = {}
    for key in g.vertices:
        if key in covered and key not in removable:
            vertex_category[key] = Category.EVERY
        elif key in touched:
            vertex_category[key] = Category.SOME
        else:
            vertex_category[key] = Category.NEVER

    return Classification(edge_category, vertex_category, m)


def _check_maximum(g: BipartiteGraph, m: Matching):
    _check_matching(g, m)
    best = max_matching(g)
    if m.size != best.size:
        raise ValueError(f"Matching has {m.size} edges but a maximum matching has {best.size}")


def classify_weighted(g: BipartiteGraph, matching: Optional[Matching]=None) -> Classification:
    """
    Classify every edge and vertex of a bipartite multigraph with non-negative
    costs as belonging to every (EVERY), some (SOME) or no (NEVER) minimum
    cost maximum matching.  If `matching` is given it is used instead of
    computing one; it must be a minimum cost maximum matching (a non-optimal
    matching is detected through a negative cycle and raises RuntimeError).
    Runs in O(n^3).
    """

    if not g.has_costs:
        raise ValueError("Weighted classification requires a cost on every edge")
    for edge in g.edges:
        if edge.cost < 0:
            raise ValueError(f"Edge {edge.id} has negative cost {edge.cost}")

    if matching is None:
        matching = min_cost_max_matching(g)
    else:
        _check_maximum(g, matching)

    aux = g.nL + g.nR + 1
    exchangeable = set()
    touched, removable = set(), set()
    for side in (ResidualSide.S_SIDE, ResidualSide.T_SIDE):
        residual = build_residual(g, matching, side, with_costs=True)
        for i in zero_cost_cycle_edges(residual):
            arc = residual.arcs[i]
            if arc.origin is not None:
                exchangeable.add(arc.origin)
                continue

            ## Arcs into S (E1b) or out of T (E2b) mark matched vertices that
            ## some optimal matching leaves uncovered
            if side is ResidualSide.S_SIDE:
                into_aux = (arc.head == aux)
            else:
                into_aux = (arc.tail == aux)
            for x in (arc.tail, arc.head):
                key = _vertex_key(g, x)
                if key is None:
                    continue
                touched.add(key)
                if into_aux:
                    removable.add(key)

    return _categorize(g, matching, exchangeable, removable, touched)


def classify_unweighted(g: BipartiteGraph, matching: Optional[Matching]=None) -> Classification:
    """
    Classify every edge and vertex of a bipartite multigraph as belonging to
    every (EVERY), some (SOME) or no (NEVER) maximum matching.  Costs are
    ignored.  If `matching` is given it must be a maximum matching.  Runs in
    O(n^2.5), dominated by the matching itself.
    """

    if matching is None:
        matching = max_matching(g)
    else:
        _check_maximum(g, matching)

    exchangeable = set()
    touched = set()
    for side in (ResidualSide.S_SIDE, ResidualSide.T_SIDE):
        residual = build_residual(g, matching, side, with_costs=False)
        for i in _same_component_arcs(residual):
            arc = residual.arcs[i]
            if arc.origin is not None:
                exchangeable.add(arc.origin)
                continue
            for x in (arc.tail, arc.head):
                key = _vertex_key(g, x)
                if key is not None:
                    touched.add(key)

    return _categorize(g, matching, exchangeable, touched, touched)
