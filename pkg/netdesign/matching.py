import heapq
from textwrap import fill as tw_fill

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .graph import Edge, _build_repr, _check_vertex
from .typehints import Cost, VertexKey

__version__ = '0.1'
__all__ = ['BipartiteGraph', 'Matching', 'max_matching', 'min_cost_max_matching']


class BipartiteGraph(object):
    """
    Bipartite multigraph with left vertices 1..nL and right vertices 1..nR.
    Edges are given as (u, v) or (u, v, cost) tuples with u on the left and v
    on the right, and are numbered 0..m-1 in input order.  Parallel edges are
    allowed.  Costs, when present, must be non-negative exact numbers.
    """

    def __init__(self, nL: int, nR: int, edges: Iterable[Sequence]=(), cost_scale: int=1):
        if nL < 0 or nR < 0:
            raise ValueError(f"Vertex counts must be non-negative, found {nL} and {nR}")
        self.nL = nL
        self.nR = nR
        self.cost_scale = cost_scale

        self.edges: List[Edge] = []
        for i,edge in enumerate(edges):
            u, v = edge[0], edge[1]
            cost = edge[2] if len(edge) > 2 else None
            _check_vertex(u, nL, what=f"Left vertex of edge {i}")
            _check_vertex(v, nR, what=f"Right vertex of edge {i}")
            u, v = int(u), int(v)
            if cost is not None and cost < 0:
                raise ValueError(f"Edge {i} has negative cost {cost}")
            self.edges.append(Edge(u, v, cost, i))

    def __repr__(self):
        n = self.__class__.__module__+'.'+self.__class__.__name__
        a = [('nL', self.nL), ('nR', self.nR), ('m', self.m)]
        return tw_fill(_build_repr(n,a), subsequent_indent='    ')

    @property
    def n(self) -> int:
        return self.nL + self.nR

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def has_costs(self) -> bool:
        return all(edge.cost is not None for edge in self.edges)

    @property
    def vertices(self) -> List[VertexKey]:
        """
        All vertices as ('L', u) / ('R', v) keys, left side first.
        """

        return [('L', u) for u in range(1, self.nL+1)] + [('R', v) for v in range(1, self.nR+1)]

    def endpoints(self, edge_id: int) -> Tuple[VertexKey, VertexKey]:
        edge = self.edges[edge_id]
        return ('L', edge.u), ('R', edge.v)


class Matching(NamedTuple):
    edges: FrozenSet[int]
    cost: Cost

    @property
    def size(self) -> int:
        return len(self.edges)


def _make_matching(g: BipartiteGraph, ids: Iterable[int]) -> Matching:
    ids = frozenset(ids)
    cost = 0
    for i in ids:
        c = g.edges[i].cost
        if c is not None:
            cost += c
    return Matching(ids, cost)


def max_matching(g: BipartiteGraph) -> Matching:
    """
    Compute a maximum cardinality matching with the Hopcroft-Karp algorithm.
    Parallel edges collapse to the lowest id per (u, v) pair for the search;
    the returned ids are always valid input ids.
    """

    if g.nL == 0 or g.nR == 0 or g.m == 0:
        return _make_matching(g, ())

    # Collapse parallel edges
    first: Dict[Tuple[int,int],int] = {}
    for edge in g.edges:
        first.setdefault((edge.u, edge.v), edge.id)
    pairs = sorted(first.keys())

    rows = np.array([u-1 for u,_ in pairs], dtype=np.int64)
    cols = np.array([v-1 for _,v in pairs], dtype=np.int64)
    ones = np.ones(len(pairs), dtype=np.int8)
    biadjacency = csr_matrix((ones, (rows, cols)), shape=(g.nL, g.nR))

    ## For perm_type='column' entry i is the right vertex matched to left vertex i
    mate = maximum_bipartite_matching(biadjacency, perm_type='column')

    ids = []
    for i,j in enumerate(mate):
        if j >= 0:
            ids.append(first[(i+1, int(j)+1)])
    return _make_matching(g, ids)


def min_cost_max_matching(g: BipartiteGraph) -> Matching:
    """
    Compute a minimum cost maximum cardinality matching using successive
    shortest augmenting paths with vertex potentials.  All arithmetic is exact
    so integer or Fraction costs give exact results.  Parallel edges collapse
    to the cheapest edge per (u, v) pair (ties go to the lowest id).  Runs in
    O(n * m log n).
    """

    if not g.has_costs:
        raise ValueError("Minimum cost matching requires a cost on every edge")
    for edge in g.edges:
        if edge.cost < 0:
            raise ValueError(f"Edge {edge.id} has negative cost {edge.cost}")

    # Collapse parallel edges to the cheapest one
    best: Dict[Tuple[int,int],Edge] = {}
    for edge in g.edges:
        current = best.get((edge.u, edge.v), None)
        if current is None or edge.cost < current.cost:
            best[(edge.u, edge.v)] = edge
    adjacency = [[] for _ in range(g.nL+1)]
    for (u,v),edge in sorted(best.items()):
        adjacency[u].append(edge)

    # Node numbering for the residual network: source 0, left 1..nL,
    # right nL+1..nL+nR, sink nL+nR+1
    nL, nR = g.nL, g.nR
    source, sink = 0, nL + nR + 1
    size = nL + nR + 2
    potential = [0]*size
    mate_left: List[Optional[Edge]] = [None]*(nL+1)
    mate_right: List[Optional[Edge]] = [None]*(nR+1)

    while True:
        ## Dijkstra on reduced costs from the source, stopping at the sink
        dist: List[Optional[Cost]] = [None]*size
        done = [False]*size
        parent: List[Optional[Tuple[int,Optional[Edge]]]] = [None]*size
        dist[source] = 0
        heap = [(0, source)]
        while heap:
            d, x = heapq.heappop(heap)
            if done[x] or d != dist[x]:
                continue
            done[x] = True
            if x == sink:
                break

            steps = []
            if x == source:
                for u in range(1, nL+1):
                    if mate_left[u] is None:
                        steps.append((u, 0, None))
            elif x <= nL:
                for edge in adjacency[x]:
                    if mate_left[x] is not edge:
                        steps.append((nL+edge.v, edge.cost, edge))
            else:
                v = x - nL
                matched = mate_right[v]
                if matched is None:
                    steps.append((sink, 0, None))
                else:
                    steps.append((matched.u, -matched.cost, matched))

            for y, cost, edge in steps:
                if done[y]:
                    continue
                nd = d + cost + potential[x] - potential[y]
                if dist[y] is None or nd < dist[y]:
                    dist[y] = nd
                    parent[y] = (x, edge)
                    heapq.heappush(heap, (nd, y))

        if not done[sink]:
            break

        ## Keep reduced costs non-negative: vertices not settled before the
        ## sink get the sink distance
        limit = dist[sink]
        for x in range(size):
            if done[x]:
                potential[x] += min(dist[x], limit)
            else:
                potential[x] += limit

        ## Augment along the path
        y = parent[sink][0]
        while y != source:
            x, edge = parent[y]
            if y > nL:
                mate_left[edge.u] = edge
                mate_right[edge.v] = edge
            y = x

    return _make_matching(g, [edge.id for edge in mate_left if edge is not None])
