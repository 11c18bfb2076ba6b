import enum
from collections import deque
from textwrap import fill as tw_fill

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from typing import Dict, Iterable, List, NamedTuple, Optional, Set, Sequence

from .typehints import ArcFilter, Cost

__version__ = '0.1'
__all__ = ['Category', 'Edge', 'Arc', 'Multigraph', 'Digraph', 'Dsu',
           'dsu_find', 'dsu_union', 'scc', 'bridges', 'reachable',
           'components', 'is_connected']


def _build_repr(name, attrs=[]):
    name = '.'.join(name.split('.')[-2:])
    output = "<%s" % name
    first = True
    for key,value in attrs:
        output += "%s %s=%s" % (('' if first else ','), key, value)
        first = False
    output += ">"
    return output


class Category(enum.Enum):
    """
    Membership of a graph element in a family of optimal substructures.
    """

    EVERY = 1
    SOME = 2
    NEVER = 3


class Edge(NamedTuple):
    u: int
    v: int
    cost: Optional[Cost]
    id: int


class Arc(NamedTuple):
    tail: int
    head: int
    cost: Cost
    id: int
    origin: Optional[int] = None


def _check_vertex(x: int, n: int, what: str='Vertex'):
    if not isinstance(x, (int, np.integer)) or isinstance(x, bool) or not 1 <= x <= n:
        raise ValueError(f"{what} {x} is out of range 1..{n}")


class Multigraph(object):
    """
    Undirected multigraph on the vertices 1..n.  Edges are given as (u, v) or
    (u, v, cost) tuples and are numbered 0..m-1 in input order.  Loops and
    parallel edges are allowed.  Costs are exact numbers (int or Fraction);
    `cost_scale` records the power of ten the costs were scaled by when they
    came from decimal input.
    """

    def __init__(self, n: int, edges: Iterable[Sequence]=(), cost_scale: int=1):
        if n < 0:
            raise ValueError(f"Vertex count must be non-negative, found {n}")
        self.n = n
        self.cost_scale = cost_scale

        self.edges: List[Edge] = []
        for i,edge in enumerate(edges):
            u, v = edge[0], edge[1]
            cost = edge[2] if len(edge) > 2 else None
            _check_vertex(u, n)
            _check_vertex(v, n)
            self.edges.append(Edge(int(u), int(v), cost, i))

    def __repr__(self):
        n = self.__class__.__module__+'.'+self.__class__.__name__
        a = [('n', self.n), ('m', self.m), ('has_costs', self.has_costs)]
        return tw_fill(_build_repr(n,a), subsequent_indent='    ')

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def has_costs(self) -> bool:
        """
        True if every edge carries a cost.
        """

        return all(edge.cost is not None for edge in self.edges)

    def with_costs(self, costs: Sequence[Optional[Cost]]) -> 'Multigraph':
        """
        Return a copy of the graph with the edge costs replaced.
        """

        if len(costs) != self.m:
            raise ValueError(f"Expected {self.m} costs but found {len(costs)}")
        return Multigraph(self.n, [(e.u, e.v, c) for e,c in zip(self.edges, costs)],
                          cost_scale=self.cost_scale)


class Digraph(object):
    """
    Directed multigraph on the vertices 1..n.  Arcs are given as
    (tail, head), (tail, head, cost) or (tail, head, cost, origin) tuples and
    are numbered 0..m-1 in input order.  `origin` is the id of the undirected
    edge that induced the arc, if any.  Costs may be negative.
    """

    def __init__(self, n: int, arcs: Iterable[Sequence]=()):
        if n < 0:
            raise ValueError(f"Vertex count must be non-negative, found {n}")
        self.n = n

        self.arcs: List[Arc] = []
        for i,arc in enumerate(arcs):
            tail, head = arc[0], arc[1]
            cost = arc[2] if len(arc) > 2 else 0
            origin = arc[3] if len(arc) > 3 else None
            _check_vertex(tail, n)
            _check_vertex(head, n)
            self.arcs.append(Arc(int(tail), int(head), cost, i, origin))

    def __repr__(self):
        n = self.__class__.__module__+'.'+self.__class__.__name__
        a = [('n', self.n), ('m', self.m)]
        return tw_fill(_build_repr(n,a), subsequent_indent='    ')

    @property
    def m(self) -> int:
        return len(self.arcs)

    def out_arcs(self) -> List[List[Arc]]:
        """
        Return the outgoing arcs of every vertex as a list indexed by vertex
        (index 0 is unused).
        """

        adjacency = [[] for _ in range(self.n+1)]
        for arc in self.arcs:
            adjacency[arc.tail].append(arc)
        return adjacency

    def in_arcs(self) -> List[List[Arc]]:
        """
        Return the incoming arcs of every vertex as a list indexed by vertex
        (index 0 is unused).
        """

        adjacency = [[] for _ in range(self.n+1)]
        for arc in self.arcs:
            adjacency[arc.head].append(arc)
        return adjacency


class Dsu(object):
    """
    Disjoint-set union over the vertices 1..n with union by rank and path
    compression.
    """

    def __init__(self, n: int):
        self.n = n
        self.parent = list(range(n+1))
        self.rank = [0]*(n+1)

    def find(self, x: int) -> int:
        """
        Return the representative of the component holding x.
        """

        _check_vertex(x, self.n)

        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        """
        Merge the components of x and y.  Returns False if they were already
        the same component.
        """

        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False

        if self.rank[rx] < self.rank[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        if self.rank[rx] == self.rank[ry]:
            self.rank[rx] += 1
        return True


def dsu_find(d: Dsu, x: int) -> int:
    return d.find(x)


def dsu_union(d: Dsu, x: int, y: int) -> bool:
    return d.union(x, y)


def components(g: Multigraph) -> int:
    """
    Return the number of connected components of a multigraph.  Isolated
    vertices count as their own component.
    """

    d = Dsu(g.n)
    count = g.n
    for edge in g.edges:
        if d.union(edge.u, edge.v):
            count -= 1
    return count


def is_connected(g: Multigraph) -> bool:
    return components(g) <= 1


def scc(g: Digraph) -> Dict[int, int]:
    """
    Find the strongly connected components of a digraph.  Returns a dictionary
    mapping each vertex to a component id; ids are contiguous from 0.
    """

    if g.n == 0:
        return {}

    tails = np.array([arc.tail-1 for arc in g.arcs], dtype=np.int64)
    heads = np.array([arc.head-1 for arc in g.arcs], dtype=np.int64)
    ones = np.ones(len(g.arcs), dtype=np.int8)
    adjacency = csr_matrix((ones, (tails, heads)), shape=(g.n, g.n))

    _, labels = connected_components(adjacency, directed=True, connection='strong')
    return {v: int(labels[v-1]) for v in range(1, g.n+1)}


def bridges(g: Multigraph) -> Set[int]:
    """
    Find the ids of the bridges of a multigraph, i.e., the edges whose removal
    increases the number of connected components.  This uses an iterative DFS
    lowlink search that tracks the id of the tree edge used to enter a vertex
    rather than the parent vertex so that parallel edges are never reported.
    Loops are never bridges.  Runs in O(n+m).
    """

    adjacency = [[] for _ in range(g.n+1)]
    for edge in g.edges:
        if edge.u == edge.v:
            continue
        adjacency[edge.u].append((edge.v, edge.id))
        adjacency[edge.v].append((edge.u, edge.id))

    found = set()
    order = [0]*(g.n+1)
    low = [0]*(g.n+1)
    counter = 0
    for root in range(1, g.n+1):
        if order[root]:
            continue

        counter += 1
        order[root] = low[root] = counter
        ## Stack entries are (vertex, id of the edge used to reach it, next neighbor index)
        stack = [[root, -1, 0]]
        while stack:
            frame = stack[-1]
            u, via, pos = frame
            if pos < len(adjacency[u]):
                frame[2] += 1
                v, eid = adjacency[u][pos]
                if eid == via:
                    continue
                if order[v]:
                    low[u] = min(low[u], order[v])
                else:
                    counter += 1
                    order[v] = low[v] = counter
                    stack.append([v, eid, 0])
            else:
                stack.pop()
                if stack:
                    parent = stack[-1][0]
                    low[parent] = min(low[parent], low[u])
                    if low[u] > order[parent]:
                        found.add(via)

    return found


def reachable(g: Digraph, sources: Iterable[int], arc_filter: Optional[ArcFilter]=None,
              direction: str='forward') -> Set[int]:
    """
    Breadth-first search over the arcs of a digraph that pass `arc_filter`
    (all arcs if None), starting from every vertex in `sources`.  With
    direction='reverse' arcs are followed from head to tail.  The sources are
    always part of the returned set.
    """

    if direction == 'forward':
        adjacency = g.out_arcs()
        step = lambda arc: arc.head
    elif direction == 'reverse':
        adjacency = g.in_arcs()
        step = lambda arc: arc.tail
    else:
        raise ValueError(f"Unknown search direction '{direction}'")

    seen = set()
    queue = deque()
    for s in sources:
        _check_vertex(s, g.n)
        if s not in seen:
            seen.add(s)
            queue.append(s)

    while queue:
        u = queue.popleft()
        for arc in adjacency[u]:
            if arc_filter is not None and not arc_filter(arc):
                continue
            v = step(arc)
            if v not in seen:
                seen.add(v)
                queue.append(v)

    return seen
