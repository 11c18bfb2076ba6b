import enum
from collections import deque
from textwrap import fill as tw_fill

import numpy as np

from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Set

from .graph import Digraph, _build_repr, reachable

__version__ = '0.1'
__all__ = ['CriticalMode', 'FlowArc', 'FlowNetwork', 'FlowAssignment', 'max_flow',
           'check_flow', 'upward_critical', 'upward_critical_undirected']


class CriticalMode(enum.Enum):
    """
    How upward critical arcs are detected.  PAPER only searches along arcs
    with spare capacity; RESIDUAL searches the full residual graph and is
    exact.
    """

    PAPER = 'paper'
    RESIDUAL = 'residual'


class FlowArc(NamedTuple):
    u: int
    v: int
    cap: int
    id: int


class FlowNetwork(object):
    """
    Flow network on the vertices 1..n with integer capacities.  Arcs are
    given as (u, v, cap) tuples and are numbered 0..m-1 in input order;
    parallel arcs are allowed.  With directed=False every arc is an undirected
    edge that can carry up to `cap` units in either direction.
    """

    def __init__(self, n: int, arcs: Iterable[Sequence], sources: Iterable[int],
                       sinks: Iterable[int], directed: bool=True):
        self.n = n
        self.directed = directed
        self.sources = sorted(set(int(s) for s in sources))
        self.sinks = sorted(set(int(t) for t in sinks))
        if not self.sources:
            raise ValueError("Flow network needs at least one source")
        if not self.sinks:
            raise ValueError("Flow network needs at least one sink")
        for x in self.sources + self.sinks:
            if not 1 <= x <= n:
                raise ValueError(f"Terminal vertex {x} is out of range 1..{n}")
        overlap = set(self.sources) & set(self.sinks)
        if overlap:
            raise ValueError(f"Vertices {sorted(overlap)} are both sources and sinks")

        self.arcs: List[FlowArc] = []
        for i,arc in enumerate(arcs):
            u, v, cap = arc[0], arc[1], arc[2]
            if not 1 <= u <= n or not 1 <= v <= n:
                raise ValueError(f"Arc {i} ({u}, {v}) has an endpoint out of range 1..{n}")
            if isinstance(cap, bool) or not isinstance(cap, (int, np.integer)):
                raise ValueError(f"Arc {i} has non-integer capacity {cap}")
            if cap < 0:
                raise ValueError(f"Arc {i} has negative capacity {cap}")
            self.arcs.append(FlowArc(int(u), int(v), int(cap), i))

    def __repr__(self):
        n = self.__class__.__module__+'.'+self.__class__.__name__
        a = [('n', self.n), ('m', self.m), ('sources', self.sources),
             ('sinks', self.sinks), ('directed', self.directed)]
        return tw_fill(_build_repr(n,a), subsequent_indent='    ')

    @property
    def m(self) -> int:
        return len(self.arcs)

    def with_capacity(self, arc_id: int, cap: int) -> 'FlowNetwork':
        """
        Return a copy of the network with the capacity of one arc changed.
        """

        arcs = [(a.u, a.v, cap if a.id == arc_id else a.cap) for a in self.arcs]
        return FlowNetwork(self.n, arcs, self.sources, self.sinks, directed=self.directed)


class FlowAssignment(NamedTuple):
    """
    Flow on every arc and the total flow value.  For undirected networks the
    flow is signed:  positive values run u->v, negative values v->u.
    """

    flow: Dict[int, int]
    value: int


class _Dinic(object):
    """
    Residual network with paired arcs (arc e and its partner e^1) solved with
    Dinic's blocking flow method.
    """

    def __init__(self, size: int):
        self.size = size
        self.head: List[List[int]] = [[] for _ in range(size)]
        self.to: List[int] = []
        self.cap: List[int] = []

    def add(self, u: int, v: int, cap: int, back_cap: int=0) -> int:
        e = len(self.to)
        self.to.append(v)
        self.cap.append(cap)
        self.head[u].append(e)
        self.to.append(u)
        self.cap.append(back_cap)
        self.head[v].append(e+1)
        return e

    def _levels(self, s: int, t: int) -> List[int]:
        level = [-1]*self.size
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e in self.head[u]:
                v = self.to[e]
                if self.cap[e] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level

    def _augment(self, s: int, t: int, level: List[int], it: List[int]) -> int:
        path = []
        u = s
        while True:
            if u == t:
                pushed = min(self.cap[e] for e in path)
                for e in path:
                    self.cap[e] -= pushed
                    self.cap[e^1] += pushed
                return pushed

            adjacency = self.head[u]
            advanced = False
            while it[u] < len(adjacency):
                e = adjacency[it[u]]
                v = self.to[e]
                if self.cap[e] > 0 and level[v] == level[u] + 1:
                    path.append(e)
                    u = v
                    advanced = True
                    break
                it[u] += 1

            if not advanced:
                ## Dead end, retreat one step
                if u == s:
                    return 0
                e = path.pop()
                u = self.to[e^1]
                it[u] += 1

    def solve(self, s: int, t: int) -> int:
        total = 0
        while True:
            level = self._levels(s, t)
            if level[t] < 0:
                break
            it = [0]*self.size
            while True:
                pushed = self._augment(s, t, level, it)
                if pushed == 0:
                    break
                total += pushed
        return total


def max_flow(net: FlowNetwork) -> FlowAssignment:
    """
    Compute an integral maximum flow from the sources to the sinks using
    Dinic's algorithm.  Multiple sources and sinks are joined to a virtual
    super-source and super-sink; the virtual arcs are not reported.
    """

    size = net.n + 3
    super_source, super_sink = net.n + 1, net.n + 2
    solver = _Dinic(size)

    forward = []
    for arc in net.arcs:
        back_cap = 0 if net.directed else arc.cap
        forward.append(solver.add(arc.u, arc.v, arc.cap, back_cap))

    unbounded = sum(arc.cap for arc in net.arcs) + 1
    for s in net.sources:
        solver.add(super_source, s, unbounded)
    for t in net.sinks:
        solver.add(t, super_sink, unbounded)

    value = solver.solve(super_source, super_sink)

    flow = {}
    for arc,e in zip(net.arcs, forward):
        flow[arc.id] = arc.cap - solver.cap[e]
    return FlowAssignment(flow, value)


def check_flow(net: FlowNetwork, assignment: FlowAssignment) -> bool:
    """
    Structural check of a flow:  capacity bounds on every arc, conservation at
    every vertex that is neither a source nor a sink, and a value equal to the
    net outflow of the sources.
    """

    balance = [0]*(net.n+1)
    for arc in net.arcs:
        f = assignment.flow.get(arc.id, None)
        if f is None:
            return False
        if net.directed:
            if not 0 <= f <= arc.cap:
                return False
        elif not -arc.cap <= f <= arc.cap:
            return False
        balance[arc.u] -= f
        balance[arc.v] += f

    terminals = set(net.sources) | set(net.sinks)
    for x in range(1, net.n+1):
        if x not in terminals and balance[x] != 0:
            return False

    outflow = -sum(balance[s] for s in net.sources)
    return outflow == assignment.value


def _critical(net: FlowNetwork, oriented: List[tuple], mode: CriticalMode) -> Set[int]:
    """
    Shared criticality test.  `oriented` lists
    (tail, head, forward, backward, saturated, id) entries:  `forward` and
    `backward` say whether the searches may cross the entry tail->head and
    head->tail, `saturated` whether the orientation tail->head carries its
    full capacity.
    """

    arcs = []
    for tail,head,forward,backward,_,_ in oriented:
        if forward:
            arcs.append((tail, head))
        if backward:
            arcs.append((head, tail))
    graph = Digraph(net.n, arcs)

    reach_source = reachable(graph, net.sources, direction='forward')
    reach_sink = reachable(graph, net.sinks, direction='reverse')

    critical = set()
    for tail,head,_,_,saturated,i in oriented:
        if not saturated:
            continue
        if mode is CriticalMode.PAPER:
            ok = (tail in reach_source and head not in reach_source
                  and head in reach_sink and tail not in reach_sink)
        else:
            ok = (tail in reach_source and head in reach_sink)
        if ok:
            critical.add(i)
    return critical


def _use_flow(net: FlowNetwork, assignment: Optional[FlowAssignment]) -> FlowAssignment:
    if assignment is None:
        return max_flow(net)
    if not check_flow(net, assignment):
        raise ValueError("Flow assignment does not fit the network")
    return assignment


def upward_critical(net: FlowNetwork, mode: CriticalMode=CriticalMode.RESIDUAL,
                    assignment: Optional[FlowAssignment]=None) -> Set[int]:
    """
    Return the ids of the upward critical arcs of a directed network, i.e.,
    the arcs for which a unit capacity increase raises the maximum flow.

    PAPER mode marks reachable_1 from the sources and reachable_2 (reverse)
    from the sinks along arcs with f < cap and reports saturated arcs u->v
    with reachable_1(u), not reachable_1(v), reachable_2(v) and not
    reachable_2(u).  RESIDUAL mode uses the full residual graph and reports
    saturated arcs with reachable_1(u) and reachable_2(v); it is exact, while
    PAPER mode may miss arcs depending on which maximum flow was found.

    A maximum flow already computed with max_flow can be passed in as
    `assignment` to avoid solving the network again.
    """

    if not net.directed:
        raise ValueError("upward_critical needs a directed network, use upward_critical_undirected")
    mode = CriticalMode(mode)

    assignment = _use_flow(net, assignment)
    oriented = []
    for arc in net.arcs:
        f = assignment.flow[arc.id]
        backward = (mode is CriticalMode.RESIDUAL and f > 0)
        oriented.append((arc.u, arc.v, f < arc.cap, backward, f == arc.cap, arc.id))
    return _critical(net, oriented, mode)


def upward_critical_undirected(net: FlowNetwork, mode: CriticalMode=CriticalMode.RESIDUAL,
                               assignment: Optional[FlowAssignment]=None) -> Set[int]:
    """
    Return the ids of the upward critical edges of an undirected network.  Both
    orientations of every edge are tested with the directed criterion and an
    edge is critical if either orientation is.  In PAPER mode the searches
    cross an edge in either direction iff |f| < cap; in RESIDUAL mode along
    each direction that still has residual capacity.  `assignment` is an
    optional precomputed maximum flow, as for upward_critical.
    """

    if net.directed:
        raise ValueError("upward_critical_undirected needs an undirected network")
    mode = CriticalMode(mode)

    assignment = _use_flow(net, assignment)
    oriented = []
    for arc in net.arcs:
        f = assignment.flow[arc.id]
        if mode is CriticalMode.PAPER:
            open_edge = abs(f) < arc.cap
            oriented.append((arc.u, arc.v, open_edge, open_edge, f == arc.cap, arc.id))
        else:
            oriented.append((arc.u, arc.v, arc.cap - f > 0, arc.cap + f > 0, f == arc.cap, arc.id))
        oriented.append((arc.v, arc.u, False, False, -f == arc.cap, arc.id))
    return _critical(net, oriented, mode)
