from itertools import groupby

from typing import Dict, List, NamedTuple

from .graph import Category, Dsu, Multigraph, bridges, is_connected
from .typehints import Cost

__version__ = '0.1'
__all__ = ['CostGroup', 'cost_groups', 'classify_mst_edges', 'classify_spanning_tree_edges']


class CostGroup(NamedTuple):
    cost: Cost
    edges: List[int]


def cost_groups(g: Multigraph) -> List[CostGroup]:
    """
    Split the edges of a multigraph into maximal groups of equal cost, ordered
    by strictly increasing cost.  Edge ids within a group are in input order.
    """

    if not g.has_costs:
        raise ValueError("Minimum spanning tree classification requires a cost on every edge")

    ordered = sorted(g.edges, key=lambda e: (e.cost, e.id))
    return [CostGroup(cost, [e.id for e in group])
            for cost,group in groupby(ordered, key=lambda e: e.cost)]


def classify_mst_edges(g: Multigraph) -> Dict[int, Category]:
    """
    Classify every edge of a connected multigraph as belonging to every
    (EVERY), some (SOME) or no (NEVER) minimum spanning tree.

    Edges are processed in groups of equal cost C.  Every group edge (x,y)
    induces the edge (Find(x), Find(y)) in a contracted multigraph G(C) whose
    components are those of the edges cheaper than C.  Induced bridges are
    EVERY, induced loops are NEVER and the remaining induced edges are SOME.
    The group is then merged into the disjoint-set structure.  Runs in
    O(M log M).
    """

    if not is_connected(g):
        raise ValueError("Minimum spanning tree classification requires a connected multigraph")

    d = Dsu(g.n)
    category: Dict[int, Category] = {}
    for group in cost_groups(g):
        ## Compact the touched representatives to 1..k
        index: Dict[int, int] = {}
        induced = []
        for i in group.edges:
            edge = g.edges[i]
            rx, ry = d.find(edge.u), d.find(edge.v)
            x = index.setdefault(rx, len(index)+1)
            y = index.setdefault(ry, len(index)+1)
            induced.append((x, y))

        contracted = Multigraph(len(index), induced)
        critical = bridges(contracted)
        for local,i in enumerate(group.edges):
            x, y = induced[local]
            if x == y:
                category[i] = Category.NEVER
            elif local in critical:
                category[i] = Category.EVERY
            else:
                category[i] = Category.SOME

        for i in group.edges:
            edge = g.edges[i]
            d.union(edge.u, edge.v)

    return category


def classify_spanning_tree_edges(g: Multigraph) -> Dict[int, Category]:
    """
    Classify every edge of a connected multigraph, ignoring costs, as
    belonging to every (EVERY), some (SOME) or no (NEVER) spanning tree.
    Bridges are in every spanning tree, loops in none and every other edge in
    at least one.
    """

    if not is_connected(g):
        raise ValueError("Spanning tree classification requires a connected multigraph")

    critical = bridges(g)
    category: Dict[int, Category] = {}
    for edge in g.edges:
        if edge.u == edge.v:
            category[edge.id] = Category.NEVER
        elif edge.id in critical:
            category[edge.id] = Category.EVERY
        else:
            category[edge.id] = Category.SOME
    return category
