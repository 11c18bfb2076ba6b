from .graph import Category, Multigraph, Digraph, Dsu
from .matching import BipartiteGraph, Matching, max_matching, min_cost_max_matching
from .matching_classify import Classification, classify_weighted, classify_unweighted
from .mst_classify import classify_mst_edges, classify_spanning_tree_edges
from .flow import CriticalMode, FlowNetwork, max_flow, upward_critical, upward_critical_undirected
from .geometry import (BalancedInstance, PolygonInstance, TriangleInstance, NoTriangleError,
                       balanced_arrangement, polygon_forward, polygon_reconstruct,
                       triangle_from_median_closed, triangle_from_median_search)
from .data import FormatError, read_bipartite, read_multigraph, read_flow, read_polygon

__version__ = '0.1.0'
__all__ = ['Category', 'Multigraph', 'Digraph', 'Dsu', 'BipartiteGraph', 'Matching',
           'max_matching', 'min_cost_max_matching', 'Classification', 'classify_weighted',
           'classify_unweighted', 'classify_mst_edges', 'classify_spanning_tree_edges',
           'CriticalMode', 'FlowNetwork', 'max_flow', 'upward_critical',
           'upward_critical_undirected', 'BalancedInstance', 'PolygonInstance',
           'TriangleInstance', 'NoTriangleError', 'balanced_arrangement', 'polygon_forward',
           'polygon_reconstruct', 'triangle_from_median_closed', 'triangle_from_median_search',
           'FormatError', 'read_bipartite', 'read_multigraph', 'read_flow', 'read_polygon']
