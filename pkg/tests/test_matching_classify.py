import time
import unittest
from itertools import combinations

import numpy as np

from netdesign.graph import Category, Digraph
from netdesign.matching import BipartiteGraph, Matching
from netdesign.matching_classify import (ResidualSide, build_residual, zero_cost_cycle_edges,
                                         classify_weighted, classify_unweighted)
from netdesign.oracle import enum_optimal_matchings, classification_from_enumeration, compare

E, S, N = Category.EVERY, Category.SOME, Category.NEVER


def _expected(g, weighted):
    family = [m.edges for m in enum_optimal_matchings(g, weighted)]
    ends = {edge.id: g.endpoints(edge.id) for edge in g.edges}
    return classification_from_enumeration(ends, family, g.vertices)


def _random_graph(rng, weighted):
    nL, nR = int(rng.integers(1, 5)), int(rng.integers(1, 5))
    m = int(rng.integers(0, 9))
    edges = []
    for _ in range(m):
        u, v = int(rng.integers(1, nL+1)), int(rng.integers(1, nR+1))
        if weighted:
            edges.append((u, v, int(rng.integers(0, 4))))
        else:
            edges.append((u, v))
    return BipartiteGraph(nL, nR, edges)


class matching_classify_tests(unittest.TestCase):
    def test_residual_s_side(self):
        """Test the residual digraph with the S vertex"""

        g = BipartiteGraph(1, 1, [(1, 1, 4)])
        r = build_residual(g, Matching(frozenset([0]), 4), ResidualSide.S_SIDE)
        self.assertEqual(r.n, 3)
        self.assertEqual([(a.tail, a.head, a.cost, a.origin) for a in r.arcs],
                         [(2, 1, -4, 0), (1, 3, 0, None)])

        g = BipartiteGraph(2, 1, [(1, 1, 1), (2, 1, 1)])
        r = build_residual(g, Matching(frozenset([0]), 1), ResidualSide.S_SIDE)
        self.assertEqual(sorted((a.tail, a.head) for a in r.arcs),
                         sorted([(3, 1), (2, 3), (1, 4), (4, 2)]))

    def test_residual_t_side(self):
        """Test the residual digraph with the T vertex"""

        g = BipartiteGraph(1, 1, [(1, 1, 4)])
        r = build_residual(g, Matching(frozenset([0]), 4), ResidualSide.T_SIDE)
        self.assertEqual([(a.tail, a.head, a.cost, a.origin) for a in r.arcs],
                         [(2, 1, -4, 0), (3, 2, 0, None)])

    def test_residual_costless(self):
        """Test the residual digraph without costs"""

        g = BipartiteGraph(1, 2, [(1, 1), (1, 2)])
        r = build_residual(g, Matching(frozenset([1]), 0), ResidualSide.T_SIDE, with_costs=False)
        self.assertTrue(all(a.cost == 0 for a in r.arcs))
        with self.assertRaises(ValueError):
            build_residual(g, Matching(frozenset([1]), 0), ResidualSide.T_SIDE, with_costs=True)

    def test_residual_bad_matching(self):
        """Test that a non-matching is rejected"""

        g = BipartiteGraph(1, 2, [(1, 1), (1, 2)])
        with self.assertRaises(ValueError):
            build_residual(g, Matching(frozenset([0, 1]), 0), ResidualSide.S_SIDE, with_costs=False)
        with self.assertRaises(ValueError):
            build_residual(g, Matching(frozenset([5]), 0), ResidualSide.S_SIDE, with_costs=False)

    def test_zero_cost_cycles(self):
        """Test zero-cost cycle arc detection"""

        self.assertEqual(zero_cost_cycle_edges(Digraph(2, [(1, 2, 1), (2, 1, -1)])), {0, 1})
        self.assertEqual(zero_cost_cycle_edges(Digraph(2, [(1, 2, 1), (2, 1, 0)])), set())
        with self.assertRaises(RuntimeError):
            zero_cost_cycle_edges(Digraph(2, [(1, 2, 1), (2, 1, -2)]))

        ## A zero cycle and a positive cycle sharing vertex 1
        g = Digraph(3, [(1, 2, 2), (2, 1, -2), (1, 3, 1), (3, 1, 0)])
        self.assertEqual(zero_cost_cycle_edges(g), {0, 1})

    def test_weighted_examples(self):
        """Test weighted classification on worked examples"""

        g = BipartiteGraph(2, 2, [(1, 1, 1), (1, 2, 2), (2, 1, 2), (2, 2, 1)])
        c = classify_weighted(g)
        self.assertEqual(c.edge_category, {0: E, 1: N, 2: N, 3: E})
        self.assertTrue(all(cat is E for cat in c.vertex_category.values()))
        self.assertEqual(c.matching.cost, 2)

        g = BipartiteGraph(2, 2, [(1, 1, 3), (1, 2, 3), (2, 1, 3), (2, 2, 3)])
        c = classify_weighted(g)
        self.assertEqual(c.edge_category, {0: S, 1: S, 2: S, 3: S})
        self.assertTrue(all(cat is E for cat in c.vertex_category.values()))

        c = classify_weighted(BipartiteGraph(1, 1, [(1, 1, 7)]))
        self.assertEqual(c.edge_category, {0: E})
        self.assertEqual(c.vertex_category, {('L', 1): E, ('R', 1): E})

    def test_weighted_vertices(self):
        """Test weighted vertex classification when a vertex can be dropped"""

        ## u1-v1 and u2-v1 cost the same so v1 is always matched and u1/u2 are SOME;
        ## u3-v1 is more expensive and never used
        g = BipartiteGraph(3, 1, [(1, 1, 2), (2, 1, 2), (3, 1, 5)])
        c = classify_weighted(g)
        self.assertEqual(c.edge_category, {0: S, 1: S, 2: N})
        self.assertEqual(c.vertex_category[('R', 1)], E)
        self.assertEqual(c.vertex_category[('L', 1)], S)
        self.assertEqual(c.vertex_category[('L', 2)], S)
        self.assertEqual(c.vertex_category[('L', 3)], N)

    def test_weighted_errors(self):
        """Test weighted classification input checks"""

        with self.assertRaises(ValueError):
            classify_weighted(BipartiteGraph(1, 1, [(1, 1)]))

        g = BipartiteGraph(2, 2, [(1, 1, 1), (1, 2, 2), (2, 1, 2), (2, 2, 1)])
        with self.assertRaises(RuntimeError):
            classify_weighted(g, matching=Matching(frozenset([1, 2]), 4))
        with self.assertRaises(ValueError):
            classify_weighted(g, matching=Matching(frozenset([0]), 1))

    def test_unweighted_examples(self):
        """Test unweighted classification on worked examples"""

        c = classify_unweighted(BipartiteGraph(2, 1, [(1, 1), (2, 1)]))
        self.assertEqual(c.edge_category, {0: S, 1: S})
        self.assertEqual(c.vertex_category, {('L', 1): S, ('L', 2): S, ('R', 1): E})

        c = classify_unweighted(BipartiteGraph(2, 2, [(1, 1), (1, 2), (2, 2)]))
        self.assertEqual(c.edge_category, {0: E, 1: N, 2: E})
        self.assertTrue(all(cat is E for cat in c.vertex_category.values()))

        c = classify_unweighted(BipartiteGraph(2, 2, []))
        self.assertEqual(c.edge_category, {})
        self.assertTrue(all(cat is N for cat in c.vertex_category.values()))

    def test_unweighted_exhaustive(self):
        """Test unweighted classification on every simple 3x3 bipartite graph with up to 6 edges"""

        pairs = [(u, v) for u in range(1, 4) for v in range(1, 4)]
        count = 0
        for m in range(0, 7):
            for edges in combinations(pairs, m):
                g = BipartiteGraph(3, 3, edges)
                report = compare(_expected(g, False), classify_unweighted(g))
                self.assertTrue(report.ok, msg=f"{edges}: {report.mismatches}")
                count += 1
        self.assertEqual(count, 466)

    def test_unweighted_random(self):
        """Test unweighted classification on random multigraphs"""

        rng = np.random.default_rng(2024)
        for _ in range(500):
            g = _random_graph(rng, False)
            report = compare(_expected(g, False), classify_unweighted(g))
            self.assertTrue(report.ok, msg=f"{[tuple(e) for e in g.edges]}: {report.mismatches}")

    def test_weighted_random(self):
        """Test weighted classification on random multigraphs"""

        rng = np.random.default_rng(31337)
        for _ in range(500):
            g = _random_graph(rng, True)
            report = compare(_expected(g, True), classify_weighted(g))
            self.assertTrue(report.ok, msg=f"{[tuple(e) for e in g.edges]}: {report.mismatches}")

    def test_choice_independence(self):
        """Test that every optimal matching gives the same classification"""

        rng = np.random.default_rng(99)
        for _ in range(100):
            for weighted in (False, True):
                g = _random_graph(rng, weighted)
                classify = classify_weighted if weighted else classify_unweighted
                reference = classify(g)
                for m in enum_optimal_matchings(g, weighted):
                    c = classify(g, matching=m)
                    self.assertEqual(c.edge_category, reference.edge_category)
                    self.assertEqual(c.vertex_category, reference.vertex_category)

    def test_weighted_large(self):
        """Test weighted classification on a complete 150x150 graph"""

        rng = np.random.default_rng(151)
        n = 150
        costs = rng.integers(0, 20, size=(n, n))
        g = BipartiteGraph(n, n, [(u+1, v+1, int(costs[u, v])) for u in range(n) for v in range(n)])

        t0 = time.time()
        c = classify_weighted(g)
        self.assertLess(time.time() - t0, 30)
        self.assertEqual(len(c.edge_category), n*n)
        ## Perfect matchings exist, so every vertex is always covered
        self.assertTrue(all(cat is E for cat in c.vertex_category.values()))


class matching_classify_test_suite(unittest.TestSuite):
    def __init__(self):
        unittest.TestSuite.__init__(self)

        loader = unittest.TestLoader()
        self.addTests(loader.loadTestsFromTestCase(matching_classify_tests))


if __name__ == '__main__':
    unittest.main()
