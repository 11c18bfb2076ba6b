import time
import unittest
from fractions import Fraction

import numpy as np

from netdesign.matching import BipartiteGraph, max_matching, min_cost_max_matching
from netdesign.oracle import enum_optimal_matchings


def _is_matching(g, m):
    left = [g.edges[i].u for i in m.edges]
    right = [g.edges[i].v for i in m.edges]
    return len(set(left)) == len(left) and len(set(right)) == len(right)


class matching_tests(unittest.TestCase):
    def test_graph(self):
        """Test bipartite graph construction"""

        g = BipartiteGraph(2, 3, [(1, 1), (2, 3, 4)])
        self.assertEqual(g.n, 5)
        self.assertEqual(g.m, 2)
        self.assertFalse(g.has_costs)
        self.assertEqual(g.vertices, [('L', 1), ('L', 2), ('R', 1), ('R', 2), ('R', 3)])
        self.assertEqual(g.endpoints(1), (('L', 2), ('R', 3)))

        with self.assertRaises(ValueError):
            BipartiteGraph(1, 1, [(2, 1)])
        with self.assertRaises(ValueError):
            BipartiteGraph(1, 1, [(1, 2)])
        with self.assertRaises(ValueError):
            BipartiteGraph(1, 1, [(1, 1, -1)])

        ## Vertices must be integers, as for Multigraph
        for edge in ((1.7, 2.2), (1.0, 2), (1, True)):
            with self.assertRaises(ValueError):
                BipartiteGraph(2, 2, [edge])
        g = BipartiteGraph(2, 2, [(np.int64(2), np.int64(1))])
        self.assertEqual((g.edges[0].u, g.edges[0].v), (2, 1))
        self.assertIs(type(g.edges[0].u), int)

    def test_max_matching(self):
        """Test maximum cardinality matching on small graphs"""

        m = max_matching(BipartiteGraph(1, 1, [(1, 1)]))
        self.assertEqual(m.edges, frozenset([0]))
        self.assertEqual(m.size, 1)

        m = max_matching(BipartiteGraph(2, 2, [(1, 1), (1, 2), (2, 2)]))
        self.assertEqual(m.edges, frozenset([0, 2]))

        m = max_matching(BipartiteGraph(2, 2, []))
        self.assertEqual(m.size, 0)

    def test_max_matching_parallel(self):
        """Test that parallel edges give valid ids"""

        g = BipartiteGraph(2, 1, [(1, 1), (1, 1), (2, 1)])
        m = max_matching(g)
        self.assertEqual(m.size, 1)
        self.assertTrue(m.edges <= frozenset([0, 1, 2]))

    def test_max_matching_random(self):
        """Test maximum matching size against enumeration"""

        rng = np.random.default_rng(42)
        for _ in range(200):
            nL, nR = int(rng.integers(1, 5)), int(rng.integers(1, 5))
            m = int(rng.integers(0, 9))
            edges = [(int(rng.integers(1, nL+1)), int(rng.integers(1, nR+1))) for _ in range(m)]
            g = BipartiteGraph(nL, nR, edges)

            found = max_matching(g)
            self.assertTrue(_is_matching(g, found))
            best = enum_optimal_matchings(g, False)
            self.assertEqual(found.size, best[0].size)

    def test_min_cost(self):
        """Test minimum cost maximum matching on small graphs"""

        g = BipartiteGraph(2, 2, [(1, 1, 1), (1, 2, 2), (2, 1, 2), (2, 2, 1)])
        m = min_cost_max_matching(g)
        self.assertEqual(m.edges, frozenset([0, 3]))
        self.assertEqual(m.cost, 2)

        m = min_cost_max_matching(BipartiteGraph(1, 1, [(1, 1, 5)]))
        self.assertEqual(m.edges, frozenset([0]))
        self.assertEqual(m.cost, 5)

        m = min_cost_max_matching(BipartiteGraph(1, 1, [(1, 1, 3), (1, 1, 1)]))
        self.assertEqual(m.edges, frozenset([1]))
        self.assertEqual(m.cost, 1)

    def test_min_cost_exact(self):
        """Test that Fraction costs stay exact"""

        g = BipartiteGraph(2, 2, [(1, 1, Fraction(1, 3)), (1, 2, Fraction(1, 2)),
                                  (2, 1, Fraction(1, 2)), (2, 2, Fraction(1, 3))])
        m = min_cost_max_matching(g)
        self.assertEqual(m.cost, Fraction(2, 3))

    def test_min_cost_prefers_cardinality(self):
        """Test that cardinality wins over cost"""

        ## The single cheap edge blocks a perfect matching of two expensive ones
        g = BipartiteGraph(2, 2, [(1, 1, 0), (1, 2, 10), (2, 1, 10)])
        m = min_cost_max_matching(g)
        self.assertEqual(m.size, 2)
        self.assertEqual(m.cost, 20)

    def test_min_cost_missing(self):
        """Test that missing costs are rejected"""

        with self.assertRaises(ValueError):
            min_cost_max_matching(BipartiteGraph(1, 1, [(1, 1)]))

    def test_min_cost_random(self):
        """Test minimum cost matching against enumeration"""

        rng = np.random.default_rng(7)
        for _ in range(300):
            nL, nR = int(rng.integers(1, 5)), int(rng.integers(1, 5))
            m = int(rng.integers(0, 9))
            edges = [(int(rng.integers(1, nL+1)), int(rng.integers(1, nR+1)), int(rng.integers(0, 4)))
                     for _ in range(m)]
            g = BipartiteGraph(nL, nR, edges)

            found = min_cost_max_matching(g)
            self.assertTrue(_is_matching(g, found))
            best = enum_optimal_matchings(g, True)
            self.assertEqual(found.size, best[0].size)
            self.assertEqual(found.cost, best[0].cost)

    def test_min_cost_large(self):
        """Test minimum cost matching on a dense 150x150 instance"""

        rng = np.random.default_rng(150)
        n = 150
        costs = rng.integers(0, 100, size=(n, n))
        g = BipartiteGraph(n, n, [(u+1, v+1, int(costs[u, v])) for u in range(n) for v in range(n)])

        t0 = time.time()
        m = min_cost_max_matching(g)
        self.assertEqual(m.size, n)
        self.assertLess(time.time() - t0, 30)

        from scipy.optimize import linear_sum_assignment
        rows, cols = linear_sum_assignment(costs)
        self.assertEqual(m.cost, int(costs[rows, cols].sum()))


class matching_test_suite(unittest.TestSuite):
    def __init__(self):
        unittest.TestSuite.__init__(self)

        loader = unittest.TestLoader()
        self.addTests(loader.loadTestsFromTestCase(matching_tests))


if __name__ == '__main__':
    unittest.main()
