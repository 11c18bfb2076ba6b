import io
import unittest
from contextlib import redirect_stdout

from netdesign.graph import Category, Multigraph
from netdesign.matching import BipartiteGraph
from netdesign.matching_classify import Classification
from netdesign.flow import FlowNetwork
from netdesign.oracle import (MAX_MATCHING_PRODUCT, OracleRefusal, OracleReport,
                              enum_optimal_matchings, enum_min_spanning_trees, max_flow_by_cuts,
                              flow_increment_oracle, classification_from_enumeration, compare,
                              flow_mode_agreement)


class oracle_tests(unittest.TestCase):
    def test_enum_matchings(self):
        """Test matching enumeration"""

        g = BipartiteGraph(2, 1, [(1, 1), (2, 1)])
        found = sorted(sorted(m.edges) for m in enum_optimal_matchings(g, False))
        self.assertEqual(found, [[0], [1]])

        g = BipartiteGraph(2, 2, [(1, 1, 1), (1, 2, 2), (2, 1, 2), (2, 2, 1)])
        found = enum_optimal_matchings(g, True)
        self.assertEqual(len(found), 1)
        self.assertEqual(found[0].edges, frozenset([0, 3]))
        self.assertEqual(found[0].cost, 2)

        ## Parallel edges are distinct matchings
        g = BipartiteGraph(1, 1, [(1, 1), (1, 1)])
        self.assertEqual(len(enum_optimal_matchings(g, False)), 2)

        found = enum_optimal_matchings(BipartiteGraph(2, 2, []), False)
        self.assertEqual([m.size for m in found], [0])

    def test_enum_matchings_guard(self):
        """Test the matching enumeration size guard"""

        with self.assertRaises(OracleRefusal):
            enum_optimal_matchings(BipartiteGraph(5, 5, []), False)
        self.assertGreaterEqual(MAX_MATCHING_PRODUCT, 16)
        with self.assertRaises(ValueError):
            enum_optimal_matchings(BipartiteGraph(1, 1, [(1, 1)]), True)

    def test_enum_trees(self):
        """Test minimum spanning tree enumeration"""

        g = Multigraph(3, [(1, 2, 1), (2, 3, 1), (1, 3, 1)])
        self.assertEqual(len(enum_min_spanning_trees(g)), 3)

        g = Multigraph(3, [(1, 2, 1), (2, 3, 1), (1, 3, 2)])
        self.assertEqual(enum_min_spanning_trees(g), [frozenset([0, 1])])

        g = Multigraph(2, [(1, 1), (1, 2), (1, 2)])
        self.assertEqual(sorted(sorted(t) for t in enum_min_spanning_trees(g)), [[1], [2]])

        with self.assertRaises(ValueError):
            enum_min_spanning_trees(Multigraph(3, [(1, 2, 1)]))
        with self.assertRaises(OracleRefusal):
            enum_min_spanning_trees(Multigraph(2, [(1, 2, 1)]*13))

    def test_flow_oracles(self):
        """Test the brute-force flow oracles"""

        net = FlowNetwork(3, [(1, 2, 1), (2, 3, 2)], [1], [3])
        self.assertEqual(max_flow_by_cuts(net), 1)
        self.assertEqual(flow_increment_oracle(net), {0})

        net = FlowNetwork(2, [(1, 2, 3)], [1], [2], directed=False)
        self.assertEqual(max_flow_by_cuts(net), 3)
        self.assertEqual(flow_increment_oracle(net), {0})

        net = FlowNetwork(13, [(1, 13, 1)], [1], [13])
        with self.assertRaises(OracleRefusal):
            flow_increment_oracle(net)
        with self.assertRaises(OracleRefusal):
            max_flow_by_cuts(net)

    def test_classification(self):
        """Test classification from an explicit family"""

        edges = {0: ('a', 'b'), 1: ('b', 'c'), 2: ('c', 'd')}
        c = classification_from_enumeration(edges, [{0, 1}, {0}], vertices=['a', 'b', 'c', 'd'])
        self.assertEqual(c.edge_category, {0: Category.EVERY, 1: Category.SOME, 2: Category.NEVER})
        self.assertEqual(c.vertex_category, {'a': Category.EVERY, 'b': Category.EVERY,
                                             'c': Category.SOME, 'd': Category.NEVER})
        with self.assertRaises(ValueError):
            classification_from_enumeration(edges, [])

    def test_compare(self):
        """Test result comparison"""

        report = compare({1, 2}, {2, 3})
        self.assertFalse(report.ok)
        self.assertEqual(report.mismatches, [(1, True, False), (3, False, True)])
        self.assertTrue(compare(frozenset([1]), {1}).ok)

        a = Classification({0: Category.EVERY}, {('L', 1): Category.EVERY})
        b = Classification({0: Category.SOME}, {('L', 1): Category.EVERY})
        report = compare(a, b)
        self.assertEqual(report.mismatches, [(('edge', 0), Category.EVERY, Category.SOME)])
        self.assertTrue(compare(a, a).ok)

        with self.assertRaises(ValueError):
            compare({0: Category.EVERY}, {1: Category.EVERY})
        with self.assertRaises(TypeError):
            compare(1, 2)

        self.assertTrue(OracleReport(None, None, []).ok)

    def test_mode_agreement(self):
        """Test the mode agreement ratio"""

        nets = [FlowNetwork(3, [(1, 2, 1), (2, 3, 2)], [1], [3]),
                FlowNetwork(2, [(1, 2, 3)], [1], [2], directed=False)]
        self.assertEqual(flow_mode_agreement(nets), 1.0)
        self.assertEqual(flow_mode_agreement([]), 1.0)

        out = io.StringIO()
        with redirect_stdout(out):
            flow_mode_agreement(nets, verbose=True)
        self.assertIn("Modes agree on 2 of 2 networks", out.getvalue())


class oracle_test_suite(unittest.TestSuite):
    def __init__(self):
        unittest.TestSuite.__init__(self)

        loader = unittest.TestLoader()
        self.addTests(loader.loadTestsFromTestCase(oracle_tests))


if __name__ == '__main__':
    unittest.main()
