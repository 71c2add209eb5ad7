
import unittest
from unittest import mock

from heckecells.symgroup import Permutation, Partition, ParabolicData, partitions
from heckecells.hecke import kl_table
from heckecells.cells import parabolic_right_cells
from heckecells.induced import induce, regular_module
from heckecells.filtration import GKStatistic, FiltrationLayer, NotSubmodule, gk_statistic, \
    gk_filtration, dominance_filtration, compare_filtrations, dominance_layers, gk_layers, \
    square_counterexample, dominance_implies_squares, dominance_vs_gk

def parts(*shapes):
    return [Partition(s) for s in shapes]

class GKStatisticTestCase(unittest.TestCase):

    def test_extremes(self):
        st = gk_statistic(Permutation.identity(4))
        self.assertEqual(st, GKStatistic(16, Partition([4])))
        self.assertEqual(st.gkdim, 0)
        self.assertEqual(gk_statistic(Permutation.longest(4)).gkdim, 6)
        self.assertEqual(gk_statistic(Permutation.parse("2143")).gkdim, 4)

class FiltrationTestCase(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.t3 = kl_table(3)
        cls.t4 = kl_table(4)

    def test_regular_s3(self):
        m = regular_module(3, self.t3)
        gk = gk_filtration(m)
        self.assertEqual(gk.thresholds, [0, 2, 3])
        self.assertEqual(gk.shape_layers(), [parts([3]), parts([2, 1]), parts([1, 1, 1])])
        self.assertEqual([l.specht for l in gk.layers],
            [{Partition([1, 1, 1]): 1}, {Partition([2, 1]): 2}, {Partition([3]): 1}])
        self.assertEqual(gk.layers[0].members, [0])
        self.assertEqual(gk.layers[2].members, [5])
        self.assertEqual(gk.total(), m.specht_multiplicities())

    def test_dominance_filtration(self):
        m = regular_module(3, self.t3)
        dom = dominance_filtration(m)
        self.assertEqual(dom.shape_layers(), [parts([3]), parts([2, 1]), parts([1, 1, 1])])
        self.assertEqual(dom.thresholds, [0, 2, 3])
        self.assertTrue(compare_filtrations(gk_filtration(m), dom))
        self.assertEqual([l.members for l in dom.layers], [[0], [1, 2, 3, 4], [5]])
        self.assertEqual([l.specht for l in dom.layers],
            [{Partition([1, 1, 1]): 1}, {Partition([2, 1]): 2}, {Partition([3]): 1}])

    def test_dominance_span_must_be_closed(self):
        m = regular_module(2, kl_table(2))
        s = Permutation.simple(2, 1)

        def swapped(w):
            return Partition([2]) if w == s else Partition([1, 1])

        # D_s H̲_s reaches D_e, which now sits in the upper layer
        with mock.patch("heckecells.filtration.rsk_shape", side_effect=swapped):
            with self.assertRaises(NotSubmodule):
                dominance_filtration(m)
        self.assertEqual([l.members for l in dominance_filtration(m).layers], [[0], [1]])

    def test_comparison_reads_members(self):
        m = regular_module(3, self.t3)
        gk = gk_filtration(m)
        dom = dominance_filtration(m)
        dom.layers[1].members = [1, 2, 3]
        dom.layers[2].members = [4, 5]
        self.assertFalse(compare_filtrations(gk, dom))

    def test_induced_modules_of_s4(self):
        for composition in ([2, 2], [3, 1], [1, 2, 1], [4]):
            p = ParabolicData(4, composition)
            for cell in parabolic_right_cells(p, self.t4):
                m = induce(p, cell, self.t4)
                gk = gk_filtration(m)
                self.assertEqual(gk.thresholds, sorted(gk.thresholds))
                self.assertEqual(gk.total(), m.specht_multiplicities())
                self.assertEqual(sum(len(l.members) for l in gk.layers), m.dim)
                for layer in gk.layers:
                    self.assertEqual(set(layer.specht), {lam.transpose() for lam in layer.shapes})
                    self.assertTrue(layer.labels_incomparable())
                self.assertTrue(compare_filtrations(gk, dominance_filtration(m)), composition)

    def test_regular_s4_layers(self):
        gk = gk_filtration(regular_module(4, self.t4))
        self.assertEqual(gk.thresholds, [0, 3, 4, 5, 6])
        self.assertEqual(gk.layers[2].specht, {Partition([2, 2]): 2})

class PartitionLayersTestCase(unittest.TestCase):

    def test_dominance_layers(self):
        layers = dominance_layers(partitions(6))
        self.assertEqual(layers[3], parts([4, 1, 1], [3, 3]))
        self.assertEqual(layers, gk_layers(partitions(6)))

    def test_split_at_seven(self):
        self.assertNotEqual(dominance_layers(partitions(7)), gk_layers(partitions(7)))
        for n in range(1, 7):
            self.assertEqual(dominance_vs_gk(n), [], n)
        split = dominance_vs_gk(7)[0]
        self.assertEqual(split.shapes, parts([5, 1, 1], [4, 3]))
        self.assertEqual(split.statistics, [27, 25])

    def test_dominance_implies_squares(self):
        for n in range(1, 9):
            self.assertTrue(dominance_implies_squares(n))
            self.assertIsNone(square_counterexample(n))
        with self.assertRaises(ValueError):
            dominance_implies_squares(0)

    def test_layer_record(self):
        layer = FiltrationLayer(gkdim=2, shapes=parts([2, 1]), members=[1, 2],
            specht={Partition([2, 1]): 2})
        self.assertEqual(FiltrationLayer.loads(layer.dumps()), layer)
        self.assertEqual(layer.labels(), parts([2, 1]))
        other = FiltrationLayer(gkdim=0, shapes=[], members=[],
            specht={Partition([3, 1]): 1, Partition([2, 2]): 1})
        self.assertFalse(other.labels_incomparable())

def main():
    unittest.main()

if __name__ == '__main__':
    main()
