
import unittest

from heckecells.laurent import ZERO, ONE, V, QTWO, mat_mul, mat_eq, mat_transpose, mat_is_identity
from heckecells.symgroup import Permutation, Partition, ParabolicData, symmetric_group
from heckecells.hecke import kl_table, bar_standard
from heckecells.cells import NotACell, parabolic_right_cells
from heckecells.action import HeckeModule
from heckecells.induced import IndexPair, InducedModule, induce, regular_module, \
    permutation_induced, sign_induced, ind_bar, kl_elements, ind_form, four_bases, \
    kl_action, kl_action_rows, induced_iso

def P(text):
    return Permutation.parse(text)

def all_induced(n, t):
    """ every module induced from a right cell of a proper parabolic subgroup """
    for composition in ([2, 1, 1], [1, 2, 1], [2, 2], [3, 1], [1, 3]):
        p = ParabolicData(n, composition)
        for cell in parabolic_right_cells(p, t):
            yield induce(p, cell, t)

class IndexPairTestCase(unittest.TestCase):

    def test_pair(self):
        b = IndexPair(P("213"), P("132"))
        self.assertEqual(b.product(), P("231"))
        self.assertEqual(b.length(), 2)
        self.assertEqual(b, IndexPair(P("213"), P("132")))
        self.assertEqual(len({b, IndexPair(P("213"), P("132"))}), 1)
        self.assertEqual(b.toJson(), [[2, 1, 3], [1, 3, 2]])

class InducedModuleTestCase(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.t3 = kl_table(3)
        cls.t4 = kl_table(4)
        # W' = <s1> in S3, R' = {s1}
        cls.p = ParabolicData(3, [2, 1])
        cls.m = induce(cls.p, [P("213")], cls.t3)

    def test_basis(self):
        m = self.m
        self.assertEqual(m.dim, 3)
        self.assertEqual([b.product() for b in m.basis], [P("213"), P("231"), P("321")])
        self.assertEqual([b.w for b in m.basis], [P("123"), P("132"), P("312")])

    def test_action(self):
        m = self.m
        # Δ_{s,e} H̲_s1 = (v + v^-1) Δ_{s,e} through the cell module
        self.assertEqual(m.matrices[1][0], [QTWO, ZERO, ZERO])
        self.assertEqual(m.matrices[2][0], [V, ONE, ZERO])
        self.assertEqual(m.matrices[1][1], [ZERO, V, ONE])
        self.assertEqual(m.matrices[1][2], [ZERO, ONE, V ** -1])
        self.assertTrue(m.check_relations())

    def test_kl_element_example(self):
        rows = self.m.kl_rows()
        self.assertEqual(rows[0], {0: ONE})
        self.assertEqual(rows[1], {1: ONE, 0: V})
        self.assertEqual(rows[2], {2: ONE, 1: V, 0: V ** 2})

    def test_regular_module_is_the_hecke_algebra(self):
        for n, t in ((3, self.t3), (4, self.t4)):
            m = regular_module(n, t)
            G = symmetric_group(n)
            self.assertEqual([b.w for b in m.basis], G.elements)
            K = kl_elements(m)
            for x, col in enumerate(t.columns):
                for y in range(len(G)):
                    self.assertEqual(K[x][y], col.get(y, ZERO))
            for i, row in enumerate(m.bar_rows()):
                self.assertEqual(row, bar_standard(G.elements[i]).terms)
            self.assertEqual(m.j_set, [])

    def test_relations(self):
        for m in all_induced(4, self.t4):
            self.assertTrue(m.check_relations(), repr(m))
            self.assertEqual(m.dim, len(m.cell) * len(m.short))

    def test_bar_is_an_involution(self):
        m = induce(ParabolicData(4, [3, 1]), [P("2134"), P("2314")], self.t4)
        vec = [V ** k if k % 3 else ZERO for k in range(m.dim)]
        self.assertEqual(ind_bar(m, ind_bar(m, vec)), vec)

    def test_kl_elements(self):
        for m in all_induced(4, self.t4):
            K = kl_elements(m)
            for i, row in enumerate(K):
                self.assertEqual(row[i], ONE)
                self.assertEqual(ind_bar(m, row), row)
                for j in range(i):
                    self.assertTrue(row[j].in_positive_degrees())
                for j in range(i + 1, m.dim):
                    self.assertEqual(row[j], ZERO)

    def test_kl_coordinates(self):
        m = self.m
        for i, row in enumerate(m.kl_rows()):
            self.assertEqual(m.kl_coordinates(row), {i: ONE})

    def test_form_invariance(self):
        for m in all_induced(4, self.t4):
            G = ind_form(m)
            self.assertEqual(G, m.form())
            for s, A in m.matrices.items():
                self.assertTrue(mat_eq(mat_mul(A, G), mat_mul(G, mat_transpose(A))))

    def test_j_set(self):
        m = induce(ParabolicData.full(3), [Permutation.identity(3)], self.t3)
        self.assertEqual(m.dim, 1)
        self.assertEqual(m.j_set, symmetric_group(3).elements[1:])
        m = permutation_induced(ParabolicData.full(3), self.t3)
        self.assertEqual(m.j_set, [])

    def test_characters(self):
        m = regular_module(3, self.t3)
        self.assertEqual(m.specht_multiplicities(),
            {Partition([3]): 1, Partition([2, 1]): 2, Partition([1, 1, 1]): 1})
        m = permutation_induced(ParabolicData(3, [2, 1]), self.t3)
        self.assertEqual(m.specht_multiplicities(), {Partition([3]): 1, Partition([2, 1]): 1})
        m = sign_induced(ParabolicData(3, [2, 1]), self.t3)
        self.assertEqual(m.specht_multiplicities(), {Partition([1, 1, 1]): 1, Partition([2, 1]): 1})

    def test_not_a_cell(self):
        with self.assertRaises(NotACell):
            induce(ParabolicData(4, [3, 1]), [P("2134")], self.t4)

    def test_isomorphic_induction(self):
        p = ParabolicData(4, [3, 1])
        a = induce(p, [P("2134"), P("2314")], self.t4)
        b = induce(p, [P("1324"), P("3124")], self.t4)
        F = induced_iso(a, b)
        self.assertIsNotNone(F)
        for s in a.matrices:
            self.assertTrue(mat_eq(mat_mul(a.matrices[s], F), mat_mul(F, b.matrices[s])))

class FourBasesTestCase(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.t4 = kl_table(4)

    def test_pairing(self):
        for m in all_induced(4, self.t4):
            fb = four_bases(m)
            self.assertTrue(mat_is_identity(fb.kl_s))
            self.assertTrue(mat_is_identity(fb.pairing()), repr(m))

    def test_laurent_duals(self):
        fb = four_bases(regular_module(3, kl_table(3)))
        self.assertTrue(fb.dual_is_laurent())
        m = induce(ParabolicData.full(3), [P("213"), P("231")], kl_table(3))
        self.assertFalse(four_bases(m).dual_is_laurent())

    def test_kl_action(self):
        m = induce(ParabolicData(4, [2, 2]), [P("2134")], self.t4)
        fb = four_bases(m)
        kl_mats = {}
        for s in range(1, 4):
            A, D = kl_action(fb, s)
            self.assertEqual(D, mat_transpose(A))
            kl_mats[s] = A
            # ⊡_i H̲_s expressed over Δ matches the KL coordinates
            for i, row in enumerate(kl_action_rows(m, s)):
                lhs = m.act(fb.kl[i], s)
                rhs = [ZERO] * m.dim
                for k, c in row.items():
                    rhs = [a + c * b for a, b in zip(rhs, fb.kl[k])]
                self.assertEqual(lhs, rhs)
        self.assertTrue(HeckeModule(4, list(range(m.dim)), kl_mats).check_relations())
        self.assertIs(kl_action_rows(m, 1), kl_action_rows(m, 1))

def main():
    unittest.main()

if __name__ == '__main__':
    main()
