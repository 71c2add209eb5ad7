#! cd .. && python3 -m heckecells.action

"""
# Explicit right modules

Every module heckecells builds (cell modules, induced cell modules,
parabolic modules) is a free Z[v, v^-1]-module with a fixed ordered basis
and one matrix per generator. Matrices use the row convention: entry
M[i][j] is the coefficient of basis element j in (basis element i) * H̲_s,
so a word acts by the product of its matrices from left to right.

At v = 1 the Hecke algebra becomes the group algebra, with H_s = H̲_s - 1.
Characters are traced over the minimal length class representatives and
decomposed against the irreducible characters.
"""

import random
import itertools
from math import factorial

import numpy as np

from .laurent import (ZERO, ONE, QTWO, LaurentPoly, mat_mul, mat_add, mat_scale, mat_eq,
    mat_eval_one, mat_evaluate, vec_mat, nullspace, rank)
from .symgroup import partitions, class_size, class_word, mn_character
from .logger import hklogger

class HeckeModule(object):
    """ a right module over the Hecke algebra of Sn given by generator matrices

    :param n: the rank
    :param labels: the basis labels, in basis order
    :param matrices: mapping s -> matrix of H̲_s for s = 1..n-1
    """
    def __init__(self, n, labels, matrices):
        super(HeckeModule, self).__init__()
        self.n = n
        self.labels = list(labels)
        self.matrices = dict(matrices)
        self._sparse = {}

    @property
    def dim(self):
        return len(self.labels)

    def action(self, s):
        return self.matrices[s]

    def sparse_rows(self, s):
        """ the rows of the matrix of H̲_s as dicts column -> entry """
        rows = self._sparse.get(s)
        if rows is None:
            rows = [{j: x for j, x in enumerate(row) if x} for row in self.matrices[s]]
            self._sparse[s] = rows
        return rows

    def act(self, vec, s):
        """ vec * H̲_s for a dense coefficient vector """
        return vec_mat(vec, self.matrices[s])

    def act_sparse(self, vec, s):
        """ vec * H̲_s for a sparse vector {index: coefficient} """
        rows = self.sparse_rows(s)
        out = {}
        for i, c in vec.items():
            for j, x in rows[i].items():
                val = out.get(j)
                out[j] = c * x if val is None else val + c * x
        return {j: x for j, x in out.items() if x}

    def act_word(self, vec, word):
        for s in word:
            vec = self.act(vec, s)
        return vec

    def relation_failures(self):
        """ the defining relations that the matrices violate, as readable strings """
        failures = []
        gens = sorted(self.matrices)
        for s in gens:
            M = self.matrices[s]
            if not mat_eq(mat_mul(M, M), mat_scale(QTWO, M)):
                failures.append("quadratic relation fails for s%d" % s)
        for s, t in itertools.combinations(gens, 2):
            A = self.matrices[s]
            B = self.matrices[t]
            if abs(s - t) == 1:
                left = mat_add(mat_mul(mat_mul(A, B), A), B)
                right = mat_add(mat_mul(mat_mul(B, A), B), A)
                if not mat_eq(left, right):
                    failures.append("braid relation fails for s%d, s%d" % (s, t))
            elif not mat_eq(mat_mul(A, B), mat_mul(B, A)):
                failures.append("s%d and s%d do not commute" % (s, t))
        return failures

    def check_relations(self):
        failures = self.relation_failures()
        for f in failures:
            hklogger.error("%s: %s", self.__class__.__name__, f)
        return not failures

    def group_matrices(self):
        """ the matrices of H_s at v = 1 """
        out = {}
        eye = np.identity(self.dim, dtype=object)
        for s, M in self.matrices.items():
            out[s] = mat_eval_one(M) - eye
        return out

    def group_matrix(self, word):
        """ the matrix of the group element s_{a1} ... s_{ak} at v = 1 """
        mats = self.group_matrices()
        result = np.identity(self.dim, dtype=object)
        for s in word:
            result = result.dot(mats[s])
        return result

    def character(self, cycle_type):
        """ the v = 1 character on the class of the given cycle type """
        return int(np.trace(self.group_matrix(class_word(cycle_type))))

    def character_table(self):
        """ mapping cycle type -> character value over all classes """
        mats = self.group_matrices()
        eye = np.identity(self.dim, dtype=object)
        out = {}
        for ct in partitions(self.n):
            m = eye
            for s in class_word(ct):
                m = m.dot(mats[s])
            out[ct] = int(np.trace(m))
        return out

    def specht_multiplicities(self):
        """ the multiplicity of every Specht module in the v = 1 specialization """
        return decompose_character(self.n, self.character_table())

    def direct_sum(self, other):
        """ the block diagonal module self + other """
        if other.n != self.n:
            raise ValueError("direct sum of modules over S%d and S%d" % (self.n, other.n))
        d1 = self.dim
        d2 = other.dim
        matrices = {}
        for s in self.matrices:
            M = [[ZERO] * (d1 + d2) for _ in range(d1 + d2)]
            for i in range(d1):
                M[i][:d1] = self.matrices[s][i]
            for i in range(d2):
                M[d1 + i][d1:] = other.matrices[s][i]
            matrices[s] = M
        labels = [(0, l) for l in self.labels] + [(1, l) for l in other.labels]
        return HeckeModule(self.n, labels, matrices)

    def __repr__(self):
        return "%s(n=%d, dim=%d)" % (self.__class__.__name__, self.n, self.dim)

def decompose_character(n, table):
    """ multiplicities of the irreducible characters in a class function

    :param table: mapping cycle type -> character value
    :raises ArithmeticError: when the class function is not a character
    """
    order = factorial(n)
    out = {}
    for lam in partitions(n):
        total = sum(class_size(ct) * value * mn_character(lam, ct) for ct, value in table.items())
        mult, rem = divmod(total, order)
        if rem or mult < 0:
            raise ArithmeticError("not a character: <chi, chi^%s> = %d/%d" % (lam, total, order))
        if mult:
            out[lam] = mult
    return out

def intertwiner_space(m1, m2):
    """ a basis of {F : A1(s) F = F A2(s) for all s}, each F a d1 x d2 matrix """
    d1 = m1.dim
    d2 = m2.dim
    rows = []
    for s in sorted(m1.matrices):
        A = m1.matrices[s]
        B = m2.matrices[s]
        for i in range(d1):
            for j in range(d2):
                # (A F)[i][j] - (F B)[i][j]
                row = {}
                for k, a in enumerate(A[i]):
                    if a:
                        col = k * d2 + j
                        row[col] = row.get(col, ZERO) + a
                for k in range(d2):
                    b = B[k][j]
                    if b:
                        col = i * d2 + k
                        row[col] = row.get(col, ZERO) - b
                row = {c: x for c, x in row.items() if x}
                if row:
                    rows.append(row)
    basis = nullspace(rows, d1 * d2)
    return [[vec[i * d2:(i + 1) * d2] for i in range(d1)] for vec in basis]

def _invertible(F):
    return rank(F, len(F)) == len(F)

SAMPLE_POINTS = (2, 3, 5, 7, 11, 13)

def solve_intertwiner(m1, m2, attempts=24, seed=0):
    """ an invertible F with A1(s) F = F A2(s) for every generator, or None

    The intertwiners are the span of a basis F_1, ..., F_k, and
    det(c_1 F_1 + ... + c_k F_k) is a polynomial in the c_i and v. Random
    integer coefficients, tested at v = 2, 3, 5, ..., find an invertible
    combination whenever one exists, except with vanishing probability.

    :param attempts: number of random combinations tried
    :param seed: seed of the coefficient generator
    """
    if m1.dim != m2.dim or m1.n != m2.n:
        return None
    d = m1.dim
    if all(mat_eq(m1.matrices[s], m2.matrices[s]) for s in m1.matrices):
        return [[ONE if i == j else ZERO for j in range(d)] for i in range(d)]
    basis = intertwiner_space(m1, m2)
    hklogger.debug("intertwiner space of dimension %d", len(basis))
    if not basis:
        return None
    if len(basis) == 1:
        return basis[0] if _invertible(basis[0]) else None
    values = {}
    rng = random.Random(seed)
    for attempt in range(attempts):
        x = SAMPLE_POINTS[attempt % len(SAMPLE_POINTS)]
        if x not in values:
            values[x] = [mat_evaluate(F, x) for F in basis]
        coeffs = [rng.randint(1, 50) for _ in basis]
        total = values[x][0] * coeffs[0]
        for c, M in zip(coeffs[1:], values[x][1:]):
            total = total + M * c
        if total.rank() == d:
            hklogger.debug("invertible intertwiner after %d attempts", attempt + 1)
            F = mat_scale(LaurentPoly.constant(coeffs[0]), basis[0])
            for c, G in zip(coeffs[1:], basis[1:]):
                F = mat_add(F, mat_scale(LaurentPoly.constant(c), G))
            return F
    hklogger.warning("no invertible intertwiner among %d combinations of %d generators",
        attempts, len(basis))
    return None
