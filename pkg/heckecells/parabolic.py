#! cd .. && python3 -m heckecells.parabolic

"""
# Parabolic modules and twisting matrices

The sign module N and the permutation module M of a parabolic subgroup W'
both have a basis indexed by the shortest right coset representatives x,
and H̲_s acts by

    N_x H̲_s = N_xs + v N_x        M_x H̲_s = M_xs + v M_x        xs short, xs > x
    N_x H̲_s = N_xs + v^-1 N_x     M_x H̲_s = M_xs + v^-1 M_x     xs short, xs < x
    N_x H̲_s = 0                   M_x H̲_s = (v + v^-1) M_x      xs not short

N is induced from H_s -> -v on W' and M from H_s -> v^-1.

The twisting matrices T_s act on the left cosets W/W', basis M(x.λ) for x a
shortest left coset representative, with the rows

    T_s M(x) = M(sx) + (v^-1 - v) M(x)    sx < x, sx short
    T_s M(x) = M(sx)                      sx > x, sx short
    T_s M(x) = v^-1 M(x)                  otherwise

They satisfy the Hecke relations in the form T^2 = 1 + (v^-1 - v) T, and
at v = 1 they become the permutation action of W on W/W'.
"""

import itertools

import numpy as np

from .laurent import (ZERO, ONE, V, VINV, QTWO, VINV_MINUS_V, mat_zero, mat_identity,
    mat_mul, mat_add, mat_scale, mat_eq, mat_eval_one)
from .serializable import SerializableEnum
from .action import HeckeModule, solve_intertwiner
from .logger import hklogger

class ModuleKind(SerializableEnum):
    SIGN=1
    PERMUTATION=2
    TWISTING=3

class ParabolicModule(HeckeModule):
    """ the sign or permutation module of a parabolic subgroup

    :param kind: ModuleKind.SIGN or ModuleKind.PERMUTATION
    :param parabolic: the parabolic subgroup W'
    """
    def __init__(self, kind, parabolic):
        kind = ModuleKind(kind)
        if kind not in (ModuleKind.SIGN, ModuleKind.PERMUTATION):
            raise ValueError("parabolic modules are sign or permutation, not %s" % kind)
        self.kind = kind
        self.parabolic = parabolic
        self.basis = parabolic.short_reps()
        super(ParabolicModule, self).__init__(parabolic.n, self.basis, self._buildMatrices())

    def _buildMatrices(self):
        pos = {x: i for i, x in enumerate(self.basis)}
        third = ZERO if self.kind == ModuleKind.SIGN else QTWO
        d = len(self.basis)
        matrices = {}
        for s in range(1, self.parabolic.n):
            M = mat_zero(d, d)
            for i, x in enumerate(self.basis):
                xs = x.right_mul_simple(s)
                j = pos.get(xs)
                if j is None:
                    M[i][i] = third
                else:
                    M[i][j] = ONE
                    M[i][i] = V if s not in x.right_descents() else VINV
            matrices[s] = M
        return matrices

def parabolic_module(kind, p):
    """ :param kind: a ModuleKind or its name, "sign" or "permutation" """
    if isinstance(kind, str):
        kind = ModuleKind.fromJson(kind)
    return ParabolicModule(kind, p)

class TwistingAction(object):
    """ the twisting matrices T_s on the left cosets W/W'

    the basis is the inverses of the shortest right coset representatives,
    in the same order
    """
    def __init__(self, parabolic):
        super(TwistingAction, self).__init__()
        self.parabolic = parabolic
        self.n = parabolic.n
        self.basis = parabolic.left_short_reps()
        self.matrices = self._buildMatrices()

    @property
    def dim(self):
        return len(self.basis)

    def _buildMatrices(self):
        pos = {x: i for i, x in enumerate(self.basis)}
        d = len(self.basis)
        matrices = {}
        for s in range(1, self.n):
            M = mat_zero(d, d)
            for i, x in enumerate(self.basis):
                sx = x.left_mul_simple(s)
                j = pos.get(sx)
                if j is None:
                    M[i][i] = VINV
                elif s in x.left_descents():
                    M[i][j] = ONE
                    M[i][i] = VINV_MINUS_V
                else:
                    M[i][j] = ONE
            matrices[s] = M
        return matrices

    def relation_failures(self):
        failures = []
        gens = sorted(self.matrices)
        eye = mat_identity(self.dim)
        for s in gens:
            T = self.matrices[s]
            if not mat_eq(mat_mul(T, T), mat_add(eye, mat_scale(VINV_MINUS_V, T))):
                failures.append("T%d^2 != 1 + (v^-1 - v) T%d" % (s, s))
        for s, t in itertools.combinations(gens, 2):
            A = self.matrices[s]
            B = self.matrices[t]
            if abs(s - t) == 1:
                if not mat_eq(mat_mul(mat_mul(A, B), A), mat_mul(mat_mul(B, A), B)):
                    failures.append("braid relation fails for T%d, T%d" % (s, t))
            elif not mat_eq(mat_mul(A, B), mat_mul(B, A)):
                failures.append("T%d and T%d do not commute" % (s, t))
        return failures

    def check_relations(self):
        failures = self.relation_failures()
        for f in failures:
            hklogger.error("TwistingAction: %s", f)
        return not failures

    def group_matrices(self):
        """ the matrices at v = 1 """
        return {s: mat_eval_one(T) for s, T in self.matrices.items()}

    def coset_permutation(self, s):
        """ the permutation matrix of x W' -> s x W' on the basis """
        p = self.parabolic
        pos = {x: i for i, x in enumerate(self.basis)}
        out = np.zeros((self.dim, self.dim), dtype=object)
        for i, x in enumerate(self.basis):
            # sx W' is represented by the inverse of the short part of (sx)^-1
            _, w = p.decompose(x.left_mul_simple(s).inverse())
            out[i, pos[w.inverse()]] = 1
        return out

    def matches_permutation_action(self):
        ones = self.group_matrices()
        return all((ones[s] == self.coset_permutation(s)).all() for s in self.matrices)

    def __repr__(self):
        return "TwistingAction(n=%d, dim=%d)" % (self.n, self.dim)

def twisting_matrices(p):
    return TwistingAction(p)

def _label_map(pm, im):
    # N_w -> Δ_{x,w}, when the induced module is one dimensional over W'
    index = {b.w: j for j, b in enumerate(im.basis)}
    F = mat_zero(pm.dim, im.dim)
    for i, w in enumerate(pm.basis):
        F[i][index[w]] = ONE
    return F

def parabolic_iso_check(pm, im):
    """ an invertible intertwiner from the parabolic module to the induced module, or None

    tries the map matching N_w with Δ_{x,w} first
    """
    if pm.dim != im.dim or pm.parabolic != im.parabolic:
        return None
    if len(im.cell) == 1:
        F = _label_map(pm, im)
        if all(mat_eq(mat_mul(pm.matrices[s], F), mat_mul(F, im.matrices[s]))
                for s in pm.matrices):
            return F
    return solve_intertwiner(pm, im)
