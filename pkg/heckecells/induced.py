#! cd .. && python3 -m heckecells.induced

"""
# Induced cell modules

For a parabolic subgroup W' and a right cell R' of W', the induced module
S(R') (x) H has the basis

    Δ_{x,w} = H̲_x (x) H_w,    x in R', w a shortest right coset representative

ordered by l(xw), ties broken by the one-line notation of xw. H̲_s acts by

    Δ_{x,ws} + v Δ_{x,w}          if ws is short and ws > w
    Δ_{x,ws} + v^-1 Δ_{x,w}       if ws is short and ws < w
    (C_x H̲_s') (x) H_w            if ws = s'w with s' in W'

the last expanded through the cell module of R'.

The bar involution is bar(c H̲_x (x) H_w) = bar(c) H̲_x (x) bar(H_w). Every
standard term H_y of bar(H_w) is split as y = u w' with u in W' and w'
short, and H_u is moved onto the cell module factor through
H_s' = H̲_s' - v. The result is Δ_{x,w} plus terms of strictly smaller
l(x'w'); this is checked for every basis element.

The KL elements ⊡_{x,w} are the bar invariant elements equal to Δ_{x,w} plus
a vZ[v] combination of shorter Δ's. They are built one at a time:
⊡_{x,e} = Δ_{x,e}, otherwise ⊡_{x,ws} H̲_s for the smallest right descent s of
w, corrected from the top down by the already built elements.
"""

from .laurent import (ZERO, ONE, V, VINV, mat_zero, mat_identity, mat_transpose,
    rf_invert_matrix, unitriangular_inverse, RationalFunction)
from .symgroup import Permutation, ParabolicData, sort_key
from .hecke import bar_standard
from .cells import check_parabolic_cell, compute_cells
from .cellmod import parabolic_cell_module
from .action import HeckeModule, solve_intertwiner
from .logger import ScopedLogger

class TriangularityViolation(Exception):
    pass

class IndexPair(object):
    """ a basis index (x, w): x in R', w a shortest right coset representative """
    __slots__ = ('x', 'w')

    def __init__(self, x, w):
        self.x = x
        self.w = w

    def product(self):
        return self.x * self.w

    def length(self):
        return self.x.length() + self.w.length()

    def __eq__(self, other):
        if not isinstance(other, IndexPair):
            return NotImplemented
        return self.x == other.x and self.w == other.w

    def __hash__(self):
        return hash((self.x, self.w))

    def __repr__(self):
        return "(%s, %s)" % (self.x, self.w)

    def toJson(self):
        return [self.x.toJson(), self.w.toJson()]

def _simple_of(u):
    # the index i of a simple reflection s_i
    for i, x in enumerate(u.one_line, 1):
        if x != i:
            return i
    raise ValueError("%s is the identity" % u)

class InducedModule(HeckeModule):
    """ the induced module S(R') (x) H of a right cell R' of W'

    :param parabolic: the parabolic subgroup W'
    :param cell_module: the cell module of R' over W'
    :param table: the KL table of Sn
    """
    def __init__(self, parabolic, cell_module, table):
        p = parabolic
        self.parabolic = p
        self.cell_module = cell_module
        self.table = table
        self.cell = cell_module.cell
        self.short = p.short_reps()
        basis = [IndexPair(x, w) for x in self.cell for w in self.short]
        basis.sort(key=lambda b: sort_key(b.product()))
        self.basis = basis
        self.position = {(b.x, b.w): i for i, b in enumerate(basis)}
        self._cellpos = {x: k for k, x in enumerate(self.cell)}
        self.log = ScopedLogger("S%d/%s" % (table.n, ",".join(str(c) for c in p.composition)))
        super(InducedModule, self).__init__(table.n, basis, self._buildMatrices())
        self._bar_rows = None
        self._standard = {}
        self._decomposed = {}
        self._kl_rows = None
        self._kl_action = {}
        self._form = None
        self._j_set = None
        self.log.debug("induced module of dimension %d from a cell of size %d",
            len(basis), len(self.cell))

    def _buildMatrices(self):
        short = set(self.short)
        cm = self.cell_module
        d = len(self.basis)
        matrices = {}
        for s in range(1, self.parabolic.n):
            M = mat_zero(d, d)
            for i, b in enumerate(self.basis):
                ws = b.w.right_mul_simple(s)
                if ws in short:
                    M[i][self.position[(b.x, ws)]] = ONE
                    M[i][i] = V if ws.length() > b.w.length() else VINV
                    continue
                A = cm.matrices[_simple_of(ws * b.w.inverse())]
                for y, a in enumerate(A[self._cellpos[b.x]]):
                    if a:
                        M[i][self.position[(self.cell[y], b.w)]] = a
            matrices[s] = M
        return matrices

    @property
    def j_set(self):
        """ the y >=_R R' that are not of the form xw, for reporting """
        if self._j_set is None:
            c = compute_cells(self.table)
            G = c.group
            above = set()
            for x in self.cell:
                above.update(c.up_set_index([x]))
            products = {G.index[b.product()] for b in self.basis}
            self._j_set = [G.elements[i] for i in sorted(above - products)]
        return self._j_set

    def standard_action(self, u):
        """ the matrix of H_u, u in W', on the cell module, as sparse rows """
        rows = self._standard.get(u)
        if rows is None:
            cm = self.cell_module
            rows = []
            for k in range(cm.dim):
                vec = {k: ONE}
                for s in u.reduced_word():
                    moved = cm.act_sparse(vec, s)
                    for j, c in vec.items():
                        val = moved.get(j, ZERO) - V * c
                        if val:
                            moved[j] = val
                        else:
                            moved.pop(j, None)
                    vec = moved
                rows.append(vec)
            self._standard[u] = rows
        return rows

    def _decompose(self, y):
        out = self._decomposed.get(y)
        if out is None:
            out = self.parabolic.decompose(self.table.group.elements[y])
            self._decomposed[y] = out
        return out

    def _barOf(self, i):
        b = self.basis[i]
        k = self._cellpos[b.x]
        out = {}
        for y, c in bar_standard(b.w).terms.items():
            u, wp = self._decompose(y)
            for xp, a in self.standard_action(u)[k].items():
                j = self.position[(self.cell[xp], wp)]
                val = out.get(j, ZERO) + c * a
                if val:
                    out[j] = val
                else:
                    out.pop(j, None)
        if out.get(i) != ONE or any(self.basis[j].length() >= b.length()
                for j in out if j != i):
            self.log.error("bar of %r is not unitriangular: %s", b, out)
            raise TriangularityViolation("bar(Δ%r) is not Δ%r plus shorter terms" % (b, b))
        return out

    def bar_rows(self):
        """ bar(Δ_i) for every basis element, as sparse rows """
        if self._bar_rows is None:
            self._bar_rows = [self._barOf(i) for i in range(len(self.basis))]
        return self._bar_rows

    def kl_rows(self):
        """ the KL elements as sparse rows over the Δ basis """
        if self._kl_rows is None:
            self._kl_rows = self._buildKL()
        return self._kl_rows

    def _buildKL(self):
        self.bar_rows()
        rows = []
        for i, b in enumerate(self.basis):
            if b.w.is_identity():
                rows.append({i: ONE})
                continue
            s = min(b.w.right_descents())
            y = self.act_sparse(rows[self.position[(b.x, b.w.right_mul_simple(s))]], s)
            if y.get(i) != ONE or max(y) != i:
                raise TriangularityViolation("⊡%r does not start with Δ%r" % (b, b))
            for c in range(i - 1, -1, -1):
                pc = y.get(c)
                if pc is None or pc.in_positive_degrees():
                    continue
                beta = pc.symmetrize_nonpositive()
                for k, z in rows[c].items():
                    val = y.get(k, ZERO) - beta * z
                    if val:
                        y[k] = val
                    else:
                        y.pop(k, None)
            self.log.trace("⊡%r has %d terms", b, len(y))
            rows.append(y)
        return rows

    def form(self):
        if self._form is None:
            self._form = ind_form(self)
        return self._form

    def kl_coordinates(self, vec):
        """ the coordinates of a sparse Δ vector in the KL basis """
        rows = self.kl_rows()
        vec = dict(vec)
        out = {}
        while vec:
            top = max(vec)
            c = vec[top]
            out[top] = c
            for k, z in rows[top].items():
                val = vec.get(k, ZERO) - c * z
                if val:
                    vec[k] = val
                else:
                    vec.pop(k, None)
        return out

def induce(p, Rprime, t):
    """ the induced module of the right cell Rprime of W'

    :raises NotACell: when Rprime is not a right cell of W'
    """
    cell = check_parabolic_cell(p, t, Rprime)
    return InducedModule(p, parabolic_cell_module(p, cell, t), t)

def regular_module(n, t):
    """ the right regular module, induced from the trivial subgroup """
    return induce(ParabolicData.trivial(n), [Permutation.identity(n)], t)

def permutation_induced(p, t):
    return induce(p, [p.longest()], t)

def sign_induced(p, t):
    return induce(p, [Permutation.identity(p.n)], t)

def ind_bar(m, vec):
    """ the bar involution on a dense coefficient vector """
    rows = m.bar_rows()
    out = [ZERO] * m.dim
    for i, c in enumerate(vec):
        if c:
            cb = c.bar()
            for j, a in rows[i].items():
                out[j] = out[j] + cb * a
    return out

def kl_elements(m):
    """ the KL elements as a lower unitriangular matrix; row i is ⊡_i over the Δ basis

    :raises TriangularityViolation: when bar or the construction leaves the length order
    """
    d = m.dim
    K = mat_zero(d, d)
    for i, row in enumerate(m.kl_rows()):
        for j, c in row.items():
            K[i][j] = c
    return K

def ind_form(m):
    """ the Gram matrix of the invariant form on the Δ basis

    (Δ_{x,w}, Δ_{y,w'}) is the cell module form at (x, y) when w = w', else 0.
    """
    G = m.cell_module.form()
    d = m.dim
    out = mat_zero(d, d)
    by_w = {}
    for i, b in enumerate(m.basis):
        by_w.setdefault(b.w, []).append(i)
    for members in by_w.values():
        for i in members:
            a = m._cellpos[m.basis[i].x]
            for j in members:
                out[i][j] = G[a][m._cellpos[m.basis[j].x]]
    return out

class FourBases(object):
    """ the KL standard basis, the KL basis and their duals under the form

    Every basis is a matrix whose row i expresses its i-th element over Δ.
    The duals are computed on first use.
    """
    def __init__(self, module, kl):
        super(FourBases, self).__init__()
        self.module = module
        self.kl = kl
        self._dual_kl_s = None
        self._dual_kl = None

    @property
    def kl_s(self):
        return mat_identity(self.module.dim)

    @property
    def dual_kl_s(self):
        """ G^-1, inverted one coset block at a time """
        if self._dual_kl_s is None:
            m = self.module
            inv = rf_invert_matrix(m.cell_module.form())
            zero = RationalFunction(0)
            d = m.dim
            out = [[zero] * d for _ in range(d)]
            for i, a in enumerate(m.basis):
                for j, b in enumerate(m.basis):
                    if a.w == b.w:
                        out[i][j] = inv[m._cellpos[a.x]][m._cellpos[b.x]]
            self._dual_kl_s = out
        return self._dual_kl_s

    @property
    def dual_kl(self):
        """ (G^-1 K^-1)^T """
        if self._dual_kl is None:
            Ginv = self.dual_kl_s
            Kinv = unitriangular_inverse(self.kl)
            d = self.module.dim
            zero = RationalFunction(0)
            prod = []
            for i in range(d):
                terms = [(k, g) for k, g in enumerate(Ginv[i]) if g]
                row = []
                for j in range(d):
                    acc = zero
                    for k, g in terms:
                        x = Kinv[k][j]
                        if x:
                            acc = acc + g * x
                    row.append(acc)
                prod.append(row)
            self._dual_kl = mat_transpose(prod)
        return self._dual_kl

    def dual_is_laurent(self):
        return all(x.is_laurent() for row in self.dual_kl for x in row)

    def pairing(self):
        """ the matrix (⊡_i, dual_kl_j); the identity for a correct dual basis """
        G = self.module.form()
        K = self.kl
        Y = self.dual_kl
        d = self.module.dim
        KG = [[sum((K[i][k] * G[k][j] for k in range(d) if K[i][k] and G[k][j]), ZERO)
            for j in range(d)] for i in range(d)]
        zero = RationalFunction(0)
        out = []
        for i in range(d):
            row = []
            for j in range(d):
                acc = zero
                for k in range(d):
                    a = KG[i][k]
                    if a and Y[j][k]:
                        acc = acc + Y[j][k] * a
                row.append(acc)
            out.append(row)
        return out

def four_bases(m):
    return FourBases(m, kl_elements(m))

def kl_action(fb, s):
    """ the matrices of H̲_s on the KL basis and on the dual KL basis

    the dual action is the transpose of the KL action
    """
    m = fb.module
    d = m.dim
    A = mat_zero(d, d)
    for i, row in enumerate(kl_action_rows(m, s)):
        for j, c in row.items():
            A[i][j] = c
    return A, mat_transpose(A)

def kl_action_rows(m, s):
    """ the action of H̲_s on the KL basis as sparse rows, cached on the module """
    rows = m._kl_action.get(s)
    if rows is None:
        rows = [m.kl_coordinates(m.act_sparse(row, s)) for row in m.kl_rows()]
        m._kl_action[s] = rows
    return rows

def induced_iso(m1, m2):
    """ an invertible intertwiner between two induced modules, or None """
    return solve_intertwiner(m1, m2)
