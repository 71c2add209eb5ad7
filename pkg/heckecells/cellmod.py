#! cd .. && python3 -m heckecells.cellmod

"""
# Right cell modules

For a right cell R the cell module S(R) has basis C_x, the image of H̲_x,
for x in R in (length, lexicographic) order. H̲_s acts by

    C_x H̲_s = (v + v^-1) C_x                                   if xs < x
    C_x H̲_s = C_xs + sum of mu(y, x) C_y over y < x, ys < y     otherwise

where terms outside R are dropped.

The invariant form G satisfies A G = G A^T for every generator matrix A. It
is unique up to a scalar; `invariant_form` picks the primitive solution with
its first diagonal entry centered on degree 0 and positive leading
coefficient.
"""

from .laurent import LaurentPoly, ZERO, ONE, QTWO, mat_zero, nullspace
from .symgroup import sort_key
from .action import HeckeModule, solve_intertwiner
from .logger import hklogger

class NonUniqueForm(Exception):
    pass

class CellModule(HeckeModule):
    """ the cell module of a right cell

    :param cell: the right cell, any order
    :param table: the KL table of the group
    :param generators: restrict the action to these simple reflections, for
        the cell module of a parabolic subgroup
    """
    def __init__(self, cell, table, generators=None):
        cell = sorted(cell, key=sort_key)
        super(CellModule, self).__init__(table.n, cell, _cell_matrices(cell, table, generators))
        self.cell = cell
        self.table = table
        self._form = None

    def form(self):
        if self._form is None:
            self._form = invariant_form(self)
        return self._form

def _cell_matrices(cell, t, generators=None):
    G = t.group
    idx = [G.index[x] for x in cell]
    pos = {x: i for i, x in enumerate(idx)}
    d = len(cell)
    matrices = {}
    for s in (range(1, t.n) if generators is None else generators):
        M = mat_zero(d, d)
        for i, x in enumerate(idx):
            if s in G.right_descents[x]:
                M[i][i] = QTWO
                continue
            xs = G.rmul[x][s - 1]
            if xs in pos:
                M[i][pos[xs]] = M[i][pos[xs]] + ONE
            for y, h in t.columns[x].items():
                if y != x and y in pos and s in G.right_descents[y]:
                    mu = h.coefficient(1)
                    if mu:
                        M[i][pos[y]] = M[i][pos[y]] + mu
        matrices[s] = M
    return matrices

def cell_module(R, t, c=None):
    """ the cell module of the right cell R

    :param c: an optional cell decomposition; when given, R must be one of its right cells
    """
    if c is not None and sorted(R, key=sort_key) != c.cell_of(R[0]):
        raise ValueError("%s is not a right cell" % [str(w) for w in R])
    return CellModule(R, t)

def parabolic_cell_module(p, R, t):
    """ the cell module of a right cell R of the parabolic subgroup W' of p """
    return CellModule(R, t, generators=p.generators())

def _symmetric_index(d):
    index = {}
    for i in range(d):
        for j in range(i, d):
            index[(i, j)] = len(index)
    return index

def invariant_form(m):
    """ the invariant symmetric form of a module, normalized

    :raises NonUniqueForm: when the invariant forms do not form a line
    """
    d = m.dim
    index = _symmetric_index(d)

    def var(i, j):
        return index[(i, j)] if i <= j else index[(j, i)]

    rows = []
    for s in sorted(m.matrices):
        A = m.matrices[s]
        for i in range(d):
            for j in range(d):
                # (A G)[i][j] - (G A^T)[i][j]
                row = {}
                for k in range(d):
                    a = A[i][k]
                    if a:
                        col = var(k, j)
                        row[col] = row.get(col, ZERO) + a
                    b = A[j][k]
                    if b:
                        col = var(i, k)
                        row[col] = row.get(col, ZERO) - b
                row = {c: x for c, x in row.items() if x}
                if row:
                    rows.append(row)
    basis = nullspace(rows, len(index))
    if len(basis) != 1:
        raise NonUniqueForm("invariant forms of %r span a space of dimension %d" % (m, len(basis)))
    vec = basis[0]
    G = [[vec[var(i, j)] for j in range(d)] for i in range(d)]
    return normalize_form(G)

def normalize_form(G):
    """ rescale G by a unit +-v^k so the anchor entry is centered with positive leading coefficient

    the anchor is G[0][0], or the first nonzero entry when that vanishes.
    Centered means its degrees run from -d to d (or -d to d+1), so an anchor
    of v^2 becomes 1 and 2v^3 + v becomes 2v + v^-1. Every entry gets the same
    unit, so the result is still an invariant form, only with a different
    overall scale. Forms of equal modules compare equal after this step.
    """
    anchor = G[0][0] if G and G[0][0] else next((x for row in G for x in row if x), None)
    if anchor is None:
        return G
    shift = -((anchor.min_deg + anchor.max_deg) // 2)
    sign = 1 if anchor.coeffs[-1] > 0 else -1
    unit = LaurentPoly.monomial(sign, shift)
    return [[x * unit if x else x for x in row] for row in G]

def cell_iso(m1, m2):
    """ an invertible intertwiner between two cell modules, or None """
    F = solve_intertwiner(m1, m2)
    if F is None:
        hklogger.debug("no isomorphism between %r and %r", m1, m2)
    return F
