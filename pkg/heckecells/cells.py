#! cd .. && python3 -m heckecells.cells

"""
# Cells

Left, right and two-sided cells of Sn from the mu-graph of a KL table.

There is a left edge x -> y when mu(x, y) != 0 and some left descent of x is
not a left descent of y; an edge x -> y means x >=_L y, so e is the minimum
and w0 the maximum of each order. Right edges are the left edges of the
inverses. Cells are the strongly connected components, two-sided cells those
of the union of both edge sets.

For a right cell R, `down_set(R)` is {w : w <=_R x for some x in R}, the
elements reachable from R along right edges.
"""

from .symgroup import Permutation, rsk, sort_key, symmetric_group
from .hecke import kl_table
from .logger import hklogger

INSERTION = "P"
RECORDING = "Q"

class ConventionMismatch(Exception):
    pass

class NotACell(Exception):
    pass

class Tarjan(object):
    """ strongly connected components of a graph { vertex : successors }

    iterative, so deep graphs do not hit the recursion limit
    """
    def __init__(self, graph):
        self._graph = graph
        self._stack = []
        self._stack_set = set()
        self._index = {}
        self._lowlink = {}
        self._nonrecursive_stack = []
        self._result = []

    def _tarjan_head(self, v):
        self._index[v] = len(self._index)
        self._lowlink[v] = self._index[v]
        self._stack.append(v)
        self._stack_set.add(v)
        it = iter(sorted(self._graph.get(v, ())))
        self._nonrecursive_stack.append((it, False, v, None))

    def _tarjan_body(self, it, v):
        for w in it:
            if w not in self._index:
                self._nonrecursive_stack.append((it, True, v, w))
                self._tarjan_head(w)
                return
            if w in self._stack_set:
                self._lowlink[v] = min(self._lowlink[v], self._index[w])
        if self._lowlink[v] == self._index[v]:
            scc = []
            w = None
            while v != w:
                w = self._stack.pop()
                scc.append(w)
                self._stack_set.remove(w)
            self._result.append(scc)

    def calculateScc(self):
        for v in sorted(self._graph):
            if v not in self._index:
                self._tarjan_head(v)
            while self._nonrecursive_stack:
                it, inside, u, w = self._nonrecursive_stack.pop()
                if inside:
                    self._lowlink[u] = min(self._lowlink[w], self._lowlink[u])
                self._tarjan_body(it, u)
        return self._result

def _components(graph):
    # components as sorted index lists, ordered by their first element
    return sorted((sorted(scc) for scc in Tarjan(graph).calculateScc()), key=lambda c: c[0])

class CellDecomposition(object):
    """ the cells of Sn together with the right order between right cells

    Cells are lists of Permutation in (length, lexicographic) order; lists of
    cells are ordered by their first element.
    """
    def __init__(self, n, left, right, two_sided, left_graph=None, right_graph=None):
        super(CellDecomposition, self).__init__()
        self.n = n
        self.group = symmetric_group(n)
        G = self.group
        self._left = left
        self._right = right
        self._two = two_sided
        self.left_cells = [[G.elements[i] for i in c] for c in left]
        self.right_cells = [[G.elements[i] for i in c] for c in right]
        self.two_sided_cells = [[G.elements[i] for i in c] for c in two_sided]
        self.left_of = self._owner(left)
        self.right_of = self._owner(right)
        self.two_of = self._owner(two_sided)
        self.left_graph = left_graph
        self.right_graph = right_graph
        self.right_order = None
        self._reach = None
        if right_graph is not None:
            self._buildOrder()

    def _owner(self, cells):
        owner = [0] * len(self.group)
        for k, c in enumerate(cells):
            for i in c:
                owner[i] = k
        return owner

    def _buildOrder(self):
        # edges between right cells, pointing down the order
        order = [set() for _ in self._right]
        for x, targets in self.right_graph.items():
            a = self.right_of[x]
            for y in targets:
                b = self.right_of[y]
                if a != b:
                    order[a].add(b)
        self.right_order = [sorted(o) for o in order]
        reach = []
        for k in range(len(self._right)):
            seen = {k}
            todo = [k]
            while todo:
                a = todo.pop()
                for b in self.right_order[a]:
                    if b not in seen:
                        seen.add(b)
                        todo.append(b)
            reach.append(seen)
        self._reach = reach

    def has_order(self):
        return self.right_order is not None

    def right_cell_index(self, w):
        return self.right_of[self.group.index[w]]

    def cell_of(self, w):
        """ the right cell containing w """
        return self.right_cells[self.right_cell_index(w)]

    def left_cell_of(self, w):
        return self.left_cells[self.left_of[self.group.index[w]]]

    def two_sided_cell_of(self, w):
        return self.two_sided_cells[self.two_of[self.group.index[w]]]

    def same_two_sided(self, x, y):
        G = self.group
        return self.two_of[G.index[x]] == self.two_of[G.index[y]]

    def right_leq_index(self, x, y):
        return self.right_of[x] in self._reach[self.right_of[y]]

    def down_set(self, cell):
        """ {w : w <=_R x for some x in the cell}, sorted """
        G = self.group
        k = self.right_cell_index(cell[0])
        members = []
        for b in self._reach[k]:
            members.extend(self._right[b])
        return [G.elements[i] for i in sorted(members)]

    def up_set_index(self, cell):
        """ indices of {w : w >=_R x for some x in the cell} """
        k = self.right_cell_index(cell[0])
        return sorted(i for i in range(len(self.group)) if k in self._reach[self.right_of[i]])

    def __repr__(self):
        return "CellDecomposition(n=%d, %d right cells)" % (self.n, len(self.right_cells))

def left_edges(t):
    """ the left mu-graph { x : {y : x -> y} } on element indices """
    G = t.group
    graph = {i: set() for i in range(len(G))}
    for y, x, m in t.mu_pairs():
        if G.left_descents[x] - G.left_descents[y]:
            graph[x].add(y)
        if G.left_descents[y] - G.left_descents[x]:
            graph[y].add(x)
    return graph

def compute_cells(t):
    """ left, right and two-sided cells of the group of the table """
    G = t.group
    left_graph = left_edges(t)
    right_graph = {G.inverse[x]: {G.inverse[y] for y in ys} for x, ys in left_graph.items()}
    left = _components(left_graph)
    right = sorted((sorted(G.inverse[i] for i in c) for c in left), key=lambda c: c[0])
    joint = {i: left_graph[i] | right_graph[i] for i in range(len(G))}
    two_sided = _components(joint)
    hklogger.debug("S%d: %d left cells, %d two-sided cells", t.n, len(left), len(two_sided))
    return CellDecomposition(t.n, left, right, two_sided, left_graph, right_graph)

def right_leq(x, y, c):
    """ x <=_R y: y reaches x along right edges """
    G = c.group
    return c.right_leq_index(G.index[x], G.index[y])

def left_leq(x, y, c):
    """ x <=_L y, read through inverses from the right order """
    G = c.group
    return c.right_leq_index(G.inverse[G.index[x]], G.inverse[G.index[y]])

def two_sided_shape(cell):
    """ the RSK shape shared by the elements of a cell """
    return rsk(cell[0])[0].shape()

def _group_by(n, key):
    G = symmetric_group(n)
    groups = {}
    for i, w in enumerate(G.elements):
        groups.setdefault(key(w), []).append(i)
    return sorted(groups.values(), key=lambda c: c[0])

def _tableau_cells(n, convention):
    right_key = (lambda w: rsk(w)[0]) if convention == INSERTION else (lambda w: rsk(w)[1])
    left_key = (lambda w: rsk(w)[1]) if convention == INSERTION else (lambda w: rsk(w)[0])
    right = _group_by(n, right_key)
    left = _group_by(n, left_key)
    two_sided = _group_by(n, lambda w: rsk(w)[0].shape())
    return left, right, two_sided

_convention = {}

def rsk_convention():
    """ the tableau that is constant on right cells, fixed from the mu-graph of S4 """
    if "tableau" not in _convention:
        _convention["tableau"] = _matching_convention(4)
        hklogger.info("right cells have constant %s tableau", _convention["tableau"])
    return _convention["tableau"]

def _matching_convention(n):
    c = compute_cells(kl_table(n))
    for convention in (INSERTION, RECORDING):
        left, right, two_sided = _tableau_cells(n, convention)
        if right == c._right and left == c._left and two_sided == c._two:
            return convention
    raise ConventionMismatch("S%d: neither RSK tableau reproduces the mu-graph cells" % n)

def cells_via_rsk(n):
    """ cells of Sn grouped by RSK tableaux

    for n <= 5 the grouping is checked against the mu-graph cells.

    :raises ConventionMismatch: when the recorded tableau does not reproduce them
    """
    convention = rsk_convention()
    left, right, two_sided = _tableau_cells(n, convention)
    if n <= 5:
        c = compute_cells(kl_table(n))
        if right != c._right or left != c._left or two_sided != c._two:
            raise ConventionMismatch("S%d: grouping by %s tableau differs from the mu-graph cells"
                % (n, convention))
    return CellDecomposition(n, left, right, two_sided)

def parabolic_right_cells(p, t):
    """ right cells of W' from the mu-graph restricted to W'

    :returns: lists of Permutation in (length, lexicographic) order
    """
    G = t.group
    members = [G.index[u] for u in p.subgroup_elements()]
    inside = set(members)
    graph = {i: set() for i in members}
    for y, x, m in t.mu_pairs():
        if x in inside and y in inside:
            if G.right_descents[x] - G.right_descents[y]:
                graph[x].add(y)
            if G.right_descents[y] - G.right_descents[x]:
                graph[y].add(x)
    return [[G.elements[i] for i in c] for c in _components(graph)]

def parabolic_cell_of(p, t, u):
    """ the right cell of W' containing u """
    if not p.contains(u):
        raise NotACell("%s is not in W' = %s" % (u, p))
    for cell in parabolic_right_cells(p, t):
        if u in cell:
            return cell

def check_parabolic_cell(p, t, cell):
    """ :raises NotACell: unless the given elements form a right cell of W' """
    target = sorted(cell, key=sort_key)
    for c in parabolic_right_cells(p, t):
        if c == target:
            return c
    raise NotACell("%s is not a right cell of %s" % ([str(w) for w in cell], p))

def _weight_to_permutation(weight):
    # stable ascending rank, then x^-1(i) = k - rank(i)
    k = len(weight)
    order = sorted(range(k), key=lambda i: (weight[i], i))
    rank = [0] * k
    for r, i in enumerate(order):
        rank[i] = r
    return Permutation([k - r for r in rank]).inverse()

def singular_pair(r):
    """ the permutations x_nu and x_mu attached to a partition r of k

    nu concatenates the runs (r_j - 1, ..., 1, 0); mu + rho is nu sorted
    decreasingly. Each weight becomes a permutation by ranking its entries,
    equal entries ranked by position.
    """
    if r.n < 2:
        raise ValueError("singular_pair needs k >= 2, got %d" % r.n)
    nu = []
    for part in r:
        nu.extend(range(part - 1, -1, -1))
    mu_rho = sorted(nu, reverse=True)
    return _weight_to_permutation(nu), _weight_to_permutation(mu_rho)
