#! cd .. && python3 -m heckecells.hecke

"""
# The Hecke algebra of Sn

Elements are stored in the standard basis {H_w}, keyed by the index of w in
`SymmetricGroup(n)`. The quadratic relation is

    H_s^2 = H_e + (v^-1 - v) H_s

and the Kazhdan-Lusztig generators are H̲_s = H_s + v H_e. In this
normalization the KL polynomials h_{y,x} lie in vZ[v] for y < x.

The KL table is built one element at a time in (length, lexicographic)
order. For x with smallest right descent s and x' = xs,

    H̲_x = H̲_{x'} H̲_s - sum of mu(z, x') H̲_z over z < x' with zs < z

so every column only needs shorter columns and the mu values among them.
"""

from functools import lru_cache

from .laurent import LaurentPoly, ZERO, ONE, V, VINV, VINV_MINUS_V, V_MINUS_VINV
from .symgroup import Permutation, SizeMismatch, symmetric_group
from .logger import ScopedLogger

class HeckeElt(object):
    """ an element of the Hecke algebra in the standard basis

    :param n: the rank
    :param terms: mapping from element index to a nonzero LaurentPoly
    """
    __slots__ = ('n', 'terms')

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {i: c for i, c in (terms or {}).items() if c}

    @staticmethod
    def fromDict(n, support):
        """ build from a mapping Permutation -> LaurentPoly """
        G = symmetric_group(n)
        terms = {}
        for w, c in support.items():
            if w.n != n:
                raise SizeMismatch("S%d element in H(S%d)" % (w.n, n))
            if not isinstance(c, LaurentPoly):
                c = LaurentPoly.constant(c)
            terms[G.index[w]] = c
        return HeckeElt(n, terms)

    @staticmethod
    def standard(w):
        """ H_w """
        G = symmetric_group(w.n)
        return HeckeElt(w.n, {G.index[w]: ONE})

    @staticmethod
    def kl_simple(n, s):
        """ H̲_s = H_s + v H_e """
        G = symmetric_group(n)
        return HeckeElt(n, {G.index[Permutation.simple(n, s)]: ONE, 0: V})

    @staticmethod
    def zero(n):
        return HeckeElt(n)

    @staticmethod
    def one(n):
        return HeckeElt(n, {0: ONE})

    def support(self):
        """ the coefficients keyed by Permutation """
        G = symmetric_group(self.n)
        return {G.elements[i]: c for i, c in self.terms.items()}

    def coefficient(self, w):
        return self.terms.get(symmetric_group(self.n).index[w], ZERO)

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if self.n != other.n:
            raise SizeMismatch("H(S%d) and H(S%d)" % (self.n, other.n))

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for i, c in other.terms.items():
            terms[i] = terms.get(i, ZERO) + c
        return HeckeElt(self.n, terms)

    def __neg__(self):
        return HeckeElt(self.n, {i: -c for i, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not isinstance(c, LaurentPoly):
            c = LaurentPoly.constant(c)
        return HeckeElt(self.n, {i: c * x for i, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElt):
            return h_mul(self, other)
        if isinstance(other, (LaurentPoly, int)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (LaurentPoly, int)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, HeckeElt):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self):
        G = symmetric_group(self.n)
        if not self.terms:
            return "HeckeElt(0)"
        parts = ["(%s)H_%s" % (self.terms[i], G.elements[i]) for i in sorted(self.terms)]
        return "HeckeElt(%s)" % " + ".join(parts)

def _accumulate(terms, i, c):
    x = terms.get(i)
    terms[i] = c if x is None else x + c

def h_right_simple(a, s):
    """ a * H_s """
    G = symmetric_group(a.n)
    terms = {}
    for y, c in a.terms.items():
        ys = G.rmul[y][s - 1]
        _accumulate(terms, ys, c)
        if s in G.right_descents[y]:
            _accumulate(terms, y, c * VINV_MINUS_V)
    return HeckeElt(a.n, terms)

def h_left_simple(s, a):
    """ H_s * a """
    G = symmetric_group(a.n)
    terms = {}
    for y, c in a.terms.items():
        sy = G.lmul[y][s - 1]
        _accumulate(terms, sy, c)
        if s in G.left_descents[y]:
            _accumulate(terms, y, c * VINV_MINUS_V)
    return HeckeElt(a.n, terms)

def h_right_kl_simple(a, s):
    """ a * H̲_s """
    G = symmetric_group(a.n)
    terms = {}
    for y, c in a.terms.items():
        _accumulate(terms, G.rmul[y][s - 1], c)
        if s in G.right_descents[y]:
            _accumulate(terms, y, c.shift(-1))
        else:
            _accumulate(terms, y, c.shift(1))
    return HeckeElt(a.n, terms)

def h_mul(a, b):
    """ the product a * b, right multiplying a by generators along reduced words """
    a._check(b)
    G = symmetric_group(a.n)
    result = HeckeElt(a.n)
    for x, c in b.terms.items():
        prod = a
        for s in G.elements[x].reduced_word():
            prod = h_right_simple(prod, s)
        result = result + prod.scale(c)
    return result

@lru_cache(maxsize=None)
def _bar_standard(n, x):
    G = symmetric_group(n)
    if x == 0:
        return HeckeElt(n, {0: ONE})
    word = G.elements[x].reduced_word()
    s = word[-1]
    prev = _bar_standard(n, G.rmul[x][s - 1])
    # bar(H_s) = H_s + (v - v^-1) H_e
    return h_right_simple(prev, s) + prev.scale(V_MINUS_VINV)

def bar_standard(w):
    """ bar(H_w) in the standard basis """
    return _bar_standard(w.n, symmetric_group(w.n).index[w])

def h_bar(a):
    """ the bar involution: v -> v^-1 and H_w -> H_{w^-1}^-1 """
    result = HeckeElt(a.n)
    for x, c in a.terms.items():
        result = result + _bar_standard(a.n, x).scale(c.bar())
    return result

def h_sigma(a):
    """ the anti-automorphism H_w -> H_{w^-1} """
    G = symmetric_group(a.n)
    return HeckeElt(a.n, {G.inverse[x]: c for x, c in a.terms.items()})

class KLTable(object):
    """ the Kazhdan-Lusztig polynomials h_{y,x} of Sn

    `columns[x]` maps the index of y to h_{y,x} for every y with nonzero
    polynomial, including y = x. The table is frozen after construction.
    """
    def __init__(self, n, columns):
        super(KLTable, self).__init__()
        self.n = n
        self.group = symmetric_group(n)
        self.columns = columns
        self._mu_pairs = None

    @staticmethod
    def build(n):
        log = ScopedLogger("S%d" % n)
        G = symmetric_group(n)
        table = KLTable(n, [None] * len(G))
        table.columns[0] = {0: ONE}
        layer = 0
        for x in range(1, len(G)):
            if G.lengths[x] != layer:
                layer = G.lengths[x]
                log.debug("building KL columns of length %d", layer)
            table.columns[x] = table.compute_column(x)
            log.trace("column %s has %d entries", G.elements[x], len(table.columns[x]))
        return table

    def compute_column(self, x):
        """ H̲_x from the shorter columns of this table """
        G = self.group
        s = min(G.right_descents[x])
        xp = G.rmul[x][s - 1]
        col = {}
        for y, c in self.columns[xp].items():
            _accumulate(col, G.rmul[y][s - 1], c)
            if s in G.right_descents[y]:
                _accumulate(col, y, c.shift(-1))
            else:
                _accumulate(col, y, c.shift(1))
        for z, h in self.columns[xp].items():
            if z == xp or s not in G.right_descents[z]:
                continue
            mu = h.coefficient(1)
            if mu:
                for y, c in self.columns[z].items():
                    _accumulate(col, y, c * (-mu))
        return {y: c for y, c in col.items() if c}

    def h_index(self, y, x):
        return self.columns[x].get(y, ZERO)

    def h(self, y, x):
        """ h_{y,x} for permutations y and x """
        G = self.group
        return self.h_index(G.index[y], G.index[x])

    def mu_index(self, a, b):
        c = self.columns[b].get(a)
        if c is None:
            c = self.columns[a].get(b)
        if c is None:
            return 0
        return c.coefficient(1)

    def mu(self, x, y):
        """ the symmetric mu function: coefficient of v in h_{x,y} or h_{y,x} """
        G = self.group
        return self.mu_index(G.index[x], G.index[y])

    def mu_pairs(self):
        """ all (y, x, mu) with y < x and mu(y, x) != 0, as indices """
        if self._mu_pairs is None:
            pairs = []
            for x, col in enumerate(self.columns):
                for y in sorted(col):
                    if y != x:
                        m = col[y].coefficient(1)
                        if m:
                            pairs.append((y, x, m))
            self._mu_pairs = pairs
        return self._mu_pairs

    def pairs(self):
        """ (y, x, h_{y,x}) for every nonzero polynomial, x in table order then y """
        G = self.group
        for x, col in enumerate(self.columns):
            for y in sorted(col):
                yield G.elements[y], G.elements[x], col[y]

    def kl_element(self, x):
        """ H̲_x in the standard basis """
        return HeckeElt(self.n, self.columns[self.group.index[x]])

    def kl_element_index(self, x):
        return HeckeElt(self.n, self.columns[x])

    def __eq__(self, other):
        if not isinstance(other, KLTable):
            return NotImplemented
        return self.n == other.n and self.columns == other.columns

    def __repr__(self):
        return "KLTable(n=%d)" % self.n

_tables = {}

def kl_table(n, cache=None):
    """ the KL table of Sn, shared between callers

    :param cache: an optional store with `load(n)` and `save(table)`;
        a stored table is used when present, otherwise the computed table is saved
    """
    if n < 1:
        raise ValueError("n must be positive: %d" % n)
    table = _tables.get(n)
    if table is not None:
        if cache is not None and not cache.exists(n):
            cache.save(table)
        return table
    if cache is not None:
        table = cache.load(n)
    if table is None:
        table = KLTable.build(n)
        if cache is not None:
            cache.save(table)
    _tables[n] = table
    return table

def to_kl(a, t):
    """ coordinates of a in the KL basis, keyed by Permutation """
    G = t.group
    rest = dict(a.terms)
    coords = {}
    while rest:
        x = max(rest)
        c = rest.pop(x)
        coords[G.elements[x]] = c
        for y, h in t.columns[x].items():
            if y != x:
                _accumulate(rest, y, -(c * h))
                if not rest[y]:
                    del rest[y]
    return coords

def from_kl(coords, t):
    """ the standard basis element with the given KL coordinates """
    G = t.group
    terms = {}
    for x, c in coords.items():
        for y, h in t.columns[G.index[x]].items():
            _accumulate(terms, y, c * h)
    return HeckeElt(t.n, terms)

def kl_basis_element(x, t):
    return t.kl_element(x)

def kl_product(w, x, t):
    """ structure constants of H̲_w H̲_x in the KL basis """
    return to_kl(h_mul(t.kl_element(w), t.kl_element(x)), t)
