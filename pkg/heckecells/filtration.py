#! cd .. && python3 -m heckecells.filtration

"""
# Gelfand-Kirillov and dominance filtrations

The dual KL element of an induced module at (x, w) is assigned the RSK shape
mu of xw and the Gelfand-Kirillov dimension

    GKdim = (n(n-1) - sum mu_i(mu_i - 1)) / 2 = (n^2 - sum mu_i^2) / 2

For increasing GKdim thresholds, Q_i is the span of the dual KL elements of
GKdim at most the i-th threshold. Every Q_i must be closed under the action,
otherwise `NotSubmodule` is raised. Each layer Q_i / Q_{i-1} is specialized
at v = 1 and its character decomposed into Specht modules; the layer whose
elements have RSK shape mu carries labels with transpose mu.

The dominance filtration strips the dominance maximal shapes first. Since
mu < nu in dominance forces sum mu_i^2 < sum nu_i^2, both filtrations run in
the same direction; they coincide for n <= 6 and first differ at n = 7, where
(5,1,1) and (4,3) are incomparable but have square sums 27 and 25.
"""

import itertools
from typing import List, Dict

from .symgroup import Partition, partitions, dominance_leq, rsk_shape, class_word
from .action import decompose_character
from .induced import kl_action_rows
from .serializable import Serializable
from .logger import ScopedLogger

class NotSubmodule(Exception):
    pass

class GKStatistic(object):
    """ the square sum of the RSK shape of a permutation """
    __slots__ = ('value', 'shape')

    def __init__(self, value, shape):
        self.value = value
        self.shape = shape

    @property
    def gkdim(self):
        n = self.shape.n
        return (n * n - self.value) // 2

    def __eq__(self, other):
        if not isinstance(other, GKStatistic):
            return NotImplemented
        return self.value == other.value and self.shape == other.shape

    def __hash__(self):
        return hash((self.value, self.shape))

    def __repr__(self):
        return "GKStatistic(%d, %s)" % (self.value, self.shape)

def gk_statistic(w):
    shape = rsk_shape(w)
    return GKStatistic(shape.square_sum(), shape)

class FiltrationLayer(Serializable):
    gkdim: int = 0
    shapes: List[Partition] = None
    members: List[int] = None
    specht: Dict[Partition, int] = None

    def labels(self):
        return sorted(self.specht, reverse=True)

    def labels_incomparable(self):
        """ no two Specht labels of the layer are comparable in dominance """
        return not any(dominance_leq(a, b) or dominance_leq(b, a)
            for a, b in itertools.combinations(self.labels(), 2))

class Filtration(object):
    """ a filtration of a module by layers

    :param module: the filtered module
    :param layers: FiltrationLayer records, bottom layer first
    """
    def __init__(self, module, layers):
        super(Filtration, self).__init__()
        self.module = module
        self.layers = layers

    @property
    def thresholds(self):
        return [layer.gkdim for layer in self.layers]

    def shape_layers(self):
        return [sorted(layer.shapes, reverse=True) for layer in self.layers]

    def total(self):
        """ the Specht multiplicities summed over all layers """
        out = {}
        for layer in self.layers:
            for lam, k in layer.specht.items():
                out[lam] = out.get(lam, 0) + k
        return out

    def __repr__(self):
        return "Filtration(%s)" % ", ".join(
            "%d:%s" % (l.gkdim, [str(s) for s in l.shapes]) for l in self.layers)

def _dual_group_rows(m):
    # H_s = H̲_s - 1 at v = 1 on the dual KL basis, whose action is the transpose
    out = {}
    d = m.dim
    for s in range(1, m.n):
        rows = [dict() for _ in range(d)]
        for i, row in enumerate(kl_action_rows(m, s)):
            for j, c in row.items():
                rows[j][i] = c
        out[s] = rows
    return out

def _ones(rows):
    out = []
    for k, row in enumerate(rows):
        r = {}
        for j, c in row.items():
            x = c.eval_one()
            if x:
                r[j] = x
        r[k] = r.get(k, 0) - 1
        if not r[k]:
            del r[k]
        out.append(r)
    return out

def block_character(n, rows_by_s, members):
    """ the v = 1 character of the action restricted to a block of basis elements

    :param rows_by_s: mapping s -> integer sparse rows of the group generator
    """
    inside = set(members)
    table = {}
    for ct in partitions(n):
        word = class_word(ct)
        total = 0
        for i in members:
            vec = {i: 1}
            for s in word:
                rows = rows_by_s[s]
                out = {}
                for k, c in vec.items():
                    for j, x in rows[k].items():
                        if j in inside:
                            out[j] = out.get(j, 0) + c * x
                vec = {j: x for j, x in out.items() if x}
            total += vec.get(i, 0)
        table[ct] = total
    return table

def gk_filtration(m):
    """ the Gelfand-Kirillov filtration of an induced module

    :raises NotSubmodule: when some Q_i is not closed under the action
    """
    log = ScopedLogger("S%d" % m.n)
    stats = [gk_statistic(b.product()) for b in m.basis]
    dims = [st.gkdim for st in stats]
    dual = _dual_group_rows(m)
    for s, rows in dual.items():
        for i, row in enumerate(rows):
            for j in row:
                if dims[j] > dims[i]:
                    log.error("dual KL %r * H̲_%d reaches %r", m.basis[i], s, m.basis[j])
                    raise NotSubmodule("GKdim %d element %r maps to GKdim %d element %r under s%d"
                        % (dims[i], m.basis[i], dims[j], m.basis[j], s))
    ones = {s: _ones(rows) for s, rows in dual.items()}
    layers = []
    for k in sorted(set(dims)):
        members = [i for i, d in enumerate(dims) if d == k]
        shapes = sorted({stats[i].shape for i in members}, reverse=True)
        specht = decompose_character(m.n, block_character(m.n, ones, members))
        log.debug("layer GKdim %d: %d elements, shapes %s", k, len(members),
            [str(s) for s in shapes])
        layers.append(FiltrationLayer(gkdim=k, shapes=shapes, members=members, specht=specht))
    return Filtration(m, layers)

def dominance_layers(shapes):
    """ strip the dominance maximal shapes, repeatedly """
    remaining = sorted(set(shapes), reverse=True)
    layers = []
    while remaining:
        top = [a for a in remaining
            if not any(b != a and dominance_leq(a, b) for b in remaining)]
        layers.append(top)
        remaining = [a for a in remaining if a not in top]
    return layers

def gk_layers(shapes):
    """ group shapes by square sum, largest first """
    groups = {}
    for a in set(shapes):
        groups.setdefault(a.square_sum(), []).append(a)
    return [sorted(groups[k], reverse=True) for k in sorted(groups, reverse=True)]

def dominance_filtration(m):
    """ the dominance order filtration of an induced module

    Dual KL elements are grouped by the RSK shape of xw. Layers take the
    dominance maximal shapes first, and the span of every initial run of
    layers must be closed under the action.

    :raises NotSubmodule: when some initial span is not closed
    """
    n = m.n
    log = ScopedLogger("S%d" % n)
    shapes = [rsk_shape(b.product()) for b in m.basis]
    grouped = dominance_layers(shapes)
    level = {lam: k for k, top in enumerate(grouped) for lam in top}
    dual = _dual_group_rows(m)
    for s, rows in dual.items():
        for i, row in enumerate(rows):
            for j in row:
                if level[shapes[j]] > level[shapes[i]]:
                    log.error("dual KL %r * H̲_%d reaches %r", m.basis[i], s, m.basis[j])
                    raise NotSubmodule("shape %s element %r maps to shape %s element %r under s%d"
                        % (shapes[i], m.basis[i], shapes[j], m.basis[j], s))
    ones = {s: _ones(rows) for s, rows in dual.items()}
    layers = []
    for k, top in enumerate(grouped):
        members = [i for i, lam in enumerate(shapes) if level[lam] == k]
        specht = decompose_character(n, block_character(n, ones, members))
        gkdim = min((n * n - lam.square_sum()) // 2 for lam in top)
        layers.append(FiltrationLayer(gkdim=gkdim, shapes=top, members=members, specht=specht))
    return Filtration(m, layers)

def compare_filtrations(gk, dom):
    """ the two filtrations have the same layers: members, shapes and Specht labels """
    if len(gk.layers) != len(dom.layers):
        return False
    for a, b in zip(gk.layers, dom.layers):
        if sorted(a.members) != sorted(b.members):
            return False
        if sorted(a.shapes) != sorted(b.shapes) or a.specht != b.specht:
            return False
    return True

def square_counterexample(n):
    """ the first mu < nu in dominance with sum mu_i^2 >= sum nu_i^2, or None """
    parts = partitions(n)
    for mu, nu in itertools.permutations(parts, 2):
        if dominance_leq(mu, nu) and mu.square_sum() >= nu.square_sum():
            return mu, nu
    return None

def dominance_implies_squares(n):
    """ mu < nu in dominance forces sum mu_i^2 < sum nu_i^2, checked over all partitions of n """
    if n < 1:
        raise ValueError("n must be positive: %d" % n)
    return square_counterexample(n) is None

class SplitLayer(Serializable):
    shapes: List[Partition] = None
    statistics: List[int] = None

def dominance_vs_gk(n):
    """ the dominance layers of the regular module that the square statistic splits """
    out = []
    for layer in dominance_layers(partitions(n)):
        values = [a.square_sum() for a in layer]
        if len(set(values)) > 1:
            out.append(SplitLayer(shapes=layer, statistics=values))
    return out
