#! cd .. && python3 -m heckecells.symgroup

"""
# The symmetric group

Permutations of {1..n} in one-line notation, with the Coxeter structure
used throughout heckecells. Products are compositions, (xy)(j) = x(y(j)), so

* `w * s(i)` swaps the entries at positions i and i+1 of w
* `s(i) * w` swaps the values i and i+1 in w

and the simple reflections s1, s2 of S3 multiply to s1s2 = 231.
Generators are numbered from 1.

The module also holds the partition combinatorics: partitions and their
dominance order, standard tableaux, RSK row insertion, Knuth moves, and the
irreducible characters of Sn via the Murnaghan-Nakayama rule.

`SymmetricGroup(n)` indexes all n! permutations, sorted by length and then
lexicographically. The Hecke algebra and KL table code works with these
indices and the precomputed multiplication tables.
"""

import itertools
from functools import lru_cache
from math import factorial

class SizeMismatch(Exception):
    pass

class Permutation(object):
    """ an element of Sn in one-line notation

    :param one_line: the images w(1), ..., w(n)
    """
    __slots__ = ('one_line', '_length')

    def __init__(self, one_line):
        one_line = tuple(int(x) for x in one_line)
        if sorted(one_line) != list(range(1, len(one_line) + 1)):
            raise ValueError("not a permutation of 1..%d: %s" % (len(one_line), list(one_line)))
        self.one_line = one_line
        self._length = None

    @staticmethod
    def _trusted(one_line):
        w = object.__new__(Permutation)
        w.one_line = one_line
        w._length = None
        return w

    @staticmethod
    def identity(n):
        return Permutation._trusted(tuple(range(1, n + 1)))

    @staticmethod
    def longest(n):
        return Permutation._trusted(tuple(range(n, 0, -1)))

    @staticmethod
    def simple(n, i):
        """ the simple reflection s_i = (i, i+1) in Sn """
        if not 1 <= i < n:
            raise ValueError("no generator s%d in S%d" % (i, n))
        w = list(range(1, n + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation._trusted(tuple(w))

    @staticmethod
    def fromWord(n, word):
        """ the product s_{a1} s_{a2} ... s_{ak} """
        w = list(range(1, n + 1))
        for i in word:
            if not 1 <= i < n:
                raise ValueError("no generator s%d in S%d" % (i, n))
            w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation._trusted(tuple(w))

    @staticmethod
    def parse(text):
        """ parse '2,3,1' or '231' """
        text = text.strip()
        if "," in text:
            items = [t for t in text.split(",") if t.strip()]
        else:
            items = list(text)
        try:
            return Permutation(int(t) for t in items)
        except ValueError as e:
            raise ValueError("invalid permutation %r: %s" % (text, e))

    @property
    def n(self):
        return len(self.one_line)

    def __call__(self, j):
        return self.one_line[j - 1]

    def length(self):
        """ the number of inversions """
        if self._length is None:
            w = self.one_line
            n = len(w)
            self._length = sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])
        return self._length

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if self.n != other.n:
            raise SizeMismatch("S%d * S%d" % (self.n, other.n))
        w = self.one_line
        return Permutation._trusted(tuple(w[j - 1] for j in other.one_line))

    def inverse(self):
        inv = [0] * self.n
        for i, x in enumerate(self.one_line):
            inv[x - 1] = i + 1
        return Permutation._trusted(tuple(inv))

    def right_mul_simple(self, i):
        """ w * s_i """
        w = list(self.one_line)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation._trusted(tuple(w))

    def left_mul_simple(self, i):
        """ s_i * w """
        return Permutation._trusted(tuple(
            i + 1 if x == i else i if x == i + 1 else x for x in self.one_line))

    def right_descents(self):
        w = self.one_line
        return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])

    def left_descents(self):
        return self.inverse().right_descents()

    def reduced_word(self):
        """ a reduced word for w, peeling the smallest right descent first """
        word = []
        w = list(self.one_line)
        while True:
            for i in range(1, len(w)):
                if w[i - 1] > w[i]:
                    word.append(i)
                    w[i - 1], w[i] = w[i], w[i - 1]
                    break
            else:
                break
        word.reverse()
        return word

    def cycle_type(self):
        seen = set()
        parts = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            size = 0
            j = start
            while j not in seen:
                seen.add(j)
                j = self.one_line[j - 1]
                size += 1
            parts.append(size)
        return Partition(sorted(parts, reverse=True))

    def sign(self):
        return -1 if self.length() % 2 else 1

    def is_identity(self):
        return all(x == i + 1 for i, x in enumerate(self.one_line))

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.one_line == other.one_line

    def __ne__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.one_line != other.one_line

    def __lt__(self, other):
        return self.one_line < other.one_line

    def __hash__(self):
        return hash(self.one_line)

    def __str__(self):
        if self.n < 10:
            return "".join(str(x) for x in self.one_line)
        return ",".join(str(x) for x in self.one_line)

    def __repr__(self):
        return "Permutation(%s)" % self

    def toJson(self):
        return list(self.one_line)

    @classmethod
    def fromJson(cls, value):
        if isinstance(value, str):
            return cls.parse(value)
        return cls(value)

def sort_key(w):
    """ order by length, then lexicographically by one-line notation """
    return (w.length(), w.one_line)

def descents(w):
    """ (D_L(w), D_R(w)) as sets of generator indices """
    return w.left_descents(), w.right_descents()

def bruhat_leq(x, y):
    """ x <= y in the Bruhat order, by comparing sorted prefixes of the one-line words """
    if x.n != y.n:
        raise SizeMismatch("bruhat_leq on S%d and S%d" % (x.n, y.n))
    if x.length() > y.length():
        return False
    a = x.one_line
    b = y.one_line
    for i in range(1, x.n):
        pa = sorted(a[:i])
        pb = sorted(b[:i])
        if any(p > q for p, q in zip(pa, pb)):
            return False
    return True

class Partition(object):
    """ a weakly decreasing sequence of positive integers """
    __slots__ = ('parts',)

    def __init__(self, parts):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError("partition parts must be positive: %s" % (list(parts),))
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("partition parts must be weakly decreasing: %s" % (list(parts),))
        self.parts = parts

    @staticmethod
    def parse(text):
        return Partition(int(t) for t in text.replace("(", "").replace(")", "").split(",") if t.strip())

    @property
    def n(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def transpose(self):
        if not self.parts:
            return self
        return Partition(sum(1 for p in self.parts if p > j) for j in range(self.parts[0]))

    def square_sum(self):
        return sum(p * p for p in self.parts)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts == other.parts

    def __lt__(self, other):
        return self.parts < other.parts

    def __hash__(self):
        return hash(self.parts)

    def __str__(self):
        return "(%s)" % ",".join(str(p) for p in self.parts)

    def __repr__(self):
        return "Partition%s" % self

    def toJson(self):
        return list(self.parts)

    @classmethod
    def fromJson(cls, value):
        if isinstance(value, str):
            return cls.parse(value)
        return cls(value)

def partitions(n):
    """ all partitions of n in reverse lexicographic order, (n) first """
    def gen(m, largest):
        if m == 0:
            yield ()
            return
        for k in range(min(m, largest), 0, -1):
            for rest in gen(m - k, k):
                yield (k,) + rest
    return [Partition(p) for p in gen(n, n)]

def dominance_leq(mu, nu):
    """ mu is dominated by nu: every prefix sum of mu is at most that of nu """
    if mu.n != nu.n:
        raise SizeMismatch("partitions of %d and %d" % (mu.n, nu.n))
    a = 0
    b = 0
    for i in range(max(len(mu), len(nu))):
        a += mu[i] if i < len(mu) else 0
        b += nu[i] if i < len(nu) else 0
        if a > b:
            return False
    return True

class StandardTableau(object):
    """ a standard Young tableau, rows listed top to bottom """
    __slots__ = ('rows',)

    def __init__(self, rows):
        rows = tuple(tuple(int(x) for x in row) for row in rows if len(row))
        entries = sorted(x for row in rows for x in row)
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError("tableau entries must be 1..n: %s" % (rows,))
        Partition(len(row) for row in rows)
        for row in rows:
            if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
                raise ValueError("rows must increase: %s" % (rows,))
        for i in range(len(rows) - 1):
            if any(rows[i][j] >= rows[i + 1][j] for j in range(len(rows[i + 1]))):
                raise ValueError("columns must increase: %s" % (rows,))
        self.rows = rows

    def shape(self):
        return Partition(len(row) for row in self.rows)

    def __eq__(self, other):
        if not isinstance(other, StandardTableau):
            return NotImplemented
        return self.rows == other.rows

    def __lt__(self, other):
        return self.rows < other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "StandardTableau(%s)" % "/".join(" ".join(str(x) for x in row) for row in self.rows)

    def toJson(self):
        return [list(row) for row in self.rows]

    @classmethod
    def fromJson(cls, value):
        return cls(value)

def rsk(w):
    """ Robinson-Schensted row insertion of w(1), ..., w(n)

    :returns: (P, Q), the insertion and the recording tableau
    """
    P = []
    Q = []
    for pos, x in enumerate(w.one_line, 1):
        row = 0
        while True:
            if row == len(P):
                P.append([x])
                Q.append([pos])
                break
            r = P[row]
            # first entry larger than x
            j = next((j for j, y in enumerate(r) if y > x), None)
            if j is None:
                r.append(x)
                Q[row].append(pos)
                break
            r[j], x = x, r[j]
            row += 1
    return StandardTableau(P), StandardTableau(Q)

def rsk_shape(w):
    return rsk(w)[0].shape()

def knuth_neighbors(w):
    """ permutations one elementary Knuth move away from w

    yxz <-> yzx and xzy <-> zxy on adjacent windows, x < y < z.
    """
    a = w.one_line
    out = set()
    for i in range(len(a) - 2):
        x, y, z = a[i], a[i + 1], a[i + 2]
        if min(y, z) < x < max(y, z):
            b = list(a)
            b[i + 1], b[i + 2] = z, y
            out.add(Permutation._trusted(tuple(b)))
        if min(x, y) < z < max(x, y):
            b = list(a)
            b[i], b[i + 1] = y, x
            out.add(Permutation._trusted(tuple(b)))
    return sorted(out, key=sort_key)

def knuth_class(w):
    """ the closure of w under Knuth moves """
    seen = {w}
    todo = [w]
    while todo:
        u = todo.pop()
        for x in knuth_neighbors(u):
            if x not in seen:
                seen.add(x)
                todo.append(x)
    return sorted(seen, key=sort_key)

def standard_tableaux(shape):
    """ all standard tableaux of the given shape, sorted """
    shape = tuple(shape)
    n = sum(shape)
    result = []

    def fill(rows, k):
        if k > n:
            result.append(StandardTableau(rows))
            return
        for i in range(len(shape)):
            if len(rows[i]) < shape[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                fill(rows, k + 1)
                rows[i].pop()

    fill([[] for _ in shape], 1)
    return sorted(result)

def count_standard_tableaux(shape):
    """ hook length formula """
    shape = Partition(shape)
    conj = shape.transpose()
    hooks = 1
    for i, row in enumerate(shape):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(shape.n) // hooks

@lru_cache(maxsize=None)
def _mn(shape, cycle):
    if not cycle:
        return 1 if not shape else 0
    r = cycle[0]
    rest = cycle[1:]
    length = len(shape)
    beta = [shape[i] + (length - 1 - i) for i in range(length)]
    occupied = set(beta)
    total = 0
    for b in beta:
        c = b - r
        if c < 0 or c in occupied:
            continue
        sign = -1 if sum(1 for x in beta if c < x < b) % 2 else 1
        moved = sorted((c if x == b else x for x in beta), reverse=True)
        parts = [moved[i] - (length - 1 - i) for i in range(length)]
        total += sign * _mn(tuple(p for p in parts if p > 0), rest)
    return total

def mn_character(lam, cycle_type):
    """ the irreducible character value chi^lam on the class of the given cycle type

    rim hooks are removed on the beta-set of lam, one per part of the
    cycle type.
    """
    if lam.n != cycle_type.n:
        raise SizeMismatch("character of a partition of %d on a class of S%d" % (lam.n, cycle_type.n))
    return _mn(lam.parts, cycle_type.parts)

def class_size(cycle_type):
    """ n! / z, the number of permutations with this cycle type """
    z = 1
    for part, mult in _multiplicities(cycle_type).items():
        z *= part ** mult * factorial(mult)
    return factorial(cycle_type.n) // z

def _multiplicities(cycle_type):
    out = {}
    for p in cycle_type:
        out[p] = out.get(p, 0) + 1
    return out

def class_word(cycle_type):
    """ a minimal length word for a permutation of the given cycle type

    cycles are laid out on consecutive points: the cycle on a..b is
    s_a s_{a+1} ... s_{b-1}.
    """
    word = []
    start = 1
    for p in cycle_type:
        word.extend(range(start, start + p - 1))
        start += p
    return word

def class_representative(cycle_type):
    return Permutation.fromWord(cycle_type.n, class_word(cycle_type))

class SymmetricGroup(object):
    """ all elements of Sn, indexed in (length, lexicographic) order

    `rmul[i][s - 1]` is the index of elements[i] * s_s, and `lmul` the same
    for left multiplication. Build through `symmetric_group(n)`, which caches.
    """
    def __init__(self, n):
        super(SymmetricGroup, self).__init__()
        if n < 1:
            raise ValueError("n must be positive: %d" % n)
        self.n = n
        self.elements = sorted((Permutation._trusted(p)
            for p in itertools.permutations(range(1, n + 1))), key=sort_key)
        self.index = {w: i for i, w in enumerate(self.elements)}
        self.lengths = [w.length() for w in self.elements]
        self.rmul = [[self.index[w.right_mul_simple(s)] for s in range(1, n)]
            for w in self.elements]
        self.lmul = [[self.index[w.left_mul_simple(s)] for s in range(1, n)]
            for w in self.elements]
        self.inverse = [self.index[w.inverse()] for w in self.elements]
        self.right_descents = [w.right_descents() for w in self.elements]
        self.left_descents = [self.right_descents[j] for j in self.inverse]

    def __len__(self):
        return len(self.elements)

    def generators(self):
        return list(range(1, self.n))

    def identity(self):
        return 0

    def longest(self):
        return len(self.elements) - 1

    def mul(self, i, j):
        return self.index[self.elements[i] * self.elements[j]]

    def __repr__(self):
        return "SymmetricGroup(%d)" % self.n

@lru_cache(maxsize=None)
def symmetric_group(n):
    return SymmetricGroup(n)

class ParabolicData(object):
    """ a standard parabolic subgroup W' = S_{i1} x ... x S_{ir} of Sn

    W' permutes the values inside each block of consecutive integers given
    by the composition. Cosets are right cosets W'w unless stated otherwise.

    :param n: the rank of the ambient group
    :param composition: block sizes, summing to n
    """
    def __init__(self, n, composition):
        super(ParabolicData, self).__init__()
        composition = tuple(int(c) for c in composition)
        if any(c < 1 for c in composition):
            raise ValueError("composition entries must be positive: %s" % (list(composition),))
        if sum(composition) != n:
            raise ValueError("composition %s does not sum to %d" % (list(composition), n))
        self.n = n
        self.composition = composition
        self.block = []
        for b, size in enumerate(composition):
            self.block.extend([b] * size)
        self._short = None
        self._decompose = None

    @staticmethod
    def trivial(n):
        """ W' = {e} """
        return ParabolicData(n, [1] * n)

    @staticmethod
    def full(n):
        """ W' = W """
        return ParabolicData(n, [n])

    def blocks(self):
        """ the value blocks as (first, last) pairs """
        out = []
        start = 1
        for size in self.composition:
            out.append((start, start + size - 1))
            start += size
        return out

    def generators(self):
        """ S', the simple reflections of W' """
        return [i for i in range(1, self.n) if self.block[i - 1] == self.block[i]]

    def contains(self, w):
        return all(self.block[x - 1] == self.block[j] for j, x in enumerate(w.one_line))

    def longest(self):
        """ w'0, reversing every block """
        one_line = []
        for first, last in self.blocks():
            one_line.extend(range(last, first - 1, -1))
        return Permutation._trusted(tuple(one_line))

    def subgroup_elements(self):
        """ the elements of W' in (length, lexicographic) order """
        pieces = [list(itertools.permutations(range(first, last + 1)))
            for first, last in self.blocks()]
        elements = [Permutation._trusted(tuple(itertools.chain.from_iterable(combo)))
            for combo in itertools.product(*pieces)]
        return sorted(elements, key=sort_key)

    def is_short(self, w):
        """ w is the shortest element of its right coset W'w """
        inv = w.inverse().one_line
        return all(inv[i - 1] < inv[i] for i in self.generators())

    def is_left_short(self, w):
        """ w is the shortest element of its left coset wW' """
        a = w.one_line
        return all(a[i - 1] < a[i] for i in self.generators())

    def short_reps(self):
        if self._short is None:
            G = symmetric_group(self.n)
            self._short = [w for w in G.elements if self.is_short(w)]
        return list(self._short)

    def long_reps(self):
        w0p = self.longest()
        return [w0p * w for w in self.short_reps()]

    def left_short_reps(self):
        """ shortest representatives of W/W', in the order of their inverses """
        return [w.inverse() for w in self.short_reps()]

    def longest_short(self):
        """ w0' w0, the longest element of the shortest coset representatives """
        return self.longest() * Permutation.longest(self.n)

    def decompose(self, y):
        """ the unique (u, w) with y = u w, u in W' and w short; l(y) = l(u) + l(w) """
        positions = {}
        for p, x in enumerate(y.one_line):
            positions.setdefault(self.block[x - 1], []).append(p)
        w = [0] * self.n
        for b, (first, last) in enumerate(self.blocks()):
            for k, p in enumerate(positions.get(b, [])):
                w[p] = first + k
        w = Permutation._trusted(tuple(w))
        u = y * w.inverse()
        return u, w

    def __eq__(self, other):
        if not isinstance(other, ParabolicData):
            return NotImplemented
        return self.n == other.n and self.composition == other.composition

    def __hash__(self):
        return hash((self.n, self.composition))

    def __repr__(self):
        return "ParabolicData(%d, %s)" % (self.n, list(self.composition))

def coset_reps(p):
    """ shortest and longest right coset representatives and the decomposition map

    :returns: (short, long, decompose)
    """
    return p.short_reps(), p.long_reps(), p.decompose
