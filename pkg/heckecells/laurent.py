#! cd .. && python3 -m heckecells.laurent

"""
# Laurent polynomials

Exact arithmetic in Z[v, v^-1] and in its fraction field Q(v).

`LaurentPoly` is the coefficient type of everything else in heckecells: Hecke
algebra elements, KL polynomials, module action matrices and bilinear forms.
Values are immutable and kept in canonical form: the coefficient tuple never
starts or ends with a zero, and zero is the empty tuple with `min_deg = 0`.
Coefficients are Python integers, so there is no overflow.

`RationalFunction` is a reduced quotient of two Laurent polynomials. It only
appears where a matrix has to be inverted or a linear system solved: dual
bases, intertwiners, and the invariant forms.

The matrix helpers at the end of the module work on plain lists of lists.
Linear systems are reduced by cross multiplication over Z[v, v^-1] so that
no rational functions are created until the very end.
"""

from math import gcd
from functools import reduce

import numpy as np
from sympy import Matrix, Poly, Rational, Symbol

class SingularMatrix(Exception):
    pass

class LaurentPoly(object):
    """ an element of Z[v, v^-1]

    :param coeffs: coefficient of v^(min_deg + i) at position i
    :param min_deg: the exponent of the first coefficient
    """
    __slots__ = ('min_deg', 'coeffs')

    def __init__(self, coeffs=(), min_deg=0):
        coeffs = tuple(coeffs)
        lo = 0
        hi = len(coeffs)
        while lo < hi and coeffs[lo] == 0:
            lo += 1
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            self.min_deg = 0
            self.coeffs = ()
        else:
            self.min_deg = min_deg + lo
            self.coeffs = coeffs[lo:hi]

    @staticmethod
    def _make(coeffs, min_deg):
        # coeffs must already be canonical
        p = object.__new__(LaurentPoly)
        p.coeffs = coeffs
        p.min_deg = min_deg if coeffs else 0
        return p

    @staticmethod
    def constant(c):
        return LaurentPoly._make((c,), 0) if c else ZERO

    @staticmethod
    def monomial(c, k):
        """ c * v^k """
        return LaurentPoly._make((c,), k) if c else ZERO

    @staticmethod
    def fromDict(terms):
        """ build from a mapping exponent -> coefficient """
        terms = {k: c for k, c in terms.items() if c}
        if not terms:
            return ZERO
        lo = min(terms)
        hi = max(terms)
        return LaurentPoly([int(terms.get(k, 0)) for k in range(lo, hi + 1)], lo)

    @property
    def max_deg(self):
        return self.min_deg + len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_unit(self):
        """ true for +v^k and -v^k """
        return len(self.coeffs) == 1 and self.coeffs[0] in (1, -1)

    def is_constant(self):
        return not self.coeffs or (len(self.coeffs) == 1 and self.min_deg == 0)

    def coefficient(self, k):
        i = k - self.min_deg
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def items(self):
        """ iterate over (exponent, coefficient) pairs with nonzero coefficient """
        k = self.min_deg
        for c in self.coeffs:
            if c:
                yield k, c
            k += 1

    def content(self):
        """ gcd of the coefficients, 0 for the zero polynomial """
        return reduce(gcd, self.coeffs, 0)

    def shift(self, k):
        """ multiply by v^k """
        if not self.coeffs or k == 0:
            return self
        return LaurentPoly._make(self.coeffs, self.min_deg + k)

    def bar(self):
        """ the involution v -> v^-1 """
        if not self.coeffs:
            return self
        return LaurentPoly._make(self.coeffs[::-1], -self.max_deg)

    def eval_one(self):
        return sum(self.coeffs)

    def evaluate(self, x):
        """ the exact value at v = x, a sympy Rational """
        x = Rational(x)
        return sum((c * x ** (self.min_deg + i) for i, c in enumerate(self.coeffs) if c), Rational(0))

    def in_positive_degrees(self):
        """ true when the polynomial lies in vZ[v] """
        return not self.coeffs or self.min_deg >= 1

    def symmetrize_nonpositive(self):
        """ the bar invariant polynomial agreeing with self in degrees <= 0 """
        terms = {}
        for k, c in self.items():
            if k <= 0:
                terms[k] = c
                if k < 0:
                    terms[-k] = c
        return LaurentPoly.fromDict(terms)

    def exact_div(self, other):
        """ divide by other, raising ArithmeticError if the quotient is not in Z[v, v^-1] """
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.coeffs:
            return self
        if len(other.coeffs) == 1:
            d = other.coeffs[0]
            out = []
            for c in self.coeffs:
                q, r = divmod(c, d)
                if r:
                    raise ArithmeticError("inexact division of %s by %s" % (self, other))
                out.append(q)
            return LaurentPoly._make(tuple(out), self.min_deg - other.min_deg)
        # long division on the polynomial parts, highest degree first
        rem = list(self.coeffs)
        div = other.coeffs
        dl = len(div)
        lead = div[-1]
        nq = len(rem) - dl + 1
        if nq <= 0:
            raise ArithmeticError("inexact division of %s by %s" % (self, other))
        quot = [0] * nq
        for i in range(nq - 1, -1, -1):
            c = rem[i + dl - 1]
            if c:
                q, r = divmod(c, lead)
                if r:
                    raise ArithmeticError("inexact division of %s by %s" % (self, other))
                quot[i] = q
                for j in range(dl):
                    rem[i + j] -= q * div[j]
        if any(rem):
            raise ArithmeticError("inexact division of %s by %s" % (self, other))
        return LaurentPoly(quot, self.min_deg - other.min_deg)

    def unit_inverse(self):
        if not self.is_unit():
            raise ArithmeticError("%s is not a unit" % self)
        return LaurentPoly._make(self.coeffs, -self.min_deg)

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, np.integer)):
            return LaurentPoly.constant(int(other))
        return None

    def __add__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        if not b.coeffs:
            return self
        if not self.coeffs:
            return b
        a = self
        if a.min_deg > b.min_deg:
            a, b = b, a
        out = list(a.coeffs)
        off = b.min_deg - a.min_deg
        need = off + len(b.coeffs) - len(out)
        if need > 0:
            out.extend([0] * need)
        for i, c in enumerate(b.coeffs):
            out[off + i] += c
        return LaurentPoly(out, a.min_deg)

    __radd__ = __add__

    def __neg__(self):
        if not self.coeffs:
            return self
        return LaurentPoly._make(tuple(-c for c in self.coeffs), self.min_deg)

    def __sub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return self + (-b)

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return b + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            other = int(other)
            if other == 0 or not self.coeffs:
                return ZERO
            if other == 1:
                return self
            return LaurentPoly._make(tuple(c * other for c in self.coeffs), self.min_deg)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a = self.coeffs
        b = other.coeffs
        if not a or not b:
            return ZERO
        if len(b) == 1:
            d = b[0]
            if d == 1:
                return LaurentPoly._make(a, self.min_deg + other.min_deg)
            return LaurentPoly._make(tuple(c * d for c in a), self.min_deg + other.min_deg)
        if len(a) == 1:
            return other * self
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return LaurentPoly(out, self.min_deg + other.min_deg)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            if len(self.coeffs) != 1:
                raise ArithmeticError("only monomials have negative powers")
            c = self.coeffs[0]
            if c not in (1, -1):
                raise ArithmeticError("%s is not invertible" % self)
            return LaurentPoly._make((c ** (-k),), self.min_deg * k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.min_deg == other.min_deg and self.coeffs == other.coeffs
        if isinstance(other, (int, np.integer)):
            if other == 0:
                return not self.coeffs
            return self.min_deg == 0 and self.coeffs == (other,)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.min_deg, self.coeffs))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in self.items():
            if k == 0:
                mono = str(abs(c))
            else:
                var = "v" if k == 1 else "v^%d" % k
                mono = var if abs(c) == 1 else "%d%s" % (abs(c), var)
            if not parts:
                parts.append(("-" if c < 0 else "") + mono)
            else:
                parts.append(("- " if c < 0 else "+ ") + mono)
        return " ".join(parts)

    def __repr__(self):
        return "LaurentPoly(%s)" % self

    def toJson(self):
        return {"min_deg": self.min_deg, "coeffs": list(self.coeffs)}

    @classmethod
    def fromJson(cls, record):
        try:
            coeffs = [int(c) for c in record["coeffs"]]
            min_deg = int(record["min_deg"])
        except (KeyError, TypeError, ValueError) as e:
            raise ValueError("invalid LaurentPoly record %r: %s" % (record, e))
        p = LaurentPoly(coeffs, min_deg)
        if list(p.coeffs) != coeffs or (coeffs and p.min_deg != min_deg) or \
                (not coeffs and min_deg != 0):
            raise ValueError("LaurentPoly record %r is not canonical" % (record,))
        return p

ZERO = LaurentPoly._make((), 0)
ONE = LaurentPoly._make((1,), 0)
V = LaurentPoly._make((1,), 1)
VINV = LaurentPoly._make((1,), -1)
# v + v^-1, the quantum two
QTWO = LaurentPoly._make((1, 0, 1), -1)
# v^-1 - v, the quadratic relation coefficient
VINV_MINUS_V = LaurentPoly._make((1, 0, -1), -1)
V_MINUS_VINV = LaurentPoly._make((-1, 0, 1), -1)

def lp_add(a, b):
    return a + b

def lp_mul(a, b):
    return a * b

def lp_bar(a):
    return a.bar()

def lp_eval_one(a):
    return a.eval_one()

# ---------------------------------------------------------------------------
# polynomial gcd, through sympy

_v = Symbol('v')

def _to_poly(p):
    # the polynomial part of p, with its v-adic valuation stripped
    return Poly(list(reversed(p.coeffs)), _v, domain='ZZ')

def _from_poly(poly, min_deg=0):
    return LaurentPoly([int(c) for c in reversed(poly.all_coeffs())], min_deg)

def lp_gcd(a, b):
    """ gcd in Z[v, v^-1], normalized to min_deg 0 and positive leading coefficient """
    if not a:
        return _normalize_associate(b)
    if not b:
        return _normalize_associate(a)
    if len(a.coeffs) == 1 or len(b.coeffs) == 1:
        c = gcd(a.content(), b.content())
        return LaurentPoly.constant(c)
    g = _to_poly(a).gcd(_to_poly(b))
    return _normalize_associate(_from_poly(g))

def _normalize_associate(p):
    if not p:
        return p
    p = p.shift(-p.min_deg)
    if p.coeffs[-1] < 0:
        p = -p
    return p

def _cofactors(a, b):
    """ a / g and b / g for the polynomial parts of a and b """
    h, cff, cfg = _to_poly(a).cofactors(_to_poly(b))
    return _from_poly(cff), _from_poly(cfg)

class RationalFunction(object):
    """ an element of Q(v), stored as a reduced quotient num / den

    den has min_deg 0 and a positive leading coefficient, and the integer
    content of num and den together is 1, so equal functions have equal
    representations.
    """
    __slots__ = ('num', 'den')

    def __init__(self, num, den=None):
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly.constant(int(num))
        if den is None:
            den = ONE
        elif not isinstance(den, LaurentPoly):
            den = LaurentPoly.constant(int(den))
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        self.num, self.den = RationalFunction._reduce(num, den)

    @staticmethod
    def _reduce(num, den):
        if not num:
            return ZERO, ONE
        offset = num.min_deg - den.min_deg
        n0 = num.shift(-num.min_deg)
        d0 = den.shift(-den.min_deg)
        if len(d0.coeffs) == 1:
            g = gcd(n0.content(), d0.coeffs[0])
            n0 = n0.exact_div(LaurentPoly.constant(g))
            d0 = LaurentPoly.constant(d0.coeffs[0] // g)
        elif len(n0.coeffs) == 1:
            g = gcd(n0.coeffs[0], d0.content())
            n0 = LaurentPoly.constant(n0.coeffs[0] // g)
            d0 = d0.exact_div(LaurentPoly.constant(g))
        else:
            n0, d0 = _cofactors(n0, d0)
        if d0.coeffs[-1] < 0:
            n0 = -n0
            d0 = -d0
        return n0.shift(offset), d0

    @staticmethod
    def _of(value):
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, (LaurentPoly, int, np.integer)):
            return RationalFunction(value)
        return None

    def is_laurent(self):
        return self.den == ONE

    def to_laurent(self):
        if not self.is_laurent():
            raise ArithmeticError("%s is not a Laurent polynomial" % self)
        return self.num

    def __bool__(self):
        return bool(self.num)

    def __add__(self, other):
        b = RationalFunction._of(other)
        if b is None:
            return NotImplemented
        if self.den == b.den:
            return RationalFunction(self.num + b.num, self.den)
        return RationalFunction(self.num * b.den + b.num * self.den, self.den * b.den)

    __radd__ = __add__

    def __neg__(self):
        r = object.__new__(RationalFunction)
        r.num = -self.num
        r.den = self.den
        return r

    def __sub__(self, other):
        b = RationalFunction._of(other)
        if b is None:
            return NotImplemented
        return self + (-b)

    def __rsub__(self, other):
        b = RationalFunction._of(other)
        if b is None:
            return NotImplemented
        return b + (-self)

    def __mul__(self, other):
        b = RationalFunction._of(other)
        if b is None:
            return NotImplemented
        return RationalFunction(self.num * b.num, self.den * b.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = RationalFunction._of(other)
        if b is None:
            return NotImplemented
        if not b.num:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * b.den, self.den * b.num)

    def __rtruediv__(self, other):
        b = RationalFunction._of(other)
        if b is None:
            return NotImplemented
        return b / self

    def bar(self):
        return RationalFunction(self.num.bar(), self.den.bar())

    def __eq__(self, other):
        b = RationalFunction._of(other)
        if b is None:
            return NotImplemented
        return self.num == b.num and self.den == b.den

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if self.den == ONE:
            return hash(self.num)
        return hash((self.num, self.den))

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return "(%s)/(%s)" % (self.num, self.den)

    def __repr__(self):
        return "RationalFunction(%s)" % self

    def toJson(self):
        return {"num": self.num.toJson(), "den": self.den.toJson()}

    @classmethod
    def fromJson(cls, record):
        return cls(LaurentPoly.fromJson(record["num"]), LaurentPoly.fromJson(record["den"]))

# ---------------------------------------------------------------------------
# matrices: lists of rows

def mat_zero(rows, cols):
    return [[ZERO] * cols for _ in range(rows)]

def mat_identity(d):
    m = mat_zero(d, d)
    for i in range(d):
        m[i][i] = ONE
    return m

def mat_mul(a, b):
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [ZERO] * cols
        for k in range(inner):
            x = row[k]
            if x:
                brow = b[k]
                for j in range(cols):
                    y = brow[j]
                    if y:
                        acc[j] = acc[j] + x * y
        out.append(acc)
    return out

def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]

def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]

def mat_scale(c, a):
    return [[c * x for x in row] for row in a]

def mat_transpose(a):
    return [list(col) for col in zip(*a)]

def mat_bar(a):
    return [[x.bar() for x in row] for row in a]

def mat_eq(a, b):
    if len(a) != len(b):
        return False
    return all(len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb))
        for ra, rb in zip(a, b))

def mat_is_identity(a):
    return all(x == (1 if i == j else 0)
        for i, row in enumerate(a) for j, x in enumerate(row))

def mat_eval_one(a):
    """ specialize v = 1; the result is an exact numpy array of python ints """
    d = len(a)
    c = len(a[0]) if a else 0
    out = np.zeros((d, c), dtype=object)
    for i, row in enumerate(a):
        for j, x in enumerate(row):
            if x:
                out[i, j] = x.eval_one()
    return out

def mat_evaluate(a, x):
    """ specialize v = x, as an exact sympy Matrix """
    return Matrix([[e.evaluate(x) if e else 0 for e in row] for row in a])

def vec_mat(vec, m):
    """ row vector times matrix """
    cols = len(m[0]) if m else 0
    acc = [ZERO] * cols
    for k, x in enumerate(vec):
        if x:
            for j, y in enumerate(m[k]):
                if y:
                    acc[j] = acc[j] + x * y
    return acc

# ---------------------------------------------------------------------------
# elimination, on sparse rows {column: LaurentPoly}

def _sparse(row):
    if isinstance(row, dict):
        return {c: x for c, x in row.items() if x}
    return {c: x for c, x in enumerate(row) if x}

def _row_content(row):
    """ a common factor of all entries of a sparse row, as a LaurentPoly """
    nonzero = list(row.values())
    if not nonzero:
        return ONE
    shift = min(x.min_deg for x in nonzero)
    c = reduce(gcd, (x.content() for x in nonzero), 0)
    if row[min(row)].coeffs[-1] < 0:
        c = -c
    g = LaurentPoly.monomial(c, shift)
    if max(len(x.coeffs) for x in nonzero) > 4 and \
            min(len(x.coeffs) for x in nonzero) > 1:
        p = ZERO
        for x in nonzero:
            p = lp_gcd(p, x.shift(-x.min_deg))
            if len(p.coeffs) == 1:
                break
        if len(p.coeffs) > 1:
            g = g * p.exact_div(LaurentPoly.constant(p.content()))
    return g

def _divide_row(row, g):
    if g == ONE:
        return row
    if g.is_unit():
        u = g.unit_inverse()
        return {c: x * u for c, x in row.items()}
    return {c: x.exact_div(g) for c, x in row.items()}

def _pivot_size(x):
    return (len(x.coeffs), max(abs(c) for c in x.coeffs))

def _eliminate(row, prow, c, piv, inv):
    a = row.get(c)
    if a is None:
        return row
    if inv is not None:
        f = a * inv
        out = dict(row)
        for k, y in prow.items():
            val = out.get(k, ZERO) - f * y
            if val:
                out[k] = val
            else:
                out.pop(k, None)
        return out
    out = {k: piv * x for k, x in row.items()}
    for k, y in prow.items():
        val = out.get(k, ZERO) - a * y
        if val:
            out[k] = val
        else:
            out.pop(k, None)
    return _divide_row(out, _row_content(out))

def row_reduce(rows, ncols, pivot_cols=None):
    """ Gauss-Jordan elimination over Z[v, v^-1] by cross multiplication

    :param rows: the matrix, as dense lists or sparse dicts of LaurentPoly
    :param ncols: number of columns
    :param pivot_cols: only columns below this index are used as pivots

    :returns: (rows, pivots) where rows[j] is a sparse row with a nonzero
        entry in column pivots[j], and no other returned row has an entry
        in that column. Rows are divided by their content as they are
        updated, so entries stay small.
    """
    pending = []
    for r in rows:
        r = _sparse(r)
        if r:
            pending.append(_divide_row(r, _row_content(r)))
    limit = ncols if pivot_cols is None else pivot_cols
    done = []
    pivots = []
    for c in range(limit):
        if not pending:
            break
        best = None
        size = None
        for i, row in enumerate(pending):
            e = row.get(c)
            if e is not None:
                s = _pivot_size(e)
                if best is None or s < size:
                    best = i
                    size = s
                    if s == (1, 1):
                        break
        if best is None:
            continue
        prow = pending.pop(best)
        piv = prow[c]
        inv = piv.unit_inverse() if piv.is_unit() else None
        done = [_eliminate(row, prow, c, piv, inv) for row in done]
        pending = [row for row in (_eliminate(row, prow, c, piv, inv) for row in pending) if row]
        done.append(prow)
        pivots.append(c)
    return done, pivots

def nullspace(rows, ncols):
    """ basis of the right kernel {x : rows . x = 0} as primitive Laurent vectors """
    reduced, pivots = row_reduce(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        vec = [RationalFunction(0)] * ncols
        vec[f] = RationalFunction(1)
        for row, c in zip(reduced, pivots):
            x = row.get(f)
            if x:
                vec[c] = RationalFunction(-x, row[c])
        basis.append(primitive_vector(clear_denominators(vec)))
    return basis

def rank(rows, ncols):
    reduced, pivots = row_reduce(rows, ncols)
    return len(pivots)

def clear_denominators(vec):
    """ scale a vector of RationalFunction to a vector of LaurentPoly """
    dens = []
    for x in vec:
        if x and x.den != ONE and x.den not in dens:
            dens.append(x.den)
    scale = reduce(lambda a, b: a * b, dens, ONE)
    out = []
    for x in vec:
        if not x:
            out.append(ZERO)
        else:
            out.append((x * scale).to_laurent())
    return out

def primitive_vector(vec):
    """ divide a Laurent vector by the gcd of its entries

    the result has minimal exponent 0 over all entries, coprime integer
    content and no common polynomial factor.
    """
    nonzero = [x for x in vec if x]
    if not nonzero:
        return list(vec)
    g = ZERO
    for x in nonzero:
        g = lp_gcd(g, x)
        if g == ONE:
            break
    shift = min(x.min_deg for x in nonzero)
    out = []
    for x in vec:
        if x:
            x = x.shift(-shift)
            if g != ONE:
                x = x.exact_div(g)
        out.append(x)
    return out

def rf_invert_matrix(m):
    """ exact inverse of a square LaurentPoly matrix over Q(v)

    :raises SingularMatrix: when the determinant is zero
    """
    d = len(m)
    if any(len(row) != d for row in m):
        raise ValueError("matrix is not square")
    aug = []
    for i, row in enumerate(m):
        r = _sparse(row)
        r[d + i] = ONE
        aug.append(r)
    reduced, pivots = row_reduce(aug, 2 * d, pivot_cols=d)
    if len(pivots) != d:
        raise SingularMatrix("matrix of size %d has rank %d" % (d, len(pivots)))
    zero = RationalFunction(0)
    inv = [None] * d
    for row, c in zip(reduced, pivots):
        piv = row[c]
        out = [zero] * d
        for k, x in row.items():
            if k >= d:
                out[k - d] = RationalFunction(x, piv)
        inv[c] = out
    return inv

def unitriangular_inverse(m):
    """ inverse of a lower unitriangular LaurentPoly matrix, exact over Z[v, v^-1] """
    d = len(m)
    inv = mat_identity(d)
    for i in range(d):
        row = m[i]
        if row[i] != ONE:
            raise ValueError("matrix is not unitriangular at %d" % i)
        acc = {}
        for k in range(i):
            x = row[k]
            if x:
                for j, y in enumerate(inv[k][:k + 1]):
                    if y:
                        acc[j] = acc.get(j, ZERO) - x * y
        for j, val in acc.items():
            inv[i][j] = val
    return inv
