#! cd .. && python3 -m heckecells.verify

"""
# Acceptance checks

Every check is a function of `max_n` returning `(passed, detail)`; the size
of each check is capped independently, so `verify --max-n 4` stays quick and
`--max-n 6` runs the full filtration suite.

`run_checks` runs them in order, or through a `TaskPool` when `jobs > 1`,
and returns one `CheckResult` per check.
"""

import itertools
import random
import time

from .laurent import (ZERO, ONE, V, VINV, VINV_MINUS_V, QTWO, LaurentPoly,
    mat_zero, mat_mul, mat_eq, mat_transpose)
from .symgroup import (Permutation, Partition, ParabolicData, partitions,
    count_standard_tableaux, rsk_shape, symmetric_group)
from .hecke import KLTable, kl_table, bar_standard, kl_product
from .cells import (compute_cells, cells_via_rsk, parabolic_right_cells, right_leq,
    left_leq, singular_pair)
from .cellmod import CellModule, cell_iso
from .induced import (induce, regular_module, permutation_induced, ind_form,
    kl_elements, four_bases, kl_action)
from .parabolic import ModuleKind, parabolic_module, twisting_matrices
from .filtration import (gk_filtration, dominance_filtration, compare_filtrations,
    dominance_implies_squares, dominance_vs_gk)
from .serializable import Serializable
from .task import TaskPool
from .logger import hklogger

class CheckResult(Serializable):
    name: str = ""
    passed: bool = False
    seconds: float = 0.0
    detail: str = ""

def compositions(n):
    """ all compositions of n, coarsest first """
    out = []
    for k in range(n):
        for cuts in itertools.combinations(range(1, n), k):
            bounds = (0,) + cuts + (n,)
            out.append([bounds[i + 1] - bounds[i] for i in range(len(bounds) - 1)])
    return out

def kl_table_bruteforce(n):
    """ KL polynomials from bar invariance alone

    Writing bar(H_z) = sum r_{y,z} H_y, bar invariance of H̲_x gives

        h_{y,x} - bar(h_{y,x}) = sum over y < z <= x of bar(h_{z,x}) r_{y,z}

    and h_{y,x} in vZ[v] is the positive degree part of the right side.
    """
    G = symmetric_group(n)
    R = [bar_standard(w).terms for w in G.elements]
    columns = []
    for x in range(len(G)):
        h = {x: ONE}
        for y in range(x - 1, -1, -1):
            if G.lengths[y] >= G.lengths[x]:
                continue
            rhs = ZERO
            for z, hz in h.items():
                r = R[z].get(y)
                if r:
                    rhs = rhs + hz.bar() * r
            positive = {k: c for k, c in rhs.items() if k > 0}
            if positive:
                h[y] = LaurentPoly.fromDict(positive)
        columns.append(h)
    return KLTable(n, columns)

def _induced_modules(n, t):
    for comp in compositions(n):
        p = ParabolicData(n, comp)
        for cell in parabolic_right_cells(p, t):
            yield p, induce(p, cell, t)

ORACLE_MAX_N = 4

def check_kl_oracle(max_n):
    top = min(ORACLE_MAX_N, max_n)
    for n in range(1, top + 1):
        if kl_table(n) != kl_table_bruteforce(n):
            return False, "S%d: recursive table differs from the bar invariance solution" % n
    if max_n > ORACLE_MAX_N:
        return True, "n <= %d, the dense bar invariance solve is capped at S%d" % (top, ORACLE_MAX_N)
    return True, "n <= %d" % top

def check_s3_cells(max_n):
    c = compute_cells(kl_table(3))
    expected = [["123"], ["213", "231"], ["132", "312"], ["321"]]
    got = sorted(sorted("".join(str(a) for a in w.one_line) for w in cell) for cell in c.right_cells)
    if got != sorted(expected):
        return False, "S3 right cells %s" % got
    for n in range(1, min(5, max_n) + 1):
        cells_via_rsk(n)
        c = compute_cells(kl_table(n))
        for cell in c.two_sided_cells:
            lam = rsk_shape(cell[0])
            members = set(cell)
            inside = [r for r in c.right_cells if r[0] in members]
            if len(inside) != count_standard_tableaux(lam):
                return False, "S%d: %d right cells of shape %s" % (n, len(inside), lam)
    return True, "S3 cells and RSK cells for n <= %d" % min(5, max_n)

def check_relations(max_n):
    count = 0
    for n in range(2, min(5, max_n) + 1):
        t = kl_table(n)
        c = compute_cells(t)
        for R in c.right_cells:
            if CellModule(R, t).relation_failures():
                return False, "S%d: cell module of %s" % (n, R[0])
            count += 1
        for p, m in _induced_modules(n, t):
            failures = m.relation_failures()
            if failures:
                return False, "S%d %s: %s" % (n, list(p.composition), failures[0])
            count += 1
        for comp in compositions(n):
            p = ParabolicData(n, comp)
            for kind in (ModuleKind.SIGN, ModuleKind.PERMUTATION):
                failures = parabolic_module(kind, p).relation_failures()
                if failures:
                    return False, "S%d %s %s: %s" % (n, comp, kind, failures[0])
            T = twisting_matrices(p)
            failures = T.relation_failures()
            if failures:
                return False, "S%d %s twisting: %s" % (n, comp, failures[0])
            if not T.matches_permutation_action():
                return False, "S%d %s: twisting at v=1 is not the coset action" % (n, comp)
            count += 3
    return True, "%d modules" % count

def check_gl2(max_n):
    t = kl_table(2)
    m = regular_module(2, t)
    if not mat_eq(m.matrices[1], [[V, ONE], [ONE, VINV]]):
        return False, "regular action of H̲_s"
    T = twisting_matrices(ParabolicData.trivial(2))
    if not mat_eq(T.matrices[1], [[ZERO, ONE], [ONE, VINV_MINUS_V]]):
        return False, "twisting matrix of H_s"
    return True, "S2 regular and twisting tables"

def dual_kl_graph(t, s):
    """ the expected action of H̲_s on the dual KL basis of the regular module

    D_x H̲_s = (v + v^-1) D_x + D_xs + sum of mu(x, k) D_k over k > x with ks > k
    when xs < x, and 0 otherwise.
    """
    G = t.group
    N = len(G)
    D = mat_zero(N, N)
    for x in range(N):
        if s not in G.right_descents[x]:
            continue
        D[x][x] = QTWO
        D[x][G.rmul[x][s - 1]] = ONE
        for k in range(N):
            if G.lengths[k] > G.lengths[x] and s not in G.right_descents[k]:
                mu = t.mu_index(x, k)
                if mu:
                    D[x][k] = D[x][k] + mu
    return D

def check_gl3(max_n):
    t = kl_table(3)
    fb = four_bases(regular_module(3, t))
    for s in (1, 2):
        _, dual = kl_action(fb, s)
        if not mat_eq(dual, dual_kl_graph(t, s)):
            return False, "dual KL action of H̲_%d" % s
    return True, "S3 dual KL graph"

def check_induced_kl_element(max_n):
    t = kl_table(3)
    m = induce(ParabolicData(3, [2, 1]), [Permutation.simple(3, 1)], t)
    K = kl_elements(m)
    s = Permutation.simple(3, 1)
    tt = Permutation.simple(3, 2)
    pos = m.position
    row = K[pos[(s, tt * s)]]
    expected = {pos[(s, tt * s)]: ONE, pos[(s, tt)]: V, pos[(s, Permutation.identity(3))]: V * V}
    got = {j: c for j, c in enumerate(row) if c}
    if got != expected:
        return False, "got %s" % {str(m.basis[j]): str(c) for j, c in got.items()}
    return True, "⊡ = Δ(s,ts) + vΔ(s,t) + v^2 Δ(s,e)"

def _invariant(matrices, G):
    return all(mat_eq(mat_mul(A, G), mat_mul(G, mat_transpose(A))) for A in matrices.values())

def check_form_invariance(max_n):
    count = 0
    for n in range(2, min(5, max_n) + 1):
        t = kl_table(n)
        c = compute_cells(t)
        for R in c.right_cells:
            cm = CellModule(R, t)
            if not _invariant(cm.matrices, cm.form()):
                return False, "S%d: form of the cell of %s" % (n, R[0])
            count += 1
        for p, m in _induced_modules(n, t):
            G = ind_form(m)
            for i, a in enumerate(m.basis):
                for j, b in enumerate(m.basis):
                    if a.w != b.w and G[i][j]:
                        return False, "S%d %s: form couples different cosets" % (n, list(p.composition))
            if not _invariant(m.matrices, G):
                return False, "S%d %s: induced form is not invariant" % (n, list(p.composition))
            count += 1
    return True, "%d forms" % count

def check_cell_isomorphism(max_n):
    pairs = 0
    for n in range(2, min(5, max_n) + 1):
        t = kl_table(n)
        c = compute_cells(t)
        modules = [CellModule(R, t) for R in c.right_cells]
        for a, b in itertools.combinations(range(len(modules)), 2):
            same = c.same_two_sided(c.right_cells[a][0], c.right_cells[b][0])
            found = cell_iso(modules[a], modules[b]) is not None
            if found != same:
                return False, "S%d: cells of %s and %s" % (
                    n, c.right_cells[a][0], c.right_cells[b][0])
            pairs += 1
    return True, "%d pairs" % pairs

def check_filtration(max_n):
    for n in range(1, min(6, max_n) + 1):
        t = kl_table(n)
        for lam in partitions(n):
            m = permutation_induced(ParabolicData(n, list(lam)), t)
            gk = gk_filtration(m)
            dom = dominance_filtration(m)
            if gk.layers[0].specht != {lam: 1}:
                return False, "S%d: Q_1 of M^%s is %s" % (n, lam, gk.layers[0].specht)
            for layer in gk.layers:
                if not layer.labels_incomparable():
                    return False, "S%d M^%s: comparable labels in layer %d" % (n, lam, layer.gkdim)
            if gk.total() != dom.total():
                return False, "S%d M^%s: layer characters do not add up" % (n, lam)
            if not compare_filtrations(gk, dom):
                return False, "S%d M^%s: dominance and GK filtrations differ" % (n, lam)
        regular = gk_filtration(regular_module(n, t)).total()
        if regular != {mu: count_standard_tableaux(mu) for mu in partitions(n)}:
            return False, "S%d: regular module character" % n
        if dominance_vs_gk(n):
            return False, "S%d: the statistic splits a dominance layer" % n
    split = dominance_vs_gk(7)
    wanted = {Partition([5, 1, 1]): 27, Partition([4, 3]): 25}
    if not any(all(dict(zip(layer.shapes, layer.statistics)).get(a) == v for a, v in wanted.items())
            for layer in split):
        return False, "S7: (5,1,1) and (4,3) are not split"
    return True, "n <= %d, and the S7 split" % min(6, max_n)

def check_dominance_squares(max_n):
    for n in range(1, 13):
        if not dominance_implies_squares(n):
            return False, "n = %d" % n
    return True, "n <= 12"

def check_singular_pairs(max_n):
    xn, xm = singular_pair(Partition([2, 2]))
    if xn != Permutation.fromWord(4, [2, 1, 3]) or xm != Permutation.fromWord(4, [1, 3]):
        return False, "singular_pair((2,2)) = (%s, %s)" % (xn, xm)
    for k in range(2, min(6, max_n) + 1):
        c = compute_cells(kl_table(k))
        for r in partitions(k):
            xn, xm = singular_pair(r)
            if c.left_cell_of(xn) != c.left_cell_of(xm):
                return False, "%s: %s and %s are in different left cells" % (r, xn, xm)
    return True, "k <= %d" % min(6, max_n)

def check_kl_positivity(max_n):
    for n in range(1, min(6, max_n) + 1):
        t = kl_table(n)
        for col in t.columns:
            for h in col.values():
                if any(c < 0 for c in h.coeffs):
                    return False, "S%d: negative coefficient in %s" % (n, h)
    return True, "n <= %d" % min(6, max_n)

def _product_pairs(n):
    G = symmetric_group(n)
    pairs = list(itertools.product(G.elements, repeat=2))
    if n >= 5:
        pairs = random.Random(n).sample(pairs, 60)
    return pairs

def check_kl_multiplication(max_n):
    count = 0
    for n in range(2, min(5, max_n) + 1):
        t = kl_table(n)
        c = compute_cells(t)
        for w, x in _product_pairs(n):
            for y, a in kl_product(w, x, t).items():
                if a and not (right_leq(w, y, c) and left_leq(x, y, c)):
                    return False, "S%d: H̲_%s H̲_%s has H̲_%s" % (n, w, x, y)
            count += 1
    return True, "%d products" % count

CHECKS = [
    ("kl_oracle", check_kl_oracle),
    ("s3_cells", check_s3_cells),
    ("relations", check_relations),
    ("gl2_fixture", check_gl2),
    ("gl3_fixture", check_gl3),
    ("induced_kl_element", check_induced_kl_element),
    ("form_invariance", check_form_invariance),
    ("cell_isomorphism", check_cell_isomorphism),
    ("filtration", check_filtration),
    ("dominance_squares", check_dominance_squares),
    ("singular_pairs", check_singular_pairs),
    ("kl_positivity", check_kl_positivity),
    ("kl_multiplication", check_kl_multiplication),
]

def run_check(name, max_n):
    """ run one named check, turning exceptions into a failed result """
    fn = dict(CHECKS)[name]
    start = time.perf_counter()
    try:
        passed, detail = fn(max_n)
    except Exception as e:
        hklogger.exception("check %s raised", name)
        passed, detail = False, "%s: %s" % (e.__class__.__name__, e)
    seconds = time.perf_counter() - start
    return CheckResult(name=name, passed=bool(passed), seconds=round(seconds, 3), detail=detail)

def run_checks(max_n, jobs=1, names=None):
    """ run the checks, in parallel when jobs > 1; results come back in check order """
    names = [name for name, _ in CHECKS if names is None or name in names]
    if jobs <= 1:
        return [run_check(name, max_n) for name in names]
    results = {}

    def collect(result):
        if isinstance(result, CheckResult):
            results[result.name] = result
        else:
            hklogger.error("check failed in a worker: %s", result)

    pool = TaskPool(jobs)
    try:
        for name in names:
            pool.submit(run_check, (name, max_n), callback=collect, error_callback=collect)
        pool.join()
    finally:
        pool.shutdown()
    return [results.get(name) or CheckResult(name=name, detail="worker failed") for name in names]

def format_table(results):
    """ the results as a pass/fail table """
    width = max([len(r.name) for r in results] + [5])
    lines = ["%-*s  %-6s %9s  %s" % (width, "check", "result", "seconds", "detail")]
    for r in results:
        lines.append("%-*s  %-6s %9.3f  %s" % (
            width, r.name, "PASS" if r.passed else "FAIL", r.seconds, r.detail))
    return "\n".join(lines)
