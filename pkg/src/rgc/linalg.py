"""Exact rational linear algebra: RREF, integer lattices (HNF), LP, double description.

Everything here works over Fraction / int tuples.  No floating point anywhere:
face and vertex decisions downstream are exact or worthless.
"""

from fractions import Fraction
from math import gcd


def frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


def vec(xs):
    return tuple(frac(x) for x in xs)


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vscale(c, a):
    return tuple(c * x for x in a)


def vdot(a, b):
    return sum(x * y for x, y in zip(a, b))


def vzero(n):
    return (Fraction(0),) * n


def is_zero(a):
    return all(x == 0 for x in a)


def clear_denoms(a):
    """Scale a rational vector to an integer vector; returns (int tuple, multiplier)."""
    m = 1
    for x in a:
        d = frac(x).denominator
        m = m * d // gcd(m, d)
    return tuple(int(frac(x) * m) for x in a), m


def primitive(a):
    """Primitive integer vector on the same ray (sign preserved).  Zero maps to zero."""
    ints, _ = clear_denoms(a)
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        return tuple(0 for _ in a)
    return tuple(x // g for x in ints)


def rref(rows):
    """Reduced row echelon form over Fraction.  Returns (pivot column list, rows)."""
    mat = [list(map(frac, r)) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    out = [tuple(row) for row in mat[:r]]
    return pivots, out


def rank(rows):
    return len(rref(rows)[1])


def subspace_basis(vectors):
    """Canonical (RREF) basis of the span of the given vectors."""
    return rref(vectors)[1]


def subspace_contains(basis, v):
    if is_zero(v):
        return True
    if not basis:
        return False
    return rank(list(basis) + [v]) == len(basis)


def subspace_intersection(b1, b2):
    """Basis of span(b1) & span(b2)."""
    if not b1 or not b2:
        return []
    n = len(b1[0])
    # x = sum s_i b1_i = sum t_j b2_j: kernel of the column-stacked system.
    cols = []
    for i in range(n):
        cols.append(tuple([b1[k][i] for k in range(len(b1))] +
                          [-b2[k][i] for k in range(len(b2))]))
    ker = kernel_basis(cols)
    out = []
    for coef in ker:
        x = vzero(n)
        for k in range(len(b1)):
            x = vadd(x, vscale(coef[k], b1[k]))
        if not is_zero(x):
            out.append(x)
    return subspace_basis(out)


def kernel_basis(rows):
    """Basis of {x : rows . x = 0} (right kernel), rows over the same length."""
    if not rows:
        return []
    n = len(rows[0])
    pivots, red = rref(rows)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        x = [Fraction(0)] * n
        x[fc] = Fraction(1)
        for ri, pc in enumerate(pivots):
            x[pc] = -red[ri][fc]
        basis.append(tuple(x))
    return basis


def solve_linear(rows, rhs):
    """One exact solution x of rows . x = rhs, or None if inconsistent."""
    if not rows:
        return None
    n = len(rows[0])
    aug = [list(map(frac, r)) + [frac(b)] for r, b in zip(rows, rhs)]
    pivots, red = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for ri, pc in enumerate(pivots):
        x[pc] = red[ri][n]
    return tuple(x)


def orth_complement(basis, ambient_dim, gram=None):
    """Basis of the orthogonal complement of span(basis) w.r.t. an inner product.

    gram is the Gram matrix of the inner product in the working coordinates
    (None means the standard dot product).  The complement is taken inside the
    full working space of dimension ambient_dim.
    """
    if not basis:
        return [tuple(Fraction(1) if j == i else Fraction(0) for j in range(ambient_dim))
                for i in range(ambient_dim)]
    rows = []
    for b in basis:
        if gram is None:
            rows.append(b)
        else:
            rows.append(tuple(vdot(b, col) for col in zip(*gram)))
    return kernel_basis(rows)


# ---------------------------------------------------------------------------
# Integer lattice machinery (row-style Hermite normal form)
# ---------------------------------------------------------------------------

def hnf(rows):
    """Row-style Hermite normal form of an integer matrix (list of int tuples).

    Returns the list of nonzero HNF rows: echelon, positive pivots, entries
    above a pivot reduced to [0, pivot).
    """
    mat = [list(int(x) for x in r) for r in rows if any(r)]
    if not mat:
        return []
    ncols = len(mat[0])
    r = 0
    for c in range(ncols):
        # find a row with nonzero entry in column c at or below r
        piv = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        # eliminate below via gcd steps
        for i in range(r + 1, len(mat)):
            while mat[i][c] != 0:
                q = mat[r][c] // mat[i][c]
                mat[r] = [a - q * b for a, b in zip(mat[r], mat[i])]
                mat[r], mat[i] = mat[i], mat[r]
        if mat[r][c] < 0:
            mat[r] = [-a for a in mat[r]]
        # reduce entries above the pivot
        for i in range(r):
            q = mat[i][c] // mat[r][c]
            if q:
                mat[i] = [a - q * b for a, b in zip(mat[i], mat[r])]
        r += 1
        if r == len(mat):
            break
    return [tuple(row) for row in mat[:r] if any(row)]


class Lattice:
    """A finitely generated subgroup of Q^n, stored as d * (integer HNF rows)."""

    def __init__(self, generators, denom=1):
        # generators: iterable of rational vectors; internal basis rows are
        # integer vectors to be divided by self.denom.
        gens = [vec(g) for g in generators]
        m = int(denom)
        for g in gens:
            for x in g:
                d = x.denominator
                m = m * d // gcd(m, d)
        rows = [tuple(int(x * m) for x in g) for g in gens]
        self.denom = m
        self.rows = hnf(rows)
        self.dim = len(gens[0]) if gens else 0

    @property
    def rank(self):
        return len(self.rows)

    def basis(self):
        """Basis as rational vectors."""
        return [tuple(Fraction(x, self.denom) for x in r) for r in self.rows]

    def contains(self, v):
        v = vec(v)
        target = [frac(x) * self.denom for x in v]
        if all(x == 0 for x in target):
            return True
        if any(x.denominator != 1 for x in target):
            return False
        coeffs = solve_in_rows(self.rows, tuple(int(x) for x in target))
        return coeffs is not None

    def coords(self, v):
        """Integer coordinates of v in the HNF basis, or None."""
        target = [frac(x) * self.denom for x in vec(v)]
        if any(x.denominator != 1 for x in target):
            return None
        return solve_in_rows(self.rows, tuple(int(x) for x in target))

    def from_coords(self, coeffs):
        x = vzero(self.dim)
        for c, r in zip(coeffs, self.rows):
            x = vadd(x, vscale(Fraction(c, self.denom), vec(r)))
        return x

    def __eq__(self, other):
        return isinstance(other, Lattice) and self.primitive_rows() == other.primitive_rows()

    def primitive_rows(self):
        # canonical: rational HNF basis rows
        return tuple(self.basis())

    def __hash__(self):
        return hash(self.primitive_rows())


def solve_in_rows(rows, target):
    """Integer coefficients c with sum c_i rows_i = target, or None.

    rows should be in HNF (echelon) form; works for any echelon integer rows.
    """
    if not rows:
        return None if any(target) else ()
    t = list(target)
    n = len(t)
    coeffs = []
    for r in rows:
        # leading column of r
        lead = next((j for j, x in enumerate(r) if x != 0), None)
        if lead is None:
            coeffs.append(0)
            continue
        if t[lead] % r[lead] != 0:
            return None
        c = t[lead] // r[lead]
        coeffs.append(c)
        for j in range(n):
            t[j] -= c * r[j]
    if any(t):
        return None
    return tuple(coeffs)


def lattice_sum(a, b):
    return Lattice(a.basis() + b.basis())


def int_kernel(rows):
    """Basis of the integer kernel {x in Z^n : rows . x = 0} via unimodular
    column reduction; the result is a saturated lattice basis."""
    if not rows:
        return []
    m = len(rows)
    n = len(rows[0])
    # clear denominators row by row (does not change the kernel)
    A = []
    for r in rows:
        ints, _ = clear_denoms(vec(r))
        A.append(list(ints))
    U = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def col_addmul(dst, src, q):
        for i in range(m):
            A[i][dst] += q * A[i][src]
        for i in range(n):
            U[i][dst] += q * U[i][src]

    def col_swap(a, b):
        for i in range(m):
            A[i][a], A[i][b] = A[i][b], A[i][a]
        for i in range(n):
            U[i][a], U[i][b] = U[i][b], U[i][a]

    pivot = 0
    for i in range(m):
        if pivot >= n:
            break
        while True:
            nz = [j for j in range(pivot, n) if A[i][j] != 0]
            if not nz:
                j0 = None
                break
            jmin = min(nz, key=lambda j: abs(A[i][j]))
            if len(nz) == 1:
                j0 = jmin
                break
            for j in nz:
                if j != jmin:
                    q = A[i][j] // A[i][jmin]
                    if q:
                        col_addmul(j, jmin, -q)
            nz2 = [j for j in range(pivot, n) if A[i][j] != 0]
            if len(nz2) == 1:
                j0 = nz2[0]
                break
        if j0 is not None:
            if j0 != pivot:
                col_swap(j0, pivot)
            pivot += 1
    return [tuple(U[i][j] for i in range(n)) for j in range(pivot, n)]


def lattice_intersect_subspace(lat, space_basis):
    """Sublattice {v in lat : v in span(space_basis)}, computed exactly."""
    rows = _lattice_in_span(lat, list(space_basis))
    return Lattice(rows) if rows else Lattice([vzero(lat.dim)])


def _lattice_in_span(lat, span):
    """Basis of {v in lat : v in span}: the integer kernel of the pairing of
    the lattice basis against the orthogonal complement of the span."""
    basis = lat.basis()
    if not basis:
        return []
    if not span:
        return []
    comp = orth_complement(list(span), lat.dim)
    if not comp:
        return basis
    rows = [tuple(vdot(b, w) for b in basis) for w in comp]
    ker = int_kernel(rows)
    out = []
    for coef in ker:
        x = vzero(lat.dim)
        for c, b in zip(coef, basis):
            x = vadd(x, vscale(c, b))
        if not is_zero(x):
            out.append(x)
    return out


def lattice_index(sub, sup):
    """Index [sup : sub] for full-rank sublattice; None if ranks differ."""
    if sub.rank != sup.rank:
        return None
    # det ratio via coordinates of sub basis in sup basis
    mats = []
    for b in sub.basis():
        c = sup.coords(b)
        if c is None:
            return None
        mats.append(c)
    return abs(int_det(mats))


def int_det(rows):
    """Determinant of a square integer (or rational) matrix, exact."""
    mat = [list(map(frac, r)) for r in rows]
    n = len(mat)
    det = Fraction(1)
    for c in range(n):
        piv = None
        for i in range(c, n):
            if mat[i][c] != 0:
                piv = i
                break
        if piv is None:
            return 0
        if piv != c:
            mat[c], mat[piv] = mat[piv], mat[c]
            det = -det
        det *= mat[c][c]
        inv = 1 / mat[c][c]
        for i in range(c + 1, n):
            if mat[i][c] != 0:
                f = mat[i][c] * inv
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[c])]
    if det.denominator == 1:
        return int(det)
    return det


# ---------------------------------------------------------------------------
# Exact LP: two-phase primal simplex with Bland's rule
# ---------------------------------------------------------------------------

class LPResult:
    def __init__(self, status, x=None, value=None):
        self.status = status  # 'optimal' | 'unbounded' | 'infeasible'
        self.x = x
        self.value = value


def lp_solve(c, a_ub=None, b_ub=None, a_eq=None, b_eq=None, maximize=True):
    """Solve max (or min) c.x subject to a_ub x <= b_ub, a_eq x = b_eq, x free.

    All data rational; exact two-phase simplex, Bland's rule (no cycling).
    """
    a_ub = [vec(r) for r in (a_ub or [])]
    b_ub = [frac(x) for x in (b_ub or [])]
    a_eq = [vec(r) for r in (a_eq or [])]
    b_eq = [frac(x) for x in (b_eq or [])]
    c = vec(c)
    n = len(c)
    if not maximize:
        res = lp_solve(vscale(-1, c), a_ub, b_ub, a_eq, b_eq, maximize=True)
        if res.status == 'optimal':
            res.value = -res.value
        return res

    # free x -> x = u - v, u,v >= 0
    def split(row):
        return list(row) + [-x for x in row]

    rows = []
    rhs = []
    kinds = []  # 'ub' or 'eq'
    for r, b in zip(a_ub, b_ub):
        rows.append(split(r))
        rhs.append(b)
        kinds.append('ub')
    for r, b in zip(a_eq, b_eq):
        rows.append(split(r))
        rhs.append(b)
        kinds.append('eq')
    nv = 2 * n
    # normalize rhs >= 0
    for i in range(len(rows)):
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]
            if kinds[i] == 'ub':
                kinds[i] = 'lb'  # became >=
    # add slacks / surplus + artificials
    m = len(rows)
    tab = []
    basis = []
    n_slack = sum(1 for k in kinds if k in ('ub', 'lb'))
    total = nv + n_slack + m  # artificials for every row (simple, exact)
    si = 0
    for i, row in enumerate(rows):
        ext = row + [Fraction(0)] * (n_slack + m)
        if kinds[i] == 'ub':
            ext[nv + si] = Fraction(1)
            si += 1
        elif kinds[i] == 'lb':
            ext[nv + si] = Fraction(-1)
            si += 1
        ext[nv + n_slack + i] = Fraction(1)
        tab.append(ext)
        basis.append(nv + n_slack + i)
    rhs = list(rhs)

    def pivot(tab, rhs, basis, r, col):
        pv = tab[r][col]
        tab[r] = [x / pv for x in tab[r]]
        rhs[r] = rhs[r] / pv
        for i in range(len(tab)):
            if i != r and tab[i][col] != 0:
                f = tab[i][col]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[r])]
                rhs[i] = rhs[i] - f * rhs[r]
        basis[r] = col

    def run_simplex(obj, tab, rhs, basis, ncols):
        # obj: objective row (to maximize), reduced against basis
        z = list(obj)
        zval = Fraction(0)
        for r, bv in enumerate(basis):
            if z[bv] != 0:
                f = z[bv]
                z = [x - f * y for x, y in zip(z, tab[r])]
                zval -= f * rhs[r]
        while True:
            col = None
            for j in range(ncols):
                if z[j] > 0:
                    col = j
                    break
            if col is None:
                return 'optimal', z, -zval
            # ratio test, Bland
            best = None
            for i in range(len(tab)):
                if tab[i][col] > 0:
                    ratio = rhs[i] / tab[i][col]
                    if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                        best = (ratio, i)
            if best is None:
                return 'unbounded', z, None
            pivot(tab, rhs, basis, best[1], col)
            zrow_f = z[col]
            z = [x - zrow_f * y for x, y in zip(z, tab[best[1]])]
            zval -= zrow_f * rhs[best[1]]

    # phase 1: minimize sum of artificials = maximize -(sum art)
    obj1 = [Fraction(0)] * total
    for j in range(nv + n_slack, total):
        obj1[j] = Fraction(-1)
    status, z, val = run_simplex(obj1, tab, rhs, basis, total)
    if val is None or val < 0:
        return LPResult('infeasible')
    # drive artificials out of basis if possible
    for r in range(len(basis)):
        if basis[r] >= nv + n_slack:
            for j in range(nv + n_slack):
                if tab[r][j] != 0:
                    pivot(tab, rhs, basis, r, j)
                    break
    if any(bv >= nv + n_slack and rhs[r] != 0 for r, bv in enumerate(basis)):
        return LPResult('infeasible')
    # phase 2 on original objective, artificial columns frozen
    obj2 = list(c) + [-x for x in c] + [Fraction(0)] * (n_slack + m)
    ncols2 = nv + n_slack
    status, z, val = run_simplex(obj2, tab, rhs, basis, ncols2)
    if status == 'unbounded':
        return LPResult('unbounded')
    x = [Fraction(0)] * total
    for r, bv in enumerate(basis):
        x[bv] = rhs[r]
    sol = tuple(x[j] - x[n + j] for j in range(n))
    return LPResult('optimal', sol, vdot(c, sol))


def in_convex_hull(point, points):
    """Exact test: point in conv(points)?"""
    pts = [vec(p) for p in points]
    p = vec(point)
    if not pts:
        return False
    k = len(pts)
    a_eq = []
    b_eq = []
    for i in range(len(p)):
        a_eq.append(tuple(q[i] for q in pts))
        b_eq.append(p[i])
    a_eq.append((Fraction(1),) * k)
    b_eq.append(Fraction(1))
    # c >= 0 via -c <= 0
    a_ub = []
    b_ub = []
    for j in range(k):
        row = [Fraction(0)] * k
        row[j] = Fraction(-1)
        a_ub.append(tuple(row))
        b_ub.append(Fraction(0))
    res = lp_solve([Fraction(0)] * k, a_ub, b_ub, a_eq, b_eq)
    return res.status == 'optimal'


# ---------------------------------------------------------------------------
# Double description: extreme rays of {x : ineq . x >= 0, eq . x = 0}
# ---------------------------------------------------------------------------

def extreme_rays(inequalities, equalities, dim):
    """Extreme rays and lineality of a polyhedral cone given by halfspaces.

    Returns (rays, lineality): primitive integer tuples; the cone equals
    span(lineality) + cone(rays).
    """
    ineqs = [vec(a) for a in inequalities]
    eqs = [vec(a) for a in equalities]
    # reduce modulo equalities: work inside their kernel
    if eqs:
        ker = kernel_basis(eqs)
    else:
        ker = [tuple(Fraction(1) if j == i else Fraction(0) for j in range(dim)) for i in range(dim)]
    if not ker:
        return [], []
    red_dim = len(ker)
    red_ineqs = [tuple(vdot(a, k) for k in ker) for a in ineqs]

    # DD in reduced coordinates
    lineality = [tuple(Fraction(1) if j == i else Fraction(0) for j in range(red_dim))
                 for i in range(red_dim)]
    rays = []          # list of (vector, tight index set)
    processed = []
    for idx, a in enumerate(red_ineqs):
        if is_zero(a):
            processed.append(a)
            continue
        # split lineality
        l_nz = None
        for l in lineality:
            if vdot(a, l) != 0:
                l_nz = l
                break
        if l_nz is not None:
            if vdot(a, l_nz) < 0:
                l_nz = vscale(-1, l_nz)
            new_lin = []
            for l in lineality:
                if l is l_nz:
                    continue
                coef = vdot(a, l) / vdot(a, l_nz)
                new_lin.append(vsub(l, vscale(coef, l_nz)))
            lineality = [l for l in new_lin if not is_zero(l)]
            new_rays = []
            for (r, tight) in rays:
                coef = vdot(a, r) / vdot(a, l_nz)
                r2 = vsub(r, vscale(coef, l_nz))
                new_rays.append((r2, tight | {len(processed)} if vdot(a, r2) == 0 else tight))
            rays = new_rays
            rays.append((l_nz, frozenset(i for i, p in enumerate(processed) if vdot(p, l_nz) == 0)))
            processed.append(a)
            continue
        pos, zero, neg = [], [], []
        for (r, tight) in rays:
            v = vdot(a, r)
            if v > 0:
                pos.append((r, tight))
            elif v == 0:
                zero.append((r, tight | {len(processed)}))
            else:
                neg.append((r, tight))
        new_rays = [(r, t) for (r, t) in pos] + zero
        for (rp, tp) in pos:
            for (rn, tn) in neg:
                common = tp & tn
                # adjacency: no third ray tight on all of common
                adjacent = True
                for (r3, t3) in rays:
                    if r3 is rp or r3 is rn:
                        continue
                    if common <= t3:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                vp = vdot(a, rp)
                vn = vdot(a, rn)
                comb = vsub(vscale(vp, rn), vscale(vn, rp))
                comb = vec(primitive(comb))
                if is_zero(comb):
                    continue
                new_rays.append((comb, common | {len(processed)}))
        rays = []
        seen = set()
        for (r, t) in new_rays:
            key = primitive(r)
            if key not in seen:
                seen.add(key)
                rays.append((vec(key), t))
        processed.append(a)

    # map back to ambient coordinates
    def back(v):
        x = vzero(dim)
        for c, k in zip(v, ker):
            x = vadd(x, vscale(c, k))
        return primitive(x)

    out_rays = sorted(set(back(r) for (r, _) in rays if not is_zero(back(r))))
    out_lin = []
    lin_amb = [back(l) for l in lineality]
    lin_amb = [l for l in lin_amb if any(l)]
    # canonical lineality basis
    if lin_amb:
        out_lin = [primitive(r) for r in subspace_basis([vec(l) for l in lin_amb])]
    # drop rays inside the lineality span
    if out_lin:
        lin_basis = [vec(l) for l in out_lin]
        out_rays = [r for r in out_rays if not subspace_contains(lin_basis, vec(r))]
    return out_rays, out_lin


def cone_facets(generators, dim):
    """Facet inequalities and span equations of cone(generators).

    Returns (facets, span_eqs): primitive integer covectors with
    cone = {x : f.x >= 0 for f in facets, e.x = 0 for e in span_eqs}.
    """
    gens = [vec(g) for g in generators]
    gens = [g for g in gens if not is_zero(g)]
    if not gens:
        eqs = [tuple(Fraction(1) if j == i else Fraction(0) for j in range(dim)) for i in range(dim)]
        return [], [primitive(e) for e in eqs]
    span = subspace_basis(gens)
    span_eqs = [primitive(w) for w in orth_complement(span, dim)]
    rays, lin = extreme_rays(gens, [], dim)  # dual cone {y : y.g >= 0}
    facets = [r for r in rays]
    # facets lie in the dual; restrict to the span: each facet covector is only
    # meaningful modulo span_eqs, keep them as-is (they already annihilate
    # nothing extra since extreme_rays worked in full space).
    return facets, span_eqs
