"""Weight systems, tensor decomposition, Levi branching, highest-weight semigroups.

Multiplicities come from the Freudenthal recursion, tensor products from the
Klimyk reflection formula; both run uniformly over any simple-root subset, so
Levi subgroups are handled by the same code with central characters riding
along unchanged.  A brute-force character-product oracle lives in the test
suite and pins these down independently.
"""

from fractions import Fraction

from .lie import LieError
from .linalg import (
    frac, is_zero, lp_solve, solve_linear, subspace_basis, subspace_contains,
    vadd, vdot, vec, vscale, vsub, vzero,
)


class ResourceError(RuntimeError):
    """A cap or memory budget was exceeded; carries any partial result."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


def _levi_key(levi):
    return None if levi is None else tuple(sorted(levi))


class _Subsystem:
    """Cached per-(root system, simple-root subset) scaled data."""

    def __init__(self, rs, levi):
        self.rs = rs
        self.indices = tuple(range(rs.num_simple)) if levi is None else tuple(sorted(levi))
        pos = rs.positive_roots(self.indices)
        self.pos_s = tuple(rs.scale(r) for r in pos)
        self.rho_s = rs.scale(rs.rho(self.indices))
        roots = [rs.simple_roots[i] for i in self.indices]
        self._span = subspace_basis(roots) if roots else []
        # exact solve matrix for simple-root coordinates on the span
        self._root_matrix = [tuple(a[i] for a in roots) for i in range(rs.ambient_dim)] if roots else None
        # label-coordinate tables for the Freudenthal hot path, scaled to ints
        k = len(self.indices)
        self.sub_cartan = [[rs.cartan[self.indices[i]][self.indices[j]]
                            for j in range(k)] for i in range(k)]
        half_norms = [rs.inner(roots[i], roots[i]) / 2 for i in range(k)]
        root_gram = [[rs.inner(roots[i], roots[j]) for j in range(k)]
                     for i in range(k)]
        from math import gcd
        scale = 1
        for x in half_norms + [y for row in root_gram for y in row]:
            d = Fraction(x).denominator
            scale = scale * d // gcd(scale, d)
        self.ip_scale = scale
        self.half_norms = [int(Fraction(x) * scale) for x in half_norms]
        self.root_gram = [[int(Fraction(x) * scale) for x in row] for row in root_gram]
        self.pos_label = []   # label increment of adding each positive root
        self.pos_rcoords = []  # simple-root coordinates of each positive root
        for alpha in pos:
            rc = self.root_coords(alpha)
            rc = tuple(int(x) for x in rc)
            self.pos_rcoords.append(rc)
            self.pos_label.append(tuple(
                sum(rc[j] * self.sub_cartan[i][j] for j in range(k)) for i in range(k)))

    def dominant_s(self, sw):
        rs = self.rs
        sign = 1
        moved = True
        while moved:
            moved = False
            for i in self.indices:
                if rs.pairing_s(sw, i) < 0:
                    sw = rs.reflect_s(sw, i)
                    sign = -sign
                    moved = True
        return sw, sign

    def is_dominant_s(self, sw):
        return all(self.rs.pairing_s(sw, i) >= 0 for i in self.indices)

    def is_regular_dominant_s(self, sw):
        return all(self.rs.pairing_s(sw, i) > 0 for i in self.indices)

    def root_coords(self, v):
        """Coordinates in the subset's simple roots; None if outside their span."""
        if self._root_matrix is None:
            return () if is_zero(vec(v)) else None
        sol = solve_linear(self._root_matrix, list(vec(v)))
        if sol is None:
            return None
        # verify (solve_linear ignores inconsistent rows only when singular)
        chk = vzero(self.rs.ambient_dim)
        for c, i in zip(sol, self.indices):
            chk = vadd(chk, vscale(c, self.rs.simple_roots[i]))
        if chk != vec(v):
            return None
        return sol

    def in_positive_root_cone(self, v):
        c = self.root_coords(v)
        return c is not None and all(x >= 0 for x in c)


_SUBSYS_CACHE = {}


def subsystem(rs, levi=None):
    key = (id(rs), _levi_key(levi))
    sub = _SUBSYS_CACHE.get(key)
    if sub is None:
        sub = _Subsystem(rs, None if levi is None else list(_levi_key(levi)))
        _SUBSYS_CACHE[key] = sub
    return sub


class WeightSystem:
    """Exact weight multiplicities of an irreducible highest-weight module."""

    def __init__(self, rs, levi, highest, entries, dominant_entries):
        self.rs = rs
        self.levi = _levi_key(levi)
        self.highest = highest
        self.entries = entries              # weight (Fraction tuple) -> positive int
        self.dominant_entries = dominant_entries

    def dim(self):
        return sum(self.entries.values())

    def scaled_entries(self):
        """entries keyed by scaled-integer tuples (cached)."""
        if not hasattr(self, "_scaled"):
            self._scaled = {self.rs.scale(w): m for w, m in self.entries.items()}
        return self._scaled

    def multiplicity(self, w):
        return self.entries.get(vec(w), 0)

    def weights(self):
        return sorted(self.entries)

    def __repr__(self):
        return f"WeightSystem(dim={self.dim()}, highest={self.highest})"


def _check_dominant_integral(rs, sub, s_lam):
    for i in sub.indices:
        p = rs.pairing_s(s_lam, i)
        if p < 0:
            raise LieError("highest weight must be dominant for the subsystem")


_WS_CACHE = {}


def weight_system(rs, lam, levi=None):
    """All weights with multiplicities of the irreducible module V(lam).

    Internals run in Dynkin-label coordinates of the subsystem: reflections
    and dominance are Cartan-matrix arithmetic on small integer tuples, and
    inner products reduce to precomputed root tables.  Within one module all
    weights share the central component, so label tuples are unique keys.
    """
    lam = vec(lam)
    key = (id(rs), _levi_key(levi), lam)
    got = _WS_CACHE.get(key)
    if got is not None:
        return got
    sub = subsystem(rs, levi)
    s_lam = rs.scale(lam)
    _check_dominant_integral(rs, sub, s_lam)

    idx = sub.indices
    k = len(idx)
    cart_cols = [tuple(sub.sub_cartan[i][j] for i in range(k)) for j in range(k)]
    half = sub.half_norms
    gram = sub.root_gram
    lab0 = tuple(rs.pairing_s(s_lam, i) for i in idx)

    def dominant_labels(lab, c):
        lab = list(lab)
        c = list(c)
        moved = True
        while moved:
            moved = False
            for i in range(k):
                x = lab[i]
                if x < 0:
                    col = cart_cols[i]
                    for j in range(k):
                        lab[j] -= x * col[j]
                    c[i] += x
                    moved = True
        return tuple(lab), tuple(c)

    # (lam + rho, alpha_j) and the quadratic correction for denominators
    lam_rho_pair = [ (lab0[j] + 1) * half[j] for j in range(k) ]

    dom_mult = {lab0: 1}
    dom_c = {lab0: (0,) * k}

    alpha_sqs = [sum(rc[i] * gram[i][j] * rc[j] for i in range(k) for j in range(k))
                 for rc in sub.pos_rcoords]

    def mult_of(lab, c):
        got = dom_mult.get(lab)
        if got is not None:
            return got
        if any(x < 0 for x in c):
            dom_mult[lab] = 0
            return 0
        num = 0
        for a in range(len(sub.pos_label)):
            dlab = sub.pos_label[a]
            drc = sub.pos_rcoords[a]
            # (mu + n*alpha, alpha) = (mu, alpha) + n (alpha, alpha), scaled
            mu_alpha = sum((lab[j] * half[j]) * drc[j] for j in range(k))
            alpha_sq = alpha_sqs[a]
            n = 1
            while True:
                up = tuple(lab[j] + n * dlab[j] for j in range(k))
                upc = tuple(c[j] - n * drc[j] for j in range(k))
                ud, uc = dominant_labels(up, upc)
                m = mult_of(ud, uc)
                if m == 0:
                    break
                num += 2 * m * (mu_alpha + n * alpha_sq)
                n += 1
        # (lam+rho)^2 - (mu+rho)^2 with mu = lam - beta, beta = sum c_j alpha_j
        lin = 2 * sum(c[j] * lam_rho_pair[j] for j in range(k))
        quad = sum(c[i] * gram[i][j] * c[j] for i in range(k) for j in range(k))
        den = lin - quad
        if den == 0:
            dom_mult[lab] = 0
            return 0
        val, rem = divmod(num, den)
        assert rem == 0 and val >= 0
        dom_mult[lab] = val
        dom_c[lab] = c
        return val

    # enumerate the support by subtracting simple roots, pruning at mult 0
    entries_lab = {}
    start = (lab0, (0,) * k)
    frontier = [start]
    seen = {lab0}
    while frontier:
        nxt = []
        for lab, c in frontier:
            dl, dc = dominant_labels(lab, c)
            m = mult_of(dl, dc)
            if m == 0:
                continue
            entries_lab[lab] = (m, c)
            for j in range(k):
                down = tuple(lab[i] - cart_cols[j][i] for i in range(k))
                if down not in seen:
                    seen.add(down)
                    c2 = list(c)
                    c2[j] += 1
                    nxt.append((down, tuple(c2)))
        frontier = nxt

    # reconstruct ambient coordinates: mu = lam - sum c_j alpha_j
    sroots = [rs._sroots[i] for i in idx]
    entries = {}
    for lab, (m, c) in entries_lab.items():
        sw = list(s_lam)
        for j in range(k):
            if c[j]:
                rj = sroots[j]
                for t in range(len(sw)):
                    sw[t] -= c[j] * rj[t]
        entries[rs.unscale(tuple(sw))] = m
    dominant_entries = {}
    for lab, m in dom_mult.items():
        if m > 0 and all(x >= 0 for x in lab):
            c = dom_c[lab]
            sw = list(s_lam)
            for j in range(k):
                if c[j]:
                    rj = sroots[j]
                    for t in range(len(sw)):
                        sw[t] -= c[j] * rj[t]
            dominant_entries[rs.unscale(tuple(sw))] = m
    ws = WeightSystem(rs, levi, lam, entries, dominant_entries)
    total = ws.dim()
    expected = weyl_dim(rs, lam, levi)
    if total != expected:
        raise AssertionError(f"weight system of {lam}: total {total} != Weyl dim {expected}")
    _WS_CACHE[key] = ws
    return ws


def weyl_dim(rs, lam, levi=None):
    """Weyl dimension formula over the subsystem's positive roots."""
    sub = subsystem(rs, levi)
    s_lam = rs.scale(vec(lam))
    num = 1
    den = 1
    for alpha in sub.pos_s:
        lr = sum((a + b) * c for a, b, c in zip(s_lam, sub.rho_s, alpha))
        rr = sum(b * c for b, c in zip(sub.rho_s, alpha))
        num *= lr
        den *= rr
    d = Fraction(num, den)
    assert d.denominator == 1 and d > 0
    return int(d)


# ---------------------------------------------------------------------------
# Klimyk tensor decomposition
# ---------------------------------------------------------------------------

_TENSOR_CACHE = {}


def tensor_decompose(rs, lam, mu, levi=None):
    """Decompose V(lam) (x) V(mu) into irreducibles: dominant weight -> mult."""
    lam, mu = vec(lam), vec(mu)
    key = (id(rs), _levi_key(levi)) + tuple(sorted([lam, mu]))
    got = _TENSOR_CACHE.get(key)
    if got is not None:
        return dict(got)
    if weyl_dim(rs, lam, levi) < weyl_dim(rs, mu, levi):
        lam, mu = mu, lam
    sub = subsystem(rs, levi)
    ws = weight_system(rs, mu, levi)
    s_lam = rs.scale(lam)
    rho = sub.rho_s
    out = {}
    for nu, m in ws.entries.items():
        s_nu = rs.scale(nu)
        t = tuple(a + b + c for a, b, c in zip(s_lam, s_nu, rho))
        dom, sign = sub.dominant_s(t)
        if sign == 0 or not sub.is_regular_dominant_s(dom):
            continue
        target = tuple(a - b for a, b in zip(dom, rho))
        out[target] = out.get(target, 0) + sign * m
    res = {}
    for sw, m in out.items():
        if m:
            assert m > 0, "Klimyk produced a negative multiplicity"
            res[rs.unscale(sw)] = m
    top = vadd(lam, mu)
    assert res.get(top) == 1, "Cartan component missing from tensor product"
    _TENSOR_CACHE[key] = dict(res)
    return res


def tensor_components(rs, lam, mu, levi=None):
    """Highest weights only (presence set) of V(lam) (x) V(mu)."""
    return set(tensor_decompose(rs, lam, mu, levi))


# ---------------------------------------------------------------------------
# branching to a Levi subgroup
# ---------------------------------------------------------------------------

class IrrepLabel:
    """An irreducible of the full group (levi=None) or of a Levi subgroup."""

    def __init__(self, highest_weight, levi=None):
        self.highest_weight = vec(highest_weight)
        self.levi = _levi_key(levi)

    def __repr__(self):
        return f"IrrepLabel({self.highest_weight}, levi={self.levi})"

    def __eq__(self, other):
        return (isinstance(other, IrrepLabel)
                and self.highest_weight == other.highest_weight and self.levi == other.levi)

    def __hash__(self):
        return hash((self.highest_weight, self.levi))


def branch_to_levi(rs, lam, levi):
    """Decompose V(lam) as a module over the Levi of the given simple-root subset.

    Returns a sorted list of (highest weight, multiplicity); contains lam with
    multiplicity 1.  The multiset union of the Levi weight systems equals the
    restricted weight system (asserted).
    """
    levi = _levi_key(levi) or ()
    sub = subsystem(rs, levi)
    full = weight_system(rs, vec(lam))
    remaining = {rs.scale(w): m for w, m in full.entries.items()}
    total = sum(remaining.values())
    out = {}
    while total:
        cand = max((sw for sw, m in remaining.items() if m > 0),
                   key=lambda sw: (vdot(sw, sub.rho_s), sw))
        assert sub.is_dominant_s(cand), "peeled leader is not Levi-dominant"
        w = rs.unscale(cand)
        mult = remaining[cand]
        ws = weight_system(rs, w, levi)
        for nu, m in ws.entries.items():
            s_nu = rs.scale(nu)
            left = remaining.get(s_nu, 0) - m * mult
            assert left >= 0, "branching bookkeeping went negative"
            remaining[s_nu] = left
            total -= m * mult
        out[w] = out.get(w, 0) + mult
    assert out.get(vec(lam)) == 1
    return sorted(out.items())


def lgens_generators(rs, lams, lam0, levi):
    """Shifted generator list for the slice semigroup: the other highest
    weights shifted to the apex plus the negated simple roots outside the Levi."""
    lams = [vec(w) for w in lams]
    lam0 = vec(lam0)
    if lam0 not in lams:
        raise LieError("apex weight must be one of the highest weights")
    idx = set(_levi_key(levi) or ())
    gens = []
    for w in lams:
        if w != lam0:
            gens.append(vsub(w, lam0))
    for j in range(rs.num_simple):
        if j not in idx:
            gens.append(vscale(-1, rs.simple_roots[j]))
    sub = subsystem(rs, sorted(idx))
    for g in gens:
        assert sub.is_dominant_s(rs.scale(g)), f"generator {g} is not Levi-dominant"
    return gens


# ---------------------------------------------------------------------------
# highest-weight semigroup exploration
# ---------------------------------------------------------------------------

class HighestWeightSemigroup:
    """Degree-capped exploration of highest weights of tensor monomials."""

    def __init__(self, rs, levi, generators, explored, degree_cap):
        self.rs = rs
        self.levi = _levi_key(levi)
        self.generators = [vec(g) for g in generators]
        self.explored = explored           # weight -> smallest total degree found
        self.degree_cap = degree_cap

    def __contains__(self, w):
        return vec(w) in self.explored

    def degree(self, w):
        return self.explored.get(vec(w))


def generate_semigroup(rs, generators, cap, levi=None, budget=200000):
    """All highest weights of tensor monomials of the generators with total
    degree <= cap.  Presence only; each weight recorded at its minimal degree."""
    if cap < 1:
        raise LieError("cap must be at least 1")
    gens = [vec(g) for g in generators]
    explored = {}
    zero = vzero(rs.ambient_dim)
    level = {zero}  # degree-0 seed (empty monomial), not itself recorded
    for d in range(1, cap + 1):
        nxt = set()
        for nu in level:
            for g in gens:
                nxt |= tensor_components(rs, nu, g, levi)
        for w in nxt:
            if w not in explored:
                explored[w] = d
        if len(explored) > budget:
            raise ResourceError(
                f"semigroup exploration exceeded budget at degree {d}",
                partial=HighestWeightSemigroup(rs, levi, gens, explored, d))
        level = nxt
        if not level:
            break
    return HighestWeightSemigroup(rs, levi, gens, explored, cap)


def semigroup_member(rs, gens, target, levi=None, fiber_limit=4000, set_limit=60000):
    """Exact membership of target in the semigroup of highest weights of all
    tensor monomials of the generators.

    Works when the generator degrees are pinned down by the quotient modulo
    the Levi root span (finitely many candidate degree vectors): returns
    True/False with certainty.  Returns None when the search is unbounded or
    exceeds its limits.
    """
    gens = [vec(g) for g in gens]
    target = vec(target)
    if is_zero(target):
        return True
    sub = subsystem(rs, levi)
    n = rs.ambient_dim
    span = sub._span
    comp = _complement_coords(span, n)
    q_gens = [comp(g) for g in gens]
    q_t = comp(target)
    solutions = _nonneg_integer_solutions(q_gens, q_t, limit=fiber_limit)
    if solutions is None:
        return None
    for ks in solutions:
        factors = []
        for g, k in zip(gens, ks):
            factors += [g] * k
        if not factors:
            if is_zero(target):
                return True
            continue
        lead = vzero(n)
        for f in factors:
            lead = vadd(lead, f)
        if not sub.in_positive_root_cone(vsub(lead, target)):
            continue
        if _monomial_contains(rs, sub, factors, target, levi, set_limit):
            return True
    return False


def _complement_coords(span, n):
    """Coordinates of the quotient space modulo a subspace."""
    basis = list(span)
    extra = []
    for i in range(n):
        e = tuple(Fraction(1) if j == i else Fraction(0) for j in range(n))
        if not subspace_contains(subspace_basis(basis + extra), e):
            extra.append(e)
    full = basis + extra
    cols = [tuple(v[i] for v in full) for i in range(n)]

    def coords(v):
        sol = solve_linear(cols, list(vec(v)))
        return tuple(sol[len(basis):])
    return coords


def _nonneg_integer_solutions(q_gens, q_t, limit):
    """All k >= 0 integer with sum k_i q_gens_i = q_t; None if unbounded/too big."""
    s = len(q_gens)
    if s == 0:
        return [()] if is_zero(q_t) else []
    # bounded iff the recession cone {k >= 0 : sum k q = 0} is trivial
    r = lp_solve([1] * s,
                 a_ub=[tuple(-Fraction(1) if j == i else Fraction(0) for j in range(s))
                       for i in range(s)],
                 b_ub=[0] * s,
                 a_eq=[tuple(q[i] for q in q_gens) for i in range(len(q_t))],
                 b_eq=[0] * len(q_t))
    if r.status != 'optimal' or r.value != 0:
        return None
    sols = []

    def rec(prefix, rem):
        if len(sols) > limit:
            raise ResourceError("degree fiber enumeration exceeded its limit")
        i = len(prefix)
        if i == s:
            if is_zero(rem):
                sols.append(tuple(prefix))
            return
        # max k_i: LP on the tail
        tail = q_gens[i:]
        obj = [Fraction(1)] + [Fraction(0)] * (len(tail) - 1)
        r = lp_solve(obj,
                     a_ub=[tuple(-Fraction(1) if j == a else Fraction(0) for j in range(len(tail)))
                           for a in range(len(tail))],
                     b_ub=[0] * len(tail),
                     a_eq=[tuple(q[c] for q in tail) for c in range(len(rem))],
                     b_eq=list(rem))
        if r.status == 'infeasible':
            return
        assert r.status == 'optimal'
        kmax = int(r.value)
        for k in range(kmax + 1):
            rec(prefix + [k], vsub(rem, vscale(k, q_gens[i])))

    try:
        rec([], vec(q_t))
    except ResourceError:
        return None
    return sols


def _monomial_contains(rs, sub, factors, target, levi, set_limit):
    """Does the tensor product of the given irreducibles contain V(target)?"""
    n = rs.ambient_dim
    suffix = [vzero(n)]
    for f in reversed(factors):
        suffix.append(vadd(suffix[-1], f))
    suffix.reverse()  # suffix[i] = sum of factors[i:]
    current = {vzero(n)}
    for i, f in enumerate(factors):
        nxt = set()
        for nu in current:
            for compw in tensor_components(rs, nu, f, levi):
                # prune: must still dominate the target after adding the rest
                reach = vadd(compw, suffix[i + 1])
                if sub.in_positive_root_cone(vsub(reach, target)):
                    nxt.add(compw)
        if len(nxt) > set_limit:
            raise ResourceError("tensor fold exceeded its set limit")
        current = nxt
        if not current:
            return False
    return target in current


def plain_semigroup_member(gens, target, cone_facets_rows, grading):
    """Membership of target in the plain (additive) semigroup of the generators.

    cone_facets_rows: facet covectors of cone(gens) (membership pruning);
    grading: covector strictly positive on the cone minus 0 (termination).
    """
    gens = [vec(g) for g in gens]
    target = vec(target)
    memo = {}

    def inside(v):
        return all(vdot(f, v) >= 0 for f in cone_facets_rows)

    def rec(v):
        if is_zero(v):
            return True
        key = v
        if key in memo:
            return memo[key]
        memo[key] = False  # cycle guard; grading strictly decreases anyway
        ok = False
        for g in gens:
            w = vsub(v, g)
            if inside(w) and vdot(grading, w) >= 0:
                if rec(w):
                    ok = True
                    break
        memo[key] = ok
        return ok

    return rec(target)


# ---------------------------------------------------------------------------
# tensor-power witness for chamber points
# ---------------------------------------------------------------------------

def moment_witness(rs, lams, mu, cap=None):
    """Smallest n with V(n mu) inside the n-th tensor power of the sum of the
    V(lam_i); None when the cap is exhausted.

    mu must lie in the dominant part of the weight polytope (checked).
    """
    from .lie import weyl_orbit
    lams = [vec(w) for w in lams]
    mu = vec(mu)
    if not rs.is_dominant(mu):
        raise LieError("witness point must be dominant")
    pts = []
    for w in lams:
        pts.extend(weyl_orbit(rs, w))
    from .linalg import in_convex_hull
    if not in_convex_hull(mu, pts):
        raise LieError("witness point must lie in the weight polytope")
    if cap is None:
        dim_v = sum(weyl_dim(rs, w) for w in lams)
        cap = max(dim_v, 1)
    level = {vzero(rs.ambient_dim)}
    for n in range(1, cap + 1):
        nxt = set()
        for nu in level:
            for lam in lams:
                nxt |= tensor_components(rs, nu, lam)
        target = vscale(n, mu)
        if target in nxt:
            return n
        level = nxt
    return None
