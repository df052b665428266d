"""Exact rational polyhedral geometry over the character lattice.

All polytope/cone work happens in integer coordinates relative to a basis of
the character lattice (the "frame"), so lattice questions are plain integer
arithmetic.  Covectors live in the dual basis; the natural pairing is the dot
product.
"""

from fractions import Fraction

from .linalg import (
    Lattice, extreme_rays, cone_facets, frac, hnf, in_convex_hull, is_zero,
    primitive, rank as mat_rank, solve_linear, subspace_basis, vadd, vdot,
    vec, vscale, vsub, vzero,
)


class GeometryError(ValueError):
    pass


class CapabilityError(RuntimeError):
    """The input is outside the supported size envelope."""


class LatticeFrame:
    """Integer coordinates on a character lattice, relative to a base point."""

    def __init__(self, lattice_basis, origin):
        self.basis = [vec(b) for b in lattice_basis]   # ambient vectors, HNF rows
        self.rank = len(self.basis)
        self.origin = vec(origin)
        self.ambient_dim = len(self.origin)
        self._cols = [tuple(b[i] for b in self.basis) for i in range(self.ambient_dim)]
        self._gram = [tuple(vdot(a, b) for b in self.basis) for a in self.basis]

    def vec_to_frame(self, v):
        """Frame coordinates of an ambient direction vector (must lie in the span)."""
        sol = solve_linear(self._cols, list(vec(v)))
        if sol is None:
            raise GeometryError("vector outside the character lattice span")
        chk = vzero(self.ambient_dim)
        for c, b in zip(sol, self.basis):
            chk = vadd(chk, vscale(c, b))
        if chk != vec(v):
            raise GeometryError("vector outside the character lattice span")
        return sol

    def point_to_frame(self, p):
        return self.vec_to_frame(vsub(vec(p), self.origin))

    def vec_from_frame(self, x):
        v = vzero(self.ambient_dim)
        for c, b in zip(x, self.basis):
            v = vadd(v, vscale(c, b))
        return v

    def point_from_frame(self, x):
        return vadd(self.origin, self.vec_from_frame(x))

    def int_vec(self, v):
        x = self.vec_to_frame(v)
        if any(frac(c).denominator != 1 for c in x):
            raise GeometryError(f"{v} is not a lattice vector")
        return tuple(int(c) for c in x)

    def covector(self, ambient_form):
        """Frame covector of the functional (ambient_form, .) under the dot product."""
        return tuple(vdot(vec(ambient_form), b) for b in self.basis)

    def covector_to_ambient(self, g):
        """The span vector representing a frame covector via the inner product."""
        sol = solve_linear(self._gram, list(vec(g)))
        v = vzero(self.ambient_dim)
        for c, b in zip(sol, self.basis):
            v = vadd(v, vscale(c, b))
        return v


# ---------------------------------------------------------------------------
# cones
# ---------------------------------------------------------------------------

class RationalCone:
    """Polyhedral cone in frame coordinates with both descriptions kept exact."""

    def __init__(self, dim, generators, lineality, facet_normals, span_eqs):
        self.dim = dim
        self.generators = tuple(sorted(tuple(int(x) for x in g) for g in generators))
        self.lineality = tuple(sorted(tuple(int(x) for x in l) for l in lineality))
        self.facet_normals = tuple(sorted(tuple(int(x) for x in f) for f in facet_normals))
        self.span_eqs = tuple(sorted(tuple(int(x) for x in e) for e in span_eqs))

    @classmethod
    def from_generators(cls, gens, dim):
        gens = [primitive(g) for g in gens if not is_zero(vec(g))]
        facets, span_eqs = cone_facets([vec(g) for g in gens], dim)
        rays, lin = extreme_rays([vec(f) for f in facets], [vec(e) for e in span_eqs], dim)
        return cls(dim, rays, lin, facets, span_eqs)

    @classmethod
    def from_halfspaces(cls, ineqs, eqs, dim):
        rays, lin = extreme_rays([vec(a) for a in ineqs], [vec(e) for e in eqs], dim)
        gens = [vec(r) for r in rays] + [vec(l) for l in lin] + [vscale(-1, vec(l)) for l in lin]
        if gens:
            facets, span_eqs = cone_facets(gens, dim)
        else:
            facets, span_eqs = [], [primitive(e) for e in
                                    subspace_basis([tuple(Fraction(1) if j == i else Fraction(0)
                                                          for j in range(dim)) for i in range(dim)])]
        return cls(dim, rays, lin, facets, span_eqs)

    @property
    def lineality_dim(self):
        return len(self.lineality)

    def is_pointed(self):
        return not self.lineality

    def space_dim(self):
        return self.dim - len(self.span_eqs)

    def is_simplicial(self):
        return self.is_pointed() and len(self.generators) == self.space_dim()

    def contains(self, v):
        v = vec(v)
        return (all(vdot(vec(f), v) >= 0 for f in self.facet_normals)
                and all(vdot(vec(e), v) == 0 for e in self.span_eqs))

    def strictly_contains(self, v):
        """Relative-interior membership."""
        v = vec(v)
        return (all(vdot(vec(f), v) > 0 for f in self.facet_normals)
                and all(vdot(vec(e), v) == 0 for e in self.span_eqs))

    def dual(self):
        ineqs = list(self.generators)
        eqs = list(self.lineality)
        return RationalCone.from_halfspaces(ineqs, eqs, self.dim)

    def key(self):
        return (self.generators, self.lineality)

    def __eq__(self, other):
        return isinstance(other, RationalCone) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"RationalCone(dim={self.dim}, rays={len(self.generators)}, lin={self.lineality_dim})"


def dual_cone(cone):
    return cone.dual()


# ---------------------------------------------------------------------------
# polytopes
# ---------------------------------------------------------------------------

class Polytope:
    """Full-dimensional lattice polytope in frame coordinates."""

    def __init__(self, frame, points, vertices=None):
        self.frame = frame
        self.points = sorted({tuple(int(x) for x in p) for p in points})
        if vertices is None:
            vertices = extreme_points(self.points)
        self.vertices = sorted(tuple(int(x) for x in v) for v in vertices)
        self._facets = None
        self._face_sets = None

    def facets(self):
        """List of (normal, offset): the polytope is {x : normal.x <= offset}."""
        if self._facets is None:
            n = self.frame.rank
            homog = [(Fraction(1),) + vec(v) for v in self.vertices]
            rays, lin = extreme_rays(homog, [], n + 1)
            if lin:
                raise GeometryError("polytope is not full-dimensional in its frame")
            facets = []
            for r in rays:
                b, normal = r[0], tuple(-x for x in r[1:])
                if all(x == 0 for x in normal):
                    continue
                facets.append((normal, b))
            self._facets = sorted(facets)
        return self._facets

    def face_vertex_sets(self):
        """All nonempty proper faces plus the polytope itself, as vertex index sets."""
        if self._face_sets is None:
            facets = self.facets()
            nv = len(self.vertices)
            all_idx = frozenset(range(nv))
            facet_sets = []
            for normal, off in facets:
                s = frozenset(i for i, v in enumerate(self.vertices)
                              if vdot(vec(normal), vec(v)) == off)
                facet_sets.append(s)
            faces = {all_idx}
            frontier = set(facet_sets)
            while frontier:
                faces |= frontier
                nxt = set()
                for f in frontier:
                    for g in facet_sets:
                        h = f & g
                        if h and h not in faces:
                            nxt.add(h)
                frontier = nxt - faces
            self._face_sets = sorted(faces, key=lambda s: (len(s), sorted(s)))
        return self._face_sets

    def face_dim(self, vset):
        pts = [vec(self.vertices[i]) for i in sorted(vset)]
        if len(pts) == 1:
            return 0
        diffs = [vsub(p, pts[0]) for p in pts[1:]]
        return mat_rank(diffs)

    def tangent_cone(self, point, extra_ineqs=()):
        """Cone of the polytope at a point, intersected with extra halfspaces.

        extra_ineqs are affine pairs (covector, offset) meaning cov.x >= offset,
        only used when tight at the point.
        """
        x = vec(point)
        ineqs = []
        for normal, off in self.facets():
            val = vdot(vec(normal), x)
            if val == off:
                ineqs.append(tuple(-c for c in normal))
            elif val > off:
                raise GeometryError("tangent point outside polytope")
        for cov, off in extra_ineqs:
            val = vdot(vec(cov), x)
            if val < off:
                raise GeometryError("tangent point violates an extra constraint")
            if val == off:
                ineqs.append(tuple(cov))
        return RationalCone.from_halfspaces(ineqs, [], self.frame.rank)


def extreme_points(points):
    """Vertices of conv(points) via exact LP membership tests."""
    pts = [vec(p) for p in points]
    out = []
    for i, p in enumerate(pts):
        others = [q for j, q in enumerate(pts) if j != i]
        if not others or not in_convex_hull(p, others):
            out.append(points[i])
    return out


def hull_contains(point, points):
    return in_convex_hull(point, points)


# ---------------------------------------------------------------------------
# Hilbert bases
# ---------------------------------------------------------------------------

def hilbert_basis(cone):
    """Minimal generating set of cone & Z^r for a pointed rational cone.

    Works in frame coordinates where the lattice is the standard Z^r; the cone
    need not be full-dimensional.
    """
    if not cone.is_pointed():
        raise GeometryError("Hilbert basis requires a pointed cone")
    rays = [tuple(int(x) for x in r) for r in cone.generators]
    if not rays:
        return []
    r = cone.dim
    span = subspace_basis([vec(x) for x in rays])
    d = len(span)
    if d < r:
        # restrict to the saturated sublattice of the span
        sat = _saturated_lattice_basis(span, r)
        sub_rays = [_coords_in_rows(sat, ray) for ray in rays]
        sub_cone = RationalCone.from_generators(sub_rays, d)
        sub_hb = hilbert_basis(sub_cone)
        return sorted(_combine(sat, h) for h in sub_hb)
    simplices = _triangulate(rays, d)
    candidates = {tuple(v) for v in rays}
    for simplex in simplices:
        for p in _parallelotope_points(simplex):
            candidates.add(p)
    candidates.discard(tuple([0] * r))
    # grading strictly positive on the cone minus 0
    grading = vzero(r)
    for f in cone.facet_normals:
        grading = vadd(grading, vec(f))
    cand = sorted(candidates, key=lambda x: (vdot(grading, vec(x)), x))
    basis = []
    for x in cand:
        xv = vec(x)
        reducible = False
        for y in basis:
            diff = vsub(xv, vec(y))
            if is_zero(diff):
                reducible = True
                break
            if cone.contains(diff):
                reducible = True
                break
        if not reducible:
            basis.append(x)
    return sorted(basis)


def _saturated_lattice_basis(span, r):
    full = Lattice([tuple(Fraction(1) if j == i else Fraction(0) for j in range(r))
                    for i in range(r)])
    from .linalg import _lattice_in_span
    rows = _lattice_in_span(full, span)
    return [tuple(int(x) for x in row) for row in rows]


def _coords_in_rows(rows, v):
    cols = [tuple(Fraction(row[i]) for row in rows) for i in range(len(v))]
    sol = solve_linear(cols, [Fraction(x) for x in v])
    assert sol is not None and all(frac(c).denominator == 1 for c in sol)
    return tuple(int(c) for c in sol)


def _combine(rows, coeffs):
    out = [0] * len(rows[0])
    for c, row in zip(coeffs, rows):
        for i, x in enumerate(row):
            out[i] += c * x
    return tuple(out)


def _triangulate(rays, d):
    """Split a pointed full-dim cone into simplicial subcones (shared ray fan)."""
    if len(rays) == d:
        return [list(rays)]
    facets, _ = cone_facets([vec(x) for x in rays], len(rays[0]))
    r0 = rays[0]
    out = []
    for f in facets:
        if vdot(vec(f), vec(r0)) == 0:
            continue
        frays = [x for x in rays if vdot(vec(f), vec(x)) == 0]
        for sub in _triangulate_facet(frays, d - 1):
            out.append(sub + [r0])
    return out


def _triangulate_facet(rays, d):
    if len(rays) == d:
        return [list(rays)]
    facets, _ = cone_facets([vec(x) for x in rays], len(rays[0]))
    r0 = rays[0]
    out = []
    for f in facets:
        vals = [vdot(vec(f), vec(x)) for x in rays]
        if vals[0] == 0:
            continue
        frays = [x for x, v in zip(rays, vals) if v == 0]
        if mat_rank([vec(x) for x in frays]) != d - 1:
            continue
        for sub in _triangulate_facet(frays, d - 1):
            out.append(sub + [r0])
    return out


def _parallelotope_points(simplex_rays):
    """Lattice points of {sum t_i v_i : 0 <= t_i < 1} for independent rays."""
    V = [tuple(int(x) for x in v) for v in simplex_rays]
    d = len(V)
    n = len(V[0])
    H = hnf(V)
    # enumerate residues of the row span inside its saturation
    sat = _saturated_lattice_basis(subspace_basis([vec(v) for v in V]), n)
    Hc = [ _coords_in_rows(sat, row) for row in H ]  # d x d upper triangular
    Vc = [ _coords_in_rows(sat, v) for v in V ]
    diag = [Hc[i][i] for i in range(d)]
    cols = [tuple(Fraction(Vc[j][i]) for j in range(d)) for i in range(d)]
    out = set()

    def rec(i, residue):
        if i == d:
            t = solve_linear(cols, [Fraction(x) for x in residue])
            shifted = list(residue)
            for j, tj in enumerate(t):
                k = tj.numerator // tj.denominator  # floor
                if k:
                    for a in range(d):
                        shifted[a] -= k * Vc[j][a]
            pt = _combine(sat, tuple(shifted))
            if any(pt):
                out.add(tuple(pt))
            return
        for a in range(diag[i]):
            residue2 = list(residue)
            residue2[i] = a
            rec(i + 1, residue2)

    rec(0, [0] * d)
    return out


# ---------------------------------------------------------------------------
# plain (additive) semigroup membership inside a pointed cone
# ---------------------------------------------------------------------------

def additive_member(gens, target, cone):
    """Is target a Z+ combination of gens?  All data in frame coordinates;
    gens must lie in the pointed cone (used for pruning/termination)."""
    gens = [tuple(int(x) for x in g) for g in gens if any(g)]
    target = vec(target)
    grading = vzero(cone.dim)
    for f in cone.facet_normals:
        grading = vadd(grading, vec(f))
    memo = {}

    def rec(v):
        if is_zero(v):
            return True
        key = tuple(v)
        if key in memo:
            return memo[key]
        memo[key] = False
        ok = False
        for g in gens:
            w = vsub(v, vec(g))
            if cone.contains(w):
                if rec(w):
                    ok = True
                    break
        memo[key] = ok
        return ok

    if not cone.contains(target):
        return False
    return rec(target)


# ---------------------------------------------------------------------------
# toric support polytopes and vertex-wise normality
# ---------------------------------------------------------------------------

def toric_support_polytope(weights):
    """Vertices of -conv(weights): the polytope of the torus orbit closure."""
    pts = [vscale(-1, vec(w)) for w in weights]
    if not pts:
        raise GeometryError("empty weight list")
    return sorted(vec(v) for v in extreme_points(pts))


def toric_vertex_normal(weights, v, lattice):
    """Saturation of the vertex semigroup sum Z+(w - v) inside the given lattice.

    Returns (True, None) or (False, missing lattice element).
    """
    weights = [vec(w) for w in weights]
    v = vec(v)
    diffs = [vsub(w, v) for w in weights if w != v]
    frame = LatticeFrame(lattice.basis(), v)
    gens = [frame.int_vec(d) for d in diffs]
    dim = frame.rank
    cone = RationalCone.from_generators(gens, dim)
    if not cone.is_pointed():
        raise GeometryError("vertex cone is not pointed; not a vertex?")
    hb = hilbert_basis(cone)
    for h in hb:
        if not additive_member(gens, h, cone):
            return False, frame.vec_from_frame(h)
    return True, None


def toric_orbit_normal(weights, lattice=None):
    """Vertex-by-vertex normality of the torus orbit closure.

    lattice defaults to the lattice generated by the pairwise weight
    differences.  Returns (True, None, None) or (False, vertex, missing).
    """
    weights = [vec(w) for w in weights]
    if not weights:
        raise GeometryError("empty weight list")
    if lattice is None:
        diffs = []
        for i in range(len(weights)):
            for j in range(len(weights)):
                if i != j:
                    diffs.append(vsub(weights[i], weights[j]))
        if not diffs:
            return True, None, None
        lattice = Lattice(diffs)
    verts = [vscale(-1, x) for x in toric_support_polytope(weights)]
    for v in sorted(verts):
        ok, missing = toric_vertex_normal(weights, v, lattice)
        if not ok:
            return False, v, missing
    return True, None, None
