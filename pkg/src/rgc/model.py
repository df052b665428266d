"""Model of the group compactification inside the projectivized operator space.

Everything is driven by the weight polytope: closed orbits sit over dominant
vertices, orbits correspond to faces whose relative interior meets the
dominant chamber, local slices are affine semigroup compactifications of Levi
subgroups, and the colored fan of the normalization is assembled from the
dual cones at dominant vertices.
"""

from fractions import Fraction

from . import reps
from .lie import LieError, build_root_system, character_lattice, levi_datum, weyl_orbit
from .geometry import (
    CapabilityError, GeometryError, LatticeFrame, Polytope, RationalCone,
)
from .linalg import (
    Lattice, lp_solve, subspace_basis, subspace_contains,
    subspace_intersection, orth_complement, vadd, vdot, vec, vscale, vsub,
    vzero,
)

ORBIT_POINT_CAP = 50000


class CompactificationInput:
    """A reductive type with a list of distinct dominant highest weights."""

    def __init__(self, lie_type, weights):
        self.rs = build_root_system(lie_type)
        self.lie_type = self.rs.lie_type
        ws = [vec(w) for w in weights]
        if not ws:
            raise LieError("need at least one highest weight")
        if len(set(ws)) != len(ws):
            raise LieError("highest weights must be distinct")
        for w in ws:
            if not self.rs.is_dominant(w):
                raise LieError(f"weight {w} is not dominant")
            self.rs.scale(w)  # lattice membership check
        self.weights = ws
        self.char = character_lattice(self.rs, ws)

    @property
    def faithful_projective(self):
        return self.char.faithful


def build_model(inp, **kw):
    if not isinstance(inp, CompactificationInput):
        raise TypeError("build_model expects a CompactificationInput")
    return Model(inp, **kw)


class Face:
    """A face of the weight polytope meeting the dominant chamber: one orbit."""

    def __init__(self, model, vertex_idx_set, label_roots=None):
        self.model = model
        self.vertex_set = frozenset(vertex_idx_set)
        self.label_roots = None if label_roots is None else tuple(sorted(label_roots))
        self._data = None

    # -- derived geometric/lattice data (computed once) ---------------------
    def _compute(self):
        if self._data is not None:
            return self._data
        m = self.model
        rs = m.rs
        verts = [m.vertex_points[i] for i in sorted(self.vertex_set)]
        # all weights of V lying on the face
        tight = self._tight_facets()
        pts = []
        for w in m.all_weights:
            x = m.frame.point_to_frame(w)
            if all(vdot(vec(n), x) == off for n, off in tight):
                pts.append(w)
        direction = subspace_basis([vsub(v, verts[0]) for v in verts[1:]]) if len(verts) > 1 else []
        span = subspace_basis(verts)
        # perp of the span inside the root span, then the parabolic space
        q_span = subspace_basis(list(rs.simple_roots)) if rs.simple_roots else []
        perp = orth_complement(span, rs.ambient_dim) if span else \
            [tuple(Fraction(1) if j == i else Fraction(0) for j in range(rs.ambient_dim))
             for i in range(rs.ambient_dim)]
        perp_in_q = subspace_intersection(perp, q_span) if (perp and q_span) else []
        parabolic = subspace_basis(list(direction) + list(perp_in_q))
        root_lat = Lattice(rs.simple_roots) if rs.simple_roots else Lattice([vzero(rs.ambient_dim)])
        from .linalg import _lattice_in_span
        q_in_dir = _lattice_in_span(root_lat, direction) if direction else []
        lam_on = [w for w in m.inp.weights if w in set(pts)]
        dir_gens = list(q_in_dir)
        for i in range(len(lam_on)):
            for j in range(i + 1, len(lam_on)):
                dir_gens.append(vsub(lam_on[i], lam_on[j]))
        direction_lattice = Lattice(dir_gens) if dir_gens else Lattice([vzero(rs.ambient_dim)])
        span_gens = list(q_in_dir) + lam_on
        span_lattice = Lattice(span_gens) if span_gens else Lattice([vzero(rs.ambient_dim)])
        roots_in = lambda basis: tuple(r for r in rs.roots()
                                       if basis and subspace_contains(list(basis), vec(r)))
        data = {
            "points": sorted(pts),
            "weights_on_face": lam_on,
            "direction": direction,
            "span": span,
            "parabolic": parabolic,
            "direction_lattice": direction_lattice,
            "span_lattice": span_lattice,
            "roots_direction": roots_in(direction),
            "roots_span_perp": roots_in(perp_in_q),
            "roots_parabolic": roots_in(parabolic),
        }
        self._data = data
        return data

    def _tight_facets(self):
        """Facets of P containing this face."""
        m = self.model
        out = []
        for normal, off in m.polytope.facets():
            if all(vdot(vec(normal), vec(m.polytope.vertices[i])) == off
                   for i in self.vertex_set):
                out.append((normal, off))
        return out

    # -- public accessors ----------------------------------------------------
    @property
    def points(self):
        return self._compute()["points"]

    @property
    def direction_space(self):
        return self._compute()["direction"]

    @property
    def linear_span(self):
        return self._compute()["span"]

    @property
    def parabolic_space(self):
        return self._compute()["parabolic"]

    @property
    def direction_lattice(self):
        return self._compute()["direction_lattice"]

    @property
    def span_lattice(self):
        return self._compute()["span_lattice"]

    @property
    def dim(self):
        return len(self.direction_space)

    def supporting_functional(self):
        """gamma with <gamma, face> = const < <gamma, rest of P> (ambient vector)."""
        m = self.model
        tight = self._tight_facets()
        g = vzero(m.frame.rank)
        for n, _ in tight:
            g = vsub(g, vec(n))
        return m.frame.covector_to_ambient(g)

    def colors(self):
        """Simple coroot indices of the colors: simple roots orthogonal to the span."""
        m = self.model
        rs = m.rs
        span = self.linear_span
        out = []
        for j in range(rs.num_simple):
            if all(vdot(rs.simple_roots[j], s) == 0 for s in span):
                out.append(j)
        return tuple(out)

    def orbit_dim(self):
        d = self._compute()
        rs = self.model.rs
        return len(rs.roots()) - len(d["roots_span_perp"]) + self.dim

    def colored_cone(self):
        """(C_Y, F_Y): dual of the chamber tangent cone at this face, plus colors."""
        m = self.model
        t = m.chamber_tangent_cone(self)
        return t.dual(), self.colors()

    def key(self):
        return self.vertex_set

    def __eq__(self, other):
        return (isinstance(other, Face) and self.model is other.model
                and self.vertex_set == other.vertex_set)

    def __hash__(self):
        return hash((id(self.model), self.vertex_set))

    def __repr__(self):
        lab = "" if self.label_roots is None else f", roots={self.label_roots}"
        return f"Face(dim={self.dim}{lab})"


class SliceDatum:
    """Local transversal slice at a closed orbit: an affine Levi compactification."""

    def __init__(self, model, apex, levi, slice_weights, lgens, cone):
        self.model = model
        self.apex = apex
        self.levi = levi
        self.slice_weights = slice_weights   # branching-derived shifted weights (w, mult)
        self.lgens = lgens                   # shifted roots outside the Levi plus weight differences
        self.cone = cone                     # vertex cone in frame coordinates

    def __repr__(self):
        return f"SliceDatum(apex={self.apex}, levi={self.levi.describe()})"


class OrbitDescriptor:
    def __init__(self, face):
        self.face = face
        self.colored_cone = face.colored_cone()
        self.representative_weights = face.points  # weight support of the projector
        d = face._compute()
        self.dimension = face.orbit_dim()
        self.stabilizer = {
            "parabolic_roots": d["roots_parabolic"],
            "levi_direction_roots": d["roots_direction"],
            "levi_perp_roots": d["roots_span_perp"],
            "direction_lattice": d["direction_lattice"].basis(),
            "span_lattice": d["span_lattice"].basis(),
        }

    def __repr__(self):
        return f"OrbitDescriptor(dim={self.dimension})"


class Model:
    def __init__(self, inp, orbit_cap=ORBIT_POINT_CAP):
        self.inp = inp
        self.rs = inp.rs
        rs = self.rs
        if not inp.char.rank:
            raise LieError("character lattice is trivial; nothing to compactify")
        self.frame = LatticeFrame(inp.char.basis(), inp.weights[0])
        # weights of V with multiplicities
        self.all_weights = {}
        for lam in inp.weights:
            ws = reps.weight_system(rs, lam)
            for w, mult in ws.entries.items():
                self.all_weights[w] = self.all_weights.get(w, 0) + mult
        # generating points of P: the Weyl orbits of the highest weights
        orbits = [weyl_orbit(rs, lam) for lam in inp.weights]
        npts = sum(len(o) for o in orbits)
        if npts > orbit_cap:
            raise CapabilityError(
                f"{npts} orbit points exceed the supported cap {orbit_cap}")
        self.orbit_points = sorted(set().union(*[set(o) for o in orbits]))
        # vertices: orbits of the extreme highest weights
        vert_orbits = []
        for lam, orb in zip(inp.weights, orbits):
            others = [p for o2 in orbits for p in o2 if p not in set(orb)] + \
                     [p for p in orb if p != lam]
            from .linalg import in_convex_hull
            if not in_convex_hull(lam, others):
                vert_orbits.append(orb)
        vertex_pts = sorted(set().union(*[set(o) for o in vert_orbits]))
        try:
            pts_x = [self.frame.int_vec(vsub(p, inp.weights[0])) for p in self.orbit_points]
            verts_x = [self.frame.int_vec(vsub(p, inp.weights[0])) for p in vertex_pts]
        except GeometryError as e:
            raise LieError(
                "representation is not faithful on the semisimple part "
                "(weight differences do not span the root space)") from e
        self.polytope = Polytope(self.frame, pts_x, verts_x)
        self.vertex_points = [self.frame.point_from_frame(v) for v in self.polytope.vertices]
        # chamber walls as affine inequalities in frame coordinates
        self.walls = []
        for j in range(rs.num_simple):
            cov = self.frame.covector(rs.simple_coroots[j])
            off = -rs.pairing(inp.weights[0], j)
            self.walls.append((cov, off))   # cov . x >= off <=> <p, coroot_j> >= 0
        self._faces = None
        self._fan = None
        self._slices = {}
        self._dominance_rows = None

    # -- chamber bookkeeping -------------------------------------------------
    def wall_value(self, j, frame_x):
        cov, off = self.walls[j]
        return vdot(vec(cov), vec(frame_x)) - off  # equals <point, coroot_j>

    def dominant_vertices(self):
        """The highest weights that are vertices of P, in input order."""
        vp = set(self.vertex_points)
        return [lam for lam in self.inp.weights if lam in vp]

    # -- faces meeting the chamber -------------------------------------------
    def faces_meeting_chamber(self):
        if self._faces is None:
            if len(self.inp.weights) == 1:
                self._faces = self.faces_by_root_labels()
            else:
                self._faces = self.faces_generic()
        return self._faces

    def faces_generic(self):
        out = []
        for vset in self.polytope.face_vertex_sets():
            if self._face_meets_chamber(vset):
                out.append(Face(self, vset))
        out.sort(key=lambda f: (f.dim, sorted(f.vertex_set)))
        return out

    def _face_meets_chamber(self, vset):
        """LP: does the relative interior of the face meet the dominant chamber?"""
        idx = sorted(vset)
        k = len(idx)
        # variables c_1..c_k, t ; maximize t
        a_ub = []
        b_ub = []
        for a in range(k):
            row = [Fraction(0)] * (k + 1)
            row[a] = Fraction(-1)
            row[k] = Fraction(1)
            a_ub.append(tuple(row))   # t - c_a <= 0
            b_ub.append(Fraction(0))
        for j in range(len(self.walls)):
            row = [-self.wall_value(j, self.polytope.vertices[i]) for i in idx] + [Fraction(0)]
            a_ub.append(tuple(row))
            b_ub.append(Fraction(0))  # sum c_i <p_i, coroot_j> >= 0
        a_eq = [tuple([Fraction(1)] * k + [Fraction(0)])]
        b_eq = [Fraction(1)]
        obj = [Fraction(0)] * k + [Fraction(1)]
        res = lp_solve(obj, a_ub, b_ub, a_eq, b_eq)
        return res.status == "optimal" and res.value > 0

    def faces_by_root_labels(self):
        """Single-irreducible fast path: faces labeled by admissible simple-root sets.

        The admissible labels are the subsets of simple roots no connected
        component of which lies inside the Levi of the highest weight (plus the
        empty set); the face with label S is the slice of P through the apex in
        the direction of S.
        """
        rs = self.rs
        lam0 = self.inp.weights[0]
        levi = levi_datum(rs, lam0)
        in_levi = set(levi.simple_root_indices)
        labels = [()]
        # connected admissible subsets grow from seeds outside the Levi
        from itertools import combinations
        n = rs.num_simple
        for size in range(1, n + 1):
            for sub in combinations(range(n), size):
                comps = _components(rs, sub)
                if all(not set(c) <= in_levi for c in comps):
                    labels.append(sub)
        vert_index = {v: i for i, v in enumerate(self.polytope.vertices)}
        out = []
        seen = set()
        for lab in labels:
            span = subspace_basis([rs.simple_roots[i] for i in lab]) if lab else []
            vsets = []
            for p in self.vertex_points:
                d = vsub(p, lam0)
                if subspace_contains(span, d):
                    vsets.append(vert_index[self.frame.int_vec(vsub(p, lam0))])
            vset = frozenset(vsets)
            if vset in seen:
                continue
            seen.add(vset)
            out.append(Face(self, vset, label_roots=lab))
        out.sort(key=lambda f: (f.dim, sorted(f.vertex_set)))
        return out

    # -- cones ---------------------------------------------------------------
    def vertex_cone(self, lam):
        """Cone of (chamber & polytope) at a dominant vertex, frame coordinates."""
        lam = vec(lam)
        if lam not in self.vertex_points:
            raise LieError(f"{lam} is not a vertex of the weight polytope")
        x = self.frame.int_vec(vsub(lam, self.inp.weights[0]))
        extra = [(cov, off) for cov, off in self.walls]
        return self.polytope.tangent_cone(x, extra_ineqs=extra)

    def chamber_tangent_cone(self, face):
        """Tangent cone of (chamber & polytope) along (chamber & face)."""
        idx = sorted(face.vertex_set)
        k = len(idx)
        verts = [self.polytope.vertices[i] for i in idx]
        if k == 1:
            lam = self.vertex_points[idx[0]]
            return self.vertex_cone(lam)
        # constraints tight on all of chamber & face, via slack-maximizing LPs
        ineqs = []
        for normal, off in self.polytope.facets():
            vals = [off - vdot(vec(normal), vec(v)) for v in verts]
            if all(v == 0 for v in vals):
                ineqs.append(tuple(-c for c in normal))
                continue
            if self._max_over_chamber_face(idx, vals) == 0:
                ineqs.append(tuple(-c for c in normal))
        for j in range(len(self.walls)):
            vals = [self.wall_value(j, v) for v in verts]
            if all(v == 0 for v in vals):
                ineqs.append(tuple(self.walls[j][0]))
                continue
            if self._max_over_chamber_face(idx, vals) == 0:
                ineqs.append(tuple(self.walls[j][0]))
        return RationalCone.from_halfspaces(ineqs, [], self.frame.rank)

    def _max_over_chamber_face(self, idx, vertex_values):
        """Max of an affine functional (given by vertex values) over chamber & face."""
        k = len(idx)
        a_ub = []
        b_ub = []
        for a in range(k):
            row = [Fraction(0)] * k
            row[a] = Fraction(-1)
            a_ub.append(tuple(row))
            b_ub.append(Fraction(0))
        for j in range(len(self.walls)):
            row = [-self.wall_value(j, self.polytope.vertices[i]) for i in idx]
            a_ub.append(tuple(row))
            b_ub.append(Fraction(0))
        a_eq = [tuple([Fraction(1)] * k)]
        b_eq = [Fraction(1)]
        res = lp_solve([Fraction(v) for v in vertex_values], a_ub, b_ub, a_eq, b_eq)
        assert res.status == "optimal"
        return res.value

    # -- closed orbits and slices ---------------------------------------------
    def closed_orbits(self):
        out = []
        for lam in self.dominant_vertices():
            levi = levi_datum(self.rs, lam)
            out.append({
                "vertex": lam,
                "levi": levi,
                "representative": (lam, vscale(-1, lam)),  # weight of v (x) dual v
                "separating_functional": self._separating_functional(lam),
            })
        return out

    def _separating_functional(self, lam):
        """gamma with <gamma, lam> > <gamma, mu> for every other point of P."""
        x = self.frame.int_vec(vsub(lam, self.inp.weights[0]))
        g = vzero(self.frame.rank)
        for normal, off in self.polytope.facets():
            if vdot(vec(normal), vec(x)) == off:
                g = vadd(g, vec(normal))
        return self.frame.covector_to_ambient(g)

    def local_slice(self, lam):
        lam = vec(lam)
        if lam in self._slices:
            return self._slices[lam]
        if lam not in self.dominant_vertices():
            raise LieError(f"{lam} is not a dominant vertex")
        levi = levi_datum(self.rs, lam)
        br = reps.branch_to_levi(self.rs, lam, levi.simple_root_indices) if \
            len(self.inp.weights) == 1 else self._multi_branch(levi)
        shifted = []
        for w, m in br:
            if w == lam:
                m -= 1  # the apex component itself is excluded once
            if m > 0:
                shifted.append((vsub(w, lam), m))
        lgens = reps.lgens_generators(self.rs, self.inp.weights, lam, levi.simple_root_indices)
        cone = self.vertex_cone(lam)
        datum = SliceDatum(self, lam, levi, shifted, lgens, cone)
        for w, _m in shifted:
            x = self.frame.int_vec(w)
            assert cone.contains(x), "slice weight outside the vertex cone"
        self._slices[lam] = datum
        return datum

    def _multi_branch(self, levi):
        out = {}
        for lam in self.inp.weights:
            for w, m in reps.branch_to_levi(self.rs, lam, levi.simple_root_indices):
                out[w] = out.get(w, 0) + m
        return sorted(out.items())

    # -- orbit poset ----------------------------------------------------------
    def orbit_poset(self):
        faces = self.faces_meeting_chamber()
        descs = [OrbitDescriptor(f) for f in faces]
        edges = []
        for i, fi in enumerate(faces):
            for j, fj in enumerate(faces):
                if i == j or not fi.vertex_set < fj.vertex_set:
                    continue
                if any(fi.vertex_set < fk.vertex_set < fj.vertex_set for fk in faces):
                    continue
                edges.append((i, j))   # orbit i is contained in the closure of orbit j
        return descs, edges

    def orbit_descriptor(self, face):
        if face not in self.faces_meeting_chamber():
            raise LieError("face does not belong to this model")
        return OrbitDescriptor(face)

    # -- colored fan -----------------------------------------------------------
    def colored_fan(self):
        if self._fan is not None:
            return self._fan
        maximal = []
        for lam in self.dominant_vertices():
            cone = self.vertex_cone(lam).dual()
            levi = levi_datum(self.rs, lam)
            colors = tuple(sorted(levi.simple_root_indices))
            maximal.append({"vertex": lam, "cone": cone, "colors": colors})
        fan = ColoredFan(self, maximal)
        fan.check_complete()
        fan.check_fan_property()
        self._fan = fan
        return fan

    def dominance_rows(self):
        """Rows R with R.g = <representing vector of covector g, coroot_j>."""
        if self._dominance_rows is None:
            rows = []
            for j in range(self.rs.num_simple):
                cov = self.frame.covector(self.rs.simple_coroots[j])
                # row acting on covectors: g -> cov . Gram^{-1} g
                from .linalg import solve_linear
                gram = self.frame._gram
                sol = solve_linear(gram, list(vec(cov)))
                rows.append(tuple(sol))
            self._dominance_rows = rows
        return self._dominance_rows


class ColoredFan:
    def __init__(self, model, maximal_cones):
        self.model = model
        self.maximal_cones = maximal_cones

    def check_complete(self):
        """The maximal cones must cover the antidominant cone exactly."""
        m = self.model
        verts = self._chamber_polytope_vertices()
        dom_x = {m.frame.int_vec(vsub(l, m.inp.weights[0])) for l in m.dominant_vertices()}
        for v, tangent_rows in verts:
            if tuple(v) in dom_x:
                continue
            if self._interior_meets_antidominant(tangent_rows):
                raise AssertionError(
                    "fan completeness failed: a chamber-polytope vertex outside the "
                    "dominant vertices carries antidominant directions")
        return True

    def _chamber_polytope_vertices(self):
        """Vertices of chamber & polytope with the tight constraint covectors."""
        m = self.model
        ineqs = []
        for normal, off in m.polytope.facets():
            ineqs.append((tuple(-c for c in normal), -off))   # -n.x >= -off
        for cov, off in m.walls:
            ineqs.append((tuple(cov), off))
        # homogenize: rays of {(t,x): a.x >= b t, t >= 0}
        n = m.frame.rank
        rows = [tuple([-b] + list(a)) for a, b in ineqs]
        rows.append(tuple([1] + [0] * n))
        from .linalg import extreme_rays
        rays, lin = extreme_rays([vec(r) for r in rows], [], n + 1)
        assert not lin, "chamber & polytope should be a pointed homogenization"
        out = []
        for r in rays:
            t = r[0]
            if t == 0:
                raise AssertionError("chamber & polytope is unexpectedly unbounded")
            x = tuple(Fraction(c, t) for c in r[1:])
            tight = [vec(a) for a, b in ineqs
                     if vdot(vec(a), vec(x)) == b]
            out.append((x, tight))
        return out

    def _interior_meets_antidominant(self, tangent_rows):
        """Does int cone(tangent rows) meet the antidominant covector cone?"""
        m = self.model
        k = len(tangent_rows)
        n = m.frame.rank
        dom = m.dominance_rows()
        # g = sum s_a row_a, s_a >= 1; require dom_j . g <= 0 for all j
        a_ub = []
        b_ub = []
        for a in range(k):
            row = [Fraction(0)] * k
            row[a] = Fraction(-1)
            a_ub.append(tuple(row))
            b_ub.append(Fraction(-1))   # s_a >= 1
        for dr in dom:
            row = [vdot(vec(dr), vec(tangent_rows[a])) for a in range(k)]
            a_ub.append(tuple(row))
            b_ub.append(Fraction(0))
        res = lp_solve([Fraction(0)] * k, a_ub, b_ub)
        return res.status == "optimal"

    def check_fan_property(self):
        """Interiors of distinct maximal cones avoid each other inside -C."""
        m = self.model
        cones = [mc["cone"] for mc in self.maximal_cones]
        for i in range(len(cones)):
            for j in range(i + 1, len(cones)):
                if self._interiors_intersect_antidominant(cones[i], cones[j]):
                    raise AssertionError("fan property failed: interiors overlap in -C")
        return True

    def _interiors_intersect_antidominant(self, c1, c2):
        m = self.model
        rows1 = [vec(g) for g in c1.facet_normals]
        rows2 = [vec(g) for g in c2.facet_normals]
        dom = m.dominance_rows()
        n = m.frame.rank
        # find covector g with rows1.g >= 1, rows2.g >= 1, dom.g <= 0
        a_ub = []
        b_ub = []
        for r in rows1 + rows2:
            a_ub.append(tuple(-x for x in r))
            b_ub.append(Fraction(-1))
        for dr in dom:
            a_ub.append(tuple(dr))
            b_ub.append(Fraction(0))
        res = lp_solve([Fraction(0)] * n, a_ub, b_ub)
        return res.status == "optimal"


def _components(rs, indices):
    """Connected components of a set of simple-root indices (no classification)."""
    indices = list(indices)
    adj = {i: [j for j in indices if j != i and rs.cartan[i][j] != 0] for i in indices}
    comps = []
    left = set(indices)
    while left:
        start = min(left)
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        left -= comp
        comps.append(sorted(comp))
    return comps
