"""Normality and smoothness of the compactification at its closed orbits.

Normality at a closed orbit means the slice semigroup of highest weights
exhausts the lattice points of the vertex cone; the test computes the Hilbert
basis of the saturated semigroup and decides membership of each element by
exact degree-pinned tensor searches, falling back to a capped breadth-first
exploration.  Smoothness is a purely combinatorial test on the Levi type, the
vertex cone and the free generators of its lattice points.
"""

from itertools import permutations

from . import reps
from .geometry import additive_member, hilbert_basis, toric_vertex_normal
from .lie import LieError
from .linalg import int_det, is_zero, vadd, vdot, vec, vscale, vsub, vzero


class CriterionReport:
    def __init__(self, kind, verdict, witness=None, caps=None, provenance=None, detail=None):
        self.kind = kind              # 'normality' | 'smoothness'
        self.verdict = verdict        # Normal | NotNormal | Smooth | NotSmooth | Unknown
        self.witness = witness or {}
        self.caps = caps or {}
        self.provenance = provenance
        self.detail = detail or {}

    def __repr__(self):
        return f"CriterionReport({self.verdict}, witness={self.witness})"


DEFAULT_CAP = 8
MULTIPLE_CAP = 8


def normality_at(model, lam0, cap=DEFAULT_CAP, use_branching_generators=False):
    """Normality of the compactification along the closed orbit over lam0."""
    lam0 = vec(lam0)
    sl = model.local_slice(lam0)
    frame = model.frame
    cone = sl.cone
    hb = hilbert_basis(cone)
    hb = _sorted_by_grading(cone, hb)
    caps = {"tensor_degree_cap": cap, "multiple_cap": MULTIPLE_CAP,
            "hilbert_basis_size": len(hb)}

    # sufficient condition: the shifted highest weights alone generate the
    # lattice points of the vertex cone as a plain semigroup
    plain1 = [frame.int_vec(vsub(w, lam0)) for w in model.inp.weights if w != lam0]
    if plain1 and all(additive_member(plain1, h, cone) for h in hb):
        return CriterionReport("normality", "Normal", caps=caps,
                               provenance="plain-generation-by-highest-weights")
    plain2 = [frame.int_vec(w) for w, _m in sl.slice_weights if not is_zero(vec(w))]
    if plain2 and all(additive_member(plain2, h, cone) for h in hb):
        return CriterionReport("normality", "Normal", caps=caps,
                               provenance="plain-generation-by-slice-weights")

    levi = sl.levi.simple_root_indices
    if use_branching_generators:
        gens = [w for w, _m in sl.slice_weights if not is_zero(vec(w))]
    else:
        gens = list(sl.lgens)

    statuses = {}
    search = None
    for h in hb:
        h_amb = frame.vec_from_frame(h)
        member = reps.semigroup_member(model.rs, gens, h_amb, levi=levi)
        if member is None:
            if search is None:
                search = reps.generate_semigroup(model.rs, gens, cap, levi=levi)
            member = True if h_amb in search.explored else None
        statuses[h] = member

    missing = [h for h in hb if statuses[h] is not True]
    if not missing:
        return CriterionReport("normality", "Normal", caps=caps,
                               provenance="tensor-search",
                               detail={"generators": gens})

    for h in missing:
        h_amb = frame.vec_from_frame(h)
        for k in range(2, MULTIPLE_CAP + 1):
            multiple = vscale(k, h_amb)
            member = reps.semigroup_member(model.rs, gens, multiple, levi=levi)
            if member is None:
                if search is None:
                    search = reps.generate_semigroup(model.rs, gens, cap, levi=levi)
                member = multiple in search.explored
            if member:
                return CriterionReport(
                    "normality", "NotNormal",
                    witness={
                        "missing": h_amb,
                        "multiple": multiple,
                        "k": k,
                        "missing_certified": statuses[h] is False,
                        "all_missing": [frame.vec_from_frame(x) for x in missing],
                    },
                    caps=caps, provenance="tensor-search",
                    detail={"generators": gens})
    return CriterionReport("normality", "Unknown",
                           witness={"unresolved": [frame.vec_from_frame(x) for x in missing]},
                           caps=caps, provenance="tensor-search",
                           detail={"generators": gens})


def _sorted_by_grading(cone, elems):
    grading = vzero(cone.dim)
    for f in cone.facet_normals:
        grading = vadd(grading, vec(f))
    return sorted(elems, key=lambda x: (vdot(grading, vec(x)), x))


def torus_closure_normal(model, lam0):
    """Necessary condition: normality of the torus-orbit closure at lam0.

    Checks saturation of the semigroup generated by all shifted weights of V
    inside the cone of the weight polytope at lam0 (no chamber intersection).
    """
    lam0 = vec(lam0)
    if lam0 not in model.dominant_vertices():
        raise LieError(f"{lam0} is not a dominant vertex")
    weights = sorted(model.all_weights)
    ok, _missing = toric_vertex_normal(weights, lam0, model.inp.char.lattice)
    return ok


# ---------------------------------------------------------------------------
# smoothness
# ---------------------------------------------------------------------------

def smoothness_at(model, lam0, force_general=False):
    """Smoothness at the closed orbit over lam0: the Levi must be a direct
    product of general linear groups acting by polynomial representations with
    all minimal ones present; checked via conditions (1)-(4) on roots/weights.

    For a regular apex the test reduces to conditions (2) and (4) with the
    weight system of V itself; force_general runs the 4-condition path anyway.
    """
    lam0 = vec(lam0)
    sl = model.local_slice(lam0)
    levi = sl.levi
    rs = model.rs
    frame = model.frame
    rank = frame.rank
    caps = {}

    regular = not levi.simple_root_indices and not force_general

    # (1) all simple components of type A, at most dim Z(L) of them
    comps = levi.components
    center_dim = rank - len(levi.simple_root_indices)
    if not regular:
        if any(series != "A" for series, _l, _chain in comps) or len(comps) > center_dim:
            return CriterionReport("smoothness", "NotSmooth",
                                   witness={"condition": 1}, caps=caps)

    # (2) vertex cone simplicial and generated by a lattice basis
    cone = sl.cone
    rays = list(cone.generators)
    if not cone.is_pointed() or len(rays) != rank or abs(int_det(rays)) != 1:
        return CriterionReport("smoothness", "NotSmooth",
                               witness={"condition": 2}, caps=caps)
    rays_amb = [frame.vec_from_frame(r) for r in rays]

    lgens_set = set(sl.lgens)

    if regular:
        # reduced test: basis generation (checked) plus every lam0 + ray a weight
        for r in rays_amb:
            if vadd(lam0, r) not in model.all_weights:
                return CriterionReport("smoothness", "NotSmooth",
                                       witness={"condition": 4, "generator": r}, caps=caps)
        return CriterionReport("smoothness", "Smooth", caps=caps,
                               provenance="regular-vertex")

    # (3) partition of the free generators adapted to the GL structure
    partition = _match_partition(rs, levi, rays_amb)
    if partition is None:
        return CriterionReport("smoothness", "NotSmooth",
                               witness={"condition": 3}, caps=caps)

    # (4) the minimal generator of every factor occurs among the slice generators
    for group in partition:
        if group["members"][0] not in lgens_set:
            return CriterionReport("smoothness", "NotSmooth",
                                   witness={"condition": 4,
                                            "generator": group["members"][0]},
                                   caps=caps)
    return CriterionReport("smoothness", "Smooth", caps=caps,
                           detail={"partition": [g["members"] for g in partition]})


def _match_partition(rs, levi, gens):
    """Search a partition of the free generators into GL-factor chains.

    Each simple component (an A-type chain) needs generators pi_1..pi_{m+1}
    with <pi_j, alpha_j^v> = 1, pi_j orthogonal to every other Levi root, and
    the closing pi_{m+1} orthogonal to all of them; leftover generators that
    are orthogonal to every Levi root form 1x1 factors.  The cross conditions
    n_k pi_j - j pi_{n_k} _|_ every closing generator are checked at the end.
    """
    idx = list(levi.simple_root_indices)
    coroots = {i: rs.simple_coroots[i] for i in idx}

    def profile(g):
        return {i: vdot(vec(g), coroots[i]) for i in idx}

    profs = {g: profile(g) for g in gens}
    closers = [g for g in gens if all(v == 0 for v in profs[g].values())]
    slotted = [g for g in gens if g not in closers]

    chains = []
    for series, _l, chain in levi.components:
        if series != "A":
            return None
        chains.append(list(chain))

    # every slotted generator must pair 1 with exactly one Levi root
    slots = {}
    for g in slotted:
        nz = [(i, v) for i, v in profs[g].items() if v != 0]
        if len(nz) != 1 or nz[0][1] != 1:
            return None
        slots.setdefault(nz[0][0], []).append(g)
    for i, gs in slots.items():
        if len(gs) != 1:
            return None

    def try_orientations(order_choices):
        groups = []
        used_closers = set()
        for chain, flip in order_choices:
            seq = chain[::-1] if flip else chain
            members = []
            for j, root_idx in enumerate(seq):
                if root_idx not in slots:
                    return None
                members.append(slots[root_idx][0])
            groups.append({"chain": seq, "members": members})
        # assign one closer to each chain group, remaining closers are 1x1 groups
        avail = [c for c in closers]
        if len(avail) < len(groups):
            return None
        for assign in permutations(range(len(avail)), len(groups)):
            used = set(assign)
            cand = []
            ok = True
            for gi, g in enumerate(groups):
                cand.append({"chain": g["chain"],
                             "members": g["members"] + [avail[assign[gi]]]})
            for ci, c in enumerate(avail):
                if ci not in used:
                    cand.append({"chain": [], "members": [c]})
            if _cross_conditions(rs, cand):
                return cand
        return None

    from itertools import product
    for flips in product([False, True], repeat=len(chains)):
        res = try_orientations(list(zip(chains, flips)))
        if res is not None:
            return res
    return None


def _cross_conditions(rs, groups):
    closers = [g["members"][-1] for g in groups]
    for g in groups:
        n_k = len(g["members"])
        pin = g["members"][-1]
        for j, pij in enumerate(g["members"], start=1):
            val = vsub(vscale(n_k, vec(pij)), vscale(j, vec(pin)))
            for c in closers:
                if vdot(val, vec(c)) != 0:
                    return False
    return True


# ---------------------------------------------------------------------------
# known-normal shortcut patterns
# ---------------------------------------------------------------------------

def known_normal_shortcuts(model, lam0):
    """Pattern recognition for slice shapes known to be normal: wedge powers of
    the general linear group, scaled vector representations of the symplectic
    and even orthogonal groups, spin representations, minuscule E cases, and
    box products of two general linear factors.  Returns (case name, weight)
    or None; every other slice weight is verified to lie in the semigroup
    generated by the matched weight before a verdict is returned."""
    lam0 = vec(lam0)
    sl = model.local_slice(lam0)
    levi = sl.levi
    rs = model.rs
    ws = [vec(w) for w, _m in sl.slice_weights if not is_zero(vec(w))]
    if not ws:
        return None
    if levi.center_rank < 1:
        return None
    comps = levi.components

    def labels(g, chain):
        return tuple(vdot(vec(g), rs.simple_coroots[i]) for i in chain)

    def nonzero_elsewhere(g, chain):
        others = [i for i in levi.simple_root_indices if i not in chain]
        return any(vdot(vec(g), rs.simple_coroots[i]) != 0 for i in others)

    candidates = []
    if len(comps) == 1:
        series, l, chain = comps[0]
        for g in ws:
            if nonzero_elsewhere(g, chain):
                continue
            lab = labels(g, chain)
            # only A chains admit a flip; other series orderings are canonical
            orientations = (lab, lab[::-1]) if series == "A" else (lab,)
            for seq in orientations:
                if series == "A" and sum(seq) == 1 and 1 in seq:
                    k = seq.index(1) + 1
                    candidates.append((f"general-linear wedge power k={k}", g))
                    break
                if series == "C" and seq == (1,) + (0,) * (l - 1):
                    candidates.append(("symplectic vector", g))
                    break
                if series == "D" and seq == (1,) + (0,) * (l - 1):
                    candidates.append(("even-orthogonal vector", g))
                    break
                if series == "B" and seq == (0,) * (l - 1) + (1,):
                    candidates.append(("odd spin", g))
                    break
                if series == "D" and sum(seq) == 1 and (seq[-1] == 1 or seq[-2] == 1):
                    candidates.append(("even half-spin", g))
                    break
                if series == "E" and sum(seq) == 1 and \
                        (seq[0] == 1 or (l == 6 and seq[4] == 1)):
                    candidates.append(("minuscule exceptional", g))
                    break
    elif len(comps) == 2 and all(s == "A" for s, _l, _c in comps):
        for g in ws:
            good = True
            for series, _l, chain in comps:
                lab = labels(g, chain)
                if not (sum(lab) == 1 and (lab[0] == 1 or lab[-1] == 1)):
                    good = False
                    break
            if good:
                candidates.append(("box product of general linear vectors", g))

    levi_idx = levi.simple_root_indices
    for name, mu0 in candidates:
        ok = True
        for w in ws:
            if w == mu0:
                continue
            member = reps.semigroup_member(rs, [mu0], w, levi=levi_idx)
            if member is not True:
                ok = False
                break
        if ok:
            return name, mu0
    return None
