import random
import sys
from fractions import Fraction as F

import pytest

sys.path.insert(0, "src")

from oracles import box_lattice_points, brute_hull_facets, zplus_member
from rgc import geometry as G
from rgc.geometry import (
    GeometryError, LatticeFrame, Polytope, RationalCone, additive_member,
    dual_cone, extreme_points, hilbert_basis, toric_orbit_normal,
    toric_support_polytope, toric_vertex_normal,
)
from rgc.linalg import Lattice, vdot, vec


def test_cone_roundtrip_examples():
    c = RationalCone.from_generators([(1, 0), (1, 2)], 2)
    assert c.generators == ((1, 0), (1, 2))
    assert sorted(c.dual().generators) == [(0, 1), (2, -1)]
    assert c.dual().dual() == c
    orthant = RationalCone.from_generators([(1, 0), (0, 1)], 2)
    assert dual_cone(orthant) == orthant
    ray = RationalCone.from_generators([(1, 0)], 2)
    half = ray.dual()
    assert half.lineality_dim == 1 and not half.is_pointed()
    assert half.dual() == ray


def test_cone_double_description_consistency():
    c = RationalCone.from_generators([(2, 1, 0), (1, 2, 0), (0, 0, 1), (1, 1, 1)], 3)
    for g in c.generators:
        assert c.contains(g)
        assert all(vdot(vec(f), vec(g)) >= 0 for f in c.facet_normals)
    for f in c.facet_normals:
        tight = [g for g in c.generators if vdot(vec(f), vec(g)) == 0]
        assert len(tight) >= 2  # facets of a 3-dim pointed cone carry >= 2 rays


def test_hilbert_examples():
    c = RationalCone.from_generators([(1, 0), (1, 2)], 2)
    assert hilbert_basis(c) == [(1, 0), (1, 1), (1, 2)]
    c = RationalCone.from_generators([(2, -1), (0, 1)], 2)
    assert sorted(hilbert_basis(c)) == [(0, 1), (1, 0), (2, -1)]
    simplicial = RationalCone.from_generators([(1, 0, 0), (0, 1, 0), (0, 0, 1)], 3)
    assert hilbert_basis(simplicial) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    with pytest.raises(GeometryError):
        hilbert_basis(RationalCone.from_halfspaces([(1, 0)], [], 2))  # not pointed


def test_hilbert_random_cones_vs_bruteforce():
    rng = random.Random(20240817)
    done = 0
    while done < 50:
        dim = rng.choice([2, 3, 4])
        gens = [tuple(rng.randint(-3, 3) for _ in range(dim))
                for _ in range(rng.randint(2, dim + 2))]
        if all(all(x == 0 for x in g) for g in gens):
            continue
        cone = RationalCone.from_generators(gens, dim)
        if not cone.is_pointed() or not cone.generators:
            continue
        hb = hilbert_basis(cone)
        box = 4
        inside = {p for p in box_lattice_points(cone.facet_normals, dim, box)
                  if all(vdot(vec(e), vec(p)) == 0 for e in cone.span_eqs)}
        for p in inside:
            assert zplus_member(p, hb, cone.facet_normals), (gens, hb, p)
        # minimality: no element is a Z+ combination of the others
        for i, h in enumerate(hb):
            others = hb[:i] + hb[i + 1:]
            assert not zplus_member(h, others, cone.facet_normals)
        done += 1


def test_polytope_faces_and_tangents():
    frame = LatticeFrame([(1, 0), (0, 1)], (0, 0))
    P = Polytope(frame, [(1, 0), (-1, 0), (0, 1), (0, -1), (0, 0)])
    assert P.vertices == sorted([(1, 0), (-1, 0), (0, 1), (0, -1)])
    assert len(P.facets()) == 4
    assert len(P.face_vertex_sets()) == 9
    tc = P.tangent_cone((1, 0))
    assert sorted(tc.generators) == [(-1, -1), (-1, 1)]
    tc = P.tangent_cone((1, 0), extra_ineqs=[((0, 1), 0)])
    assert sorted(tc.generators) == [(-1, 0), (-1, 1)]


def test_polytope_facets_vs_bruteforce():
    rng = random.Random(7)
    for _ in range(8):
        pts = {tuple(rng.randint(-3, 3) for _ in range(3)) for _ in range(9)}
        pts = sorted(pts)
        frame = LatticeFrame([(1, 0, 0), (0, 1, 0), (0, 0, 1)], (0, 0, 0))
        try:
            P = Polytope(frame, pts)
            facets = set(P.facets())
        except GeometryError:
            continue  # degenerate sample
        expected = brute_hull_facets([vec(v) for v in P.vertices])
        assert facets == {(n, F(b)) for n, b in expected}


def test_extreme_points():
    pts = [(0, 0), (2, 0), (0, 2), (1, 1), (2, 2)]
    assert sorted(extreme_points(pts)) == [(0, 0), (0, 2), (2, 0), (2, 2)]


def test_toric_examples():
    assert toric_support_polytope([(0, 0)]) == [(F(0), F(0))]
    assert toric_support_polytope([(1, 0), (0, 1)]) == sorted([(F(-1), F(0)), (F(0), F(-1))])
    ok, v, missing = toric_orbit_normal([(0,), (2,)], Lattice([(1,)]))
    assert not ok and missing == (F(1),)
    ok, _, _ = toric_orbit_normal([(1, 0), (0, 1)], Lattice([(1, 0), (0, 1)]))
    assert ok
    ok, _, _ = toric_orbit_normal([(0,), (2,)])  # intrinsic lattice: normal
    assert ok


def test_toric_vertex_normal_sp4_slice():
    # torus-closure data of the two-weight symplectic example at its apex
    from rgc.lie import build_root_system, parse_weight
    from rgc.model import CompactificationInput, build_model
    m = build_model(CompactificationInput("C2", [
        parse_weight(build_root_system("C2"), "3*w1"),
        parse_weight(build_root_system("C2"), "2*w2")]))
    lam0 = parse_weight(m.rs, "3*w1")
    weights = sorted(m.all_weights)
    ok, missing = toric_vertex_normal(weights, lam0, m.inp.char.lattice)
    assert ok and missing is None
