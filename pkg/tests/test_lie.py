import sys
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

sys.path.insert(0, "src")

from rgc import lie
from rgc.lie import (
    LieError, build_root_system, character_lattice, dominant_reflect,
    levi_datum, parse_lie_type, parse_weight, parse_weights, stabilizer_order,
    weyl_orbit,
)
from rgc.linalg import vadd, vdot, vec, vscale, vsub

ALL_SMALL = ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "D3", "D4", "G2", "F4"]
RANK6 = ["A6", "B6", "C6", "D6", "E6", "F4", "G2"]


def test_parse_lie_type():
    t = parse_lie_type("B3xA1+T1")
    assert t.factors == (("B", 3), ("A", 1)) and t.torus_rank == 1
    assert str(t) == "B3xA1+T1"
    assert parse_lie_type("T2").torus_rank == 2
    with pytest.raises(LieError):
        parse_lie_type("E5")
    with pytest.raises(LieError):
        parse_lie_type("D2")
    with pytest.raises(LieError):
        parse_lie_type("H4")


def test_a1_data():
    rs = build_root_system("A1")
    a = rs.simple_roots[0]
    w = rs.fundamental_weights[0]
    assert rs.pairing(a, 0) == 2
    assert vec(w) == vscale(F(1, 2), a)


def test_b2_cartan_matrix():
    rs = build_root_system("B2")
    assert [list(r) for r in rs.cartan] == [[2, -1], [-2, 2]]


def test_g2_root_count():
    assert len(build_root_system("G2").roots()) == 12


@pytest.mark.parametrize("ts", RANK6)
def test_pairing_duality(ts):
    rs = build_root_system(ts)
    for i, w in enumerate(rs.fundamental_weights):
        for j in range(rs.num_simple):
            assert rs.pairing(w, j) == (1 if i == j else 0)


@pytest.mark.parametrize("ts", ALL_SMALL)
def test_cartan_consistency(ts):
    rs = build_root_system(ts)
    for i in range(rs.num_simple):
        assert rs.cartan[i][i] == 2
        for j in range(rs.num_simple):
            if i != j:
                assert rs.cartan[i][j] <= 0
                assert (rs.cartan[i][j] == 0) == (rs.cartan[j][i] == 0)


@pytest.mark.parametrize("ts", ALL_SMALL)
def test_inner_product_reflection_invariant(ts):
    rs = build_root_system(ts)
    vs = list(rs.fundamental_weights[:2]) + list(rs.simple_roots[:2])
    for i in range(rs.num_simple):
        for v in vs:
            for w in vs:
                assert rs.inner(rs.reflect(v, i), rs.reflect(w, i)) == rs.inner(v, w)


def test_weyl_orbit_examples():
    rsA1 = build_root_system("A1")
    w = rsA1.fundamental_weights[0]
    assert set(weyl_orbit(rsA1, w)) == {vec(w), vscale(-1, w)}
    rsA2 = build_root_system("A2")
    assert len(weyl_orbit(rsA2, rsA2.fundamental_weights[0])) == 3
    rsB2 = build_root_system("B2")
    orb = weyl_orbit(rsB2, rsB2.fundamental_weights[0])
    assert set(orb) == {(F(1), F(0)), (F(-1), F(0)), (F(0), F(1)), (F(0), F(-1))}


@pytest.mark.parametrize("ts", ALL_SMALL)
def test_orbit_reflection_closure_and_order(ts):
    rs = build_root_system(ts)
    for k in range(rs.num_simple):
        w = rs.fundamental_weights[k]
        orb = set(weyl_orbit(rs, w))
        for p in orb:
            for i in range(rs.num_simple):
                assert rs.reflect(p, i) in orb
        assert len(orb) * stabilizer_order(rs, w) == rs.weyl_order()


def test_orbit_order_nonfundamental():
    rs = build_root_system("C2")
    lam = parse_weight(rs, "3*w1+2*w2")  # regular
    assert len(weyl_orbit(rs, lam)) == rs.weyl_order()


def test_dominant_reflect_basics():
    rs = build_root_system("A1")
    w = rs.fundamental_weights[0]
    assert dominant_reflect(rs, w) == (vec(w), 1)
    d, s = dominant_reflect(rs, vscale(-1, w))
    assert d == vec(w) and s == -1
    rsA2 = build_root_system("A2")
    mu = rsA2.fundamental_weights[1]  # wall of alpha_1
    d, s = dominant_reflect(rsA2, mu)
    assert s == 0 and d == vec(mu)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["A2", "B2", "C3", "G2"]),
       st.lists(st.integers(-3, 3), min_size=3, max_size=3),
       st.lists(st.integers(0, 4), min_size=2, max_size=6))
def test_dominant_reflect_equivariance(ts, coeffs, word):
    rs = build_root_system(ts)
    mu = vec([F(0)] * rs.ambient_dim)
    for c, w in zip(coeffs, rs.fundamental_weights):
        mu = vadd(mu, vscale(c, w))
    dom, _ = dominant_reflect(rs, mu)
    assert dominant_reflect(rs, dom)[0] == dom  # idempotent
    moved = mu
    for i in word:
        moved = rs.reflect(moved, i % rs.num_simple)
    assert dominant_reflect(rs, moved)[0] == dom  # W-equivariant


def test_levi_data():
    rs = build_root_system("B3")
    L = levi_datum(rs, rs.fundamental_weights[2])
    assert L.component_types == [("A", 2)] and L.center_rank == 1
    rsF4 = build_root_system("F4")
    assert levi_datum(rsF4, rsF4.fundamental_weights[0]).component_types == [("B", 3)]
    assert levi_datum(rsF4, rsF4.fundamental_weights[3]).component_types == [("C", 3)]
    rsC2 = build_root_system("C2")
    lam = parse_weight(rsC2, "3*w1+2*w2")
    assert levi_datum(rsC2, lam).simple_root_indices == ()
    with pytest.raises(LieError):
        levi_datum(rsC2, vscale(-1, rsC2.fundamental_weights[0]))


def test_levi_series_orientation():
    # the B3 Levi inside F4 puts its short root last; the C3 Levi its long root last
    rsF4 = build_root_system("F4")
    L = levi_datum(rsF4, rsF4.fundamental_weights[0])
    series, l, chain = L.components[0]
    lens = [rsF4.inner(rsF4.simple_roots[i], rsF4.simple_roots[i]) for i in chain]
    assert series == "B" and lens[-1] < lens[0]
    L = levi_datum(rsF4, rsF4.fundamental_weights[3])
    series, l, chain = L.components[0]
    lens = [rsF4.inner(rsF4.simple_roots[i], rsF4.simple_roots[i]) for i in chain]
    assert series == "C" and lens[-1] > lens[0]


def test_character_lattice_a1():
    rs = build_root_system("A1")
    w = rs.fundamental_weights[0]
    cl = character_lattice(rs, [w])
    assert cl.rank == 1 and cl.faithful and not cl.is_full_weight_lattice
    assert cl.contains(rs.simple_roots[0]) and not cl.contains(w)
    cl2 = character_lattice(rs, [w, vec([F(0), F(0)])])
    assert cl2.is_full_weight_lattice and cl2.contains(w)


def test_character_lattice_c2_example():
    rs = build_root_system("C2")
    lam0 = parse_weight(rs, "3*w1")
    lam1 = parse_weight(rs, "2*w2")
    cl = character_lattice(rs, [lam0, lam1])
    # difference (-1, 2) plus the root lattice generate all of Z^2
    assert cl.contains((F(1), F(0))) and cl.contains((F(0), F(1)))


def test_highest_root_and_parsing():
    rs = build_root_system("B3")
    assert parse_weight(rs, "hr") == vec(rs.fundamental_weights[1])
    rsA2 = build_root_system("A2")
    assert parse_weight(rsA2, "hr") == vadd(rsA2.fundamental_weights[0],
                                            rsA2.fundamental_weights[1])
    rs = build_root_system("C3")
    assert parse_weight(rs, "hr") == vscale(2, rs.fundamental_weights[0])
    assert parse_weight(rs, "w1+2*w3") == vadd(rs.fundamental_weights[0],
                                               vscale(2, rs.fundamental_weights[2]))
    ws = parse_weights(rs, "w1, 2*w2")
    assert len(ws) == 2
    with pytest.raises(LieError):
        parse_weight(rs, "w9")
    with pytest.raises(LieError) as e:
        parse_weight(rs, "w1+zz")
    assert "position" in str(e.value)


def test_torus_characters():
    rs = build_root_system("A1+T1")
    t1 = parse_weight(rs, "t1")
    assert t1 == (F(0), F(0), F(1))
    assert rs.is_dominant(t1)
    assert len(weyl_orbit(rs, t1)) == 1


def test_e_series_levis_match_expected():
    rsE6 = build_root_system("E6")
    assert levi_datum(rsE6, rsE6.fundamental_weights[0]).component_types == [("D", 5)]
    assert levi_datum(rsE6, rsE6.fundamental_weights[4]).component_types == [("D", 5)]
    assert levi_datum(rsE6, rsE6.fundamental_weights[5]).component_types == [("A", 5)]
    assert levi_datum(rsE6, rsE6.fundamental_weights[2]).component_types == \
        [("A", 1), ("A", 2), ("A", 2)]
    rsE7 = build_root_system("E7")
    assert levi_datum(rsE7, rsE7.fundamental_weights[0]).component_types == [("E", 6)]
    rsE8 = build_root_system("E8")
    assert levi_datum(rsE8, rsE8.fundamental_weights[0]).component_types == [("E", 7)]
