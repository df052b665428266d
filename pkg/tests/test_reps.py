import sys
from fractions import Fraction as F

import pytest

sys.path.insert(0, "src")

from oracles import char_product_decompose
from rgc import reps
from rgc.lie import build_root_system, levi_datum, parse_weight
from rgc.linalg import vadd, vec, vscale, vsub, vzero
from rgc.reps import (
    branch_to_levi, generate_semigroup, lgens_generators, moment_witness,
    semigroup_member, tensor_decompose, weight_system, weyl_dim,
)


def test_a1_string():
    rs = build_root_system("A1")
    ws = weight_system(rs, parse_weight(rs, "2*w1"))
    assert ws.dim() == 3
    assert ws.entries[vzero(2)] == 1
    assert ws.entries[vec(rs.simple_roots[0])] == 1


def test_g2_small_reps():
    rs = build_root_system("G2")
    ws = weight_system(rs, rs.fundamental_weights[0])
    assert ws.dim() == 7 and ws.multiplicity(vzero(3)) == 1
    ws = weight_system(rs, rs.fundamental_weights[1])
    assert ws.dim() == 14 and ws.multiplicity(vzero(3)) == 2


def test_b3_spinor_weights():
    rs = build_root_system("B3")
    ws = weight_system(rs, rs.fundamental_weights[2])
    assert ws.dim() == 8
    expected = {tuple(F(s, 2) for s in signs)
                for signs in [(a, b, c) for a in (1, -1) for b in (1, -1) for c in (1, -1)]}
    assert set(ws.entries) == expected
    assert all(m == 1 for m in ws.entries.values())


def test_weyl_dims():
    for ts, k, d in [("F4", 1, 26), ("F4", 4, 52), ("F4", 2, 273), ("F4", 3, 1274),
                     ("E6", 1, 27), ("E6", 5, 27), ("E6", 6, 78),
                     ("E7", 1, 56), ("E8", 1, 248)]:
        rs = build_root_system(ts)
        assert weyl_dim(rs, rs.fundamental_weights[k - 1]) == d


def test_dimension_conservation_sweep():
    # weight systems carry a built-in total-vs-Weyl-dim assertion; sweep all
    # rank <= 4 types over small labels, capped by dimension to stay desk-scale
    from itertools import product
    types = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4",
             "D3", "D4", "F4", "G2"]
    for ts in types:
        rs = build_root_system(ts)
        for labels in product(range(4), repeat=rs.num_simple):
            if sum(labels) == 0 or sum(labels) > 4:
                continue
            lam = vzero(rs.ambient_dim)
            for c, w in zip(labels, rs.fundamental_weights):
                lam = vadd(lam, vscale(c, w))
            if weyl_dim(rs, lam) > 4000:
                continue
            weight_system(rs, lam)  # raises if conservation fails


def test_tensor_basic_examples():
    rs = build_root_system("A1")
    w = rs.fundamental_weights[0]
    res = tensor_decompose(rs, w, w)
    assert res == {vscale(2, w): 1, vzero(2): 1}
    rsA2 = build_root_system("A2")
    w1, w2 = rsA2.fundamental_weights
    assert tensor_decompose(rsA2, w1, w2) == {vadd(w1, w2): 1, vzero(3): 1}
    rsC2 = build_root_system("C2")
    res = tensor_decompose(rsC2, rsC2.fundamental_weights[1], rsC2.fundamental_weights[1])
    assert res[vscale(2, rsC2.fundamental_weights[1])] == 1
    assert res[vzero(2)] == 1


@pytest.mark.parametrize("ts", ["A2", "B2", "C2", "G2"])
def test_tensor_against_character_oracle(ts):
    rs = build_root_system(ts)
    from itertools import product
    weights = []
    for labels in product(range(2), repeat=rs.num_simple):
        lam = vzero(rs.ambient_dim)
        for c, w in zip(labels, rs.fundamental_weights):
            lam = vadd(lam, vscale(c, w))
        weights.append(lam)
    for a in weights:
        for b in weights:
            got = tensor_decompose(rs, a, b)
            expected = char_product_decompose(rs, a, b)
            assert got == expected
            dims = sum(weyl_dim(rs, w) * m for w, m in got.items())
            assert dims == weyl_dim(rs, a) * weyl_dim(rs, b)


def test_tensor_bilinearity_levi():
    rs = build_root_system("F4")
    levi = levi_datum(rs, rs.fundamental_weights[0]).simple_root_indices
    a = vscale(-1, rs.simple_roots[0])
    res = tensor_decompose(rs, a, a, levi=levi)
    dims = sum(weyl_dim(rs, w, levi) * m for w, m in res.items())
    assert dims == weyl_dim(rs, a, levi) ** 2


def test_branch_b3_spinor():
    rs = build_root_system("B3")
    spin = rs.fundamental_weights[2]
    L = levi_datum(rs, spin)
    br = branch_to_levi(rs, spin, L.simple_root_indices)
    assert dict(br)[vec(spin)] == 1
    shifted = sorted(vsub(w, spin) for w, _ in br if vec(w) != vec(spin))
    assert shifted == sorted([(F(0), F(0), F(-1)), (F(0), F(-1), F(-1)),
                              (F(-1), F(-1), F(-1))])


def test_branch_trivial():
    rs = build_root_system("B3")
    L = levi_datum(rs, rs.fundamental_weights[0])
    assert branch_to_levi(rs, vzero(3), L.simple_root_indices) == [(vzero(3), 1)]


def test_branch_conservation():
    rs = build_root_system("C3")
    lam = rs.fundamental_weights[1]
    L = levi_datum(rs, lam)
    br = branch_to_levi(rs, lam, L.simple_root_indices)
    total = {}
    for w, mult in br:
        for nu, m in weight_system(rs, w, L.simple_root_indices).entries.items():
            total[nu] = total.get(nu, 0) + m * mult
    assert total == weight_system(rs, lam).entries


def test_branch_f4_w1_matches_expected_profile():
    rs = build_root_system("F4")
    lam = rs.fundamental_weights[0]
    L = levi_datum(rs, lam)
    br = branch_to_levi(rs, lam, L.simple_root_indices)
    shifted = sorted(vsub(w, lam) for w, _ in br if vec(w) != vec(lam))
    expected = sorted([
        (F(-2), F(0), F(0), F(0)),                      # 4 eps'
        (F(-3, 2), F(1, 2), F(1, 2), F(1, 2)),          # 3 eps' + spin
        (F(-1), F(0), F(0), F(0)),                      # 2 eps'
        (F(-1), F(1), F(0), F(0)),                      # 2 eps' + vector
        (F(-1, 2), F(1, 2), F(1, 2), F(1, 2)),          # eps' + spin
    ])
    assert shifted == expected


def test_lgens_generators():
    rs = build_root_system("A3")
    w1 = rs.fundamental_weights[0]
    L = levi_datum(rs, w1)
    gens = lgens_generators(rs, [w1], w1, L.simple_root_indices)
    assert gens == [vscale(-1, rs.simple_roots[0])]
    rsG2 = build_root_system("G2")
    w2 = rsG2.fundamental_weights[1]
    L = levi_datum(rsG2, w2)
    gens = lgens_generators(rsG2, [w2], w2, L.simple_root_indices)
    assert gens == [vscale(-1, rsG2.simple_roots[1])]
    rsC2 = build_root_system("C2")
    lam0 = parse_weight(rsC2, "3*w1")
    lam1 = parse_weight(rsC2, "2*w2")
    L = levi_datum(rsC2, lam0)
    gens = lgens_generators(rsC2, [lam0, lam1], lam0, L.simple_root_indices)
    assert set(gens) == {vsub(lam1, lam0), vscale(-1, rsC2.simple_roots[0])}
    with pytest.raises(Exception):
        lgens_generators(rsC2, [lam1], lam0, L.simple_root_indices)


def test_generate_semigroup_examples():
    rs = build_root_system("A1")
    w = rs.fundamental_weights[0]
    sg = generate_semigroup(rs, [w], 2)
    assert sg.explored == {vec(w): 1, vscale(2, w): 2, vzero(2): 2}
    rsA2 = build_root_system("A2")
    sg = generate_semigroup(rsA2, [rsA2.fundamental_weights[0]], 3)
    assert sg.explored[vzero(3)] == 3


def test_generate_semigroup_monotonicity():
    rs = build_root_system("C2")
    L = levi_datum(rs, rs.fundamental_weights[1])
    gens = lgens_generators(rs, [vec(rs.fundamental_weights[1])],
                            rs.fundamental_weights[1], L.simple_root_indices)
    s1 = generate_semigroup(rs, gens, 2, levi=L.simple_root_indices)
    s2 = generate_semigroup(rs, gens, 4, levi=L.simple_root_indices)
    assert set(s1.explored) <= set(s2.explored)
    for w, d in s1.explored.items():
        assert s2.explored[w] == d


def test_generate_semigroup_budget_error():
    rs = build_root_system("A2")
    with pytest.raises(reps.ResourceError) as e:
        generate_semigroup(rs, [rs.fundamental_weights[0], rs.fundamental_weights[1]],
                           8, budget=5)
    assert e.value.partial is not None and e.value.partial.explored


def test_c2_w2_slice_semigroup():
    # the doubled second wedge appears, the single one never does
    rs = build_root_system("C2")
    lam = rs.fundamental_weights[1]
    L = levi_datum(rs, lam)
    gens = lgens_generators(rs, [vec(lam)], lam, L.simple_root_indices)
    sg = generate_semigroup(rs, gens, 6, levi=L.simple_root_indices)
    pi2 = (F(-1), F(-1))
    assert vscale(2, pi2) in sg.explored
    assert pi2 not in sg.explored
    assert semigroup_member(rs, gens, pi2, levi=L.simple_root_indices) is False
    assert semigroup_member(rs, gens, vscale(2, pi2), levi=L.simple_root_indices) is True


def test_lgens_cover_degree_one_branching():
    # every nonzero shifted branching weight is reachable from the lgens list
    for ts, wstr in [("B3", "w3"), ("C3", "w3"), ("G2", "w2"), ("B2", "w1")]:
        rs = build_root_system(ts)
        lam = parse_weight(rs, wstr)
        L = levi_datum(rs, lam)
        gens = lgens_generators(rs, [vec(lam)], lam, L.simple_root_indices)
        for w, _m in branch_to_levi(rs, lam, L.simple_root_indices):
            shifted = vsub(w, lam)
            if all(x == 0 for x in shifted):
                continue
            assert semigroup_member(rs, gens, shifted,
                                    levi=L.simple_root_indices) is True


def test_moment_witness_examples():
    rsA2 = build_root_system("A2")
    w1 = rsA2.fundamental_weights[0]
    assert moment_witness(rsA2, [w1], w1) == 1
    assert moment_witness(rsA2, [w1], vzero(3)) == 3
    rsB2 = build_root_system("B2")
    v = rsB2.fundamental_weights[0]
    # vertex of the dominant part of the square: the weight itself
    assert moment_witness(rsB2, [v], v) == 1
    with pytest.raises(Exception):
        moment_witness(rsA2, [w1], vscale(3, w1))  # outside the polytope
