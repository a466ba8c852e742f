import pytest

from gacodes.ffield import make_extension
from gacodes.groups import (
    AbelianGroup,
    automorphisms,
    all_subgroups,
    characters,
    cocyclic_cover,
    cocyclic_subgroups,
    divisor_count,
    euler_phi,
    group_from_spec,
    subgroup_from_gens,
    trivial_subgroup,
)
from oracles import naive_phi, naive_tau, subgroup_sets


def test_spec_parsing_and_normalization():
    G = group_from_spec("C9xC3")
    assert G.factor_orders == (9, 3)
    assert G.order == 27 and G.exponent == 9
    assert group_from_spec("c2Xc2").factor_orders == (2, 2)
    # invariant-factor input is normalized to primary decomposition
    assert AbelianGroup([18]).factor_orders == (2, 9)
    assert AbelianGroup([6, 2]).factor_orders == (2, 2, 3)
    with pytest.raises(ValueError):
        group_from_spec("D4")
    with pytest.raises(ValueError):
        AbelianGroup([1])


def test_element_arithmetic():
    G = group_from_spec("C9xC3")
    a, b = G.generator_indices
    assert G.element_order(a) == 9 and G.element_order(b) == 3
    assert G.mul(a, G.inv(a)) == G.identity
    assert G.element_name(G.mul(G.power(a, 3), b)) == "a^3*b"
    assert G.element_name(G.identity) == "1"
    table = G.mul_table()
    for i in [0, 1, 5, 20]:
        for j in [0, 2, 13]:
            assert table[i, j] == G.mul(i, j)


def test_all_subgroups_counts_against_oracle():
    # spec-level examples: C_4 -> 3, C_2xC_2 -> 5; oracle pins C_9xC_3 at 10
    for spec, expected in [("C4", 3), ("C2xC2", 5), ("C9xC3", 10)]:
        G = group_from_spec(spec)
        subs = all_subgroups(G)
        assert len(subs) == expected
        assert {frozenset(s.elements) for s in subs} == subgroup_sets(G)
        orders = [s.order for s in subs]
        assert orders == sorted(orders)
        for s in subs:
            assert G.order % s.order == 0


def test_lagrange_and_closure_on_more_groups():
    for spec in ["C8", "C3xC3", "C2xC4", "C9xC9"]:
        G = group_from_spec(spec)
        subs = all_subgroups(G)
        assert {frozenset(s.elements) for s in subs} == subgroup_sets(G)
        for s in subs:
            members = set(s.elements)
            for x in s.elements:
                assert G.inv(x) in members
                for y in s.generators:
                    assert G.mul(x, y) in members


def test_cocyclic_subgroups():
    C4 = group_from_spec("C4")
    cc = cocyclic_subgroups(C4)
    assert [s.order for s in cc] == [1, 2]  # {1} and <a^2>

    V = group_from_spec("C2xC2")
    cc = cocyclic_subgroups(V)
    assert [s.order for s in cc] == [2, 2, 2]  # not {1}: G/{1} is not cyclic

    G = group_from_spec("C9xC3")
    cc = cocyclic_subgroups(G)
    # 3 of order 3 (quotient C_9) and 4 of order 9 (quotient C_3); <a^3> is
    # excluded because G/<a^3> = C_3 x C_3
    assert [s.order for s in cc] == [3, 3, 3, 9, 9, 9, 9]
    a, b = G.generator_indices
    a3 = subgroup_from_gens(G, [G.power(a, 3)])
    assert a3 not in cc


def test_cocyclic_cover():
    C4 = group_from_spec("C4")
    H = trivial_subgroup(C4)
    assert cocyclic_cover(C4, H).order == 2

    G = group_from_spec("C9xC3")
    a, b = G.generator_indices
    Hb = subgroup_from_gens(G, [b])
    cover = cocyclic_cover(G, Hb)
    assert cover == subgroup_from_gens(G, [G.power(a, 3), b])

    C9 = group_from_spec("C9")
    g = C9.generator_indices[0]
    H3 = subgroup_from_gens(C9, [C9.power(g, 3)])
    assert cocyclic_cover(C9, H3).is_whole_group

    with pytest.raises(ValueError):
        cocyclic_cover(group_from_spec("C6"), trivial_subgroup(group_from_spec("C6")))


def test_cover_uniqueness_by_exhaustion():
    # no other overgroup of index p lies in a cyclic quotient chain
    G = group_from_spec("C9xC3")
    p = 3
    for H in cocyclic_subgroups(G):
        cover = cocyclic_cover(G, H)
        others = [
            S
            for S in all_subgroups(G)
            if S.order == H.order * p and all(S.contains(x) for x in H.elements)
        ]
        chained = [S for S in others if quotient_chain_ok(G, H, S)]
        assert chained == [cover]


def quotient_chain_ok(G, H, S):
    from gacodes.groups import quotient_is_cyclic

    return quotient_is_cyclic(G, H) and all(S.contains(x) for x in H.elements)


def test_automorphism_counts():
    assert len(automorphisms(group_from_spec("C3"))) == 2
    assert len(automorphisms(group_from_spec("C2xC2"))) == 6  # |GL(2, F_2)|
    assert len(automorphisms(group_from_spec("C9"))) == 6  # phi(9)


def test_automorphisms_form_a_group():
    for spec in ["C4", "C2xC2", "C9", "C3xC3"]:
        G = group_from_spec(spec)
        auts = automorphisms(G)
        keys = {a.generator_images for a in auts}
        identity = tuple(G.generator_indices)
        assert identity in keys
        for x in auts:
            assert any(x.compose(y).generator_images == identity for y in auts)
            for y in auts[:6]:
                assert x.compose(y).generator_images in keys
        for x in auts:
            # permutations are really automorphisms
            for i in [0, 1, G.order - 1]:
                for j in [0, 1, G.order // 2]:
                    assert x(G.mul(i, j)) == G.mul(x(i), x(j))


def test_sylow_components_of_cocyclic_subgroups():
    # each p-part of a co-cyclic subgroup is co-cyclic in the Sylow p-part
    # (or is the whole Sylow p-part)
    G = group_from_spec("C3xC11")
    for H in cocyclic_subgroups(G):
        for p in G.primes():
            sylow_g = set(G.sylow_elements(p))
            hp = sorted(set(H.elements) & sylow_g)
            Gp = subgroup_from_gens(G, sorted(sylow_g))
            assert set(hp) <= sylow_g
            if len(hp) != Gp.order:
                # quotient of Sylow part by H_p must be cyclic: check via
                # coset orders inside the Sylow part
                target = Gp.order // len(hp)
                assert any(
                    _coset_order_in(G, hp, x) == target for x in Gp.elements
                )


def _coset_order_in(G, subgroup_elems, g):
    k, y = 1, g
    sset = set(subgroup_elems)
    while y not in sset:
        y = G.mul(y, g)
        k += 1
    return k


def test_characters_c2_f3():
    G = group_from_spec("C2")
    F = make_extension(3, 1)
    ct = characters(G, F)
    assert len(ct) == 2
    rows = {tuple(e.lift() for e in row) for row in ct.values}
    assert rows == {(1, 1), (1, 2)}  # trivial and g -> -1


def test_characters_c3_f4():
    G = group_from_spec("C3")
    F = make_extension(2, 2)
    ct = characters(G, F)
    assert len(ct) == 3
    omega = ct.zeta
    assert omega * omega + omega + F.one() == F.zero()
    values = {v for row in ct.values for v in row}
    assert values == {F.one(), omega, omega * omega}


def test_characters_orthogonality_rows():
    G = group_from_spec("C2xC2")
    F = make_extension(3, 1)
    ct = characters(G, F)
    assert len(ct) == 4
    assert len(set(ct.values)) == 4
    for v, row in enumerate(ct.values):
        total = F.zero()
        for x in row:
            total = total + x
        assert total == (F.element(G.order) if v == 0 else F.zero())
    with pytest.raises(ValueError):
        characters(group_from_spec("C5"), make_extension(3, 1))


def test_arithmetic_functions():
    assert euler_phi(9) == 6
    assert divisor_count(12) == 6
    assert euler_phi(3**2) == 3**2 - 3**1
    for n in range(1, 200):
        assert euler_phi(n) == naive_phi(n)
        assert divisor_count(n) == naive_tau(n)
