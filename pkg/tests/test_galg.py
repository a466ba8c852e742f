import numpy as np
import pytest

from gacodes.ffield import make_extension
from gacodes.galg import GroupAlgebra
from gacodes.groups import group_from_spec, subgroup_from_gens, trivial_subgroup
from oracles import dict_convolve


def algebra(spec, p):
    G = group_from_spec(spec)
    return GroupAlgebra(G, make_extension(p, 1))


def test_hat_examples():
    A = algebra("C4", 3)
    one = A.hat(trivial_subgroup(A.group))
    assert one == A.one()

    # C_2 = <t> over F_3: hat = 2*(1 + t) since 2 = 2^-1 mod 3
    B = algebra("C2", 3)
    t = B.group.generator_indices[0]
    hatH = B.hat(subgroup_from_gens(B.group, [t]))
    assert hatH == B.element({B.group.identity: 2, t: 2})

    # hat is idempotent whenever defined: C_7 over F_2
    C = algebra("C7", 2)
    hatG = C.hat(subgroup_from_gens(C.group, C.group.generator_indices))
    assert hatG * hatG == hatG

    with pytest.raises(ValueError):
        algebra("C2", 2).hat(subgroup_from_gens(group_from_spec("C2"), [1]))


def test_weight_and_support():
    A = algebra("C9xC3", 2)
    assert A.zero().weight() == 0
    hatG = A.hat(subgroup_from_gens(A.group, A.group.generator_indices))
    assert hatG.weight() == 27  # full support over F_2

    B = algebra("C4", 2)
    a = B.group.generator_indices[0]
    x = B.one() + B.basis_element(a)
    assert x.weight() == 2
    assert x.support() == [0, a]


def test_predicates():
    A = algebra("C9", 2)
    assert A.one().is_idempotent() and A.one().is_central()
    H = subgroup_from_gens(A.group, [A.group.power(A.group.generator_indices[0], 3)])
    assert A.hat(H).is_idempotent()

    # e_H, e_K for distinct co-cyclic H, K in C_9 over F_2 are orthogonal
    G = A.group
    a = G.generator_indices[0]
    h1 = trivial_subgroup(G)
    h1s = subgroup_from_gens(G, [G.power(a, 3)])
    e1 = A.hat(h1) - A.hat(h1s)
    e2 = A.hat(h1s) - A.hat(subgroup_from_gens(G, [a]))
    assert e1.is_idempotent() and e2.is_idempotent()
    assert e1.is_orthogonal(e2)


def test_involution():
    A = algebra("C4", 2)
    a = A.group.generator_indices[0]
    assert A.one().involution() == A.one()
    assert A.basis_element(a).involution() == A.basis_element(A.group.power(a, 3))
    H = subgroup_from_gens(A.group, [A.group.power(a, 2)])
    hatH = algebra("C4", 3).hat(H)  # same subgroup, odd characteristic
    assert hatH.involution() == hatH

    rng = np.random.default_rng(7)
    B = algebra("C2xC4", 3)
    for _ in range(20):
        x, y = B.random_element(rng), B.random_element(rng)
        assert (x * y).involution() == y.involution() * x.involution()
        assert x.involution().involution() == x


def test_ring_axioms_random_triples():
    rng = np.random.default_rng(0)
    for spec, p in [("C9xC3", 2), ("C8", 3), ("C3xC11", 2), ("C5xC5", 2)]:
        A = algebra(spec, p)
        for _ in range(25):
            x, y, z = (A.random_element(rng) for _ in range(3))
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z
            assert (x + y) * z == x * z + y * z
            assert x * A.one() == x and A.one() * x == x


def test_convolution_matches_dict_oracle():
    rng = np.random.default_rng(3)
    A = algebra("C2xC4", 5)
    G = A.group
    for _ in range(10):
        x, y = A.random_element(rng), A.random_element(rng)
        xd = {g: int(x.coeffs[g]) for g in x.support()}
        yd = {g: int(y.coeffs[g]) for g in y.support()}
        expect = dict_convolve(xd, yd, G.mul, 5)
        got = x * y
        assert {g: int(got.coeffs[g]) for g in got.support()} == expect


def test_hat_product_is_hat_of_join():
    # Sylow parts: hat(G_p) * hat(G_q) = hat(G) for G = G_p x G_q
    A = algebra("C3xC11", 2)
    G = A.group
    GP = subgroup_from_gens(G, [G.generator_indices[0]])
    GQ = subgroup_from_gens(G, [G.generator_indices[1]])
    full = subgroup_from_gens(G, G.generator_indices)
    assert A.hat(GP) * A.hat(GQ) == A.hat(full)

    B = algebra("C9xC3", 2)
    H = subgroup_from_gens(B.group, [B.group.generator_indices[1]])
    K = subgroup_from_gens(B.group, [B.group.power(B.group.generator_indices[0], 3)])
    joined = subgroup_from_gens(B.group, list(H.generators) + list(K.generators))
    assert B.hat(H) * B.hat(K) == B.hat(joined)


def test_weight_subadditive():
    rng = np.random.default_rng(11)
    A = algebra("C9xC3", 2)
    for _ in range(50):
        x, y = A.random_element(rng), A.random_element(rng)
        assert (x + y).weight() <= x.weight() + y.weight()


def test_rendering_and_json():
    A = algebra("C4", 3)
    a = A.group.generator_indices[0]
    x = A.one() + A.element({a: 2})
    assert x.render() == "1 + 2*a"
    assert '"coeffs": [1, 2, 0, 0]' in x.to_json()
    assert A.zero().render() == "0"


def test_extension_field_coefficients_rejected():
    with pytest.raises(ValueError):
        GroupAlgebra(group_from_spec("C3"), make_extension(2, 2))
