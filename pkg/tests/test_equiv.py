import numpy as np
import pytest

from gacodes.equiv import (
    apply_automorphism,
    equivalence_census,
    g_equivalence_classes,
    g_isomorphism_classes,
    homocyclic_idempotent_form,
)
from gacodes.ffield import make_extension
from gacodes.galg import GroupAlgebra
from gacodes.groups import (
    automorphisms,
    cocyclic_subgroups,
    group_from_spec,
    subgroup_from_gens,
)
from gacodes.idem import cocyclic_idempotent, hat_full_group


def algebra(spec, p):
    return GroupAlgebra(group_from_spec(spec), make_extension(p, 1))


def test_apply_automorphism_basics():
    A = algebra("C9xC3", 2)
    G = A.group
    auts = automorphisms(G)
    identity = next(a for a in auts if a.generator_images == tuple(G.generator_indices))
    rng = np.random.default_rng(5)
    x = A.random_element(rng)
    assert apply_automorphism(identity, x) == x
    psi = auts[len(auts) // 2]
    y = A.random_element(rng)
    # multiplicativity of the linear extension
    assert apply_automorphism(psi, x * y) == apply_automorphism(psi, x) * apply_automorphism(psi, y)
    assert apply_automorphism(psi, hat_full_group(A)) == hat_full_group(A)


def test_automorphisms_permute_subgroup_idempotents():
    A = algebra("C9xC3", 2)
    G = A.group
    family = {H: cocyclic_idempotent(A, H) for H in cocyclic_subgroups(G)}
    for psi in automorphisms(G)[::7]:
        for H, eH in family.items():
            assert apply_automorphism(psi, eH) == family[psi.apply_subgroup(H)]


def test_equivalence_classes_c9xc3():
    report = g_equivalence_classes(algebra("C9xC3", 2))
    assert report.class_count == 4
    assert report.findings == []
    sizes = sorted(c.size for c in report.classes)
    assert sizes == [1, 1, 3, 3]
    data = sorted((c.dimension, c.min_weight, c.size) for c in report.classes)
    assert data == [(1, 27, 1), (2, 18, 1), (2, 18, 3), (6, 6, 3)]


def test_census_counterexamples_c9xc3():
    census = equivalence_census(algebra("C9xC3", 2))
    assert census.class_count == 4
    assert census.divisor_count_prediction == 3  # tau(9)
    assert not census.matches_prediction
    # the two dimension-2 classes share a weight distribution yet differ
    assert len(census.collision_pairs) == 1
    i, j = census.collision_pairs[0]
    ci, cj = census.report.classes[i], census.report.classes[j]
    assert {ci.size, cj.size} == {1, 3} and ci.dimension == cj.dimension == 2


def test_census_holds_for_cyclic_groups():
    census = equivalence_census(algebra("C7", 2))
    assert census.class_count == 2 == census.divisor_count_prediction
    assert census.matches_prediction
    census9 = equivalence_census(algebra("C9", 2))
    assert census9.class_count == 3 == census9.divisor_count_prediction


def test_g_isomorphism_classes():
    G = group_from_spec("C9xC3")
    a, b = G.generator_indices
    classes = g_isomorphism_classes(G)
    # <a^3> and <b> are isomorphic but not G-isomorphic
    a3 = subgroup_from_gens(G, [G.power(a, 3)])
    bb = subgroup_from_gens(G, [b])
    cls_of = {}
    for k, cl in enumerate(classes):
        for H in cl:
            cls_of[H] = k
    assert cls_of[a3] != cls_of[bb]

    # cyclic group: one class per divisor, each a singleton
    C12 = group_from_spec("C12")
    classes12 = g_isomorphism_classes(C12)
    assert len(classes12) == 6
    assert all(len(cl) == 1 for cl in classes12)


def test_equivalence_classes_c3xc3():
    report = g_equivalence_classes(algebra("C3xC3", 2))
    assert report.class_count == 2  # tau(3)
    sizes = sorted(c.size for c in report.classes)
    assert sizes == [1, 4]


def test_homocyclic_form_c3_squared():
    rep = homocyclic_idempotent_form(algebra("C3xC3", 2))
    assert rep.class_count == 2 == rep.expected_class_count
    assert rep.findings == []
    for row in rep.factorizations:
        assert (row.dimension, row.min_weight) == (
            row.expected_dimension,
            row.expected_min_weight,
        )
    # weights per the closed form: 2 * p^(r(m-1)+(r-1)) = 6 for the level-1 rows
    assert {row.min_weight for row in rep.factorizations} == {6}


def test_homocyclic_form_c9_squared():
    rep = homocyclic_idempotent_form(algebra("C9xC9", 2))
    assert rep.class_count == 3 == rep.expected_class_count
    assert rep.findings == []
    weights = {row.chain_level: row.min_weight for row in rep.factorizations}
    assert weights == {1: 54, 2: 18}  # 2*3^(2+1), 2*3^2
    dims = {row.chain_level: row.dimension for row in rep.factorizations}
    assert dims == {1: 2, 2: 6}
    with pytest.raises(ValueError):
        homocyclic_idempotent_form(algebra("C9xC3", 2))
    with pytest.raises(ValueError):
        homocyclic_idempotent_form(algebra("C16xC16", 7))  # 7 = 1 mod 16? no: order 2


def test_homocyclic_form_c3_cubed():
    rep = homocyclic_idempotent_form(algebra("C3xC3xC3", 2))
    assert rep.class_count == 2
    # every non-trivial primitive factors through a rank-2 subgroup of order 9
    assert all(row.chain_level == 1 for row in rep.factorizations)
    assert len(rep.factorizations) == 13
