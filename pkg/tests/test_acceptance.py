"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines and timings.  All equality checks are exact; the only tolerances are
the stated wall-clock limits.
"""

import itertools
import math
import time
from contextlib import contextmanager

from gacodes.chainring import (
    ChainRing,
    RingCode,
    annihilator,
    codeword_count,
    dual_code,
    enumerate_ring_codes,
    ideal_elements,
    lifted_system_for,
)
from gacodes.codes import (
    code_from_idempotent,
    direct_sum,
    minimum_weight,
    two_direction_sum_parameters,
    visible_basis_check,
)
from gacodes.dihedral import dihedral_code_table, simple_component_counts, DihedralGroup
from gacodes.equiv import equivalence_census, g_equivalence_classes, homocyclic_idempotent_form
from gacodes.ffield import make_extension
from gacodes.galg import GroupAlgebra
from gacodes.groups import AbelianGroup, all_subgroups, group_from_spec, subgroup_from_gens, trivial_subgroup
from gacodes.idem import (
    cyclic_chain_idempotents,
    essential_idempotents,
    primitive_idempotents,
    product_split_idempotents,
    three_prime_idempotents,
    two_power_idempotents_3mod8,
)
from oracles import cyclotomic_cosets


def algebra(spec, q):
    return GroupAlgebra(group_from_spec(spec), make_extension(q, 1))


@contextmanager
def criterion(number, description, limit=None):
    start = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - start
        if limit is not None and elapsed >= limit:
            raise AssertionError(
                f"criterion {number} exceeded its {limit}s limit ({elapsed:.2f}s)"
            )
    except Exception:
        elapsed = time.perf_counter() - start
        print(f"criterion {number:02d} [{description}]: FAIL after {elapsed:.2f}s")
        raise
    print(f"criterion {number:02d} [{description}]: PASS in {elapsed:.2f}s")


def test_criterion_01_c9xc3_minimal_code_table():
    with criterion(1, "F2[C9xC3] minimal-code parameters", limit=5.0):
        A = algebra("C9xC3", 2)
        system = primitive_idempotents(A)
        assert len(system) == 8
        system.validate()
        pairs = []
        for e in system:
            code = code_from_idempotent(e)
            pairs.append((code.dimension, minimum_weight(code)))
        assert sorted(pairs) == sorted(
            [(1, 27)] + [(6, 6)] * 3 + [(2, 18)] * 4
        )


def test_criterion_02_equivalence_counterexamples():
    with criterion(2, "four classes beating the divisor count, equal distributions"):
        census = equivalence_census(algebra("C9xC3", 2))
        assert census.class_count == 4
        assert census.divisor_count_prediction == 3
        assert not census.matches_prediction
        assert len(census.collision_pairs) == 1
        i, j = census.collision_pairs[0]
        ci, cj = census.report.classes[i], census.report.classes[j]
        assert ci.weight_distribution == cj.weight_distribution
        assert ci.dimension == cj.dimension == 2
        assert {ci.size, cj.size} == {1, 3}


def test_criterion_03_c27xc3_family():
    with criterion(3, "F2[C27xC3] dimensions, 2n classes, class weights", limit=30.0):
        A = algebra("C27xC3", 2)
        report = g_equivalence_classes(A)
        dims = sum(c.dimension * c.size for c in report.classes)
        assert dims == 81
        assert report.class_count == 6  # 2n at n = 3
        # hat(G) at p^(n+1), then two classes per level k with weight 2 p^(n-k+1)
        weights = sorted(c.min_weight for c in report.classes)
        assert weights == [6, 18, 18, 54, 54, 81]


def test_criterion_04_homocyclic_class_counts():
    with criterion(4, "homocyclic divisor-count theorem and factorization"):
        rep3 = homocyclic_idempotent_form(algebra("C3xC3", 2))
        assert rep3.class_count == 2 and rep3.findings == []
        rep9 = homocyclic_idempotent_form(algebra("C9xC9", 2))
        assert rep9.class_count == 3 and rep9.findings == []
        # every primitive other than hat(G) factored through a rank-(m-1) part
        assert len(rep3.factorizations) == len(primitive_idempotents(algebra("C3xC3", 2))) - 1
        assert len(rep9.factorizations) == len(primitive_idempotents(algebra("C9xC9", 2))) - 1


def test_criterion_05_cyclic_chain_parameters_and_sums():
    with criterion(5, "F2[C9] chain parameters and all direct-sum weights"):
        A = algebra("C9", 2)
        system = cyclic_chain_idempotents(A)
        codes = [code_from_idempotent(e) for e in system]
        assert codes[0].dimension == 1 and minimum_weight(codes[0]) == 9
        for i in (1, 2):
            assert codes[i].dimension == 3**i - 3 ** (i - 1)
            assert minimum_weight(codes[i]) == 2 * 3 ** (2 - i)
        expected = {
            (0,): 9, (1,): 6, (2,): 2,
            (0, 1): 3, (0, 2): 2, (1, 2): 2, (0, 1, 2): 1,
        }
        for r in range(1, 4):
            for subset in itertools.combinations(range(3), r):
                total = direct_sum([codes[i] for i in subset])
                assert minimum_weight(total) == expected[subset], subset


def test_criterion_06_two_power_explicit_lists():
    with criterion(6, "q=3 mod 8 explicit systems and visible bases"):
        F3 = make_extension(3, 1)
        for m, size in [(3, 5), (4, 7)]:
            system = two_power_idempotents_3mod8(m, F3)
            assert len(system) == size == len(cyclotomic_cosets(2**m, 3))
            system.validate()
            oracle = primitive_idempotents(system.algebra)
            assert {e.coeffs.tobytes() for e in system} == {
                e.coeffs.tobytes() for e in oracle
            }
            # visible bases for the chain codes of the same algebra
            chain = cyclic_chain_idempotents(system.algebra)
            G = system.algebra.group
            a = G.generator_indices[0]
            for i in range(1, m + 1):
                e = chain[i]
                code = code_from_idempotent(e)
                basis = [
                    system.algebra.basis_element(G.power(a, j)) * e
                    for j in range(2 ** (i - 1))
                ]
                assert visible_basis_check(code, basis)


def test_criterion_07_dihedral_tables():
    with criterion(7, "dihedral tables for (4,3), (3,5), (9,5)", limit=60.0):
        expected_rows = {
            (4, 3): {1: (1, 8), 2: (1, 8), 4: (4, 2)},
            (3, 5): {1: (1, 6), 3: (4, 2)},
            (9, 5): {1: (1, 18), 3: (4, 6), 9: (12, 2)},
        }
        for (n, q), by_divisor in expected_rows.items():
            table = dihedral_code_table(n, q)
            assert table.findings == []
            fq, rational, minimal = simple_component_counts(DihedralGroup(n), q)
            assert minimal and fq == len(table.rows)
            assert table.dimension_sum == 2 * n
            for row in table.rows:
                dim, w = by_divisor[row.divisor]
                assert (row.dimension, row.min_weight) == (dim, w), row.label


def test_criterion_08_two_and_three_prime_systems():
    with criterion(8, "two-prime census and the 14-member three-prime system"):
        A = algebra("C3xC11", 2)
        system = primitive_idempotents(A)
        assert len(system) == 5
        # the census pieces of the two-prime construction are exactly members
        G = A.group
        a, b = G.generator_indices
        hat3 = A.hat(subgroup_from_gens(G, [a]))
        hat11 = A.hat(subgroup_from_gens(G, [b]))
        member_keys = {e.coeffs.tobytes() for e in system}
        assert (hat3 * hat11).coeffs.tobytes() in member_keys
        assert (hat3 * (A.one() - hat11)).coeffs.tobytes() in member_keys
        assert ((A.one() - hat3) * hat11).coeffs.tobytes() in member_keys
        e1, e2 = product_split_idempotents(A, trivial_subgroup(G), trivial_subgroup(G))
        assert e1.coeffs.tobytes() in member_keys
        assert e2.coeffs.tobytes() in member_keys

        system3 = three_prime_idempotents(3, 5, 11)
        assert len(system3) == 14
        system3.validate()


def test_criterion_09_essential_idempotents():
    with criterion(9, "essential idempotent counts and repetition structure"):
        assert len(essential_idempotents(algebra("C7", 2))) == 2
        assert len(essential_idempotents(algebra("C9", 2))) == 1
        assert essential_idempotents(algebra("C3xC3", 2)) == []
        for spec in ["C7", "C9", "C3xC3"]:
            A = algebra(spec, 2)
            G = A.group
            ess = {x.coeffs.tobytes() for x in essential_idempotents(A)}
            subs = [H for H in all_subgroups(G) if H.order > 1]
            for e in primitive_idempotents(A):
                if e.coeffs.tobytes() in ess:
                    continue
                fixing = [H for H in subs if e * A.hat(H) == e]
                assert fixing
                H = fixing[0]
                for g in list(G.elements())[:: max(1, G.order // 9)]:
                    word = (A.basis_element(g) * e).coeffs
                    for x in G.elements():
                        for h in H.elements:
                            assert word[x] == word[G.mul(x, h)]


def test_criterion_10_chain_ring_codes():
    with criterion(10, "Z4[C7] lifting, census, sizes, duality", limit=10.0):
        ring = ChainRing(2, 2)
        system = lifted_system_for(ring, 7)
        assert len(system) == 3
        codes, count = enumerate_ring_codes(ring, 7)
        assert count == 27
        i = system.component_dims.index(3)
        exps = [2, 2, 2]
        exps[i] = 1
        assert codeword_count(RingCode(system, tuple(exps))) == 8
        for code in codes:
            dual, _ = dual_code(code)
            assert codeword_count(code) * codeword_count(dual) == 4**7
            assert ideal_elements(dual) == annihilator(code)


def test_criterion_11_cyclic_oracle_equivalence():
    with criterion(11, "character-orbit counts vs cyclotomic cosets, n <= 100", limit=120.0):
        checked = 0
        for q in (2, 3, 5):
            for n in range(2, 101):
                if math.gcd(q, n) != 1:
                    continue
                A = GroupAlgebra(AbelianGroup([n]), make_extension(q, 1))
                system = primitive_idempotents(A)
                assert len(system) == len(cyclotomic_cosets(n, q)), (n, q)
                checked += 1
        assert checked >= 190


def test_criterion_12_two_direction_sums():
    with criterion(12, "square-group direct sums at p = 3 and 5"):
        assert two_direction_sum_parameters(3, 2) == (4, 4)
        assert two_direction_sum_parameters(5, 2) == (8, 8)
