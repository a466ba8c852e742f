"""Code equivalence under group automorphisms.

Orbits of the primitive idempotents under Aut(G) (applied to coefficient
vectors, not inferred from subgroup bookkeeping), orbits on subgroups,
the divisor-count census with its weight-distribution collisions, and the
structural factorization of primitive idempotents in homocyclic groups.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .codes import code_from_idempotent, minimum_weight, weight_distribution
from .errors import ConsistencyError
from .ffield import factorize, order_mod
from .galg import AlgebraElement, GroupAlgebra
from .groups import (
    AbelianGroup,
    Automorphism,
    Subgroup,
    all_subgroups,
    automorphisms,
    cocyclic_subgroups,
    divisor_count,
    euler_phi,
    subgroup_from_gens,
)
from .idem import (
    IdempotentSystem,
    cocyclic_idempotent,
    cocyclic_image,
    hat_full_group,
    primitive_idempotents,
)


def apply_automorphism(psi: Automorphism, alpha: AlgebraElement) -> AlgebraElement:
    """Linear extension of a group automorphism to the group algebra."""
    if psi.group != alpha.algebra.group:
        raise ValueError("automorphism and element live on different groups")
    out = np.empty_like(alpha.coeffs)
    out[psi.perm] = alpha.coeffs
    return AlgebraElement(alpha.algebra, out)


@dataclass
class CodeClass:
    representative_index: int
    representative_label: str
    member_indices: list[int]
    dimension: int
    min_weight: int
    weight_distribution: list[int]
    image_subgroup: str

    @property
    def size(self) -> int:
        return len(self.member_indices)


@dataclass
class EquivalenceReport:
    group: str
    field: str
    system: IdempotentSystem
    classes: list[CodeClass]
    subgroup_classes: list[list[Subgroup]]
    findings: list[str] = field(default_factory=list)

    @property
    def class_count(self) -> int:
        return len(self.classes)


def g_equivalence_classes(
    algebra: GroupAlgebra, budget: int = 2**24
) -> EquivalenceReport:
    """Aut(G)-orbits of the primitive idempotents, with per-class code data.

    Orbits are computed by applying every automorphism to coefficient
    vectors.  All members of one class must share dimension and weight
    distribution (automorphisms permute coordinates); that is checked
    exactly, as is the compatibility of orbits with the attached co-cyclic
    subgroups.
    """
    G = algebra.group
    system = primitive_idempotents(algebra)
    auts = automorphisms(G)
    index = {e.coeffs.tobytes(): i for i, e in enumerate(system)}
    family = [(H, cocyclic_idempotent(algebra, H)) for H in cocyclic_subgroups(G)]
    images = [cocyclic_image(e, family) for e in system]

    findings: list[str] = []
    visited = [False] * len(system)
    classes: list[CodeClass] = []
    for start in range(len(system)):
        if visited[start]:
            continue
        orbit = [start]
        visited[start] = True
        cursor = 0
        while cursor < len(orbit):
            i = orbit[cursor]
            cursor += 1
            coeffs_i = system[i].coeffs
            for psi in auts:
                moved = np.empty_like(coeffs_i)
                moved[psi.perm] = coeffs_i
                j = index.get(moved.tobytes())
                if j is None:
                    raise ConsistencyError(
                        "automorphism image is not a primitive idempotent"
                    )
                if not visited[j]:
                    # orbit edge found: the attached subgroups must move along
                    mapped = tuple(sorted(int(psi.perm[x]) for x in images[i].elements))
                    if mapped != images[j].elements:
                        raise ConsistencyError(
                            "subgroup attachment is not automorphism-equivariant"
                        )
                    visited[j] = True
                    orbit.append(j)
        rep = min(orbit, key=lambda i: tuple(system[i].coeffs.tolist()))
        rep_code = code_from_idempotent(system[rep])
        dist = weight_distribution(rep_code, budget=budget)
        for i in orbit:
            code_i = code_from_idempotent(system[i])
            if code_i.dimension != rep_code.dimension or weight_distribution(
                code_i, budget=budget
            ) != dist:
                raise ConsistencyError(
                    "orbit members disagree on dimension or weight distribution"
                )
        classes.append(
            CodeClass(
                representative_index=rep,
                representative_label=system.labels[rep],
                member_indices=sorted(orbit),
                dimension=rep_code.dimension,
                min_weight=minimum_weight(rep_code, budget=budget),
                weight_distribution=dist,
                image_subgroup=images[rep].name,
            )
        )
    classes.sort(key=lambda c: tuple(system[c.representative_index].coeffs.tolist()))

    subgroup_classes = g_isomorphism_classes(G, subgroups=cocyclic_subgroups(G))
    image_class_count = _count_image_classes(images, auts)
    if image_class_count != len(classes):
        findings.append(
            f"code classes ({len(classes)}) != automorphism orbits on attached "
            f"subgroups ({image_class_count})"
        )
    return EquivalenceReport(
        group=G.name,
        field=algebra.ring.name,
        system=system,
        classes=classes,
        subgroup_classes=subgroup_classes,
        findings=findings,
    )


def _count_image_classes(images: list[Subgroup], auts: list[Automorphism]) -> int:
    distinct = {H.elements for H in images}
    seen: set = set()
    count = 0
    for elems in sorted(distinct):
        if elems in seen:
            continue
        count += 1
        for psi in auts:
            seen.add(tuple(sorted(int(psi.perm[x]) for x in elems)))
    return count


def g_isomorphism_classes(
    G: AbelianGroup, subgroups: Optional[list[Subgroup]] = None
) -> list[list[Subgroup]]:
    """Aut(G)-orbits on the subgroup lattice (or on a given subgroup list)."""
    if subgroups is None:
        subgroups = all_subgroups(G)
    auts = automorphisms(G)
    by_elements = {H.elements: H for H in subgroups}
    classes: list[list[Subgroup]] = []
    done: set = set()
    for H in subgroups:
        if H.elements in done:
            continue
        orbit_elems = {
            tuple(sorted(int(psi.perm[x]) for x in H.elements)) for psi in auts
        }
        orbit_elems &= set(by_elements)
        done |= orbit_elems
        classes.append([by_elements[e] for e in sorted(orbit_elems)])
    classes.sort(key=lambda cl: (cl[0].order, cl[0].elements))
    return classes


@dataclass
class CensusReport:
    group: str
    field: str
    class_count: int
    divisor_count_prediction: int
    matches_prediction: bool
    collision_pairs: list[tuple[int, int]]
    report: EquivalenceReport

    @property
    def distributions_separate_classes(self) -> bool:
        return not self.collision_pairs


def equivalence_census(algebra: GroupAlgebra, budget: int = 2**24) -> CensusReport:
    """Class count versus the divisor-count prediction tau(exp(G)), plus all
    pairs of inequivalent classes sharing a weight distribution."""
    report = g_equivalence_classes(algebra, budget=budget)
    tau = divisor_count(algebra.group.exponent)
    collisions = []
    for i in range(len(report.classes)):
        for j in range(i + 1, len(report.classes)):
            if report.classes[i].weight_distribution == report.classes[j].weight_distribution:
                collisions.append((i, j))
    return CensusReport(
        group=algebra.group.name,
        field=algebra.ring.name,
        class_count=report.class_count,
        divisor_count_prediction=tau,
        matches_prediction=report.class_count == tau,
        collision_pairs=collisions,
        report=report,
    )


# ---------------------------------------------------------------------------
# homocyclic groups (C_{p^r})^m


@dataclass
class HomocyclicFactorization:
    label: str
    subgroup: str
    complement: str
    chain_level: int
    dimension: int
    min_weight: int
    expected_dimension: int
    expected_min_weight: int


@dataclass
class HomocyclicReport:
    group: str
    field: str
    p: int
    r: int
    m: int
    factorizations: list[HomocyclicFactorization]
    class_count: int
    expected_class_count: int
    findings: list[str]


def homocyclic_idempotent_form(algebra: GroupAlgebra, budget: int = 2**24) -> HomocyclicReport:
    """Verify that every primitive idempotent of F_q[(C_{p^r})^m] other than
    hat(G) factors as hat(K) * f, with K a homocyclic subgroup of rank m-1
    and f a chain idempotent of a complementary cyclic factor.

    Requires q of maximal order mod p^r.  Emits the closed-form
    dimension/weight table rows and the class count r + 1.
    """
    G = algebra.group
    orders = set(G.factor_orders)
    if len(orders) != 1:
        raise ValueError(f"{G.name} is not homocyclic")
    pr = G.factor_orders[0]
    p = min(factorize(pr))
    r = factorize(pr)[p]
    m = G.rank
    q = algebra.modulus
    if order_mod(q, pr) != euler_phi(pr):
        raise ValueError(f"{q} does not have maximal order mod {pr}")

    system = primitive_idempotents(algebra)
    hatG = hat_full_group(algebra)

    # all subgroups that look like (C_{p^r})^(m-1): right order and order profile
    target_order = pr ** (m - 1)
    profile = {p**i: p ** (i * (m - 1)) for i in range(r + 1)}
    candidates = []
    for K in all_subgroups(G):
        if K.order != target_order:
            continue
        counts: dict[int, int] = {}
        for x in K.elements:
            o = G.element_order(x)
            counts[o] = counts.get(o, 0) + 1
        cumulative = {d: sum(c for o, c in counts.items() if d % o == 0) for d in profile}
        if cumulative == profile:
            candidates.append(K)

    factorizations = []
    findings: list[str] = []
    for idx, e in enumerate(system):
        if e == hatG:
            continue
        found = None
        for K in candidates:
            if algebra.hat(K) * e != e:
                continue
            h = next(
                (
                    x
                    for x in G.elements()
                    if G.element_order(x) == pr
                    and all(not K.contains(G.power(x, t)) for t in range(1, pr))
                ),
                None,
            )
            if h is None:
                continue
            chain = _cyclic_chain_in(algebra, h, p, r)
            hatK = algebra.hat(K)
            for level, f in enumerate(chain):
                if hatK * f == e:
                    found = (K, h, level)
                    break
            if found:
                break
        if found is None:
            raise ConsistencyError(
                f"primitive idempotent {system.labels[idx]} does not factor "
                "through a rank-(m-1) homocyclic subgroup"
            )
        K, h, level = found
        code = code_from_idempotent(e)
        w = minimum_weight(code, budget=budget)
        exp_dim = p ** (level - 1) * (p - 1) if level else 1
        exp_w = 2 * p ** (r * (m - 1) + (r - level)) if level else pr**m
        row = HomocyclicFactorization(
            label=system.labels[idx],
            subgroup=K.name,
            complement=G.element_name(h),
            chain_level=level,
            dimension=code.dimension,
            min_weight=w,
            expected_dimension=exp_dim,
            expected_min_weight=exp_w,
        )
        if (row.dimension, row.min_weight) != (exp_dim, exp_w):
            findings.append(
                f"{row.label}: computed (dim, w) = ({row.dimension}, {row.min_weight}) "
                f"!= table ({exp_dim}, {exp_w})"
            )
        factorizations.append(row)

    classes = g_equivalence_classes(algebra, budget=budget)
    return HomocyclicReport(
        group=G.name,
        field=algebra.ring.name,
        p=p,
        r=r,
        m=m,
        factorizations=factorizations,
        class_count=classes.class_count,
        expected_class_count=r + 1,
        findings=findings,
    )


def _cyclic_chain_in(algebra: GroupAlgebra, h: int, p: int, r: int) -> list[AlgebraElement]:
    """Chain idempotents of the cyclic subgroup generated by h, inside algebra."""
    G = algebra.group
    hats = [
        algebra.hat(subgroup_from_gens(G, [G.power(h, p**i)])) for i in range(r + 1)
    ]
    return [hats[0]] + [hats[i] - hats[i - 1] for i in range(1, r + 1)]
