"""Idempotent constructions for semisimple group algebras.

Covers the subgroup-derived systems (hat(G) plus one idempotent per
co-cyclic subgroup), the complete primitive decomposition via character
orbits over a splitting field, chain systems for cyclic prime-power groups,
the explicit lists for special parameter families, essential idempotents,
and the map attaching a co-cyclic subgroup to each primitive idempotent.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import ConsistencyError
from .ffield import Field, factorize, make_extension, order_mod, primitive_root_of_unity
from .galg import AlgebraElement, GroupAlgebra
from .groups import (
    AbelianGroup,
    Subgroup,
    all_subgroups,
    cocyclic_subgroups,
    euler_phi,
    pairing_matrix,
    quotient_is_cyclic,
    subgroup_from_elements,
    subgroup_from_gens,
)


@dataclass
class IdempotentSystem:
    """A finite family of idempotents meant to be orthogonal with sum 1."""

    algebra: GroupAlgebra
    members: list[AlgebraElement]
    labels: list[str]
    provenance: list[dict]
    claims_primitive: Optional[bool] = None

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i: int) -> AlgebraElement:
        return self.members[i]

    def label_of(self, e: AlgebraElement) -> str:
        for member, label in zip(self.members, self.labels):
            if member == e:
                return label
        raise KeyError("element is not a member of this system")

    def validate(self, pairwise: bool = True) -> None:
        total = self.algebra.zero()
        for e, label in zip(self.members, self.labels):
            if e.is_zero():
                raise ConsistencyError(f"member {label} is zero")
            if not e.is_idempotent():
                raise ConsistencyError(f"member {label} is not idempotent")
            total = total + e
        if total != self.algebra.one():
            raise ConsistencyError("members do not sum to 1")
        if pairwise:
            for i in range(len(self.members)):
                for j in range(i + 1, len(self.members)):
                    if not self.members[i].is_orthogonal(self.members[j]):
                        raise ConsistencyError(
                            f"members {self.labels[i]} and {self.labels[j]} "
                            "are not orthogonal"
                        )

    def to_json(self) -> str:
        return json.dumps(
            {
                "group": self.algebra.group.name,
                "ring": self.algebra.ring.name,
                "members": [
                    {
                        "label": label,
                        "provenance": prov,
                        "coeffs": [int(c) for c in e.coeffs],
                    }
                    for e, label, prov in zip(self.members, self.labels, self.provenance)
                ],
            },
            sort_keys=True,
            indent=2,
        )


# ---------------------------------------------------------------------------
# subgroup-derived idempotents


def hat_full_group(algebra: GroupAlgebra) -> AlgebraElement:
    G = algebra.group
    return algebra.hat(subgroup_from_gens(G, G.generator_indices))


def _sylow_subgroup(G: AbelianGroup, p: int) -> Subgroup:
    return subgroup_from_elements(G, G.sylow_elements(p))


def _sylow_part(G: AbelianGroup, H: Subgroup, p: int) -> tuple[int, ...]:
    sylow = set(G.sylow_elements(p))
    return tuple(sorted(set(H.elements) & sylow))


def cocyclic_idempotent(algebra: GroupAlgebra, H: Subgroup) -> AlgebraElement:
    """The idempotent attached to a co-cyclic subgroup H.

    For a p-group this is hat(H) - hat(H~), with H~ the index-p cover of H.
    In general it is the product over Sylow components, with factor
    hat(G_p) whenever the p-part of H fills the whole Sylow p-subgroup.
    """
    G = algebra.group
    if H.is_whole_group or not quotient_is_cyclic(G, H):
        raise ValueError(f"{H.name} is not a co-cyclic subgroup of {G.name}")
    result = algebra.one()
    for p in G.primes():
        sylow_elems = G.sylow_elements(p)
        hp = _sylow_part(G, H, p)
        if len(hp) == len(sylow_elems):
            factor = algebra.hat(sylow_elems)
        else:
            cover = tuple(
                sorted(x for x in sylow_elems if G.power(x, p) in set(hp))
            )
            if len(cover) != len(hp) * p:
                raise ConsistencyError(
                    f"p-part of {H.name} is not co-cyclic in the Sylow {p}-part"
                )
            factor = algebra.hat(hp) - algebra.hat(cover)
        result = result * factor
    return result


def idempotent_system(algebra: GroupAlgebra) -> IdempotentSystem:
    """hat(G) together with one idempotent per co-cyclic subgroup.

    Pairwise orthogonal with sum 1 for every abelian G with char(F)
    coprime to |G|; primitive exactly under the order conditions reported
    by primitivity_conditions.
    """
    G = algebra.group
    if math.gcd(algebra.modulus, G.order) != 1:
        raise ValueError("characteristic divides |G|; the algebra is not semisimple")
    members = [hat_full_group(algebra)]
    labels = ["G^"]
    prov: list[dict] = [{"type": "hat", "subgroup": "G"}]
    for H in cocyclic_subgroups(G):
        members.append(cocyclic_idempotent(algebra, H))
        labels.append(f"e{H.name}")
        prov.append({"type": "cocyclic", "subgroup": H.name})
    system = IdempotentSystem(algebra, members, labels, prov)
    system.validate()
    return system


# ---------------------------------------------------------------------------
# the complete primitive decomposition, by character orbits


def primitive_idempotents(algebra: GroupAlgebra) -> IdempotentSystem:
    """All primitive idempotents of F_qG for abelian G, gcd(q, |G|) = 1.

    Characters with values in the splitting field F_{q^m}, m = ord of q
    mod exp(G), are grouped into orbits under chi -> chi^q; each orbit sum
    is fixed by the Frobenius, hence has base-field coefficients.  The
    count equals the number of q-orbits on the dual group.
    """
    G = algebra.group
    F = algebra.ring
    if not isinstance(F, Field) or F.m != 1:
        raise ValueError("primitive decomposition needs a prime base field")
    q = F.p
    if math.gcd(q, G.order) != 1:
        raise ValueError(
            f"gcd(q, |G|) = {math.gcd(q, G.order)} != 1; algebra is not semisimple"
        )
    exp = G.exponent
    m = order_mod(q, exp) if exp > 1 else 1
    ext = make_extension(q, m) if m > 1 else F
    zeta = primitive_root_of_unity(ext, exp)

    n = G.order
    pairing = pairing_matrix(G)
    neg_pairing = (-pairing) % exp
    # zpow[j] = coefficient vector of zeta^j in the splitting field
    zpow = np.zeros((exp, ext.m), dtype=np.int64)
    acc = ext.one()
    for j in range(exp):
        zpow[j] = acc.coeffs
        acc = acc * zeta

    # orbits of the dual group under v -> q*v
    digits = G._digit_matrix()
    qperm = ((digits * q) % G._orders_arr) @ np.array(G._weights, dtype=np.int64)
    inv_n = pow(n % q, -1, q)

    members, labels, prov = [], [], []
    seen = np.zeros(n, dtype=bool)
    for v0 in range(n):
        if seen[v0]:
            continue
        orbit = []
        v = v0
        while not seen[v]:
            seen[v] = True
            orbit.append(v)
            v = int(qperm[v])
        plane = zpow[neg_pairing[orbit]].sum(axis=0) % q  # (n, m) over F_q^m
        if ext.m > 1 and np.any(plane[:, 1:]):
            raise ConsistencyError(
                "orbit sum is not Frobenius-fixed; wrong splitting degree or root"
            )
        coeffs = (plane[:, 0] * inv_n) % q
        e = algebra.element(coeffs)
        if not e.is_idempotent():
            raise ConsistencyError(f"character-orbit sum for {v0} is not idempotent")
        members.append(e)
        labels.append("chi(" + ",".join(str(d) for d in G.decode(v0)) + ")")
        prov.append({"type": "character-orbit", "orbit": [int(x) for x in orbit]})
    system = IdempotentSystem(algebra, members, labels, prov, claims_primitive=True)
    total = algebra.zero()
    for e in members:
        total = total + e
    if total != algebra.one():
        raise ConsistencyError("primitive system does not sum to 1")
    return system


def is_primitive(e: AlgebraElement, system: IdempotentSystem) -> bool:
    """True iff e coincides with the unique system member it dominates."""
    if not e.is_idempotent():
        raise ValueError("input is not idempotent")
    matches = [eps for eps in system if e * eps == eps]
    return len(matches) == 1 and matches[0] == e


# ---------------------------------------------------------------------------
# primitivity conditions on (q, exp(G))


@dataclass
class PrimitivityReport:
    q: int
    group: str
    exponent: int
    cases: list[str]
    details: list[str]

    @property
    def all_cocyclic_primitive(self) -> bool:
        return bool(self.cases)


def primitivity_conditions(q: int, G: AbelianGroup) -> PrimitivityReport:
    """Which exponent/order condition (if any) makes every subgroup-derived
    idempotent primitive: (a) exp = 2 with q odd, (b) exp = 4 with
    q = 3 mod 4, (c) exp = p^n with q of maximal order mod p^n,
    (d) exp = 2p^n with q of maximal order mod 2p^n."""
    if math.gcd(q, G.order) != 1:
        raise ValueError("gcd(q, |G|) must be 1")
    e = G.exponent
    fac = factorize(e)
    cases, details = [], []
    if e == 2 and q % 2 == 1:
        cases.append("a")
        details.append("exp(G) = 2 and q is odd")
    if e == 4 and q % 4 == 3:
        cases.append("b")
        details.append("exp(G) = 4 and q = 3 (mod 4)")
    if len(fac) == 1:
        p = next(iter(fac))
        if p % 2 == 1 and order_mod(q, e) == euler_phi(e):
            cases.append("c")
            details.append(f"exp(G) = {p}^{fac[p]} and q has order phi({e}) mod {e}")
    if len(fac) == 2 and fac.get(2) == 1:
        podd = max(fac)
        pn = podd ** fac[podd]
        if order_mod(q, e) == euler_phi(pn):
            cases.append("d")
            details.append(f"exp(G) = 2*{pn} and q has order phi({pn}) mod {e}")
    return PrimitivityReport(q, G.name, e, cases, details)


# ---------------------------------------------------------------------------
# explicit systems for special families


def cyclic_chain_idempotents(algebra: GroupAlgebra) -> IdempotentSystem:
    """e_0 = hat(G), e_i = hat(G_i) - hat(G_{i-1}) along the subgroup chain
    of a cyclic p-power group G = G_0 > G_1 > ... > G_n = 1."""
    G = algebra.group
    fac = factorize(G.order)
    if G.rank != 1 or len(fac) != 1:
        raise ValueError(f"{G.name} is not a cyclic group of prime-power order")
    p = next(iter(fac))
    n = fac[p]
    g = G.generator_indices[0]
    hats = [algebra.hat(subgroup_from_gens(G, [G.power(g, p**i)])) for i in range(n + 1)]
    members = [hats[0]]
    labels = ["e0"]
    prov: list[dict] = [{"type": "chain", "level": 0}]
    for i in range(1, n + 1):
        members.append(hats[i] - hats[i - 1])
        labels.append(f"e{i}")
        prov.append({"type": "chain", "level": i})
    claims = order_mod(algebra.modulus, G.order) == euler_phi(G.order) if G.order > 2 else True
    system = IdempotentSystem(algebra, members, labels, prov, claims_primitive=claims)
    system.validate()
    return system


def order_2pn_idempotents(algebra: GroupAlgebra) -> IdempotentSystem:
    """(1 +- t)/2 times the p-part chain idempotents, for G of order 2p^n.

    Forms a complete primitive system exactly when q has maximal order
    mod 2p^n; otherwise the system is still orthogonal with sum 1 but
    claims_primitive is False.
    """
    G = algebra.group
    q = algebra.modulus
    if q % 2 == 0:
        raise ValueError("q must be odd")
    if G.factor_orders[0] != 2 or G.rank != 2 or G.factor_orders[1] % 2 == 0:
        raise ValueError(f"{G.name} does not have order 2*p^n with odd p")
    pn = G.factor_orders[1]
    p = next(iter(factorize(pn)))
    n = factorize(pn)[p]
    t = G.generator_index(0)
    a = G.generator_index(1)
    inv2 = algebra.ring.unit_inverse(2)
    plus = (algebra.one() + algebra.basis_element(t)) * inv2
    minus = (algebra.one() - algebra.basis_element(t)) * inv2
    hats = [algebra.hat(subgroup_from_gens(G, [G.power(a, p**i)])) for i in range(n + 1)]
    chain = [hats[0]] + [hats[i] - hats[i - 1] for i in range(1, n + 1)]
    members, labels, prov = [], [], []
    for i, e in enumerate(chain):
        members.append(plus * e)
        labels.append(f"(1+t)/2*e{i}")
        prov.append({"type": "2pn", "sign": "+", "level": i})
        members.append(minus * e)
        labels.append(f"(1-t)/2*e{i}")
        prov.append({"type": "2pn", "sign": "-", "level": i})
    claims = order_mod(q, 2 * pn) == euler_phi(pn)
    system = IdempotentSystem(algebra, members, labels, prov, claims_primitive=claims)
    system.validate()
    return system


def sqrt_of_minus_two(F: Field) -> int:
    """The first residue alpha with alpha^2 = -2 mod p, scanning upward."""
    p = F.residue_modulus
    target = (-2) % p
    for alpha in range(p):
        if (alpha * alpha) % p == target:
            return alpha
    raise ValueError(f"-2 is not a square modulo {p}")


def two_power_idempotents_3mod8(m: int, F: Field) -> IdempotentSystem:
    """The explicit primitive system for cyclic groups of order 2^m over a
    field with q = 3 (mod 8): e_0, e_1, e_2 and pairs e_i, e_i' for
    3 <= i <= m, built from a square root of -2.  2m - 1 members."""
    q = F.residue_modulus
    if q % 8 != 3:
        raise ValueError(f"q = {q} is not 3 (mod 8)")
    if m < 3:
        raise ValueError("construction needs m >= 3")
    G = AbelianGroup([2**m])
    algebra = GroupAlgebra(G, F)
    a = G.generator_indices[0]
    alpha = sqrt_of_minus_two(F)
    assert (alpha * alpha) % q == (-2) % q

    def apow(k: int) -> AlgebraElement:
        return algebra.basis_element(G.power(a, k))

    def inv_pow2(k: int) -> int:
        return algebra.ring.unit_inverse(pow(2, k, q))

    n = 2**m
    members, labels, prov = [], [], []
    # e0: full averaged sum; e1: alternating signs; e2: alternating on evens
    members.append(algebra.element({G.power(a, j): inv_pow2(m) for j in range(n)}))
    members.append(
        algebra.element(
            {G.power(a, j): (-1) ** j * inv_pow2(m) % q for j in range(n)}
        )
    )
    members.append(
        algebra.element(
            {G.power(a, 2 * j): (-1) ** j * inv_pow2(m - 1) % q for j in range(n // 2)}
        )
    )
    labels += ["e0", "e1", "e2"]
    prov += [{"type": "2^m q=3mod8", "index": i} for i in (0, 1, 2)]
    for i in range(3, m + 1):
        span = algebra.zero()
        for j in range(2 ** (m - i)):
            span = span + apow(j * 2**i)
        front = algebra.one() - apow(2 ** (i - 1))
        shift = 2 ** (i - 3)
        denom = inv_pow2(m - i + 3)
        for sign, tag in [(1, f"e{i}"), (-1, f"e{i}'")]:
            trig = (
                algebra.scalar(2)
                + apow(shift) * (sign * alpha)
                + apow(3 * shift) * (sign * alpha)
            )
            members.append(front * span * trig * denom)
            labels.append(tag)
            prov.append({"type": "2^m q=3mod8", "index": i, "sign": "+" if sign > 0 else "-"})
    system = IdempotentSystem(algebra, members, labels, prov, claims_primitive=True)
    system.validate()
    return system


# ---------------------------------------------------------------------------
# quadratic-residue split elements and two/three-prime systems


def quadratic_split_elements(
    algebra: GroupAlgebra, a: int
) -> tuple[AlgebraElement, AlgebraElement]:
    """The pair (u, u') of residue-class sums over powers of a.

    u collects a^s over the quadratic residues s mod p, u' over the
    non-residues; both pick up a constant term 1 when p = 3 (mod 4).
    Requires characteristic 2 and a of odd prime order p.
    """
    if algebra.modulus != 2:
        raise ValueError("the split elements live in characteristic 2")
    G = algebra.group
    p = G.element_order(a)
    fac = factorize(p)
    if p == 1 or len(fac) != 1 or 2 in fac or fac[max(fac)] != 1:
        raise ValueError(f"element order {p} is not an odd prime")
    return _split_pair(algebra, a, p)


def _split_pair(algebra: GroupAlgebra, a: int, p: int) -> tuple[AlgebraElement, AlgebraElement]:
    """(u, u') for any a with a^p inside the subgroup being averaged later.

    Exponents are the residue classes mod p as integers in [1, p-1], so the
    result also makes sense for a of larger p-power order once multiplied
    by hat(H) with a^p in H.
    """
    G = algebra.group
    residues = sorted({(r * r) % p for r in range(1, p)})
    non_residues = [s for s in range(1, p) if s not in residues]
    u = algebra.zero()
    for s in residues:
        u = u + algebra.basis_element(G.power(a, s))
    u_prime = algebra.zero()
    for s in non_residues:
        u_prime = u_prime + algebra.basis_element(G.power(a, s))
    if p % 4 == 3:
        u = u + algebra.one()
        u_prime = u_prime + algebra.one()
    return u, u_prime


@dataclass
class TwoPrimeHypotheses:
    p: int
    q: int
    gcd_ok: bool
    generator_ok: bool
    cross_gcd_ok: bool

    @property
    def all_hold(self) -> bool:
        return self.gcd_ok and self.generator_ok and self.cross_gcd_ok


def check_two_prime_hypotheses(p: int, q: int) -> TwoPrimeHypotheses:
    gcd_ok = math.gcd(p - 1, q - 1) == 2
    generator_ok = (
        order_mod(2, p * p) == euler_phi(p * p)
        and order_mod(2, q * q) == euler_phi(q * q)
    )
    cross = math.gcd(p - 1, q) == 1 and math.gcd(p, q - 1) == 1
    return TwoPrimeHypotheses(p, q, gcd_ok, generator_ok, cross)


def product_split_idempotents(
    algebra: GroupAlgebra, H: Subgroup, K: Subgroup
) -> tuple[AlgebraElement, AlgebraElement]:
    """Split e_H * e_K into the two primitive idempotents e1, e2.

    G must be G_p x G_q for distinct odd primes with the two-prime
    hypotheses: gcd(p-1, q-1) = 2, 2 generates the unit groups mod p^2 and
    q^2, and the cross gcds (p-1, q), (p, q-1) are 1.  H and K are
    co-cyclic subgroups of the two Sylow parts (possibly trivial).
    """
    if algebra.modulus != 2:
        raise ValueError("the construction is stated over the binary field")
    G = algebra.group
    primes = G.primes()
    if len(primes) != 2:
        raise ValueError(f"{G.name} is not a product of two prime-power parts")
    p, q = primes
    hyp = check_two_prime_hypotheses(p, q)
    if not hyp.all_hold:
        raise ValueError(f"two-prime hypotheses fail for ({p}, {q}): {hyp}")

    e1_parts = []
    e2_parts = []
    factors = []
    for prime, S in ((p, H), (q, K)):
        sylow = set(G.sylow_elements(prime))
        if not set(S.elements) <= sylow:
            raise ValueError(f"{S.name} is not inside the Sylow {prime}-part")
        if len(S.elements) == len(sylow):
            raise ValueError(f"{S.name} fills the whole Sylow {prime}-part")
        cover = tuple(sorted(x for x in sylow if G.power(x, prime) in S._set))
        if len(cover) != S.order * prime:
            raise ValueError(f"{S.name} is not co-cyclic in the Sylow {prime}-part")
        a = min(x for x in cover if not S.contains(x))
        u, u_prime = _split_pair(algebra, a, prime)
        hatS = algebra.hat(S)
        factors.append((u * hatS, u_prime * hatS, hatS - algebra.hat(cover)))
    (uH, upH, eH), (vK, vpK, eK) = factors
    e1 = uH * vK + upH * vpK
    e2 = uH * vpK + upH * vK
    target = eH * eK
    if e1 + e2 != target or not e1.is_idempotent() or not e2.is_idempotent():
        raise ConsistencyError("split idempotents do not decompose e_H * e_K")
    if not e1.is_orthogonal(e2):
        raise ConsistencyError("split idempotents are not orthogonal")
    return e1, e2


def three_prime_idempotents(p1: int, p2: int, p3: int) -> IdempotentSystem:
    """The 14 primitive idempotents of F_2[C_p1 x C_p2 x C_p3].

    Requires pairwise gcd(p_i - 1, p_j - 1) = 2 and 2 generating every
    U(Z_{p_i}).  Built from the subgroup averages and the residue-class
    split elements u, v, w of the three factors.
    """
    ps = sorted((p1, p2, p3))
    if len(set(ps)) != 3:
        raise ValueError("the three primes must be distinct")
    for i in range(3):
        for j in range(i + 1, 3):
            if math.gcd(ps[i] - 1, ps[j] - 1) != 2:
                raise ValueError(
                    f"gcd({ps[i]} - 1, {ps[j]} - 1) != 2; hypotheses fail"
                )
    for p in ps:
        if order_mod(2, p) != p - 1:
            raise ValueError(f"2 does not generate the units mod {p}")
    G = AbelianGroup(ps)
    algebra = GroupAlgebra(G, make_extension(2, 1))
    gens = G.generator_indices
    ha, hb, hc = (
        algebra.hat(subgroup_from_gens(G, [g])) for g in gens
    )
    u, _ = _split_pair(algebra, gens[0], ps[0])
    v, _ = _split_pair(algebra, gens[1], ps[1])
    w, _ = _split_pair(algebra, gens[2], ps[2])
    one = algebra.one()
    u2, v2, w2 = u * u, v * v, w * w
    cube = (one - ha) * (one - hb) * (one - hc)
    members = [
        ha * hb * hc,
        ha * hb * (one - hc),
        ha * (one - hb) * hc,
        (one - ha) * hb * hc,
        (u * v + u2 * v2) * hc,
        (u2 * v + u * v2) * hc,
        (u * w + u2 * w2) * hb,
        (u2 * w + u * w2) * hb,
        (v * w + v2 * w2) * ha,
        (v2 * w + v * w2) * ha,
        cube + u2 * v2 * w + u * v * w2,
        cube + u2 * v2 * w2 + u * v * w,
        cube + u2 * v * w + u * v2 * w2,
        cube + u * v2 * w + u2 * v * w2,
    ]
    labels = [f"e{i}" for i in range(14)]
    prov = [{"type": "three-prime", "index": i, "primes": ps} for i in range(14)]
    system = IdempotentSystem(algebra, members, labels, prov, claims_primitive=True)
    system.validate()
    return system


# ---------------------------------------------------------------------------
# essential idempotents and the co-cyclic image map


def essential_idempotents(algebra: GroupAlgebra) -> list[AlgebraElement]:
    """Primitive idempotents killed by every nontrivial subgroup average.

    Only cyclic groups admit any; a nonempty answer for a non-cyclic group
    is reported as an internal inconsistency.
    """
    G = algebra.group
    system = primitive_idempotents(algebra)
    hats = [
        algebra.hat(H) for H in all_subgroups(G) if H.order > 1
    ]
    out = [e for e in system if all((e * h).is_zero() for h in hats)]
    # primary form: cyclic iff the factor primes are pairwise distinct
    is_cyclic = len({min(factorize(n)) for n in G.factor_orders}) == G.rank
    if out and not is_cyclic:
        raise ConsistencyError("essential idempotents found in a non-cyclic group")
    return out


def cocyclic_image(
    e: AlgebraElement, family: Optional[list[tuple[Subgroup, AlgebraElement]]] = None
) -> Subgroup:
    """The unique co-cyclic subgroup H with e * e_H = e.

    hat(G) maps to G itself by convention.  The defining products
    e * e_K are checked for every co-cyclic K: exactly one may be nonzero
    and it must reproduce e.
    """
    algebra = e.algebra
    G = algebra.group
    if not e.is_idempotent():
        raise ValueError("input is not idempotent")
    if e == hat_full_group(algebra):
        return subgroup_from_gens(G, G.generator_indices)
    if family is None:
        family = [(H, cocyclic_idempotent(algebra, H)) for H in cocyclic_subgroups(G)]
    found = None
    for H, eH in family:
        prod = e * eH
        if prod.is_zero():
            continue
        if prod != e or found is not None:
            raise ConsistencyError(
                "input does not behave like a primitive idempotent under the "
                "co-cyclic family"
            )
        found = H
    if found is None:
        raise ConsistencyError("no co-cyclic subgroup reproduces the idempotent")
    return found
