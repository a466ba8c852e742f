"""Cyclic codes over the chain rings Z_{p^k}.

The primitive idempotent system of F_p[C_n] lifts through the polynomial
map e -> 3e^2 - 2e^3 to an exact system over Z_{p^k}[C_n]; every ideal is
then a direct sum of pieces <p^{k_i} e_i> with 0 <= k_i <= t = k, giving
(t+1)^(m+1) codes.  Word counts, duals through the classical involution,
and minimal codes all follow, each verifiable by brute enumeration at
desk scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
import numpy as np

from .codes import code_from_idempotent
from .errors import BudgetError, ConsistencyError
from .ffield import factorize, is_prime, make_extension
from .galg import AlgebraElement, GroupAlgebra
from .groups import AbelianGroup
from .idem import IdempotentSystem, primitive_idempotents

ENUMERATION_BUDGET = 2**20


class ChainRing:
    """Z_{p^k}: maximal ideal (p), nilpotency index t = k, residue field F_p."""

    def __init__(self, p: int, k: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 1:
            raise ValueError(f"exponent must be >= 1, got {k}")
        self.p = p
        self.k = k
        self.modulus = p**k
        if self.modulus > 2**31:
            raise ValueError("chain ring modulus exceeds the 31-bit cap")
        self.residue_field = make_extension(p, 1)

    @property
    def nilpotency_index(self) -> int:
        return self.k

    @property
    def maximal_ideal_generator(self) -> int:
        return self.p

    @property
    def residue_modulus(self) -> int:
        return self.modulus

    def unit_inverse(self, c: int) -> int:
        c = int(c) % self.modulus
        if c % self.p == 0:
            raise ValueError(f"{c} is not a unit in Z_{self.modulus}")
        return pow(c, -1, self.modulus)

    @property
    def name(self) -> str:
        return f"Z{self.modulus}"

    def __eq__(self, other) -> bool:
        return isinstance(other, ChainRing) and (other.p, other.k) == (self.p, self.k)

    def __hash__(self) -> int:
        return hash(("Z", self.p, self.k))

    def __repr__(self) -> str:
        return self.name


def chain_ring_from_spec(spec: str) -> ChainRing:
    s = spec.strip()
    if not s or s[0] not in "zZ" or not s[1:].isdigit():
        raise ValueError(f"unrecognized chain ring spec {spec!r}")
    size = int(s[1:])
    fac = factorize(size)
    if len(fac) != 1:
        raise ValueError(f"{size} is not a prime power")
    p = next(iter(fac))
    return ChainRing(p, fac[p])


@dataclass
class LiftedSystem:
    """A primitive orthogonal system over Z_{p^k}[C_n] plus its mod-p source."""

    ring: ChainRing
    algebra: GroupAlgebra
    members: list[AlgebraElement]
    labels: list[str]
    source: IdempotentSystem
    component_dims: list[int]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def lift_idempotents(source: IdempotentSystem, ring: ChainRing) -> LiftedSystem:
    """Lift a primitive system of F_p[C_n] to Z_{p^k}[C_n], exactly.

    Iterates e <- 3e^2 - 2e^3 starting from the integer preimage; the
    number of rounds doubles the precision each time, so ceil(log2 k) + 1
    rounds suffice.  The result is checked to be an exact orthogonal
    system reducing mod p to the source.
    """
    field = source.algebra.ring
    if field.residue_modulus != ring.p:
        raise ValueError("source system does not live over the residue field")
    G = source.algebra.group
    if math.gcd(ring.p, G.order) != 1:
        raise ValueError("group order is divisible by the residue characteristic")
    algebra = GroupAlgebra(G, ring)
    rounds = max(1, math.ceil(math.log2(ring.k)) + 1) if ring.k > 1 else 0
    members = []
    for e0, label in zip(source.members, source.labels):
        e = algebra.element(e0.coeffs)
        for _ in range(rounds):
            e2 = e * e
            e = e2 * 3 - e2 * e * 2
        if not e.is_idempotent():
            raise ConsistencyError(f"lift of {label} is not idempotent")
        if np.any((e.coeffs - e0.coeffs) % ring.p):
            raise ConsistencyError(f"lift of {label} does not reduce to its source")
        members.append(e)
    total = algebra.zero()
    for e in members:
        total = total + e
    if total != algebra.one():
        raise ConsistencyError("lifted system does not sum to 1")
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            if not members[i].is_orthogonal(members[j]):
                raise ConsistencyError("lifted system is not orthogonal")
    dims = [code_from_idempotent(e).dimension for e in source.members]
    return LiftedSystem(ring, algebra, members, list(source.labels), source, dims)


def lifted_system_for(ring: ChainRing, n: int) -> LiftedSystem:
    G = AbelianGroup([n]) if n > 1 else None
    if G is None:
        raise ValueError("group order must be >= 2")
    source = primitive_idempotents(GroupAlgebra(G, ring.residue_field))
    return lift_idempotents(source, ring)


@dataclass
class RingCode:
    """A cyclic code over Z_{p^k}: the direct sum of <p^{k_i} e_i>."""

    system: LiftedSystem
    exponents: tuple[int, ...]

    def __post_init__(self):
        t = self.system.ring.k
        if len(self.exponents) != len(self.system.members):
            raise ValueError("one exponent per idempotent is required")
        if any(not 0 <= k <= t for k in self.exponents):
            raise ValueError(f"exponents must lie in [0, {t}]")

    @property
    def ring(self) -> ChainRing:
        return self.system.ring

    @property
    def algebra(self) -> GroupAlgebra:
        return self.system.algebra

    def generator(self) -> AlgebraElement:
        total = self.algebra.zero()
        p = self.ring.p
        for k, e in zip(self.exponents, self.system.members):
            total = total + e * (p**k)
        return total

    def generating_rows(self) -> np.ndarray:
        """Module generators {g * p^{k_i} e_i} over the ring, as a matrix."""
        G = self.algebra.group
        table = G.mul_table()
        inv = G.inv_table()
        p = self.ring.p
        rows = []
        for k, e in zip(self.exponents, self.system.members):
            if k == self.ring.k:
                continue
            scaled = (e.coeffs * p**k) % self.ring.modulus
            rows.append(scaled[table[inv]])
        if not rows:
            return np.zeros((0, G.order), dtype=np.int64)
        return np.vstack(rows) % self.ring.modulus

    @property
    def label(self) -> str:
        t = self.ring.k
        parts = []
        for k, lbl in zip(self.exponents, self.system.labels):
            if k == t:
                continue
            prefix = "" if k == 0 else f"{self.ring.p ** k}*"
            parts.append(f"<{prefix}{lbl}>")
        return " (+) ".join(parts) if parts else "<0>"

    def __repr__(self) -> str:
        return f"RingCode({self.ring.name}[{self.algebra.group.name}], {self.label})"


def enumerate_ring_codes(ring: ChainRing, n: int, budget: int = 10**5):
    """Every cyclic code of length n over the ring; count = (t+1)^(m+1)."""
    system = lifted_system_for(ring, n)
    t = ring.k
    count = (t + 1) ** len(system)
    if count > budget:
        raise BudgetError(f"{count} codes exceed the enumeration budget {budget}")
    codes = []
    exps = [0] * len(system)
    while True:
        codes.append(RingCode(system, tuple(exps)))
        i = len(exps) - 1
        while i >= 0 and exps[i] == t:
            exps[i] = 0
            i -= 1
        if i < 0:
            break
        exps[i] += 1
    if len(codes) != count:
        raise ConsistencyError("code census size mismatch")
    return codes, count


def codeword_count(code: RingCode) -> int:
    """|C| = p^(sum (t - k_i) w_i), w_i the residue-field component dims."""
    t = code.ring.k
    exponent = sum(
        (t - k) * w for k, w in zip(code.exponents, code.system.component_dims)
    )
    return code.ring.p**exponent


def ideal_elements(code: RingCode, budget: int = ENUMERATION_BUDGET) -> set[bytes]:
    """All codewords, by additive closure of the module generators."""
    expected = codeword_count(code)
    if expected > budget:
        raise BudgetError(f"ideal of size {expected} exceeds budget {budget}")
    rows = code.generating_rows()
    M = code.ring.modulus
    zero = np.zeros(code.algebra.group.order, dtype=np.int64)
    seen = {zero.tobytes()}
    frontier = [zero]
    while frontier:
        nxt = []
        for w in frontier:
            for row in rows:
                y = (w + row) % M
                key = y.tobytes()
                if key not in seen:
                    seen.add(key)
                    nxt.append(y)
        frontier = nxt
    return seen


def dual_code(code: RingCode) -> tuple[RingCode, list[int]]:
    """The Euclidean dual: exponents t - k_r attached to the involuted
    idempotents.  Returns the dual plus the index permutation induced by
    the involution on the lifted system."""
    system = code.system
    index = {e.coeffs.tobytes(): i for i, e in enumerate(system.members)}
    perm = []
    for e in system.members:
        star = e.involution()
        j = index.get(star.coeffs.tobytes())
        if j is None:
            raise ConsistencyError("involution does not permute the lifted system")
        perm.append(j)
    t = system.ring.k
    new_exponents = [0] * len(system.members)
    for r, k in enumerate(code.exponents):
        new_exponents[perm[r]] = t - k
    return RingCode(system, tuple(new_exponents)), perm


def annihilator(code: RingCode, budget: int = ENUMERATION_BUDGET) -> set[bytes]:
    """{x : sum_g x_g y_g = 0 for all y in C}, by full enumeration of RG."""
    algebra = code.algebra
    n = algebra.group.order
    M = code.ring.modulus
    total = M**n
    if total > budget:
        raise BudgetError(f"|RG| = {total} exceeds the annihilator budget {budget}")
    rows = code.generating_rows()
    radix = M ** np.arange(n, dtype=np.int64)
    out: set[bytes] = set()
    chunk = 1 << 14
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        xs = (idx[:, None] // radix) % M
        if len(rows):
            prods = xs @ rows.T % M
            mask = ~prods.any(axis=1)
        else:
            mask = np.ones(len(xs), dtype=bool)
        for x in xs[mask]:
            out.add(x.astype(np.int64).tobytes())
    return out


def minimal_ring_codes(ring: ChainRing, n: int) -> list[RingCode]:
    """The minimal codes <p^(t-1) e_i>, one per lifted idempotent."""
    system = lifted_system_for(ring, n)
    t = ring.k
    out = []
    for i in range(len(system)):
        exps = [t] * len(system)
        exps[i] = t - 1
        out.append(RingCode(system, tuple(exps)))
    return out


def is_minimal(code: RingCode, budget: int = ENUMERATION_BUDGET) -> bool:
    """True iff every nonzero codeword generates the whole ideal."""
    elements = ideal_elements(code, budget=budget)
    if len(elements) == 1:
        return False
    algebra = code.algebra
    G = algebra.group
    table = G.mul_table()
    inv = G.inv_table()
    M = code.ring.modulus
    zero = np.zeros(G.order, dtype=np.int64).tobytes()
    for key in elements:
        if key == zero:
            continue
        x = np.frombuffer(key, dtype=np.int64)
        rows = x[table[inv]]
        seen = {zero}
        frontier = [np.zeros(G.order, dtype=np.int64)]
        while frontier:
            nxt = []
            for w in frontier:
                for row in rows:
                    y = (w + row) % M
                    kk = y.tobytes()
                    if kk not in seen:
                        seen.add(kk)
                        nxt.append(y)
            frontier = nxt
        if seen != elements:
            return False
    return True
