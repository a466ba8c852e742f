"""Finite abelian groups as products of cyclic factors.

Elements are exponent vectors, addressed by a fixed mixed-radix index
(0 is the identity).  Subgroup enumeration, co-cyclic subgroups, brute-force
automorphism groups and character tables all live here, together with the
small number-theoretic helpers the rest of the package leans on.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import BudgetError
from .ffield import Field, factorize, primitive_root_of_unity

SUBGROUP_BUDGET = 10**4
AUTOMORPHISM_BUDGET = 10**6

_GENERATOR_LETTERS = "abcdefgh"


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError(f"phi undefined for {n}")
    out = n
    for p in factorize(n):
        out -= out // p
    return out


def divisor_count(n: int) -> int:
    if n < 1:
        raise ValueError(f"tau undefined for {n}")
    out = 1
    for e in factorize(n).values():
        out *= e + 1
    return out


def divisors(n: int) -> list[int]:
    out = [1]
    for p, e in factorize(n).items():
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


class AbelianGroup:
    """C_{n1} x ... x C_{nk} in primary (prime-power) form.

    Invariant-factor input is accepted and normalized: each factor order is
    split into its prime-power parts, which are then sorted by (prime,
    descending exponent).  Canonical generators get the letters a, b, c, ...
    """

    def __init__(self, factor_orders: Sequence[int]):
        if not factor_orders:
            raise ValueError("a group needs at least one cyclic factor")
        primary: list[tuple[int, int]] = []
        for n in factor_orders:
            if n < 2:
                raise ValueError(f"cyclic factor orders must be >= 2, got {n}")
            for p, e in factorize(n).items():
                primary.append((p, e))
        primary.sort(key=lambda pe: (pe[0], -pe[1]))
        self.factor_orders = tuple(p**e for p, e in primary)
        self._primary = tuple(primary)
        self.order = math.prod(self.factor_orders)
        self.exponent = math.lcm(*self.factor_orders)
        # mixed-radix weights, first factor most significant
        w = []
        acc = 1
        for n in reversed(self.factor_orders):
            w.append(acc)
            acc *= n
        self._weights = tuple(reversed(w))
        self._orders_arr = np.array(self.factor_orders, dtype=np.int64)
        self._mul_table: Optional[np.ndarray] = None
        self._inv_table: Optional[np.ndarray] = None

    # -- element indexing -------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.factor_orders)

    @property
    def identity(self) -> int:
        return 0

    @property
    def is_abelian(self) -> bool:
        return True

    def encode(self, exponents: Sequence[int]) -> int:
        if len(exponents) != self.rank:
            raise ValueError("exponent vector has wrong length")
        return int(
            sum((int(e) % n) * w for e, n, w in zip(exponents, self.factor_orders, self._weights))
        )

    def decode(self, index: int) -> tuple[int, ...]:
        if not 0 <= index < self.order:
            raise ValueError(f"element index {index} out of range")
        out = []
        for n, w in zip(self.factor_orders, self._weights):
            out.append(index // w)
            index %= w
        return tuple(out)

    def elements(self) -> range:
        return range(self.order)

    def mul(self, i: int, j: int) -> int:
        a, b = self.decode(i), self.decode(j)
        return self.encode([x + y for x, y in zip(a, b)])

    def inv(self, i: int) -> int:
        return self.encode([-x for x in self.decode(i)])

    def power(self, i: int, k: int) -> int:
        return self.encode([x * k for x in self.decode(i)])

    def element_order(self, i: int) -> int:
        exps = self.decode(i)
        return math.lcm(*(n // math.gcd(n, e) for n, e in zip(self.factor_orders, exps)))

    def generator_index(self, k: int) -> int:
        vec = [0] * self.rank
        vec[k] = 1
        return self.encode(vec)

    @property
    def generator_indices(self) -> list[int]:
        return [self.generator_index(k) for k in range(self.rank)]

    def mul_table(self) -> np.ndarray:
        if self._mul_table is None:
            if self.order > 4096:
                raise BudgetError(f"multiplication table for |G| = {self.order} refused")
            digits = self._digit_matrix()
            # all pairwise sums of exponent vectors, re-encoded
            sums = (digits[:, None, :] + digits[None, :, :]) % self._orders_arr
            table = sums @ np.array(self._weights, dtype=np.int64)
            table.flags.writeable = False
            self._mul_table = table
        return self._mul_table

    def inv_table(self) -> np.ndarray:
        if self._inv_table is None:
            digits = self._digit_matrix()
            inv = (-digits) % self._orders_arr
            t = inv @ np.array(self._weights, dtype=np.int64)
            t.flags.writeable = False
            self._inv_table = t
        return self._inv_table

    def _digit_matrix(self) -> np.ndarray:
        idx = np.arange(self.order, dtype=np.int64)
        cols = []
        for n, w in zip(self.factor_orders, self._weights):
            cols.append((idx // w) % n)
        return np.stack(cols, axis=1)

    # -- structure ---------------------------------------------------------

    def primes(self) -> list[int]:
        return sorted({p for p, _ in self._primary})

    def sylow_elements(self, p: int) -> list[int]:
        """Indices of the p-Sylow subgroup (all elements of p-power order)."""
        out = []
        for i in self.elements():
            o = self.element_order(i)
            while o % p == 0:
                o //= p
            if o == 1:
                out.append(i)
        return out

    def element_name(self, i: int) -> str:
        exps = self.decode(i)
        parts = []
        for k, e in enumerate(exps):
            if e == 0:
                continue
            letter = _GENERATOR_LETTERS[k]
            parts.append(letter if e == 1 else f"{letter}^{e}")
        return "*".join(parts) if parts else "1"

    @property
    def name(self) -> str:
        return "x".join(f"C{n}" for n in self.factor_orders)

    def __eq__(self, other) -> bool:
        return isinstance(other, AbelianGroup) and other.factor_orders == self.factor_orders

    def __hash__(self) -> int:
        return hash(self.factor_orders)

    def __repr__(self) -> str:
        return self.name


_SPEC_RE = re.compile(r"^c(\d+)$", re.IGNORECASE)


def group_from_spec(spec: str) -> AbelianGroup:
    """Parse literals like "C9xC3" (case-insensitive, 'x'-separated)."""
    s = spec.replace(" ", "")
    parts = s.split("x") if "x" in s else s.split("X")
    orders = []
    for part in parts:
        m = _SPEC_RE.match(part)
        if not m:
            raise ValueError(f"unrecognized group spec {spec!r}")
        orders.append(int(m.group(1)))
    return AbelianGroup(orders)


class Subgroup:
    """A subgroup stored as its full sorted element list plus generators.

    Identity is by element set, not by generating set.
    """

    __slots__ = ("parent", "elements", "generators", "_set")

    def __init__(self, parent: AbelianGroup, elements: tuple[int, ...], generators: tuple[int, ...]):
        self.parent = parent
        self.elements = tuple(elements)
        self.generators = tuple(generators)
        self._set = frozenset(self.elements)
        if parent.order % len(self.elements) != 0:
            raise ValueError("subgroup order does not divide |G|")

    @property
    def order(self) -> int:
        return len(self.elements)

    def contains(self, i: int) -> bool:
        return i in self._set

    @property
    def is_whole_group(self) -> bool:
        return self.order == self.parent.order

    @property
    def name(self) -> str:
        if self.order == 1:
            return "<1>"
        if self.is_whole_group:
            return "G"
        return "<" + ",".join(self.parent.element_name(g) for g in self.generators) + ">"

    def __repr__(self) -> str:
        return self.name

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subgroup)
            and other.parent == self.parent
            and other.elements == self.elements
        )

    def __hash__(self) -> int:
        return hash((self.parent, self.elements))


def closure(G: AbelianGroup, gens: Iterable[int]) -> tuple[int, ...]:
    """Sorted element list of the subgroup generated by gens."""
    seen = {G.identity}
    frontier = [G.identity]
    gens = list(dict.fromkeys(gens))
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(seen))


def _minimal_generators(G: AbelianGroup, elements: tuple[int, ...]) -> tuple[int, ...]:
    if len(elements) == 1:
        return ()
    gens: list[int] = []
    have = {G.identity}
    for x in sorted(elements, key=lambda i: (-G.element_order(i), i)):
        if x not in have:
            gens.append(x)
            have = set(closure(G, gens))
            if len(have) == len(elements):
                break
    return tuple(gens)


def subgroup_from_gens(G: AbelianGroup, gens: Iterable[int]) -> Subgroup:
    elems = closure(G, gens)
    return Subgroup(G, elems, _minimal_generators(G, elems))


def subgroup_from_elements(G: AbelianGroup, elems: Iterable[int]) -> Subgroup:
    elems = tuple(sorted(set(int(x) for x in elems)))
    if closure(G, elems) != elems:
        raise ValueError("element list is not a subgroup")
    return Subgroup(G, elems, _minimal_generators(G, elems))


def trivial_subgroup(G: AbelianGroup) -> Subgroup:
    return Subgroup(G, (G.identity,), ())


def full_subgroup(G: AbelianGroup) -> Subgroup:
    return subgroup_from_gens(G, G.generator_indices)


def all_subgroups(G: AbelianGroup, budget: int = SUBGROUP_BUDGET) -> list[Subgroup]:
    """Every subgroup exactly once, sorted by (order, element list).

    Grows known subgroups one generator at a time until a fixpoint; each
    subgroup is reachable this way, and deduplication is by element set.
    """
    if G.order > budget:
        raise BudgetError(f"|G| = {G.order} exceeds subgroup enumeration budget {budget}")
    seen: dict[tuple[int, ...], tuple[int, ...]] = {(G.identity,): ()}
    frontier = [(G.identity,)]
    while frontier:
        nxt = []
        for elems in frontier:
            for x in G.elements():
                if x in elems:
                    continue
                bigger = closure(G, list(seen[elems]) + [x])
                if bigger not in seen:
                    seen[bigger] = tuple(list(seen[elems]) + [x])
                    nxt.append(bigger)
        frontier = nxt
    subs = [Subgroup(G, elems, _minimal_generators(G, elems)) for elems in seen]
    subs.sort(key=lambda s: (s.order, s.elements))
    return subs


def coset_order(G: AbelianGroup, H: Subgroup, g: int) -> int:
    """Order of gH in G/H."""
    k, y = 1, g
    while not H.contains(y):
        y = G.mul(y, g)
        k += 1
    return k


def quotient_is_cyclic(G: AbelianGroup, H: Subgroup) -> bool:
    target = G.order // H.order
    return any(coset_order(G, H, g) == target for g in G.elements())


def cocyclic_subgroups(G: AbelianGroup, budget: int = SUBGROUP_BUDGET) -> list[Subgroup]:
    """Subgroups H with G/H cyclic and nontrivial, in all_subgroups order."""
    out = []
    for H in all_subgroups(G, budget=budget):
        if H.is_whole_group:
            continue
        if quotient_is_cyclic(G, H):
            out.append(H)
    return out


def is_p_group(G: AbelianGroup) -> Optional[int]:
    ps = G.primes()
    return ps[0] if len(ps) == 1 else None


def cocyclic_cover(G: AbelianGroup, H: Subgroup) -> Subgroup:
    """The unique overgroup of index p over a co-cyclic H of a p-group G.

    Since G/H is a cyclic p-group, overgroups of H form a chain; the cover is
    the preimage of the unique order-p subgroup of G/H, i.e. all x with
    x^p in H.
    """
    p = is_p_group(G)
    if p is None:
        raise ValueError(f"{G.name} is not a p-group")
    if H.is_whole_group:
        raise ValueError("the whole group has no index-p cover")
    if not quotient_is_cyclic(G, H):
        raise ValueError("subgroup is not co-cyclic")
    elems = tuple(sorted(x for x in G.elements() if H.contains(G.power(x, p))))
    if len(elems) != H.order * p:
        raise ValueError("cover has unexpected order; subgroup not co-cyclic?")
    return Subgroup(G, elems, _minimal_generators(G, elems))


class Automorphism:
    """A group automorphism stored as generator images plus the full permutation."""

    __slots__ = ("group", "generator_images", "perm")

    def __init__(self, group: AbelianGroup, generator_images: tuple[int, ...], perm: np.ndarray):
        self.group = group
        self.generator_images = tuple(generator_images)
        self.perm = perm

    def __call__(self, i: int) -> int:
        return int(self.perm[i])

    def apply_subgroup(self, H: Subgroup) -> Subgroup:
        elems = tuple(sorted(int(self.perm[x]) for x in H.elements))
        return Subgroup(H.parent, elems, _minimal_generators(H.parent, elems))

    def compose(self, other: "Automorphism") -> "Automorphism":
        perm = self.perm[other.perm]
        perm.flags.writeable = False
        return Automorphism(self.group, tuple(int(perm[g]) for g in self.group.generator_indices), perm)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Automorphism)
            and other.group == self.group
            and other.generator_images == self.generator_images
        )

    def __hash__(self) -> int:
        return hash((self.group, self.generator_images))

    def __repr__(self) -> str:
        images = ", ".join(
            f"{self.group.element_name(g)}->{self.group.element_name(im)}"
            for g, im in zip(self.group.generator_indices, self.generator_images)
        )
        return f"Aut({images})"


def automorphisms(G: AbelianGroup, budget: int = AUTOMORPHISM_BUDGET) -> list[Automorphism]:
    """All automorphisms, by brute force over generator images.

    A candidate sends generator k to some element whose order divides n_k;
    the map is kept when it is bijective.  Candidates are scanned in a fixed
    lexicographic order, so the output order is deterministic.
    """
    if G.order > 4096:
        raise BudgetError(f"|G| = {G.order} too large for automorphism search")
    pools = []
    for n in G.factor_orders:
        pools.append([x for x in G.elements() if n % G.element_order(x) == 0])
    total = math.prod(len(p) for p in pools)
    if total > budget:
        raise BudgetError(f"{total} candidate endomorphisms exceed budget {budget}")
    digits = G._digit_matrix()
    out = []
    for images in _product(pools):
        # linear extension: x = sum e_k g_k maps to sum e_k images[k]
        img_vecs = np.array([G.decode(im) for im in images], dtype=np.int64)
        mapped = (digits @ img_vecs) % G._orders_arr
        perm = mapped @ np.array(G._weights, dtype=np.int64)
        if len(set(perm.tolist())) == G.order:
            perm.flags.writeable = False
            out.append(Automorphism(G, tuple(images), perm))
    return out


def _product(pools):
    if not pools:
        yield ()
        return
    for head in pools[0]:
        for rest in _product(pools[1:]):
            yield (head,) + rest


@dataclass
class CharacterTable:
    """All |G| characters of G with values in a splitting field F.

    Row v has values chi_v(g) = zeta^(sum_i v_i g_i exp/n_i) for a fixed
    zeta of order exp(G).
    """

    group: AbelianGroup
    field: Field
    zeta: object
    values: list[tuple]  # values[v][g] is a FieldElement

    def __len__(self) -> int:
        return len(self.values)


def characters(G: AbelianGroup, F: Field) -> CharacterTable:
    if (F.q - 1) % G.exponent != 0:
        raise ValueError(
            f"exp(G) = {G.exponent} does not divide q - 1 = {F.q - 1}; "
            "not a splitting field"
        )
    zeta = primitive_root_of_unity(F, G.exponent)
    pairing = pairing_matrix(G)
    zpow = [F.one()]
    for _ in range(G.exponent - 1):
        zpow.append(zpow[-1] * zeta)
    rows = [tuple(zpow[int(pairing[v, g])] for g in G.elements()) for v in G.elements()]
    return CharacterTable(G, F, zeta, rows)


def pairing_matrix(G: AbelianGroup) -> np.ndarray:
    """pairing[v, g] = sum_i v_i g_i (exp/n_i) mod exp, for all index pairs."""
    digits = G._digit_matrix()
    weights = np.array([G.exponent // n for n in G.factor_orders], dtype=np.int64)
    return (digits * weights) @ digits.T % G.exponent
