"""Independent reference computations used to pin expected test values.

Everything here is deliberately naive and separate from the package code
paths it checks: cyclotomic cosets by direct orbit walks, subgroup lattices
by exhaustive closure of generator tuples, convolution by dictionary loops,
weight search by plain message iteration.
"""

from itertools import combinations, product
from math import gcd


def cyclotomic_cosets(n: int, q: int) -> list[tuple[int, ...]]:
    """Orbits of Z_n under multiplication by q, sorted by smallest member."""
    assert gcd(n, q) == 1
    seen = set()
    cosets = []
    for s in range(n):
        if s in seen:
            continue
        orbit = []
        x = s
        while x not in orbit:
            orbit.append(x)
            x = (x * q) % n
        seen.update(orbit)
        cosets.append(tuple(sorted(orbit)))
    return cosets


def naive_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def naive_tau(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if n % k == 0)


def naive_order_mod(q: int, n: int) -> int:
    t, v = 1, q % n
    while v != 1:
        v = (v * q) % n
        t += 1
    return t


def subgroup_sets(G) -> set[frozenset]:
    """All subgroups of an AbelianGroup, via closures of generator tuples.

    Every subgroup of a rank-k abelian group is generated by at most k
    elements, so closing every k-tuple is exhaustive.
    """
    from gacodes.groups import closure

    k = G.rank
    out = set()
    for gens in combinations(range(G.order), k):
        out.add(frozenset(closure(G, gens)))
    for r in range(k):
        for gens in combinations(range(G.order), r):
            out.add(frozenset(closure(G, gens)))
    return out


def dict_convolve(a: dict, b: dict, mul, modulus: int) -> dict:
    """Group-algebra product of sparse coefficient dicts."""
    out: dict = {}
    for g, cg in a.items():
        for h, ch in b.items():
            k = mul(g, h)
            out[k] = (out.get(k, 0) + cg * ch) % modulus
    return {k: v for k, v in out.items() if v}


def naive_weight_enumeration(basis_rows: list[list[int]], p: int):
    """(min weight, weight histogram) by walking every message vector."""
    k = len(basis_rows)
    n = len(basis_rows[0]) if k else 0
    hist = [0] * (n + 1)
    hist[0] += 1
    best = None
    for msg in product(range(p), repeat=k):
        if not any(msg):
            continue
        word = [0] * n
        for c, row in zip(msg, basis_rows):
            if c:
                for i, r in enumerate(row):
                    word[i] = (word[i] + c * r) % p
        w = sum(1 for x in word if x)
        hist[w] += 1
        if best is None or w < best:
            best = w
    return best, hist


def span_size(rows: list[list[int]], p: int) -> int:
    """Number of distinct codewords, by additive closure (no linear algebra)."""
    n = len(rows[0]) if rows else 0
    seen = {tuple([0] * n)}
    frontier = [tuple([0] * n)]
    gens = [tuple(r) for r in rows]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                for c in range(1, p):
                    y = tuple((a + c * b) % p for a, b in zip(w, g))
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
        frontier = nxt
    return len(seen)
