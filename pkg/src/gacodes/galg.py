"""The group algebra F_qG (or RG over a chain ring) as coefficient vectors.

Coefficients are integer residues modulo the ring's scalar modulus: a prime
p for prime fields and p^k for integer chain rings.  Multiplication is the
group-law convolution, driven by the precomputed multiplication table, so
abelian and table-defined non-abelian groups share one exact code path.
"""

from __future__ import annotations

import json
from typing import Sequence, Union

import numpy as np

from .groups import Subgroup


class GroupAlgebra:
    """Context object tying a finite group to a coefficient ring."""

    def __init__(self, group, ring):
        modulus = ring.residue_modulus  # raises for extension fields
        if modulus < 2:
            raise ValueError("coefficient modulus must be >= 2")
        self.group = group
        self.ring = ring
        self.modulus = modulus
        self._table = group.mul_table()
        self._inv = group.inv_table()

    @property
    def name(self) -> str:
        return f"{self.ring.name}[{self.group.name}]"

    def element(self, coeffs: Union[Sequence[int], np.ndarray, dict]) -> "AlgebraElement":
        if isinstance(coeffs, dict):
            vec = np.zeros(self.group.order, dtype=np.int64)
            for g, c in coeffs.items():
                vec[g] = c
        else:
            vec = np.asarray(coeffs, dtype=np.int64)
            if len(vec) != self.group.order:
                raise ValueError("coefficient vector length must equal |G|")
        return AlgebraElement(self, vec % self.modulus)

    def zero(self) -> "AlgebraElement":
        return self.element({})

    def one(self) -> "AlgebraElement":
        return self.element({self.group.identity: 1})

    def basis_element(self, g: int) -> "AlgebraElement":
        return self.element({g: 1})

    def scalar(self, c: int) -> "AlgebraElement":
        return self.element({self.group.identity: c})

    def hat(self, H) -> "AlgebraElement":
        """The averaged subgroup sum (1/|H|) sum_{h in H} h.

        Accepts a Subgroup or a plain list of element indices (which must be
        closed under the group law).  Fails when |H| is not invertible in
        the coefficient ring.
        """
        elems = self._subgroup_elements(H)
        size = len(elems)
        try:
            inv_size = self.ring.unit_inverse(size)
        except ValueError as exc:
            raise ValueError(
                f"|H| = {size} is not invertible modulo {self.modulus}"
            ) from exc
        return self.element({g: inv_size for g in elems})

    def _subgroup_elements(self, H) -> tuple[int, ...]:
        if isinstance(H, Subgroup):
            if H.parent is not self.group and H.parent != self.group:
                raise ValueError("subgroup belongs to a different group")
            return H.elements
        elems = tuple(sorted(set(int(x) for x in H)))
        eset = set(elems)
        if self.group.identity not in eset:
            raise ValueError("subgroup must contain the identity")
        for x in elems:
            if int(self._inv[x]) not in eset:
                raise ValueError("element list is not closed under inverses")
            for y in elems:
                if int(self._table[x, y]) not in eset:
                    raise ValueError("element list is not closed under the group law")
        return elems

    def random_element(self, rng) -> "AlgebraElement":
        return self.element(rng.integers(0, self.modulus, size=self.group.order))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupAlgebra)
            and other.group == self.group
            and other.ring == self.ring
        )

    def __hash__(self) -> int:
        return hash((self.group, self.ring))

    def __repr__(self) -> str:
        return self.name


class AlgebraElement:
    """Dense element of a group algebra; immutable after construction."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: GroupAlgebra, coeffs: np.ndarray):
        self.algebra = algebra
        coeffs = np.asarray(coeffs, dtype=np.int64)
        coeffs.flags.writeable = False
        self.coeffs = coeffs

    def _coerce(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            if other.algebra != self.algebra:
                raise ValueError("elements of different algebras")
            return other
        if isinstance(other, (int, np.integer)):
            return self.algebra.scalar(int(other))
        raise TypeError(f"cannot coerce {other!r} into {self.algebra!r}")

    def __add__(self, other):
        other = self._coerce(other)
        return AlgebraElement(
            self.algebra, (self.coeffs + other.coeffs) % self.algebra.modulus
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return AlgebraElement(
            self.algebra, (self.coeffs - other.coeffs) % self.algebra.modulus
        )

    def __rsub__(self, other):
        return self._coerce(other).__sub__(self)

    def __neg__(self):
        return AlgebraElement(self.algebra, (-self.coeffs) % self.algebra.modulus)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return AlgebraElement(
                self.algebra, (self.coeffs * (int(other) % self.algebra.modulus)) % self.algebra.modulus
            )
        other = self._coerce(other)
        table = self.algebra._table
        M = self.algebra.modulus
        out = np.zeros(self.algebra.group.order, dtype=np.int64)
        b = other.coeffs
        for g in np.nonzero(self.coeffs)[0]:
            # left translation by g is a permutation row of the table
            out[table[g]] = (out[table[g]] + int(self.coeffs[g]) * b) % M
        return AlgebraElement(self.algebra, out)

    def __rmul__(self, other):
        if isinstance(other, (int, np.integer)):
            return self.__mul__(other)
        return self._coerce(other).__mul__(self)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined")
        result = self.algebra.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, np.integer)):
            other = self.algebra.scalar(int(other))
        return (
            isinstance(other, AlgebraElement)
            and other.algebra == self.algebra
            and np.array_equal(other.coeffs, self.coeffs)
        )

    def __hash__(self) -> int:
        return hash((self.algebra, self.coeffs.tobytes()))

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    # -- code-theoretic views ---------------------------------------------

    def support(self) -> list[int]:
        return [int(i) for i in np.nonzero(self.coeffs)[0]]

    def weight(self) -> int:
        return int(np.count_nonzero(self.coeffs))

    def is_idempotent(self) -> bool:
        return self * self == self

    def is_central(self) -> bool:
        for g in self.algebra.group.generator_indices:
            gb = self.algebra.basis_element(g)
            if gb * self != self * gb:
                return False
        return True

    def is_orthogonal(self, other: "AlgebraElement") -> bool:
        return (self * other).is_zero() and (other * self).is_zero()

    def involution(self) -> "AlgebraElement":
        """Coefficient of g moves to g^(-1); an anti-automorphism of order 2."""
        out = self.coeffs[self.algebra._inv]
        return AlgebraElement(self.algebra, out)

    # -- rendering ----------------------------------------------------------

    def __repr__(self) -> str:
        return self.render()

    def render(self) -> str:
        group = self.algebra.group
        terms = []
        for g in np.nonzero(self.coeffs)[0]:
            c = int(self.coeffs[g])
            gname = group.element_name(int(g))
            if gname == "1":
                terms.append(str(c))
            elif c == 1:
                terms.append(gname)
            else:
                terms.append(f"{c}*{gname}")
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> str:
        return json.dumps(
            {
                "group": self.algebra.group.name,
                "ring": self.algebra.ring.name,
                "coeffs": [int(c) for c in self.coeffs],
            },
            sort_keys=True,
        )


def weight(alpha: AlgebraElement) -> int:
    return alpha.weight()


def support(alpha: AlgebraElement) -> list[int]:
    return alpha.support()


def hat(algebra: GroupAlgebra, H) -> AlgebraElement:
    return algebra.hat(H)


def involution(alpha: AlgebraElement) -> AlgebraElement:
    return alpha.involution()


def is_idempotent(alpha: AlgebraElement) -> bool:
    return alpha.is_idempotent()


def is_central(alpha: AlgebraElement) -> bool:
    return alpha.is_central()


def is_orthogonal(alpha: AlgebraElement, beta: AlgebraElement) -> bool:
    return alpha.is_orthogonal(beta)
