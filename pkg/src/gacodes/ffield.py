"""Exact arithmetic for prime fields F_p and extensions F_{p^m}.

Elements are stored in the polynomial basis over the prime field, as
little-endian residue vectors modulo a fixed monic irreducible polynomial.
All operations are exact; nothing here uses floating point.
"""

from __future__ import annotations

from typing import Iterator, Optional, Sequence

import numpy as np

from .errors import BudgetError

# Fields larger than this are rejected outright.  Splitting fields for
# character work can legitimately get big (degree ~100 over F_2), so the cap
# is generous, but silent blow-ups are still fenced off.
MAX_FIELD_BITS = 256

# Trial division bound used when factoring q - 1 for order computations.
_FACTOR_BUDGET = 10**7


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Factor n by trial division; raises BudgetError beyond the bound."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        if d > _FACTOR_BUDGET:
            raise BudgetError(f"trial-division factoring budget exceeded for {n}")
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# ---------------------------------------------------------------------------
# dense little-endian polynomial helpers over F_p


def _trim(a: np.ndarray) -> np.ndarray:
    nz = np.nonzero(a)[0]
    if len(nz) == 0:
        return a[:1] * 0
    return a[: nz[-1] + 1]


def _pmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return _trim(np.convolve(a, b) % p)


def _pmod(a: np.ndarray, f: np.ndarray, p: int) -> np.ndarray:
    a = _trim(a % p)
    df = len(f) - 1
    inv_lead = pow(int(f[-1]), -1, p)
    while len(a) - 1 >= df and np.any(a):
        shift = len(a) - 1 - df
        factor = (int(a[-1]) * inv_lead) % p
        a = a.copy()
        a[shift : shift + df + 1] = (a[shift : shift + df + 1] - factor * f) % p
        a = _trim(a)
    return a


def _pgcd(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    a, b = _trim(a % p), _trim(b % p)
    while np.any(b):
        a, b = b, _pmod(a, b, p)
    if np.any(a):
        a = (a * pow(int(a[-1]), -1, p)) % p
    return a


def _ppow_x(exp: int, f: np.ndarray, p: int) -> np.ndarray:
    """x**exp mod f, by square and multiply."""
    result = np.array([1], dtype=np.int64)
    base = _pmod(np.array([0, 1], dtype=np.int64), f, p)
    while exp:
        if exp & 1:
            result = _pmod(np.convolve(result, base) % p, f, p)
        base = _pmod(np.convolve(base, base) % p, f, p)
        exp >>= 1
    return result


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Irreducibility test for a monic polynomial over F_p.

    A degree-m polynomial with no irreducible factor of degree <= m/2 is
    irreducible, so it suffices to check gcd(f, x^(p^i) - x) = 1 for all
    i <= m/2.  The Frobenius powers x^(p^i) mod f are built incrementally.
    """
    f = _trim(np.asarray(coeffs, dtype=np.int64) % p)
    m = len(f) - 1
    if m < 1 or int(f[-1]) != 1:
        return False
    if m == 1:
        return True
    if int(f[0]) == 0:
        return False
    xp = _ppow_x(p, f, p)
    frob = xp.copy()
    for _ in range(m // 2):
        diff = frob.copy()
        if len(diff) < 2:
            diff = np.concatenate([diff, np.zeros(2 - len(diff), dtype=np.int64)])
        diff[1] = (diff[1] - 1) % p
        g = _pgcd(f, diff, p)
        if len(g) > 1:
            return False
        # (x^(p^i))^p = x^(p^(i+1)) mod f, so one p-th power advances the chain
        frob = _ppoly_pow(frob, p, f, p)
    return True


def _ppoly_pow(a: np.ndarray, exp: int, f: np.ndarray, p: int) -> np.ndarray:
    result = np.array([1], dtype=np.int64)
    base = _pmod(a, f, p)
    while exp:
        if exp & 1:
            result = _pmod(np.convolve(result, base) % p, f, p)
        base = _pmod(np.convolve(base, base) % p, f, p)
        exp >>= 1
    return result


class Field:
    """The finite field F_{p^m} with a fixed monic irreducible modulus.

    For m = 1 the modulus is x (identity convention) and elements are plain
    residues.  Instances are immutable and safe to share.
    """

    def __init__(self, p: int, m: int = 1, modulus: Optional[Sequence[int]] = None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if m < 1:
            raise ValueError(f"extension degree must be >= 1, got {m}")
        if (p**m).bit_length() > MAX_FIELD_BITS:
            raise ValueError(
                f"field order p^m = {p}^{m} exceeds the {MAX_FIELD_BITS}-bit cap"
            )
        self.p = p
        self.m = m
        if modulus is None:
            if m == 1:
                modulus = (0, 1)
            else:
                raise ValueError("extension fields need an explicit modulus; "
                                 "use make_extension")
        mod = np.asarray(modulus, dtype=np.int64) % p
        if len(mod) != m + 1 or int(mod[-1]) != 1:
            raise ValueError("modulus must be monic of degree m")
        if m > 1 and not is_irreducible(mod, p):
            raise ValueError("modulus is reducible over the prime field")
        self.modulus = tuple(int(c) for c in mod)
        self._mod_arr = mod
        self._mod_arr.flags.writeable = False
        self.q = p**m
        # rows i = 0..m-2 hold x^(m+i) mod modulus, for fast reduction
        if m > 1:
            rows = []
            r = (-mod[:m]) % p
            rows.append(r.copy())
            for _ in range(m - 2):
                r = np.concatenate([[0], r[:-1]]) + r[-1] * rows[0]
                r %= p
                rows.append(r.copy())
            self._red = np.array(rows, dtype=np.int64)
        else:
            self._red = np.zeros((0, 1), dtype=np.int64)

    # -- vector-level arithmetic (little-endian length-m int64 arrays) --

    def _mulvec(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        full = np.convolve(a, b) % self.p
        if len(full) <= self.m:
            out = np.zeros(self.m, dtype=np.int64)
            out[: len(full)] = full
            return out
        low = full[: self.m].copy()
        high = full[self.m :]
        low += high @ self._red[: len(high)]
        return low % self.p

    def element(self, coeffs) -> "FieldElement":
        if isinstance(coeffs, FieldElement):
            if coeffs.field is not self and coeffs.field != self:
                raise ValueError("element belongs to a different field")
            return coeffs
        if isinstance(coeffs, (int, np.integer)):
            vec = np.zeros(self.m, dtype=np.int64)
            vec[0] = int(coeffs) % self.p
            return FieldElement(self, vec)
        vec = np.asarray(coeffs, dtype=np.int64) % self.p
        if len(vec) > self.m and np.any(vec[self.m :]):
            raise ValueError("coefficient vector longer than extension degree")
        out = np.zeros(self.m, dtype=np.int64)
        out[: min(self.m, len(vec))] = vec[: self.m]
        return FieldElement(self, out)

    def zero(self) -> "FieldElement":
        return self.element(0)

    def one(self) -> "FieldElement":
        return self.element(1)

    def from_index(self, i: int) -> "FieldElement":
        """Element number i in the fixed enumeration (base-p digits)."""
        if not 0 <= i < self.q:
            raise ValueError(f"index {i} out of range for field of order {self.q}")
        return FieldElement(self, _digits(i, self.p, self.m))

    def elements(self) -> Iterator["FieldElement"]:
        """All field elements in the fixed enumeration order."""
        for i in range(self.q):
            yield FieldElement(self, _digits(i, self.p, self.m))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Field)
            and other.p == self.p
            and other.m == self.m
            and other.modulus == self.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"Field(p={self.p}, m={self.m})"

    @property
    def name(self) -> str:
        return f"F{self.q}" if self.m == 1 else f"F{self.p}^{self.m}"

    # residue-ring protocol used by the group-algebra layer (prime fields only)
    @property
    def residue_modulus(self) -> int:
        if self.m != 1:
            raise ValueError("only prime fields carry scalar residue coefficients")
        return self.p

    def unit_inverse(self, c: int) -> int:
        return pow(int(c) % self.residue_modulus, -1, self.residue_modulus)

    @property
    def characteristic(self) -> int:
        return self.p


def _digits(i: int, p: int, m: int) -> np.ndarray:
    vec = np.zeros(m, dtype=np.int64)
    for k in range(m):
        vec[k] = i % p
        i //= p
    return vec


class FieldElement:
    """An element of a Field, in the polynomial basis (little-endian)."""

    __slots__ = ("field", "coeffs", "_key")

    def __init__(self, field: Field, coeffs: np.ndarray):
        self.field = field
        coeffs = np.asarray(coeffs, dtype=np.int64)
        coeffs.flags.writeable = False
        self.coeffs = coeffs
        self._key = tuple(int(c) for c in coeffs)

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("mixed-field arithmetic")
            return other
        return self.field.element(other)

    def __add__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field, (self.coeffs + other.coeffs) % self.field.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field, (self.coeffs - other.coeffs) % self.field.p)

    def __rsub__(self, other):
        return self._coerce(other).__sub__(self)

    def __neg__(self):
        return FieldElement(self.field, (-self.coeffs) % self.field.p)

    def __mul__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field, self.field._mulvec(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def inverse(self) -> "FieldElement":
        if not any(self._key):
            raise ZeroDivisionError("inverse of zero")
        p, f = self.field.p, self.field._mod_arr
        if self.field.m == 1:
            return self.field.element(pow(int(self.coeffs[0]), -1, p))
        # extended Euclid on (self, modulus)
        r0, r1 = _trim(self.coeffs.copy()), f.astype(np.int64)
        s0 = np.array([1], dtype=np.int64)
        s1 = np.array([0], dtype=np.int64)
        while np.any(r1):
            q, r = _pdivmod(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, _trim((_pad(s0, len(np.convolve(q, s1))) - np.convolve(q, s1)) % p)
        inv_lead = pow(int(r0[-1]), -1, p)
        s0 = (s0 * inv_lead) % p
        return self.field.element(_pmod(s0, f, p))

    def __pow__(self, exp: int) -> "FieldElement":
        exp = int(exp)
        if exp < 0:
            return self.inverse() ** (-exp)
        result = self.field.one()
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self._key)

    def lift(self) -> int:
        """Residue value; only meaningful for prime-field elements."""
        if self.field.m != 1:
            raise ValueError("lift() requires a prime-field element")
        return int(self.coeffs[0])

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, np.integer)):
            other = self.field.element(int(other))
        return (
            isinstance(other, FieldElement)
            and other.field == self.field
            and other._key == self._key
        )

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        if self.field.m == 1:
            return str(int(self.coeffs[0]))
        terms = []
        for i, c in enumerate(self._key):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                base = "x" if i == 1 else f"x^{i}"
                terms.append(base if c == 1 else f"{c}*{base}")
        return " + ".join(terms) if terms else "0"


def _pad(a: np.ndarray, n: int) -> np.ndarray:
    if len(a) >= n:
        return a
    return np.concatenate([a, np.zeros(n - len(a), dtype=np.int64)])


def _pdivmod(a: np.ndarray, b: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    a = _trim(a % p)
    b = _trim(b % p)
    if not np.any(b):
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return np.array([0], dtype=np.int64), a
    q = np.zeros(len(a) - len(b) + 1, dtype=np.int64)
    inv_lead = pow(int(b[-1]), -1, p)
    r = a.copy()
    while len(r) >= len(b) and np.any(r):
        shift = len(r) - len(b)
        factor = (int(r[-1]) * inv_lead) % p
        q[shift] = factor
        r[shift : shift + len(b)] = (r[shift : shift + len(b)] - factor * b) % p
        r = _trim(r)
    return q, r


def make_extension(p: int, m: int) -> Field:
    """F_{p^m} with the lexicographically first irreducible modulus.

    The scan walks monic degree-m polynomials in base-p counting order of the
    low coefficients, so the same (p, m) always yields the same field.
    """
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if m < 1:
        raise ValueError(f"extension degree must be >= 1, got {m}")
    if (p**m).bit_length() > MAX_FIELD_BITS:
        raise ValueError(f"field order {p}^{m} exceeds the {MAX_FIELD_BITS}-bit cap")
    if m == 1:
        return Field(p, 1)
    scan_limit = p ** min(m, 20)
    for n in range(1, scan_limit):
        low = _digits(n, p, m)
        if low[0] == 0:
            continue
        cand = np.concatenate([low, [1]])
        if is_irreducible(cand, p):
            return Field(p, m, cand)
    raise BudgetError(f"no irreducible modulus found for ({p}, {m}) within scan limit")


def order_mod(q: int, n: int) -> int:
    """Multiplicative order of q modulo n."""
    import math

    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    if math.gcd(q, n) != 1:
        raise ValueError(f"gcd({q}, {n}) != 1; order undefined")
    t, value = 1, q % n
    while value != 1:
        value = (value * q) % n
        t += 1
    return t


def element_order(x: FieldElement) -> int:
    """Least t >= 1 with x^t = 1; divides q - 1."""
    if x.is_zero():
        raise ValueError("zero has no multiplicative order")
    t = x.field.q - 1
    for prime in factorize(t):
        while t % prime == 0 and (x ** (t // prime)) == x.field.one():
            t //= prime
    return t


def primitive_root_of_unity(field: Field, e: int) -> FieldElement:
    """A deterministic element of multiplicative order exactly e.

    Scans field elements in enumeration order, raising each to (q-1)/e and
    returning the first result of full order e.  Requires e | q - 1 (i.e.
    the field splits x^e - 1), otherwise raises ValueError.
    """
    if e < 1:
        raise ValueError(f"order must be positive, got {e}")
    qm1 = field.q - 1
    if qm1 % e != 0:
        raise ValueError(
            f"{e} does not divide q - 1 = {qm1}; field is not a splitting field"
        )
    if e == 1:
        return field.one()
    cof = qm1 // e
    primes = list(factorize(e))
    for x in field.elements():
        if x.is_zero():
            continue
        z = x**cof
        if z == field.one():
            continue
        if all(z ** (e // ell) != field.one() for ell in primes):
            return z
    raise ValueError("no element of the requested order found")  # pragma: no cover
