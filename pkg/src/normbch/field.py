"""Arithmetic in GF(p) and its extension fields, with explicit bases.

An element of GF(p^k) is an integer in [0, p^k): its base-p digits, low
digit first, are the coordinates in the polynomial basis
{1, x, ..., x^(k-1)} modulo the field's defining polynomial.  The
defining polynomial is the lexicographically smallest monic primitive
polynomial of degree k (coefficients compared low degree first), found
by brute force; primitivity means the residue class of x generates the
multiplicative group, so it doubles as the canonical primitive element
and the log/antilog tables fall out of the modulus search for free.
This fixed choice makes every field, basis and matrix in the package
bit-reproducible across runs.

Field towers pair GF(q^m) with GF(q^mu) through two bases: h, the
polynomial basis of GF(q^m), and g, a product basis of GF(q^mu) over
GF(q) whose first s members span the subfield GF(q^s).  make_basis_pair
builds both; embed_hat carries h-coordinates onto g-coordinates (a
GF(q)-linear injection); norm is the multiplicative norm of GF(q^mu)
onto that subfield.

Fields and basis pairs are immutable after construction and safe to
share across threads; all arithmetic is pure.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Iterator

import numpy as np

from . import linalg

DEFAULT_MAX_FIELD_SIZE = 1 << 20


class FieldMismatchError(ValueError):
    """Raised when elements of different fields are combined."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _encode(digits, p: int) -> int:
    v = 0
    for d in reversed(digits):
        v = v * p + d
    return v


def _mul_by_x(digits, modulus, p: int):
    # One multiply-by-x step with reduction by the monic modulus.
    k = len(digits)
    carry = digits[-1]
    out = [0] * k
    out[0] = (-carry * modulus[0]) % p
    for j in range(1, k):
        out[j] = (digits[j - 1] - carry * modulus[j]) % p
    return out


def _antilog_table(p: int, k: int, modulus) -> list[int] | None:
    """Powers of the residue of x if it has full multiplicative order, else None."""
    size = p**k
    target = size - 1
    cur = [0] * k
    if k == 1:
        cur[0] = (-modulus[0]) % p
    else:
        cur[1] = 1
    powers = [1]
    for _ in range(1, target):
        val = _encode(cur, p)
        if val == 1:
            return None
        powers.append(val)
        cur = _mul_by_x(cur, modulus, p)
    if _encode(cur, p) != 1:
        return None
    return powers


class FieldElement:
    """Immutable element of a Field; supports +, -, *, /, ** and hashing."""

    __slots__ = ("field", "val")

    def __init__(self, field: "Field", val: int):
        self.field = field
        self.val = val

    @property
    def coords(self) -> tuple[int, ...]:
        """Coordinates over the prime field, low coordinate first."""
        return self.field.coords_of(self.val)

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected a FieldElement, got {type(other).__name__}")
        if self.field != other.field:
            raise FieldMismatchError(
                f"elements of GF({self.field.p}^{self.field.degree}) and "
                f"GF({other.field.p}^{other.field.degree}) cannot be combined"
            )

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field._add_int(self.val, other.val))

    def __sub__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field._sub_int(self.val, other.val))

    def __neg__(self):
        return FieldElement(self.field, self.field._neg_int(self.val))

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field._mul_int(self.val, other.val))

    def __truediv__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field._mul_int(self.val, self.field._inv_int(other.val)))

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        return FieldElement(self.field, self.field._pow_int(self.val, exponent))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field._inv_int(self.val))

    def __bool__(self) -> bool:
        return self.val != 0

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.val == other.val

    def __hash__(self):
        return hash((self.field._hash, self.val))

    def __repr__(self):
        return f"gf({self.field.p}^{self.field.degree}):{self.val}"

    def to_text(self) -> str:
        """Comma-separated base-p digits, low coordinate first."""
        return ",".join(str(c) for c in self.coords)


class Field:
    """GF(p^k) with the deterministically chosen primitive modulus.

    Use make_field instead of constructing directly; make_field caches
    instances so elements of equal fields share one object.
    """

    def __init__(self, p: int, degree: int, max_size: int = DEFAULT_MAX_FIELD_SIZE):
        if not is_prime(p):
            raise ValueError(f"p={p} is not prime")
        if degree < 1:
            raise ValueError(f"extension degree must be positive, got {degree}")
        size = p**degree
        if size > max_size:
            raise ValueError(f"field size {p}^{degree} = {size} exceeds the budget {max_size}")
        self.p = p
        self.degree = degree
        self.size = size
        self.modulus, antilog = self._search_modulus()
        self._exp = antilog
        self._log = [0] * size
        for i, v in enumerate(antilog):
            self._log[v] = i
        self._hash = hash((p, degree, self.modulus))
        self.zero = FieldElement(self, 0)
        self.one = FieldElement(self, 1)
        self.e = FieldElement(self, antilog[1 % (size - 1)])

    def _search_modulus(self):
        p, k = self.p, self.degree
        for tail in itertools.product(range(p), repeat=k):
            if tail[0] == 0:
                continue  # divisible by x, cannot be primitive
            modulus = tail + (1,)
            table = _antilog_table(p, k, modulus)
            if table is not None:
                return modulus, table
        raise RuntimeError(f"no primitive polynomial of degree {k} over GF({p})")

    # integer-level arithmetic on encoded values
    def _add_int(self, a: int, b: int) -> int:
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.degree):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def _neg_int(self, a: int) -> int:
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.degree):
            out += (-a % p) * mult
            a //= p
            mult *= p
        return out

    def _sub_int(self, a: int, b: int) -> int:
        return self._add_int(a, self._neg_int(b))

    def _mul_int(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        t = self.size - 1
        return self._exp[(self._log[a] + self._log[b]) % t]

    def _inv_int(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        t = self.size - 1
        return self._exp[(t - self._log[a]) % t]

    def _pow_int(self, a: int, exponent: int) -> int:
        # Square-and-multiply; the exponent is reduced mod (size - 1) for
        # a nonzero base, which also gives meaning to negative exponents.
        if a == 0:
            if exponent == 0:
                return 1
            if exponent < 0:
                raise ZeroDivisionError("zero cannot be raised to a negative power")
            return 0
        e = exponent % (self.size - 1)
        result = 1
        base = a
        while e:
            if e & 1:
                result = self._mul_int(result, base)
            base = self._mul_int(base, base)
            e >>= 1
        return result

    def coords_of(self, val: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.degree):
            val, r = divmod(val, p)
            out.append(r)
        return tuple(out)

    def elem(self, val: int) -> FieldElement:
        if not 0 <= val < self.size:
            raise ValueError(f"element value {val} out of range [0, {self.size})")
        return FieldElement(self, val)

    def from_coords(self, digits) -> FieldElement:
        digits = list(digits)
        if len(digits) != self.degree:
            raise ValueError(f"expected {self.degree} coordinates, got {len(digits)}")
        return FieldElement(self, _encode([d % self.p for d in digits], self.p))

    def scalar(self, c: int) -> FieldElement:
        """The prime-subfield element with constant coordinate c."""
        return FieldElement(self, c % self.p)

    def elements(self) -> Iterator[FieldElement]:
        return (FieldElement(self, v) for v in range(self.size))

    def nonzero_elements(self) -> Iterator[FieldElement]:
        return (FieldElement(self, v) for v in range(1, self.size))

    def describe(self) -> str:
        """Text form: p=<p> deg=<k> modulus=<c0,c1,...,ck>."""
        return f"p={self.p} deg={self.degree} modulus=" + ",".join(str(c) for c in self.modulus)

    def element_from_text(self, text: str) -> FieldElement:
        return self.from_coords(int(t) for t in text.split(","))

    def __eq__(self, other):
        if not isinstance(other, Field):
            return NotImplemented
        return self.p == other.p and self.degree == other.degree and self.modulus == other.modulus

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Field(GF({self.p}^{self.degree}), modulus={list(self.modulus)})"


@lru_cache(maxsize=None)
def make_field(p: int, total_degree: int, max_size: int = DEFAULT_MAX_FIELD_SIZE) -> Field:
    """GF(p^total_degree) with the deterministic modulus choice.

    Cached, so repeated calls with equal parameters return the same
    object and their elements interoperate directly.
    """
    return Field(p, total_degree, max_size)


class BasisPair:
    """Bases h of GF(q^m) and g of GF(q^mu) tied together for embed_hat.

    Invariants validated at construction: each basis is linearly
    independent over GF(q), and the first s members of g lie in (hence
    span) the subfield GF(q^s) of GF(q^mu).
    """

    def __init__(self, h, g, s: int):
        h = tuple(h)
        g = tuple(g)
        if not h or not g:
            raise ValueError("empty basis")
        field_m = h[0].field
        field_mu = g[0].field
        if any(x.field != field_m for x in h) or any(y.field != field_mu for y in g):
            raise FieldMismatchError("basis elements drawn from mixed fields")
        if field_m.p != field_mu.p:
            raise FieldMismatchError("the two fields have different characteristics")
        if len(h) != field_m.degree or len(g) != field_mu.degree:
            raise ValueError("basis length must equal the extension degree")
        if not 1 <= s <= len(g) or field_mu.degree % s != 0:
            raise ValueError(f"subfield prefix length s={s} incompatible with degree {field_mu.degree}")
        p = field_m.p
        h_mat = np.array([x.coords for x in h], dtype=np.int64).T
        if linalg.rank(h_mat, p) != len(h):
            raise ValueError("h is not linearly independent over the prime field")
        g_mat = np.array([y.coords for y in g], dtype=np.int64).T
        if linalg.rank(g_mat, p) != len(g):
            raise ValueError("g is not linearly independent over the prime field")
        sub_size = p**s
        for i in range(s):
            if g[i] ** sub_size != g[i]:
                raise ValueError(f"g_{i + 1} does not lie in the subfield of size {sub_size}")
        self.h = h
        self.g = g
        self.s = s
        self.field_m = field_m
        self.field_mu = field_mu
        self._g_inv = linalg.invert(g_mat, p)
        self._mu_scalars = tuple(FieldElement(field_mu, c) for c in range(p))

    def g_coords(self, y: FieldElement) -> tuple[int, ...]:
        """Coordinates of y in the g basis."""
        if y.field != self.field_mu:
            raise FieldMismatchError("element does not belong to the extension field of g")
        vec = np.array(y.coords, dtype=np.int64)
        return tuple(int(c) for c in (self._g_inv @ vec) % self.field_mu.p)

    def __repr__(self):
        return (
            f"BasisPair(GF({self.field_m.p}^{self.field_m.degree}) -> "
            f"GF({self.field_mu.p}^{self.field_mu.degree}), s={self.s})"
        )


def make_basis_pair(q: int, m: int, d: int, max_size: int = DEFAULT_MAX_FIELD_SIZE) -> BasisPair:
    """Standard basis pair for parameters (q, m, d).

    h is the polynomial basis {1, e, ..., e^(m-1)} of GF(q^m).  g is the
    product basis {beta_i * gamma_j} of GF(q^mu), where beta runs over
    the powers {1, b, ..., b^(s-1)} of a generator b of the GF(q^s)
    subfield and gamma over {1, E, ..., E^(d-3)} for the primitive
    element E; gamma_1 = 1 forces g_1..g_s = beta_1..beta_s, so the
    subfield prefix property holds by construction.
    """
    if d < 3:
        raise ValueError("d must be at least 3")
    if m < 1:
        raise ValueError("m must be positive")
    s = -(-m // (d - 2))
    mu = s * (d - 2)
    field_m = make_field(q, m, max_size)
    field_mu = make_field(q, mu, max_size)
    h = tuple(field_m.e**i for i in range(m))
    big_e = field_mu.e
    sub_gen = big_e ** ((field_mu.size - 1) // (q**s - 1))
    beta = tuple(sub_gen**i for i in range(s))
    gamma = tuple(big_e**j for j in range(d - 2))
    g = tuple(beta[i] * gamma[j] for j in range(d - 2) for i in range(s))
    return BasisPair(h, g, s)


def embed_hat(x: FieldElement, bp: BasisPair) -> FieldElement:
    """Carry the h-coordinates of x onto the g basis.

    GF(q)-linear and injective: if x = sum(alpha_i * h_i) then the image
    is sum(alpha_i * g_i).
    """
    if x.field != bp.field_m:
        raise FieldMismatchError("element does not belong to the h-basis field")
    acc = bp.field_mu.zero
    for digit, g_i in zip(x.coords, bp.g):
        if digit:
            acc = acc + bp._mu_scalars[digit] * g_i
    return acc


def norm(x: FieldElement, d: int) -> FieldElement:
    """Multiplicative norm of GF(q^mu) onto its subfield GF(q^s), mu = s*(d-2).

    Computes x ** (q^((d-3)s) + ... + q^s + 1).  The result y satisfies
    y ** (q^s) == y, i.e. it lies in the subfield; it is returned as an
    element of GF(q^mu).
    """
    field = x.field
    if d < 3:
        raise ValueError("d must be at least 3")
    if field.degree % (d - 2) != 0:
        raise ValueError(f"field degree {field.degree} is not a multiple of d-2 = {d - 2}")
    s = field.degree // (d - 2)
    exponent = sum(field.p ** (t * s) for t in range(d - 2))
    return x**exponent


def in_subfield(x: FieldElement, sub_size: int) -> bool:
    """Whether x lies in the subfield of the given size (x ** sub_size == x)."""
    return x**sub_size == x


def prime_scalar(x: FieldElement) -> int:
    """The prime-field value of an element of the prime subfield."""
    coords = x.coords
    if any(coords[1:]):
        raise ValueError(f"{x!r} is not a prime-subfield element")
    return coords[0]
