"""Arithmetic in GF(p^k).

Elements are plain integers in ``[0, q)``: the base-``p`` digits of an
integer are the ascending coefficients of its polynomial representative.
Multiplication goes through exp/log tables built once per field, so every
field object is immutable after construction and can be shared freely.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

import numpy as np

from .errors import (
    DivisionByZero,
    FieldMismatch,
    NonPrime,
    NotPrimePower,
    NotSquareOrder,
    TooLarge,
)

MAX_FIELD_ORDER = 2**16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, k)`` with ``q == p**k``; raise NotPrimePower otherwise."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, rest = 0, q
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    return p, k


def is_prime_power(q: int) -> bool:
    try:
        prime_power(q)
    except NotPrimePower:
        return False
    return True


# -- polynomials over GF(p) as ascending coefficient lists -------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_rem(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _monic_polys(p: int, degree: int):
    """All monic polynomials of ``degree``, in increasing integer encoding."""
    for high_first in itertools.product(range(p), repeat=degree):
        yield list(high_first[::-1]) + [1]


def is_irreducible(modulus, p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    m = _trim(list(modulus))
    k = len(m) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    for d in range(1, k // 2 + 1):
        for f in _monic_polys(p, d):
            if not _poly_rem(m, f, p):
                return False
    return True


def _encode(digits, p: int) -> int:
    return sum(int(c) * p**i for i, c in enumerate(digits))


def _decode(value: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        value, r = divmod(value, p)
        out.append(r)
    return out


@lru_cache(maxsize=None)
def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Monic irreducible of degree ``k`` with the smallest integer encoding.

    The encoding orders polynomials by their coefficients read from the
    highest degree down, so this is the lexicographically first one.
    """
    if k == 1:
        return (0, 1)
    for value in range(p**k, 2 * p**k):
        cand = _decode(value, p, k + 1)
        if is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("an irreducible polynomial exists for every degree")


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class Field:
    """The finite field GF(p^k) with a fixed monic irreducible modulus."""

    def __init__(self, p: int, k: int = 1, modulus=None, max_order: int = MAX_FIELD_ORDER):
        if not is_prime(p):
            raise NonPrime(f"characteristic {p} is not prime")
        if k < 1:
            raise ValueError("extension degree must be positive")
        if p**k > max_order:
            raise TooLarge(f"GF({p}^{k}) exceeds the order limit {max_order}")
        if modulus is None:
            modulus = smallest_irreducible(p, k)
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1 or any(not 0 <= c < p for c in modulus):
            raise ValueError(f"modulus {modulus} is not monic of degree {k} over GF({p})")
        if not is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = modulus
        self._build_tables()

    # table construction uses slow polynomial products exactly once
    def _slow_mul(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        da, db = _decode(a, p, k), _decode(b, p, k)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        return _encode(_poly_rem(prod, list(self.modulus), p), p)

    def _slow_pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._slow_mul(result, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return result

    def _build_tables(self):
        q = self.q
        order = q - 1
        if q == 2:
            gen = 1
        else:
            factors = _prime_factors(order)
            gen = next(
                g for g in range(2, q)
                if all(self._slow_pow(g, order // r) != 1 for r in factors)
            )
        self.generator = gen
        exp = np.zeros(2 * order, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        x = 1
        for i in range(order):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, gen)
        exp[order:] = exp[:order]
        self._exp = exp
        self._log = log
        self._exp_list = exp.tolist()
        self._log_list = log.tolist()
        self._digits = np.array([_decode(v, self.p, self.k) for v in range(q)], dtype=np.int64)
        self._place = self.p ** np.arange(self.k, dtype=np.int64)
        if self.k > 1 and self.p > 2:
            self._add_table = self._add_arrays_digits(
                np.arange(q)[:, None], np.arange(q)[None, :]
            ).tolist() if q <= 1024 else None
        else:
            self._add_table = None

    # -- identity ------------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Field) and (self.p, self.k, self.modulus) == (
            other.p, other.k, other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return f"Field(p={self.p}, k={self.k}, modulus={list(self.modulus)})"

    def __len__(self):
        return self.q

    def to_json(self) -> dict:
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, data: dict) -> "Field":
        return get_field(int(data["p"]), int(data["k"]), tuple(data["modulus"]))

    # -- scalar arithmetic on encoded integers ---------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % self.p
        if self._add_table is not None:
            return self._add_table[a][b]
        p, out, place = self.p, 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * place
            a //= p
            b //= p
            place *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p, out, place = self.p, 0, 1
        while a:
            out += (-a % p) * place
            a //= p
            place *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp_list[self._log_list[a] + self._log_list[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no inverse")
        return self._exp_list[(self.q - 1 - self._log_list[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivisionByZero("zero to a negative power")
            return 1 if e == 0 else 0
        return self._exp_list[(self._log_list[a] * e) % (self.q - 1)]

    def frobenius(self, a: int, times: int = 1) -> int:
        return self.pow(a, self.p**times)

    def elements(self) -> range:
        return range(self.q)

    def element(self, value: int) -> "FieldElement":
        return FieldElement(value, self)

    # -- subfield and norm ---------------------------------------------------------

    @property
    def is_square_order(self) -> bool:
        return self.k % 2 == 0

    @property
    def sqrt_order(self) -> int:
        if self.k % 2:
            raise NotSquareOrder(f"GF({self.q}) does not have square order")
        return self.p ** (self.k // 2)

    def conjugate(self, a: int) -> int:
        """a -> a^sqrt(q), the involutory automorphism of GF(q) for square q."""
        return self.pow(a, self.sqrt_order)

    def norm(self, a: int) -> int:
        """Relative norm a^(sqrt(q)+1) onto the subfield of order sqrt(q)."""
        return self.pow(a, self.sqrt_order + 1)

    def subfield(self, order: int) -> list[int]:
        """Encoded elements of the subfield of the given order."""
        p, k = prime_power(order) if order > 1 else (self.p, 0)
        if p != self.p or self.k % k:
            raise ValueError(f"GF({self.q}) has no subfield of order {order}")
        return [a for a in range(self.q) if self.pow(a, order) == a]

    # -- vectorised arithmetic on numpy arrays -------------------------------

    def _add_arrays_digits(self, a, b):
        da = (np.asarray(a)[..., None] // self._place) % self.p
        db = (np.asarray(b)[..., None] // self._place) % self.p
        return (((da + db) % self.p) * self._place).sum(axis=-1)

    def add_arrays(self, a, b) -> np.ndarray:
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % self.p
        return self._add_arrays_digits(a, b)

    def mul_arrays(self, a, b) -> np.ndarray:
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        a, b = np.broadcast_arrays(a, b)
        out = np.zeros(a.shape, dtype=np.int64)
        nz = (a != 0) & (b != 0)
        out[nz] = self._exp[self._log[a[nz]] + self._log[b[nz]]]
        return out

    def pow_arrays(self, a, e: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        out = np.zeros(a.shape, dtype=np.int64)
        nz = a != 0
        out[nz] = self._exp[(self._log[a[nz]] * e) % (self.q - 1)]
        if e == 0:
            out[:] = 1
        return out


@lru_cache(maxsize=None)
def get_field(p: int, k: int = 1, modulus: tuple | None = None) -> Field:
    """Cached field constructor; equal arguments return the same object."""
    return Field(p, k, modulus)


def field_create(p: int, k: int = 1, max_order: int = MAX_FIELD_ORDER) -> Field:
    if not is_prime(p):
        raise NonPrime(f"characteristic {p} is not prime")
    if p**k > max_order:
        raise TooLarge(f"GF({p}^{k}) exceeds the order limit {max_order}")
    return get_field(p, k)


def field_of_order(q: int) -> Field:
    p, k = prime_power(q)
    return field_create(p, k)


class FieldElement:
    """An element of a Field with the usual operator overloads."""

    __slots__ = ("value", "field")

    def __init__(self, value: int, field: Field):
        if not 0 <= value < field.q:
            raise ValueError(f"{value} is not an element of GF({field.q})")
        self.value = int(value)
        self.field = field

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch("operands belong to different fields")
            return other.value
        if isinstance(other, int) and 0 <= other < self.field.q:
            return other
        return NotImplemented

    def _wrap(self, v: int) -> "FieldElement":
        return FieldElement(v, self.field)

    def __add__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.add(self.value, b))

    def __sub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(self.value, b))

    def __mul__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.mul(self.value, b))

    def __truediv__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.div(self.value, b))

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return self._wrap(self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field.q))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"GF({self.field.q})({self.value})"


_OPS = {
    "add": lambda F, a, b: F.add(a, b),
    "sub": lambda F, a, b: F.sub(a, b),
    "mul": lambda F, a, b: F.mul(a, b),
    "div": lambda F, a, b: F.div(a, b),
    "inv": lambda F, a, b: F.inv(a),
    "pow": lambda F, a, b: F.pow(a, b),
}


def arith(a: FieldElement, b, op: str) -> FieldElement:
    """Apply a named field operation.

    For ``inv`` the second operand is ignored; for ``pow`` it is the integer
    exponent.  Otherwise both operands must come from the same field.
    """
    if op not in _OPS:
        raise ValueError(f"unknown operation {op!r}")
    F = a.field
    if op == "pow":
        return FieldElement(F.pow(a.value, int(b)), F)
    if op == "inv":
        return FieldElement(F.inv(a.value), F)
    if isinstance(b, FieldElement):
        if b.field != F:
            raise FieldMismatch("operands belong to different fields")
        b = b.value
    return FieldElement(_OPS[op](F, a.value, int(b)), F)


def relative_norm(x: FieldElement) -> FieldElement:
    """x^(sqrt(q)+1), landing in the subfield GF(sqrt(q))."""
    return FieldElement(x.field.norm(x.value), x.field)
