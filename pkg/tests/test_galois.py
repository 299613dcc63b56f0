import pytest
from hypothesis import given, settings, strategies as st
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_mul, gf_rem

from blockingsets import Field, FieldElement, arith, field_create, field_of_order, relative_norm
from blockingsets.errors import (
    DivisionByZero,
    FieldMismatch,
    NonPrime,
    NotPrimePower,
    NotSquareOrder,
    TooLarge,
)
from blockingsets.galois import is_prime_power, prime_power, smallest_irreducible

ORDERS = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 81, 121, 125, 128]


def digits(a, p, k):
    out = []
    for _ in range(k):
        a, r = divmod(a, p)
        out.append(r)
    return out


def sympy_mul(F, a, b):
    """Multiply via sympy's dense polynomial arithmetic (high degree first)."""
    pa = [ZZ(c) for c in reversed(digits(a, F.p, F.k))]
    pb = [ZZ(c) for c in reversed(digits(b, F.p, F.k))]
    mod = [ZZ(c) for c in reversed(F.modulus)]
    r = gf_rem(gf_mul(pa, pb, F.p, ZZ), mod, F.p, ZZ)
    r = [int(c) for c in reversed(r)]
    return sum(c * F.p**i for i, c in enumerate(r))


@pytest.mark.parametrize("q", [4, 8, 9, 16, 25, 27, 49])
def test_multiplication_matches_sympy(q):
    F = field_of_order(q)
    for a in range(q):
        for b in range(0, q, max(1, q // 13)):
            assert F.mul(a, b) == sympy_mul(F, a, b)


@pytest.mark.parametrize("q", ORDERS)
def test_modulus_is_smallest_irreducible(q):
    F = field_of_order(q)
    if F.k == 1:
        return
    mod = [ZZ(c) for c in reversed(F.modulus)]
    assert gf_irreducible_p(mod, F.p, ZZ)
    # no monic irreducible with a smaller encoding
    enc = sum(c * F.p**i for i, c in enumerate(F.modulus))
    for value in range(F.p**F.k, enc):
        cand = digits(value, F.p, F.k + 1)
        assert not gf_irreducible_p([ZZ(c) for c in reversed(cand)], F.p, ZZ)


def test_gf9_modulus_and_generator():
    F = field_of_order(9)
    assert F.modulus == (1, 0, 1)
    powers = {F.pow(F.generator, e) for e in range(8)}
    assert powers == set(range(1, 9))


@pytest.mark.parametrize("q", ORDERS)
def test_field_axioms_exhaustive_small(q):
    F = field_of_order(q)
    sample = range(q) if q <= 16 else range(0, q, q // 11)
    for a in sample:
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
            assert F.pow(a, q - 1) == 1
        assert F.frobenius(a, F.k) == a
        for b in sample:
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(ORDERS), st.data())
def test_distributive_and_associative(q, data):
    F = field_of_order(q)
    a, b, c = (data.draw(st.integers(0, q - 1)) for _ in range(3))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))


@pytest.mark.parametrize("q", [4, 9, 16, 25, 49, 64, 81, 121])
def test_norm_lands_in_subfield(q):
    F = field_of_order(q)
    r = F.sqrt_order
    sub = set(F.subfield(r))
    assert len(sub) == r
    norms = [F.norm(a) for a in range(1, q)]
    assert set(norms) == sub - {0}
    # norm is (r+1)-to-1 onto the nonzero subfield elements
    assert all(norms.count(x) == r + 1 for x in sub - {0})
    for a in range(q):
        assert F.conjugate(F.conjugate(a)) == a


def test_norm_examples():
    F = field_of_order(4)
    assert [F.norm(a) for a in range(4)] == [0, 1, 1, 1]
    x = FieldElement(2, F)
    assert int(relative_norm(x)) == 1


def test_array_ops_match_scalar():
    import numpy as np

    F = field_of_order(27)
    a = np.arange(27)
    b = (a * 5 + 3) % 27
    assert list(F.add_arrays(a, b)) == [F.add(x, y) for x, y in zip(a, b)]
    assert list(F.mul_arrays(a, b)) == [F.mul(x, y) for x, y in zip(a, b)]
    assert list(F.pow_arrays(a, 4)) == [F.pow(int(x), 4) for x in a]


def test_errors():
    with pytest.raises(NonPrime):
        field_create(6, 1)
    with pytest.raises(NotPrimePower):
        field_of_order(12)
    with pytest.raises(TooLarge):
        field_create(2, 20)
    with pytest.raises(NotSquareOrder):
        field_of_order(8).sqrt_order
    F, G = field_of_order(4), field_of_order(5)
    with pytest.raises(FieldMismatch):
        FieldElement(1, F) + FieldElement(1, G)
    with pytest.raises(DivisionByZero):
        F.inv(0)
    with pytest.raises(ZeroDivisionError):
        arith(FieldElement(1, F), FieldElement(0, F), "div")


def test_element_operators():
    F = field_of_order(9)
    a, b = F.element(4), F.element(7)
    assert int(a * b) == F.mul(4, 7)
    assert int(a - b) == F.sub(4, 7)
    assert int(a / b) == F.div(4, 7)
    assert int(a**3) == F.pow(4, 3)
    assert int(arith(a, b, "add")) == F.add(4, 7)
    assert int(arith(a, None, "inv")) == F.inv(4)


def test_json_roundtrip_and_prime_power():
    F = field_of_order(25)
    assert Field.from_json(F.to_json()) == F
    assert prime_power(128) == (2, 7)
    assert is_prime_power(121) and not is_prime_power(100)
    assert smallest_irreducible(2, 3) == (1, 1, 0, 1)
