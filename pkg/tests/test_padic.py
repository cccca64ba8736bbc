import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import legendre_by_squares, reduce_mod, vp
from scverify.errors import DivisionByZero, NotInvertible, PrecisionError, PrimeMismatch
from scverify.padic import (
    INF,
    PadicNum,
    is_prime,
    legendre_symbol,
    mod_inverse,
    padic,
    padic_add,
    padic_inv,
    padic_mul,
    padic_of_rational,
    primes_between,
)

PRIMES = [5, 7, 11, 13, 101]


def test_mod_inverse_examples():
    assert mod_inverse(3, 2401) == 1601
    assert mod_inverse(1, 49) == 1
    with pytest.raises(NotInvertible):
        mod_inverse(7, 49)


def test_padic_of_rational_examples():
    x = padic_of_rational(1, 3, 7, 4)
    assert (x.valuation, x.unit) == (0, 1601)
    assert padic_of_rational(0, 5, 7, 4).valuation == INF
    y = padic_of_rational(14, 3, 7, 4)
    assert (y.valuation, y.unit) == (1, 801)


def test_negative_valuation_is_legal():
    x = padic_of_rational(2, 49, 7, 4)
    assert x.valuation == -2
    assert x.absprec == 2


def test_add_examples():
    third = padic_of_rational(1, 3, 7, 4)
    two_thirds = padic_of_rational(2, 3, 7, 4)
    s = padic_add(third, two_thirds)
    assert (s.valuation, s.unit) == (0, 1)
    zero = PadicNum.zero(7, 4)
    assert padic_add(third, zero) == third
    a = PadicNum(7, 4, 0, 1)
    b = PadicNum(7, 4, 0, 7**4 - 1)
    c = padic_add(a, b)
    assert c.is_zero and c.absprec == 4


def test_mul_examples():
    x = PadicNum(5, 4, 1, 2)
    y = PadicNum(5, 4, 2, 3)
    z = padic_mul(x, y)
    assert (z.valuation, z.unit) == (3, 6)
    assert padic_mul(x, PadicNum.one(5, 4)) == x
    assert padic_mul(padic_of_rational(1, 3, 7, 4), padic_of_rational(3, 1, 7, 4)) == PadicNum.one(7, 4)


def test_inv_examples():
    x = padic_inv(PadicNum(7, 4, 0, 1601))
    assert (x.valuation, x.unit) == (0, 3)
    assert padic_inv(PadicNum.one(7, 4)) == PadicNum.one(7, 4)
    with pytest.raises(DivisionByZero):
        padic_inv(PadicNum.zero(7, 4))


def test_prime_mismatch():
    with pytest.raises(PrimeMismatch):
        padic_add(PadicNum.one(5, 4), PadicNum.one(7, 4))
    with pytest.raises(PrimeMismatch):
        padic_mul(PadicNum.one(5, 4), PadicNum.one(7, 4))


def test_rejects_even_prime_and_bad_unit():
    with pytest.raises(ValueError):
        PadicNum(2, 4, 0, 1)
    with pytest.raises(ValueError):
        PadicNum(7, 4, 0, 14)


def test_legendre_examples():
    assert legendre_symbol(-3, 7) == 1
    assert legendre_symbol(-3, 5) == -1
    assert legendre_symbol(14, 7) == 0


def test_residue_and_precision():
    x = padic(Fraction(7, 3), 7, 4)
    assert x.residue(5) == 7 * 1601 % 7**5
    with pytest.raises(PrecisionError):
        x.residue(6)
    with pytest.raises(PrecisionError):
        padic(Fraction(1, 7), 7, 4).residue(1)


def test_equality_is_up_to_common_precision():
    assert PadicNum(7, 2, 0, 3) == PadicNum(7, 4, 0, 3 + 49 * 5)
    assert PadicNum(7, 2, 0, 3) != PadicNum(7, 2, 1, 3)
    assert PadicNum.zero(7, 3) == PadicNum.zero(7, 9)


def test_min_precision_rule_for_add():
    coarse = PadicNum.from_residue(3, 7, 1)
    fine = PadicNum.from_residue(7 * 5, 7, 6)
    s = coarse + fine
    assert s.absprec == 1


def test_sieve_matches_trial_division():
    assert primes_between(1, 1000) == [n for n in range(1, 1001) if is_prime(n)]
    assert primes_between(20, 10) == []


def test_legendre_minus3_tracks_residue_class():
    for p in primes_between(5, 10**4):
        assert (legendre_symbol(-3, p) == 1) == (p % 3 == 1)


def test_legendre_against_squares():
    for p in primes_between(3, 200):
        for a in range(-5, 2 * p):
            assert legendre_symbol(a, p) == legendre_by_squares(a, p)


rationals = st.fractions(max_denominator=10**6).filter(lambda x: abs(x.numerator) < 10**12)


@settings(max_examples=500, deadline=None)
@given(x=rationals, p=st.sampled_from(PRIMES), K=st.integers(1, 10))
def test_round_trip(x, p, K):
    y = padic(x, p, K)
    if x == 0:
        assert y.is_zero
        return
    assert y.valuation == vp(x, p)
    unit = x / Fraction(p) ** y.valuation
    assert y.unit == reduce_mod(unit, p**K)


@settings(max_examples=500, deadline=None)
@given(x=rationals, y=rationals, p=st.sampled_from(PRIMES))
def test_ultrametric_and_additivity(x, y, p):
    a, b = padic(x, p, 8), padic(y, p, 8)
    s = a + b
    if not s.is_zero:
        assert s.valuation >= min(a.valuation, b.valuation)
        if a.valuation != b.valuation:
            assert s.valuation == min(a.valuation, b.valuation)
        assert s == padic(x + y, p, 8)
    if x and y:
        assert (a * b).valuation == a.valuation + b.valuation
        assert a * b == padic(x * y, p, 8)


def test_mod_inverse_random_pairs():
    rng = random.Random(20261018)
    for _ in range(2000):
        m = rng.randrange(2, 10**9)
        a = rng.randrange(-(10**12), 10**12)
        try:
            x = mod_inverse(a, m)
        except NotInvertible:
            from math import gcd

            assert gcd(a, m) > 1
            continue
        assert a * x % m == 1 and 1 <= x < m or m == 1
