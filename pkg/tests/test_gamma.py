import random

import pytest

from oracles import gamma_brute
from scverify.errors import BudgetExceeded, DenominatorNotUnit
from scverify.gamma import gamma_p, gamma_p_integer, gamma_reflection_check, representative
from scverify.padic import primes_between


def test_examples():
    for p in (5, 7, 11):
        for N in (1, 2, 3):
            assert gamma_p(1, 1, p, N) == p**N - 1
    assert representative(1, 3, 7, 2) == 33
    assert gamma_p(1, 3, 7, 2) == 25
    assert representative(2, 3, 7, 2) == 17
    assert gamma_p(2, 3, 7, 2) == 47


def test_against_brute_force():
    for p in (5, 7, 11, 13):
        for N in (1, 2, 3):
            for a, b in ((1, 3), (2, 3), (1, 2), (3, 4), (-1, 3)):
                assert gamma_p(a, b, p, N) == gamma_brute(a, b, p, N)


def test_vectorised_product_matches_loop():
    # m beyond the numpy threshold
    assert gamma_p(1, 3, 7, 6) == gamma_brute(1, 3, 7, 6)
    assert gamma_p(2, 3, 11, 5) == gamma_brute(2, 3, 11, 5)


def test_reflection_fixture():
    r = gamma_reflection_check(1, 3, 7, 2)
    assert r.passed and r.detail == "x0=5"
    assert 25 * 47 % 49 == 48


def test_reflection_one_half():
    for p in primes_between(5, 60):
        assert gamma_reflection_check(1, 2, p, 1).passed


def test_reflection_integer_argument_is_out_of_domain():
    with pytest.raises(ValueError):
        gamma_reflection_check(1, 1, 7, 2)


def test_errors():
    with pytest.raises(DenominatorNotUnit):
        gamma_p(1, 7, 7, 2)
    with pytest.raises(BudgetExceeded):
        gamma_p(1, 3, 101, 4, budget=10**6)


def test_step_relation():
    rng = random.Random(3)
    for _ in range(200):
        p = rng.choice([5, 7, 11, 13])
        N = rng.randint(1, 3)
        m = rng.randint(1, 3 * p**2)
        M = p**N
        g, g1 = gamma_p_integer(m, p, N), gamma_p_integer(m + 1, p, N)
        assert g1 == (-m * g % M if m % p else -g % M)


def test_precision_consistency():
    for p in (5, 7, 11):
        for N in (2, 3, 4):
            for a, b in ((1, 3), (2, 3), (1, 2)):
                assert gamma_p(a, b, p, N) % p ** (N - 1) == gamma_p(a, b, p, N - 1)
