from fractions import Fraction
from math import comb

import pytest

from oracles import b13_mod_p, bernoulli_poly, reduce_mod
from scverify.bernoulli import (
    b13_recurrence,
    b13_via_lehmer,
    bernoulli_exact,
    bernoulli_numbers_mod_p,
    bernoulli_poly_at,
)
from scverify.errors import DenominatorNotUnit, InapplicablePrime
from scverify.padic import primes_between


def test_table_p7():
    assert list(bernoulli_numbers_mod_p(7).residues) == [1, 3, 6, 0, 3, 0]


@pytest.mark.parametrize("p", [5, 7, 11, 13, 31])
def test_table_invariants(p):
    b = bernoulli_numbers_mod_p(p)
    assert b[0] == 1
    assert b[1] == (-pow(2, -1, p)) % p
    assert all(b[m] == 0 for m in range(3, p - 1, 2))
    for m in range(1, p - 1):
        assert sum(comb(m + 1, j) * b[j] for j in range(m + 1)) % p == 0


def test_table_against_exact_numbers():
    exact = bernoulli_exact(30)
    for p in (37, 41, 43):
        table = bernoulli_numbers_mod_p(p)
        for m in range(31):
            assert table[m] == reduce_mod(exact[m], p)


def test_poly_examples():
    assert bernoulli_poly_at(5, 1, 3, 7) == 6
    assert bernoulli_poly_at(3, 1, 3, 5) == 3
    for p in (5, 7, 11):
        table = bernoulli_numbers_mod_p(p)
        assert all(bernoulli_poly_at(m, 0, 1, p) == table[m] for m in range(p - 1))
    with pytest.raises(DenominatorNotUnit):
        bernoulli_poly_at(2, 1, 7, 7)


def test_poly_against_sympy():
    for p in (11, 13, 17):
        for m in range(p - 1):
            for a, b in ((1, 3), (2, 3), (1, 2), (5, 4)):
                assert bernoulli_poly_at(m, a, b, p) == reduce_mod(bernoulli_poly(m, Fraction(a, b)), p)


def test_lehmer_examples():
    assert b13_via_lehmer(7) == 6
    assert b13_via_lehmer(5) == 3
    assert b13_via_lehmer(13) == bernoulli_poly_at(11, 1, 3, 13) == 7
    with pytest.raises(InapplicablePrime):
        b13_via_lehmer(3)


def test_route_equivalence_small():
    for p in primes_between(5, 150):
        assert b13_via_lehmer(p) == b13_recurrence(p) == b13_mod_p(p)
