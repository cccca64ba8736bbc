from fractions import Fraction

import pytest

from oracles import harmonic, vp
from scverify.errors import DenominatorNotUnit, InapplicablePrime
from scverify.harmonic import (
    HarmonicFamily,
    harmonic_table,
    harmonic_value,
    reflection_check,
    wolstenholme_check,
)
from scverify.padic import padic, primes_between


def test_values():
    assert harmonic_value("H", 3) == Fraction(11, 6)
    assert harmonic_value("S", 2) == Fraction(7, 10)
    assert harmonic_value(HarmonicFamily.T, 0, 2) == 0


@pytest.mark.parametrize("family", list(HarmonicFamily))
@pytest.mark.parametrize("r", [1, 2, 3])
def test_table_agrees_with_direct_sum(family, r):
    table = harmonic_table(family, 40, r)
    for n in range(41):
        assert table[n] == harmonic(n, r, family.denominator)


def test_padic_mode_matches_exact():
    for p in (5, 7, 11, 13):
        for fam in HarmonicFamily:
            n = p - 1 if fam is HarmonicFamily.H else (p - 2) // 3
            for r in (1, 2):
                assert harmonic_value(fam, n, r, p, 8) == padic(harmonic_value(fam, n, r), p, 8)


def test_padic_mode_rejects_p_divisible_denominators():
    with pytest.raises(DenominatorNotUnit):
        harmonic_value("H", 7, 1, p=7)
    with pytest.raises(DenominatorNotUnit):
        harmonic_value("S", 2, 1, p=5)  # 3*2 - 1 = 5


def test_reflection_fixture_p5_k1():
    diff = harmonic(3) - harmonic(1) - 5 * harmonic(1, 2)
    assert harmonic(3) - harmonic(1) == Fraction(5, 6)
    assert diff == Fraction(-25, 6) and vp(diff, 5) == 2


def test_reflection_check():
    r = reflection_check(7)
    assert r.passed and r.check == "REFLECTION"
    for p in primes_between(5, 200):
        assert reflection_check(p).passed
    with pytest.raises(InapplicablePrime):
        reflection_check(3)


def test_wolstenholme():
    assert harmonic(4) == Fraction(25, 12)
    assert harmonic(6) == Fraction(49, 20)
    r = wolstenholme_check(5)
    assert r.passed
    assert wolstenholme_check(7).passed
    with pytest.raises(InapplicablePrime):
        wolstenholme_check(3)


def test_b3_b5_properties():
    for p in primes_between(5, 1000):
        if p % 3 == 1:
            assert harmonic_value("S", (p - 1) // 3, 1, p).valuation >= 1
        else:
            assert harmonic_value("T", (p + 1) // 3, 1, p).valuation >= 1


def test_b4_b6_against_sympy_bernoulli():
    from oracles import b13_mod_p

    for p in primes_between(5, 120):
        b = b13_mod_p(p)
        if p % 3 == 1:
            s2 = harmonic_value("S", (p - 1) // 3, 2, p).residue(1)
            assert (s2 + b * pow(9, -1, p)) % p == 0
        else:
            t2 = harmonic_value("T", (p + 1) // 3, 2, p).residue(1)
            assert (t2 - b * pow(9, -1, p)) % p == 0
