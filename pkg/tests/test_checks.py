from fractions import Fraction
from types import SimpleNamespace

import pytest

from oracles import b13_mod_p, bernoulli_poly, harmonic, reduce_mod, thm1_lhs, thm2_lhs, vp
from scverify.checks import (
    REGISTRY,
    PrimeContext,
    _odd_n,
    check_lemma,
    check_theorem,
    evaluate,
    sharpness,
)
from scverify.errors import ConfigInvalid, InapplicablePrime, WrongResidueClass
from scverify.padic import PadicNum, primes_between
from scverify.report import Item, judge

F = Fraction


def test_theorem_examples():
    r = check_theorem("THM1", 7)
    assert r.passed and r.exponent == 4 and r.diff_valuation >= 4
    assert r.lhs == str(reduce_mod(F(364, 297), 7**4))
    r = check_theorem("THM2", 5)
    assert r.passed and r.diff_valuation == 4
    with pytest.raises(WrongResidueClass):
        check_theorem("THM1", 5)
    with pytest.raises(InapplicablePrime):
        check_theorem("THM2", 3)
    with pytest.raises(ConfigInvalid):
        check_theorem("THM1", 7, exponent=5)


def test_theorem_rhs_against_exact_oracle():
    # exact rational RHS with the true Bernoulli polynomial value
    for p in primes_between(5, 60):
        B = bernoulli_poly(p - 2, F(1, 3))
        if p % 3 == 1:
            lhs, rhs, cid = thm1_lhs(p), p + F(p**3, 9) * B, "THM1"
        else:
            lhs, rhs, cid = thm2_lhs(p), p - p**3 * (B / 9 - 2), "THM2"
        assert vp(lhs - rhs, p) >= 4
        r = check_theorem(cid, p)
        assert r.passed
        assert r.lhs == str(reduce_mod(lhs, p**4))
        assert r.rhs == str(reduce_mod(rhs, p**4))


def test_thm2_p5_exact_difference():
    B = bernoulli_poly(3, F(1, 3))
    d = thm2_lhs(5) - (5 - 125 * (B / 9 - 2))
    assert d == F(-625 * 697, 1701) and vp(d, 5) == 4


def test_lemma_examples():
    assert harmonic(2, 1, lambda k: 3 * k - 1) == F(7, 10)
    assert check_lemma("B3", 7).passed
    r = check_lemma("NEW1", 7)
    assert r.passed and r.lhs == r.rhs == "3"
    assert harmonic(2, 1, lambda k: 3 * k - 2) == F(5, 4)
    assert check_lemma("B5", 5).passed
    with pytest.raises(WrongResidueClass):
        check_lemma("B3", 5)
    with pytest.raises(InapplicablePrime):
        check_lemma("B1", 3)


@pytest.mark.parametrize("cid", [c for c, d in REGISTRY.items() if d.group == "LEMMA"])
def test_each_lemma_small_primes(cid):
    d = REGISTRY[cid]
    for p in primes_between(5, 90):
        if d.applies(p):
            r = evaluate(cid, PrimeContext(p))
            assert r.passed, (cid, p, r)


def test_lemma_sides_against_exact_rationals_p13():
    # C5 and D3c recomputed with Fractions, independent of the residue tables
    p, n = 13, 4
    H = lambda m: harmonic(m)  # noqa: E731
    T = lambda m: harmonic(m, 1, lambda k: 3 * k - 2)  # noqa: E731
    lhs = sum(H(k) / (3 * k - 1) for k in range(1, n + 1))
    rhs = H(n) ** 2 / 3 - H(n) - F(1, 3) * sum(H(n + k) / k for k in range(1, n + 1))
    assert vp(lhs - rhs, p) >= 1
    r = check_lemma("C5", p)
    assert r.lhs == str(reduce_mod(lhs, p)) and r.rhs == str(reduce_mod(rhs, p))
    p, n = 11, 4
    lhs = sum(H(k) / (3 * k - 2) for k in range(1, n + 1))
    rhs = -F(1, 3) * sum(H(n + k - 1) / k for k in range(n, 2 * n)) - H(n) / 2
    assert vp(lhs - rhs, p) >= 1
    r = check_lemma("D3c", p)
    assert r.lhs == str(reduce_mod(lhs, p)) and r.rhs == str(reduce_mod(rhs, p))
    assert T(n) is not None


def test_quantified_report_shows_first_failure():
    one = PadicNum.one(7, 8)
    items = [Item("k=0", one, one, 2), Item("k=1", one, one + 7, 2), Item("k=2", one, one + 1, 2)]
    r = judge(7, "X", items, 8, 0.0)
    assert not r.passed and r.detail == "k=1" and r.diff_valuation == 1


def test_passing_report_shows_least_margin():
    one = PadicNum.one(7, 8)
    items = [Item("k=0", one, one, 2), Item("k=1", one, one + 49, 2)]
    r = judge(7, "X", items, 8, 0.0)
    assert r.passed and r.detail == "k=1" and r.diff_valuation == 2


def test_odd_n_is_flagged_not_failed():
    assert _odd_n(SimpleNamespace(n=3)).startswith("n=3")
    assert _odd_n(SimpleNamespace(n=4)) is None
    # n = (p-1)/3 is even for every prime p = 1 (mod 3)
    assert all(((p - 1) // 3) % 2 == 0 for p in primes_between(7, 5000) if p % 3 == 1)


def test_gamma_checks():
    for p in (7, 13):
        r = evaluate("VANHAMME_D2", PrimeContext(p))
        assert r.passed and r.exponent == 4
    for p in (5, 11):
        r = evaluate("LONG_RAMA", PrimeContext(p))
        assert r.passed and r.exponent == 6 and r.detail == "new-3 p=5 mod 6"
    with pytest.raises(WrongResidueClass):
        evaluate("VANHAMME_D2", PrimeContext(5))


def test_long_rama_agrees_with_vanhamme_on_p_1_mod_6():
    for p in (7, 13, 19):
        a = evaluate("VANHAMME_D2", PrimeContext(p))
        b = evaluate("LONG_RAMA", PrimeContext(p))
        assert a.passed and b.passed and b.diff_valuation >= 4


def test_sharpness():
    assert sharpness("THM2", 5) == (4, False)
    v, nonzero = sharpness("THM1", 7)
    assert nonzero and v == 3
    for p in primes_between(5, 200):
        cid = "THM1" if p % 3 == 1 else "THM2"
        v, nonzero = sharpness(cid, p)
        if nonzero:
            assert v == 3
        else:
            assert v >= 4


def test_wrong_bernoulli_value_is_caught():
    # a deliberately perturbed Bernoulli residue must break THM1
    ctx = PrimeContext(13)
    ctx.__dict__["b13"] = (b13_mod_p(13) + 1) % 13
    assert not evaluate("THM1", ctx).passed


def test_recurrence_route_gives_same_verdicts():
    for p in primes_between(5, 80):
        cid = "THM1" if p % 3 == 1 else "THM2"
        assert check_theorem(cid, p, bernoulli_route="recurrence").passed
