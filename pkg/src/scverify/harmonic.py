"""Generalized harmonic sums H, S, T and the reflection / Wolstenholme lemmas."""
from __future__ import annotations

import time
from enum import Enum
from fractions import Fraction
from typing import Optional

from .errors import DenominatorNotUnit, InapplicablePrime
from .padic import PadicNum, ResidueRing
from .report import CheckReport, Item, judge

DEFAULT_K = 8


class HarmonicFamily(Enum):
    H = "H"  # 1/k^r
    S = "S"  # 1/(3k-1)^r
    T = "T"  # 1/(3k-2)^r

    def denominator(self, k: int) -> int:
        if self is HarmonicFamily.H:
            return k
        if self is HarmonicFamily.S:
            return 3 * k - 1
        return 3 * k - 2


def _family(f) -> HarmonicFamily:
    return f if isinstance(f, HarmonicFamily) else HarmonicFamily(f)


def harmonic_table(family, n_max: int, r: int = 1, p: Optional[int] = None, K: int = DEFAULT_K) -> list:
    """Prefix sums [X_0, X_1, ..., X_{n_max}] of the family, exact or p-adic."""
    fam = _family(family)
    if p is None:
        out = [Fraction(0)]
        acc = Fraction(0)
        for k in range(1, n_max + 1):
            acc += Fraction(1, fam.denominator(k) ** r)
            out.append(acc)
        return out
    ring = ResidueRing(p, K)
    return [ring.padic(x) for x in residue_table(fam, n_max, r, ring)]


def residue_table(family, n_max: int, r: int, ring: ResidueRing) -> list[int]:
    """Prefix sums as integers mod p**K; every denominator must be a unit."""
    fam = _family(family)
    p, M = ring.p, ring.modulus
    out = [0]
    acc = 0
    for k in range(1, n_max + 1):
        d = fam.denominator(k)
        if d % p == 0:
            raise DenominatorNotUnit(f"{fam.value}_{n_max}^({r}): term k={k} has denominator {d} divisible by {p}")
        acc = (acc + pow(d, -r, M)) % M
        out.append(acc)
    return out


def harmonic_value(family, n: int, r: int = 1, p: Optional[int] = None, K: int = DEFAULT_K):
    """X_n^(r) for X in {H, S, T}; a Fraction, or a PadicNum when p is given."""
    fam = _family(family)
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if p is None:
        return sum((Fraction(1, fam.denominator(k) ** r) for k in range(1, n + 1)), Fraction(0))
    return harmonic_table(fam, n, r, p, K)[n]


def _require_p5(p: int) -> None:
    if p < 5:
        raise InapplicablePrime(f"p={p}: the harmonic lemmas need p >= 5")


def reflection_items(p: int, K: int = DEFAULT_K, which=("B1", "B2")):
    ring = ResidueRing(p, K)
    H1 = residue_table("H", p - 1, 1, ring)
    H2 = residue_table("H", p - 1, 2, ring)
    for k in range(1, p):
        if "B1" in which:
            yield Item(f"B1 k={k}", ring.padic(H1[p - 1 - k] - H1[k]), ring.padic(p * H2[k]), 2)
        if "B2" in which:
            yield Item(f"B2 k={k}", ring.padic(H2[p - 1 - k] + H2[k]), ring.padic(0), 1)


def reflection_check(p: int, K: int = DEFAULT_K) -> CheckReport:
    """H_{p-1-k} - H_k = p H_k^(2) mod p^2 and H_{p-1-k}^(2) + H_k^(2) = 0 mod p, all 1 <= k < p."""
    _require_p5(p)
    t0 = time.perf_counter()
    return judge(p, "REFLECTION", reflection_items(p, K), K, t0)


def wolstenholme_items(p: int, K: int = DEFAULT_K):
    zero = PadicNum.zero(p, K)
    yield Item("H_{p-1}", harmonic_value("H", p - 1, 1, p, K), zero, 2)
    yield Item("H_{p-1}^(2)", harmonic_value("H", p - 1, 2, p, K), zero, 1)


def wolstenholme_check(p: int, K: int = DEFAULT_K) -> CheckReport:
    _require_p5(p)
    t0 = time.perf_counter()
    return judge(p, "WOLSTENHOLME", wolstenholme_items(p, K), K, t0)
