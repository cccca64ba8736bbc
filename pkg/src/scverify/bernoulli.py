"""Bernoulli numbers and polynomial values modulo a prime.

Two independent routes to B_{p-2}(1/3) mod p:

* the O(p^2) recurrence over the table b_0..b_{p-2}, then the polynomial sum;
* Lehmer's O(p) shortcut through H_{floor(p/3)}^(2) and the symbol (-3/p).

The verifier uses the Lehmer route by default; the recurrence route is the oracle.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import DenominatorNotUnit, InapplicablePrime
from .padic import legendre_symbol

RECURRENCE_CAP = 2000


@dataclass(frozen=True)
class BernoulliTable:
    prime: int
    residues: tuple[int, ...]

    def __getitem__(self, m: int) -> int:
        return self.residues[m]

    def __len__(self) -> int:
        return len(self.residues)


def _require(p: int) -> None:
    if p < 5:
        raise InapplicablePrime(f"p={p}: Bernoulli residues need p >= 5")


@lru_cache(maxsize=64)
def bernoulli_numbers_mod_p(p: int) -> BernoulliTable:
    """B_0..B_{p-2} mod p from sum_{j<=m} C(m+1, j) B_j = 0."""
    _require(p)
    b = [1]
    for m in range(1, p - 1):
        if m >= 3 and m % 2 == 1:
            b.append(0)
            continue
        # row C(m+1, j) built incrementally; divisors j+1 <= m+1 <= p-1 are units
        c, s = 1, 0
        for j in range(m):
            s += c * b[j]
            c = c * (m + 1 - j) % p * pow(j + 1, -1, p) % p
        b.append(-s * pow(m + 1, -1, p) % p)
    return BernoulliTable(p, tuple(b))


def bernoulli_poly_at(m: int, a: int, b: int, p: int, table: BernoulliTable | None = None) -> int:
    """B_m(a/b) mod p for 0 <= m <= p-2."""
    if b % p == 0:
        raise DenominatorNotUnit(f"{b} is divisible by {p}")
    if not 0 <= m <= p - 2:
        raise ValueError(f"index m={m} outside 0..p-2")
    if table is None:
        table = bernoulli_numbers_mod_p(p)
    x = a * pow(b, -1, p) % p
    # Horner in x over coefficients C(m, k) B_k, highest power of x paired with k = 0
    c, acc = 1, 0
    for k in range(m + 1):
        acc = (acc * x + c * table[k]) % p
        c = c * (m - k) % p * pow(k + 1, -1, p) % p
    return acc


def b13_recurrence(p: int) -> int:
    """B_{p-2}(1/3) mod p via the full table (oracle route, capped)."""
    _require(p)
    if p > RECURRENCE_CAP:
        raise ValueError(f"recurrence route capped at p <= {RECURRENCE_CAP}")
    return bernoulli_poly_at(p - 2, 1, 3, p)


def b13_via_lehmer(p: int) -> int:
    """B_{p-2}(1/3) mod p as 2 (-3/p) H_{floor(p/3)}^(2)."""
    _require(p)
    h2 = 0
    for k in range(1, p // 3 + 1):
        h2 += pow(k * k, -1, p)
    return 2 * legendre_symbol(-3, p) * h2 % p


def b13(p: int, route: str = "lehmer") -> int:
    if route == "lehmer":
        return b13_via_lehmer(p)
    if route == "recurrence":
        return b13_recurrence(p)
    raise ValueError(f"unknown Bernoulli route {route!r}")


def bernoulli_exact(n: int) -> list[Fraction]:
    """Exact B_0..B_n (B_1 = -1/2); small-index fixtures only."""
    B = [Fraction(1)]
    for m in range(1, n + 1):
        B.append(-sum(comb(m + 1, j) * B[j] for j in range(m)) / (m + 1))
    return B


def bernoulli_poly_exact(m: int, x: Fraction) -> Fraction:
    B = bernoulli_exact(m)
    return sum(comb(m, k) * B[k] * x ** (m - k) for k in range(m + 1))
