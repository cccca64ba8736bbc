"""Registry of congruence checks and the per-prime evaluation context.

Each check is a list of congruence instances (``Item``) produced from a
:class:`PrimeContext`; quantified lemmas yield one instance per k.  Harmonic
quantities live in Z/p^K as plain integers (every denominator in range is a
unit) and become :class:`PadicNum` only at the end, so Bernoulli residues, which
are known mod p only, carry their own precision through the arithmetic.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import comb
from typing import Callable, Iterable, Iterator, Optional

from . import bernoulli
from .errors import ConfigInvalid, InapplicablePrime, WrongResidueClass
from .gamma import DEFAULT_BUDGET, gamma_cost, gamma_padic
from .harmonic import residue_table
from .hyperseries import inner_weight_residues, truncated_sum
from .padic import PadicNum, ResidueRing
from .report import CheckReport, Item, flagged, judge

F = Fraction
DEFAULT_K = 8


class PrimeContext:
    """Tables shared by every check at one prime; built lazily, never mutated after."""

    def __init__(self, p: int, K: int = DEFAULT_K, bernoulli_route: str = "lehmer",
                 gamma_budget: int = DEFAULT_BUDGET):
        if p < 5:
            raise InapplicablePrime(f"p={p}: every check needs p >= 5")
        self.p = p
        self.K = K
        self.ring = ResidueRing(p, K)
        self.bernoulli_route = bernoulli_route
        self.gamma_budget = gamma_budget

    @property
    def n(self) -> int:
        p = self.p
        return (p - 1) // 3 if p % 3 == 1 else (p + 1) // 3

    def P(self, r: int) -> PadicNum:
        return self.ring.padic(r)

    def frac(self, a: int, b: int) -> int:
        return self.ring.frac(a, b)

    @cached_property
    def H1(self) -> list[int]:
        return residue_table("H", self.p - 1, 1, self.ring)

    @cached_property
    def H2(self) -> list[int]:
        return residue_table("H", self.p - 1, 2, self.ring)

    def _stop(self, family: str) -> int:
        # S_n has the term 1/p when p = 2 (mod 3); T_n is a unit sum in both classes
        if family == "S" and self.p % 3 == 2:
            return self.n - 1
        return self.n

    @cached_property
    def S1(self) -> list[int]:
        return residue_table("S", self._stop("S"), 1, self.ring)

    @cached_property
    def S2(self) -> list[int]:
        return residue_table("S", self._stop("S"), 2, self.ring)

    @cached_property
    def T1(self) -> list[int]:
        return residue_table("T", self.n, 1, self.ring)

    @cached_property
    def T2(self) -> list[int]:
        return residue_table("T", self.n, 2, self.ring)

    @cached_property
    def b13(self) -> int:
        """B_{p-2}(1/3) mod p through the configured route."""
        return bernoulli.b13(self.p, self.bernoulli_route)

    @cached_property
    def B(self) -> PadicNum:
        return PadicNum.from_residue(self.b13, self.p, 1)

    @cached_property
    def thm1_lhs(self) -> PadicNum:
        return truncated_sum("THM1_LHS", self.p, K=self.K)

    @cached_property
    def thm2_lhs(self) -> PadicNum:
        return truncated_sum("THM2_LHS", self.p, K=self.K)

    @cached_property
    def c3_inner(self) -> PadicNum:
        return truncated_sum("C3_INNER_WEIGHTED", self.p, K=self.K)

    @cached_property
    def d1_inner(self) -> PadicNum:
        return truncated_sum("D1_INNER_WEIGHTED", self.p, K=self.K)

    @cached_property
    def vanhamme_lhs(self) -> PadicNum:
        return truncated_sum("VANHAMME_D2_LHS", self.p, K=self.K)

    def gamma13(self, N: int) -> PadicNum:
        return gamma_padic(1, 3, self.p, N, self.gamma_budget)

    def sum_ratio(self, num: Callable[[int], int], den: Callable[[int], int], lo: int, hi: int) -> int:
        """sum_{k=lo}^{hi} num(k)/den(k) in Z/p^K."""
        M = self.ring.modulus
        return sum(num(k) * self.ring.inv(den(k)) for k in range(lo, hi + 1)) % M


@dataclass(frozen=True)
class CheckDef:
    id: str
    group: str  # THEOREM, CONJECTURE, LEMMA, GAMMA
    exponent: int
    items: Callable[[PrimeContext], Iterable[Item]]
    mod3: Optional[int] = None
    mod6: Optional[int] = None
    min_prime: int = 5
    quantified: bool = False
    description: str = ""
    gamma_precision: Optional[Callable[[int], int]] = None
    skip_reason: Optional[Callable[[PrimeContext], Optional[str]]] = None

    def residue_class(self) -> str:
        parts = [f"p>={self.min_prime}"]
        if self.mod3 is not None:
            parts.append(f"p={self.mod3} mod 3")
        if self.mod6 is not None:
            parts.append(f"p={self.mod6} mod 6")
        return ", ".join(parts)

    def in_class(self, p: int) -> bool:
        if self.mod3 is not None and p % 3 != self.mod3:
            return False
        return self.mod6 is None or p % 6 == self.mod6

    def applies(self, p: int) -> bool:
        return p >= self.min_prime and self.in_class(p)

    def cost(self, p: int) -> int:
        """Gamma product length this check needs at p (0 when it needs none)."""
        if self.gamma_precision is None:
            return 0
        return gamma_cost(1, 3, p, self.gamma_precision(p))


REGISTRY: dict[str, CheckDef] = {}


def check(id: str, group: str, exponent: int, **kw):
    def deco(fn):
        REGISTRY[id] = CheckDef(id, group, exponent, fn, description=(fn.__doc__ or "").strip(), **kw)
        return fn
    return deco


def _one(label: str, lhs: PadicNum, rhs: PadicNum, e: int) -> Iterator[Item]:
    yield Item(label, lhs, rhs, e)


# ---------------------------------------------------------------- theorems


@check("THM1", "THEOREM", 4, mod3=1, min_prime=7)
def _thm1(c: PrimeContext):
    """sum (6k+1)(1/3)_k^4(1)_2k/((1)_k^4(2/3)_2k) = p + p^3/9 B_{p-2}(1/3) mod p^4"""
    p = c.p
    return _one("a-3", c.thm1_lhs, p + c.B * F(p**3, 9), 4)


@check("THM2", "THEOREM", 4, mod3=2, min_prime=5)
def _thm2(c: PrimeContext):
    """sum (6k-1)(-1/3)_k^4(1)_2k/((1)_k^4(-2/3)_2k) = p - p^3(B_{p-2}(1/3)/9 - 2) mod p^4"""
    p = c.p
    return _one("a-4", c.thm2_lhs, p - (c.B * F(1, 9) - 2) * p**3, 4)


@check("CONJ1", "CONJECTURE", 3, mod3=1, min_prime=7)
def _conj1(c: PrimeContext):
    """THM1 left-hand side = p mod p^3"""
    return _one("a-1", c.thm1_lhs, c.P(c.p), 3)


@check("CONJ2", "CONJECTURE", 3, mod3=2, min_prime=5)
def _conj2(c: PrimeContext):
    """THM2 left-hand side = p mod p^3"""
    return _one("a-2", c.thm2_lhs, c.P(c.p), 3)


# ---------------------------------------------------------------- p-adic Gamma


@check("VANHAMME_D2", "GAMMA", 4, mod6=1, gamma_precision=lambda p: 3)
def _vanhamme(c: PrimeContext):
    """sum_{k<p} (6k+1)(1/3)_k^6/(1)_k^6 = -p Gamma_p(1/3)^9 mod p^4"""
    return _one("new-2", c.vanhamme_lhs, -c.p * c.gamma13(3) ** 9, 4)


def _long_rama_precision(p: int) -> int:
    return 5 if p % 6 == 1 else 2


@check("LONG_RAMA", "GAMMA", 6, gamma_precision=_long_rama_precision)
def _long_rama(c: PrimeContext):
    """same sum = -p Gamma_p(1/3)^9 (p=1 mod 6) or -(10/27) p^4 Gamma_p(1/3)^9 (p=5 mod 6) mod p^6"""
    p = c.p
    g9 = c.gamma13(_long_rama_precision(p)) ** 9
    if p % 6 == 1:
        return _one("new-3 p=1 mod 6", c.vanhamme_lhs, -p * g9, 6)
    return _one("new-3 p=5 mod 6", c.vanhamme_lhs, g9 * F(-10 * p**4, 27), 6)


# ---------------------------------------------------------------- section 2


@check("WOLSTENHOLME", "LEMMA", 2)
def _wolstenholme(c: PrimeContext):
    """H_{p-1} = 0 mod p^2 and H_{p-1}^(2) = 0 mod p"""
    p = c.p
    yield Item("H_{p-1}", c.P(c.H1[p - 1]), c.P(0), 2)
    yield Item("H_{p-1}^(2)", c.P(c.H2[p - 1]), c.P(0), 1)


def _b1_items(c: PrimeContext):
    H1, H2, p = c.H1, c.H2, c.p
    for k in range(1, p):
        yield Item(f"k={k}", c.P(H1[p - 1 - k] - H1[k]), c.P(p * H2[k]), 2)


def _b2_items(c: PrimeContext):
    H2, p = c.H2, c.p
    for k in range(1, p):
        yield Item(f"k={k}", c.P(H2[p - 1 - k] + H2[k]), c.P(0), 1)


@check("B1", "LEMMA", 2, quantified=True)
def _b1(c: PrimeContext):
    """H_{p-1-k} - H_k = p H_k^(2) mod p^2 for 1 <= k <= p-1"""
    return _b1_items(c)


@check("B2", "LEMMA", 1, quantified=True)
def _b2(c: PrimeContext):
    """H_{p-1-k}^(2) + H_k^(2) = 0 mod p for 1 <= k <= p-1"""
    return _b2_items(c)


@check("REFLECTION", "LEMMA", 2, quantified=True)
def _reflection(c: PrimeContext):
    """B1 and B2 together over 1 <= k <= p-1"""
    for a, b in zip(_b1_items(c), _b2_items(c)):
        yield a._replace(label="B1 " + a.label)
        yield b._replace(label="B2 " + b.label)


@check("B3", "LEMMA", 1, mod3=1)
def _b3(c: PrimeContext):
    """S_n = 0 mod p, n = (p-1)/3"""
    return _one("b-3", c.P(c.S1[c.n]), c.P(0), 1)


@check("B4", "LEMMA", 1, mod3=1)
def _b4(c: PrimeContext):
    """S_n^(2) = -B_{p-2}(1/3)/9 mod p, n = (p-1)/3"""
    return _one("b-4", c.P(c.S2[c.n]), c.B * F(-1, 9), 1)


@check("B5", "LEMMA", 1, mod3=2)
def _b5(c: PrimeContext):
    """T_n = 0 mod p, n = (p+1)/3"""
    return _one("b-5", c.P(c.T1[c.n]), c.P(0), 1)


@check("B6", "LEMMA", 1, mod3=2)
def _b6(c: PrimeContext):
    """T_n^(2) = B_{p-2}(1/3)/9 mod p, n = (p+1)/3"""
    return _one("b-6", c.P(c.T2[c.n]), c.B * F(1, 9), 1)


def _new1_skip(c: PrimeContext) -> Optional[str]:
    if c.p > bernoulli.RECURRENCE_CAP:
        return f"recurrence route capped at p <= {bernoulli.RECURRENCE_CAP}"
    return None


@check("NEW1", "LEMMA", 1, skip_reason=_new1_skip)
def _new1(c: PrimeContext):
    """H_{floor(p/3)}^(2) = (1/2)(-3/p) B_{p-2}(1/3) mod p, Bernoulli value from the recurrence"""
    p = c.p
    from .padic import legendre_symbol

    b = bernoulli.b13_recurrence(p)
    rhs = PadicNum.from_residue(b * legendre_symbol(-3, p) * pow(2, -1, p), p, 1)
    return _one("new-1", c.P(c.H2[p // 3]), rhs, 1)


# ---------------------------------------------------------------- section 3 (p = 1 mod 3)


@check("C2", "LEMMA", 4, mod3=1, min_prime=7, quantified=True)
def _c2(c: PrimeContext):
    """(1/3-p/3)_k(1/3+p/3)_k/((1-p/3)_k(1+p/3)_k) = (1/3)_k^2/(1)_k^2 (1 + p^2 A_k) mod p^4, 0 <= k <= n"""
    p, M, fr = c.p, c.ring.modulus, c.frac
    A = inner_weight_residues(c.n, "A", c.ring)
    lhs = rhs = 1
    for k in range(c.n + 1):
        yield Item(f"k={k}", c.P(lhs), c.P(rhs * (1 + p * p * A[k])), 4)
        lhs = lhs * fr((1 - p + 3 * k) * (1 + p + 3 * k), (3 - p + 3 * k) * (3 + p + 3 * k)) % M
        rhs = rhs * fr((1 + 3 * k) ** 2, (3 + 3 * k) ** 2) % M


@check("C3", "LEMMA", 4, mod3=1, min_prime=7)
def _c3(c: PrimeContext):
    """THM1 sum = p - p^2 * (inner-weighted sum, variant A) mod p^4"""
    p = c.p
    return _one("c-3", c.thm1_lhs, p - c.c3_inner * p**2, 4)


def _c_sums(c: PrimeContext) -> dict[str, int]:
    n, H, T = c.n, c.H1, c.T1
    return {
        "H/(3k-1)": c.sum_ratio(lambda k: H[k], lambda k: 3 * k - 1, 1, n),
        "T/k": c.sum_ratio(lambda k: T[k], lambda k: k, 1, n),
        "T/(3k-1)": c.sum_ratio(lambda k: T[k], lambda k: 3 * k - 1, 1, n),
        "H_{2n+k}/k": c.sum_ratio(lambda k: H[2 * n + k], lambda k: k, 1, n),
        "H_{n+k}/k [1,n]": c.sum_ratio(lambda k: H[n + k], lambda k: k, 1, n),
        "H_{n+k}/k [1,2n]": c.sum_ratio(lambda k: H[n + k], lambda k: k, 1, 2 * n),
        "H_{n+k}/k [n+1,2n]": c.sum_ratio(lambda k: H[n + k], lambda k: k, n + 1, 2 * n),
    }


@check("C4", "LEMMA", 2, mod3=1, min_prime=7)
def _c4(c: PrimeContext):
    """inner-weighted sum A = (p/3)(2 sum H_k/(3k-1) + 2 sum T_k/k - 6 sum T_k/(3k-1) + 2H_n - 3S_n^(2)) mod p^2"""
    s, n, p = _c_sums(c), c.n, c.p
    inside = 2 * s["H/(3k-1)"] + 2 * s["T/k"] - 6 * s["T/(3k-1)"] + 2 * c.H1[n] - 3 * c.S2[n]
    return _one("c-4", c.c3_inner, c.P(c.frac(p, 3) * inside), 2)


@check("C5", "LEMMA", 1, mod3=1, min_prime=7)
def _c5(c: PrimeContext):
    """sum H_k/(3k-1) = H_n^2/3 - H_n - (1/3) sum_{k<=n} H_{n+k}/k mod p"""
    s, Hn = _c_sums(c), c.H1[c.n]
    rhs = c.frac(Hn * Hn, 3) - Hn - c.frac(s["H_{n+k}/k [1,n]"], 3)
    return _one("c-5", c.P(s["H/(3k-1)"]), c.P(rhs), 1)


@check("C6", "LEMMA", 1, mod3=1, min_prime=7, quantified=True)
def _c6(c: PrimeContext):
    """T_k = (H_{2n+k} - H_{2n})/3 mod p for 1 <= k <= n"""
    n, H = c.n, c.H1
    for k in range(1, n + 1):
        yield Item(f"k={k}", c.P(c.T1[k]), c.P(c.frac(H[2 * n + k] - H[2 * n], 3)), 1)


@check("C7", "LEMMA", 1, mod3=1, min_prime=7)
def _c7(c: PrimeContext):
    """sum T_k/k = (1/3) sum H_{2n+k}/k - H_n^2/3 mod p"""
    s, Hn = _c_sums(c), c.H1[c.n]
    return _one("c-7", c.P(s["T/k"]), c.P(c.frac(s["H_{2n+k}/k"] - Hn * Hn, 3)), 1)


@check("C8", "LEMMA", 1, mod3=1, min_prime=7)
def _c8(c: PrimeContext):
    """sum T_k/(3k-1) = (1/9) sum_{k=n+1}^{2n} H_{n+k}/k mod p"""
    s = _c_sums(c)
    return _one("c-8", c.P(s["T/(3k-1)"]), c.P(c.frac(s["H_{n+k}/k [n+1,2n]"], 9)), 1)


@check("C9", "LEMMA", 2, mod3=1, min_prime=7)
def _c9(c: PrimeContext):
    """inner-weighted sum A = (2p/9)(sum H_{2n+k}/k - sum_{k<=2n} H_{n+k}/k - (9/2) S_n^(2)) mod p^2"""
    s, p = _c_sums(c), c.p
    inside = s["H_{2n+k}/k"] - s["H_{n+k}/k [1,2n]"] - c.frac(9 * c.S2[c.n], 2)
    return _one("c-9", c.c3_inner, c.P(c.frac(2 * p, 9) * inside), 2)


def _odd_n(c: PrimeContext) -> Optional[str]:
    return f"n={c.n} is odd; the congruence assumes n even" if c.n % 2 else None


@check("C12", "LEMMA", 2, mod3=1, min_prime=7, quantified=True, skip_reason=_odd_n)
def _c12(c: PrimeContext):
    """C(3n, n+k) = (-1)^k (1 - p H_{n+k}) mod p^2 for 0 <= k <= 2n (n even)"""
    n, p = c.n, c.p
    for k in range(2 * n + 1):
        yield Item(f"k={k}", c.P(comb(3 * n, n + k)), c.P((-1) ** k * (1 - p * c.H1[n + k])), 2)


@check("C13", "LEMMA", 2, mod3=1, min_prime=7, quantified=True, skip_reason=_odd_n)
def _c13(c: PrimeContext):
    """C(3n, 2n+k) = (-1)^k (1 - p H_{2n+k}) mod p^2 for 0 <= k <= n (n even)"""
    n, p = c.n, c.p
    for k in range(n + 1):
        yield Item(f"k={k}", c.P(comb(3 * n, 2 * n + k)), c.P((-1) ** k * (1 - p * c.H1[2 * n + k])), 2)


@check("C14", "LEMMA", 1, mod3=1, min_prime=7)
def _c14(c: PrimeContext):
    """sum_{k<=2n} H_{n+k}/k - sum_{k<=n} H_{2n+k}/k = 2 H_n^(2) mod p"""
    s = _c_sums(c)
    return _one("c-14", c.P(s["H_{n+k}/k [1,2n]"] - s["H_{2n+k}/k"]), c.P(2 * c.H2[c.n]), 1)


@check("C15", "LEMMA", 2, mod3=1, min_prime=7)
def _c15(c: PrimeContext):
    """inner-weighted sum A = -(p/9) B_{p-2}(1/3) mod p^2"""
    return _one("c-15", c.c3_inner, c.B * F(-c.p, 9), 2)


# ---------------------------------------------------------------- section 4 (p = 2 mod 3)


def _d_sums(c: PrimeContext) -> dict[str, int]:
    n, H, S = c.n, c.H1, c.S1
    return {
        "H/(3k-2)": c.sum_ratio(lambda k: H[k], lambda k: 3 * k - 2, 1, n),
        "S/k": c.sum_ratio(lambda k: S[k], lambda k: k, 1, n - 1),
        "S/(3k-2)": c.sum_ratio(lambda k: S[k], lambda k: 3 * k - 2, 1, n - 1),
        "H_{2n+k-1}/k": c.sum_ratio(lambda k: H[2 * n + k - 1], lambda k: k, 1, n - 1),
        "H_{n+k-1}/k [1,n-1]": c.sum_ratio(lambda k: H[n + k - 1], lambda k: k, 1, n - 1),
        "H_{n+k-1}/k [1,2n-1]": c.sum_ratio(lambda k: H[n + k - 1], lambda k: k, 1, 2 * n - 1),
        "H_{n+k-1}/k [n,2n-1]": c.sum_ratio(lambda k: H[n + k - 1], lambda k: k, n, 2 * n - 1),
    }


@check("D1c", "LEMMA", 4, mod3=2)
def _d1(c: PrimeContext):
    """THM2 sum = p - p^2 * (inner-weighted sum, variant B) mod p^4"""
    p = c.p
    return _one("d-1", c.thm2_lhs, p - c.d1_inner * p**2, 4)


@check("D2c", "LEMMA", 2, mod3=2)
def _d2(c: PrimeContext):
    """inner-weighted sum B = (p/3)(H_n - 3T_n^(2) + 2 sum H_k/(3k-2) + 2 sum S_k/k - 6 sum S_k/(3k-2)) mod p^2"""
    s, n, p = _d_sums(c), c.n, c.p
    inside = c.H1[n] - 3 * c.T2[n] + 2 * s["H/(3k-2)"] + 2 * s["S/k"] - 6 * s["S/(3k-2)"]
    return _one("d-2", c.d1_inner, c.P(c.frac(p, 3) * inside), 2)


@check("D3c", "LEMMA", 1, mod3=2)
def _d3(c: PrimeContext):
    """sum_{k<=n} H_k/(3k-2) = -(1/3) sum_{k=n}^{2n-1} H_{n+k-1}/k - H_n/2 mod p"""
    s = _d_sums(c)
    rhs = -c.frac(s["H_{n+k-1}/k [n,2n-1]"], 3) - c.frac(c.H1[c.n], 2)
    return _one("d-3", c.P(s["H/(3k-2)"]), c.P(rhs), 1)


@check("D4c", "LEMMA", 1, mod3=2)
def _d4(c: PrimeContext):
    """sum_{k<n} S_k/k = -H_{n-1}^2/3 + (1/3) sum_{k<n} H_{2n+k-1}/k mod p"""
    s, h = _d_sums(c), c.H1[c.n - 1]
    return _one("d-4", c.P(s["S/k"]), c.P(c.frac(s["H_{2n+k-1}/k"] - h * h, 3)), 1)


@check("D5c", "LEMMA", 1, mod3=2)
def _d5(c: PrimeContext):
    """sum_{k<n} S_k/(3k-2) = (1/9) sum_{k<n} H_{n+k-1}/k - H_n H_{n-1}/9 + H_n/3 mod p"""
    s, Hn, Hm = _d_sums(c), c.H1[c.n], c.H1[c.n - 1]
    rhs = c.frac(s["H_{n+k-1}/k [1,n-1]"] - Hn * Hm, 9) + c.frac(Hn, 3)
    return _one("d-5", c.P(s["S/(3k-2)"]), c.P(rhs), 1)


@check("D6c", "LEMMA", 2, mod3=2)
def _d6(c: PrimeContext):
    """inner-weighted sum B = (2p/9)(sum H_{2n+k-1}/k - sum H_{n+k-1}/k + H_nH_{n-1} - 3H_n - H_{n-1}^2 - (9/2)T_n^(2)) mod p^2"""
    s, p, Hn, Hm = _d_sums(c), c.p, c.H1[c.n], c.H1[c.n - 1]
    inside = (s["H_{2n+k-1}/k"] - s["H_{n+k-1}/k [1,2n-1]"] + Hn * Hm - 3 * Hn - Hm * Hm
              - c.frac(9 * c.T2[c.n], 2))
    return _one("d-6", c.d1_inner, c.P(c.frac(2 * p, 9) * inside), 2)


@check("D7c", "LEMMA", 1, mod3=2)
def _d7(c: PrimeContext):
    """sum_{k<n} H_{2n+k-1}/k - sum_{k<2n} H_{n+k-1}/k = -2 H_{n-1}^(2) mod p"""
    s = _d_sums(c)
    lhs = s["H_{2n+k-1}/k"] - s["H_{n+k-1}/k [1,2n-1]"]
    return _one("d-7", c.P(lhs), c.P(-2 * c.H2[c.n - 1]), 1)


@check("D8c", "LEMMA", 2, mod3=2)
def _d8(c: PrimeContext):
    """inner-weighted sum B = (p/3)(-3T_n^(2) - (4/3)H_{n-1}^(2) + (2/3)H_nH_{n-1} - 2H_n - (2/3)H_{n-1}^2) mod p^2"""
    p, Hn, Hm = c.p, c.H1[c.n], c.H1[c.n - 1]
    inside = -3 * c.T2[c.n] + c.frac(-4 * c.H2[c.n - 1] + 2 * Hn * Hm - 2 * Hm * Hm, 3) - 2 * Hn
    return _one("d-8", c.d1_inner, c.P(c.frac(p, 3) * inside), 2)


@check("D9c", "LEMMA", 2, mod3=2)
def _d9(c: PrimeContext):
    """inner-weighted sum B = p(B_{p-2}(1/3)/9 - 2) mod p^2"""
    return _one("d-9", c.d1_inner, (c.B * F(1, 9) - 2) * c.p, 2)


# ---------------------------------------------------------------- groups and entry points

GROUPS = {
    "THEOREMS": [i for i, d in REGISTRY.items() if d.group in ("THEOREM", "CONJECTURE")],
    "LEMMAS": [i for i, d in REGISTRY.items() if d.group == "LEMMA"],
    "GAMMA": [i for i, d in REGISTRY.items() if d.group == "GAMMA"],
}
GROUPS["ALL"] = list(REGISTRY)
THEOREM_IDS = ("THM1", "THM2")


def evaluate(check_id: str, ctx: PrimeContext) -> CheckReport:
    """Run a registered check at the context's prime, enforcing its gating."""
    d = REGISTRY[check_id]
    p = ctx.p
    t0 = time.perf_counter()
    if p < 5:
        raise InapplicablePrime(f"{check_id} needs p >= 5, got {p}")
    if not d.in_class(p):
        raise WrongResidueClass(f"{check_id} needs {d.residue_class()}, got p={p}")
    if p < d.min_prime:
        raise InapplicablePrime(f"{check_id} needs p >= {d.min_prime}, got {p}")
    if d.skip_reason is not None:
        reason = d.skip_reason(ctx)
        if reason:
            return flagged(p, check_id, d.exponent, reason, t0)
    return judge(p, check_id, d.items(ctx), ctx.K, t0)


def check_theorem(check_id: str, p: int, K: int = DEFAULT_K, exponent: Optional[int] = None,
                  bernoulli_route: str = "lehmer") -> CheckReport:
    """THM1 / THM2 at one prime.  The Bernoulli term is known mod p only, so the
    right-hand side is determined mod p^4 and nothing beyond."""
    if check_id not in THEOREM_IDS:
        raise ValueError(f"{check_id} is not a theorem check")
    if exponent is not None and exponent != 4:
        raise ConfigInvalid(f"{check_id}: right-hand side is only determined mod p^4, not p^{exponent}")
    if p < 5:
        raise InapplicablePrime(f"p={p}")
    return evaluate(check_id, PrimeContext(p, K, bernoulli_route))


def check_lemma(check_id: str, p: int, K: int = DEFAULT_K, bernoulli_route: str = "lehmer") -> CheckReport:
    if REGISTRY[check_id].group != "LEMMA":
        raise ValueError(f"{check_id} is not a lemma check")
    if p < 5:
        raise InapplicablePrime(f"p={p}")
    return evaluate(check_id, PrimeContext(p, K, bernoulli_route))


def max_exponent(check_ids: Iterable[str]) -> int:
    return max((REGISTRY[i].exponent for i in check_ids), default=0)


def sharpness(check_id: str, p: int, K: int = DEFAULT_K) -> tuple[int, bool]:
    """(v_p(LHS - p), whether the mod-p^4 correction term is nonzero mod p).

    When the correction is nonzero the congruence with p alone cannot hold
    beyond p^3, so the valuation should be exactly 3.
    """
    ctx = PrimeContext(p, K)
    if check_id == "THM1":
        lhs, corr = ctx.thm1_lhs, ctx.b13
    elif check_id == "THM2":
        lhs, corr = ctx.thm2_lhs, (ctx.b13 * pow(9, -1, p) - 2) % p
    else:
        raise ValueError(f"{check_id} is not a theorem check")
    if not REGISTRY[check_id].applies(p):
        raise WrongResidueClass(f"{check_id} at p={p}")
    d = lhs - p
    v = d.absprec if d.is_zero else int(d.valuation)
    return min(v, K), corr % p != 0
