"""Morita's p-adic Gamma function at rational arguments, modulo p^N.

For a positive integer m, Gamma_p(m) = (-1)^m * prod_{0<k<m, p∤k} k.  A rational
x = a/b with p∤b is replaced by the least positive m = x (mod p^N); continuity
of Gamma_p (|Gamma_p(x) - Gamma_p(y)| <= |x - y|) makes the result exact mod p^N.
"""
from __future__ import annotations

import time

import numpy as np

from .errors import BudgetExceeded, DenominatorNotUnit
from .padic import PadicNum
from .report import CheckReport, Item, judge

DEFAULT_BUDGET = 10**8
_CHUNK = 1 << 20
# products of two residues must fit in int64
_INT64_SAFE = 3_037_000_499


def representative(a: int, b: int, p: int, N: int) -> int:
    if b % p == 0:
        raise DenominatorNotUnit(f"{a}/{b}: denominator divisible by {p}")
    M = p**N
    m = a * pow(b, -1, M) % M
    return m if m else M


def _prod_mod_python(lo: int, hi: int, p: int, M: int) -> int:
    acc = 1
    for k in range(lo, hi):
        if k % p:
            acc = acc * k % M
    return acc


def _prod_mod_numpy(lo: int, hi: int, p: int, M: int) -> int:
    """Product of k in [lo, hi) with p∤k, modulo M, by pairwise int64 reduction."""
    acc = 1
    for start in range(lo, hi, _CHUNK):
        v = np.arange(start, min(start + _CHUNK, hi), dtype=np.int64)
        v = v[v % p != 0] % M
        while v.size > 1:
            if v.size & 1:
                v = np.append(v, np.int64(1))
            v = v[0::2] * v[1::2] % M
        if v.size:
            acc = acc * int(v[0]) % M
    return acc


def gamma_p_integer(m: int, p: int, N: int) -> int:
    """Gamma_p(m) mod p^N for an integer m >= 1."""
    M = p**N
    prod = _prod_mod_numpy if M <= _INT64_SAFE and m > 4096 else _prod_mod_python
    r = prod(1, m, p, M)
    return (-r if m % 2 else r) % M


def gamma_p(a: int, b: int, p: int, N: int, budget: int = DEFAULT_BUDGET) -> int:
    """Gamma_p(a/b) mod p^N."""
    if N < 1:
        raise ValueError(f"precision must be >= 1, got {N}")
    m = representative(a, b, p, N)
    if m > budget:
        raise BudgetExceeded(f"Gamma_{p}({a}/{b}) mod {p}^{N} needs a product of length {m} > {budget}")
    return gamma_p_integer(m, p, N)


def gamma_cost(a: int, b: int, p: int, N: int) -> int:
    """Product length gamma_p would need."""
    return representative(a, b, p, N)


def gamma_padic(a: int, b: int, p: int, N: int, budget: int = DEFAULT_BUDGET) -> PadicNum:
    return PadicNum.from_residue(gamma_p(a, b, p, N, budget), p, N)


def gamma_reflection_check(a: int, b: int, p: int, N: int, budget: int = DEFAULT_BUDGET) -> CheckReport:
    """Gamma_p(x) Gamma_p(1-x) = (-1)^{x0} mod p^N, x0 in 1..p with x0 = x (mod p)."""
    if b % p == 0:
        raise DenominatorNotUnit(f"{a}/{b}: denominator divisible by {p}")
    if a % b == 0:
        raise ValueError(f"reflection check needs a non-integer argument, got {a}/{b}")
    t0 = time.perf_counter()
    g1 = gamma_padic(a, b, p, N, budget)
    g2 = gamma_padic(b - a, b, p, N, budget)
    x0 = a * pow(b, -1, p) % p or p
    sign = PadicNum.from_residue((-1) ** x0, p, N)
    return judge(p, f"GAMMA_REFLECTION({a}/{b})", [Item(f"x0={x0}", g1 * g2, sign, N)], N, t0)
