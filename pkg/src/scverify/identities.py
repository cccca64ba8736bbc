"""Pointwise exact verification of the finite-n summation identities."""
from __future__ import annotations

import time
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Iterable

from .harmonic import harmonic_table
from .hyperseries import truncated_sum
from .report import CheckReport, exact_report

F = Fraction


class IdentityId(str, Enum):
    B7 = "B7"
    B8 = "B8"
    B9 = "B9"
    B10 = "B10"
    C10 = "C10"
    C11 = "C11"
    D1 = "D1"
    D2 = "D2"


def _tables(n: int):
    H = harmonic_table("H", 3 * n)
    S = harmonic_table("S", n)
    T = harmonic_table("T", n)
    return H, S, T


def _b9_rhs(n: int) -> Fraction:
    H, S, T = _tables(n)
    S2 = harmonic_table("S", n, 2)[n]
    c = F(3 * n + 1, 3)
    first = -2 * H[n] + 3 * S2 + 6 * S[n] + 2 * H[n] * S[n] - 3 * S[n] ** 2
    second = (2 * sum(H[k] / (3 * k - 1) for k in range(1, n + 1))
              + 2 * sum(T[k] / k for k in range(1, n + 1))
              - 6 * sum(T[k] / (3 * k - 1) for k in range(1, n + 1)))
    return -c * first + c * second


def _b10_rhs(n: int) -> Fraction:
    H, S, T = _tables(n)
    T2 = harmonic_table("T", n, 2)[n]
    c = F(3 * n - 1, 3)
    first = (-F((3 * n - 1) * (9 * n * n - 8), n * (3 * n - 2) ** 2) + H[n] - 3 * T2 + 3 * T[n] ** 2
             - 2 * H[n] * T[n] + F(3 * (3 * n - 4), 3 * n - 2) * T[n])
    second = (-F(2 * (3 * n - 1), n) * S[n - 1]
              + 2 * sum(H[k] / (3 * k - 2) for k in range(1, n + 1))
              + 2 * sum(S[k] / k for k in range(1, n))
              - 6 * sum(S[k] / (3 * k - 2) for k in range(1, n)))
    return c * first + c * second


def _alternating(m: int, shift: int, upper: int) -> Fraction:
    """sum_{k=1}^{upper} (-1)^k / k * C(m, shift + k)."""
    return sum((F((-1) ** k * comb(m, shift + k), k) for k in range(1, upper + 1)), F(0))


def _lhs(ident: IdentityId, n: int) -> Fraction:
    if ident is IdentityId.B7:
        return truncated_sum("B7_WEIGHTED", n)
    if ident is IdentityId.B8:
        return truncated_sum("B8_WEIGHTED", n)
    if ident is IdentityId.B9:
        return truncated_sum("B9_LHS", n)
    if ident is IdentityId.B10:
        return truncated_sum("B10_LHS", n)
    if ident is IdentityId.C10:
        return _alternating(3 * n, n, 2 * n)
    if ident is IdentityId.C11:
        return _alternating(3 * n, 2 * n, n)
    if ident is IdentityId.D1:
        return _alternating(3 * n - 2, n - 1, 2 * n - 1)
    return _alternating(3 * n - 2, 2 * n - 1, n - 1)


def _rhs(ident: IdentityId, n: int) -> Fraction:
    if ident is IdentityId.B7:
        return F(3 * n + 1)
    if ident is IdentityId.B8:
        return F(3 * n - 1)
    if ident is IdentityId.B9:
        return _b9_rhs(n)
    if ident is IdentityId.B10:
        return _b10_rhs(n)
    H = harmonic_table("H", 3 * n)
    if ident is IdentityId.C10:
        return comb(3 * n, n) * (H[n] - H[3 * n])
    if ident is IdentityId.C11:
        return comb(3 * n, n) * (H[2 * n] - H[3 * n])
    if ident is IdentityId.D1:
        return comb(3 * n - 2, n - 1) * (H[n - 1] - H[3 * n - 2])
    return comb(3 * n - 2, n - 1) * (H[2 * n - 1] - H[3 * n - 2])


def identity_eval(ident, n: int, side: str) -> Fraction:
    """Exact value of one side ("LHS" or "RHS") of an identity at n >= 1."""
    ident = IdentityId(ident)
    if n < 1:
        raise ValueError(f"identities hold for n >= 1, got n={n}")
    side = side.upper()
    if side == "LHS":
        return _lhs(ident, n)
    if side == "RHS":
        return _rhs(ident, n)
    raise ValueError(f"side must be LHS or RHS, got {side!r}")


def identity_verify(ident, ns: Iterable[int], K: int = 8) -> CheckReport:
    """Exact equality for every n; the report carries the first counterexample,
    or the values at the last n checked."""
    ident = IdentityId(ident)
    t0 = time.perf_counter()
    lhs = rhs = F(0)
    last = None
    for n in ns:
        lhs, rhs = identity_eval(ident, n, "LHS"), identity_eval(ident, n, "RHS")
        last = n
        if lhs != rhs:
            return exact_report(f"ID_{ident.value}", lhs, rhs, False, K, t0, f"n={n}")
    detail = "empty range" if last is None else f"n={last}"
    return exact_report(f"ID_{ident.value}", lhs, rhs, True, K, t0, detail)
