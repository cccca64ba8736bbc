"""Check verdicts and how they are judged from evaluated sides."""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .padic import PadicNum

FIELDS = ("prime", "check", "exponent", "lhs", "rhs", "diff_valuation", "pass", "elapsed_us")


@dataclass(frozen=True)
class CheckReport:
    prime: int
    check: str
    exponent: int
    lhs: str
    rhs: str
    diff_valuation: int
    passed: bool
    elapsed_us: int
    detail: str = ""
    flagged: bool = False

    def record(self) -> dict:
        """The serialized form; key set is fixed by the report format."""
        return {
            "prime": self.prime,
            "check": self.check,
            "exponent": self.exponent,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "diff_valuation": self.diff_valuation,
            "pass": self.passed,
            "elapsed_us": self.elapsed_us,
        }


class Item(NamedTuple):
    """One congruence instance: lhs = rhs (mod p**exponent)."""

    label: str
    lhs: PadicNum
    rhs: PadicNum
    exponent: int


def diff_valuation(lhs: PadicNum, rhs: PadicNum, cap: int) -> int:
    d = lhs - rhs
    if d.is_zero:
        return min(d.absprec, cap)
    return min(int(d.valuation), cap)


def judge(prime: int, check: str, items: Iterable[Item], K: int, started: float) -> CheckReport:
    """Report the first failing item, else the item with the least margin."""
    chosen = None
    for item in items:
        dv = diff_valuation(item.lhs, item.rhs, K)
        margin = dv - item.exponent
        if chosen is None or margin < chosen[1]:
            chosen = (item, margin, dv)
        if margin < 0:
            break
    if chosen is None:
        raise ValueError(f"{check}: no congruence instances to judge at p={prime}")
    item, margin, dv = chosen
    e = item.exponent
    return CheckReport(
        prime=prime,
        check=check,
        exponent=e,
        lhs=str(item.lhs.residue(e)),
        rhs=str(item.rhs.residue(e)),
        diff_valuation=dv,
        passed=margin >= 0,
        elapsed_us=elapsed_us(started),
        detail=item.label,
    )


def flagged(prime: int, check: str, exponent: int, reason: str, started: float) -> CheckReport:
    """A check that was deliberately not evaluated; neither pass nor fail."""
    return CheckReport(prime, check, exponent, "", "", 0, True, elapsed_us(started), reason, True)


def exact_report(check: str, lhs: Fraction, rhs: Fraction, passed: bool, K: int, started: float, detail: str = "") -> CheckReport:
    """Verdict for an exact identity; there is no prime, so the prime field is 0."""
    return CheckReport(
        prime=0,
        check=check,
        exponent=0,
        lhs=str(lhs),
        rhs=str(rhs),
        diff_valuation=K if passed else 0,
        passed=passed,
        elapsed_us=elapsed_us(started),
        detail=detail,
    )


def elapsed_us(started: float) -> int:
    return int((time.perf_counter() - started) * 1e6)
