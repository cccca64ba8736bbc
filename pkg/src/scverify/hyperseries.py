"""Truncated hypergeometric-type sums, described declaratively and evaluated
either exactly (Fractions) or in the truncated p-adic ring.

A :class:`SumSpec` summand is

    (a*k + b) * prod(numerator Pochhammers) / prod(denominator Pochhammers) * inner(k)

where each Pochhammer is ``(base)_{step*k}`` raised to an integer power and the
base may depend on the free parameter (the prime, or an integer n).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Union

from .errors import DenominatorNotUnit, InapplicablePrime, WrongResidueClass
from .padic import PadicNum, ResidueRing, padic

DEFAULT_K = 8

Base = Union[Fraction, Callable[[int], Fraction]]


@dataclass(frozen=True)
class Factor:
    base: Base
    power: int = 1
    step: int = 1  # 1 for (x)_k, 2 for (x)_{2k}
    denominator: bool = False

    def base_at(self, param: int) -> Fraction:
        return Fraction(self.base(param)) if callable(self.base) else Fraction(self.base)


@dataclass(frozen=True)
class SumSpec:
    id: str
    weight: tuple[int, int]  # (a, b) -> a*k + b
    factors: tuple[Factor, ...]
    upper: Callable[[int], int]
    inner: Optional[str] = None  # "A" or "B", see inner_weight_sum
    param: str = "prime"  # "prime" or "n"
    mod3: Optional[int] = None  # required p mod 3 for prime-parametrised specs
    description: str = field(default="", compare=False)


def _num(base, power=1, step=1):
    return Factor(base, power, step, False)


def _den(base, power=1, step=1):
    return Factor(base, power, step, True)


F = Fraction

SPECS: dict[str, SumSpec] = {}


def register(spec: SumSpec) -> SumSpec:
    SPECS[spec.id] = spec
    return spec


_THM1_FACTORS = (_num(F(1, 3), 4), _num(F(1), 1, 2), _den(F(1), 4), _den(F(2, 3), 1, 2))
_THM2_FACTORS = (_num(F(-1, 3), 4), _num(F(1), 1, 2), _den(F(1), 4), _den(F(-2, 3), 1, 2))
_B7_FACTORS = (
    _num(F(1, 3), 2), _num(F(1), 1, 2), _num(lambda n: F(-n)), _num(lambda n: n + F(2, 3)),
    _den(F(1), 2), _den(F(2, 3), 1, 2), _den(lambda n: n + F(4, 3)), _den(lambda n: -n + F(2, 3)),
)
_B8_FACTORS = (
    _num(F(-1, 3), 2), _num(F(1), 1, 2), _num(lambda n: F(-n)), _num(lambda n: n - F(2, 3)),
    _den(F(1), 2), _den(F(-2, 3), 1, 2), _den(lambda n: -n + F(4, 3)), _den(lambda n: n + F(2, 3)),
)

THM1_LHS = register(SumSpec("THM1_LHS", (6, 1), _THM1_FACTORS, lambda p: (p - 1) // 3, mod3=1,
                            description="sum_{k<=(p-1)/3} (6k+1)(1/3)_k^4(1)_2k/((1)_k^4(2/3)_2k)"))
THM2_LHS = register(SumSpec("THM2_LHS", (6, -1), _THM2_FACTORS, lambda p: (p + 1) // 3, mod3=2,
                            description="sum_{k<=(p+1)/3} (6k-1)(-1/3)_k^4(1)_2k/((1)_k^4(-2/3)_2k)"))
VANHAMME_D2_LHS = register(SumSpec("VANHAMME_D2_LHS", (6, 1), (_num(F(1, 3), 6), _den(F(1), 6)), lambda p: p - 1,
                                   description="sum_{k<=p-1} (6k+1)(1/3)_k^6/(1)_k^6"))
C3_INNER_WEIGHTED = register(SumSpec("C3_INNER_WEIGHTED", (6, 1), _THM1_FACTORS, lambda p: (p - 1) // 3,
                                     inner="A", mod3=1))
D1_INNER_WEIGHTED = register(SumSpec("D1_INNER_WEIGHTED", (6, -1), _THM2_FACTORS, lambda p: (p + 1) // 3,
                                     inner="B", mod3=2))
B7_WEIGHTED = register(SumSpec("B7_WEIGHTED", (6, 1), _B7_FACTORS, lambda n: n, param="n"))
B8_WEIGHTED = register(SumSpec("B8_WEIGHTED", (6, -1), _B8_FACTORS, lambda n: n, param="n"))
B9_LHS = register(SumSpec("B9_LHS", (6, 1), _B7_FACTORS, lambda n: n, inner="A", param="n"))
B10_LHS = register(SumSpec("B10_LHS", (6, -1), _B8_FACTORS, lambda n: n, inner="B", param="n"))


def pochhammer_exact(base, k: int) -> Fraction:
    base = Fraction(base)
    out = Fraction(1)
    for i in range(k):
        out *= base + i
    return out


def pochhammer_padic(base, k: int, p: int, K: int = DEFAULT_K) -> PadicNum:
    """(base)_k in the ring of p-adic numbers at relative precision K."""
    base = Fraction(base)
    if base.denominator % p == 0:
        raise DenominatorNotUnit(f"base {base} has denominator divisible by {p}")
    out = PadicNum.one(p, K)
    for i in range(k):
        out = out * padic(base + i, p, K)
    return out


def _inner_summand(j: int, variant: str) -> tuple[int, int]:
    """The two squared denominators of the variant's j-th summand."""
    if variant == "A":
        return 3 * j, 3 * j - 2
    if variant == "B":
        return 3 * j, 3 * j - 4
    raise ValueError(f"unknown inner weight variant {variant!r}")


def inner_weight_table(k_max: int, variant: str, p: Optional[int] = None, K: int = DEFAULT_K) -> list:
    """Prefix sums of 1/(3j)^2 - 1/(3j-2)^2 (A) or 1/(3j)^2 - 1/(3j-4)^2 (B)."""
    if p is None:
        out = [Fraction(0)]
        for j in range(1, k_max + 1):
            a, b = _inner_summand(j, variant)
            out.append(out[-1] + Fraction(1, a * a) - Fraction(1, b * b))
        return out
    ring = ResidueRing(p, K)
    return [ring.padic(r) for r in inner_weight_residues(k_max, variant, ring)]


def inner_weight_residues(k_max: int, variant: str, ring: ResidueRing) -> list[int]:
    out = [0]
    for j in range(1, k_max + 1):
        a, b = _inner_summand(j, variant)
        out.append((out[-1] + ring.inv(a * a) - ring.inv(b * b)) % ring.modulus)
    return out


def inner_weight_sum(k: int, variant: str, p: Optional[int] = None, K: int = DEFAULT_K):
    return inner_weight_table(k, variant, p, K)[k]


def check_admissible(spec: SumSpec, p: int) -> None:
    if p < 5:
        raise InapplicablePrime(f"p={p}: sums need p >= 5 (1/3 and 1/9 must be units)")
    if spec.mod3 is not None and p % 3 != spec.mod3:
        raise WrongResidueClass(f"{spec.id} needs p = {spec.mod3} (mod 3), got p={p}")


def truncated_sum(spec: SumSpec | str, param: int, p: Optional[int] = None, K: int = DEFAULT_K,
                  upper: Optional[int] = None):
    """Evaluate a registered sum.

    ``param`` is the prime for prime-parametrised specs and n otherwise.  With
    ``p`` None (and an n-spec) the result is an exact Fraction; prime specs are
    always evaluated p-adically unless ``p=0`` requests the exact value.
    """
    if isinstance(spec, str):
        spec = SPECS[spec]
    if spec.param == "prime":
        check_admissible(spec, param)
        if p is None:
            p = param
        elif p not in (0, param):
            raise ValueError(f"{spec.id}: ring prime {p} differs from parameter {param}")
    exact = not p
    top = spec.upper(param) if upper is None else upper
    bases = [(f, f.base_at(param)) for f in spec.factors]
    a, b = spec.weight

    if exact:
        inner = inner_weight_table(top, spec.inner) if spec.inner else None
        ratio = Fraction(1)
        total = Fraction(0)
        for k in range(top + 1):
            term = (a * k + b) * ratio
            if inner is not None:
                term *= inner[k]
            total += term
            if k == top:
                break
            for f, x in bases:
                for i in range(f.step * k, f.step * (k + 1)):
                    y = (x + i) ** f.power
                    ratio = ratio / y if f.denominator else ratio * y
        return total

    if p < 5:
        raise InapplicablePrime(f"p={p}")
    inner = inner_weight_table(top, spec.inner, p, K) if spec.inner else None
    ratio = PadicNum.one(p, K)
    total = None
    for k in range(top + 1):
        term = padic(a * k + b, p, K) * ratio
        if inner is not None:
            term = term * inner[k]
        total = term if total is None else total + term
        if k == top:
            break
        for f, x in bases:
            for i in range(f.step * k, f.step * (k + 1)):
                y = x + i
                if f.denominator:
                    if y.numerator % p == 0:
                        raise DenominatorNotUnit(
                            f"{spec.id}: k={k + 1} denominator factor {y} divisible by {p}")
                    ratio = ratio / padic(y, p, K) ** f.power
                else:
                    ratio = ratio * padic(y, p, K) ** f.power
    return total
