"""Truncated p-adic arithmetic and the modular helpers everything else leans on.

A nonzero :class:`PadicNum` is ``unit * p**valuation`` where the unit is known
modulo ``p**precision`` (relative precision).  The zero element stores the
absolute precision it is known to in ``precision``: it means "divisible by
``p**precision``".  Operations propagate precision pessimistically.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DenominatorNotUnit, DivisionByZero, NotInvertible, PrecisionError, PrimeMismatch

INF = math.inf

Rat = Fraction
Rational = Union[int, Fraction]


def mod_inverse(a: int, m: int) -> int:
    """Return x in [1, m) with a*x = 1 (mod m)."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    try:
        return pow(a, -1, m)
    except ValueError:
        raise NotInvertible(f"{a} is not invertible modulo {m}") from None


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_between(lo: int, hi: int) -> list[int]:
    """Primes p with lo <= p <= hi (Eratosthenes)."""
    if hi < 2 or hi < lo:
        return []
    sieve = bytearray([1]) * (hi + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(hi) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, hi + 1, i)))
    return [i for i in range(max(lo, 2), hi + 1) if sieve[i]]


def int_valuation(n: int, p: int) -> int | float:
    """Exponent of p in the integer n; INF for n == 0."""
    if n == 0:
        return INF
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def valuation(x: Rational, p: int) -> int | float:
    """p-adic valuation of an exact rational."""
    x = Fraction(x)
    if x == 0:
        return INF
    return int_valuation(x.numerator, p) - int_valuation(x.denominator, p)


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion, for an odd prime p."""
    r = pow(a % p, (p - 1) // 2, p)
    if r == 0:
        return 0
    return 1 if r == 1 else -1


@dataclass(frozen=True, eq=False)
class PadicNum:
    prime: int
    precision: int
    valuation: int | float
    unit: int = 0

    def __post_init__(self):
        p = self.prime
        if p < 3 or p % 2 == 0:
            raise ValueError(f"PadicNum needs an odd prime, got {p}")
        if self.valuation == INF:
            if self.unit != 0:
                raise ValueError("zero element carries no unit")
            return
        if self.precision < 1:
            raise ValueError(f"relative precision must be >= 1, got {self.precision}")
        if self.unit % p == 0 or not 0 < self.unit < p**self.precision:
            raise ValueError(f"unit {self.unit} is not a reduced p-adic unit")

    # construction

    @classmethod
    def zero(cls, p: int, absprec: int) -> PadicNum:
        return cls(p, absprec, INF, 0)

    @classmethod
    def from_residue(cls, r: int, p: int, absprec: int) -> PadicNum:
        """The integer r, known only modulo p**absprec."""
        r %= p**absprec
        if r == 0:
            return cls.zero(p, absprec)
        v = int_valuation(r, p)
        return cls(p, absprec - v, v, r // p**v)

    @classmethod
    def one(cls, p: int, K: int) -> PadicNum:
        return cls(p, K, 0, 1)

    # accessors

    @property
    def is_zero(self) -> bool:
        return self.valuation == INF

    @property
    def absprec(self) -> int:
        """Exponent e such that the value is known modulo p**e."""
        if self.is_zero:
            return self.precision
        return self.valuation + self.precision

    def residue(self, e: int) -> int:
        """Canonical representative in [0, p**e) of this p-adic integer."""
        if self.absprec < e:
            raise PrecisionError(f"value known mod p^{self.absprec}, asked for p^{e}")
        if self.is_zero:
            return 0
        if self.valuation < 0:
            raise PrecisionError("value is not a p-adic integer")
        return self.unit * self.prime**self.valuation % self.prime**e

    def truncate(self, absprec: int) -> PadicNum:
        """Forget digits beyond p**absprec."""
        if absprec >= self.absprec:
            return self
        if self.is_zero or self.valuation >= absprec:
            return PadicNum.zero(self.prime, absprec)
        k = absprec - self.valuation
        return PadicNum(self.prime, k, self.valuation, self.unit % self.prime**k)

    # arithmetic

    def _same_prime(self, other: PadicNum) -> None:
        if self.prime != other.prime:
            raise PrimeMismatch(f"primes {self.prime} and {other.prime}")

    def _coerce(self, other) -> PadicNum:
        if isinstance(other, PadicNum):
            self._same_prime(other)
            return other
        if isinstance(other, (int, Fraction)):
            # exact constants: embed with enough digits never to limit the result
            other = Fraction(other)
            if other == 0:
                return PadicNum.zero(self.prime, max(self.absprec, 1))
            v = valuation(other, self.prime)
            k = max(self.precision if not self.is_zero else 1, self.absprec - v, 1)
            return padic_of_rational(other.numerator, other.denominator, self.prime, k)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return padic_add(self, other)

    __radd__ = __add__

    def __neg__(self) -> PadicNum:
        if self.is_zero:
            return self
        return PadicNum(self.prime, self.precision, self.valuation, -self.unit % self.prime**self.precision)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return padic_add(self, -other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return padic_add(other, -self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return padic_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return padic_mul(self, padic_inv(other))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return padic_mul(other, padic_inv(self))

    def __pow__(self, n: int) -> PadicNum:
        if n < 0:
            return padic_inv(self) ** -n
        result = PadicNum.one(self.prime, max(self.precision, 1))
        base = self
        while n:
            if n & 1:
                result = padic_mul(result, base)
            n >>= 1
            if n:
                base = padic_mul(base, base)
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, PadicNum):
            if isinstance(other, (int, Fraction)):
                other = self._coerce(other)
            else:
                return NotImplemented
        if self.prime != other.prime:
            return False
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        if self.valuation != other.valuation:
            return False
        k = min(self.precision, other.precision)
        return (self.unit - other.unit) % self.prime**k == 0

    __hash__ = None  # equality is precision-dependent

    def __repr__(self) -> str:
        if self.is_zero:
            return f"PadicNum(0 + O({self.prime}^{self.precision}))"
        return f"PadicNum({self.unit}*{self.prime}^{self.valuation} + O({self.prime}^{self.absprec}))"


def padic_of_rational(num: int, den: int, p: int, K: int) -> PadicNum:
    """Embed num/den with relative precision K (absolute precision K for zero)."""
    if den == 0:
        raise DivisionByZero("zero denominator")
    if num == 0:
        return PadicNum.zero(p, K)
    vn = int_valuation(num, p)
    vd = int_valuation(den, p)
    mod = p**K
    u = (num // p**vn) * mod_inverse(den // p**vd, mod) % mod
    return PadicNum(p, K, vn - vd, u)


def padic(x: Rational, p: int, K: int) -> PadicNum:
    x = Fraction(x)
    return padic_of_rational(x.numerator, x.denominator, p, K)


def padic_add(x: PadicNum, y: PadicNum) -> PadicNum:
    x._same_prime(y)
    p = x.prime
    N = min(x.absprec, y.absprec)
    if x.is_zero:
        return y.truncate(N)
    if y.is_zero:
        return x.truncate(N)
    v0 = min(x.valuation, y.valuation)
    room = N - v0
    if room <= 0:
        return PadicNum.zero(p, N)
    mod = p**room
    a = (x.unit * p ** (x.valuation - v0) + y.unit * p ** (y.valuation - v0)) % mod
    if a == 0:
        return PadicNum.zero(p, N)
    w = int_valuation(a, p)
    return PadicNum(p, room - w, v0 + w, a // p**w)


def padic_mul(x: PadicNum, y: PadicNum) -> PadicNum:
    x._same_prime(y)
    p = x.prime
    if x.is_zero and y.is_zero:
        return PadicNum.zero(p, x.precision + y.precision)
    if x.is_zero:
        return PadicNum.zero(p, x.precision + y.valuation)
    if y.is_zero:
        return PadicNum.zero(p, y.precision + x.valuation)
    k = min(x.precision, y.precision)
    return PadicNum(p, k, x.valuation + y.valuation, x.unit * y.unit % p**k)


def padic_inv(x: PadicNum) -> PadicNum:
    if x.is_zero:
        raise DivisionByZero("inverse of the zero element")
    mod = x.prime**x.precision
    return PadicNum(x.prime, x.precision, -x.valuation, mod_inverse(x.unit, mod))


class ResidueRing:
    """Integers modulo p**K, for sums whose terms are all p-adic integers."""

    def __init__(self, p: int, K: int):
        self.p = p
        self.K = K
        self.modulus = p**K

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise DenominatorNotUnit(f"{a} is divisible by {self.p}")
        return pow(a, -1, self.modulus)

    def frac(self, a: int, b: int) -> int:
        return a * self.inv(b) % self.modulus

    def of(self, x: Rational) -> int:
        x = Fraction(x)
        return self.frac(x.numerator, x.denominator)

    def padic(self, r: int) -> PadicNum:
        return PadicNum.from_residue(r, self.p, self.K)
