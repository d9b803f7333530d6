"""Classical ground truth: trial-division factorization and the sieve of Eratosthenes.

Nothing here touches trigonometry or the intensity kernel; these are the
reference values every interference-based result is compared against.
"""

from __future__ import annotations

import bisect
import math
import numbers
from dataclasses import dataclass, field
from typing import Iterator


def _check_positive(n, name: str = "n") -> int:
    if isinstance(n, bool) or not isinstance(n, numbers.Integral):
        raise TypeError(f"{name} must be an integer, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"{name} must be >= 1, got {n}")
    return int(n)


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Factorization:
    """``n`` together with its (prime, exponent) pairs in increasing prime order."""

    n: int
    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        primes = [q for q, _ in self.factors]
        if any(a >= b for a, b in zip(primes, primes[1:])):
            raise ValueError("primes must be strictly increasing")
        if any(e < 1 for _, e in self.factors):
            raise ValueError("exponents must be positive")
        if math.prod(q**e for q, e in self.factors) != self.n:
            raise ValueError(f"factors do not multiply to {self.n}")

    @property
    def omega(self) -> int:
        return len(self.factors)

    @property
    def big_omega(self) -> int:
        return sum(e for _, e in self.factors)

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def __str__(self) -> str:
        if not self.factors:
            return f"{self.n} = 1"
        return f"{self.n} = " + " * ".join(f"{q}^{e}" for q, e in self.factors)

    def csv_rows(self) -> list[str]:
        """Rows of ``n,prime,exponent``; none for ``n == 1``."""
        return [f"{self.n},{q},{e}" for q, e in self.factors]

    def summary_row(self) -> str:
        """Row of ``n,omega,big_omega``."""
        return f"{self.n},{self.omega},{self.big_omega}"


def factorize(n: int) -> Factorization:
    """Factor ``n >= 1`` by trial division up to ``sqrt(n)``.

    >>> factorize(12).factors
    ((2, 2), (3, 1))
    """
    n = _check_positive(n)
    factors = []
    rest = n
    d = 2
    while d * d <= rest:
        if rest % d == 0:
            e = 0
            while rest % d == 0:
                rest //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if rest > 1:
        factors.append((rest, 1))
    return Factorization(n, tuple(factors))


def omega_oracle(n: int) -> int:
    """Number of distinct prime factors of ``n``."""
    return factorize(n).omega


def big_omega_oracle(n: int) -> int:
    """Number of prime factors of ``n`` counted with multiplicity."""
    return factorize(n).big_omega


@dataclass(frozen=True)
class PrimeTable:
    bound: int
    primes: tuple[int, ...] = field(repr=False)

    def __contains__(self, n: int) -> bool:
        i = bisect.bisect_left(self.primes, n)
        return i < len(self.primes) and self.primes[i] == n

    def __len__(self) -> int:
        return len(self.primes)

    def __iter__(self) -> Iterator[int]:
        return iter(self.primes)


def eratosthenes(bound: int) -> PrimeTable:
    """All primes ``<= bound`` by marking multiples of each prime up to ``sqrt(bound)``."""
    bound = _check_positive(bound, "bound")
    if bound < 2:
        raise ValueError(f"bound must be >= 2, got {bound}")
    marks = bytearray([1]) * (bound + 1)
    marks[0] = marks[1] = 0
    for p in range(2, math.isqrt(bound) + 1):
        if marks[p]:
            marks[p * p :: p] = bytes(len(range(p * p, bound + 1, p)))
    return PrimeTable(bound, tuple(i for i, m in enumerate(marks) if m))
