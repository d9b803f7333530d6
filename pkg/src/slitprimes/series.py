"""Sums of slit intensities that count prime factors.

``omega_m`` adds the intensities of the first m prime sets. At integers it is
the number of seed primes dividing n; letting the seed grow to every prime
gives omega(n). Stacking sets of size p, p^2, p^3, ... gives the exponent of p,
and summing those over the dividing primes gives Omega(n).
"""

from __future__ import annotations

import functools
import math
import numbers
import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .config import DEFAULT_CONFIG, EvalConfig
from .intensity import format_float, intensity_array, intensity_exact, intensity_float
from .oracle import eratosthenes, is_prime


def _check_index(n, minimum: int) -> int:
    if isinstance(n, float):
        raise TypeError(f"n must be an integer, got {n!r}")
    n = operator.index(n)
    if n < minimum:
        raise ValueError(f"n must be >= {minimum}, got {n}")
    return int(n)


def check_prime_prefix(primes: Sequence[int]) -> tuple[int, ...]:
    """Validate that ``primes`` is exactly 2, 3, 5, ... up to its last element."""
    primes = tuple(int(p) for p in primes)
    if not primes:
        raise ValueError("prime list must be nonempty")
    if primes[-1] < 2 or primes != eratosthenes(primes[-1]).primes:
        raise ValueError(f"{list(primes)} is not a gap-free prefix of the primes")
    return primes


@dataclass(frozen=True)
class OmegaPartialSum:
    """The incoherent sum over the first m prime sets ``{2, 3, ..., p_m}``."""

    primes: tuple[int, ...]
    cfg: EvalConfig = DEFAULT_CONFIG

    def __post_init__(self) -> None:
        object.__setattr__(self, "primes", check_prime_prefix(self.primes))
        self.cfg.check_primes(self.primes[-1])

    @classmethod
    def first(cls, m: int, cfg: EvalConfig = DEFAULT_CONFIG) -> "OmegaPartialSum":
        m = _check_index(m, 1)
        bound = 4
        while True:
            table = eratosthenes(bound).primes
            if len(table) >= m:
                return cls(table[:m], cfg)
            bound *= 2

    @property
    def m(self) -> int:
        return len(self.primes)

    @property
    def frontier(self) -> int:
        return self.primes[-1]


def omega_m_float(partial: OmegaPartialSum, x: float) -> float:
    """Sum of :func:`intensity_float` over the seed primes at real ``x``."""
    return math.fsum(intensity_float(p, x, partial.cfg) for p in partial.primes)


def omega_m_array(partial: OmegaPartialSum, x) -> np.ndarray:
    """Vectorized :func:`omega_m_float`."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    total = np.zeros_like(x)
    for p in partial.primes:
        total += intensity_array(p, x, partial.cfg)
    return total


def omega_m_exact(primes: Sequence[int], n: int) -> int:
    """Count of ``primes`` dividing ``n``; ``n == 0`` gives ``len(primes)``."""
    n = _check_index(n, 0)
    return sum(intensity_exact(p, n) for p in primes)


def omega_m_exact_range(primes: Sequence[int], lo: int, hi: int) -> np.ndarray:
    """:func:`omega_m_exact` for every integer in ``[lo, hi]``.

    Each term is 1 on an arithmetic progression of step p that passes through 0,
    so it is laid down with a single strided add per prime.
    """
    lo, hi = int(lo), int(hi)
    if lo < 0:
        raise ValueError(f"lo must be >= 0, got {lo}")
    if hi < lo:
        return np.zeros(0, dtype=np.int64)
    counts = np.zeros(hi - lo + 1, dtype=np.int64)
    for p in primes:
        counts[(-lo) % p :: p] += 1
    return counts


@functools.lru_cache(maxsize=32)
def _primes_upto_pow2(bits: int) -> tuple[int, ...]:
    return eratosthenes(1 << bits).primes


def primes_upto(limit: int) -> tuple[int, ...]:
    """Primes ``<= limit`` from a cached table sized to the next power of two."""
    if limit < 2:
        return ()
    table = _primes_upto_pow2(max(limit, 2).bit_length())
    return table[: np.searchsorted(table, limit, side="right")]


def _exponent_terms(p: int, n: int) -> int:
    # Sets of size p, p^2, ..., p^J with p^J <= n; larger sets never divide n.
    total = 0
    q = p
    while q <= n:
        total += intensity_exact(q, n)
        q *= p
    return total


def _dividing_primes(n: int) -> list[int]:
    """Primes whose term in the omega series is nonzero at ``n``.

    Terms with p <= sqrt(n) are evaluated directly. Of the terms with
    p > sqrt(n) at most one can be nonzero (two such primes would multiply past
    n); it belongs to whatever is left of n after removing the small primes'
    full powers.
    """
    found = [p for p in primes_upto(math.isqrt(n)) if intensity_exact(p, n)]
    rest = n
    for p in found:
        rest //= p ** _exponent_terms(p, n)
    if rest > 1:
        found.append(rest)
    return found


def omega_series(n: int) -> int:
    """Number of distinct prime factors of ``n >= 1`` as a sum of slit intensities.

    The infinite sum over primes is exact once truncated at p <= n, since no
    larger prime divides n.
    """
    n = _check_index(n, 1)
    small = primes_upto(math.isqrt(n))
    total = sum(intensity_exact(p, n) for p in small)
    rest = n
    for p in small:
        if intensity_exact(p, n):
            rest //= p ** _exponent_terms(p, n)
    return total + (1 if rest > 1 else 0)


def alpha_series(p: int, n: int) -> int:
    """Exponent of prime ``p`` in ``n`` as the sum of intensities of sets p, p^2, p^3, ...

    Raises:
        ValueError: ``p`` is not prime or ``n < 1``.
    """
    p = operator.index(p)
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    n = _check_index(n, 1)
    return _exponent_terms(p, n)


def big_omega_series(n: int) -> int:
    """Prime factors of ``n`` with multiplicity: the exponent series summed over dividing primes."""
    n = _check_index(n, 1)
    return sum(_exponent_terms(p, n) for p in _dividing_primes(n))


def factor_series(n: int) -> tuple[tuple[int, int], ...]:
    """(prime, exponent) pairs of ``n`` reconstructed from the series alone."""
    n = _check_index(n, 1)
    return tuple((p, _exponent_terms(p, n)) for p in _dividing_primes(n))


def omega_series_table(n_max: int) -> np.ndarray:
    """omega(n) for n = 0..n_max, summing every prime-set term with p <= n_max.

    Entry 0 is left at 0 (the series diverges there).
    """
    n_max = _check_index(n_max, 1)
    counts = np.zeros(n_max + 1, dtype=np.int64)
    for p in primes_upto(n_max):
        counts[p::p] += 1
    return counts


# Bernoulli numbers B_2, B_4, ..., B_14 for the Euler-Maclaurin tail.
_BERNOULLI = (
    Fraction(1, 6),
    Fraction(-1, 30),
    Fraction(1, 42),
    Fraction(-1, 30),
    Fraction(5, 66),
    Fraction(-691, 2730),
    Fraction(7, 6),
)


def zeta(s: float, cutoff: int = 32) -> float:
    """Riemann zeta for real ``s > 1``: direct sum below ``cutoff`` plus Euler-Maclaurin tail."""
    if not (math.isfinite(s) and s > 1):
        raise ValueError(f"zeta requires finite s > 1, got {s}")
    m = float(cutoff)
    terms = [n**-s for n in range(1, cutoff)]
    terms.append(m ** (1 - s) / (s - 1))
    terms.append(0.5 * m**-s)
    rising = s  # s (s+1) ... (s+2k-2)
    for k, b in enumerate(_BERNOULLI, start=1):
        terms.append(float(b) / math.factorial(2 * k) * rising * m ** (-s - 2 * k + 1))
        rising *= (s + 2 * k - 1) * (s + 2 * k)
    return math.fsum(terms)


ZETA_CSV_HEADER = "s,n_terms,partial_sum,target,gap"


@dataclass(frozen=True)
class ZetaCheckReport:
    s: float
    n_terms: int
    partial_sum: float
    target: float
    gap: float

    def csv_row(self) -> str:
        return ",".join(
            [
                format_float(self.s),
                str(self.n_terms),
                format_float(self.partial_sum),
                format_float(self.target),
                format_float(self.gap),
            ]
        )


def _check_zeta_args(s, n_terms) -> tuple[float, int]:
    if isinstance(s, bool) or not isinstance(s, numbers.Real):
        raise TypeError(f"s must be real, got {type(s).__name__}")
    if not (math.isfinite(s) and s > 1):
        raise ValueError(f"s must be > 1 (the series diverges otherwise), got {s}")
    return float(s), _check_index(n_terms, 1)


def zeta_convergence(s: float, checkpoints: Sequence[int]) -> list[ZetaCheckReport]:
    """Reports for the sum of ``2**omega(n) / n**s`` truncated at each checkpoint.

    Partial sums are correctly rounded (``math.fsum``), hence non-decreasing in
    the number of terms.
    """
    if not checkpoints:
        raise ValueError("need at least one checkpoint")
    s = _check_zeta_args(s, checkpoints[0])[0]
    n_max = _check_index(max(checkpoints), 1)
    weights = np.left_shift(np.int64(1), omega_series_table(n_max)[1:])
    n = np.arange(1, n_max + 1, dtype=float)
    terms = weights.astype(float) * np.power(n, -s)
    zs = zeta(s)
    target = zs * zs / zeta(2 * s)
    reports = []
    for count in checkpoints:
        count = _check_index(count, 1)
        partial = math.fsum(terms[:count])
        reports.append(ZetaCheckReport(s, count, partial, target, abs(partial - target)))
    return reports


def zeta_identity_check(s: float, n_terms: int) -> ZetaCheckReport:
    """Compare the truncated Dirichlet series of ``2**omega(n)`` with ``zeta(s)**2 / zeta(2s)``."""
    s, n_terms = _check_zeta_args(s, n_terms)
    return zeta_convergence(s, [n_terms])[0]


def log_checkpoints(n_terms: int) -> list[int]:
    """1, 10, 100, ... below ``n_terms``, then ``n_terms`` itself."""
    points = []
    k = 1
    while k < n_terms:
        points.append(k)
        k *= 10
    points.append(n_terms)
    return points
