"""Prime sieve driven by the zeros of the partial intensity sum.

With the primes up to ``p_m`` known, an integer in ``(p_m, p_m**2]`` is prime
exactly when none of the known prime sets puts intensity on it, i.e. when
``omega_m`` vanishes there. Each round appends those zeros and squares the
reach; the loop stops once the known primes cover ``sqrt(N)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .series import OmegaPartialSum, check_prime_prefix, omega_m_array, omega_m_exact_range
from .intensity import closed_grid

# Integers classified per strided pass; bounds peak memory, not the result.
CHUNK = 1 << 20

TraceFn = Callable[[np.ndarray, np.ndarray], None]


@dataclass(frozen=True)
class SieveState:
    """Known prime prefix plus the bound it is being grown toward.

    ``scanned_to`` is the largest integer already classified; it equals
    ``frontier`` for a fresh seed and can run past it when a scan finds no
    primes near its upper end.
    """

    known_primes: tuple[int, ...]
    target: int
    scanned_to: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "known_primes", check_prime_prefix(self.known_primes))
        if self.scanned_to < self.frontier:
            object.__setattr__(self, "scanned_to", self.frontier)
        if self.target < 2:
            raise ValueError(f"target must be >= 2, got {self.target}")

    @classmethod
    def _grown(cls, known: tuple[int, ...], target: int, scanned_to: int) -> "SieveState":
        # States produced by a scan are correct by construction; skip revalidation.
        state = object.__new__(cls)
        object.__setattr__(state, "known_primes", known)
        object.__setattr__(state, "target", target)
        object.__setattr__(state, "scanned_to", scanned_to)
        return state

    @property
    def frontier(self) -> int:
        return self.known_primes[-1]

    @property
    def done(self) -> bool:
        return self.scanned_to >= self.target


def _scan(
    primes: Sequence[int], lo: int, hi: int, trace: Optional[TraceFn] = None
) -> list[int]:
    """Integers in ``(lo, hi]`` where the exact partial sum over ``primes`` is 0."""
    zeros: list[int] = []
    start = lo + 1
    while start <= hi:
        stop = min(start + CHUNK - 1, hi)
        counts = omega_m_exact_range(primes, start, stop)
        if trace is not None:
            trace(np.arange(start, stop + 1), counts)
        zeros.extend((np.flatnonzero(counts == 0) + start).tolist())
        start = stop + 1
    return zeros


def extend_once(state: SieveState, trace: Optional[TraceFn] = None) -> SieveState:
    """Append every zero of the exact partial sum on ``(frontier, min(frontier**2, target)]``."""
    p_m = state.frontier
    hi = min(p_m * p_m, state.target)
    if hi <= state.scanned_to:
        return state
    found = _scan(state.known_primes, state.scanned_to, hi, trace)
    return SieveState._grown(state.known_primes + tuple(found), state.target, hi)


def sieve_to(
    target: int, seed: Sequence[int] = (2,), trace: Optional[TraceFn] = None
) -> list[int]:
    """All primes ``<= target`` grown from a gap-free seed by repeated zero scans.

    Args:
        target: upper bound N, at least 2 and at least the seed's largest prime.
        seed: a prefix 2, 3, 5, ... of the primes.
        trace: optional callback receiving each scanned block of integers and
            their partial-sum values.
    """
    seed = check_prime_prefix(seed)
    if target < 2:
        raise ValueError(f"target must be >= 2, got {target}")
    if target < seed[-1]:
        raise ValueError(f"target {target} is below the seed frontier {seed[-1]}")

    state = SieveState(seed, target)
    while state.frontier * state.frontier < target:
        state = extend_once(state, trace)

    # Last interval: primes up to sqrt(N) already decide everything up to N.
    if not state.done:
        root = math.isqrt(target)
        base = [p for p in state.known_primes if p <= root]
        found = _scan(base, state.scanned_to, target, trace)
        state = SieveState._grown(state.known_primes + tuple(found), target, target)
    return [p for p in state.known_primes if p <= target]


def locate_zeros_float(
    partial: OmegaPartialSum, lo: float, hi: float, grid_step: float
) -> list[int]:
    """Integer zeros of the floating partial sum found by grid scan.

    Grid points whose value falls below ``zero_threshold`` are snapped to the
    nearest integer if within ``integer_snap``; others are dropped. Only for
    reproducing the continuous picture; :func:`sieve_to` does not use it.
    """
    grid = closed_grid(lo, hi, grid_step)
    values = omega_m_array(partial, grid)
    cfg = partial.cfg
    zeros: list[int] = []
    for x in grid[values < cfg.zero_threshold]:
        n = round(float(x))
        if abs(x - n) <= cfg.integer_snap and (not zeros or zeros[-1] != n):
            zeros.append(n)
    return zeros
