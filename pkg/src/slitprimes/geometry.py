"""Physical slit layout: one set of p sources per prime on a segment of length d.

Set ``i`` holds ``p_i`` sources with spacing ``d / p_i``. With the far-field
coordinate ``x = d sin(theta) / lambda`` a source at position ``y`` carries
phase ``2 pi x y / d``, and a single set then produces exactly the rescaled
p-slit intensity.
"""

from __future__ import annotations

import io
import math
import numbers
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Sequence, Union

import numpy as np

from .config import DEFAULT_CONFIG, EvalConfig
from .intensity import closed_grid, format_float, intensity_array, intensity_float
from .oracle import is_prime

CENTERED = "centered"
LEFT = "left"
PLACEMENTS = (CENTERED, LEFT)

RealLike = Union[int, float, Fraction, str]


def unit_offsets(p: int, placement: str = CENTERED) -> tuple[Fraction, ...]:
    """Source coordinates of a p-set as fractions of the segment length.

    ``left`` puts the sources at k/p, ``centered`` at (k + 1/2)/p, k = 0..p-1.
    Centered sets are symmetric about the midpoint, so every odd set has a
    source exactly on it.
    """
    if placement == LEFT:
        return tuple(Fraction(k, p) for k in range(p))
    if placement == CENTERED:
        return tuple(Fraction(2 * k + 1, 2 * p) for k in range(p))
    raise ValueError(f"placement must be one of {PLACEMENTS}, got {placement!r}")


@dataclass(frozen=True)
class SlitArrangement:
    d: Fraction
    set_primes: tuple[int, ...]
    placement: str
    offsets: tuple[tuple[Fraction, ...], ...]

    @property
    def positions(self) -> tuple[tuple[Fraction, ...], ...]:
        """Exact source coordinates per set."""
        return tuple(tuple(self.d * u for u in row) for row in self.offsets)

    @property
    def source_count(self) -> int:
        return sum(len(row) for row in self.offsets)

    def spacing(self, i: int) -> Fraction:
        return self.d / self.set_primes[i]

    def write_csv(self, dest: IO[str]) -> None:
        """``set_index,prime,source_index,position,position_float`` rows."""
        dest.write("set_index,prime,source_index,position,position_float\n")
        for i, (p, row) in enumerate(zip(self.set_primes, self.positions)):
            for k, y in enumerate(row):
                dest.write(f"{i},{p},{k},{y.numerator}/{y.denominator},{format_float(float(y))}\n")

    def to_csv(self) -> str:
        buf = io.StringIO()
        self.write_csv(buf)
        return buf.getvalue()


def build_arrangement(
    d: RealLike, primes: Sequence[int], placement: str = CENTERED
) -> SlitArrangement:
    """Lay out one source set per prime on ``[0, d)``, ordered by set then coordinate."""
    d = Fraction(d)
    if d <= 0:
        raise ValueError(f"d must be positive, got {d}")
    primes = tuple(primes)
    if not primes:
        raise ValueError("need at least one prime")
    for p in primes:
        if isinstance(p, bool) or not isinstance(p, numbers.Integral) or not is_prime(int(p)):
            raise ValueError(f"{p!r} is not a prime")
    if len(set(primes)) != len(primes):
        raise ValueError(f"duplicate primes in {list(primes)}")
    primes = tuple(sorted(int(p) for p in primes))
    offsets = tuple(unit_offsets(p, placement) for p in primes)
    return SlitArrangement(d, primes, placement, offsets)


def overlaps(arr: SlitArrangement) -> list[tuple[Fraction, list[int]]]:
    """Coordinates occupied by sources from two or more sets, with the set indices.

    Offsets ``a/b`` and ``c/e`` are compared by ``a*e == c*b`` over all pairs of
    sources in different sets; no floating comparison is involved.
    """
    shared: dict[tuple[int, int], set[int]] = {}
    rows = arr.offsets
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            for u in rows[i]:
                for v in rows[j]:
                    if u.numerator * v.denominator == v.numerator * u.denominator:
                        key = (u.numerator, u.denominator)
                        shared.setdefault(key, set()).update((i, j))
    return [
        (arr.d * Fraction(*key), sorted(sets))
        for key, sets in sorted(shared.items(), key=lambda kv: Fraction(*kv[0]))
    ]


def incoherent_intensity(
    arr: SlitArrangement, x: float, cfg: EvalConfig = DEFAULT_CONFIG
) -> float:
    """Sets add in intensity: the sum of each set's p-slit intensity."""
    return math.fsum(intensity_float(p, x, cfg) for p in arr.set_primes)


def coherent_intensity(arr: SlitArrangement, x: float) -> float:
    """All sources add in amplitude under one common illumination.

    Source at ``y`` gets phase ``2 pi x y / d``; the squared modulus is divided
    by the square of the total source count so that the value at ``x = 0`` is 1.
    Coincident sources from different sets are summed separately.
    """
    if isinstance(x, bool) or not isinstance(x, numbers.Real) or not math.isfinite(x):
        raise ValueError(f"x must be a finite real, got {x!r}")
    return float(coherent_array(arr, [float(x)])[0])


def coherent_array(arr: SlitArrangement, x) -> np.ndarray:
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if not np.all(np.isfinite(x)):
        raise ValueError("x must be finite")
    u = np.array([float(v) for row in arr.offsets for v in row])
    amp = np.exp(2j * np.pi * np.outer(x, u)).sum(axis=1)
    total = arr.source_count
    return (amp.real**2 + amp.imag**2) / (total * total)


def incoherent_array(arr: SlitArrangement, x, cfg: EvalConfig = DEFAULT_CONFIG) -> np.ndarray:
    x = np.atleast_1d(np.asarray(x, dtype=float))
    total = np.zeros_like(x)
    for p in arr.set_primes:
        total += intensity_array(p, x, cfg)
    return total


def compare_curves(
    arr: SlitArrangement,
    x_min: float,
    x_max: float,
    step: float,
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """``(x, incoherent, coherent)`` sampled on the closed grid."""
    grid = closed_grid(x_min, x_max, step)
    return grid, incoherent_array(arr, grid, cfg), coherent_array(arr, grid)
