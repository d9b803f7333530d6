"""Normalized p-slit intensity in rescaled coordinates.

In the rescaled coordinate ``x`` the intensity of ``p`` equally spaced coherent
slits is

    I_p(x) = sin^2(pi x) / (p^2 sin^2(pi x / p)),

which is 1 at every multiple of ``p`` and 0 at every other integer. Two
evaluation routes are provided: :func:`intensity_exact` works on integers by
divisibility, :func:`intensity_float` on reals with a phasor-sum fallback at the
removable singularities.
"""

from __future__ import annotations

import io
import math
import numbers
import operator
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Union

import numpy as np

from .config import DEFAULT_CONFIG, EvalConfig

_OVERSHOOT = 1e-12


def _check_period(p) -> int:
    p = operator.index(p)
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    return int(p)


def intensity_exact(p: int, n: int) -> int:
    """Return 1 if ``p`` divides ``n`` (including ``n == 0``), else 0."""
    p = _check_period(p)
    return 1 if operator.index(n) % p == 0 else 0


def phasor_intensity(p: int, x) -> np.ndarray:
    """``|sum_k exp(2 pi i k x / p)|^2 / p^2`` by direct summation over k = 0..p-1."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    k = np.arange(p, dtype=float)
    amp = np.exp(2j * np.pi * np.outer(x, k) / p).sum(axis=1)
    return (amp.real**2 + amp.imag**2) / (p * p)


def ratio_intensity(p: int, x) -> np.ndarray:
    """Closed-form ratio, no reduction and no singularity handling."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    return np.sin(np.pi * x) ** 2 / (p * p * np.sin(np.pi * x / p) ** 2)


def intensity_array(p: int, x, cfg: EvalConfig = DEFAULT_CONFIG) -> np.ndarray:
    """Vectorized :func:`intensity_float` over an array of finite reals."""
    p = _check_period(p)
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if not np.all(np.isfinite(x)):
        raise ValueError("x must be finite")

    # Reduce to one period; sin^2(pi x) only depends on x mod 1.
    xr = x - p * np.rint(x / p)
    frac = xr - np.rint(xr)

    out = np.empty_like(x)
    near = np.abs(xr) < p * cfg.singularity_window
    far = ~near
    if far.any():
        out[far] = np.sin(np.pi * frac[far]) ** 2 / (
            p * p * np.sin(np.pi * xr[far] / p) ** 2
        )
    if near.any():
        out[near] = phasor_intensity(p, xr[near])

    over = (out > 1.0) & (out <= 1.0 + _OVERSHOOT)
    out[over] = 1.0
    return out


def intensity_float(p: int, x: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Intensity of ``p`` coherent slits at rescaled coordinate ``x``.

    Near multiples of ``p`` (closer than ``p * cfg.singularity_window``) the
    phasor sum is used instead of the 0/0 ratio, so the limit value 1 is
    returned at the multiples themselves.
    """
    if isinstance(x, bool) or not isinstance(x, numbers.Real):
        raise TypeError(f"x must be a real number, got {type(x).__name__}")
    if not math.isfinite(x):
        raise ValueError(f"x must be finite, got {x!r}")
    return float(intensity_array(p, [float(x)], cfg)[0])


def closed_grid(x_min: float, x_max: float, step: float) -> np.ndarray:
    """Grid ``x_min + i*step`` covering ``[x_min, x_max]`` with both endpoints present."""
    if not all(math.isfinite(v) for v in (x_min, x_max, step)):
        raise ValueError("grid bounds and step must be finite")
    if step <= 0:
        raise ValueError(f"step must be positive, got {step}")
    if not x_min < x_max:
        raise ValueError(f"empty or inverted range [{x_min}, {x_max}]")
    span = (x_max - x_min) / step
    count = int(math.floor(span + 1e-9))
    grid = x_min + step * np.arange(count + 1, dtype=float)
    if abs(grid[-1] - x_max) <= 1e-9 * step:
        grid[-1] = x_max
    else:
        grid = np.append(grid, x_max)
    return grid


def format_float(value: float) -> str:
    return f"{value:.17g}"


@dataclass(frozen=True)
class IntensityProfile:
    """A sampled curve ``values(x)`` ready for CSV output."""

    x: np.ndarray
    values: np.ndarray
    value_name: str = "intensity"

    def __len__(self) -> int:
        return len(self.x)

    def peaks(self, level: float = 1 - 1e-9) -> np.ndarray:
        return self.x[self.values >= level]

    def write_csv(self, dest: Union[str, Path, IO[str]]) -> None:
        if isinstance(dest, (str, Path)):
            with open(dest, "w", newline="") as fh:
                self.write_csv(fh)
            return
        dest.write(f"x,{self.value_name}\n")
        for xv, yv in zip(self.x, self.values):
            dest.write(f"{format_float(xv)},{format_float(yv)}\n")

    def to_csv(self) -> str:
        buf = io.StringIO()
        self.write_csv(buf)
        return buf.getvalue()

    @classmethod
    def read_csv(cls, text: str) -> "IntensityProfile":
        lines = text.strip().splitlines()
        name = lines[0].split(",")[1]
        data = np.array([[float(v) for v in ln.split(",")] for ln in lines[1:]])
        return cls(data[:, 0], data[:, 1], name)


def profile(
    p: int, x_min: float, x_max: float, step: float, cfg: EvalConfig = DEFAULT_CONFIG
) -> IntensityProfile:
    """Sample :func:`intensity_float` on the closed grid from ``x_min`` to ``x_max``."""
    _check_period(p)
    grid = closed_grid(x_min, x_max, step)
    return IntensityProfile(grid, intensity_array(p, grid, cfg))
