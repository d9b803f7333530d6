"""Floating-point evaluation settings shared by the kernel, series and sieve code."""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class EvalConfig:
    """Tolerances for floating evaluation.

    Attributes:
        singularity_window: half-width (in units of x, per unit period) around
            multiples of ``p`` inside which the phasor form replaces the ratio form.
        zero_threshold: a float intensity below this counts as zero.
        integer_snap: tolerance for treating a real ``x`` as an integer.
    """

    singularity_window: float = 1e-6
    zero_threshold: float = 1e-9
    integer_snap: float = 1e-9

    def __post_init__(self) -> None:
        for name in ("singularity_window", "zero_threshold", "integer_snap"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
                raise ValueError(f"{name} must be a finite positive number, got {value!r}")

    def check_primes(self, p_max: int) -> None:
        """Raise if a single unit-weight term of period ``p_max`` could read as zero.

        The smallest nonzero value a term takes at a half-integer is ``1/p_max**2``;
        the zero threshold must sit strictly below it.
        """
        if self.zero_threshold >= 1.0 / (p_max * p_max):
            raise ValueError(
                f"zero_threshold={self.zero_threshold} is not below 1/p^2 for p={p_max}"
            )


DEFAULT_CONFIG = EvalConfig()
