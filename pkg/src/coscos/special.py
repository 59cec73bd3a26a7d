"""Bessel J0 evaluation and the scalar constants used by the antiderivative formulas.

The whole constant set is derived at import time from first principles: J0 is
summed from its ascending power series, and everything else is plain
arithmetic on sin(1), cos(1) and J0(1).  Nothing is hard-coded, so a
regression in the series would surface immediately in every downstream value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

# Stop the series when a term can no longer move the partial sum.
_TERM_CUTOFF = 1e-18

# The series is certified on a small range only; the library itself only ever
# needs J0(1).
_MAX_ARGUMENT = 30.0


@dataclass(frozen=True)
class ApproxConstants:
    """Scalar constants shared by the closed-form antiderivative formulas.

    ``k_a`` and ``k_b`` are the amplitude multipliers matching the periodic
    part's derivative to cos(cos(x)) at multiples of pi and at odd multiples
    of pi/2 respectively; ``k`` is their average.
    """

    sin1: float
    cos1: float
    j0_1: float
    k_a: float
    k_b: float
    k: float


def bessel_j0(x: float) -> float:
    """Bessel function of the first kind, order 0, by its power series.

    J0(x) = sum_{m>=0} (-1)^m (x/2)^(2m) / (m!)^2, summed with the term
    recurrence t_{m+1} = -t_m (x/2)^2 / (m+1)^2 to avoid factorial overflow,
    truncated once a term drops below 1e-18 * (|partial sum| + 1).  Accurate
    to better than 1e-14 for |x| <= 10.

    Raises:
        ValueError: if x is not finite or |x| > 30, where the truncation
            guarantee no longer holds.
    """
    if not math.isfinite(x):
        raise ValueError(f"bessel_j0 requires a finite argument, got {x!r}")
    if abs(x) > _MAX_ARGUMENT:
        raise ValueError(
            f"bessel_j0 is only certified for |x| <= {_MAX_ARGUMENT:g}, got {x!r}"
        )
    q = (x / 2.0) ** 2
    term = 1.0
    total = 1.0
    m = 0
    while abs(term) > _TERM_CUTOFF * (abs(total) + 1.0):
        m += 1
        term = -term * q / (m * m)
        total += term
    return total


@lru_cache(maxsize=1)
def _derive() -> ApproxConstants:
    sin1 = math.sin(1.0)
    cos1 = math.cos(1.0)
    j0_1 = bessel_j0(1.0)
    k_a = 2.0 * (cos1 - j0_1) / (cos1 - sin1)
    k_b = (1.0 - j0_1) / (1.0 - sin1)
    return ApproxConstants(
        sin1=sin1,
        cos1=cos1,
        j0_1=j0_1,
        k_a=k_a,
        k_b=k_b,
        k=(k_a + k_b) / 2.0,
    )


def derive_constants() -> ApproxConstants:
    """Return the fully populated, immutable constant set.

    Deterministic and cached: repeated calls return the identical object.
    """
    return _derive()
