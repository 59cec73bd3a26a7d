"""Error measurement and the random-interval benchmark harness.

Errors are always measured against ``periodic_oracle``: unlike a plain
adaptive quadrature at fixed tolerance, its precision does not degrade on
wide intervals, so it is strictly better ground truth for the width ranges
benchmarked here (adaptive Simpson remains available as a method and is
cross-checked against the oracle in the tests).
"""

from __future__ import annotations

import math
import random
import statistics
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .approx import MethodKind, c1, c2
from .quadrature import Interval, adaptive_simpson, cos_cos, periodic_oracle
from .special import ApproxConstants, derive_constants

#: The six outer bounds of the benchmark table.
DEFAULT_BENCHMARK_BOUNDS: tuple[Interval, ...] = (
    Interval(-1.0, 1.0),
    Interval(-5.0, 5.0),
    Interval(-10.0, 10.0),
    Interval(-20.0, 20.0),
    Interval(-50.0, 50.0),
    Interval(-100.0, 100.0),
)

_TIMING_REPS = 5


@dataclass(frozen=True)
class BenchmarkRow:
    """Mean errors and timings for random subintervals of one bounds pair."""

    bounds: Interval
    n_trials: int
    mean_error_c1: float
    mean_error_c2: float
    mean_time_c1: float
    mean_time_c2: float
    mean_time_ref: float


def definite_integral(
    iv: Interval, method: MethodKind, c: ApproxConstants, tol: float = 1e-10
) -> float:
    """Definite integral of cos(cos(x)) over iv by the selected method.

    C1/C2 difference the closed-form antiderivative at the endpoints; the
    quadrature methods delegate (tol only applies to those).
    """
    if method is MethodKind.C1:
        return c1(iv.hi, c) - c1(iv.lo, c)
    if method is MethodKind.C2:
        return c2(iv.hi, c) - c2(iv.lo, c)
    if method is MethodKind.ADAPTIVE_SIMPSON:
        return adaptive_simpson(cos_cos, iv, tol).value
    if method is MethodKind.PERIODIC_ORACLE:
        return periodic_oracle(iv, tol)
    raise ValueError(f"unknown method {method!r}")


def _max_abs_error(
    intervals: Iterable[Interval], method: MethodKind, c: ApproxConstants, tol: float
) -> float:
    worst = 0.0
    for iv in intervals:
        err = abs(definite_integral(iv, method, c) - periodic_oracle(iv, tol))
        if err > worst:
            worst = err
    return worst


def worst_case_error(
    h_range: Sequence[int], c: ApproxConstants, tol: float = 1e-10
) -> float:
    """Largest C1 error over the quarter-period-centered intervals
    [-pi/4 + h*pi/2, pi/4 + h*pi/2]."""
    if not h_range:
        raise ValueError("h_range must be nonempty")
    ivs = (
        Interval(-math.pi / 4 + h * math.pi / 2, math.pi / 4 + h * math.pi / 2)
        for h in h_range
    )
    return _max_abs_error(ivs, MethodKind.C1, c, tol)


def best_case_error(
    h_range: Sequence[int],
    c: ApproxConstants,
    tol: float = 1e-10,
    method: MethodKind = MethodKind.C1,
) -> float:
    """Largest error over the half-period intervals [h*pi/2, (h+1)*pi/2].

    The periodic part vanishes at every multiple of pi/2, so the result is
    analytically zero for both C1 and C2; what remains is oracle noise.
    """
    if not h_range:
        raise ValueError("h_range must be nonempty")
    ivs = (Interval(h * math.pi / 2, (h + 1) * math.pi / 2) for h in h_range)
    return _max_abs_error(ivs, method, c, tol)


def analytic_error_bound(c: ApproxConstants) -> float:
    """Worst-case bound for the C1 definite-integral error:
    |p_tilde(pi/4)| * (k_a - k_b) = (sqrt(2) sin(sqrt(2)/2) - sin(1)) (k_a - k_b)."""
    amplitude = math.sqrt(2.0) * math.sin(math.sqrt(2.0) / 2.0) - c.sin1
    return amplitude * (c.k_a - c.k_b)


def verify_identity_eq1(iv: Interval, tol: float = 1e-10) -> float:
    """Residual of the composite-integration identity for f = g = cos.

    Both sides of

        integral of cos(cos(x)) = -sin(cos(x))/sin(x)
                                  - integral of sin(cos(x)) * cos(x)/sin(x)^2

    are evaluated in definite form over iv by adaptive Simpson and the
    absolute difference is returned (expected <= 10 * tol).

    The right-hand side has poles at multiples of pi, so iv must sit at
    least 0.05 inside one pole-free branch (t*pi, (t+1)*pi).
    """
    t = math.floor(iv.lo / math.pi)
    margin = 0.05
    if iv.lo - t * math.pi < margin or (t + 1) * math.pi - iv.hi < margin:
        raise ValueError(
            f"[{iv.lo!r}, {iv.hi!r}] must lie within one branch (t*pi, (t+1)*pi) "
            f"with margin {margin}"
        )

    def boundary(x: float) -> float:
        return -math.sin(math.cos(x)) / math.sin(x)

    def inner(x: float) -> float:
        # sin(cos(x)) times the derivative of -1/sin(x)
        return math.sin(math.cos(x)) * math.cos(x) / math.sin(x) ** 2

    lhs = adaptive_simpson(cos_cos, iv, tol).value
    rhs = boundary(iv.hi) - boundary(iv.lo) - adaptive_simpson(inner, iv, tol).value
    return abs(lhs - rhs)


def _median_time(fn: Callable[[], object], reps: int = _TIMING_REPS) -> float:
    times = []
    for _ in range(reps):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return statistics.median(times)


def run_benchmark(
    bounds_list: Sequence[Interval],
    n_trials: int,
    seed: int,
    tol_ref: float = 1e-10,
    tol_time: float = 1e-6,
) -> list[BenchmarkRow]:
    """Random-subinterval accuracy and timing comparison.

    For every bounds pair, draws ``n_trials`` subintervals (two independent
    uniform endpoints, ordered; reproducible from ``seed``), measures the
    mean absolute error of C1 and C2 against ``periodic_oracle`` at
    ``tol_ref``, and the mean wall time of C1, C2 and adaptive Simpson at
    ``tol_time``.  Each timing is the median of 5 repetitions to damp
    scheduler noise; error columns are bit-reproducible for a fixed seed,
    times are not.
    """
    if not bounds_list:
        raise ValueError("bounds_list must be nonempty")
    if n_trials < 1:
        raise ValueError(f"n_trials must be >= 1, got {n_trials!r}")
    if not (tol_ref > 0.0 and tol_time > 0.0):
        raise ValueError("tolerances must be positive")

    c = derive_constants()
    rng = random.Random(seed)
    rows = []
    for bounds in bounds_list:
        errors_c1 = []
        errors_c2 = []
        times_c1 = []
        times_c2 = []
        times_ref = []
        for _ in range(n_trials):
            a = rng.uniform(bounds.lo, bounds.hi)
            b = rng.uniform(bounds.lo, bounds.hi)
            sub = Interval(min(a, b), max(a, b))
            reference = periodic_oracle(sub, tol_ref)
            errors_c1.append(abs((c1(sub.hi, c) - c1(sub.lo, c)) - reference))
            errors_c2.append(abs((c2(sub.hi, c) - c2(sub.lo, c)) - reference))
            times_c1.append(_median_time(lambda: c1(sub.hi, c) - c1(sub.lo, c)))
            times_c2.append(_median_time(lambda: c2(sub.hi, c) - c2(sub.lo, c)))
            times_ref.append(
                _median_time(lambda: adaptive_simpson(cos_cos, sub, tol_time))
            )
        rows.append(
            BenchmarkRow(
                bounds=bounds,
                n_trials=n_trials,
                mean_error_c1=statistics.fmean(errors_c1),
                mean_error_c2=statistics.fmean(errors_c2),
                mean_time_c1=statistics.fmean(times_c1),
                mean_time_c2=statistics.fmean(times_c2),
                mean_time_ref=statistics.fmean(times_ref),
            )
        )
    return rows


__all__ = [
    "BenchmarkRow",
    "DEFAULT_BENCHMARK_BOUNDS",
    "analytic_error_bound",
    "best_case_error",
    "definite_integral",
    "run_benchmark",
    "verify_identity_eq1",
    "worst_case_error",
]
