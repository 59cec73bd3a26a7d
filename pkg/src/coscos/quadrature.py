"""Reference integrators for cos(cos(x)).

``adaptive_simpson`` is the classic recursive bisection rule: each interval
is accepted when the two-level Simpson estimates agree to 15x the local
tolerance, the tolerance halves on subdivision, and the Richardson correction
(S2 - S1) / 15 sharpens every accepted piece.

``periodic_oracle`` exploits the identity that cos(cos(x)) integrates to
exactly pi * J0(1) over any window of width pi, so whole periods are summed
in closed form and only the sub-period remainder is quadratured.  Its
precision therefore does not degrade with interval width, which is what makes
it the ground truth for all error measurements in this package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .special import derive_constants

# The two-level error test is only trustworthy once a panel is narrow enough
# that the 5 Simpson samples actually resolve the integrand: on a panel many
# periods wide the samples can alias (e.g. cos(cos(x)) over [-50, 50] looks
# converged at depth 3 while being wrong by O(10)).  Panels start no wider
# than this.
_PANEL_WIDTH = 2.0
_MAX_PANELS = 1 << 20

_DEFAULT_MAX_DEPTH = 60


@dataclass(frozen=True)
class Interval:
    """Ordered pair of finite integration bounds."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise ValueError(f"interval bounds must be finite, got [{self.lo!r}, {self.hi!r}]")
        if self.lo > self.hi:
            raise ValueError(f"interval bounds must satisfy lo <= hi, got [{self.lo!r}, {self.hi!r}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo


@dataclass(frozen=True)
class QuadratureResult:
    """Value plus instrumentation from one adaptive quadrature run."""

    value: float
    error_estimate: float
    evaluations: int
    max_depth_reached: int


class ConvergenceError(RuntimeError):
    """Adaptive subdivision exceeded the depth cap on some subinterval."""

    def __init__(self, lo: float, hi: float, depth: int):
        super().__init__(
            f"adaptive Simpson did not converge on [{lo!r}, {hi!r}] within depth {depth}"
        )
        self.lo = lo
        self.hi = hi
        self.depth = depth


def cos_cos(x: float) -> float:
    """The integrand cos(cos(x))."""
    return math.cos(math.cos(x))


def adaptive_simpson(
    f: Callable[[float], float],
    iv: Interval,
    tol: float,
    max_depth: int = _DEFAULT_MAX_DEPTH,
) -> QuadratureResult:
    """Integrate f over iv by the adaptive Simpson rule.

    The returned value is accurate to roughly tol for smooth integrands.
    ``error_estimate`` sums the magnitudes of the per-piece Richardson
    estimates, ``evaluations`` counts integrand calls, ``max_depth_reached``
    is the deepest recursion level that was accepted.

    Raises:
        ValueError: for tol <= 0 or a non-finite integrand value.
        ConvergenceError: if some subinterval still fails the acceptance test
            at recursion depth ``max_depth``.
    """
    if not (tol > 0.0):
        raise ValueError(f"tol must be positive, got {tol!r}")
    if iv.lo == iv.hi:
        return QuadratureResult(0.0, 0.0, 0, 0)

    evaluations = 0
    error_sum = 0.0
    deepest = 0

    def ev(x: float) -> float:
        nonlocal evaluations
        evaluations += 1
        y = f(x)
        if not math.isfinite(y):
            raise ValueError(f"integrand returned non-finite value {y!r} at x={x!r}")
        return y

    def recurse(
        a: float, fa: float, m: float, fm: float, b: float, fb: float,
        s_whole: float, tol_local: float, depth: int,
    ) -> float:
        nonlocal error_sum, deepest
        if depth > max_depth:
            raise ConvergenceError(a, b, max_depth)
        lm = 0.5 * (a + m)
        rm = 0.5 * (m + b)
        flm = ev(lm)
        frm = ev(rm)
        h = 0.5 * (b - a)
        s_left = (h / 6.0) * (fa + 4.0 * flm + fm)
        s_right = (h / 6.0) * (fm + 4.0 * frm + fb)
        s_two = s_left + s_right
        diff = s_two - s_whole
        if abs(diff) <= 15.0 * tol_local:
            error_sum += abs(diff) / 15.0
            if depth > deepest:
                deepest = depth
            return s_two + diff / 15.0
        half = 0.5 * tol_local
        return recurse(a, fa, lm, flm, m, fm, s_left, half, depth + 1) + recurse(
            m, fm, rm, frm, b, fb, s_right, half, depth + 1
        )

    width = iv.hi - iv.lo
    n_panels = min(_MAX_PANELS, max(1, math.ceil(width / _PANEL_WIDTH)))
    tol_panel = tol / n_panels

    total = 0.0
    x_left = iv.lo
    f_left = ev(x_left)
    for i in range(n_panels):
        x_right = iv.hi if i == n_panels - 1 else iv.lo + (i + 1) * width / n_panels
        f_right = ev(x_right)
        m = 0.5 * (x_left + x_right)
        fm = ev(m)
        s0 = ((x_right - x_left) / 6.0) * (f_left + 4.0 * fm + f_right)
        total += recurse(x_left, f_left, m, fm, x_right, f_right, s0, tol_panel, 0)
        x_left, f_left = x_right, f_right

    return QuadratureResult(total, error_sum, evaluations, deepest)


def periodic_oracle(iv: Interval, tol: float) -> float:
    """High-precision definite integral of cos(cos(x)) over iv.

    Splits the interval into n whole pi-periods, each contributing exactly
    pi * J0(1), plus a left-anchored remainder of width < pi handled by
    ``adaptive_simpson`` at the given tolerance.
    """
    c = derive_constants()
    width = iv.hi - iv.lo
    n = math.floor(width / math.pi)
    r = width - n * math.pi
    if r < 0.0:
        n -= 1
        r += math.pi
    remainder = adaptive_simpson(cos_cos, Interval(iv.lo, iv.lo + r), tol)
    return n * (math.pi * c.j0_1) + remainder.value
