"""Closed-form approximations of the antiderivative of cos(cos(x)).

Both approximations share the same skeleton: a pi-periodic odd part

    p_tilde(x) = (sin(1) cos(x) - sin(cos(x))) / sin(x)

scaled by an amplitude multiplier, plus the exact linear trend J0(1) * x.
``c1`` uses the constant multiplier k, ``c2`` the cosine interpolation k(x)
between k_a and k_b.  Differencing either at the interval endpoints gives a
definite integral in constant time, with an error bounded independently of
the interval width.

The written formula for p_tilde reads 0/0 at every multiple of pi; the
singularities are removable and every evaluator here returns the limit value.
"""

from __future__ import annotations

import enum
import math
from typing import NamedTuple

from .special import ApproxConstants, derive_constants

_SIN1 = math.sin(1.0)
_COS1 = math.cos(1.0)
_PI = math.pi

# Inside this distance from a multiple of pi the local Taylor expansion
# replaces the quotient form.
_SINGULARITY_RADIUS = 1e-4

# p_tilde(t*pi + d) = _SLOPE*d + _CUBIC*d^3 + O(d^5)
_SLOPE = (_COS1 - _SIN1) / 2.0
_CUBIC = (2.0 * _SIN1 + _COS1) / 24.0

# p_tilde'(t*pi + d) = _SLOPE + _QUAD*d^2 + O(d^4)
_QUAD = _COS1 / 8.0 + _SIN1 / 4.0


class MethodKind(enum.Enum):
    """Strategy selector for computing a definite integral of cos(cos(x))."""

    C1 = "c1"
    C2 = "c2"
    ADAPTIVE_SIMPSON = "simpson"
    PERIODIC_ORACLE = "oracle"


class SampleRow(NamedTuple):
    x: float
    cos_cos_x: float
    dc1_approx: float
    c1: float
    c2: float
    linear: float


def _require_finite(x: float, name: str = "x") -> None:
    if not math.isfinite(x):
        raise ValueError(f"{name} must be finite, got {x!r}")


def _offset_from_pi_multiple(x: float) -> float:
    return x - round(x / _PI) * _PI


def p_tilde(x: float) -> float:
    """Periodic part of the antiderivative approximation.

    Returns (sin(1) cos(x) - sin(cos(x))) / sin(x) for all real x, using the
    limit value at multiples of pi.  Odd and pi-periodic.
    """
    _require_finite(x)
    d = _offset_from_pi_multiple(x)
    if abs(d) < _SINGULARITY_RADIUS:
        return (_SLOPE + _CUBIC * d * d) * d
    c = math.cos(x)
    # Anchor the numerator at cos(x) = +-1: eps = 1 - |cos x| is exact in
    # floating point, and the rewritten form below never cancels, where the
    # naive difference of two O(sin 1) terms loses ~half the mantissa near
    # the singularities.
    eps = 1.0 - abs(c)
    n = _SIN1 * (2.0 * math.sin(0.5 * eps) ** 2 - eps) + _COS1 * math.sin(eps)
    if c < 0.0:
        n = -n
    return n / math.sin(x)


def p_tilde_prime(x: float) -> float:
    """Derivative of the periodic part.

    Analytic form cos(cos(x)) + (cos(x) sin(cos(x)) - sin(1)) / sin(x)^2,
    evaluated cancellation-free, with the limit value (cos(1) - sin(1)) / 2
    taken near multiples of pi.  Even and pi-periodic.
    """
    _require_finite(x)
    d = _offset_from_pi_multiple(x)
    if abs(d) < _SINGULARITY_RADIUS:
        return _SLOPE + _QUAD * d * d
    c = math.cos(x)
    eps = 1.0 - abs(c)
    # cos(x) sin(cos(x)) - sin(1), grouped so every term has the same sign,
    # and sin(x)^2 = eps * (2 - eps) exactly.
    m = -(
        _SIN1 * (2.0 * math.sin(0.5 * eps) ** 2 + eps * math.cos(eps))
        + _COS1 * (1.0 - eps) * math.sin(eps)
    )
    return math.cos(c) + m / (eps * (2.0 - eps))


def l_linear(x: float, c: ApproxConstants) -> float:
    """Linear trend of the antiderivative: J0(1) * x."""
    _require_finite(x)
    return c.j0_1 * x


def k_of_x(x: float, c: ApproxConstants) -> float:
    """Position-dependent amplitude multiplier interpolating k_a and k_b.

    Equal to (k_a - k_b)/2 * cos(2x) + (k_a + k_b)/2, computed as
    k_b + (k_a - k_b) * cos(x)^2: k_a - k_b is exact (the values are within
    a factor of two of each other), so k(0) == k_a and k(pi/2) == k_b hold
    exactly and the result never leaves [k_b, k_a].
    """
    _require_finite(x)
    cx = math.cos(x)
    return c.k_b + (c.k_a - c.k_b) * (cx * cx)


def c1(x: float, c: ApproxConstants) -> float:
    """First antiderivative approximation: k * p_tilde(x) + J0(1) * x."""
    return c.k * p_tilde(x) + c.j0_1 * x


def c2(x: float, c: ApproxConstants) -> float:
    """Second antiderivative approximation: k(x) * p_tilde(x) + J0(1) * x."""
    return k_of_x(x, c) * p_tilde(x) + c.j0_1 * x


_SCALABLE = (MethodKind.C1, MethodKind.C2)


def scaled_antiderivative(
    x: float,
    amplitude: float,
    m: float,
    q: float,
    method: MethodKind,
    c: ApproxConstants,
) -> float:
    """Antiderivative of amplitude * cos(cos(m*x + q)).

    Substituting u = m*x + q scales the base approximation by amplitude / m.

    Raises:
        ValueError: if m == 0 (the integrand degenerates to a constant and
            this routine refuses to guess), or for a non-C1/C2 method.
    """
    for name, value in (("x", x), ("amplitude", amplitude), ("m", m), ("q", q)):
        _require_finite(value, name)
    if m == 0.0:
        raise ValueError("m must be nonzero; the integrand is constant for m == 0")
    if method not in _SCALABLE:
        raise ValueError(f"method must be C1 or C2, got {method!r}")
    base = c1 if method is MethodKind.C1 else c2
    return (amplitude / m) * base(m * x + q, c)


def sample_functions(lo: float, hi: float, n: int) -> list[SampleRow]:
    """Tabulate the integrand, the approximations and their building blocks.

    Returns n equally spaced rows over [lo, hi] with columns
    (x, cos(cos(x)), p_tilde'(x), c1(x), c2(x), J0(1)*x).  The derivative
    column uses the same removable-singularity policy as p_tilde.
    """
    _require_finite(lo, "lo")
    _require_finite(hi, "hi")
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"n must be an integer >= 2, got {n!r}")
    if lo >= hi:
        raise ValueError(f"need lo < hi, got [{lo!r}, {hi!r}]")

    c = derive_constants()
    step = (hi - lo) / (n - 1)
    rows = []
    for i in range(n):
        x = hi if i == n - 1 else lo + i * step
        rows.append(
            SampleRow(
                x=x,
                cos_cos_x=math.cos(math.cos(x)),
                dc1_approx=p_tilde_prime(x),
                c1=c1(x, c),
                c2=c2(x, c),
                linear=l_linear(x, c),
            )
        )
    return rows
