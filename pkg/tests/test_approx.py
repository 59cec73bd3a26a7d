import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coscos import (
    Interval,
    MethodKind,
    adaptive_simpson,
    c1,
    c2,
    cos_cos,
    k_of_x,
    l_linear,
    p_tilde,
    p_tilde_prime,
    sample_functions,
    scaled_antiderivative,
)

PI = math.pi
SIN1 = math.sin(1.0)
COS1 = math.cos(1.0)

# Frozen oracle values (see the inline oracles next to each use).
P_TILDE_QUARTER_PI = -0.0772543850576719   # sin(1) - sqrt(2) sin(sqrt(2)/2)
C1_QUARTER_PI = 0.4860837928920493         # k * P_TILDE_QUARTER_PI + J0(1) pi/4
DERIV_LIMIT_AT_0 = -0.15058433946987837    # (cos(1) - sin(1)) / 2


def p_tilde_raw(x):
    # The formula as written, 0/0 at multiples of pi.
    return (SIN1 * math.cos(x) - math.sin(math.cos(x))) / math.sin(x)


def grid(lo, hi, n):
    step = (hi - lo) / (n - 1)
    return [lo + i * step for i in range(n)]


# ---------------------------------------------------------------- p_tilde

def test_p_tilde_vanishes_at_half_pi():
    assert abs(p_tilde(PI / 2)) <= 1e-15


def test_p_tilde_limit_at_zero():
    # raw formula converges to 0 linearly in x with slope (cos1 - sin1)/2
    slope = (COS1 - SIN1) / 2.0
    for x in (1e-4, 1e-5, 1e-6):
        assert abs(p_tilde_raw(x)) <= abs(slope) * x * 1.5
    for x in (1e-4, 1e-5):
        # cancellation in the raw numerator limits how tight this can be
        assert abs(p_tilde_raw(x) / x - slope) <= 1e-3 * abs(slope)
    assert p_tilde(0.0) == 0.0


def test_p_tilde_quarter_pi_value():
    closed = SIN1 - math.sqrt(2.0) * math.sin(math.sqrt(2.0) / 2.0)
    assert abs(p_tilde(PI / 4) - closed) <= 1e-12
    assert abs(p_tilde(PI / 4) - P_TILDE_QUARTER_PI) <= 1e-12


def test_p_tilde_matches_cot_difference_form():
    for x in grid(-10.0, 10.0, 1000):
        if min(abs(x - t * PI) for t in range(-4, 5)) <= 0.1:
            continue
        two_terms = -math.sin(math.cos(x)) / math.sin(x) + SIN1 * (math.cos(x) / math.sin(x))
        assert abs(p_tilde(x) - two_terms) <= 1e-10


def test_p_tilde_continuous_at_singularities():
    for t in range(-3, 4):
        center = p_tilde(t * PI)
        assert abs(p_tilde(t * PI + 1e-7) - center) <= 1e-6
        assert abs(p_tilde(t * PI - 1e-7) - center) <= 1e-6


def test_p_tilde_odd_on_grid():
    for x in grid(-10.0, 10.0, 1000):
        assert abs(p_tilde(-x) + p_tilde(x)) <= 1e-12


def test_p_tilde_periodic_on_grid():
    for x in grid(-10.0, 10.0, 1000):
        assert abs(p_tilde(x + PI) - p_tilde(x)) <= 1e-12


@given(st.floats(min_value=-10.0, max_value=10.0))
def test_p_tilde_odd_property(x):
    assert abs(p_tilde(-x) + p_tilde(x)) <= 1e-12


@given(st.floats(min_value=-10.0, max_value=10.0))
def test_p_tilde_periodic_property(x):
    assert abs(p_tilde(x + PI) - p_tilde(x)) <= 1e-12


@pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
def test_non_finite_rejected(bad, constants):
    for fn in (p_tilde, p_tilde_prime):
        with pytest.raises(ValueError):
            fn(bad)
    for fn in (l_linear, k_of_x, c1, c2):
        with pytest.raises(ValueError):
            fn(bad, constants)


# ---------------------------------------------------------------- l_linear, k_of_x

def test_l_linear_values(constants):
    assert l_linear(0.0, constants) == 0.0
    assert l_linear(-1.0, constants) == -constants.j0_1
    assert abs(l_linear(PI, constants) - 2.4039394306344133) <= 1e-12


def test_k_of_x_anchor_values(constants):
    assert k_of_x(0.0, constants) == constants.k_a
    assert k_of_x(PI / 2, constants) == constants.k_b
    assert abs(k_of_x(PI / 4, constants) - constants.k) <= 1e-15
    for t in range(-3, 4):
        assert abs(k_of_x(t * PI, constants) - constants.k_a) <= 1e-12
        assert abs(k_of_x(t * PI + PI / 2, constants) - constants.k_b) <= 1e-12


def test_k_of_x_stays_in_range_on_grid(constants):
    for x in grid(0.0, PI, 10_000):
        assert constants.k_b <= k_of_x(x, constants) <= constants.k_a


@given(st.floats(min_value=-100.0, max_value=100.0))
def test_k_of_x_range_property(constants, x):
    assert constants.k_b <= k_of_x(x, constants) <= constants.k_a


# ---------------------------------------------------------------- c1, c2

def test_c1_values(constants):
    assert c1(0.0, constants) == 0.0
    assert abs(c1(PI, constants) - PI * constants.j0_1) <= 1e-12
    assert abs(c1(PI / 4, constants) - C1_QUARTER_PI) <= 1e-12


def test_c1_consistent_with_quadrature_on_quarter_window(constants):
    # definite integral over [-pi/4, pi/4] must agree within the worst-case
    # error bound of the approximation
    approx = c1(PI / 4, constants) - c1(-PI / 4, constants)
    reference = adaptive_simpson(cos_cos, Interval(-PI / 4, PI / 4), 1e-10).value
    assert abs(approx - reference) <= 9.6e-4


def test_c2_values(constants):
    assert c2(0.0, constants) == 0.0
    for t in range(-2, 3):
        x = t * PI / 2
        assert abs(c2(x, constants) - constants.j0_1 * x) <= 1e-12


def test_c2_error_on_unit_interval(constants):
    approx = c2(1.0, constants) - c2(-1.0, constants)
    reference = adaptive_simpson(cos_cos, Interval(-1.0, 1.0), 1e-10).value
    assert abs(approx - reference) <= 1e-5


def test_pi_window_identity(constants):
    # differencing over any width-pi window gives exactly pi * J0(1)
    rng = random.Random(2024)
    target = PI * constants.j0_1
    for _ in range(100):
        t = rng.uniform(-20.0, 20.0)
        assert abs((c1(t + PI, constants) - c1(t, constants)) - target) <= 1e-12
        assert abs((c2(t + PI, constants) - c2(t, constants)) - target) <= 1e-12


def test_c1_derivative_matches_analytic(constants):
    # central difference of c1 vs k * p_tilde'(x) + J0(1), away from the
    # removable singularities
    h = 1e-5
    for x in grid(-10.0, 10.0, 2000):
        if min(abs(x - t * PI) for t in range(-4, 5)) <= 0.01:
            continue
        fd = (c1(x + h, constants) - c1(x - h, constants)) / (2.0 * h)
        analytic = constants.k * p_tilde_prime(x) + constants.j0_1
        assert abs(fd - analytic) <= 1e-7


def test_c2_derivative_tracks_integrand_better_than_c1(constants):
    h = 1e-5

    def max_deviation(f):
        worst = 0.0
        for x in grid(0.0, PI, 10_000):
            fd = (f(x + h, constants) - f(x - h, constants)) / (2.0 * h)
            worst = max(worst, abs(fd - cos_cos(x)))
        return worst

    assert max_deviation(c2) < max_deviation(c1)


def test_max_difference_points_sit_at_half_pi_multiples(constants):
    # grid search for where the k = 1 derivative deviates most from the
    # integrand; the maxima live at multiples of pi/2
    xs = grid(0.0, PI, 4001)
    devs = [abs(cos_cos(x) - (p_tilde_prime(x) + constants.j0_1)) for x in xs]
    x_max = xs[devs.index(max(devs))]
    assert min(abs(x_max - t * PI / 2) for t in range(3)) <= 0.05


# ---------------------------------------------------------------- scaled antiderivative

def test_scaled_identity_parameters(constants):
    assert scaled_antiderivative(PI, 1.0, 1.0, 0.0, MethodKind.C1, constants) == c1(PI, constants)


def test_scaled_amplitude_linearity(constants):
    got = scaled_antiderivative(1.0, -3.0, 1.0, 0.0, MethodKind.C1, constants)
    assert got == -3.0 * c1(1.0, constants)


def test_scaled_substitution_against_quadrature(constants):
    # integral of 2 cos(cos(2x)) over [0, pi/2] equals pi * J0(1)
    upper = scaled_antiderivative(PI / 2, 2.0, 2.0, 0.0, MethodKind.C2, constants)
    lower = scaled_antiderivative(0.0, 2.0, 2.0, 0.0, MethodKind.C2, constants)
    reference = adaptive_simpson(
        lambda x: 2.0 * cos_cos(2.0 * x), Interval(0.0, PI / 2), 1e-10
    ).value
    assert abs((upper - lower) - reference) <= 1e-8
    assert abs(upper - PI * constants.j0_1) <= 1e-12


def test_scaled_rejects_degenerate_and_wrong_method(constants):
    with pytest.raises(ValueError):
        scaled_antiderivative(1.0, 1.0, 0.0, 0.0, MethodKind.C1, constants)
    with pytest.raises(ValueError):
        scaled_antiderivative(1.0, 1.0, 1.0, 0.0, MethodKind.ADAPTIVE_SIMPSON, constants)


# ---------------------------------------------------------------- sample_functions

def test_sample_endpoints():
    rows = sample_functions(0.0, PI, 2)
    assert len(rows) == 2
    assert rows[0].x == 0.0
    assert rows[1].x == PI


def test_sample_derivative_column_at_half_pi():
    rows = sample_functions(0.0, PI, 3)
    mid = rows[1]
    assert mid.x == PI / 2
    assert abs(mid.dc1_approx - (1.0 - SIN1)) <= 1e-12
    # finite-difference oracle on the periodic part
    h = 1e-6
    fd = (p_tilde(mid.x + h) - p_tilde(mid.x - h)) / (2.0 * h)
    assert abs(mid.dc1_approx - fd) <= 1e-8


def test_sample_derivative_limit_at_zero(constants):
    # numeric limit: the derivative of the k = 1 primitive minus its linear
    # slope, Richardson-extrapolated from x = 1e-3 and 2e-3.  The step cannot
    # be much smaller: p_tilde evaluated at distance x from the singularity
    # carries absolute noise ~1e-17/x that the difference quotient amplifies
    # by 1/h.
    h = 1e-4

    def prim(x):
        return p_tilde(x) + constants.j0_1 * x

    def deriv_of_periodic(x):
        return (prim(x + h) - prim(x - h)) / (2.0 * h) - constants.j0_1

    limit = (4.0 * deriv_of_periodic(1e-3) - deriv_of_periodic(2e-3)) / 3.0
    assert abs(limit - DERIV_LIMIT_AT_0) <= 1e-8
    rows = sample_functions(-1.0, 1.0, 3)
    assert rows[1].x == 0.0
    assert rows[1].dc1_approx == DERIV_LIMIT_AT_0


def test_sample_columns_consistent(constants):
    rows = sample_functions(-6.5, 6.5, 131)
    for row in rows:
        assert row.cos_cos_x == cos_cos(row.x)
        assert row.c1 == c1(row.x, constants)
        assert row.c2 == c2(row.x, constants)
        assert row.linear == constants.j0_1 * row.x


def test_sample_rejects_bad_arguments():
    with pytest.raises(ValueError):
        sample_functions(0.0, 1.0, 1)
    with pytest.raises(ValueError):
        sample_functions(1.0, 1.0, 5)
    with pytest.raises(ValueError):
        sample_functions(2.0, 1.0, 5)
    with pytest.raises(ValueError):
        sample_functions(math.nan, 1.0, 5)
