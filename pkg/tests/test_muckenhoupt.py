import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from szegolab.muckenhoupt import (
    Arc, Verdict, ap_scan, ap_supremum_estimate, arc_quotient, boundedness_interval, classify, default_ladder,
    fit_slope, power_integral, predicted_slope,
)
from szegolab.weights import PowerWeight


def test_interval_examples():
    assert boundedness_interval(0.5) == (4 / 3, 4)
    assert boundedness_interval(0) == (1, math.inf)
    assert boundedness_interval(1) == pytest.approx((1.5, 3))
    with pytest.raises(ValueError):
        boundedness_interval(-0.1)


@settings(max_examples=50, deadline=None)
@given(st.floats(1e-3, 100))
def test_interval_conjugate(alpha):
    q0, p0 = boundedness_interval(alpha)
    assert 1 / q0 + 1 / p0 == pytest.approx(1, abs=1e-12)
    assert 1 < q0 < 2 < p0


def test_classify_examples():
    assert classify(0.5, 2).classification is Verdict.INSIDE
    assert classify(0.5, 4).classification is Verdict.BOUNDARY
    assert classify(0.5, 6).classification is Verdict.OUTSIDE
    with pytest.raises(ValueError):
        classify(0.5, 1)


def test_predicted_slope_examples():
    assert predicted_slope(0.5, 6) == pytest.approx(-1)
    assert predicted_slope(0.5, 1.2) == pytest.approx(-0.2)
    assert predicted_slope(0.3, 2) == 0
    with pytest.raises(ValueError):
        predicted_slope(0.5, 4)


def test_power_integral_constant():
    assert power_integral(0, 0, -1, 1) == pytest.approx(2, rel=1e-14)


def test_power_integral_matches_scipy():
    from scipy.integrate import quad

    exact, _ = quad(lambda t: (2 * abs(math.sin(t / 2))) ** -0.5, 0, 1, limit=200)
    assert power_integral(-0.5, 0, 0, 1, 128) == pytest.approx(exact, rel=1e-8)


def test_power_integral_needs_clamp_for_strong_singularity():
    with pytest.raises(ValueError):
        power_integral(-1.5, 0, -0.1, 0.1)


def test_constant_weight_quotient_is_one():
    for p in (1.5, 2, 4):
        for arc in (Arc(0.3, 0.1), Arc(0, np.pi), Arc(5, 0.01)):
            assert arc_quotient(PowerWeight(0), p, arc) == pytest.approx(1, abs=1e-12)


def test_small_arc_quotient_oracle():
    a, p = -0.5, 2.5
    b = a / (1 - p)
    exact = 1 / ((a + 1) * (b + 1) ** (p - 1))
    q = arc_quotient(PowerWeight(a), p, Arc(0, 2.0**-10))
    assert q == pytest.approx(exact, rel=0.01)
    assert exact == pytest.approx(1.2990, abs=1e-4)


@pytest.mark.parametrize("s", [-1, -0.5, 0.5, 1])
def test_quotient_away_from_singularity_near_one(s):
    q = arc_quotient(PowerWeight(s), 3, Arc(2.0, 1e-3))
    assert 1 - 1e-9 <= q <= 2


def test_log_divergent_endpoint_grows():
    w8, w12 = (ap_supremum_estimate(PowerWeight(1, 2.0**-k), 2) for k in (8, 12))
    assert w12 / w8 >= 1.2


def test_inside_weight_stabilizes():
    w8, w14 = (ap_supremum_estimate(PowerWeight(0.4, 2.0**-k), 2) for k in (8, 14))
    assert w14 == pytest.approx(w8, rel=0.02)


def test_constant_weight_supremum():
    assert ap_supremum_estimate(PowerWeight(0), 3) == 1.0


@settings(max_examples=20, deadline=None)
@given(s=st.floats(-0.9, 0.9), p=st.floats(1.1, 5), c=st.floats(0, 2 * np.pi), h=st.floats(1e-4, np.pi))
def test_quotient_at_least_one(s, p, c, h):
    # Jensen: every A_p quotient is >= 1
    assert arc_quotient(PowerWeight(s, 1e-3), p, Arc(c, h)) >= 1 - 1e-9


def test_arc_validation():
    with pytest.raises(ValueError):
        Arc(0, 0)
    with pytest.raises(ValueError):
        Arc(0, 4)
    assert Arc(-1, 0.5).center == pytest.approx(2 * np.pi - 1)


@pytest.mark.parametrize("alpha,p", [(0.5, 6), (0.5, 1.2), (1, 6), (2, 6), (2, 1.2), (1, 2)])
def test_scan_slope_matches(alpha, p):
    r = ap_scan(alpha, p)
    assert r.matches(), (r.fitted_slope, r.predicted_slope)


def test_scan_endpoint_is_boundary():
    r = ap_scan(0.5, 4)
    assert r.verdict is Verdict.BOUNDARY and r.predicted_slope is None and r.matches()


def test_scan_ladder_validation():
    with pytest.raises(ValueError):
        ap_scan(0.5, 6, [0.1, 0.05, 0.01])
    with pytest.raises(ValueError):
        ap_scan(0.5, 6, [0.1, 0.2, 0.01, 0.001])


def test_fit_slope_exact_power():
    d = np.array(default_ladder())
    assert fit_slope(d, 3 * d**-0.7) == pytest.approx(-0.7, abs=1e-12)


def test_scan_threads_deterministic():
    a = ap_scan(1, 6, workers=1)
    b = ap_scan(1, 6, workers=4)
    assert a.ladder == b.ladder
