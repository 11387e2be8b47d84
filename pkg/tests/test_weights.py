import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from szegolab.circle import make_grid
from szegolab.weights import (
    PowerWeight, branch_log, chord, g_alpha, g_alpha_taylor, moment, moment_closed_form, moments, mu_alpha,
)


def test_branch_log_examples():
    assert branch_log(-1) == pytest.approx(1j * np.pi)
    assert branch_log(1j) == pytest.approx(1j * np.pi / 2)
    with pytest.raises(ValueError):
        branch_log(2)


def test_branch_log_argument_range():
    z = np.exp(1j * np.linspace(0.01, 2 * np.pi - 0.01, 101)) * 3
    arg = branch_log(z).imag
    assert np.all((arg > 0) & (arg < 2 * np.pi))


def test_g_alpha_examples():
    assert g_alpha(0, 0.5) == pytest.approx(1j)
    assert g_alpha(0, 1) == -1
    assert g_alpha(1j, 2) == pytest.approx(-2j)
    with pytest.raises(ValueError):
        g_alpha(1, 0.5)
    with pytest.raises(ValueError):
        g_alpha(0.2, -1)


def test_g_alpha_integer_power_exact():
    z = np.array([0.3 + 0.4j, -0.7j])
    assert np.array_equal(g_alpha(z, 3), (z - 1) ** 3)


@settings(max_examples=50, deadline=None)
@given(
    alpha=st.floats(0, 4),
    r=st.floats(0, 0.99),
    t=st.floats(0, 2 * np.pi),
)
def test_g_alpha_modulus(alpha, r, t):
    z = r * np.exp(1j * t)
    assert abs(g_alpha(z, alpha)) == pytest.approx(abs(z - 1) ** alpha, rel=1e-12, abs=1e-300)


def test_taylor_coefficients_match_g():
    gamma = g_alpha_taylor(0.5, 200)
    z = 0.3 - 0.2j
    assert np.polyval(gamma[::-1], z) == pytest.approx(g_alpha(z, 0.5), abs=1e-14)


def test_power_weight_examples():
    assert PowerWeight(1)(np.pi) == pytest.approx(2)
    assert PowerWeight(2)(np.pi / 2) == pytest.approx(2)
    with pytest.raises(ValueError):
        PowerWeight(-2)(0.0)
    assert PowerWeight(-2, 0.1)(0.0) == pytest.approx(chord(0.1) ** -2)


def test_power_weight_validation():
    with pytest.raises(ValueError):
        PowerWeight(float("nan"))
    with pytest.raises(ValueError):
        PowerWeight(1, -0.1)


def test_dual_weight():
    assert PowerWeight(-1, 0.2).dual(3) == PowerWeight(0.5, 0.2)


def test_mu_alpha_is_s_two_alpha():
    assert mu_alpha(0.75) == PowerWeight(1.5)


def test_moment_examples():
    g = make_grid(4096)
    assert moment(0, 0.5, g) == pytest.approx(8, abs=1e-4)
    assert moment(0, 1, g) == pytest.approx(4 * np.pi, abs=1e-10)
    assert moment(1, 1, g) == pytest.approx(-2 * np.pi, abs=1e-10)


def test_closed_form_examples():
    assert moment_closed_form(0, 0) == pytest.approx(2 * np.pi)
    assert moment_closed_form(2, 1) == pytest.approx(0, abs=1e-15)
    assert moment_closed_form(0, 0.5) == pytest.approx(2 * np.pi * math.gamma(2) / math.gamma(1.5) ** 2, abs=1e-12)
    assert moment_closed_form(0, 0.5) == pytest.approx(8, abs=1e-12)


def test_moments_match_closed_form_fine_grid():
    g = make_grid(2**16)
    k = np.arange(-8, 9)
    for a in (0.25, 1.5):
        assert np.allclose(moments(8, a, g), moment_closed_form(k, a), rtol=1e-5, atol=1e-9)


@settings(max_examples=25, deadline=None)
@given(k=st.integers(-20, 20), alpha=st.floats(0, 3))
def test_closed_form_even_in_k(k, alpha):
    assert moment_closed_form(k, alpha) == pytest.approx(moment_closed_form(-k, alpha), rel=1e-12, abs=1e-14)
