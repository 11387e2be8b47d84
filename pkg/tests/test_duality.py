import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from szegolab.circle import TWO_PI, BoundarySamples, make_grid
from szegolab.duality import (
    dual_representative, hoelder_margin, pairing, random_test_function, representation_check, selfadjoint_residual,
)
from szegolab.weights import chord


def trig(grid, rng, degree):
    k = np.arange(-degree, degree + 1)
    c = rng.standard_normal(k.size) + 1j * rng.standard_normal(k.size)
    return BoundarySamples(grid, np.exp(1j * np.outer(grid.nodes, k)) @ c)


G = make_grid(4096)
ONE = G.samples(np.ones_like)
WBAR = G.samples(lambda t: np.exp(-1j * t))


def test_pairing_examples():
    assert pairing(ONE, ONE, 1) == pytest.approx(4 * np.pi, abs=1e-10)
    assert pairing(ONE, WBAR, 1) == pytest.approx(-2 * np.pi, abs=1e-10)
    assert pairing(ONE, ONE, 0) == pytest.approx(2 * np.pi, abs=1e-12)


def test_pairing_grid_mismatch():
    with pytest.raises(ValueError):
        pairing(ONE, make_grid(16).samples(np.ones_like), 1)


def test_hoelder_examples():
    assert hoelder_margin(ONE, ONE, 1, 2) == pytest.approx(0, abs=1e-9)
    assert hoelder_margin(ONE, WBAR, 1, 2) == pytest.approx(2 * np.pi, abs=1e-8)
    with pytest.raises(ValueError):
        hoelder_margin(ONE, ONE, 1, 1)


def test_hoelder_equality_case():
    rng = np.random.default_rng(0)
    g = make_grid(512)
    u = np.abs(rng.standard_normal(512)) + 0.1
    d = chord(g.nodes)
    p = 3.0
    f = BoundarySamples(g, u / d**0.5)
    h = BoundarySamples(g, u ** (p - 1) / d**0.5)
    assert abs(hoelder_margin(f, h, 0.5, p)) <= 1e-9 * max(1.0, abs(pairing(f, h, 0.5)))


@settings(max_examples=30, deadline=None)
@given(
    seed=st.integers(0, 2**32 - 1),
    alpha=st.sampled_from([0, 0.25, 0.5, 1, 2]),
    p=st.floats(1.05, 8),
)
def test_hoelder_never_negative(seed, alpha, p):
    rng = np.random.default_rng(seed)
    g = make_grid(128)
    f = BoundarySamples(g, rng.standard_normal(128) + 1j * rng.standard_normal(128))
    h = BoundarySamples(g, rng.standard_normal(128) + 1j * rng.standard_normal(128))
    assert hoelder_margin(f, h, alpha, p) >= -1e-10


def test_selfadjoint_explicit_instance():
    assert selfadjoint_residual(ONE, WBAR, 1) <= 1e-8
    rep = dual_representative(WBAR, 1).trace(G)
    assert pairing(ONE, rep, 1) == pytest.approx(-2 * np.pi, abs=1e-8)


@pytest.mark.parametrize("alpha,tol", [(0, 1e-9), (0.5, 1e-7), (1.5, 1e-7)])
def test_selfadjoint_random(alpha, tol):
    rng = np.random.default_rng(11)
    f, h = trig(G, rng, 16), trig(G, rng, 16)
    assert selfadjoint_residual(f, h, alpha) <= tol


def test_selfadjoint_interior_circle_is_less_accurate():
    # pairing on r < 1 mixes in an O(1 - r) radial error; the boundary route avoids it
    interior = selfadjoint_residual(ONE, WBAR, 1, radius=1 - 2.0**-12)
    assert interior > 1e-4 and selfadjoint_residual(ONE, WBAR, 1) < 1e-10


def test_dual_representative_examples():
    assert dual_representative(WBAR, 1)(0.5) == pytest.approx(-2, abs=1e-8)
    rep = dual_representative(WBAR, 1)
    # stored as h / g with h = 1; as a power series 1/(z - 1) = -(1 + z + z^2 + ...)
    assert np.allclose(rep.coeffs.coeffs[:5], [1, 0, 0, 0, 0], atol=1e-10)
    z = np.array([0.1, -0.3j])
    assert np.allclose(rep(z), -np.polyval(np.ones(400), z), atol=1e-12)
    z3 = G.samples(lambda t: np.exp(3j * t))
    assert dual_representative(z3, 1)(0.4) == pytest.approx(0.064, abs=1e-12)
    # non-integer alpha: the discrete route aliases the kink of g at order N**(-1 - alpha)
    assert dual_representative(z3, 0.5)(0.4) == pytest.approx(0.064, abs=4096**-1.5)
    w2 = G.samples(lambda t: np.exp(-2j * t))
    assert np.max(np.abs(dual_representative(w2, 1).coeffs.coeffs)) <= 1e-10


def test_representation_examples():
    r = representation_check(WBAR, 1, 2)
    assert r.passed and r.max_residual <= 1e-7
    rng = np.random.default_rng(5)
    h = trig(G, rng, 16)
    assert representation_check(h, 0.5, 3).max_residual <= 1e-6
    assert representation_check(h, 0.5, 2, normalization="rescaled").max_residual <= 1e-6


def test_representation_report_json_keys():
    d = representation_check(WBAR, 1, 2, n_tests=2).to_dict()
    assert set(d) >= {"alpha", "p", "max_residual", "n_tests", "seed", "pass"}


def test_representation_validation():
    with pytest.raises(ValueError):
        representation_check(WBAR, 1, 1)
    with pytest.raises(ValueError):
        representation_check(WBAR, 1, 2, normalization="odd")


def test_random_test_function_is_weighted_holomorphic():
    rng = np.random.default_rng(2)
    f = random_test_function(make_grid(256), 0.5, rng, degree=4)
    # projecting an element of the range is the identity
    from szegolab.szego import project_weighted

    back = project_weighted(f, 0.5, "discrete").trace(f.grid)
    assert np.max(np.abs(back.values - f.values)) <= 1e-8 * np.max(np.abs(f.values))
    assert math.isfinite(TWO_PI)
