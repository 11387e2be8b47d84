import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from szegolab.circle import TWO_PI, BoundarySamples, FourierCoeffs, dft, eval_analytic_at, idft, make_grid, quad


def test_nodes_half_offset():
    assert np.allclose(make_grid(4).nodes, [np.pi / 4, 3 * np.pi / 4, 5 * np.pi / 4, 7 * np.pi / 4], atol=1e-15)
    assert np.allclose(make_grid(2).nodes, [np.pi / 2, 3 * np.pi / 2], atol=1e-15)


def test_grid_rejects_single_point():
    with pytest.raises(ValueError):
        make_grid(1)


def test_grid_never_hits_one():
    for n in (2, 3, 64, 4097):
        assert np.min(np.abs(make_grid(n).points - 1)) > 0


def test_quad_examples():
    g = make_grid(64)
    assert quad(g.samples(np.ones_like)) == pytest.approx(TWO_PI, abs=1e-14)
    assert abs(quad(g.samples(lambda t: np.exp(1j * t)))) <= 1e-14
    g = make_grid(4096)
    assert quad(g.samples(lambda t: 2 * np.abs(np.sin(t / 2)))).real == pytest.approx(8, abs=1e-4)


def test_samples_shape_checked():
    with pytest.raises(ValueError):
        BoundarySamples(make_grid(8), np.zeros(7))


def test_samples_are_read_only():
    f = make_grid(8).samples(np.ones_like)
    with pytest.raises(ValueError):
        f.values[0] = 2


def test_grid_mismatch_rejected():
    a, b = make_grid(8).samples(np.ones_like), make_grid(16).samples(np.ones_like)
    with pytest.raises(ValueError, match="grid mismatch"):
        a * b


def test_dft_single_mode():
    c = dft(make_grid(32).samples(lambda t: np.exp(1j * t)), 8)
    assert abs(c[1] - 1) <= 1e-13
    assert max(abs(c[k]) for k in range(-8, 9) if k != 1) <= 1e-13


def test_dft_linearity_example():
    c = dft(make_grid(32).samples(lambda t: 3 + 5j * np.exp(-2j * t)), 8)
    assert abs(c[0] - 3) <= 1e-13 and abs(c[-2] - 5j) <= 1e-13


def test_dft_cosine_example():
    c = dft(make_grid(32).samples(lambda t: 2 - 2 * np.cos(t)), 4)
    assert abs(c[0] - 2) <= 1e-13 and abs(c[1] + 1) <= 1e-13 and abs(c[-1] + 1) <= 1e-13


def test_dft_rejects_unresolved_modes():
    with pytest.raises(ValueError):
        dft(make_grid(8).samples(np.ones_like), 4)


def test_idft_examples():
    g = make_grid(4)
    assert np.allclose(idft(FourierCoeffs(0, [1.0]), g).values, 1)
    # node 1 of the 4-point grid sits at 3pi/4; use the 2-point grid for pi/2
    g2 = make_grid(2)
    assert idft(FourierCoeffs(1, [1.0]), g2).values[0] == pytest.approx(1j)


def test_fourier_coeffs_indexing():
    c = FourierCoeffs.from_dict({-2: 5j, 0: 3})
    assert c.min_mode == -2 and c.max_mode == 0
    assert c[-1] == 0 and c[7] == 0 and c[-2] == 5j


def test_eval_analytic_examples():
    assert eval_analytic_at(FourierCoeffs(0, [1, 0, 0]), 0.3 + 0.1j) == pytest.approx(1)
    assert eval_analytic_at(FourierCoeffs(0, -np.ones(201)), 0.5) == pytest.approx(-2, abs=1e-10)
    with pytest.raises(ValueError):
        eval_analytic_at(FourierCoeffs(-1, [1, 1]), 0.1)
    with pytest.raises(ValueError):
        eval_analytic_at(FourierCoeffs(0, [1]), 1.0)


@settings(max_examples=40, deadline=None)
@given(
    n=st.integers(4, 256),
    coeffs=st.lists(st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False), min_size=1, max_size=5),
    shift=st.integers(-3, 0),
)
def test_dft_inverts_idft(n, coeffs, shift):
    c = FourierCoeffs(shift, coeffs)
    m = (n - 1) // 2
    if max(abs(shift), c.max_mode) > m:
        return
    back = dft(idft(c, make_grid(n)), m)
    for k in c.modes:
        assert abs(back[k] - c[k]) <= 1e-12 * (1 + np.max(np.abs(coeffs)))


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 512))
def test_quad_constant_any_grid(n):
    assert quad(make_grid(n).samples(np.ones_like)) == pytest.approx(TWO_PI, rel=1e-14)
