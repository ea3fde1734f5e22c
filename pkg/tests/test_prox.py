import logging

import numpy as np
import pytest

from rmln_completion.exceptions import DimensionMismatchError, SolverConfigError
from rmln_completion.solver.prox import (
    ProxParams,
    _check_ordering,
    dc_shrink,
    dc_singular_update,
    prox_rmln,
    scalar_objective,
    svt_prox,
)
from rmln_completion.spectral import reconstruct, singular_values, svd
from rmln_completion.surrogate import SurrogateParams, WeightStrategy, compute_weights


def _prox(eta, weights, params, inner_iters=5):
    return ProxParams(eta=eta, weights=np.atleast_1d(weights), surrogate=params, inner_iters=inner_iters)


def test_dc_update_examples(reference_params):
    linear = SurrogateParams(p=1.0, eps=1.0, gamma=10.0, c=1e-8)
    assert dc_singular_update(10.0, 10.0, 1.0, _prox(1.0, 1.0, linear)) == pytest.approx(
        10.0 - 1.0 / 11.0, abs=1e-12
    )
    assert dc_singular_update(7.5, 3.0, 2.0, _prox(0.0, 2.0, reference_params)) == 7.5
    assert dc_singular_update(0.0, 4.0, 1.0, _prox(5.0, 1.0, reference_params)) == 0.0


def test_zero_iterate_is_absorbing_below_p_one(reference_params):
    assert dc_singular_update(50.0, 0.0, 1.0, _prox(1.0, 1.0, reference_params)) == 0.0
    linear = SurrogateParams(p=1.0, eps=2.0)
    # p = 1: the slope at zero is finite, 1 / eps
    assert dc_singular_update(5.0, 0.0, 1.0, _prox(2.0, 1.0, linear)) == pytest.approx(4.0)


def test_dc_update_rejects_negative_inputs(reference_params):
    with pytest.raises(SolverConfigError):
        dc_singular_update(-1.0, 1.0, 1.0, _prox(1.0, 1.0, reference_params))


def test_dc_steps_never_increase_the_scalar_objective(reference_params):
    gen = np.random.default_rng(11)
    n = 1000
    sigma_y = gen.uniform(0.0, 60.0, n)
    sigma = gen.uniform(1e-3, 60.0, n)
    weights = gen.uniform(0.5, 10.0, n)
    etas = 10.0 ** gen.uniform(-2.0, 3.0, n)

    for i in range(n):
        prox = _prox(etas[i], weights[i], reference_params)
        current = sigma[i]
        f_prev = scalar_objective(current, sigma_y[i], weights[i], etas[i], reference_params)
        for _ in range(5):
            current = dc_singular_update(sigma_y[i], current, weights[i], prox)
            f_next = scalar_objective(current, sigma_y[i], weights[i], etas[i], reference_params)
            assert f_next <= f_prev + 1e-10 * max(1.0, abs(f_prev)), (
                f"objective rose on instance {i}: {f_prev} -> {f_next}"
            )
            f_prev = f_next


def test_prox_zero_penalty_is_identity(rng, reference_params):
    y = rng.standard_normal((6, 4)) * 30
    s = singular_values(y)
    out, sigma = prox_rmln(y, _prox(0.0, np.ones(4), reference_params), s)
    assert np.allclose(out, y, atol=1e-8)
    assert np.allclose(sigma, s)


def test_prox_of_zero_matrix_is_zero(reference_params):
    out, sigma = prox_rmln(np.zeros((4, 5)), _prox(3.0, np.ones(4), reference_params), np.zeros(4))
    assert np.array_equal(out, np.zeros((4, 5)))
    assert np.array_equal(sigma, np.zeros(4))


@pytest.mark.parametrize("eta", [0.1, 1.0, 10.0])
def test_prox_matches_grid_search(reference_params, eta):
    gen = np.random.default_rng(int(eta * 100))
    for trial in range(50):
        y = gen.standard_normal((5, 5)) * 3.0
        s_y = singular_values(y)
        w = compute_weights(s_y, reference_params, WeightStrategy.REWEIGHTED)
        _, sigma = prox_rmln(y, _prox(eta, w, reference_params), s_y)

        for i in range(5):
            grid = np.arange(0.0, 2.0 * s_y[i] + 1e-4, 1e-4)
            best = scalar_objective(grid, s_y[i], w[i], eta, reference_params).min()
            attained = scalar_objective(sigma[i], s_y[i], w[i], eta, reference_params)
            assert attained <= best + 1e-2, (
                f"trial {trial}, value {i}: objective {attained} vs grid minimum {best}"
            )


def _global_minimum(s_y, w, eta, params):
    coarse = np.linspace(0.0, 2.0 * s_y, 200_001)
    values = scalar_objective(coarse, s_y, w, eta, params)
    centre = coarse[values.argmin()]
    fine = np.arange(max(centre - 0.1, 0.0), centre + 0.1, 1e-4)
    return min(values.min(), scalar_objective(fine, s_y, w, eta, params).min())


def test_prox_matches_grid_search_at_pixel_scale(reference_params):
    gen = np.random.default_rng(7)
    target = np.array([3000.0, 900.0, 300.0, 20.0, 5.0])
    q1, _ = np.linalg.qr(gen.standard_normal((5, 5)))
    q2, _ = np.linalg.qr(gen.standard_normal((7, 5)))
    y = (q1 * target) @ q2.T
    s_y = singular_values(y)
    w = compute_weights(s_y, reference_params, WeightStrategy.REWEIGHTED)
    eta = 1e4
    _, sigma = prox_rmln(y, _prox(eta, w, reference_params), s_y)

    # eta * w * slope(2 sigma_y) > sigma_y for the two smallest values: the objective
    # increases on (0, 2 sigma_y] and both collapse in the first step
    assert np.array_equal(sigma[3:], np.zeros(2))
    assert np.all(sigma[:3] > 0.9 * s_y[:3])
    for i in range(5):
        best = _global_minimum(s_y[i], w[i], eta, reference_params)
        attained = scalar_objective(sigma[i], s_y[i], w[i], eta, reference_params)
        assert attained <= best + 1e-6, f"value {i}: objective {attained} vs grid minimum {best}"


def test_dc_steps_can_stop_on_a_positive_branch(reference_params):
    # Nonconvex regime: a positive stationary point survives while zero is the
    # global minimum, and descent from sigma_y cannot cross the barrier
    sigma_y, eta = 10.0, 8900.0
    prox = _prox(eta, 1.0, reference_params)
    sigma = sigma_y
    for _ in range(5):
        sigma = dc_singular_update(sigma_y, sigma, 1.0, prox)
    assert sigma == pytest.approx(2.8314, abs=1e-3)

    limit = sigma
    for _ in range(500):
        limit = dc_singular_update(sigma_y, limit, 1.0, prox)
    assert limit == pytest.approx(2.7512, abs=1e-3)

    at_zero = scalar_objective(0.0, sigma_y, 1.0, eta, reference_params)
    attained = scalar_objective(sigma, sigma_y, 1.0, eta, reference_params)
    assert _global_minimum(sigma_y, 1.0, eta, reference_params) == pytest.approx(at_zero)
    assert 1.0 < attained - at_zero < 1.5


def test_prox_shrinks_and_keeps_singular_vectors(rng, reference_params):
    y = rng.standard_normal((8, 6)) * 200
    f = svd(y)
    w = compute_weights(f.singular_values, reference_params, WeightStrategy.REWEIGHTED)
    out, sigma = prox_rmln(y, _prox(5e3, w, reference_params), f.singular_values)

    assert np.all(sigma <= f.singular_values + 1e-12)
    assert np.all(np.diff(sigma) <= 1e-9), "reweighted shrinkage must keep the ordering"
    assert np.allclose(reconstruct(f.with_singular_values(sigma)), out, atol=1e-8)


def test_zero_seeds_restart_from_the_center(rng, reference_params):
    y = rng.standard_normal((5, 7)) * 40
    s_y = singular_values(y)
    w = compute_weights(s_y, reference_params, WeightStrategy.REWEIGHTED)
    prox = _prox(50.0, w, reference_params)

    from_zero, _ = prox_rmln(y, prox, np.zeros(5))
    from_center, _ = prox_rmln(y, prox, s_y)
    assert np.allclose(from_zero, from_center, atol=1e-9)


def test_prox_rejects_wrong_lengths(rng, reference_params):
    y = rng.standard_normal((4, 6))
    with pytest.raises(DimensionMismatchError):
        prox_rmln(y, _prox(1.0, np.ones(4), reference_params), np.ones(3))
    with pytest.raises(DimensionMismatchError):
        prox_rmln(y, _prox(1.0, np.ones(6), reference_params), np.ones(4))


def test_prox_params_validation(reference_params):
    with pytest.raises(SolverConfigError):
        _prox(-1.0, 1.0, reference_params)
    with pytest.raises(SolverConfigError):
        _prox(1.0, [1.0, 0.0], reference_params)
    with pytest.raises(SolverConfigError):
        _prox(1.0, 1.0, reference_params, inner_iters=0)


def test_out_of_order_values_are_reported(caplog):
    with caplog.at_level(logging.WARNING, logger="rmln_completion.solver.prox"):
        _check_ordering(np.array([1.0, 5.0, 0.0]))
    assert "not non-increasing" in caplog.text


def test_dc_shrink_is_elementwise(reference_params):
    sy = np.array([100.0, 40.0, 0.0])
    sp = np.array([100.0, 0.0, 3.0])
    w = np.array([2.0, 2.0, 2.0])
    out = dc_shrink(sy, sp, w, 1e3, reference_params)
    for i in range(3):
        prox = _prox(1e3, w[i], reference_params)
        assert out[i] == pytest.approx(dc_singular_update(sy[i], sp[i], w[i], prox), rel=1e-14)


def test_svt_prox(rng):
    y = rng.standard_normal((5, 4))
    s = singular_values(y)

    zero, sigma = svt_prox(y, s[0])
    assert np.allclose(zero, 0.0, atol=1e-12)
    assert np.array_equal(sigma, np.zeros(4))

    same, _ = svt_prox(y, 0.0)
    assert np.allclose(same, y, atol=1e-10)

    _, shrunk = svt_prox(y, s[2])
    assert np.allclose(shrunk, np.maximum(s - s[2], 0.0))

    with pytest.raises(SolverConfigError):
        svt_prox(y, -1.0)
