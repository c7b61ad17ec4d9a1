import numpy as np
import pytest

from ghzw import qcore, states, witness

LAMBDA_BISEP_XI = 0.7236067977499789  # (1 + 1/sqrt(5)) / 2


def test_ghz_witness_self_expectation():
    for phi in (0.0, 0.9, np.pi):
        w = witness.ghz_witness(phi)
        assert abs(witness.expectation_pure(w, states.make_ghz(phi)) + 0.5) < 1e-12


def test_ghz_witness_on_other_states():
    w = witness.ghz_witness(0.0)
    assert abs(witness.expectation_pure(w, qcore.basis_ket(8, 0))) < 1e-12
    assert abs(witness.expectation_pure(w, states.make_w(0.3, 0.8)) - 0.5) < 1e-12


def test_w_witness_expectations():
    for gamma, beta in [(0.0, 0.0), (1.2, 2.7)]:
        w = witness.w_witness(gamma, beta)
        assert abs(witness.expectation_pure(w, states.make_w(gamma, beta)) + 1 / 3) < 1e-12
    w = witness.w_witness(0.0, 0.0)
    assert abs(witness.expectation_pure(w, states.make_ghz(0.7)) - 2 / 3) < 1e-12
    assert abs(witness.expectation_pure(w, qcore.basis_ket(8, 1)) - 1 / 3) < 1e-12


def test_expectation_matches_matrix_trace():
    w = witness.w_witness(0.4, 1.1)
    rho = states.mix([(0.6, states.make_xi()), (0.4, states.make_ghz(0.5))])
    direct = witness.expectation(w, rho)
    via_matrix = np.trace(w.matrix() @ rho).real
    assert abs(direct - via_matrix) < 1e-12


def test_witness_validation():
    with pytest.raises(ValueError):
        witness.Witness(np.ones(8), 0.5)
    with pytest.raises(ValueError):
        witness.Witness(states.make_ghz(0.0), 1.5)


def test_lambda_bound_analytic_constants():
    rng = np.random.default_rng(17)
    for _ in range(10):
        phi, gamma, beta = rng.uniform(0, 2 * np.pi, size=3)
        assert abs(witness.lambda_bound_analytic(states.make_ghz(phi)) - 0.5) < 1e-12
        assert abs(witness.lambda_bound_analytic(states.make_w(gamma, beta)) - 2 / 3) < 1e-12
    assert abs(witness.lambda_bound_analytic(qcore.basis_ket(8, 0)) - 1.0) < 1e-12
    assert abs(witness.lambda_bound_analytic(states.make_xi()) - LAMBDA_BISEP_XI) < 1e-9


def test_lambda_bound_stochastic_matches_analytic():
    assert abs(witness.lambda_bound_stochastic(states.make_ghz(0.0), seed=7) - 0.5) < 1e-6
    assert abs(witness.lambda_bound_stochastic(states.make_w(0.0, 0.0), seed=7) - 2 / 3) < 1e-6
    xi = states.make_xi()
    gap = witness.lambda_bound_stochastic(xi, seed=7) - witness.lambda_bound_analytic(xi)
    assert abs(gap) < 1e-6


def test_lambda_bound_stochastic_deterministic():
    psi = states.haar_random_pure(31)
    a = witness.lambda_bound_stochastic(psi, seed=5, restarts=8, iters=200)
    b = witness.lambda_bound_stochastic(psi, seed=5, restarts=8, iters=200)
    assert a == b


def test_lambda_bound_stochastic_validates_budget():
    with pytest.raises(ValueError):
        witness.lambda_bound_stochastic(states.make_ghz(0.0), seed=1, restarts=0)


def _random_biseparable(rng):
    """Random pure state product across a random cut."""
    solo = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    pair = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    solo /= np.linalg.norm(solo)
    pair /= np.linalg.norm(pair)
    slot = rng.integers(3)
    tens = np.tensordot(solo, pair.reshape(2, 2), axes=0)
    order = {0: (0, 1, 2), 1: (1, 0, 2), 2: (1, 2, 0)}[slot]
    return tens.transpose(order).reshape(8)


def test_custom_witness_nonnegative_on_biseparable_states():
    rng = np.random.default_rng(23)
    for seed in (2, 14, 37):
        w = witness.custom_witness(states.haar_random_pure(seed))
        for _ in range(200):
            sigma = qcore.outer(_random_biseparable(rng))
            assert witness.expectation(w, sigma) >= -1e-10


def test_custom_witness_detects_its_reference():
    # any genuinely entangled reference gives Lambda < 1, so the witness
    # is strictly negative on the reference itself
    for psi in (states.make_xi(), states.haar_random_pure(8)):
        w = witness.custom_witness(psi)
        assert witness.expectation_pure(w, psi) < 0.0
