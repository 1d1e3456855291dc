import numpy as np
import pytest

from dualentropy import (Bipartition, DensityMatrix, PureState, RoofConfig,
                         average_measure, concurrence_two_qubit, convex_roof,
                         e_t_pure, e_t_two_qubit, eof_pure, eof_two_qubit, h,
                         hjw_ensemble, random_density, random_pure, tensor)

BIP22 = Bipartition.of((2, 2), (0,))


def bell_density():
    return PureState(np.array([1, 0, 0, 1]) / np.sqrt(2), (2, 2)).density()


def test_hjw_identity_isometry_is_eigendecomposition():
    rho = random_density((2, 2), rank=3, seed=0)
    lam = np.sort(np.linalg.eigvalsh(rho.matrix))[::-1][:3]
    ens = hjw_ensemble(rho, np.eye(3))
    assert np.allclose(np.sort(ens.weights)[::-1], lam, atol=1e-10)
    assert np.allclose(ens.reconstruct(), rho.matrix, atol=1e-10)


def test_hjw_rejects_bad_isometries():
    rho = random_density((2, 2), rank=2, seed=1)
    with pytest.raises(ValueError):
        hjw_ensemble(rho, np.ones((2, 2)))
    with pytest.raises(ValueError):
        hjw_ensemble(rho, np.eye(1))


def test_hjw_reconstruction_for_random_isometries():
    from dualentropy.convexroof import _random_isometry
    rng = np.random.default_rng(2)
    for _ in range(20):
        rank = int(rng.integers(2, 5))
        m = int(rng.integers(rank, 9))
        rho = random_density((2, 2), rank=rank, seed=rng)
        ens = hjw_ensemble(rho, _random_isometry(m, rank, rng))
        assert abs(np.sum(ens.weights) - 1.0) < 1e-10
        assert np.allclose(ens.reconstruct(), rho.matrix, atol=1e-8)


def test_average_measure_of_pure_state():
    ens = hjw_ensemble(bell_density(), np.eye(1))
    assert abs(average_measure(ens, BIP22, e_t_pure) - 1.0) < 1e-12


def test_roof_pure_state_is_exact():
    res = convex_roof(bell_density(), BIP22, e_t_pure)
    assert res.converged
    assert abs(res.value - 1.0) < 1e-12
    assert res.restart_values == (res.value,)


def test_roof_separable_state_is_zero():
    up = PureState([1, 0], (2,))
    down = PureState([0, 1], (2,))
    m = 0.5 * tensor(up, up).density().matrix + 0.5 * tensor(down, down).density().matrix
    rho = DensityMatrix(m, (2, 2))
    res = convex_roof(rho, BIP22, e_t_pure, RoofConfig(restarts=8, seed=3))
    assert res.value < 1e-6


def test_roof_matches_two_qubit_analytic():
    rng = np.random.default_rng(4)
    cfg = RoofConfig(restarts=20, max_iters=150, seed=5)
    for _ in range(5):
        rho = random_density((2, 2), rank=2, seed=rng)
        res = convex_roof(rho, BIP22, e_t_pure, cfg)
        exact = e_t_two_qubit(rho)
        assert res.value >= exact - 1e-9      # always an upper bound
        assert abs(res.value - exact) < 1e-3


def test_roof_eof_matches_two_qubit_analytic():
    rho = random_density((2, 2), rank=2, seed=6)
    res = convex_roof(rho, BIP22, eof_pure, RoofConfig(restarts=20, seed=7))
    assert abs(res.value - eof_two_qubit(rho)) < 1e-3


def test_roof_never_beats_eigendecomposition_start():
    rng = np.random.default_rng(8)
    for _ in range(5):
        rho = random_density((2, 2), rank=2, seed=rng)
        start = average_measure(hjw_ensemble(rho, np.eye(2)), BIP22, e_t_pure)
        res = convex_roof(rho, BIP22, e_t_pure, RoofConfig(restarts=5, seed=9))
        assert res.value <= start + 1e-12


def test_roof_deterministic_per_seed():
    rho = random_density((2, 2), rank=2, seed=10)
    cfg = RoofConfig(restarts=5, max_iters=60, seed=11)
    a = convex_roof(rho, BIP22, e_t_pure, cfg)
    b = convex_roof(rho, BIP22, e_t_pure, cfg)
    assert a.value == b.value
    assert a.restart_values == b.restart_values
    assert len(a.restart_values) == 5
    assert min(a.restart_values) == a.value


def test_roof_result_to_dict():
    res = convex_roof(bell_density(), BIP22, e_t_pure)
    d = res.to_dict()
    assert set(d) >= {"value", "converged", "iterations_used", "weights",
                      "restart_values"}
