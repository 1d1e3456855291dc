import json

import numpy as np
import pytest

from dualentropy import (DensityMatrix, PureState, StateValidationError,
                         partial_trace, permute_subsystems, purity,
                         random_density, random_pure, random_unitary,
                         reduced_state, schmidt, schmidt_spectrum, spectrum,
                         state_from_json, state_to_json, tensor, tensor_all)


def bell():
    return PureState(np.array([1, 0, 0, 1]) / np.sqrt(2), (2, 2))


def test_pure_state_validation():
    with pytest.raises(StateValidationError):
        PureState(np.array([1.0, 1.0]), (2,))
    with pytest.raises(StateValidationError):
        PureState(np.array([1.0, 0.0]), (3,))
    psi = PureState(np.array([1.0, 0.0]), (2,))
    assert psi.dim == 2


def test_density_validation():
    with pytest.raises(StateValidationError):
        DensityMatrix(np.eye(2), (2,))  # trace 2
    with pytest.raises(StateValidationError):
        DensityMatrix(np.array([[0.5, 0.5j], [0.5j, 0.5]]), (2,))  # not Hermitian
    with pytest.raises(StateValidationError):
        DensityMatrix(np.diag([1.5, -0.5]), (2,))  # not PSD
    rho = DensityMatrix(np.eye(4) / 4, (2, 2))
    assert rho.dim == 4


def test_tensor_dims_concatenate():
    a = PureState(np.array([1.0, 0.0]), (2,))
    b = PureState(np.array([0.0, 0.0, 1.0]), (3,))
    ab = tensor(a, b)
    assert ab.dims == (2, 3)
    assert ab.amplitudes[2] == 1.0
    rho = tensor(a.density(), b.density())
    assert rho.dims == (2, 3)
    assert abs(rho.matrix[2, 2] - 1.0) < 1e-14


def test_tensor_all_associative():
    rng = np.random.default_rng(11)
    parts = [random_pure((2,), rng) for _ in range(4)]
    left = tensor(tensor(tensor(parts[0], parts[1]), parts[2]), parts[3])
    assert np.allclose(tensor_all(parts).amplitudes, left.amplitudes)


def test_partial_trace_bell_is_maximally_mixed():
    rho_a = partial_trace(bell().density(), (0,))
    assert np.allclose(rho_a.matrix, np.eye(2) / 2, atol=1e-12)


def test_partial_trace_recovers_product_factors():
    rng = np.random.default_rng(5)
    for _ in range(20):
        a = random_density((2,), seed=rng)
        b = random_density((3,), seed=rng)
        ab = tensor(a, b)
        assert np.allclose(partial_trace(ab, (0,)).matrix, a.matrix, atol=1e-12)
        assert np.allclose(partial_trace(ab, (1,)).matrix, b.matrix, atol=1e-12)


def test_partial_trace_preserves_trace_and_hermiticity():
    rng = np.random.default_rng(7)
    for _ in range(20):
        rho = random_density((2, 3, 2), seed=rng)
        red = partial_trace(rho, (0, 2))
        assert red.dims == (2, 2)
        assert abs(np.trace(red.matrix) - 1.0) < 1e-12
        assert np.allclose(red.matrix, red.matrix.conj().T, atol=1e-12)


def test_reduced_state_matches_partial_trace():
    rng = np.random.default_rng(13)
    for _ in range(20):
        psi = random_pure((2, 3, 2), rng)
        for keep in [(0,), (1,), (2,), (0, 2), (1, 2)]:
            a = reduced_state(psi, keep)
            b = partial_trace(psi.density(), keep)
            assert np.allclose(a.matrix, b.matrix, atol=1e-12)


def test_permute_subsystems():
    a = PureState(np.array([1.0, 0.0]), (2,)).density()
    b = DensityMatrix(np.diag([0.0, 0.0, 1.0]), (3,))
    ab = tensor(a, b)
    ba = permute_subsystems(ab, [1, 0])
    assert ba.dims == (3, 2)
    assert np.allclose(ba.matrix, tensor(b, a).matrix, atol=1e-14)
    with pytest.raises(ValueError):
        permute_subsystems(ab, [0, 0])


def test_spectrum_basic():
    s = spectrum(DensityMatrix(np.eye(6) / 6, (6,)))
    assert np.allclose(s.values, np.full(6, 1 / 6), atol=1e-12)
    s = spectrum(bell().density())
    assert abs(s.values[0] - 1.0) < 1e-12
    assert np.all(np.diff(s.values) <= 0)


def test_spectrum_unitary_invariance():
    rng = np.random.default_rng(3)
    for _ in range(20):
        rho = random_density((4,), seed=rng)
        u = random_unitary(4, rng)
        rotated = DensityMatrix(u @ rho.matrix @ u.conj().T, (4,))
        assert np.allclose(spectrum(rho).values, spectrum(rotated).values,
                           atol=1e-10)


def test_schmidt_bell():
    dec = schmidt(bell(), (0,))
    assert np.allclose(dec.coefficients, [1 / np.sqrt(2)] * 2, atol=1e-12)
    assert np.allclose(dec.spectrum, [0.5, 0.5], atol=1e-12)
    lam = schmidt_spectrum(bell(), (0,))
    assert np.allclose(lam, [0.5, 0.5], atol=1e-12)


def test_schmidt_product_state_single_coefficient():
    psi = tensor(PureState(np.array([1.0, 0.0]), (2,)),
                 PureState(np.array([0.0, 1.0]), (2,)))
    lam = schmidt_spectrum(psi, (0,))
    assert abs(lam[0] - 1.0) < 1e-12
    assert np.all(lam[1:] < 1e-12)


def test_schmidt_reconstructs_state():
    rng = np.random.default_rng(17)
    for _ in range(10):
        psi = random_pure((3, 4), rng)
        dec = schmidt(psi, (0,))
        rebuilt = sum(c * np.kron(u, v) for c, u, v in
                      zip(dec.coefficients, dec.left_basis, dec.right_basis))
        # SVD phases are free; compare projectors instead of amplitudes
        assert np.allclose(np.outer(rebuilt, rebuilt.conj()),
                           psi.density().matrix, atol=1e-10)


def test_schmidt_symmetry_both_marginals():
    rng = np.random.default_rng(23)
    for _ in range(30):
        psi = random_pure((3, 5), rng)
        la = np.sort(spectrum(reduced_state(psi, (0,))).values)[::-1]
        lam = np.sort(schmidt_spectrum(psi, (0,)))[::-1]
        assert np.allclose(lam[:3], la, atol=1e-8)


def test_purity():
    assert abs(purity(bell().density()) - 1.0) < 1e-12
    assert abs(purity(DensityMatrix(np.eye(4) / 4, (4,))) - 0.25) < 1e-12
    rho = DensityMatrix(np.diag([0.5, 0.25, 0.25]), (3,))
    assert abs(purity(rho) - 0.375) < 1e-12


def test_random_states_deterministic_and_valid():
    a = random_pure((2, 3), 42)
    b = random_pure((2, 3), 42)
    assert np.allclose(a.amplitudes, b.amplitudes)
    rho = random_density((2, 2), rank=2, seed=9)
    assert np.sum(spectrum(rho).values > 1e-10) == 2
    r1 = random_density((2, 2), rank=1, seed=1)
    assert abs(purity(r1) - 1.0) < 1e-10
    with pytest.raises(ValueError):
        random_density((2,), rank=3, seed=0)


def test_random_unitary_is_unitary():
    rng = np.random.default_rng(31)
    for d in (2, 3, 5):
        u = random_unitary(d, rng)
        assert np.allclose(u @ u.conj().T, np.eye(d), atol=1e-12)


def test_json_round_trip():
    psi = random_pure((2, 3), 0)
    back = state_from_json(json.loads(json.dumps(state_to_json(psi))))
    assert isinstance(back, PureState)
    assert back.dims == psi.dims
    assert np.allclose(back.amplitudes, psi.amplitudes)
    rho = random_density((2, 2), seed=1)
    back = state_from_json(state_to_json(rho))
    assert isinstance(back, DensityMatrix)
    assert np.allclose(back.matrix, rho.matrix)


def test_json_bad_payload_length():
    obj = state_to_json(random_pure((2, 2), 0))
    obj["re"] = obj["re"][:-1]
    obj["im"] = obj["im"][:-1]
    with pytest.raises(StateValidationError):
        state_from_json(obj)
