"""State containers and linear-algebra primitives.

Pure states and density matrices carry an explicit subsystem-dimension
signature ``dims``; subsystem 0 is the leftmost tensor factor in row-major
ordering. All containers are immutable after construction and every
operation is a pure function, so everything here is safe to call from
concurrent workers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

HERMITICITY_TOL = 1e-10
TRACE_TOL = 1e-10
NORM_TOL = 1e-10
PSD_TOL = 1e-10
SPECTRUM_SUM_TOL = 1e-8
EIG_CLAMP = 1e-10


class StateValidationError(ValueError):
    """Raised when a state container violates its invariants."""


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=complex)
    a.setflags(write=False)
    return a


def _check_dims(dims: Sequence[int], size: int) -> tuple[int, ...]:
    dims = tuple(int(d) for d in dims)
    if not dims or any(d < 1 for d in dims):
        raise StateValidationError(f"invalid subsystem dimensions {dims}")
    if int(np.prod(dims)) != size:
        raise StateValidationError(
            f"product of dims {dims} does not match size {size}")
    return dims


@dataclass(frozen=True)
class PureState:
    """Normalized complex amplitude vector over a tensor-product space."""

    amplitudes: np.ndarray
    dims: tuple[int, ...]

    def __post_init__(self):
        amps = _freeze(np.ravel(self.amplitudes))
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "dims", _check_dims(self.dims, amps.size))
        norm = np.linalg.norm(amps)
        if abs(norm * norm - 1.0) > NORM_TOL:
            raise StateValidationError(f"state not normalized: |psi|^2 = {norm**2}")

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    def density(self) -> "DensityMatrix":
        v = self.amplitudes
        return DensityMatrix(np.outer(v, v.conj()), self.dims)


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, PSD, unit-trace operator with a subsystem signature."""

    matrix: np.ndarray
    dims: tuple[int, ...]

    def __post_init__(self):
        m = _freeze(self.matrix)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise StateValidationError(f"matrix must be square, got {m.shape}")
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "dims", _check_dims(self.dims, m.shape[0]))
        if np.max(np.abs(m - m.conj().T)) > HERMITICITY_TOL:
            raise StateValidationError("matrix is not Hermitian")
        if abs(np.trace(m).real - 1.0) > TRACE_TOL:
            raise StateValidationError(f"trace is {np.trace(m).real}, expected 1")
        w = np.linalg.eigvalsh(m)
        if w.min() < -PSD_TOL:
            raise StateValidationError(f"negative eigenvalue {w.min()}")

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalue probability vector, clamped to [0, 1] and descending."""

    values: np.ndarray

    def __post_init__(self):
        v = np.array(self.values, dtype=float)
        v.setflags(write=False)
        object.__setattr__(self, "values", v)
        if v.min() < 0 or v.max() > 1:
            raise StateValidationError("spectrum values outside [0, 1]")
        if abs(v.sum() - 1.0) > SPECTRUM_SUM_TOL:
            raise StateValidationError(f"spectrum sums to {v.sum()}")
        if np.any(np.diff(v) > 0):
            raise StateValidationError("spectrum not in descending order")


@dataclass(frozen=True)
class SchmidtDecomposition:
    """Canonical bipartite form: nonincreasing coefficients and orthonormal bases."""

    coefficients: np.ndarray
    left_basis: np.ndarray   # shape (k, dim_a), rows are vectors
    right_basis: np.ndarray  # shape (k, dim_b)

    def __post_init__(self):
        c = np.array(self.coefficients, dtype=float)
        c.setflags(write=False)
        object.__setattr__(self, "coefficients", c)
        object.__setattr__(self, "left_basis", _freeze(self.left_basis))
        object.__setattr__(self, "right_basis", _freeze(self.right_basis))

    @property
    def spectrum(self) -> np.ndarray:
        """Squared coefficients: the shared marginal spectrum."""
        return self.coefficients ** 2


def tensor(a, b):
    """Kronecker product of two states of the same kind.

    The result's ``dims`` is the concatenation of the operand dims.
    """
    if isinstance(a, PureState) and isinstance(b, PureState):
        return PureState(np.kron(a.amplitudes, b.amplitudes), a.dims + b.dims)
    if isinstance(a, DensityMatrix) and isinstance(b, DensityMatrix):
        return DensityMatrix(np.kron(a.matrix, b.matrix), a.dims + b.dims)
    raise TypeError("tensor requires two PureState or two DensityMatrix operands")


def tensor_all(states: Iterable):
    return reduce(tensor, states)


def _keep_indices(dims: tuple[int, ...], keep) -> tuple[int, ...]:
    keep = tuple(sorted(set(int(k) for k in keep)))
    if not keep:
        raise ValueError("keep set must be nonempty")
    if keep[0] < 0 or keep[-1] >= len(dims):
        raise IndexError(f"subsystem index out of range for dims {dims}: {keep}")
    return keep


def partial_trace(rho: DensityMatrix, keep) -> DensityMatrix:
    """Reduced density matrix on the kept subsystems (ascending index order)."""
    dims = rho.dims
    n = len(dims)
    keep = _keep_indices(dims, keep)
    keep_set = set(keep)
    t = rho.matrix.reshape(dims + dims)
    row = list(range(n))
    col = [n + i if i in keep_set else i for i in range(n)]
    out = [i for i in keep] + [n + i for i in keep]
    red = np.einsum(t, row + col, out)
    d = int(np.prod([dims[i] for i in keep]))
    return DensityMatrix(red.reshape(d, d), tuple(dims[i] for i in keep))


def reduced_state(psi: PureState, keep) -> DensityMatrix:
    """Marginal of a pure state without forming the global density matrix."""
    dims = psi.dims
    n = len(dims)
    keep = _keep_indices(dims, keep)
    rest = [i for i in range(n) if i not in keep]
    if not rest:
        return psi.density()
    m = psi.amplitudes.reshape(dims).transpose(list(keep) + rest)
    da = int(np.prod([dims[i] for i in keep]))
    m = m.reshape(da, -1)
    return DensityMatrix(m @ m.conj().T, tuple(dims[i] for i in keep))


def permute_subsystems(rho: DensityMatrix, perm: Sequence[int]) -> DensityMatrix:
    """Reorder tensor factors; ``perm[k]`` is the old index placed at slot k."""
    dims = rho.dims
    n = len(dims)
    perm = list(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"not a permutation of {n} subsystems: {perm}")
    t = rho.matrix.reshape(dims + dims)
    t = t.transpose(perm + [n + p for p in perm])
    d = rho.dim
    return DensityMatrix(t.reshape(d, d), tuple(dims[p] for p in perm))


def spectrum(rho: DensityMatrix) -> Spectrum:
    """Full eigenvalue spectrum, clamped to [0, 1], descending, renormalized.

    Eigenvalues in [-EIG_CLAMP, 0) and (1, 1 + EIG_CLAMP] are clamped to the
    nearest endpoint; larger excursions raise ``StateValidationError``.
    """
    w = np.linalg.eigvalsh(rho.matrix)
    if w.min() < -EIG_CLAMP or w.max() > 1 + EIG_CLAMP:
        raise StateValidationError(f"eigenvalues outside [0,1]: [{w.min()}, {w.max()}]")
    w = np.clip(w, 0.0, 1.0)
    s = w.sum()
    if abs(s - 1.0) > SPECTRUM_SUM_TOL:
        raise StateValidationError(f"eigenvalue sum {s} too far from 1")
    return Spectrum(np.sort(w / s)[::-1])


def schmidt(psi: PureState, side_a) -> SchmidtDecomposition:
    """Schmidt decomposition of ``psi`` across the cut (side_a | complement)."""
    dims = psi.dims
    n = len(dims)
    side_a = _keep_indices(dims, side_a)
    side_b = [i for i in range(n) if i not in side_a]
    if not side_b:
        raise ValueError("side_a must be a proper subset of the subsystems")
    da = int(np.prod([dims[i] for i in side_a]))
    m = psi.amplitudes.reshape(dims).transpose(list(side_a) + side_b).reshape(da, -1)
    u, s, vh = np.linalg.svd(m, full_matrices=False)
    return SchmidtDecomposition(s, u.T, vh)


def schmidt_spectrum(psi: PureState, side_a) -> np.ndarray:
    """Squared Schmidt coefficients: the spectrum of either marginal."""
    dims = psi.dims
    n = len(dims)
    side_a = _keep_indices(dims, side_a)
    side_b = [i for i in range(n) if i not in side_a]
    if not side_b:
        raise ValueError("side_a must be a proper subset of the subsystems")
    da = int(np.prod([dims[i] for i in side_a]))
    m = psi.amplitudes.reshape(dims).transpose(list(side_a) + side_b).reshape(da, -1)
    s = np.linalg.svd(m, compute_uv=False)
    return s ** 2


def purity(rho: DensityMatrix) -> float:
    """Tr(rho^2)."""
    m = rho.matrix
    return float(np.real(np.sum(m * m.T)))


def random_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary via QR of a complex-Gaussian matrix."""
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    ph = np.diagonal(r).copy()
    ph = ph / np.abs(ph)
    return q * ph


def random_pure(dims, seed=None) -> PureState:
    """Haar-style random pure state; deterministic for a fixed seed."""
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    d = int(np.prod(tuple(dims)))
    v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return PureState(v / np.linalg.norm(v), tuple(dims))


def random_density(dims, rank=None, seed=None) -> DensityMatrix:
    """Random mixed state of bounded rank from a traced-out purification."""
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    dims = tuple(dims)
    d = int(np.prod(dims))
    if rank is None:
        rank = d
    rank = int(rank)
    if not 1 <= rank <= d:
        raise ValueError(f"rank must be in [1, {d}], got {rank}")
    v = rng.standard_normal((d, rank)) + 1j * rng.standard_normal((d, rank))
    v /= np.linalg.norm(v)
    return DensityMatrix(v @ v.conj().T, dims)


# --- JSON wire format: {dims: [int], re: [float], im: [float]} ------------

def state_to_json(state) -> dict:
    if isinstance(state, PureState):
        flat = state.amplitudes
    elif isinstance(state, DensityMatrix):
        flat = state.matrix.ravel()
    else:
        raise TypeError(f"cannot serialize {type(state)}")
    return {
        "dims": list(state.dims),
        "re": flat.real.tolist(),
        "im": flat.imag.tolist(),
    }


def state_from_json(obj: dict):
    """Rebuild a state; pure vs density is inferred from the payload length."""
    dims = tuple(int(d) for d in obj["dims"])
    flat = np.array(obj["re"], dtype=float) + 1j * np.array(obj["im"], dtype=float)
    d = int(np.prod(dims))
    if flat.size == d:
        return PureState(flat, dims)
    if flat.size == d * d:
        return DensityMatrix(flat.reshape(d, d), dims)
    raise StateValidationError(
        f"payload length {flat.size} matches neither vector ({d}) nor matrix ({d*d})")


def load_state(path):
    with open(path) as fh:
        return state_from_json(json.load(fh))


def dump_state(state, path) -> None:
    with open(path, "w") as fh:
        json.dump(state_to_json(state), fh)
