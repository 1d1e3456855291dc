"""Bipartite entanglement measures.

Pure-state measures built on the marginal spectrum (total-entropy
entanglement E_t, entanglement of formation, the one-parameter Tsallis
variant), the concurrence, and the analytic two-qubit formulas that close
the convex roof in that case.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .entropy import _check_q, g, shannon, total_classical, tsallis_total
from .states import DensityMatrix, PureState, schmidt_spectrum, spectrum

_SIGMA_Y = np.array([[0, -1j], [1j, 0]])
_YY = np.kron(_SIGMA_Y, _SIGMA_Y)


@dataclass(frozen=True)
class Bipartition:
    """A two-block split of the subsystems of a multipartite state."""

    side_a: tuple[int, ...]
    side_b: tuple[int, ...]
    dim_a: int
    dim_b: int

    @classmethod
    def of(cls, dims, side_a) -> "Bipartition":
        dims = tuple(dims)
        side_a = tuple(sorted(set(int(i) for i in side_a)))
        all_idx = set(range(len(dims)))
        if not side_a or not set(side_a) < all_idx:
            raise ValueError(f"side_a {side_a} must be a nonempty proper subset")
        side_b = tuple(sorted(all_idx - set(side_a)))
        if not side_b:
            raise ValueError("side_b is empty; need a proper bipartition")
        da = int(np.prod([dims[i] for i in side_a]))
        db = int(np.prod([dims[i] for i in side_b]))
        return cls(side_a, side_b, da, db)


def cut(psi_or_dims, side_a) -> Bipartition:
    dims = psi_or_dims.dims if hasattr(psi_or_dims, "dims") else psi_or_dims
    return Bipartition.of(dims, side_a)


@dataclass(frozen=True)
class NormPolicy:
    """Choice of the dimension d entering the normalization factor r(d).

    The worked high-dimensional scenarios are not mutually consistent about
    which dimension to use for unequal-sized sides, so the policy is always
    explicit; ``min_dim`` is the library default.
    """

    mode: str = "min_dim"
    d: int | None = None

    def resolve(self, dim_a: int, dim_b: int) -> int:
        if self.mode == "min_dim":
            d = min(dim_a, dim_b)
        elif self.mode == "dim_a":
            d = dim_a
        elif self.mode == "dim_b":
            d = dim_b
        elif self.mode == "explicit":
            d = int(self.d)
        else:
            raise ValueError(f"unknown norm mode {self.mode!r}")
        if d < 2:
            raise ValueError(f"normalization dimension must be >= 2, got {d}")
        return d

    def label(self) -> str:
        return f"explicit:{self.d}" if self.mode == "explicit" else self.mode


MIN_DIM = NormPolicy("min_dim")
DIM_A = NormPolicy("dim_a")
DIM_B = NormPolicy("dim_b")


def explicit(d: int) -> NormPolicy:
    return NormPolicy("explicit", int(d))


def norm_factor(d: int) -> float:
    """r(d) = d log2 d - (d-1) log2 (d-1), the total entropy of 1/d."""
    d = int(d)
    if d < 2:
        raise ValueError(f"norm_factor requires d >= 2, got {d}")
    return float(d * np.log2(d) - (d - 1) * np.log2(d - 1))


def _marginal_spectrum(psi: PureState, bipartition: Bipartition) -> np.ndarray:
    return schmidt_spectrum(psi, bipartition.side_a)


def concurrence_pure(psi: PureState, bipartition: Bipartition) -> float:
    """C = sqrt(2 (1 - Tr rho_A^2)) across the given cut."""
    lam = _marginal_spectrum(psi, bipartition)
    val = 2.0 * (1.0 - np.sum(lam ** 2))
    return float(np.sqrt(max(val, 0.0)))


def concurrence_two_qubit(rho: DensityMatrix) -> float:
    """Spin-flip concurrence max{0, l1 - l2 - l3 - l4} for a two-qubit state.

    The l_i are the descending square roots of the eigenvalues of
    rho (Y x Y) rho* (Y x Y). With rho = A A^dagger they equal the singular
    values of the complex-symmetric matrix A^T (Y x Y) A, which an SVD
    computes to full precision (the non-Hermitian product form loses half
    the digits near its zero eigenvalues).
    """
    if rho.dims != (2, 2):
        raise ValueError(f"two-qubit formula needs dims (2, 2), got {rho.dims}")
    w, v = np.linalg.eigh(rho.matrix)
    keep = w > 1e-14
    a = v[:, keep] * np.sqrt(w[keep])
    sv = np.zeros(4)
    sv[: a.shape[1]] = np.linalg.svd(a.T @ _YY @ a, compute_uv=False)
    sv = np.sort(sv)[::-1]
    return float(max(0.0, sv[0] - sv[1] - sv[2] - sv[3]))


def h(x) -> float:
    """Analytic bridge from concurrence to E_t: h(x) = g((1 + sqrt(1-x^2)) / 2).

    Strictly increasing and convex on (0, 1); h(0) = 0, h(1) = 1.
    """
    x = np.asarray(x, dtype=float)
    if np.any(x < -1e-12) or np.any(x > 1 + 1e-12):
        raise ValueError(f"h(x) requires x in [0, 1], got {x}")
    x = np.clip(x, 0.0, 1.0)
    out = g((1.0 + np.sqrt(np.clip(1.0 - x * x, 0.0, None))) / 2.0)
    return float(out) if np.ndim(out) == 0 else out


def e_t_pure(psi: PureState, bipartition: Bipartition,
             norm: NormPolicy = MIN_DIM) -> float:
    """Total-entropy entanglement S^t(rho_A) / r(d) of a pure state."""
    lam = _marginal_spectrum(psi, bipartition)
    d = norm.resolve(bipartition.dim_a, bipartition.dim_b)
    return float(np.sum(g(lam))) / norm_factor(d)


def s_total_pure(psi: PureState, bipartition: Bipartition) -> float:
    """Unnormalized S^t of either marginal across the cut."""
    return float(np.sum(g(_marginal_spectrum(psi, bipartition))))


def e_t_two_qubit(rho: DensityMatrix) -> float:
    """Closed-form mixed-state E_t for two qubits: h(C(rho))."""
    return h(concurrence_two_qubit(rho))


def eof_pure(psi: PureState, bipartition: Bipartition) -> float:
    """Entanglement of formation of a pure state: S(rho_A)."""
    lam = _marginal_spectrum(psi, bipartition)
    lam = lam[lam > 0]
    return float(-np.sum(lam * np.log2(lam)))


def eof_two_qubit(rho: DensityMatrix) -> float:
    """Closed-form two-qubit entanglement of formation: h(C(rho))."""
    return h(concurrence_two_qubit(rho))


def f_q(x, q) -> float:
    """Tsallis-family bridge: 2 [1 - ((1+s)/2)^q - ((1-s)/2)^q] / (q-1),
    with s = sqrt(1 - x^2). Identity f_2(x) = x^2 holds exactly.
    """
    q = _check_q(q)
    x = np.asarray(x, dtype=float)
    if np.any(x < -1e-12) or np.any(x > 1 + 1e-12):
        raise ValueError(f"f_q(x) requires x in [0, 1], got {x}")
    x = np.clip(x, 0.0, 1.0)
    s = np.sqrt(np.clip(1.0 - x * x, 0.0, None))
    out = 2.0 * (1.0 - ((1.0 + s) / 2.0) ** q - ((1.0 - s) / 2.0) ** q) / (q - 1.0)
    return float(out) if out.ndim == 0 else out


def t_q_pure(psi: PureState, bipartition: Bipartition, q) -> float:
    """Tsallis-total entanglement of a pure state (no normalization factor)."""
    lam = _marginal_spectrum(psi, bipartition)
    return tsallis_total(lam, q)


def t_q_pure_normalized(psi: PureState, bipartition: Bipartition, q,
                        norm: NormPolicy = MIN_DIM) -> float:
    """Optional normalized variant: divide by the maximally mixed value."""
    d = norm.resolve(bipartition.dim_a, bipartition.dim_b)
    return t_q_pure(psi, bipartition, q) / tsallis_total(np.full(d, 1.0 / d), q)


def t_q_two_qubit(rho: DensityMatrix, q) -> float:
    """Closed-form two-qubit Tsallis-total entanglement: f_q(C(rho))."""
    return f_q(concurrence_two_qubit(rho), q)
