"""Numerical convex-roof estimation over pure-state ensembles.

Every ensemble realizing a mixed state arises from an isometry applied to
its eigendecomposition, so the search space is the manifold of m x rank
matrices with orthonormal columns. The optimizer runs seeded random
restarts followed by a multiplicative skew-Hermitian local refinement;
its value is always an upper bound on the true convex roof.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .measures import Bipartition
from .states import DensityMatrix, PureState

RECONSTRUCTION_TOL = 1e-8
EIGENVALUE_FLOOR = 1e-12
WEIGHT_FLOOR = 1e-14


@dataclass(frozen=True)
class EnsembleDecomposition:
    """Weights and pure states whose mixture reconstructs a target state."""

    weights: np.ndarray
    states: tuple[PureState, ...]

    def reconstruct(self) -> np.ndarray:
        d = self.states[0].dim
        out = np.zeros((d, d), dtype=complex)
        for w, s in zip(self.weights, self.states):
            out += w * np.outer(s.amplitudes, s.amplitudes.conj())
        return out


@dataclass(frozen=True)
class RoofConfig:
    ensemble_size: int | None = None  # default: rank^2 capped at 16
    restarts: int = 20
    max_iters: int = 200
    tol: float = 1e-6
    seed: int = 0


@dataclass(frozen=True)
class RoofResult:
    value: float
    best_ensemble: EnsembleDecomposition
    converged: bool
    iterations_used: int
    restart_values: tuple[float, ...] = ()

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "converged": self.converged,
            "iterations_used": self.iterations_used,
            "weights": np.asarray(self.best_ensemble.weights).tolist(),
            "restart_values": list(self.restart_values),
        }


def _eig_support(rho: DensityMatrix):
    w, v = np.linalg.eigh(rho.matrix)
    keep = w > EIGENVALUE_FLOOR
    w, v = w[keep][::-1], v[:, keep][:, ::-1]
    return w, v


def hjw_ensemble(rho: DensityMatrix, isometry: np.ndarray) -> EnsembleDecomposition:
    """Ensemble generated by an m x rank isometry acting on the eigenensemble.

    Row i gives the unnormalized state sum_j u_ij sqrt(lambda_j) |phi_j>;
    weights are the squared norms. The mixture reconstructs ``rho`` exactly.
    """
    lam, phi = _eig_support(rho)
    u = np.asarray(isometry, dtype=complex)
    if u.ndim != 2 or u.shape[1] != lam.size or u.shape[0] < lam.size:
        raise ValueError(f"isometry shape {u.shape} incompatible with rank {lam.size}")
    if np.max(np.abs(u.conj().T @ u - np.eye(lam.size))) > 1e-10:
        raise ValueError("columns are not orthonormal")
    raw = (u * np.sqrt(lam)) @ phi.T  # rows: unnormalized ensemble members
    weights = np.sum(np.abs(raw) ** 2, axis=1)
    states = []
    kept = []
    for i, w in enumerate(weights):
        if w < WEIGHT_FLOOR:
            continue
        states.append(PureState(raw[i] / np.sqrt(w), rho.dims))
        kept.append(w)
    return EnsembleDecomposition(np.array(kept), tuple(states))


def _random_isometry(m: int, k: int, rng: np.random.Generator) -> np.ndarray:
    z = rng.standard_normal((m, k)) + 1j * rng.standard_normal((m, k))
    q, _ = np.linalg.qr(z)
    return q


def _perturb(u: np.ndarray, step: float, rng: np.random.Generator) -> np.ndarray:
    m = u.shape[0]
    z = rng.standard_normal((m, m)) + 1j * rng.standard_normal((m, m))
    k = (z - z.conj().T) / 2.0
    k /= max(np.linalg.norm(k), 1e-30)
    q, _ = np.linalg.qr(u + step * (k @ u))
    return q


def average_measure(ensemble: EnsembleDecomposition, bipartition: Bipartition,
                    measure) -> float:
    return float(sum(w * measure(s, bipartition)
                     for w, s in zip(ensemble.weights, ensemble.states)))


def convex_roof(rho: DensityMatrix, bipartition: Bipartition, measure,
                cfg: RoofConfig = RoofConfig()) -> RoofResult:
    """Minimize the ensemble-averaged pure-state measure over isometries.

    ``measure`` is a pure-state evaluator ``measure(psi, bipartition)``.
    Restarts use independent seeded streams, so the result is deterministic
    for a fixed config under any scheduling. Non-convergence is reported in
    the ``converged`` flag, never as an exception.
    """
    lam, phi = _eig_support(rho)
    rank = lam.size
    m = cfg.ensemble_size if cfg.ensemble_size is not None else min(rank * rank, 16)
    m = max(int(m), rank)

    def evaluate(u: np.ndarray):
        ens = hjw_ensemble(rho, u)
        return average_measure(ens, bipartition, measure), ens

    best_val = np.inf
    best_ens = None
    total_iters = 0
    converged = False
    restart_values = []

    if rank == 1:
        val, ens = evaluate(np.eye(1))
        return RoofResult(val, ens, True, 0, (val,))

    for r in range(cfg.restarts):
        rng = np.random.default_rng([cfg.seed, r])
        u = np.eye(m, rank) if r == 0 else _random_isometry(m, rank, rng)
        val, ens = evaluate(u)
        step = 0.5
        iters = 0
        rejects = 0
        while iters < cfg.max_iters and step >= cfg.tol:
            cand = _perturb(u, step, rng)
            cval, cens = evaluate(cand)
            if cval < val - 1e-15:
                u, val, ens = cand, cval, cens
                step = min(step * 1.5, 1.0)
                rejects = 0
            else:
                rejects += 1
                if rejects >= 3:  # retry a few directions before shrinking
                    step *= 0.5
                    rejects = 0
            iters += 1
        total_iters += iters
        if step < cfg.tol:
            converged = True
        restart_values.append(val)
        if val < best_val:
            best_val, best_ens = val, ens

    return RoofResult(best_val, best_ens, converged, total_iters,
                      tuple(restart_values))
