"""Classical and quantum entropy functionals.

The total entropy family (Shannon + its complementary dual) uses log base 2
throughout; the Tsallis family is base-free via the q-logarithm. The
conventions 0*log 0 = 0 and 0*ln_q 0 = 0 are applied everywhere.
"""

from __future__ import annotations

import numpy as np

from .states import DensityMatrix, spectrum

PROB_TOL = 1e-8


def _probs(p) -> np.ndarray:
    p = np.asarray(p, dtype=float).ravel()
    if p.min() < -PROB_TOL or p.max() > 1 + PROB_TOL:
        raise ValueError(f"probabilities outside [0, 1]: [{p.min()}, {p.max()}]")
    p = np.clip(p, 0.0, 1.0)
    s = p.sum()
    if abs(s - 1.0) > PROB_TOL:
        raise ValueError(f"probabilities sum to {s}, expected 1")
    return p / s


def _xlog2x(x: np.ndarray) -> np.ndarray:
    out = np.zeros_like(x)
    nz = x > 0
    out[nz] = x[nz] * np.log2(x[nz])
    return out


def shannon(p) -> float:
    """H(p) = -sum p_i log2 p_i, in bits."""
    return float(-np.sum(_xlog2x(_probs(p))))


def extropy(p) -> float:
    """Complementary dual of Shannon entropy: -sum (1-p_i) log2 (1-p_i)."""
    return float(-np.sum(_xlog2x(1.0 - _probs(p))))


def total_classical(p) -> float:
    """H^t(p) = H(p) + extropy(p) = sum_i g(p_i)."""
    p = _probs(p)
    return float(-np.sum(_xlog2x(p)) - np.sum(_xlog2x(1.0 - p)))


def g(x):
    """Binary entropy g(x) = -x log2 x - (1-x) log2 (1-x) on [0, 1]."""
    x = np.asarray(x, dtype=float)
    if np.any(x < -1e-12) or np.any(x > 1 + 1e-12):
        raise ValueError(f"g(x) requires x in [0, 1], got {x}")
    x = np.clip(x, 0.0, 1.0)
    out = -_xlog2x(x) - _xlog2x(1.0 - x)
    return float(out) if out.ndim == 0 else out


def von_neumann(rho: DensityMatrix) -> float:
    """S(rho) = -Tr rho log2 rho."""
    return shannon(spectrum(rho).values)


def s_total(rho: DensityMatrix) -> float:
    """Total entropy S^t(rho) = -Tr[rho log2 rho + (1-rho) log2 (1-rho)].

    Equals the classical total entropy of the full eigenvalue spectrum;
    zero eigenvalues contribute nothing. Range is [0, d log2 d -
    (d-1) log2 (d-1)], with the maximum attained by the maximally mixed
    state and the minimum by pure states.
    """
    return total_classical(spectrum(rho).values)


def _check_q(q: float) -> float:
    q = float(q)
    if q <= 0 or q == 1.0:
        raise ValueError(f"q must be positive and != 1, got {q}")
    return q


def q_log(x, q) -> float:
    """q-logarithm ln_q(x) = (1 - x^(1-q)) / (q - 1) for x > 0."""
    q = _check_q(q)
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise ValueError("q_log requires x > 0")
    out = (1.0 - x ** (1.0 - q)) / (q - 1.0)
    return float(out) if out.ndim == 0 else out


def tsallis(p, q) -> float:
    """Tsallis entropy T_q(p) = (1 - sum p_i^q) / (q - 1)."""
    q = _check_q(q)
    p = _probs(p)
    return float((1.0 - np.sum(p ** q)) / (q - 1.0))


def tsallis_dual(p, q) -> float:
    """Complementary dual: (sum (1-p_i) - sum (1-p_i)^q) / (q - 1)."""
    q = _check_q(q)
    r = 1.0 - _probs(p)
    return float((np.sum(r) - np.sum(r ** q)) / (q - 1.0))


def tsallis_total(p, q) -> float:
    """T^t_q(p) = T_q + dual = sum_i (1 - p_i^q - (1-p_i)^q) / (q - 1)."""
    q = _check_q(q)
    p = _probs(p)
    return float(np.sum(1.0 - p ** q - (1.0 - p) ** q) / (q - 1.0))


def t_total_q(rho: DensityMatrix, q) -> float:
    """Operator form: [1 - Tr rho^q - Tr(1-rho)^q + Tr(1-rho)] / (q-1).

    Evaluated on the spectrum, where it reduces to ``tsallis_total``.
    """
    return tsallis_total(spectrum(rho).values, q)


def generic_entropy(rho: DensityMatrix, f) -> float:
    """Trace functional sum_i f(lambda_i) for an entropy kernel f.

    ``f`` must vanish at both endpoints (checked to 1e-12). Recovers the
    von Neumann, total, and Tsallis-total entropies for the usual kernels.
    """
    if abs(f(0.0)) > 1e-12 or abs(f(1.0)) > 1e-12:
        raise ValueError("entropy kernel must satisfy f(0) = f(1) = 0")
    return float(sum(f(lam) for lam in spectrum(rho).values))
