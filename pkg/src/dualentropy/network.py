"""Quantum networks of bipartite pure states and the polygon inequality.

A network is a set of parties joined by edges, each edge carrying one or
more bipartite pure states. The one-to-group total entropy of a party has
a fast path: the marginal is a tensor product of per-edge marginals, so
its spectrum is the product distribution of the per-edge Schmidt spectra
and the global state never needs to be built. Polygon checks use the
unnormalized entropy by default, which is the mode the inequality's
derivation (symmetry plus subadditivity of the raw entropy) supports.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from functools import reduce

import numpy as np

from .entropy import g
from .measures import NormPolicy, MIN_DIM, norm_factor
from .monogamy import ScanResult, e_t_example3_one_to_group, _xlg
from .states import (DensityMatrix, PureState, random_pure, reduced_state,
                     schmidt_spectrum, spectrum, tensor_all)


@dataclass(frozen=True)
class Edge:
    i: int
    j: int
    states: tuple[PureState, ...]

    def __post_init__(self):
        if not self.i < self.j:
            raise ValueError(f"edge endpoints must satisfy i < j, got ({self.i}, {self.j})")
        for s in self.states:
            if len(s.dims) != 2:
                raise ValueError("edge states must be bipartite (two dims)")


@dataclass(frozen=True)
class NetworkTopology:
    n_parties: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        for e in self.edges:
            if not (0 <= e.i < self.n_parties and 0 <= e.j < self.n_parties):
                raise ValueError(f"edge ({e.i}, {e.j}) outside {self.n_parties} parties")

    def incident(self, party: int) -> list[tuple[Edge, int]]:
        """Edges touching the party, with the index (0/1) of its half."""
        out = []
        for e in self.edges:
            if e.i == party:
                out.append((e, 0))
            elif e.j == party:
                out.append((e, 1))
        return out

    def party_dim(self, party: int) -> int:
        return int(np.prod([e.states[k].dims[half]
                            for e, half in self.incident(party)
                            for k in range(len(e.states))] or [1]))

    def to_dict(self) -> dict:
        from .states import state_to_json
        return {
            "n_parties": self.n_parties,
            "edges": [{"i": e.i, "j": e.j,
                       "states": [state_to_json(s) for s in e.states]}
                      for e in self.edges],
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "NetworkTopology":
        from .states import state_from_json
        edges = tuple(Edge(int(e["i"]), int(e["j"]),
                           tuple(state_from_json(s) for s in e["states"]))
                      for e in obj["edges"])
        return cls(int(obj["n_parties"]), edges)


@dataclass(frozen=True)
class PolygonReport:
    """Per-party one-to-group values and polygon residuals tau."""

    values: tuple[float, ...]
    taus: tuple[float, ...]
    normalized: bool

    def to_dict(self) -> dict:
        return {"values": list(self.values), "taus": list(self.taus),
                "normalized": self.normalized}

    def write_csv(self, fh) -> None:
        w = csv.writer(fh)
        fh.write(f"# normalized: {self.normalized}\n")
        w.writerow(["party", "one_to_group", "tau"])
        for p, (v, t) in enumerate(zip(self.values, self.taus)):
            w.writerow([p, v, t])


def party_marginal_spectrum(net: NetworkTopology, party: int) -> np.ndarray:
    """Product distribution of the per-edge Schmidt spectra at the party."""
    spectra = []
    for e, half in net.incident(party):
        for s in e.states:
            lam = schmidt_spectrum(s, (half,))
            spectra.append(lam)
    if not spectra:
        return np.array([1.0])
    return reduce(np.outer, spectra).ravel() if len(spectra) > 1 else spectra[0]


def one_to_group(net: NetworkTopology, party: int, normalized: bool = False,
                 norm: NormPolicy = MIN_DIM) -> float:
    """Total entropy of the party's marginal, via the spectra-product path.

    Unnormalized by default; the normalized flag divides by r(d) with d
    chosen by the norm policy over (party dim, rest dim).
    """
    lam = party_marginal_spectrum(net, party)
    val = float(np.sum(g(np.clip(lam, 0.0, 1.0))))
    if normalized:
        dim_a = net.party_dim(party)
        dim_b = int(np.prod([net.party_dim(p) for p in range(net.n_parties)
                             if p != party]))
        val /= norm_factor(norm.resolve(dim_a, dim_b))
    return val


def polygon_check(net: NetworkTopology, normalized: bool = False,
                  norm: NormPolicy = MIN_DIM) -> PolygonReport:
    """tau_i = E(i|rest) - sum_{j != i} E(j|rest) for every party.

    In the unnormalized mode the polygon inequality asserts tau_i <= 0.
    """
    if net.n_parties < 3:
        raise ValueError("polygon check needs at least 3 parties")
    vals = [one_to_group(net, p, normalized, norm) for p in range(net.n_parties)]
    total = sum(vals)
    taus = [v - (total - v) for v in vals]
    return PolygonReport(tuple(vals), tuple(taus), normalized)


def random_network(n: int, edge_prob: float, dim_choices=(2, 3),
                   states_per_edge: int = 1, seed=0) -> NetworkTopology:
    """Random topology with Haar-random edge states; deterministic per seed."""
    if n < 2:
        raise ValueError("need at least 2 parties")
    rng = np.random.default_rng(seed)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() >= edge_prob:
                continue
            states = []
            for _ in range(states_per_edge):
                di = int(rng.choice(dim_choices))
                dj = int(rng.choice(dim_choices))
                states.append(random_pure((di, dj), rng))
            edges.append(Edge(i, j, tuple(states)))
    return NetworkTopology(n, tuple(edges))


def global_state(net: NetworkTopology) -> tuple[PureState, dict[int, list[int]]]:
    """Dense tensor of all edge states, plus party -> subsystem index map."""
    factors = []
    owner: dict[int, list[int]] = {p: [] for p in range(net.n_parties)}
    pos = 0
    for e in net.edges:
        for s in e.states:
            factors.append(s)
            owner[e.i].append(pos)
            owner[e.j].append(pos + 1)
            pos += 2
    if not factors:
        raise ValueError("network has no edges")
    return tensor_all(factors), owner


def one_to_group_dense(net: NetworkTopology, party: int) -> float:
    """Reference path: build the global state and trace out everything else.

    Intended for cross-checking the spectra-product path; practical only
    while the global dimension stays around 2^10.
    """
    psi, owner = global_state(net)
    keep = owner[party]
    if not keep:
        return 0.0
    rho = reduced_state(psi, keep)
    lam = spectrum(rho).values
    return float(np.sum(g(lam)))


def example5_report(thetas=None) -> ScanResult:
    """Marginal entanglements and polygon residual for the 4x2x2 chain state.

    Uses the per-term normalizations r(4), r(2), r(2) that match the
    published marginal values; tau = E(A|BC) - E(B|AC) - E(C|AB).
    """
    if thetas is None:
        thetas = np.linspace(0.0, np.pi / 2.0, 101)
    thetas = np.asarray(thetas, dtype=float)
    e_a = np.empty_like(thetas)
    e_b = np.empty_like(thetas)
    e_c = np.empty_like(thetas)
    for i, th in enumerate(thetas):
        alpha, beta = np.cos(th), np.sin(th)
        a2, b2 = alpha * alpha, beta * beta
        e_a[i] = e_t_example3_one_to_group(alpha, beta)
        e_b[i] = -_xlg(a2) - _xlg(b2)
        e_c[i] = 1.0
    taus = e_a - e_b - e_c
    meta = {"family": "example5", "measure": "e_t",
            "norms": "A:explicit:4 B:explicit:2 C:explicit:2"}
    res = ScanResult({"theta": thetas, "E_A": e_a, "E_B": e_b, "E_C": e_c},
                     taus, meta)
    return res
