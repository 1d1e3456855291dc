"""Polygon inequality on quantum networks of bipartite pure states.

Each party's marginal is a tensor product of its per-edge halves, so its
spectrum is the product distribution of the per-edge Schmidt spectra; the
total entropy of a party never requires the global state. The polygon
inequality says each party's one-to-group entanglement is bounded by the
sum of everyone else's (unnormalized S^t).

Run:  python3 demos/05_network_polygon.py
"""

import numpy as np

from dualentropy import (Edge, NetworkTopology, PureState, one_to_group,
                         one_to_group_dense, polygon_check, random_network)

bell = PureState(np.array([1, 0, 0, 1]) / np.sqrt(2), (2, 2))

# --- fixed triangle of Bell pairs -------------------------------------------

triangle = NetworkTopology(3, (Edge(0, 1, (bell,)), Edge(0, 2, (bell,)),
                               Edge(1, 2, (bell,))))
report = polygon_check(triangle)
print("triangle of Bell pairs:")
for p, (v, t) in enumerate(zip(report.values, report.taus)):
    print(f"  party {p}: S^t(marginal) = {v:.6f}, tau = {t:.6f}")

# --- random qubit/qutrit networks -------------------------------------------

print("\n200 random networks (3-5 parties, qubit/qutrit edges):")
worst = -np.inf
for seed in range(200):
    net = random_network(3 + seed % 3, 0.7, dim_choices=(2, 3), seed=seed)
    if len(net.edges) < 2:
        continue
    worst = max(worst, max(polygon_check(net).taus))
print(f"  largest tau seen: {worst:.3e} (inequality: tau <= 0)")

# --- fast spectra-product path vs the dense reference ------------------------

net = random_network(4, 0.5, seed=11)
print("\nfast path vs dense marginal on one small network:")
for p in range(4):
    fast = one_to_group(net, p)
    dense = one_to_group_dense(net, p)
    print(f"  party {p}: fast {fast:.10f}, dense {dense:.10f}, "
          f"diff {abs(fast - dense):.1e}")
