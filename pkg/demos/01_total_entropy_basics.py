"""A first look at the total entropy S^t = entropy + its complementary dual.

Run:  python3 demos/01_total_entropy_basics.py
"""

import numpy as np

from dualentropy import (DensityMatrix, extropy, norm_factor, random_density,
                         s_total, shannon, total_classical, von_neumann)

# --- classical picture: H^t vs plain Shannon on the 3-outcome simplex ------

print("distribution            H       J (dual)   H^t = H + J")
for p in ([1, 0, 0], [0.5, 0.5, 0], [0.5, 0.25, 0.25], [1 / 3] * 3):
    print(f"{str(p):22s} {shannon(p):7.4f}  {extropy(p):9.4f}  {total_classical(p):11.4f}")

# The dual never exceeds the entropy, so H <= H^t <= 2H. H^t separates
# distributions that plain Shannon cannot: it is strictly Schur-concave.

# --- quantum picture: S^t of random density matrices ------------------------

rng = np.random.default_rng(0)
print("\nd   max over 200 random states   r(d) = S^t(I/d)")
for d in range(2, 7):
    best = max(s_total(random_density((d,), seed=rng)) for _ in range(200))
    print(f"{d}   {best:24.6f}   {norm_factor(d):15.6f}")

# The supremum r(d) = d log2 d - (d-1) log2 (d-1) is attained only by the
# maximally mixed state; pure states sit at exactly zero. Compare with the
# ordinary von Neumann entropy, whose ceiling is log2 d:
rho = DensityMatrix(np.eye(6) / 6, (6,))
print(f"\nI/6: S = {von_neumann(rho):.6f} (= log2 6), S^t = {s_total(rho):.6f} (= r(6))")
