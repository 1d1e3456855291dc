"""Monogamy residuals for the two reference tripartite scenarios.

Scenario A (dims 4x2x2): a one-parameter chain of two entangled pairs.
The EOF residual vanishes identically; the E_t residual is non-positive,
i.e. E_t violates the usual monogamy direction at exponent 1.

Scenario B (dims 6x3x3): a fixed state with maximally mixed 6-dim marginal.
E_t(A|BC) = 1 exactly, both pairwise values are ~0.9520, and the residual
only turns positive once the comparison exponent reaches alpha = 15.

Run:  python3 demos/03_monogamy_scenarios.py
"""

import numpy as np

from dualentropy import (cut, e_t_pure, eof_pure, example4_state,
                         pairwise_e_t_example4, power_crossover,
                         scan_example3, scan_example6)

# --- scenario A -------------------------------------------------------------

res_ef = scan_example3("eof", 1.0)
res_et = scan_example3("e_t", 1.0)
print("chain family, 101-point theta grid:")
print(f"  max |tau_EOF| = {np.max(np.abs(res_ef.values)):.2e}  (identically zero)")
print(f"  tau_Et range  = [{res_et.values.min():.4f}, {res_et.values.max():.2e}]"
      "  (never positive)")

# --- scenario B -------------------------------------------------------------

psi = example4_state()
bip = cut(psi, (0,))
e_group = e_t_pure(psi, bip)
pair = pairwise_e_t_example4()[0]
print("\nfixed 6x3x3 state:")
print(f"  E_t(A|BC) = {e_group:.6f}")
print(f"  pairwise  = {pair:.6f} (both pairs, flat convex roof)")
print(f"  EOF(A|BC) = {eof_pure(psi, bip):.6f} (= log2 6)")

alpha = power_crossover(e_group, [pair, pair])
print(f"  E_t^a > 2 * pair^a first holds at integer exponent a = {alpha}")

# --- Tsallis variant: residuals of either sign ------------------------------

res = scan_example6()
g = np.asarray(res.axes["gamma"])
print("\nTsallis-total residual over a (theta, q, gamma) grid:")
for gamma in sorted(set(g)):
    vals = res.values[g == gamma]
    print(f"  gamma = {gamma:3g}: tau in [{vals.min():+.4f}, {vals.max():+.4f}]")
# At gamma = 1 the residual computed from the marginal spectra stays
# non-positive; the positive values appear at larger exponents.
