"""Walk through the structure of one generalized amplitude damping channel:
Kraus operators, Choi matrix, decompositions, and the two phase-transition
predicates (entanglement breaking, anti-degradability)."""

import numpy as np

from gadcap.channels import choi, compose
from gadcap.gadc import (GadcParams, convex_decompose, eb_margin,
                         gadc_channel, gadc_choi, is_antidegradable,
                         is_entanglement_breaking, serial_decompose)

np.set_printoptions(precision=4, suppress=True)

p = GadcParams(gamma=0.3, n=0.2)
ch = gadc_channel(p)

print(f"channel: damping gamma={p.gamma}, excitation population n={p.n}")
print(f"kraus operators ({len(ch.kraus)}):")
for k in ch.kraus:
    print(k, "")

print("choi state (maximally entangled input pushed through the channel):")
print(gadc_choi(p).state, "")

# every such channel is a two-parameter family member that factors two ways:
# a convex mixture of the two extremal (n=0 and n=1) channels ...
w, p0, p1 = convex_decompose(p)
mix = (1 - w) * gadc_choi(p0).gamma + w * gadc_choi(p1).gamma
print(f"convex split: weight {w:.4f} on (gamma={p1.gamma:.4f}, n=1), "
      f"choi error {np.abs(mix - gadc_choi(p).gamma).max():.2e}")

# ... and two serial compositions of extremal channels
for i, (outer, inner) in enumerate(serial_decompose(p), start=1):
    err = np.abs(choi(compose(gadc_channel(outer),
                              gadc_channel(inner))).gamma
                 - gadc_choi(p).gamma).max()
    print(f"serial split {i}: "
          f"({inner.gamma:.4f},{inner.n:g}) then ({outer.gamma:.4f},"
          f"{outer.n:g}), choi error {err:.2e}")
print()

# sweep the damping parameter and watch the two predicates flip
print("gamma   eb_margin   entanglement_breaking   anti_degradable")
for gamma in np.linspace(0.1, 1.0, 10):
    q = GadcParams(float(gamma), 0.2)
    eb, margin = is_entanglement_breaking(q)
    adeg, _ = is_antidegradable(q)
    print(f"{gamma:5.2f}   {margin:+9.2e}   {str(eb).lower():21s}   "
          f"{str(adeg).lower()}")
