"""Check the SDP solver outputs against closed forms and against the
hand-constructed feasible points (witnesses) that certify them without
trusting the solver."""

import numpy as np

from gadcap.bounds_classical import c_beta_analytic
from gadcap.bounds_twoway import max_rains_analytic
from gadcap.gadc import GadcParams, gadc_choi
from gadcap.sdp import (c_beta_bits, c_zeta_bits, emax_bits, rmax_bits,
                        verify_cbeta_witness, verify_emax_witness)

print("solver vs closed form")
print("gamma  n     c_beta_sdp  c_beta_exact  emax_sdp   emax_exact")
for gamma in (0.2, 0.5, 0.8):
    for n in (0.0, 0.25):
        p = GadcParams(gamma, n)
        c = gadc_choi(p)
        print(f"{gamma:5.2f}  {n:4.2f}  {c_beta_bits(c):10.7f}  "
              f"{c_beta_analytic(p):12.7f}  {emax_bits(c):9.7f}  "
              f"{max_rains_analytic(p):10.7f}")

# the two SDP pairs are tested against each other as well: the second
# program of each pair has the same optimum on this channel family
p = GadcParams(0.4, 0.25)
c = gadc_choi(p)
print(f"\npaired programs at (0.4, 0.25): "
      f"|zeta - beta| = {abs(c_zeta_bits(c) - c_beta_bits(c)):.2e}, "
      f"|rmax - emax| = {abs(rmax_bits(c) - emax_bits(c)):.2e}")

# witness reports: analytic feasible points checked directly against the
# closed-form targets, no solver in the loop
print("\nwitness certificates")
for gamma in (0.2, 0.5, 0.8):
    for n in (0.0, 0.5):
        p = GadcParams(gamma, n)
        for rep in (verify_cbeta_witness(p), verify_emax_witness(p)):
            print(f"  ({gamma:.1f},{n:.1f}) target {rep.target:.6f}  "
                  f"feasibility {rep.max_violation:.1e}  "
                  f"primal gap {abs(rep.primal_value - rep.target):.1e}  "
                  f"dual gap {abs(rep.dual_value - rep.target):.1e}  "
                  f"{'ok' if rep.ok else 'VIOLATED'}")
