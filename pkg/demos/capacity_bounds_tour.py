"""Evaluate every capacity bound family at a few channel points and print
the resulting corridors (best lower bound vs best upper bound)."""

import numpy as np

from gadcap.bounds_classical import (c_beta_analytic, c_cov_ub, c_eb_ub,
                                     c_fil_ub, holevo_gadc,
                                     mutual_info_gadc)
from gadcap.bounds_quantum import quantum_bound_set
from gadcap.bounds_twoway import twoway_bound_set
from gadcap.gadc import GadcParams

POINTS = [GadcParams(0.1, 0.1), GadcParams(0.3, 0.3), GadcParams(0.6, 0.5)]


def show(title, lower, uppers):
    finite = {k: v for k, v in uppers.items() if np.isfinite(v)}
    best = min(finite, key=finite.get)
    print(f"  {title}: lower {lower:.4f}, best upper {finite[best]:.4f} "
          f"({best})")
    for name, val in sorted(finite.items(), key=lambda kv: kv[1]):
        print(f"    {name:12s} {val:.4f}")


for p in POINTS:
    print(f"channel gamma={p.gamma}, n={p.n}")
    show("classical", holevo_gadc(p).chi,
         {"c_beta": c_beta_analytic(p), "c_cov": c_cov_ub(p),
          "c_e": mutual_info_gadc(p), "c_eb": c_eb_ub(p),
          "c_fil": c_fil_ub(p)})
    q = quantum_bound_set(p)
    show("quantum", q.ic_lb,
         {"q_dp1": q.dp1, "q_dp2": q.dp2, "q_dp3": q.dp3, "q_dp4": q.dp4,
          "q_deg": q.deg1, "q_cdeg": q.deg2, "q_adeg": q.adeg,
          "q_rains": q.rains, "q_rmg": q.rmg})
    t = twoway_bound_set(p)
    show("two-way", t.rci_lb,
         {"tw_half_mi": t.half_mi, "tw_esq1": t.esq1, "tw_esq2": t.esq2,
          "tw_max_rains": t.max_rains, "tw_cov": t.cov})
    print()
