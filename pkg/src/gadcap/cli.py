"""Command-line front end: point reports, grid sweeps to CSV, verification.

Subcommands:
  info    single-point structural report (EB, anti-degradability, factors)
  sweep   evaluate a bound set on a parameter grid and write CSV
  verify  witness constructions and structural identities; exit 0/1

CSV schema: ``gamma,n,bound_name,kind,value_bits,status,runtime_ms`` with
floats at 12 significant digits.  Row order is gamma-major, then n, then
bound_name, independent of the worker count.
"""

from __future__ import annotations

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import sdp as sdp_mod
from .bounds_classical import (c_beta_analytic, c_cov_ub, c_eb_ub, c_fil_ub,
                               eps_cov, holevo_gadc, mutual_info_gadc)
from .bounds_quantum import (coherent_info_lb, dp_bounds, eps_adeg_ub,
                             eps_close_deg_ubs, eps_deg_ubs, q_rmg_ub,
                             rains_ub)
from .bounds_twoway import (SquashedBoundConfig, cov_twoway_ub, esq_ub,
                            half_mi_ub, max_rains_analytic,
                            reverse_coherent_lb)
from .channels import choi, complementary
from .channels import compose as _compose
from .gadc import (GadcParams, ThermalParams, antidegrading_channel,
                   convex_decompose, degrading_channel_n0, extended_channel,
                   extended_degrading_channel, gadc_channel, gadc_choi,
                   gadc_complement, is_antidegradable,
                   is_entanglement_breaking, serial_decompose)
from .mathcore import partial_trace
from .sdp import diamond_dist, verify_cbeta_witness, verify_emax_witness

ENDPOINT_CLAMP = 1e-9


# ---------------------------------------------------------------------------
# bound registries
# ---------------------------------------------------------------------------

def _clamped(p: GadcParams) -> tuple[GadcParams, bool]:
    gamma = min(max(p.gamma, ENDPOINT_CLAMP), 1.0 - ENDPOINT_CLAMP)
    return GadcParams(gamma, p.n), gamma != p.gamma


def _b_chi(p: GadcParams, seed: int) -> tuple[float, str]:
    q, clamped = _clamped(p)
    sol = holevo_gadc(q)
    return sol.chi, "clamped" if clamped else "ok"


def _b_c_beta(p, seed):
    return c_beta_analytic(p), "ok"


def _b_c_cov(p, seed):
    return c_cov_ub(p), "ok"


def _b_c_eb(p, seed):
    return c_eb_ub(p, seed=seed), "ok"


def _b_c_fil(p, seed):
    if p.n <= 0.0 or p.n >= 1.0:
        return float("nan"), "domain"
    return c_fil_ub(p), "ok"


def _b_c_e(p, seed):
    return mutual_info_gadc(p), "ok"


def _b_q_ci(p, seed):
    return coherent_info_lb(p), "ok"


def _b_q_dp(i):
    def f(p, seed):
        return dp_bounds(p)[i], "ok"
    return f


def _b_q_deg(p, seed):
    if not 0.0 < p.gamma < 0.5:
        return float("nan"), "domain"
    return eps_deg_ubs(p)[0], "ok"


def _b_q_cdeg(p, seed):
    if p.gamma >= 0.5:
        return float("nan"), "domain"
    return eps_close_deg_ubs(p)[0], "ok"


def _b_q_adeg(p, seed):
    return eps_adeg_ub(p), "ok"


def _b_q_rains(p, seed):
    return rains_ub(p), "ok"


def _b_q_rmg(p, seed):
    if p.gamma > 0.5:
        return float("nan"), "domain"
    n = min(p.n, 1.0 - p.n)
    return q_rmg_ub(ThermalParams(1.0 - p.gamma, n)), "ok"


def _b_tw_rci(p, seed):
    return reverse_coherent_lb(p), "ok"


def _b_tw_half_mi(p, seed):
    return half_mi_ub(p), "ok"


def _b_tw_esq(variant):
    def f(p, seed):
        return esq_ub(p, SquashedBoundConfig(variant=variant)), "ok"
    return f


def _b_tw_max_rains(p, seed):
    return max_rains_analytic(p), "ok"


def _b_tw_cov(p, seed):
    return cov_twoway_ub(p), "ok"


BOUND_SETS = {
    "classical": [
        ("c_beta", "upper", _b_c_beta),
        ("c_cov", "upper", _b_c_cov),
        ("c_e", "upper", _b_c_e),
        ("c_eb", "upper", _b_c_eb),
        ("c_fil", "upper", _b_c_fil),
        ("chi", "lower", _b_chi),
    ],
    "quantum": [
        ("q_adeg", "upper", _b_q_adeg),
        ("q_cdeg", "upper", _b_q_cdeg),
        ("q_ci", "lower", _b_q_ci),
        ("q_deg", "upper", _b_q_deg),
        ("q_dp1", "upper", _b_q_dp(0)),
        ("q_dp2", "upper", _b_q_dp(1)),
        ("q_dp3", "upper", _b_q_dp(2)),
        ("q_dp4", "upper", _b_q_dp(3)),
        ("q_rains", "upper", _b_q_rains),
        ("q_rmg", "upper", _b_q_rmg),
    ],
    "twoway": [
        ("tw_cov", "upper", _b_tw_cov),
        ("tw_esq1", "upper", _b_tw_esq(1)),
        ("tw_esq2", "upper", _b_tw_esq(2)),
        ("tw_half_mi", "upper", _b_tw_half_mi),
        ("tw_max_rains", "upper", _b_tw_max_rains),
        ("tw_rci", "lower", _b_tw_rci),
    ],
}


def bound_table(set_name: str) -> list[tuple[str, str, object]]:
    """Bounds of one set (or all), sorted by bound name."""
    if set_name == "all":
        rows = [r for s in ("classical", "quantum", "twoway")
                for r in BOUND_SETS[s]]
    else:
        rows = list(BOUND_SETS[set_name])
    return sorted(rows, key=lambda r: r[0])


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------

@dataclass
class SweepSpec:
    """Grid sweep request."""

    set_name: str
    gamma_min: float
    gamma_max: float
    gamma_steps: int
    n_list: list[float]
    out: str
    jobs: int = 1
    tol_sdp: float = 1e-10
    seed: int = 2024

    def __post_init__(self):
        if not (0.0 <= self.gamma_min <= self.gamma_max <= 1.0):
            raise ValueError("gamma range must lie in [0, 1]")
        if self.gamma_steps < 2:
            raise ValueError("gamma-steps must be >= 2")
        if not all(0.0 <= v <= 1.0 for v in self.n_list):
            raise ValueError("n values must lie in [0, 1]")
        if self.set_name not in ("classical", "quantum", "twoway", "all"):
            raise ValueError("unknown bound set")


def _fmt(x: float) -> str:
    if np.isnan(x):
        return "nan"
    return f"{x:.12g}"


def _point_records(task) -> list[str]:
    gamma, n, set_name, tol, seed = task
    sdp_mod.DEFAULT_SOLVER_TOL = tol
    p = GadcParams(gamma, n)
    rows = []
    for name, kind, fn in bound_table(set_name):
        t0 = time.perf_counter()
        try:
            val, status = fn(p, seed)
        except Exception:
            val, status = float("nan"), "error"
        ms = (time.perf_counter() - t0) * 1000.0
        if np.isnan(val) and status == "ok":
            status = "domain"
        rows.append(f"{_fmt(gamma)},{_fmt(n)},{name},{kind},"
                    f"{_fmt(val)},{status},{ms:.3f}")
    return rows


def cmd_sweep(spec: SweepSpec) -> int:
    gammas = np.linspace(spec.gamma_min, spec.gamma_max, spec.gamma_steps)
    tasks = [(float(g), float(n), spec.set_name, spec.tol_sdp, spec.seed)
             for g in gammas for n in spec.n_list]
    if spec.jobs > 1:
        with ProcessPoolExecutor(max_workers=spec.jobs) as ex:
            chunks = list(ex.map(_point_records, tasks))
    else:
        chunks = [_point_records(t) for t in tasks]
    with open(spec.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("gamma,n,bound_name,kind,value_bits,status,runtime_ms\n")
        for rows in chunks:
            for row in rows:
                fh.write(row + "\n")
    return 0


# ---------------------------------------------------------------------------
# info
# ---------------------------------------------------------------------------

def cmd_info(gamma: float, n: float, out=sys.stdout) -> int:
    p = GadcParams(gamma, n)
    eb, margin = is_entanglement_breaking(p)
    adeg, _ = is_antidegradable(p)
    w, p0, p1 = convex_decompose(p)
    (o1, i1), (o2, i2) = serial_decompose(p)
    lines = [
        f"channel: damping gamma = {_fmt(gamma)}, population n = {_fmt(n)}",
        f"entanglement-breaking: {str(eb).lower()} (margin {_fmt(margin)})",
        f"anti-degradable: {str(adeg).lower()}",
        f"thermal parameters: eta = {_fmt(1.0 - gamma)}, n = {_fmt(n)}",
        f"convex decomposition: (1-w) A_(g,0) + w A_(g,1), w = {_fmt(w)}",
        ("serial route 1: outer (g,n) = "
         f"({_fmt(o1.gamma)}, {_fmt(o1.n)}), inner ({_fmt(i1.gamma)}, "
         f"{_fmt(i1.n)})"),
        ("serial route 2: outer (g,n) = "
         f"({_fmt(o2.gamma)}, {_fmt(o2.n)}), inner ({_fmt(i2.gamma)}, "
         f"{_fmt(i2.n)})"),
    ]
    if gamma == 0.0:
        lines.append("identity channel: classical capacity 1, quantum "
                     "capacity 1, entanglement-assisted capacity 2")
    print("\n".join(lines), file=out)
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _choi_identity_errors(p: GadcParams) -> dict[str, float]:
    """Max absolute Choi-matrix errors of the structural identities."""
    target = gadc_choi(p).gamma
    errs = {}
    w, p0, p1 = convex_decompose(p)
    errs["convex"] = float(np.abs((1.0 - w) * gadc_choi(p0).gamma
                                  + w * gadc_choi(p1).gamma - target).max())
    for label, (outer, inner) in zip(("serial1", "serial2"),
                                     serial_decompose(p)):
        got = choi(_compose(gadc_channel(outer), gadc_channel(inner))).gamma
        errs[label] = float(np.abs(got - target).max())
    if p.gamma >= 0.5:
        got = choi(_compose(antidegrading_channel(p),
                            gadc_complement(p))).gamma
        errs["antidegrading"] = float(np.abs(got - target).max())
    if p.n == 0.0 and p.gamma < 0.5:
        got = choi(_compose(degrading_channel_n0(p), gadc_channel(p))).gamma
        comp = choi(complementary(gadc_channel(p))).gamma
        errs["degrading_n0"] = float(np.abs(got - comp).max())
    return errs


def _extended_identity_errors(t: ThermalParams) -> dict[str, float]:
    ext = extended_channel(t)
    marg = partial_trace(choi(ext).gamma, (2, 2, 2), (0, 1))
    base = choi(gadc_channel(GadcParams(1.0 - t.eta, t.n))).gamma
    errs = {"extended_marginal": float(np.abs(marg - base).max())}
    if t.eta >= 0.5 and 0.0 < t.n <= 0.5:
        got = choi(_compose(extended_degrading_channel(t), ext)).gamma
        comp = choi(complementary(ext)).gamma
        errs["extended_degrading"] = float(np.abs(got - comp).max())
    return errs


def cmd_verify(inject_fault: bool = False, tol_sdp: float = 1e-10,
               out=sys.stdout) -> int:
    sdp_mod.DEFAULT_SOLVER_TOL = tol_sdp
    gammas = [round(0.1 * k, 10) for k in range(1, 10)]
    ns = [0.0, 0.25, 0.5]
    checks: list[tuple[str, float, float]] = []

    worst_cb = worst_em = 0.0
    cb_ok = em_ok = True
    for gv in gammas:
        for nv in ns:
            p = GadcParams(gv, nv)
            r = verify_cbeta_witness(p)
            cb_ok &= r.ok
            worst_cb = max(worst_cb, r.max_violation)
            r = verify_emax_witness(p)
            em_ok &= r.ok
            worst_em = max(worst_em, r.max_violation)
    checks.append(("cbeta_witness_27pts", worst_cb if cb_ok else np.inf, 1e-9))
    checks.append(("emax_witness_27pts", worst_em if em_ok else np.inf, 1e-9))

    worst = {}
    for gv in gammas:
        for nv in ns:
            for k, v in _choi_identity_errors(GadcParams(gv, nv)).items():
                worst[k] = max(worst.get(k, 0.0), v)
    for eta in (0.55, 0.7, 0.9):
        for nv in (0.1, 0.3, 0.5):
            for k, v in _extended_identity_errors(
                    ThermalParams(eta, nv)).items():
                worst[k] = max(worst.get(k, 0.0), v)
    for k in sorted(worst):
        checks.append((f"choi_identity_{k}", worst[k], 1e-10))

    sign = -1.0 if inject_fault else 1.0
    worst_cov = 0.0
    for gv in (0.1, 0.3, 0.5, 0.8):
        for nv in (0.0, 0.2, 0.35):
            p = GadcParams(gv, nv)
            d = 0.5 * diamond_dist(gadc_channel(p),
                                   gadc_channel(GadcParams(gv, 0.5)))
            worst_cov = max(worst_cov, abs(d - sign * eps_cov(p)))
    checks.append(("eps_cov_formula_12pts", worst_cov, 1e-6))

    failed = False
    for name, err, tol in checks:
        ok = err <= tol
        failed |= not ok
        print(f"{'PASS' if ok else 'FAIL'}  {name:32s} "
              f"max_err {err:.3e}  tol {tol:.0e}", file=out)
    print("verification " + ("FAILED" if failed else "passed"), file=out)
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gadcap",
        description="Capacity bounds for the generalized amplitude damping "
                    "channel.")
    sub = ap.add_subparsers(dest="command", required=True)

    ap_info = sub.add_parser("info", help="single-point structural report")
    ap_info.add_argument("gamma", type=float)
    ap_info.add_argument("n", type=float)

    ap_sweep = sub.add_parser("sweep", help="grid sweep to CSV")
    ap_sweep.add_argument("--set", dest="set_name", default="all",
                          choices=["classical", "quantum", "twoway", "all"])
    ap_sweep.add_argument("--gamma-min", type=float, default=0.0)
    ap_sweep.add_argument("--gamma-max", type=float, default=1.0)
    ap_sweep.add_argument("--gamma-steps", type=int, default=21)
    ap_sweep.add_argument("--n-list", type=str, default="0.1,0.25,0.5")
    ap_sweep.add_argument("--out", type=str, required=True)
    ap_sweep.add_argument("--jobs", type=int, default=1)
    ap_sweep.add_argument("--tol-sdp", type=float, default=1e-10)
    ap_sweep.add_argument("--seed", type=int, default=2024)

    ap_verify = sub.add_parser("verify", help="witness and identity checks")
    ap_verify.add_argument("--inject-fault", action="store_true",
                           help="negative control: flip a sign, must fail")
    ap_verify.add_argument("--tol-sdp", type=float, default=1e-10)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "info":
        if not (0.0 <= args.gamma <= 1.0 and 0.0 <= args.n <= 1.0):
            print("error: gamma and n must lie in [0, 1]", file=sys.stderr)
            return 2
        return cmd_info(args.gamma, args.n)
    if args.command == "sweep":
        try:
            spec = SweepSpec(
                set_name=args.set_name, gamma_min=args.gamma_min,
                gamma_max=args.gamma_max, gamma_steps=args.gamma_steps,
                n_list=[float(v) for v in args.n_list.split(",") if v],
                out=args.out, jobs=args.jobs, tol_sdp=args.tol_sdp,
                seed=args.seed)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        return cmd_sweep(spec)
    return cmd_verify(inject_fault=args.inject_fault, tol_sdp=args.tol_sdp)


if __name__ == "__main__":
    sys.exit(main())
