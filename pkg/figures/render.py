#!/usr/bin/env python3
"""Render bound-comparison figures from capacity sweep CSV files.

Consumes only the sweep CSV schema
(gamma,n,bound_name,kind,value_bits,status,runtime_ms); never recomputes a
bound. Lower bounds are drawn solid, upper bounds dashed/dotted, and the
region between the best lower and best upper bound is shaded.

Usage:
    render.py --csv PATH --figure ID --out PATH [--n-panels 0.1,0.3,0.5]
"""

import argparse
import csv
import math
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

STYLE_FILE = Path(__file__).resolve().parent / "style.mplstyle"

FIGURE_IDS = ("ent-region", "classical", "quantum", "rmg-compare", "twoway")

REQUIRED_COLUMNS = ("gamma", "n", "bound_name", "kind", "value_bits",
                    "status")

# bound_name -> legend label; lower bounds listed separately per figure
PANEL_BOUNDS = {
    "classical": {
        "lower": {"chi": "Holevo information"},
        "upper": {"c_beta": "SDP bound",
                  "c_cov": "covariance bound",
                  "c_e": "entanglement-assisted",
                  "c_eb": "nearest EB channel",
                  "c_fil": "approx. unitality"},
    },
    "quantum": {
        "lower": {"q_ci": "coherent information"},
        "upper": {"q_dp1": "data processing 1",
                  "q_dp2": "data processing 2",
                  "q_dp3": "data processing 3",
                  "q_dp4": "data processing 4",
                  "q_deg": "eps-degradable",
                  "q_cdeg": "eps-close-degradable",
                  "q_adeg": "eps-anti-degradable",
                  "q_rains": "Rains information",
                  "q_rmg": "extended-channel CI"},
    },
    "rmg-compare": {
        "lower": {"q_ci": "coherent information"},
        "upper": {"q_rmg": "extended-channel CI",
                  "q_dp1": "data processing 1",
                  "q_deg": "eps-degradable"},
    },
    "twoway": {
        "lower": {"tw_rci": "reverse coherent info"},
        "upper": {"tw_half_mi": "half mutual info",
                  "tw_esq1": "squashed ent. 1",
                  "tw_esq2": "squashed ent. 2",
                  "tw_max_rains": "max-Rains",
                  "tw_cov": "covariance + rel. ent."},
    },
}

UPPER_STYLES = [
    {"linestyle": "--"}, {"linestyle": ":"}, {"linestyle": "-."},
    {"linestyle": (0, (5, 1))}, {"linestyle": (0, (3, 1, 1, 1))},
    {"linestyle": (0, (1, 1))}, {"linestyle": (0, (4, 2, 1, 2))},
    {"linestyle": (0, (6, 2))}, {"linestyle": (0, (2, 2))},
]


class DataError(Exception):
    pass


def load_rows(path: str) -> list[dict]:
    p = Path(path)
    if not p.exists():
        raise DataError(f"CSV not found: {path}")
    with open(p, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise DataError(f"empty CSV: {path}")
        missing = [c for c in REQUIRED_COLUMNS if c not in reader.fieldnames]
        if missing:
            raise DataError(
                f"CSV missing required columns: {', '.join(missing)}")
        rows = list(reader)
    if not rows:
        raise DataError(f"CSV has a header but no data rows: {path}")
    return rows


def series(rows: list[dict], n: float, name: str
           ) -> tuple[np.ndarray, np.ndarray]:
    """Finite (gamma, value) samples for one bound at one population."""
    pts = sorted(
        (float(r["gamma"]), float(r["value_bits"]))
        for r in rows
        if r["bound_name"] == name and math.isclose(float(r["n"]), n,
                                                    abs_tol=1e-12))
    g = np.array([a for a, b in pts if math.isfinite(b)])
    v = np.array([b for a, b in pts if math.isfinite(b)])
    return g, v


def panel_values(rows: list[dict], n: float, names: dict[str, str]
                 ) -> dict[str, tuple[np.ndarray, np.ndarray]]:
    out = {}
    for name in names:
        g, v = series(rows, n, name)
        if g.size:
            out[name] = (g, v)
    return out


def shade_corridor(ax, lowers, uppers):
    """Fill between the best lower and best upper bound where both exist."""
    grid = sorted({g for gv in list(lowers.values()) + list(uppers.values())
                   for g in gv[0]})
    xs, lo, hi = [], [], []
    for g in grid:
        lvals = [v[np.isclose(gv, g)][0] for gv, v in lowers.values()
                 if np.isclose(gv, g).any()]
        uvals = [v[np.isclose(gv, g)][0] for gv, v in uppers.values()
                 if np.isclose(gv, g).any()]
        if lvals and uvals and max(lvals) <= min(uvals):
            xs.append(g)
            lo.append(max(lvals))
            hi.append(min(uvals))
    if xs:
        ax.fill_between(xs, lo, hi, color="tab:blue", alpha=0.15, lw=0,
                        label="capacity corridor")


def render_panels(rows: list[dict], figure_id: str, panels: list[float],
                  out: str):
    spec = PANEL_BOUNDS[figure_id]
    fig, axes = plt.subplots(1, len(panels), sharey=True,
                             figsize=(3.5 * len(panels), 3.4))
    axes = np.atleast_1d(axes)
    for ax, n in zip(axes, panels):
        lowers = panel_values(rows, n, spec["lower"])
        uppers = panel_values(rows, n, spec["upper"])
        if not lowers and not uppers:
            raise DataError(
                f"no rows for N = {n:g}; regenerate the sweep with this "
                f"population or adjust --n-panels")
        shade_corridor(ax, lowers, uppers)
        for name, (g, v) in lowers.items():
            ax.plot(g, v, "-", color="black", label=spec["lower"][name])
        for k, (name, (g, v)) in enumerate(uppers.items()):
            ax.plot(g, v, label=spec["upper"][name],
                    **UPPER_STYLES[k % len(UPPER_STYLES)])
        ax.set_title(f"N = {n:g}")
        ax.set_xlabel(r"damping $\gamma$")
        ax.set_xlim(0, None)
        ax.set_ylim(0, None)
    axes[0].set_ylabel("bits per channel use")
    axes[-1].legend(loc="upper right")
    fig.savefig(out)
    plt.close(fig)


def render_ent_region(rows: list[dict], out: str):
    """Fill the (gamma, n) region where the max-Rains bound vanishes."""
    pts = [(float(r["gamma"]), float(r["n"]), float(r["value_bits"]))
           for r in rows if r["bound_name"] == "tw_max_rains"
           and math.isfinite(float(r["value_bits"]))]
    if not pts:
        raise DataError("CSV has no tw_max_rains rows; run a twoway sweep "
                        "over a (gamma, n) grid")
    gammas = sorted({g for g, _, _ in pts})
    ns = sorted({n for _, n, _ in pts})
    grid = np.full((len(ns), len(gammas)), np.nan)
    gi = {g: i for i, g in enumerate(gammas)}
    ni = {n: i for i, n in enumerate(ns)}
    for g, n, v in pts:
        grid[ni[n], gi[g]] = v
    mask = (grid <= 1e-12).astype(float)
    fig, ax = plt.subplots(figsize=(4.6, 3.6))
    ax.contourf(gammas, ns, mask, levels=[0.5, 1.5], colors=["tab:blue"],
                alpha=0.45)
    ax.contour(gammas, ns, mask, levels=[0.5], colors=["tab:blue"],
               linewidths=1.2)
    ax.set_xlabel(r"damping $\gamma$")
    ax.set_ylabel("excitation population N")
    ax.set_title("entanglement-breaking region")
    fig.savefig(out)
    plt.close(fig)


def parse_panels(text: str) -> list[float]:
    try:
        panels = [float(x) for x in text.split(",") if x.strip() != ""]
    except ValueError as exc:
        raise DataError(f"bad --n-panels value: {text!r}") from exc
    if not panels:
        raise DataError("--n-panels must list at least one population")
    return panels


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="render capacity-bound figures from sweep CSVs")
    parser.add_argument("--csv", required=True, help="sweep CSV input")
    parser.add_argument("--figure", required=True, choices=FIGURE_IDS)
    parser.add_argument("--out", required=True, help="output image path")
    parser.add_argument("--n-panels", default="0.1,0.3,0.5",
                        help="comma-separated populations, one panel each")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    plt.style.use(STYLE_FILE)
    try:
        rows = load_rows(args.csv)
        if args.figure == "ent-region":
            render_ent_region(rows, args.out)
        else:
            render_panels(rows, args.figure, parse_panels(args.n_panels),
                          args.out)
    except DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
