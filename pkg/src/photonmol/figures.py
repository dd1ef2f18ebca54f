"""Canned dataset recipes for the standard figure panels (fig1a..fig5b).

Each recipe writes a CSV dataset, a JSON metadata sidecar, and a standalone
matplotlib script rendering the panel (a log10 heatmap or line plot). Grid
ranges that are not fixed by the recipe bindings are estimates and can be
rescaled through the count override.
"""

import csv
import math
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from .model import SystemParams, symmetric_params
from .optimal import (
    dual_drive_optimum_asymptotic,
    numeric_optimum,
    single_drive_optimum,
)
from .solvers import SOLVER_FULL_TRUNCATED, SOLVER_MASTER_EQUATION, evaluate_point
from .sweep import (
    Axis,
    ResultRow,
    SweepConfig,
    run_sweep,
    write_rows_csv,
    write_sidecar,
)

FIGURE_NAMES = (
    "fig1a", "fig1b", "fig2a", "fig2b", "fig3a", "fig3b",
    "fig4a", "fig4b", "fig4c", "fig4d", "fig5a", "fig5b",
)

_J_DEFAULT = 10.0
_EPS_A = 0.01
_KAPPA = 1.0
# Coupling strengths for the fig5 family (the recipe's own choice).
_FIG5_COUPLINGS = (10.0, 20.0, 50.0)
# Cut positions for the line-plot panels.
_FIG4C_CUTS = (0.024, 0.16)
_FIG4D_CUTS = (0.058, 0.116)


def _base_params(j: float = _J_DEFAULT) -> SystemParams:
    return SystemParams(coupling_j=j, eps_a=_EPS_A, kappa_a=_KAPPA, kappa_b=_KAPPA)


def _heatmap_config(name: str, count: int) -> tuple[SweepConfig, dict]:
    single = single_drive_optimum(_KAPPA, _J_DEFAULT)
    if name == "fig1a":
        cfg = SweepConfig(
            base=_base_params(),
            axis1=Axis("eta", 1.05, 20.0, count),
            axis2=Axis("delta", 0.0, 5.0, count),
            solver=SOLVER_MASTER_EQUATION,
            constraints=("u := dual_drive_u",),
        )
        overlay = {"kind": "curve", "code": "ref = 10.0 / xs",
                   "label": "delta = j/eta"}
    elif name == "fig1b":
        cfg = SweepConfig(
            base=_base_params(),
            axis1=Axis("eta", 1.05, 20.0, count),
            axis2=Axis("delta", 0.0, 5.0, count),
            solver=SOLVER_MASTER_EQUATION,
            constraints=("u := single_drive_u",),
        )
        overlay = {"kind": "hline", "code": f"ref = {single.delta_opt!r}",
                   "label": "single-drive delta_opt"}
    elif name == "fig2a":
        cfg = SweepConfig(
            base=_base_params(),
            axis1=Axis("eta", 1.05, 20.0, count),
            axis2=Axis("u", 1e-3, 0.5, count, scale="log"),
            solver=SOLVER_MASTER_EQUATION,
            constraints=("delta := dual_drive_delta",),
        )
        overlay = {"kind": "curve",
                   "code": "ref = 0.5 / 10.0 * xs / (xs**2 - 1.0)",
                   "label": "dual-drive u_opt"}
    elif name == "fig2b":
        cfg = SweepConfig(
            base=_base_params(),
            axis1=Axis("eta", 1.05, 20.0, count),
            axis2=Axis("u", 1e-3, 0.5, count, scale="log"),
            solver=SOLVER_MASTER_EQUATION,
            constraints=("delta := single_drive_delta",),
        )
        overlay = {"kind": "hline", "code": f"ref = {single.u_opt!r}",
                   "label": "single-drive u_opt"}
    elif name == "fig4a":
        cfg = SweepConfig(
            base=_base_params(),
            axis1=Axis("phi", 0.0, math.pi / 2, count),
            axis2=Axis("eta_inv", 0.01, 0.2, count),
            solver=SOLVER_MASTER_EQUATION,
            constraints=("delta := dual_drive_delta", "u := dual_drive_u"),
        )
        overlay = {"kind": "curve_x",
                   "code": "ref = np.arctan(1.0 / (2.0 * 10.0 * ys))",
                   "label": "bunching phase curve"}
    elif name == "fig4b":
        cfg = SweepConfig(
            base=_base_params(),
            axis1=Axis("phi", 0.0, math.pi / 2, count),
            axis2=Axis("eta_inv", 0.01, 0.2, count),
            solver=SOLVER_MASTER_EQUATION,
            constraints=("delta := single_drive_delta", "u := single_drive_u"),
        )
        overlay = {"kind": "point",
                   "code": f"ref = ({math.pi / 3!r}, {1.0 / (math.sqrt(3.0) * _J_DEFAULT)!r})",
                   "label": "one-photon interference zero"}
    else:
        raise ValueError(name)
    return cfg, overlay


def _run_cut_figure(name: str, count: int, threads: int):
    """fig4c/fig4d: phi scans at two fixed drive ratios."""
    cuts = _FIG4C_CUTS if name == "fig4c" else _FIG4D_CUTS
    constraints = (
        ("delta := dual_drive_delta", "u := dual_drive_u")
        if name == "fig4c"
        else ("delta := single_drive_delta", "u := single_drive_u")
    )
    cfg = SweepConfig(
        base=_base_params(),
        axis1=Axis("eta_inv", cuts[0], cuts[1], 2),
        axis2=Axis("phi", 0.0, math.pi / 2, count),
        solver=SOLVER_MASTER_EQUATION,
        constraints=constraints,
    )
    return run_sweep(cfg, threads=threads), cfg


def _run_fig5(count: int, threads: int) -> list[ResultRow]:
    """g2 and mean photon number against the drive ratio for several
    couplings, at the single-drive optimum and a pi/3 relative phase."""
    eta_inv_values = np.logspace(math.log10(0.005), math.log10(0.2), count)

    def point(args):
        j, eta_inv = args
        opt = single_drive_optimum(_KAPPA, j)
        params = symmetric_params(
            j, delta=opt.delta_opt, u=opt.u_opt,
            eta=math.inf if eta_inv == 0 else 1.0 / eta_inv,
            phi=math.pi / 3, eps_a=_EPS_A, kappa=_KAPPA,
        )
        g2, mean_n = evaluate_point(params, SOLVER_MASTER_EQUATION)
        return ResultRow(axis1=j, axis2=eta_inv, delta=opt.delta_opt,
                         u=opt.u_opt, g2_a=g2, mean_n_a=mean_n,
                         solver=SOLVER_MASTER_EQUATION)

    tasks = [(j, e) for j in _FIG5_COUPLINGS for e in eta_inv_values]
    if threads <= 1:
        return [point(t) for t in tasks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(point, tasks))


def _run_fig3(which: str, count: int, threads: int):
    """Optimal detuning (fig3a) or Kerr strength (fig3b) against the drive
    ratio: numeric minimization next to both analytic references."""
    etas = np.logspace(math.log10(1.2), 2.0, count)
    single = single_drive_optimum(_KAPPA, _J_DEFAULT)

    def point(eta):
        numeric = numeric_optimum(_KAPPA, _J_DEFAULT, eta, 0.0,
                                  solver=SOLVER_FULL_TRUNCATED)
        dual = dual_drive_optimum_asymptotic(_KAPPA, _J_DEFAULT, eta)
        if which == "fig3a":
            return (eta, numeric.delta_opt, dual.delta_opt, single.delta_opt)
        return (eta, numeric.u_opt, dual.u_opt, single.u_opt)

    if threads <= 1:
        return [point(e) for e in etas]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(point, etas))


_HEATMAP_SCRIPT = """\
# Generated by photonmol @VERSION@: log10 heatmap of @NAME@.csv
import csv
import math

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

with open("@NAME@.csv", newline="") as handle:
    rows = list(csv.DictReader(handle))
xs = np.array(sorted({float(r["@AX1@"]) for r in rows}))
ys = np.array(sorted({float(r["@AX2@"]) for r in rows}))
xi = {v: i for i, v in enumerate(xs)}
yi = {v: i for i, v in enumerate(ys)}
grid = np.full((ys.size, xs.size), np.nan)
for r in rows:
    if r["g2_a"]:
        grid[yi[float(r["@AX2@"])], xi[float(r["@AX1@"])]] = math.log10(float(r["g2_a"]))

fig, ax = plt.subplots(figsize=(5.2, 4.0))
mesh = ax.pcolormesh(xs, ys, grid, shading="nearest", cmap="jet",
                     vmin=-4.0, vmax=4.0)
fig.colorbar(mesh, ax=ax, label="log10 g2_a")
@OVERLAY@
ax.set_xlabel("@AX1@")
ax.set_ylabel("@AX2@")
@YSCALE@
ax.set_title("@NAME@")
ax.legend(loc="upper right")
fig.tight_layout()
fig.savefig("@NAME@.png", dpi=200)
"""

_LINES_SCRIPT = """\
# Generated by photonmol @VERSION@: line plot of @NAME@.csv
import csv
from collections import defaultdict

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

with open("@NAME@.csv", newline="") as handle:
    rows = list(csv.DictReader(handle))
series = defaultdict(list)
for r in rows:
    if r["@VALUE@"]:
        series[r["@GROUP@"]].append((float(r["@AX@"]), float(r["@VALUE@"])))

fig, ax = plt.subplots(figsize=(5.2, 4.0))
for label, pts in series.items():
    pts.sort()
    ax.plot([p[0] for p in pts], [p[1] for p in pts],
            label=f"@GROUP@={label}")
ax.set_xlabel("@AX@")
ax.set_ylabel("@VALUE@")
ax.set_yscale("log")
@XSCALE@
ax.set_title("@NAME@")
ax.legend()
fig.tight_layout()
fig.savefig("@NAME@.png", dpi=200)
"""

_OPTIMUM_SCRIPT = """\
# Generated by photonmol @VERSION@: optimal-parameter curves of @NAME@.csv
import csv

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

with open("@NAME@.csv", newline="") as handle:
    rows = list(csv.DictReader(handle))
etas = [float(r["eta"]) for r in rows]
fig, ax = plt.subplots(figsize=(5.2, 4.0))
for column, style in (("@COL@_numeric", "k-"), ("@COL@_dual_asymptotic", "r--"),
                      ("@COL@_single_asymptotic", "b:")):
    ax.plot(etas, [float(r[column]) for r in rows], style, label=column)
ax.set_xlabel("eta")
ax.set_ylabel("@COL@")
ax.set_xscale("log")
@YSCALE@
ax.set_title("@NAME@")
ax.legend()
fig.tight_layout()
fig.savefig("@NAME@.png", dpi=200)
"""


def _fill(template: str, **tokens) -> str:
    from ._version import __version__

    text = template.replace("@VERSION@", __version__)
    for key, value in tokens.items():
        text = text.replace(f"@{key}@", value)
    return text


def _overlay_lines(overlay: dict) -> str:
    code = overlay["code"]
    label = overlay["label"]
    if overlay["kind"] == "hline":
        return f'{code}\nax.axhline(ref, color="w", ls="--", label="{label}")'
    if overlay["kind"] == "curve":
        return f'{code}\nax.plot(xs, ref, "w--", label="{label}")'
    if overlay["kind"] == "curve_x":
        return f'{code}\nax.plot(ref, ys, "k--", label="{label}")'
    return f'{code}\nax.plot([ref[0]], [ref[1]], "wo", label="{label}")'


def figure(
    name: str,
    out_dir,
    threads: int = 1,
    count: int | None = None,
) -> dict:
    """Produce one figure dataset: CSV, metadata sidecar, and plot script.

    count overrides the default grid resolution (101 for sweeps and cuts,
    21 for the optimizer curves). Returns the written paths.
    """
    if name not in FIGURE_NAMES:
        raise ValueError(
            f"unknown figure {name!r}; valid names: {', '.join(FIGURE_NAMES)}"
        )
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    csv_path = out / f"{name}.csv"
    meta_path = out / f"{name}.meta.json"
    script_path = out / f"{name}_plot.py"
    meta: dict = {"figure": name}

    if name in ("fig1a", "fig1b", "fig2a", "fig2b", "fig4a", "fig4b"):
        cfg, overlay = _heatmap_config(name, count or 101)
        rows = run_sweep(cfg, threads=threads)
        write_rows_csv(rows, csv_path, cfg.axis1.parameter, cfg.axis2.parameter)
        yscale = 'ax.set_yscale("log")' if cfg.axis2.scale == "log" else ""
        script = _fill(_HEATMAP_SCRIPT, NAME=name, AX1=cfg.axis1.parameter,
                       AX2=cfg.axis2.parameter, OVERLAY=_overlay_lines(overlay),
                       YSCALE=yscale)
        meta["config"] = cfg.to_dict()
    elif name in ("fig4c", "fig4d"):
        rows, cfg = _run_cut_figure(name, count or 201, threads)
        write_rows_csv(rows, csv_path, "eta_inv", "phi")
        script = _fill(_LINES_SCRIPT, NAME=name, GROUP="eta_inv", AX="phi",
                       VALUE="g2_a", XSCALE="")
        meta["config"] = cfg.to_dict()
    elif name in ("fig5a", "fig5b"):
        rows = _run_fig5(count or 101, threads)
        write_rows_csv(rows, csv_path, "coupling_j", "eta_inv")
        value = "g2_a" if name == "fig5a" else "mean_n_a"
        script = _fill(_LINES_SCRIPT, NAME=name, GROUP="coupling_j",
                       AX="eta_inv", VALUE=value,
                       XSCALE='ax.set_xscale("log")')
        meta["bindings"] = {
            "couplings": list(_FIG5_COUPLINGS), "phi": math.pi / 3,
            "eps_a": _EPS_A, "optimum": "single_drive",
        }
    else:  # fig3a / fig3b
        column = "delta_opt" if name == "fig3a" else "u_opt"
        records = _run_fig3(name, count or 21, threads)
        with open(csv_path, "w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(["eta", f"{column}_numeric",
                             f"{column}_dual_asymptotic",
                             f"{column}_single_asymptotic"])
            for record in records:
                writer.writerow([f"{v:.17g}" for v in record])
        yscale = 'ax.set_yscale("log")' if name == "fig3b" else ""
        script = _fill(_OPTIMUM_SCRIPT, NAME=name, COL=column, YSCALE=yscale)
        meta["bindings"] = {"coupling_j": _J_DEFAULT, "phi": 0.0,
                            "eps_a": _EPS_A, "solver": SOLVER_FULL_TRUNCATED}

    script_path.write_text(script)
    write_sidecar(meta_path, meta)
    return {"csv": str(csv_path), "meta": str(meta_path),
            "plot": str(script_path)}
