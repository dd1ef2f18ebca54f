"""Regenerate a figure dataset and inspect the files it produces.

Each figure recipe writes a CSV with full-precision values, a JSON sidecar
recording the configuration and code version, and a standalone matplotlib
script that renders the panel from the CSV. Here we build the fig4d cuts
(two phase scans at fixed drive ratios) on a reduced grid so the demo runs
in seconds; drop count=... for the full-resolution dataset.
"""

import csv
import json
from pathlib import Path

import photonmol as pm

out_dir = Path("demo_output")
paths = pm.figure("fig4d", out_dir, count=41)
print("written files:")
for kind, path in paths.items():
    print(f"  {kind}: {path}")

with open(paths["csv"], newline="") as handle:
    rows = list(csv.DictReader(handle))
print(f"\n{len(rows)} rows; columns: {', '.join(rows[0])}")

print("\ng2 along the phase axis for both drive-ratio cuts:")
for cut in ("0.058", "0.116"):
    selected = [r for r in rows if r["eta_inv"].startswith(cut)]
    shown = selected[:: max(1, len(selected) // 5)]
    print(f"  1/eta = {cut}:")
    for r in shown:
        print(f"    phi = {float(r['phi']):.3f}: g2 = {float(r['g2_a']):.3e}")

meta = json.loads(Path(paths["meta"]).read_text())
print(f"\nsidecar: version {meta['version']}, generated {meta['timestamp']}")
print(f"render the panel with: python {paths['plot']}")

# The same dataset is available from the command line:
#   photonmol figure fig4d --out-dir demo_output --count 41
# and a custom sweep runs from a JSON config:
#   photonmol sweep --config my_sweep.json --out my_sweep.csv --threads 4
