# %% [markdown]
# # Reading the reproduced grids
#
# ``scripts/reproduce.sh`` trains one model per training noise level and
# evaluates each at eleven inference noise levels, 40 trials per cell. This
# script prints the grids and the weight statistics from ``runs/``.

# %%
from pathlib import Path

import numpy as np

from noisyrnn import AccuracyGrid, load_checkpoint, weight_power
from noisyrnn.cli import ckpt_name

runs = Path("runs")


def show(arch):
    g = AccuracyGrid.from_csv(runs / arch / "grid.csv")
    print(f"{arch}: rows sigma_train, columns sigma_val")
    print("      " + " ".join(f"{v:5.1f}" for v in g.sigma_val))
    for st, row in zip(g.sigma_train, g.mean):
        print(f"{st:5.1f} " + " ".join(f"{100 * a:5.1f}" for a in row))
    print()


for arch in ("lstm-rows", "rnn-rows", "lstm-strokes"):
    if (runs / arch / "grid.csv").exists():
        show(arch)

# %% [markdown]
# The conventional model (top row) collapses as inference noise grows, while
# models trained with noise stay flat. Noise training also pushes the weights
# outward: larger weights give a larger signal against the same noise.

# %%
for s in (0.0, 0.5, 1.0):
    m = load_checkpoint(runs / "lstm-rows" / ckpt_name("lstm-rows", s)).model
    w = m.flat_params()
    print(f"sigma_train {s:.1f}: weight power {weight_power(m):.4f}  std {w.std():.4f}  max |w| {np.abs(w).max():.2f}")
