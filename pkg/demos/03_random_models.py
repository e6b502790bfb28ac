"""Monte Carlo sweep over group counts for the two random network models.

For each model and parameter value, every trial draws a fresh network and a
random assignment of nodes to k groups, then computes the structural index.
The per-k box-plot summaries show the index growing with group
heterogeneity, growing with the attachment parameter (scale-free), and
dropping as rewiring creates node-sharing edges (small-world).

Writes CSVs to demo_output/ and, when matplotlib is importable, a box-plot
figure per model.

    python demos/03_random_models.py
"""

import os

from netcomplexity import ExperimentConfig, GeneratorSpec, run_experiment

OUT_DIR = "demo_output"
N = 60          # smaller than a production run; keep the demo snappy
TRIALS = 50
K_VALUES = (1, 15, 30, 45, 60)
SEED = 2026

os.makedirs(OUT_DIR, exist_ok=True)


def sweep(tag, spec):
    out = os.path.join(OUT_DIR, f"{tag}.csv")
    records, summaries = run_experiment(
        ExperimentConfig(k_values=K_VALUES, trials=TRIALS, master_seed=SEED,
                         generator=spec, output_path=out)
    )
    meds = {s["k"]: s["median"] for s in summaries}
    print(f"{tag:12s} per-k medians: {meds}")
    return records


print(f"n={N}, {TRIALS} trials per k, k in {K_VALUES}\n")

print("Scale-free (preferential attachment), m = 1, 2, 3:")
ba_records = {m: sweep(f"ba_m{m}", GeneratorSpec(model="barabasi_albert", n=N, m=m))
              for m in (1, 2, 3)}

print("\nSmall-world (ring rewiring), p = 0 .. 1:")
ws_records = {p: sweep(f"ws_p{p}", GeneratorSpec(model="watts_strogatz", n=N, ring_degree=4, p=p))
              for p in (0.0, 0.5, 1.0)}

print(f"\nPer-trial rows and per-k summaries written to {OUT_DIR}/")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not available; skipping the box-plot figure")
else:
    fig, axes = plt.subplots(1, 2, figsize=(11, 4), sharey=True)
    for ax, (title, records_by_param) in zip(
        axes,
        [("scale-free (m)", ba_records), ("small-world (p)", ws_records)],
    ):
        offsets = {0: -0.25, 1: 0.0, 2: 0.25}
        for i, (param, records) in enumerate(records_by_param.items()):
            data = [[r.phi_structural for r in records if r.k == k] for k in K_VALUES]
            pos = [j + offsets[i] for j in range(len(K_VALUES))]
            ax.boxplot(data, positions=pos, widths=0.2,
                       label=f"{title.split(' ')[-1].strip('()')}={param}")
        ax.set_xticks(range(len(K_VALUES)))
        ax.set_xticklabels(K_VALUES)
        ax.set_xlabel("number of groups k")
        ax.set_title(title)
    axes[0].set_ylabel("structural index")
    axes[0].legend(loc="lower right", fontsize=8)
    axes[1].legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    figure_path = os.path.join(OUT_DIR, "random_models.png")
    fig.savefig(figure_path, dpi=150)
    print(f"box plots saved to {figure_path}")
