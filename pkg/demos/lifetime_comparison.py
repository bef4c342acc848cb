"""Head-to-head lifetime comparison of LEACH, EEHC and EASM.

Runs all three protocols on identical scenario-1 deployments over a handful
of seeds, then plots the mean alive-node curve and the first-node-death /
half-alive milestones. Expect the stable period (time to first death) to
order EASM > EEHC > LEACH: weighting election probability by initial energy
spares the normal nodes, and the residual-energy factor then defers duty for
whichever nodes are closest to exhaustion.

A handful of seeds keeps the demo quick; the acceptance suite runs the same
comparison over 30 seeds.
"""

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from easmsim import ProtocolKind, compare_protocols, scenario_1

OUT = os.path.join(os.path.dirname(__file__), "figures")
COLORS = {ProtocolKind.LEACH: "tab:green",
          ProtocolKind.EEHC: "tab:orange",
          ProtocolKind.EASM: "tab:blue"}


def main():
    # 6000 rounds so the half-alive milestone lands for every seed; the
    # longest tails (a lone super node trickling frames to the BS) can
    # outlive even this budget, which the table reports as "not reached"
    config = scenario_1(seeds=tuple(range(5)), max_rounds=6000)
    print(f"comparing on {len(config.seeds)} shared seeds "
          f"(N={config.network.n_nodes}, budget {config.max_rounds} rounds, "
          f"takes ~half a minute)...")
    result = compare_protocols(config)

    print(f"\n{'protocol':8s} {'FND':>14s} {'HNA':>14s} {'LND':>14s}")
    for kind in ProtocolKind:
        s = result.stats[kind]
        def fmt(mean, std):
            return "not reached" if mean is None else f"{mean:6.0f} +- {std:4.0f}"
        print(f"{kind.value:8s} {fmt(s.fnd_mean, s.fnd_std):>14s} "
              f"{fmt(s.hna_mean, s.hna_std):>14s} {fmt(s.lnd_mean, s.lnd_std):>14s}")

    fnd_eehc = result.stats[ProtocolKind.EEHC].fnd_mean
    fnd_easm = result.stats[ProtocolKind.EASM].fnd_mean
    fnd_leach = result.stats[ProtocolKind.LEACH].fnd_mean
    print(f"\nstable period: EASM over EEHC {fnd_easm / fnd_eehc - 1:+.1%}, "
          f"EEHC over LEACH {fnd_eehc / fnd_leach - 1:+.1%}")

    fig, axes = plt.subplots(1, 2, figsize=(11.5, 4.2))
    for kind in ProtocolKind:
        alive = result.mean_alive[kind]
        axes[0].plot(alive, color=COLORS[kind], label=kind.value)
    axes[0].set_xlabel("round")
    axes[0].set_ylabel("alive nodes (mean over seeds)")
    axes[0].legend()
    axes[0].grid(alpha=0.3)

    width = 0.35
    x = np.arange(3)

    def series(attr):  # unreached milestones plot as gaps
        return [
            np.nan if getattr(result.stats[k], attr) is None
            else getattr(result.stats[k], attr)
            for k in ProtocolKind
        ]

    fnd, fnd_err = series("fnd_mean"), series("fnd_std")
    hna, hna_err = series("hna_mean"), series("hna_std")
    axes[1].bar(x - width / 2, fnd, width, yerr=fnd_err, capsize=3,
                label="first node dies")
    axes[1].bar(x + width / 2, hna, width, yerr=hna_err, capsize=3,
                label="half nodes alive")
    axes[1].set_xticks(x, [k.value for k in ProtocolKind])
    axes[1].set_ylabel("round")
    axes[1].legend()
    axes[1].grid(alpha=0.3, axis="y")
    fig.suptitle("Network lifetime, shared deployments")
    os.makedirs(OUT, exist_ok=True)
    path = os.path.join(OUT, "lifetime_comparison.png")
    fig.savefig(path, dpi=130, bbox_inches="tight")
    print(f"saved {path}")


if __name__ == "__main__":
    main()
