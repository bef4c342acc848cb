"""Check the cluster-head supply each protocol produces.

Runs elections only (no energy drain) on a full-energy scenario-1
population, so the long-run mean head count per round should sit at
n_nodes * p_opt = 10 for all three protocols: LEACH rotates every node
through one flat 10-round epoch, while EEHC/EASM give each class its own
epoch whose per-round supply adds back up to the same total.
"""

import os
from dataclasses import replace

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from easmsim import ElectionContext, ProtocolKind, deploy, elect, scenario_1
from easmsim.network import rng_streams

OUT = os.path.join(os.path.dirname(__file__), "figures")
ROUNDS = 3000


def main():
    config = scenario_1()
    counts = {}
    for kind in ProtocolKind:
        network = replace(config.network, rng_seed=5)
        nodes = deploy(network)
        _, rng = rng_streams(5)
        per_round = []
        for r in range(ROUNDS):
            ctx = ElectionContext(round=r, p_opt=config.p_opt, het=network.het)
            per_round.append(len(elect(kind, nodes, ctx, rng)))
        counts[kind] = np.array(per_round)
        print(f"{kind.value:6s} mean heads/round {counts[kind].mean():6.3f} "
              f"(sd {counts[kind].std():.2f}) over {ROUNDS} elections")

    fig, axes = plt.subplots(1, 2, figsize=(11, 4))
    window = 50
    for kind, series in counts.items():
        rolling = np.convolve(series, np.ones(window) / window, mode="valid")
        axes[0].plot(rolling, label=kind.value)
        axes[1].hist(series, bins=np.arange(-0.5, 25.5), histtype="step",
                     label=kind.value)
    axes[0].axhline(10, color="gray", lw=0.8, ls=":")
    axes[0].set_xlabel("round")
    axes[0].set_ylabel(f"heads per round ({window}-round rolling mean)")
    axes[0].legend()
    axes[0].grid(alpha=0.3)
    axes[1].set_xlabel("heads in a round")
    axes[1].set_ylabel("rounds")
    axes[1].legend()
    fig.suptitle("Cluster-head supply at full energy")
    os.makedirs(OUT, exist_ok=True)
    path = os.path.join(OUT, "election_calibration.png")
    fig.savefig(path, dpi=130, bbox_inches="tight")
    print(f"saved {path}")


if __name__ == "__main__":
    main()
