"""Deploy a three-level population and draw the field.

Normal nodes are circles, advanced nodes crosses, super nodes plus signs;
the base station sits well outside the sensing square. Run it twice with the
same seed and the layout is identical.
"""

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from easmsim import NodeClass, deploy, scenario_1, total_initial_energy
from dataclasses import replace

OUT = os.path.join(os.path.dirname(__file__), "figures")

STYLE = {
    NodeClass.NORMAL: dict(marker="o", color="tab:blue", label="normal"),
    NodeClass.ADVANCED: dict(marker="x", color="tab:orange", label="advanced"),
    NodeClass.SUPER: dict(marker="+", color="tab:red", label="super"),
}


def main():
    config = scenario_1()
    network = replace(config.network, rng_seed=7)
    nodes = deploy(network)
    by_class = {c: [n for n in nodes if n.node_class is c] for c in NodeClass}
    print(f"deployed {len(nodes)} nodes on a {network.field_side:.0f} m square, seed 7")
    for node_class, members in by_class.items():
        example = members[0] if members else None
        energy = f"{example.e_initial:.2f} J each" if example else "-"
        print(f"  {node_class.value:8s} x{len(members):3d}  ({energy})")
    print(f"total initial energy: {total_initial_energy(network):.1f} J")

    fig, ax = plt.subplots(figsize=(5.5, 7))
    for node_class, members in by_class.items():
        ax.scatter(
            [n.pos.x for n in members],
            [n.pos.y for n in members],
            s=40, **STYLE[node_class],
        )
    ax.scatter([network.bs_pos.x], [network.bs_pos.y], marker="^", s=130,
               color="black", label="base station")
    ax.add_patch(plt.Rectangle((0, 0), network.field_side, network.field_side,
                               fill=False, color="gray", lw=0.8))
    ax.set_xlim(-10, network.field_side + 10)
    ax.set_ylim(-10, network.bs_pos.y + 15)
    ax.set_aspect("equal")
    ax.set_xlabel("x (m)")
    ax.set_ylabel("y (m)")
    ax.set_title("Three-level population, seed 7")
    ax.legend(loc="lower right")
    os.makedirs(OUT, exist_ok=True)
    path = os.path.join(OUT, "deployment_map.png")
    fig.savefig(path, dpi=130, bbox_inches="tight")
    print(f"saved {path}")


if __name__ == "__main__":
    main()
