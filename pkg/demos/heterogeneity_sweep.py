"""Sweep the super-node fraction and watch the stable period move.

Varies m0 (the share of energy-rich nodes that are super rather than
advanced) for EEHC and EASM on a trimmed scenario-1 setup. More super nodes
means more total energy (beta > alpha) but also a heavier duty cycle for
them; the milestone statistics land in sweep-style rows just like the
`easmsim sweep` subcommand writes to sweep.csv.
"""

from dataclasses import replace

from easmsim import ProtocolKind, scenario_1, sweep

VALUES = [0.0, 0.4, 0.8]


def main():
    base = scenario_1(seeds=(0, 1), max_rounds=3500)
    for kind in (ProtocolKind.EEHC, ProtocolKind.EASM):
        print(f"\n{kind.value}: sweeping m0 over {VALUES} (2 seeds each)")
        rows = sweep(replace(base, protocol=kind), "m0", VALUES)
        print(f"  {'m0':>4s} {'FND mean':>9s} {'FND sd':>7s} {'HNA mean':>9s}")
        for row in rows:
            s = row.stats
            hna = f"{s.hna_mean:8.0f}" if s.hna_mean is not None else "   never"
            print(f"  {row.value:4.1f} {s.fnd_mean:9.0f} {s.fnd_std:7.0f} {hna:>9s}")


if __name__ == "__main__":
    main()
