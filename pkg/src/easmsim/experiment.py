"""Config-driven orchestration: runs, multi-seed replication, comparisons, CSV.

Output files (all CSV, written under the configured output directory):

* rounds_<protocol>_seed<seed>.csv - one row per round with columns
  round, alive_normal, alive_advanced, alive_super, alive_total, ch_count,
  energy_remaining_j, energy_spent_cum_j, bs_messages_cum
* summary.csv - protocol, seed, fnd, hna, lnd (one row per run)
* comparison.csv - protocol, fnd_mean, fnd_std, hna_mean, hna_std,
  lnd_mean, lnd_std (comparisons only)
* series_<protocol>.csv - per-round means across seeds (comparisons only)
* sweep.csv - param, value, protocol, then the comparison stat columns

Milestones that were not reached within the round budget appear as the
literal string "not_reached"; statistics over such runs are "not_reached"
as well rather than a number computed from a censored sample. Identical
configs and seeds reproduce identical bytes.
"""

import csv
import math
import statistics
from dataclasses import dataclass, field, replace
from pathlib import Path

from .engine import RoundReport, run_round
from .metrics import LifetimeSummary, fold
from .network import (
    HeterogeneityParams,
    NetworkConfig,
    Position,
    deploy,
    rng_streams,
)
from .protocols import RESET_TRIGGER_MODES, ElectionContext, ProtocolKind
from .radio import RadioParams

NOT_REACHED = "not_reached"

SWEEPABLE_PARAMS = ("m", "m0", "alpha", "beta")


@dataclass
class ExperimentConfig:
    network: NetworkConfig
    radio: RadioParams = field(default_factory=RadioParams)
    protocol: ProtocolKind = ProtocolKind.EASM
    p_opt: float = 0.1
    max_rounds: int = 5000
    seeds: tuple[int, ...] = (1,)
    output_dir: str | None = None
    reset_trigger: str = "per_class"

    def __post_init__(self):
        if not isinstance(self.protocol, ProtocolKind):
            self.protocol = ProtocolKind.from_name(str(self.protocol))
        if not 0.0 < self.p_opt <= 1.0:
            raise ValueError(f"p_opt must be in (0, 1], got {self.p_opt}")
        if self.max_rounds < 1:
            raise ValueError(f"max_rounds must be >= 1, got {self.max_rounds}")
        self.seeds = tuple(int(s) for s in self.seeds)
        if not self.seeds:
            raise ValueError("seeds must be non-empty")
        if self.reset_trigger not in RESET_TRIGGER_MODES:
            raise ValueError(
                f"reset_trigger must be one of {RESET_TRIGGER_MODES}, "
                f"got {self.reset_trigger!r}"
            )


def scenario_1(**overrides) -> ExperimentConfig:
    """Built-in scenario: N=100 on a 100 m square, BS at (50, 175),
    m=0.5, m0=0.4, alpha=1.5, beta=3."""
    config = ExperimentConfig(
        network=NetworkConfig(
            n_nodes=100,
            field_side=100.0,
            bs_pos=Position(50.0, 175.0),
            het=HeterogeneityParams(m=0.5, m0=0.4, alpha=1.5, beta=3.0),
            e0=0.5,
        ),
    )
    return replace(config, **overrides) if overrides else config


def scenario_2(**overrides) -> ExperimentConfig:
    """Built-in scenario: as scenario_1 but m=0.3, m0=0.6, alpha=2, beta=5."""
    config = scenario_1()
    config = replace(
        config,
        network=replace(
            config.network, het=HeterogeneityParams(m=0.3, m0=0.6, alpha=2.0, beta=5.0)
        ),
    )
    return replace(config, **overrides) if overrides else config


def simulate(config: ExperimentConfig, seed: int) -> list[RoundReport]:
    """One full run: deploy with `seed`, execute rounds until the population
    is gone or the budget runs out, return the report sequence."""
    network = replace(config.network, rng_seed=seed)
    nodes = deploy(network)
    _, election_rng = rng_streams(seed)
    reports = []
    for r in range(config.max_rounds):
        ctx = ElectionContext(
            round=r,
            p_opt=config.p_opt,
            het=network.het,
            reset_trigger=config.reset_trigger,
        )
        report = run_round(
            nodes, config.protocol, ctx, config.radio, network.bs_pos, election_rng
        )
        reports.append(report)
        if report.alive_total == 0:
            break
    return reports


@dataclass
class ProtocolStats:
    """Across-seed mean and population standard deviation per milestone.

    A statistic is None when any contributing run never reached the
    milestone. With a single seed the standard deviation is 0.
    """

    fnd_mean: float | None
    fnd_std: float | None
    hna_mean: float | None
    hna_std: float | None
    lnd_mean: float | None
    lnd_std: float | None


def _mean_std(values) -> tuple[float | None, float | None]:
    if any(v is None for v in values):
        return None, None
    return float(statistics.fmean(values)), float(statistics.pstdev(values))


def milestone_stats(summaries: dict[int, LifetimeSummary]) -> ProtocolStats:
    ordered = [summaries[s] for s in sorted(summaries)]
    fnd_mean, fnd_std = _mean_std([s.fnd for s in ordered])
    hna_mean, hna_std = _mean_std([s.hna for s in ordered])
    lnd_mean, lnd_std = _mean_std([s.lnd for s in ordered])
    return ProtocolStats(fnd_mean, fnd_std, hna_mean, hna_std, lnd_mean, lnd_std)


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    summaries: dict[int, LifetimeSummary]
    stats: ProtocolStats


@dataclass
class ComparisonResult:
    """One run of every protocol over a shared seed list and network."""

    seeds: tuple[int, ...]
    summaries: dict[ProtocolKind, dict[int, LifetimeSummary]]
    stats: dict[ProtocolKind, ProtocolStats]
    mean_alive: dict[ProtocolKind, list[float]]
    mean_energy: dict[ProtocolKind, list[float]]


def run_seeds(config: ExperimentConfig) -> dict[int, LifetimeSummary]:
    """Simulate every configured seed, no file output."""
    out = {}
    for seed in config.seeds:
        reports = simulate(config, seed)
        out[seed] = fold(reports, config.network.n_nodes)
    return out


def run_experiment(config: ExperimentConfig) -> ExperimentResult:
    """Run all seeds for one protocol; write rounds and summary CSVs when an
    output directory is configured."""
    summaries = {}
    for seed in config.seeds:
        reports = simulate(config, seed)
        summaries[seed] = fold(reports, config.network.n_nodes)
        if config.output_dir is not None:
            _write_rounds_csv(config, seed, reports)
    result = ExperimentResult(config, summaries, milestone_stats(summaries))
    if config.output_dir is not None:
        _write_summary_csv(
            Path(config.output_dir) / "summary.csv", {config.protocol: summaries}
        )
    return result


def compare(configs) -> ComparisonResult:
    """Run every protocol on identical deployments and aggregate.

    `configs` must hold exactly one config per protocol, identical except
    for the protocol field; the shared seeds guarantee each protocol sees
    the same node positions and classes.
    """
    configs = list(configs)
    kinds = [c.protocol for c in configs]
    if sorted(k.value for k in kinds) != sorted(k.value for k in ProtocolKind):
        raise ValueError("compare() needs exactly one config per protocol")
    reference = configs[0]
    for other in configs[1:]:
        if replace(other, protocol=reference.protocol) != reference:
            raise ValueError("compare() configs may differ only in protocol")
    by_kind = {c.protocol: c for c in configs}
    ordered = [by_kind[k] for k in ProtocolKind]

    summaries: dict[ProtocolKind, dict[int, LifetimeSummary]] = {}
    reports_by_kind: dict[ProtocolKind, dict[int, list[RoundReport]]] = {}
    for config in ordered:
        per_seed_reports = {seed: simulate(config, seed) for seed in config.seeds}
        reports_by_kind[config.protocol] = per_seed_reports
        summaries[config.protocol] = {
            seed: fold(reps, config.network.n_nodes)
            for seed, reps in per_seed_reports.items()
        }
    stats = {kind: milestone_stats(summaries[kind]) for kind in summaries}
    mean_alive = {
        kind: _mean_series([s.alive_series for s in summaries[kind].values()], pad="zero")
        for kind in summaries
    }
    mean_energy = {
        kind: _mean_series([s.energy_series for s in summaries[kind].values()], pad="last")
        for kind in summaries
    }
    result = ComparisonResult(
        seeds=reference.seeds,
        summaries=summaries,
        stats=stats,
        mean_alive=mean_alive,
        mean_energy=mean_energy,
    )
    if reference.output_dir is not None:
        out = Path(reference.output_dir)
        for config in ordered:
            for seed in config.seeds:
                _write_rounds_csv(config, seed, reports_by_kind[config.protocol][seed])
        _write_summary_csv(out / "summary.csv", summaries)
        _write_comparison_csv(out / "comparison.csv", stats)
        for kind in ProtocolKind:
            _write_series_csv(out / f"series_{kind.value}.csv", summaries[kind])
    return result


def compare_protocols(base: ExperimentConfig) -> ComparisonResult:
    """Convenience wrapper: compare all three protocols on `base`'s setup."""
    return compare([replace(base, protocol=kind) for kind in ProtocolKind])


@dataclass
class SweepRow:
    param: str
    value: float
    protocol: ProtocolKind
    stats: ProtocolStats


def sweep(base: ExperimentConfig, param: str, values) -> list[SweepRow]:
    """Vary one heterogeneity parameter over `values`, one experiment each.

    Only milestone statistics are collected; sweep.csv is the single output
    file when an output directory is configured.
    """
    if param not in SWEEPABLE_PARAMS:
        raise ValueError(
            f"param must be one of {SWEEPABLE_PARAMS}, got {param!r}"
        )
    rows = []
    for value in values:
        het = replace(base.network.het, **{param: float(value)})
        config = replace(
            base, network=replace(base.network, het=het), output_dir=None
        )
        summaries = run_seeds(config)
        rows.append(SweepRow(param, float(value), config.protocol, milestone_stats(summaries)))
    if base.output_dir is not None:
        _write_sweep_csv(Path(base.output_dir) / "sweep.csv", rows)
    return rows


def _fmt_milestone(value) -> str:
    return NOT_REACHED if value is None else repr(value)


def _mean_series(series_list, pad: str) -> list[float]:
    length = max(len(s) for s in series_list)
    total = [0.0] * length
    for series in series_list:
        for i in range(length):
            if i < len(series):
                v = series[i]
            else:
                v = 0.0 if pad == "zero" else series[-1]
            total[i] += v
    n = len(series_list)
    return [t / n for t in total]


def _open_out(path: Path):
    path.parent.mkdir(parents=True, exist_ok=True)
    return open(path, "w", newline="")


def _write_rounds_csv(config: ExperimentConfig, seed: int, reports) -> None:
    path = Path(config.output_dir) / f"rounds_{config.protocol.value}_seed{seed}.csv"
    spent_cum = 0.0
    bs_cum = 0
    with _open_out(path) as fh:
        writer = csv.writer(fh)
        writer.writerow(
            [
                "round",
                "alive_normal",
                "alive_advanced",
                "alive_super",
                "alive_total",
                "ch_count",
                "energy_remaining_j",
                "energy_spent_cum_j",
                "bs_messages_cum",
            ]
        )
        for report in reports:
            spent_cum += report.energy_spent_j
            bs_cum += report.bs_messages
            writer.writerow(
                [
                    report.round_index,
                    report.alive_normal,
                    report.alive_advanced,
                    report.alive_super,
                    report.alive_total,
                    report.ch_count,
                    repr(report.energy_remaining_j),
                    repr(spent_cum),
                    bs_cum,
                ]
            )


def _write_summary_csv(path: Path, summaries) -> None:
    with _open_out(path) as fh:
        writer = csv.writer(fh)
        writer.writerow(["protocol", "seed", "fnd", "hna", "lnd"])
        for kind in ProtocolKind:
            if kind not in summaries:
                continue
            for seed in sorted(summaries[kind]):
                s = summaries[kind][seed]
                writer.writerow(
                    [
                        kind.value,
                        seed,
                        _fmt_milestone(s.fnd),
                        _fmt_milestone(s.hna),
                        _fmt_milestone(s.lnd),
                    ]
                )


def _write_comparison_csv(path: Path, stats) -> None:
    with _open_out(path) as fh:
        writer = csv.writer(fh)
        writer.writerow(
            [
                "protocol",
                "fnd_mean",
                "fnd_std",
                "hna_mean",
                "hna_std",
                "lnd_mean",
                "lnd_std",
            ]
        )
        for kind in ProtocolKind:
            if kind not in stats:
                continue
            s = stats[kind]
            writer.writerow(
                [
                    kind.value,
                    _fmt_milestone(s.fnd_mean),
                    _fmt_milestone(s.fnd_std),
                    _fmt_milestone(s.hna_mean),
                    _fmt_milestone(s.hna_std),
                    _fmt_milestone(s.lnd_mean),
                    _fmt_milestone(s.lnd_std),
                ]
            )


def _write_series_csv(path: Path, summaries: dict[int, LifetimeSummary]) -> None:
    ordered = [summaries[s] for s in sorted(summaries)]
    alive = _mean_series([s.alive_series for s in ordered], pad="zero")
    energy = _mean_series([s.energy_series for s in ordered], pad="last")
    bs = _mean_series([s.bs_cumulative for s in ordered], pad="last")
    spent = _mean_series([s.spent_cumulative for s in ordered], pad="last")
    with _open_out(path) as fh:
        writer = csv.writer(fh)
        writer.writerow(
            [
                "round",
                "alive_mean",
                "energy_remaining_mean_j",
                "energy_spent_cum_mean_j",
                "bs_messages_cum_mean",
            ]
        )
        for i in range(len(alive)):
            writer.writerow([i, repr(alive[i]), repr(energy[i]), repr(spent[i]), repr(bs[i])])


def _write_sweep_csv(path: Path, rows) -> None:
    with _open_out(path) as fh:
        writer = csv.writer(fh)
        writer.writerow(
            [
                "param",
                "value",
                "protocol",
                "fnd_mean",
                "fnd_std",
                "hna_mean",
                "hna_std",
                "lnd_mean",
                "lnd_std",
            ]
        )
        for row in rows:
            s = row.stats
            writer.writerow(
                [
                    row.param,
                    repr(row.value),
                    row.protocol.value,
                    _fmt_milestone(s.fnd_mean),
                    _fmt_milestone(s.fnd_std),
                    _fmt_milestone(s.hna_mean),
                    _fmt_milestone(s.hna_std),
                    _fmt_milestone(s.lnd_mean),
                    _fmt_milestone(s.lnd_std),
                ]
            )


def pooled_std(std_a: float, std_b: float) -> float:
    """Pooled standard deviation of two equally sized groups."""
    return math.sqrt((std_a ** 2 + std_b ** 2) / 2.0)
