"""Lifetime and throughput metrics folded from round report streams."""

from dataclasses import dataclass

from .engine import RoundReport


@dataclass
class LifetimeSummary:
    """Milestones and per-round series for one simulation run.

    Milestone fields are round indices; None means the milestone was not
    reached within the simulated budget. fnd is the first round with a
    recorded death, hna the first round with at most half the nodes alive,
    lnd the first round with none alive.
    """

    n_nodes: int
    fnd: int | None
    hna: int | None
    lnd: int | None
    alive_series: list[int]
    energy_series: list[float]
    bs_cumulative: list[int]
    spent_cumulative: list[float]

    @property
    def n_rounds(self) -> int:
        return len(self.alive_series)


def fold(reports, n_nodes: int) -> LifetimeSummary:
    """Fold an in-order report sequence (round 0 first) into a summary.

    Raises ValueError when the reports are out of order. The half-alive
    boundary is alive <= n_nodes // 2, i.e. the round in which the count of
    living nodes first drops to half or fewer.
    """
    fnd = hna = lnd = None
    alive_series: list[int] = []
    energy_series: list[float] = []
    bs_cumulative: list[int] = []
    spent_cumulative: list[float] = []
    bs_total = 0
    spent_total = 0.0
    for i, report in enumerate(reports):
        if report.round_index != i:
            raise ValueError(
                f"reports out of order: expected round {i}, got {report.round_index}"
            )
        alive = report.alive_total
        if fnd is None and report.deaths:
            fnd = i
        if hna is None and alive <= n_nodes // 2:
            hna = i
        if lnd is None and alive == 0:
            lnd = i
        bs_total += report.bs_messages
        spent_total += report.energy_spent_j
        alive_series.append(alive)
        energy_series.append(report.energy_remaining_j)
        bs_cumulative.append(bs_total)
        spent_cumulative.append(spent_total)
    return LifetimeSummary(
        n_nodes=n_nodes,
        fnd=fnd,
        hna=hna,
        lnd=lnd,
        alive_series=alive_series,
        energy_series=energy_series,
        bs_cumulative=bs_cumulative,
        spent_cumulative=spent_cumulative,
    )


def messages_vs_energy(summary: LifetimeSummary) -> list[tuple[float, int]]:
    """Plot-ready (cumulative joules spent, cumulative BS messages) pairs."""
    return list(zip(summary.spent_cumulative, summary.bs_cumulative))
