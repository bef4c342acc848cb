"""One simulation round: election, cluster formation, steady-state transfer.

Energy bookkeeping follows the usual desk-scale conventions: control traffic
(advertisements, joins, TDMA schedules) is free, each alive node contributes
one data frame per round, and aliveness is decided at round boundaries so a
node finishes its duties even if it overdraws mid-round and is then clamped
to zero.
"""

from dataclasses import dataclass

import numpy as np

from .network import Node, NodeClass, Position, distance
from .protocols import ElectionContext, ProtocolKind, elect
from .radio import RadioParams, aggregation_cost, rx_cost, tx_cost


@dataclass
class ClusterAssignment:
    """Round topology: head id -> member ids, plus the no-head fallback list.

    Every alive node appears exactly once, either as a key of `members`, in
    one of its value lists, or in `direct_to_bs` (only non-empty in rounds
    where no head was elected).
    """

    members: dict[int, list[int]]
    direct_to_bs: list[int]


@dataclass(frozen=True)
class RoundReport:
    """Per-round snapshot of everything the lifetime metrics need."""

    round_index: int
    ch_ids: tuple[int, ...]
    alive_normal: int
    alive_advanced: int
    alive_super: int
    energy_spent_j: float
    energy_remaining_j: float
    bs_ch_messages: int
    bs_direct_messages: int
    deaths: tuple[int, ...]

    @property
    def ch_count(self) -> int:
        return len(self.ch_ids)

    @property
    def alive_total(self) -> int:
        return self.alive_normal + self.alive_advanced + self.alive_super

    @property
    def bs_messages(self) -> int:
        return self.bs_ch_messages + self.bs_direct_messages


def form_clusters(
    nodes: list[Node],
    ch_ids,
    bs_pos: Position,
    rng: np.random.Generator,
) -> ClusterAssignment:
    """Attach every alive non-head node to its nearest head.

    With a symmetric channel the strongest advertisement is the nearest
    head, so membership minimizes Euclidean distance. Exact distance ties
    are broken uniformly at random (one draw per tied member, in ascending
    member id order). An empty head set sends everyone straight to the BS.
    """
    ch_ids = sorted(ch_ids)
    ch_set = set(ch_ids)
    by_id = {n.id: n for n in nodes}
    member_nodes = [n for n in nodes if n.alive and n.id not in ch_set]
    if not ch_ids:
        return ClusterAssignment(members={}, direct_to_bs=[n.id for n in member_nodes])
    members: dict[int, list[int]] = {c: [] for c in ch_ids}
    if member_nodes:
        mx = np.array([n.pos.x for n in member_nodes])
        my = np.array([n.pos.y for n in member_nodes])
        cx = np.array([by_id[c].pos.x for c in ch_ids])
        cy = np.array([by_id[c].pos.y for c in ch_ids])
        # squared distances: same argmin, and exact equality marks true ties
        d2 = (mx[:, None] - cx[None, :]) ** 2 + (my[:, None] - cy[None, :]) ** 2
        best = d2.min(axis=1)
        choice = d2.argmin(axis=1)
        n_tied = (d2 == best[:, None]).sum(axis=1)
        for row, node in enumerate(member_nodes):
            j = choice[row]
            if n_tied[row] > 1:
                tied = np.flatnonzero(d2[row] == best[row])
                j = tied[rng.integers(len(tied))]
            members[ch_ids[j]].append(node.id)
    return ClusterAssignment(members=members, direct_to_bs=[])


def run_steady_state(
    nodes: list[Node],
    assignment: ClusterAssignment,
    radio: RadioParams,
    bs_pos: Position,
) -> tuple[float, int, int]:
    """Charge one data-gathering cycle against the population.

    Members pay a transmit to their head; each head pays a receive per
    member frame, aggregation over members + its own frame, and a transmit
    to the BS; fallback nodes pay a direct transmit to the BS. Returns
    (energy_spent, head messages at BS, direct messages at BS). Residuals
    may go negative here; the caller clamps at the round boundary.
    """
    by_id = {n.id: n for n in nodes}
    bits = radio.msg_bits
    spent = 0.0
    for ch_id, member_ids in assignment.members.items():
        head = by_id[ch_id]
        for member_id in member_ids:
            member = by_id[member_id]
            cost = tx_cost(radio, bits, distance(member.pos, head.pos))
            member.e_residual -= cost
            spent += cost
        cost = (
            len(member_ids) * rx_cost(radio, bits)
            + aggregation_cost(radio, bits, len(member_ids) + 1)
            + tx_cost(radio, bits, distance(head.pos, bs_pos))
        )
        head.e_residual -= cost
        spent += cost
    for node_id in assignment.direct_to_bs:
        node = by_id[node_id]
        cost = tx_cost(radio, bits, distance(node.pos, bs_pos))
        node.e_residual -= cost
        spent += cost
    return spent, len(assignment.members), len(assignment.direct_to_bs)


def run_round(
    nodes: list[Node],
    kind: ProtocolKind,
    ctx: ElectionContext,
    radio: RadioParams,
    bs_pos: Position,
    rng: np.random.Generator,
) -> RoundReport:
    """Execute one full round and report on it.

    Order of operations: refresh alive flags (a node lives this round iff
    its residual is positive at round start, deaths recorded here), elect
    heads, form clusters, run the steady state, clamp negative residuals.
    The rng is consumed by the election block draw first, then by any
    tie-break draws during cluster formation.
    """
    deaths = []
    for node in nodes:
        if node.alive and node.e_residual <= 0.0:
            node.alive = False
            node.eligible = False
            deaths.append(node.id)
    counts = {NodeClass.NORMAL: 0, NodeClass.ADVANCED: 0, NodeClass.SUPER: 0}
    for node in nodes:
        if node.alive:
            counts[node.node_class] += 1
    ch_ids = elect(kind, nodes, ctx, rng)
    assignment = form_clusters(nodes, ch_ids, bs_pos, rng)
    spent, bs_ch, bs_direct = run_steady_state(nodes, assignment, radio, bs_pos)
    for node in nodes:
        if node.e_residual < 0.0:
            node.e_residual = 0.0
    remaining = sum(node.e_residual for node in nodes)
    return RoundReport(
        round_index=ctx.round,
        ch_ids=tuple(ch_ids),
        alive_normal=counts[NodeClass.NORMAL],
        alive_advanced=counts[NodeClass.ADVANCED],
        alive_super=counts[NodeClass.SUPER],
        energy_spent_j=spent,
        energy_remaining_j=remaining,
        bs_ch_messages=bs_ch,
        bs_direct_messages=bs_direct,
        deaths=tuple(deaths),
    )
