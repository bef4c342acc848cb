"""Cluster-head election rules for LEACH, EEHC and EASM behind one contract.

All three protocols share the same round structure: every alive node draws a
uniform number and becomes a cluster head when the draw falls below its
threshold. They differ in the per-class election probability and in whether
residual energy scales the threshold.

Rotation works on synchronized per-class epochs. A node with election
probability p_i belongs to epochs of round(1/p_i) rounds, anchored at round
0. Serving as head removes the node from the eligible set G for the rest of
its running epoch; when the epoch wraps, everyone in the class becomes
eligible again. The threshold denominator shrinks as an epoch progresses, so
nodes left in G late in an epoch face steeply rising odds.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from .network import HeterogeneityParams, Node, NodeClass, round_half_up

RESET_TRIGGER_MODES = ("per_class", "p_opt")


class ProtocolKind(Enum):
    LEACH = "leach"
    EEHC = "eehc"
    EASM = "easm"

    @classmethod
    def from_name(cls, name: str) -> "ProtocolKind":
        try:
            return cls(name.strip().lower())
        except ValueError:
            valid = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown protocol {name!r}, expected one of: {valid}")


@dataclass
class ElectionContext:
    """Round-level inputs shared by every node's threshold evaluation.

    reset_trigger selects the window after which a starving EASM node drops
    the energy factor from its threshold:

    * "per_class" (default): round(1/p_i) eligible rounds, i.e. one full
      rotation epoch of the node's own class;
    * "p_opt": round(1/p_opt) eligible rounds regardless of class.

    The per-class window is the default because the flat p_opt window is
    shorter than the normal-class epoch, which re-arms depleted normal nodes
    before they can ever skip a term; with it the energy factor has no effect
    on when the first node dies.
    """

    round: int
    p_opt: float
    het: HeterogeneityParams
    reset_trigger: str = "per_class"

    def __post_init__(self):
        if self.round < 0:
            raise ValueError(f"round must be >= 0, got {self.round}")
        if not 0.0 < self.p_opt <= 1.0:
            raise ValueError(f"p_opt must be in (0, 1], got {self.p_opt}")
        if self.reset_trigger not in RESET_TRIGGER_MODES:
            raise ValueError(
                f"reset_trigger must be one of {RESET_TRIGGER_MODES}, "
                f"got {self.reset_trigger!r}"
            )


def class_probability(
    kind: ProtocolKind, node_class: NodeClass, ctx: ElectionContext
) -> float:
    """Per-round election probability for a node of the given class.

    LEACH uses p_opt for every class. EEHC and EASM scale it by initial
    energy: p_normal = p_opt / (1 + m*(alpha + m0*(beta - alpha))), advanced
    and super nodes get (1 + alpha) and (1 + beta) times that. The weights
    keep the class-weighted sum of probabilities at n_nodes * p_opt.
    """
    if kind is ProtocolKind.LEACH:
        return ctx.p_opt
    het = ctx.het
    p_normal = ctx.p_opt / (1.0 + het.m * (het.alpha + het.m0 * (het.beta - het.alpha)))
    if node_class is NodeClass.ADVANCED:
        p = p_normal * (1.0 + het.alpha)
    elif node_class is NodeClass.SUPER:
        p = p_normal * (1.0 + het.beta)
    else:
        p = p_normal
    return min(p, 1.0)


@lru_cache(maxsize=None)
def epoch_length(p_i: float) -> int:
    """Rotation epoch, in rounds, for election probability p_i."""
    return max(1, round_half_up(1.0 / p_i))


def reset_trigger_rounds(p_i: float, ctx: ElectionContext) -> int:
    """Eligible-round count after which an unelected EASM node drops the
    energy factor."""
    p = p_i if ctx.reset_trigger == "per_class" else ctx.p_opt
    return epoch_length(p)


def threshold(kind: ProtocolKind, node: Node, p_i: float, ctx: ElectionContext) -> float:
    """Election threshold for one node this round, clamped to [0, 1].

    Ineligible and dead nodes get 0. Otherwise the base is
    p_i / (1 - p_i * (r mod round(1/p_i))). LEACH and EEHC return the base;
    EASM multiplies it by e_residual / e_initial, except that a node whose
    rounds_since_ch has reached its reset window returns the bare base again
    until it next serves, so low-energy nodes postpone duty without starving
    the network of heads forever.
    """
    if not node.alive or not node.eligible:
        return 0.0
    epoch = epoch_length(p_i)
    k = ctx.round % epoch
    denom = 1.0 - p_i * k
    # k <= epoch - 1 <= 1/p_i - 1/2, hence p_i * k <= 1 - p_i/2 < 1
    if denom <= 0.0:
        raise ArithmeticError(
            f"threshold denominator {denom} <= 0 for p_i={p_i}, round={ctx.round}"
        )
    t = p_i / denom
    if kind is ProtocolKind.EASM and node.rounds_since_ch < reset_trigger_rounds(p_i, ctx):
        t *= node.e_residual / node.e_initial
    return min(max(t, 0.0), 1.0)


def elect(
    kind: ProtocolKind,
    nodes: list[Node],
    ctx: ElectionContext,
    rng: np.random.Generator,
) -> list[int]:
    """Run one election over the population, returning head ids (ascending).

    One uniform is drawn per alive node, in ascending id order, as a single
    block from `rng`; dead nodes consume nothing, which keeps the stream
    position a pure function of the round history. Eligibility is refreshed
    from the epoch grid before each node's draw, elected nodes leave G and
    zero their rounds_since_ch, and eligible non-elected nodes increment it.
    An empty result is legal.
    """
    alive = sorted((n for n in nodes if n.alive), key=lambda n: n.id)
    draws = rng.random(len(alive))
    probabilities = {
        node_class: class_probability(kind, node_class, ctx)
        for node_class in NodeClass
    }
    elected = []
    for node, u in zip(alive, draws):
        p_i = probabilities[node.node_class]
        epoch_start = ctx.round - (ctx.round % epoch_length(p_i))
        node.eligible = node.last_ch_round is None or node.last_ch_round < epoch_start
        t = threshold(kind, node, p_i, ctx)
        if u < t:
            node.last_ch_round = ctx.round
            node.rounds_since_ch = 0
            node.eligible = False
            elected.append(node.id)
        elif node.eligible:
            node.rounds_since_ch += 1
    return elected
