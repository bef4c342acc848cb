"""Heterogeneous sensor population: node classes, deployment, field geometry."""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple

import numpy as np


def round_half_up(x: float) -> int:
    """Round to the nearest integer, halves away from zero (2.5 -> 3).

    Used everywhere a count or an epoch length is derived from a fractional
    product, so that all derived integers follow one convention.
    """
    return math.floor(x + 0.5)


class Position(NamedTuple):
    x: float
    y: float


def distance(a: Position, b: Position) -> float:
    """Euclidean distance in meters."""
    return math.hypot(a.x - b.x, a.y - b.y)


class NodeClass(Enum):
    NORMAL = "normal"
    ADVANCED = "advanced"
    SUPER = "super"


@dataclass
class HeterogeneityParams:
    """Three-level population mix.

    m is the fraction of all nodes with extra energy; of those, the fraction
    m0 are super nodes (1 + beta times the base energy) and the rest are
    advanced nodes (1 + alpha times the base energy).
    """

    m: float
    m0: float
    alpha: float
    beta: float

    def __post_init__(self):
        if not 0.0 <= self.m <= 1.0:
            raise ValueError(f"m must be in [0, 1], got {self.m}")
        if not 0.0 <= self.m0 <= 1.0:
            raise ValueError(f"m0 must be in [0, 1], got {self.m0}")
        if self.alpha < 0.0:
            raise ValueError(f"alpha must be >= 0, got {self.alpha}")
        if self.beta < self.alpha:
            raise ValueError(
                f"beta must be >= alpha, got beta={self.beta} < alpha={self.alpha}"
            )


@dataclass
class NetworkConfig:
    n_nodes: int
    field_side: float
    bs_pos: Position
    het: HeterogeneityParams
    e0: float
    rng_seed: int = 0

    def __post_init__(self):
        if self.n_nodes < 1:
            raise ValueError(f"n_nodes must be >= 1, got {self.n_nodes}")
        if self.field_side <= 0:
            raise ValueError(f"field_side must be > 0, got {self.field_side}")
        if self.e0 <= 0:
            raise ValueError(f"e0 must be > 0, got {self.e0}")
        if not isinstance(self.bs_pos, Position):
            self.bs_pos = Position(*self.bs_pos)


@dataclass
class Node:
    """One sensor node with its election bookkeeping.

    rounds_since_ch counts consecutive election rounds in which the node was
    eligible but not elected; last_ch_round is the round of its most recent
    term as cluster head (None if it never served).
    """

    id: int
    pos: Position
    node_class: NodeClass
    e_initial: float
    e_residual: float
    rounds_since_ch: int = 0
    eligible: bool = True
    alive: bool = True
    last_ch_round: int | None = field(default=None, repr=False)


def rng_streams(seed: int) -> tuple[np.random.Generator, np.random.Generator]:
    """Derive the two generators used by one run from a single seed.

    Stream 0 drives deployment, stream 1 drives elections and tie breaks.
    Keeping them separate means every protocol sees the identical network
    for a given seed, no matter how many election draws it consumes.
    """
    deploy_ss, elect_ss = np.random.SeedSequence(seed).spawn(2)
    return np.random.default_rng(deploy_ss), np.random.default_rng(elect_ss)


def class_counts(n_nodes: int, m: float, m0: float) -> tuple[int, int, int]:
    """Partition n_nodes into (normal, advanced, super) counts.

    n_super = round(N*m*m0), n_advanced = round(N*m) - n_super and the rest
    are normal; halves round up.
    """
    n_super = round_half_up(n_nodes * m * m0)
    n_rich = round_half_up(n_nodes * m)
    n_advanced = n_rich - n_super
    n_normal = n_nodes - n_rich
    if n_super < 0 or n_advanced < 0 or n_normal < 0:
        raise ValueError(
            f"class counts must be non-negative, got normal={n_normal} "
            f"advanced={n_advanced} super={n_super}"
        )
    return n_normal, n_advanced, n_super


def initial_energy(node_class: NodeClass, e0: float, het: HeterogeneityParams) -> float:
    if node_class is NodeClass.SUPER:
        return e0 * (1.0 + het.beta)
    if node_class is NodeClass.ADVANCED:
        return e0 * (1.0 + het.alpha)
    return e0


def total_initial_energy(config: NetworkConfig) -> float:
    """Total energy of the fresh population, N*E0*(1 + m*(alpha + m0*(beta - alpha)))."""
    het = config.het
    return config.n_nodes * config.e0 * (
        1.0 + het.m * (het.alpha + het.m0 * (het.beta - het.alpha))
    )


def deploy(config: NetworkConfig) -> list[Node]:
    """Create the node population, positions i.i.d. uniform on the field square.

    Node ids run 0..N-1; ids below n_super are super nodes, the next
    n_advanced are advanced, the remainder normal. Positions are drawn as one
    (N, 2) block from the deployment stream, so the layout is independent of
    the class labels and identical for every protocol run with the same seed.
    """
    deploy_rng, _ = rng_streams(config.rng_seed)
    coords = deploy_rng.uniform(0.0, config.field_side, size=(config.n_nodes, 2))
    n_normal, n_advanced, n_super = class_counts(
        config.n_nodes, config.het.m, config.het.m0
    )
    classes = (
        [NodeClass.SUPER] * n_super
        + [NodeClass.ADVANCED] * n_advanced
        + [NodeClass.NORMAL] * n_normal
    )
    nodes = []
    for i, (xy, node_class) in enumerate(zip(coords, classes)):
        e_init = initial_energy(node_class, config.e0, config.het)
        nodes.append(
            Node(
                id=i,
                pos=Position(float(xy[0]), float(xy[1])),
                node_class=node_class,
                e_initial=e_init,
                e_residual=e_init,
            )
        )
    return nodes
