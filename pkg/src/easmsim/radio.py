"""First-order radio dissipation model: transmit, receive and aggregation costs."""

from dataclasses import dataclass

import numpy as np


@dataclass
class RadioParams:
    """Radio constants. Defaults are the usual desk-scale simulation values.

    e_elec   J/bit      electronics cost, paid per bit on both ends
    eps_fs   J/bit/m^2  free-space amplifier coefficient (d < d0)
    eps_mp   J/bit/m^4  multipath amplifier coefficient (d >= d0)
    e_da     J/bit per signal, data aggregation at a cluster head
    d0       m          branch crossover distance
    msg_bits bits per data frame
    """

    e_elec: float = 5e-9
    eps_fs: float = 10e-12
    eps_mp: float = 0.0013e-12
    e_da: float = 5e-9
    d0: float = 70.0
    msg_bits: int = 4000

    def __post_init__(self):
        for name in ("e_elec", "eps_fs", "eps_mp", "e_da", "d0", "msg_bits"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be > 0, got {getattr(self, name)}")


def tx_cost(params: RadioParams, bits, d):
    """Energy to transmit `bits` over distance d.

    bits*e_elec + bits*eps_fs*d^2 below d0, bits*e_elec + bits*eps_mp*d^4 at
    or above it. The model is piecewise and may jump at d0 when d0 differs
    from sqrt(eps_fs/eps_mp). Accepts scalars or numpy arrays for d.
    """
    if isinstance(d, np.ndarray):
        amp = np.where(d < params.d0, params.eps_fs * (d * d), params.eps_mp * d ** 4)
        return bits * params.e_elec + bits * amp
    if d < params.d0:
        return bits * params.e_elec + bits * (params.eps_fs * (d * d))
    return bits * params.e_elec + bits * (params.eps_mp * d ** 4)


def rx_cost(params: RadioParams, bits) -> float:
    """Energy to receive `bits`: the electronics term only."""
    return bits * params.e_elec


def aggregation_cost(params: RadioParams, bits, n_signals) -> float:
    """Energy to compress n_signals frames of `bits` each into one frame.

    n_signals counts the frames received from members plus the head's own
    sensed frame.
    """
    return bits * params.e_da * n_signals
