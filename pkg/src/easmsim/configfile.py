"""INI-style experiment config files.

Sections and keys map one-to-one onto ExperimentConfig:

    [network]        n_nodes, field_side, bs_x, bs_y, e0
    [heterogeneity]  m, m0, alpha, beta
    [radio]          e_elec, eps_fs, eps_mp, e_da, d0, msg_bits
    [experiment]     protocol, p_opt, max_rounds, seeds, output_dir,
                     reset_trigger

`seeds` is a whitespace- or comma-separated integer list. Every key has a
shipped default (scenario 1 with the standard radio constants), so a config
file only needs the keys it wants to change.
"""

import configparser
from dataclasses import replace

from .experiment import ExperimentConfig, scenario_1
from .network import HeterogeneityParams, NetworkConfig, Position
from .protocols import ProtocolKind
from .radio import RadioParams


class ConfigError(Exception):
    """A config file or CLI value that cannot be used, naming the culprit."""


def _get(parser, section, key, default, convert):
    if not parser.has_option(section, key):
        return default
    raw = parser.get(section, key)
    try:
        return convert(raw)
    except (TypeError, ValueError):
        raise ConfigError(f"[{section}] {key}: cannot parse {raw!r}")


def _parse_seeds(raw: str) -> tuple[int, ...]:
    parts = raw.replace(",", " ").split()
    if not parts:
        raise ValueError("empty seed list")
    return tuple(int(p) for p in parts)


def load_config(path) -> ExperimentConfig:
    """Read a config file, falling back to scenario-1 defaults per key."""
    parser = configparser.ConfigParser()
    read = parser.read(path)
    if not read:
        raise ConfigError(f"config file not found: {path}")
    base = scenario_1()
    net, het, radio = base.network, base.network.het, base.radio

    het = HeterogeneityParams(
        m=_get(parser, "heterogeneity", "m", het.m, float),
        m0=_get(parser, "heterogeneity", "m0", het.m0, float),
        alpha=_get(parser, "heterogeneity", "alpha", het.alpha, float),
        beta=_get(parser, "heterogeneity", "beta", het.beta, float),
    )
    network = NetworkConfig(
        n_nodes=_get(parser, "network", "n_nodes", net.n_nodes, int),
        field_side=_get(parser, "network", "field_side", net.field_side, float),
        bs_pos=Position(
            _get(parser, "network", "bs_x", net.bs_pos.x, float),
            _get(parser, "network", "bs_y", net.bs_pos.y, float),
        ),
        het=het,
        e0=_get(parser, "network", "e0", net.e0, float),
    )
    radio = RadioParams(
        e_elec=_get(parser, "radio", "e_elec", radio.e_elec, float),
        eps_fs=_get(parser, "radio", "eps_fs", radio.eps_fs, float),
        eps_mp=_get(parser, "radio", "eps_mp", radio.eps_mp, float),
        e_da=_get(parser, "radio", "e_da", radio.e_da, float),
        d0=_get(parser, "radio", "d0", radio.d0, float),
        msg_bits=_get(parser, "radio", "msg_bits", radio.msg_bits, int),
    )
    try:
        return ExperimentConfig(
            network=network,
            radio=radio,
            protocol=_get(
                parser, "experiment", "protocol", base.protocol,
                ProtocolKind.from_name,
            ),
            p_opt=_get(parser, "experiment", "p_opt", base.p_opt, float),
            max_rounds=_get(parser, "experiment", "max_rounds", base.max_rounds, int),
            seeds=_get(parser, "experiment", "seeds", base.seeds, _parse_seeds),
            output_dir=_get(parser, "experiment", "output_dir", None, str),
            reset_trigger=_get(
                parser, "experiment", "reset_trigger", base.reset_trigger, str
            ),
        )
    except ValueError as exc:
        raise ConfigError(str(exc))


def dump_config(config: ExperimentConfig) -> str:
    """Render a config back to file text (every key explicit)."""
    net, het, radio = config.network, config.network.het, config.radio
    lines = [
        "[network]",
        f"n_nodes = {net.n_nodes}",
        f"field_side = {net.field_side!r}",
        f"bs_x = {net.bs_pos.x!r}",
        f"bs_y = {net.bs_pos.y!r}",
        f"e0 = {net.e0!r}",
        "",
        "[heterogeneity]",
        f"m = {het.m!r}",
        f"m0 = {het.m0!r}",
        f"alpha = {het.alpha!r}",
        f"beta = {het.beta!r}",
        "",
        "[radio]",
        f"e_elec = {radio.e_elec!r}",
        f"eps_fs = {radio.eps_fs!r}",
        f"eps_mp = {radio.eps_mp!r}",
        f"e_da = {radio.e_da!r}",
        f"d0 = {radio.d0!r}",
        f"msg_bits = {radio.msg_bits}",
        "",
        "[experiment]",
        f"protocol = {config.protocol.value}",
        f"p_opt = {config.p_opt!r}",
        f"max_rounds = {config.max_rounds}",
        "seeds = " + " ".join(str(s) for s in config.seeds),
        f"reset_trigger = {config.reset_trigger}",
    ]
    if config.output_dir is not None:
        lines.append(f"output_dir = {config.output_dir}")
    return "\n".join(lines) + "\n"
