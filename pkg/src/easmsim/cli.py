"""Command line front end.

    easmsim run     [--config FILE] [--protocol NAME] [--seed N ...]
                    [--rounds N] [--out DIR]
    easmsim compare [--config FILE] [--seed N ...] [--rounds N] [--out DIR]
    easmsim sweep   --param NAME --values V1 [V2 ...] [--config FILE]
                    [--protocol NAME] [--seed N ...] [--rounds N] [--out DIR]

Without --config the built-in scenario-1 defaults apply. Exit codes:
0 success, 1 config error, 2 I/O error.
"""

import argparse
import sys
from dataclasses import replace

from .configfile import ConfigError, load_config
from .experiment import (
    NOT_REACHED,
    ExperimentConfig,
    ProtocolStats,
    SWEEPABLE_PARAMS,
    compare_protocols,
    run_experiment,
    scenario_1,
    sweep,
)
from .protocols import ProtocolKind


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="easmsim", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--config", help="experiment config file (INI)")
        p.add_argument("--seed", type=int, action="append",
                       help="rng seed, repeatable")
        p.add_argument("--rounds", type=int, help="round budget per run")
        p.add_argument("--out", help="output directory for CSV files")

    run_p = sub.add_parser("run", help="simulate one protocol over the seeds")
    common(run_p)
    run_p.add_argument("--protocol",
                       choices=[k.value for k in ProtocolKind])

    cmp_p = sub.add_parser("compare",
                           help="run all three protocols on shared deployments")
    common(cmp_p)

    sweep_p = sub.add_parser("sweep",
                             help="vary one heterogeneity parameter over a list")
    common(sweep_p)
    sweep_p.add_argument("--protocol",
                         choices=[k.value for k in ProtocolKind])
    sweep_p.add_argument("--param", required=True, choices=SWEEPABLE_PARAMS)
    sweep_p.add_argument("--values", required=True, type=float, nargs="+")
    return parser


def _load(args) -> ExperimentConfig:
    config = load_config(args.config) if args.config else scenario_1()
    overrides = {}
    if getattr(args, "protocol", None):
        overrides["protocol"] = ProtocolKind.from_name(args.protocol)
    if args.seed:
        overrides["seeds"] = tuple(args.seed)
    if args.rounds is not None:
        overrides["max_rounds"] = args.rounds
    if args.out is not None:
        overrides["output_dir"] = args.out
    try:
        return replace(config, **overrides) if overrides else config
    except ValueError as exc:
        raise ConfigError(str(exc))


def _fmt_stat(value) -> str:
    return NOT_REACHED if value is None else f"{value:.1f}"


def _print_stats(protocol: str, stats: ProtocolStats) -> None:
    print(
        f"{protocol:6s} fnd {_fmt_stat(stats.fnd_mean)} +- {_fmt_stat(stats.fnd_std)}"
        f" | hna {_fmt_stat(stats.hna_mean)} +- {_fmt_stat(stats.hna_std)}"
        f" | lnd {_fmt_stat(stats.lnd_mean)} +- {_fmt_stat(stats.lnd_std)}"
    )


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = _load(args)
        if args.command == "run":
            result = run_experiment(config)
            _print_stats(config.protocol.value, result.stats)
        elif args.command == "compare":
            result = compare_protocols(config)
            for kind in ProtocolKind:
                _print_stats(kind.value, result.stats[kind])
        else:
            rows = sweep(config, args.param, args.values)
            for row in rows:
                print(f"{row.param} = {row.value}")
                _print_stats(row.protocol.value, row.stats)
        if config.output_dir is not None:
            print(f"wrote CSV files to {config.output_dir}")
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
