import pytest

from easmsim.cli import main
from easmsim.configfile import ConfigError, dump_config, load_config
from easmsim.experiment import scenario_1
from easmsim.protocols import ProtocolKind

SMALL_INI = """\
[network]
n_nodes = 20
field_side = 60
bs_x = 30
bs_y = 105
e0 = 0.02

[experiment]
protocol = leach
max_rounds = 300
seeds = 1 2
"""


@pytest.fixture
def small_ini(tmp_path):
    path = tmp_path / "small.ini"
    path.write_text(SMALL_INI)
    return path


class TestConfigFile:
    def test_partial_file_fills_defaults(self, small_ini):
        config = load_config(small_ini)
        assert config.network.n_nodes == 20
        assert config.protocol is ProtocolKind.LEACH
        assert config.max_rounds == 300
        assert config.seeds == (1, 2)
        # untouched keys keep the shipped defaults
        assert config.radio.e_elec == 5e-9
        assert config.network.het.m == 0.5
        assert config.p_opt == 0.1
        assert config.reset_trigger == "per_class"

    def test_roundtrip(self, tmp_path):
        config = scenario_1(seeds=(4, 5), max_rounds=123, protocol=ProtocolKind.EEHC)
        path = tmp_path / "cfg.ini"
        path.write_text(dump_config(config))
        assert load_config(path) == config

    def test_comma_separated_seeds(self, tmp_path):
        path = tmp_path / "cfg.ini"
        path.write_text("[experiment]\nseeds = 3, 5, 8\n")
        assert load_config(path).seeds == (3, 5, 8)

    def test_bad_value_names_the_key(self, tmp_path):
        path = tmp_path / "cfg.ini"
        path.write_text("[network]\nn_nodes = plenty\n")
        with pytest.raises(ConfigError, match=r"\[network\] n_nodes"):
            load_config(path)

    def test_invariant_violation_is_config_error(self, tmp_path):
        path = tmp_path / "cfg.ini"
        path.write_text("[experiment]\nmax_rounds = 0\n")
        with pytest.raises(ConfigError, match="max_rounds"):
            load_config(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError, match="not found"):
            load_config(tmp_path / "nope.ini")


class TestCli:
    def test_run_writes_outputs(self, small_ini, tmp_path, capsys):
        out = tmp_path / "results"
        code = main(
            ["run", "--config", str(small_ini), "--protocol", "eehc",
             "--seed", "7", "--rounds", "200", "--out", str(out)]
        )
        assert code == 0
        assert (out / "rounds_eehc_seed7.csv").exists()
        assert (out / "summary.csv").exists()
        assert "eehc" in capsys.readouterr().out

    def test_compare_prints_all_protocols(self, small_ini, tmp_path, capsys):
        out = tmp_path / "cmp"
        code = main(
            ["compare", "--config", str(small_ini), "--rounds", "200",
             "--out", str(out)]
        )
        assert code == 0
        assert (out / "comparison.csv").exists()
        stdout = capsys.readouterr().out
        for name in ("leach", "eehc", "easm"):
            assert name in stdout

    def test_sweep(self, small_ini, tmp_path):
        out = tmp_path / "sw"
        code = main(
            ["sweep", "--config", str(small_ini), "--param", "m0",
             "--values", "0.2", "0.6", "--rounds", "150", "--out", str(out)]
        )
        assert code == 0
        assert (out / "sweep.csv").exists()

    def test_defaults_to_scenario_1(self, capsys):
        # no config file: scenario-1 network, trimmed for test speed
        code = main(["run", "--protocol", "leach", "--seed", "1", "--rounds", "5"])
        assert code == 0

    def test_unknown_protocol_exits_1(self, capsys):
        code = main(["run", "--protocol", "pegasis"])
        assert code == 1
        assert "config error" in capsys.readouterr().err

    def test_invalid_rounds_exits_1(self, small_ini, capsys):
        code = main(["run", "--config", str(small_ini), "--rounds", "0"])
        assert code == 1

    def test_missing_config_exits_1(self, capsys):
        code = main(["run", "--config", "/nonexistent/cfg.ini"])
        assert code == 1

    def test_unwritable_output_exits_2(self, small_ini, tmp_path, capsys):
        clash = tmp_path / "file_in_the_way"
        clash.write_text("occupied")
        code = main(
            ["run", "--config", str(small_ini), "--rounds", "50",
             "--out", str(clash / "sub")]
        )
        assert code == 2
        assert "i/o error" in capsys.readouterr().err
