"""Tests for scenario orchestration and the command line."""
import csv
import json
import math

import pytest

from app import __version__
from app.constants import GATE_PRESETS, Gate, Protocol
from app.main import build_parser, config_from_args, main
from app.runner import PROGRAM_COLUMNS, run_scenario
from app.schemas.experiment import ExperimentConfig
from app.utils.hashing import config_hash

from tests.conftest import FAST_SAMPLES


def _read(path):
    """(metadata, rows) of an artifact CSV."""
    metadata = {}
    body = []
    for line in path.read_text(encoding="utf-8").splitlines():
        if line.startswith("# "):
            key, _, value = line[2:].partition(": ")
            metadata[key] = value
        else:
            body.append(line)
    return metadata, list(csv.DictReader(body))


def test_table1(tmp_path):
    config = ExperimentConfig(scenario="table1", output=str(tmp_path))
    [path] = run_scenario(config)
    metadata, rows = _read(path)
    assert metadata["version"] == __version__
    assert metadata["config_hash"] == config_hash(config)
    assert metadata["seed"] == str(config.seed)
    assert len(rows) == 3
    for row in rows:
        assert float(row["lambda"]) == pytest.approx(GATE_PRESETS[row["gate"]][3], abs=2e-3)


def test_runs_are_deterministic(tmp_path):
    first = run_scenario(ExperimentConfig(scenario="table1", output=str(tmp_path / "a")))
    second = run_scenario(ExperimentConfig(scenario="table1", output=str(tmp_path / "b")))
    assert first[0].read_bytes() == second[0].read_bytes()


def test_synthesize_program_csv(tmp_path):
    config = ExperimentConfig(scenario="synthesize", gate=Gate.NOT, protocols=[Protocol.CHRW],
                              gate_times=[5], samples=FAST_SAMPLES, units="physical",
                              output=str(tmp_path))
    [path] = run_scenario(config)
    assert path.name == "program_NOT_CHRW_k5.csv"
    metadata, rows = _read(path)
    assert metadata["units"] == "physical"
    assert list(rows[0]) == PROGRAM_COLUMNS + ["t_ns"]
    assert len(rows) == FAST_SAMPLES
    assert float(rows[-1]["t_ns"]) == pytest.approx(0.5)


def test_leakage_rejects_two_qubit_gate(tmp_path):
    config = ExperimentConfig(scenario="leakage", gate=Gate.CNOT_LIKE, output=str(tmp_path))
    assert main(["leakage", "--gate", "CNOT-like", "--out", str(tmp_path)]) == 1
    with pytest.raises(ValueError):
        run_scenario(config)


def test_fluxonium_scenario(tmp_path):
    csv_path, json_path = run_scenario(ExperimentConfig(scenario="fluxonium", output=str(tmp_path)))
    _, rows = _read(csv_path)
    payload = json.loads(json_path.read_text(encoding="utf-8"))
    assert float(rows[0]["omega01"]) == pytest.approx(payload["data"]["spectrum"]["omega01"], rel=1e-10)
    assert payload["metadata"]["scenario"] == "fluxonium"


def test_cli_overrides_config_file(tmp_path):
    config_file = tmp_path / "run.cfg"
    config_file.write_text("[experiment]\nscenario = simulate\ngate = NOT\nT = 5\nseed = 3\n")
    args = build_parser().parse_args(
        ["simulate", "--config", str(config_file), "--gate", "Hadamard", "--T", "6,7", "--seed", "9"]
    )
    config = config_from_args(args)
    assert config.gate == Gate.HADAMARD
    assert config.gate_times == [6.0, 7.0]
    assert config.seed == 9


def test_reproduce_sets_scenario():
    args = build_parser().parse_args(["reproduce", "fig3", "--protocols", "CHRW,RWA-BS", "--full-grid"])
    config = config_from_args(args)
    assert config.scenario == "fig3"
    assert config.protocols == [Protocol.CHRW, Protocol.RWA_BS]
    assert config.rates.full_grid is True


def test_main_success(tmp_path, capsys):
    assert main(["reproduce", "table1", "--out", str(tmp_path)]) == 0
    assert (tmp_path / "table1.csv").exists()
    assert "table1.csv" in capsys.readouterr().out


def test_main_reports_bad_gate(tmp_path, capsys):
    assert main(["simulate", "--gate", "Toffoli", "--out", str(tmp_path)]) == 1
    assert "ERROR" in capsys.readouterr().err


def test_main_reports_bad_config_line(tmp_path, capsys):
    config_file = tmp_path / "bad.cfg"
    config_file.write_text("[experiment]\nscenario = simulate\ngate =\n")
    assert main(["simulate", "--config", str(config_file)]) == 1
    assert "line 3" in capsys.readouterr().err


def test_main_reports_missing_config(tmp_path):
    assert main(["simulate", "--config", str(tmp_path / "missing.cfg")]) == 1


def test_noise_uses_configured_gate_time(tmp_path):
    config = ExperimentConfig(scenario="noise", gate=Gate.HADAMARD, protocols=[Protocol.CHRW],
                              gate_times=[6], samples=FAST_SAMPLES, noise={"rates": [0.0]},
                              output=str(tmp_path))
    [path] = run_scenario(config)
    metadata, rows = _read(path)
    assert metadata["gate_k"] == "6"
    assert len(rows) == 1
    assert float(rows[0]["T"]) == pytest.approx(6 * math.pi)
