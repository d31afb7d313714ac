"""
Tests for the command line entry point and its exit codes.
"""

import json

import pytest

import main
from components.verification.campaign_manager import campaign_manager
from models.reports import CampaignReport, CheckResult


@pytest.fixture
def small_config(tmp_path):
    path = tmp_path / "algebra.json"
    path.write_text(
        json.dumps({
            "index_bound": 1,
            "subalgebra_index_bound": 1,
            "translation_index_bound": 1,
            "straightening_words": 3,
            "word_length": 2,
            "word_index_bound": 1,
        }),
        encoding="utf-8",
    )
    return path


def test_success_writes_json(tmp_path, small_config, capsys):
    output = tmp_path / "out" / "report.json"
    assert main.main(["verify-algebra", "--config", str(small_config), "--json", str(output), "--seed", "3"]) == main.EXIT_OK
    report = json.loads(output.read_text(encoding="utf-8"))
    assert report["command"] == "verify-algebra"
    assert report["seed"] == 3
    assert report["passed"] is True
    assert capsys.readouterr().out == ""


def test_text_report_on_stdout(small_config, capsys):
    assert main.main(["verify-algebra", "--config", str(small_config)]) == main.EXIT_OK
    assert "GALCONF VERIFY-ALGEBRA REPORT" in capsys.readouterr().out


def test_bad_config_exit_code(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"index_bound": -1}), encoding="utf-8")
    assert main.main(["verify-algebra", "--config", str(path)]) == main.EXIT_CONFIG
    assert main.main(["verify-algebra", "--config", str(tmp_path / "absent.json")]) == main.EXIT_CONFIG


def test_unknown_command_is_a_usage_error():
    with pytest.raises(SystemExit) as exit_info:
        main.main(["no-such-command"])
    assert exit_info.value.code == main.EXIT_CONFIG


def test_failed_check_exit_code(monkeypatch, small_config):
    def failing(config, rng, recorder):
        recorder.record("Lemma 3.2(1)", "forced failure", False, {})
        return {}

    monkeypatch.setitem(campaign_manager.campaigns, "verify-algebra", failing)
    assert main.main(["verify-algebra", "--config", str(small_config)]) == main.EXIT_FAILED


def test_unexpected_error_exit_code(monkeypatch, small_config):
    def crashing(config, rng, recorder):
        raise RuntimeError("boom")

    monkeypatch.setitem(campaign_manager.campaigns, "verify-algebra", crashing)
    assert main.main(["verify-algebra", "--config", str(small_config)]) == main.EXIT_FAILED


def test_report_model_defaults():
    report = CampaignReport(command="psi14")
    assert report.passed
    report.add(CheckResult(identifier="x", name="y", passed=True))
    assert report.failures == []
