"""
Tests for campaign configs, the campaign manager and report output.
"""

import json
from pathlib import Path

import pytest

from components.errors import AssertionFailure, ConfigError
from components.verification.campaign_manager import campaign_manager, require_passed
from components.verification.report_generator import ReportGenerator
from models.campaign import COMMANDS, CONFIG_MODELS, TensorProbeConfig, VerifyAlgebraConfig, WhittakerSearchConfig
from models.reports import CampaignReport, CheckResult
from utils.config_loader import default_seed, load_config, log_level, resolve_seed
from utils.results_handler import ResultsHandler

CAMPAIGN_DIR = Path(__file__).resolve().parent.parent / "campaigns"

SMALL_ALGEBRA = {
    "index_bound": 1,
    "subalgebra_index_bound": 1,
    "translation_index_bound": 1,
    "straightening_words": 5,
    "word_length": 3,
    "word_index_bound": 1,
}


def _write(tmp_path, data, name="config.json"):
    path = tmp_path / name
    path.write_text(json.dumps(data), encoding="utf-8")
    return path


@pytest.mark.parametrize("command", COMMANDS)
def test_every_command_has_a_default_config(command):
    config = load_config(command)
    assert isinstance(config, CONFIG_MODELS[command])
    assert config.seed is None


def test_load_config_from_file(tmp_path):
    config = load_config("verify-algebra", _write(tmp_path, dict(SMALL_ALGEBRA, seed=7)))
    assert config.index_bound == 1
    assert config.seed == 7


@pytest.mark.parametrize(
    "data",
    [
        {"index_bound": 0},
        {"unknown_key": 1},
        {"translation": {"L[1]": "1"}},
        {"translation": {"I[-1]": "1/0"}},
        {"translation": {"I[-1]": "one"}},
    ],
)
def test_bad_algebra_config(tmp_path, data):
    with pytest.raises(ConfigError):
        load_config("verify-algebra", _write(tmp_path, data))


def test_bad_whittaker_data_in_config(tmp_path):
    data = {"cases": [{"name": "forced zero", "whittaker": {"m": 1, "n": 1, "values": {"L[3]": "1"}}}]}
    with pytest.raises(ConfigError):
        load_config("whittaker-search", _write(tmp_path, data))


def test_bad_omega_spec_in_config(tmp_path):
    data = {"instances": [{"name": "no eta", "omega": {"variant": "sigma_zero", "lambda": "2"}}]}
    with pytest.raises(ConfigError):
        load_config("tensor-probe", _write(tmp_path, data))


def test_unreadable_config(tmp_path):
    with pytest.raises(ConfigError):
        load_config("twist", tmp_path / "missing.json")
    broken = tmp_path / "broken.json"
    broken.write_text("{not json", encoding="utf-8")
    with pytest.raises(ConfigError):
        load_config("twist", broken)
    with pytest.raises(ConfigError):
        load_config("no-such-command")


def test_campaign_files_validate():
    for command in COMMANDS:
        config = load_config(command, CAMPAIGN_DIR / f"{command}.json")
        assert isinstance(config, CONFIG_MODELS[command])


def test_restricted_kind_needs_data():
    with pytest.raises(ValueError):
        TensorProbeConfig.model_validate(
            {"instances": [{"name": "lift", "omega": {"variant": "delta_only", "lambda": "2", "delta": [{"xexp": 1, "coeff": "1"}]}, "restricted": {"kind": "virasoro_style"}}]}
        )


def test_search_defaults_carry_expectations():
    expectations = {case.name: case.expect for case in WhittakerSearchConfig().cases}
    assert "none" in expectations.values()
    assert "witness" in expectations.values()


def test_seed_resolution(monkeypatch):
    monkeypatch.setenv("GALCONF_DEFAULT_SEED", "11")
    assert default_seed() == 11
    assert resolve_seed(None, None) == 11
    assert resolve_seed(None, 5) == 5
    assert resolve_seed(3, 5) == 3
    monkeypatch.setenv("GALCONF_DEFAULT_SEED", "eleven")
    with pytest.raises(ConfigError):
        resolve_seed(None, None)


def test_log_level(monkeypatch):
    monkeypatch.setenv("GALCONF_LOG_LEVEL", "info")
    assert log_level() == "INFO"
    assert log_level(verbose=True) == "DEBUG"


def test_verify_algebra_campaign():
    report = campaign_manager.run("verify-algebra", VerifyAlgebraConfig(**SMALL_ALGEBRA), seed=0)
    assert report.passed
    identifiers = [check.identifier for check in report.checks]
    assert identifiers == sorted(identifiers)
    assert {"Definition 2.1", "Theorem 3.5", "PBW", "subalgebras"} <= set(identifiers)
    assert report.summary["checks"] == len(report.checks)
    assert report.summary["failed"] == 0
    require_passed(report)


def test_campaign_is_a_function_of_its_seed():
    config = VerifyAlgebraConfig(**SMALL_ALGEBRA)
    first = ReportGenerator.generate_json_report(campaign_manager.run("verify-algebra", config, seed=4))
    second = ReportGenerator.generate_json_report(campaign_manager.run("verify-algebra", config, seed=4))
    assert first == second


def test_unknown_campaign():
    with pytest.raises(ConfigError):
        campaign_manager.run("nope", VerifyAlgebraConfig(), seed=0)


def _failing_report():
    report = CampaignReport(command="twist", seed=1)
    report.add(CheckResult(identifier="Lemma 3.7", name="ok", passed=True))
    report.add(CheckResult(identifier="Lemma 3.8", name="broken", passed=False, details={"value": "2"}))
    return report


def test_require_passed_names_failures():
    report = _failing_report()
    assert not report.passed
    with pytest.raises(AssertionFailure, match="1 of 2 checks failed"):
        require_passed(report)


def test_text_report():
    text = ReportGenerator.generate_text_report(_failing_report())
    assert "GALCONF TWIST REPORT" in text
    assert "RESULT: FAILED (1/2 checks)" in text
    assert "FAILURES" in text
    assert '"value": "2"' in text


def test_json_report_round_trip(tmp_path):
    handler = ResultsHandler(tmp_path)
    report = _failing_report()
    path = handler.save_report(report)
    assert path == tmp_path / "twist.json"
    assert path.read_text(encoding="utf-8").endswith("\n")
    assert handler.load_report("twist.json") == report
    assert handler.resolve(tmp_path / "elsewhere" / "r.json") == tmp_path / "elsewhere" / "r.json"


def test_default_twist_campaign():
    report = campaign_manager.run("twist", load_config("twist"), seed=0)
    assert report.passed, [check.name for check in report.failures]


@pytest.mark.slow
@pytest.mark.parametrize("command", [command for command in COMMANDS if command != "twist"])
def test_default_campaigns_pass(command):
    report = campaign_manager.run(command, load_config(command), seed=0)
    assert report.passed, [f"{check.identifier} | {check.name}" for check in report.failures]


def test_twist_text_report_lists_escaped_terms():
    report = campaign_manager.run("twist", load_config("twist"), seed=0)
    expected = {
        check.name.removesuffix(": twist")
        for check in report.checks
        if check.details.get("escaped")
    }
    assert expected
    assert set(report.summary["escaped"]) == expected
    text = ReportGenerator.generate_text_report(report)
    assert "escaped:" in text
    assert "evaluated as 0" in text


@pytest.mark.slow
@pytest.mark.parametrize("path", sorted(CAMPAIGN_DIR.glob("*.json")), ids=lambda path: path.stem)
def test_acceptance_campaigns_pass(path):
    config = load_config(path.stem, path)
    report = campaign_manager.run(path.stem, config, seed=resolve_seed(None, config.seed))
    assert report.checks
    assert report.passed, [f"{check.identifier} | {check.name}" for check in report.failures]
