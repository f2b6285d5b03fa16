import json

import pytest

from src.core.config import settings
from src.core.exceptions import UsageError
from src.selftest import FixtureManager, SelfTestRunner, Step


def write_suite(directory, name, steps):
    (directory / f"{name}.json").write_text(json.dumps({"name": name, "steps": steps}))


def test_loads_bundled_fixtures():
    manager = FixtureManager(settings.FIXTURES_DIR)
    assert manager.list_suites() == ["worked_examples"]
    assert len(manager.get_suite("worked_examples").steps) == 18


def test_suites_load_in_file_name_order(tmp_path):
    write_suite(tmp_path, "b_suite", [])
    write_suite(tmp_path, "a_suite", [])
    assert FixtureManager(tmp_path).list_suites() == ["a_suite", "b_suite"]


def test_bad_json(tmp_path):
    (tmp_path / "broken.json").write_text("{not json")
    with pytest.raises(UsageError) as e:
        FixtureManager(tmp_path)
    assert e.value.error_code == "bad_fixture"


def test_invalid_suite(tmp_path):
    (tmp_path / "nameless.json").write_text(json.dumps({"steps": []}))
    with pytest.raises(UsageError) as e:
        FixtureManager(tmp_path)
    assert e.value.error_code == "bad_fixture"


def test_unknown_suite(tmp_path):
    with pytest.raises(UsageError) as e:
        FixtureManager(tmp_path).get_suite("missing")
    assert e.value.error_code == "unknown_suite"


def test_step_passes_and_fails(tmp_path):
    write_suite(tmp_path, "partitions", [
        {"name": "ok", "check": "partitions", "input": {"g": 3, "N": 13}, "expected": {"triples": [[1, 1, 0]]}},
        {"name": "wrong", "check": "partitions", "input": {"g": 3, "N": 13}, "expected": {"triples": []}},
        {"name": "unknown", "check": "nonsense"},
    ])
    report = SelfTestRunner(FixtureManager(tmp_path)).run("partitions")
    assert report.total == 3
    assert report.failed == 2
    assert [r.passed for r in report.results] == [True, False, False]
    assert "triples" in report.results[1].detail
    assert "unknown check" in report.results[2].detail


def test_errors_become_observations(tmp_path):
    runner = SelfTestRunner(FixtureManager(tmp_path))
    step = Step(name="bad", check="order", input={"label": "C13", "params": {"u": "1"}}, expected={"error": "missing_parameter"})
    assert runner.run_step("adhoc", step).passed
