import json
from pathlib import Path

from mzvff.bundled import bundled_specs, genus1_spec_from_curve
from mzvff.cli import main
from mzvff.fieldspec import spec_from_dict
from mzvff.oracle import elliptic_point_count
from mzvff.verification import CheckContext, REGISTRY, available_checks, run_checks

SPEC_DIR = Path(__file__).resolve().parent.parent / "specs"


def test_default_suite_all_green():
    results = run_checks()
    failures = [r.describe() for r in results if not r.passed]
    assert not failures, failures
    assert len(results) > 100


def test_every_check_yields_results():
    context = CheckContext()
    for name in available_checks():
        assert list(REGISTRY[name](context)), name


def test_default_verify_command_exits_zero(capsys):
    assert main(["verify"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out


def test_bundled_json_files_match_registry():
    for name, spec in bundled_specs().items():
        path = SPEC_DIR / f"{name}.json"
        with open(path) as handle:
            assert spec_from_dict(json.load(handle)) == spec, name


def test_l_form_file_matches_counts_file():
    with open(SPEC_DIR / "genus1_q5_L.json") as handle:
        via_l = spec_from_dict(json.load(handle))
    assert via_l == bundled_specs()["genus1_q5"]


def test_genus1_class_numbers_come_from_point_counts():
    assert bundled_specs()["genus1_q5"].class_number == elliptic_point_count(5, 1, 0) == 4
    assert bundled_specs()["genus1_q7"].class_number == elliptic_point_count(7, 1, 0) == 8
    assert genus1_spec_from_curve(5, 1, 0) == bundled_specs()["genus1_q5"]
