import json
from importlib import import_module, reload
from pathlib import Path
from unittest.mock import patch

import pytest

from tristab import main
from tristab.types.reports import CodimensionReport, VerificationMode
from tristab.types.surface import SurfaceSpec


def _run(argv: list[str]) -> int:
    with pytest.raises(SystemExit) as exit_info:
        main(argv)
    return exit_info.value.code


def test_stable_json(capsys: pytest.CaptureFixture[str]) -> None:
    assert _run(["stable", "--genus", "40", "--output", "json"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert document["kind"] == "stable"
    assert document["classes"] == [
        {"degree": 0, "weight": 0, "mult": 1},
        {"degree": 2, "weight": -1, "mult": 1},
        {"degree": 4, "weight": -2, "mult": 1},
    ]
    assert document["bound"] == 10
    assert document["strict"] is True
    assert document["elapsed"] is None


def test_framed_json(capsys: pytest.CaptureFixture[str]) -> None:
    assert _run(["framed", "--genus", "40", "--format", "json"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert document["framed"] is True
    assert [c["degree"] for c in document["classes"]] == [0, 2, 5, 7]


def test_confspace_text(capsys: pytest.CaptureFixture[str]) -> None:
    assert _run(["confspace", "--cells", "2,1,1,0", "--k", "3", "--output", "text"]) == 0
    assert capsys.readouterr().out == "deg 4: Q(2); deg 6: 2Q(3); deg 8: Q(4)\n"


def test_verify_codim(capsys: pytest.CaptureFixture[str]) -> None:
    argv = ["verify-codim", "--n", "1", "--h", "3", "--d", "7", "--N", "2"]
    assert _run([*argv, "--trials", "50", "--seed", "0", "--output", "json"]) == 0
    report = json.loads(capsys.readouterr().out)["report"]
    assert report["failures"] == 0
    assert report["elapsed"] is None


def test_verify_codim_failure_exit_status(
    capsys: pytest.CaptureFixture[str], caplog: pytest.LogCaptureFixture
) -> None:
    failed = CodimensionReport(
        spec=SurfaceSpec(n=1, h=3, d=7),
        N=2,
        mode=VerificationMode.GENERIC,
        ground_field="GF(2147483647)",
        trials=2,
        expected_rank=6,
        ranks=[6, 5],
        failures=1,
        seeds_of_failures=["0/1"],
    )
    with patch("tristab.commands.verification.verify_codimension", return_value=failed):
        status = _run(["verify-codim", "--n", "1", "--d", "7", "--N", "2", "--trials", "2"])
    assert status == 3
    assert "FAILED" in capsys.readouterr().out
    assert "VerificationFailed" in caplog.text
    assert "in 1 of 2 trials" in caplog.text


def test_verify_codim_paired(capsys: pytest.CaptureFixture[str]) -> None:
    assert _run(["verify-codim", "--n", "0", "--d", "5", "--k", "2", "--output", "json"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert document["kind"] == "paired-fibers"
    assert document["report"]["rank"] == 12


def test_verify_codim_needs_one_of_n_and_k() -> None:
    assert _run(["verify-codim", "--n", "1", "--d", "7"]) == 2
    assert _run(["verify-codim", "--n", "1", "--d", "7", "--N", "2", "--k", "1"]) == 2


def test_range_violation_exit_status(caplog: pytest.LogCaptureFixture) -> None:
    assert _run(["stratum", "--n", "1", "--genus", "5"]) == 2
    assert "RangeViolation" in caplog.text


def test_stratum_text(capsys: pytest.CaptureFixture[str]) -> None:
    assert _run(["stratum", "--n", "2", "--genus", "20"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("Cohomology of N_2 for g=20")
    assert "Scenario chosen (accepted)" in out
    assert "Scenario alternative (rejected)" in out


def test_chow(capsys: pytest.CaptureFixture[str]) -> None:
    assert _run(["chow", "--genus", "11", "--n", "1", "--up-to", "2"]) == 0
    out = capsys.readouterr().out
    assert "generator 1: 37*n1 + 46*m1" in out
    assert "dimensions: 1, 1, 0" in out


def test_chow_needs_degree_2() -> None:
    assert _run(["chow", "--genus", "11", "--n", "1", "--up-to", "1"]) == 2


def test_e1_page_latex(capsys: pytest.CaptureFixture[str]) -> None:
    assert _run(["e1-page", "--n", "1", "--d", "25", "--output", "latex"]) == 0
    out = capsys.readouterr().out
    assert "$2v-3$" in out and "$2v-18$" in out


def test_load(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    report = tmp_path / "stable.json"
    assert _run(["stable", "--genus", "20", "--output", "json", "--output-file", str(report)]) == 0
    assert _run(["load", "--input", str(report), "--output", "text"]) == 0
    assert capsys.readouterr().out.startswith("Stable cohomology of T_g for g=20")


def test_timings(capsys: pytest.CaptureFixture[str]) -> None:
    assert _run(["stable", "--genus", "12", "--output", "json", "--timings"]) == 0
    assert json.loads(capsys.readouterr().out)["elapsed"] >= 0


def test_main_module_import_does_not_run() -> None:
    with patch("tristab.main") as patched:
        reload(import_module("tristab.__main__"))
    patched.assert_not_called()
