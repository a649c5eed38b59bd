"""End-to-end CLI behavior through main(argv), without subprocesses."""

import json

import pytest

from smallstretch.cli import main
from smallstretch.intmatrix import IntMatrix, matrix_to_text
from smallstretch.penner import (
    chain_system,
    curve_system_to_json,
    genus_two_example_word,
    word_to_json,
)

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


@pytest.fixture
def chain_files(tmp_path):
    system = tmp_path / "system.json"
    word = tmp_path / "word.json"
    system.write_text(json.dumps(curve_system_to_json(chain_system(2))))
    word.write_text(json.dumps(word_to_json(genus_two_example_word())))
    return str(system), str(word)


def test_pf_reports_certified_estimate(tmp_path, capsys):
    path = tmp_path / "m.txt"
    path.write_text(matrix_to_text(IntMatrix.from_rows(((2, 1), (1, 1)))))
    assert main(["pf", str(path)]) == 0
    out = capsys.readouterr().out
    assert "estimate: 2.618033988749" in out
    assert "bracket:" in out
    assert "eigenvector:" in out


def test_pf_missing_file_is_a_usage_error(tmp_path, capsys):
    assert main(["pf", str(tmp_path / "absent.txt")]) == 2
    assert "error" in capsys.readouterr().err


def test_pf_non_primitive_input_fails_cleanly(tmp_path, capsys):
    path = tmp_path / "m.txt"
    path.write_text("2\n0 1\n1 0\n")
    assert main(["pf", str(path)]) == 1
    assert "periodic" in capsys.readouterr().err


def test_penner_full_run(chain_files, capsys):
    system, word = chain_files
    assert main(["penner", "--system", system, "--word", word]) == 0
    out = capsys.readouterr().out
    assert "coverage certified at iterate: 1" in out
    assert "dilatation: 8.88748219369" in out


def test_penner_word_missing_curves_fails(tmp_path, capsys):
    system = tmp_path / "system.json"
    word = tmp_path / "word.json"
    system.write_text(json.dumps(curve_system_to_json(chain_system(2))))
    word.write_text(json.dumps([{"twist": "a1", "exp": 1}]))
    assert main(["penner", "--system", str(system), "--word", str(word)]) == 1
    out = capsys.readouterr().out
    assert "alpha coverage at iterate: None" in out
    assert "never twisted" in out


def test_penner_bad_json_is_usage_error(tmp_path, capsys):
    system = tmp_path / "system.json"
    system.write_text("{not json")
    word = tmp_path / "word.json"
    word.write_text("[]")
    assert main(["penner", "--system", str(system), "--word", str(word)]) == 2
    assert "error" in capsys.readouterr().err


def test_gamma_summary_and_exit(capsys):
    assert main(["gamma", "--n", "3", "--k", "4"]) == 0
    out = capsys.readouterr().out
    assert "girth: 3" in out
    assert "shift: 7" in out


def test_gamma_json_payload(capsys):
    assert main(["gamma", "--n", "5", "--k", "7", "--emit", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["girth"] == 14
    assert payload["shift"] == 29
    assert payload["girth_holds"] is True
    assert payload["structure_violations"] == []


def test_gamma_dot_to_file(tmp_path, capsys):
    out_path = tmp_path / "graph.dot"
    assert main(["gamma", "--n", "3", "--k", "4", "--emit", "dot",
                 "--out", str(out_path)]) == 0
    assert "doublecircle" in out_path.read_text()


def test_gamma_rejects_non_coprime(capsys):
    assert main(["gamma", "--n", "4", "--k", "6"]) == 2
    assert "coprime" in capsys.readouterr().err


def test_jacobsthal_single_value(capsys):
    assert main(["jacobsthal", "--max-n", "30"]) == 0
    assert capsys.readouterr().out == "jacobsthal(30) = 6\n"


def test_jacobsthal_fit_csv(tmp_path, capsys):
    out_path = tmp_path / "fit.csv"
    assert main(["jacobsthal", "--max-n", "50", "--fit",
                 "--out", str(out_path)]) == 0
    lines = out_path.read_text().strip().split("\n")
    assert lines[0] == "n,jacobsthal,log_squared,ratio"
    assert len(lines) == 49
    assert lines[1].startswith("3,2,")
    assert "fitted constant" in capsys.readouterr().out


def test_jacobsthal_fit_needs_three(capsys):
    assert main(["jacobsthal", "--max-n", "2", "--fit"]) == 2
    assert "at least 3" in capsys.readouterr().err


def test_jacobsthal_fit_plot(tmp_path, capsys):
    png = tmp_path / "fit.png"
    assert main(["jacobsthal", "--max-n", "30", "--fit", "--out",
                 str(tmp_path / "fit.csv"), "--plot", str(png)]) == 0
    assert png.read_bytes()[:8] == PNG_MAGIC


def test_bounds_csv_stdout(capsys):
    assert main(["bounds", "--n", "0", "--g-min", "2", "--g-max", "4"]) == 0
    lines = capsys.readouterr().out.strip().split("\n")
    assert lines[0] == "n,g,lower,upper,upper_provenance,D,E,K,C"
    assert len(lines) == 4
    assert lines[1].split(",")[4] == "penner_n0"


def test_bounds_json_and_plot(tmp_path, capsys):
    png = tmp_path / "decay.png"
    assert main(["bounds", "--n", "3", "--g-min", "2", "--g-max", "120",
                 "--format", "json", "--out", str(tmp_path / "b.json"),
                 "--plot", str(png)]) == 0
    payload = json.loads((tmp_path / "b.json").read_text())
    assert len(payload) == 119
    assert png.read_bytes()[:8] == PNG_MAGIC


def test_bounds_rejects_bad_genus_range(capsys):
    assert main(["bounds", "--n", "0", "--g-min", "5", "--g-max", "4"]) == 2
    assert "g-min" in capsys.readouterr().err


def test_verify_all_quick_writes_artifacts(tmp_path, capsys):
    outdir = tmp_path / "report"
    assert main(["verify-all", "--quick", "--seed", "5",
                 "--outdir", str(outdir)]) == 0
    out = capsys.readouterr().out
    assert "overall: PASS" in out
    for name in ("report.txt", "bounds.csv", "jacobsthal_fit.csv", "girth.csv",
                 "jacobsthal_fit.png", "bound_decay.png", "girth_margins.png"):
        assert (outdir / name).exists(), name
    report = (outdir / "report.txt").read_text()
    assert "mode=quick" in report and "seed=5" in report
    assert report.count("PASS") >= 10
    assert "INFO" in report
