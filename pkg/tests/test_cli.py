import csv
import io
import json

import pytest

from mockfourier.cli import run
from mockfourier.config import ConfigError, load_config, parse_config_text

EX38 = ["--R", "3", "--B", "0,1,2", "--L", "0,1,5"]
JP = ["--R", "4", "--B", "0,2"]


def read_csv(text):
    body = [line for line in text.splitlines() if not line.startswith("#")]
    return list(csv.reader(body))


def test_check_ok(capsys):
    assert run(["check", *JP, "--L", "0,1"]) == 0
    out = capsys.readouterr().out
    assert "hadamard: ok" in out and "N=2 d=2" in out


@pytest.mark.parametrize(
    "argv, message",
    [
        (["check", *JP, "--L", "0,2"], "not unitary"),
        (["check", "--R", "2", "--B", "0,2", "--L", "0,1"], "congruent digits"),
        (["check", "--R", "1", "--B", "0", "--L", "0"], "error"),
        (["cycles", *JP], "L is required"),
    ],
)
def test_validation_exit_code(capsys, argv, message):
    assert run(argv) == 2
    assert message in capsys.readouterr().err


def test_cycles_output(capsys):
    assert run(["cycles", *JP, "--L", "0,15"]) == 0
    assert capsys.readouterr().out.strip() == "{0}; {1,4}; {5}"


def test_spectrum_file(tmp_path, capsys):
    out = tmp_path / "lam.csv"
    assert run(["spectrum", *EX38, "--n", "1", "--out", str(out)]) == 0
    rows = read_csv(out.read_text())
    assert rows[0] == ["lambda"]
    assert [int(r[0]) for r in rows[1:]] == [-6, -5, -3, -2, -1, 0, 1, 2, 5]
    assert capsys.readouterr().out == ""


def test_spectrum_json_fractions(capsys):
    assert run(["spectrum", *JP, "--L", "0,1", "--n", "2", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["columns"] == ["lambda"]
    assert payload["header"]["seed"] == 0
    assert [r[0] for r in payload["rows"]] == [0, 1, 4, 5]


def test_header_and_byte_reproducibility(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    argv = ["norms", *JP, "--L", "0,17", "--n", "6", "--backend", "elton", "--orbit", "20000", "--seed", "7"]
    assert run([*argv, "--out", str(a)]) == 0
    assert run([*argv, "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    header = [line for line in a.read_text().splitlines() if line.startswith("#")]
    assert "# seed=7" in header and "# orbit_length=20000" in header and "# backend=elton" in header
    rows = read_csv(a.read_text())
    assert rows[0] == ["n", "norm", "log_norm", "backend", "depth", "seed"]
    assert len(rows) == 8


def test_norms_word_series(capsys):
    assert run(["norms", *EX38, "--n", "6"]) == 0
    text = capsys.readouterr().out
    assert "# fitted_rho=" in text
    rows = read_csv(text)[1:]
    assert [int(r[0]) for r in rows] == list(range(7))
    assert [int(r[4]) for r in rows] == [n + 6 for n in range(7)]


def test_delta_report(capsys):
    assert run(["delta", *JP, "--L", "0,17", "--depth", "18"]) == 0
    out = capsys.readouterr().out
    value = float(out.split("delta=")[1].split()[0])
    assert value == pytest.approx(1.04887, abs=1e-2)


def test_math_error_exit_code(capsys):
    # depth-1 anchors of the classical pair hit the zero of m_L half the time
    assert run(["delta", "--R", "2", "--B", "0,1", "--L", "0,1", "--depth", "1"]) == 3
    assert "log floor" in capsys.readouterr().err


def test_budget_exit_code(monkeypatch, capsys):
    monkeypatch.setenv("SFL_BUDGET", "1000")
    assert run(["delta", *JP, "--L", "0,1", "--depth", "12"]) == 4
    assert "budget" in capsys.readouterr().err.lower()


def test_mahler_verb(capsys):
    assert run(["mahler", "--L", "0,1,5"]) == 0
    out = capsys.readouterr().out
    assert "p(z) = 1 + z + z^5" in out
    assert "mahler_roots=1.3247" in out
    assert "+0.877438833 -0.744861767i" in out


def test_search_dr_verb(tmp_path):
    out = tmp_path / "dr.csv"
    assert run(["search-dr", "--R", "3", "--bound", "5", "--out", str(out)]) == 0
    rows = read_csv(out.read_text())
    assert rows[0] == ["L", "delta"]
    assert ["0;1;5", "1.32471796"] in rows


def test_config_file_and_override(tmp_path, capsys):
    cfg = tmp_path / "ex.cfg"
    cfg.write_text("# fractal example\nR = 4\nB = 0,2\nL = 0,1   # overridden below\n")
    assert run(["cycles", "--config", str(cfg), "--L", "0,15"]) == 0
    assert capsys.readouterr().out.strip() == "{0}; {1,4}; {5}"
    assert load_config(cfg).L == (0, 1)


@pytest.mark.parametrize(
    "text, where",
    [
        ("R = 4\nB 0,2\n", ":2:"),
        ("R = 4\ncolour = red\n", ":2: unknown field 'colour'"),
        ("R = four\n", ":1: field 'R'"),
        ("R = 4\nB = 0,2\nbackend = simpson\n", "backend"),
    ],
)
def test_config_errors_are_line_precise(text, where):
    with pytest.raises(ConfigError) as info:
        from mockfourier.config import ExperimentConfig

        ExperimentConfig(**parse_config_text(text, "x.cfg"))
    assert where in str(info.value)


def test_config_error_exit(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("R = 4\nB = 0,x\n")
    assert run(["check", "--config", str(cfg)]) == 2
    assert "bad.cfg:2" in capsys.readouterr().err


def test_reproduce_table_structure(tmp_path, capsys):
    out = tmp_path / "table.csv"
    code = run(["reproduce-table", "--depth", "14", "--out", str(out)])
    rows = read_csv(out.read_text())
    assert rows[0] == ["p", "delta_est", "delta_paper", "abs_err", "cycles_found", "cycles_paper", "match"]
    body = {int(r[0]): r for r in rows[1:]}
    assert sorted(body) == list(range(1, 30, 2))
    assert body[15][4] == "{1,4} {5}" and body[3][4] == "{1}" and body[17][4] == "none"
    assert code == (0 if all(r[6] == "yes" for r in rows[1:]) else 5)
    assert "rows within tolerance" in capsys.readouterr().out
