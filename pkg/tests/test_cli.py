import csv
import io
import json

import pytest

from phinfo.cli import main

HEADER = "molecule,n,l,q,space,method,value,err,norm_deficit"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_table_csv_shape(capsys):
    code, out, err = run(capsys, "table", "--measure", "fisher", "--space", "position",
                         "--molecule", "Na2", "--n", "0..10", "--method", "analytic")
    assert code == 0 and err == ""
    rows = list(csv.reader(io.StringIO(out)))
    assert ",".join(rows[0]) == HEADER
    assert len(rows) == 12
    assert rows[1][:6] == ["Na2", "0", "0", "", "position", "analytic"]
    assert rows[1][6] == "4.03474"


def test_table_is_deterministic(capsys):
    argv = ("table", "--measure", "renyi", "--space", "position", "--q", "2",
            "--molecule", "Cl2", "--n", "0..3", "--method", "both")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_table_json_format(capsys):
    code, out, _ = run(capsys, "table", "--measure", "onicescu", "--space", "momentum",
                       "--molecule", "NO+", "--n", "0..1", "--format", "json")
    assert code == 0
    records = json.loads(out)
    assert len(records) == 2
    assert set(records[0]) == set(HEADER.split(","))
    assert records[0]["molecule"] == "NO+"
    assert records[0]["q"] is None


def test_full_precision_flag(capsys):
    _, short, _ = run(capsys, "table", "--measure", "fisher", "--space", "position",
                      "--molecule", "Na2", "--n", "0", "--method", "analytic")
    _, full, _ = run(capsys, "table", "--measure", "fisher", "--space", "position",
                     "--molecule", "Na2", "--n", "0", "--method", "analytic",
                     "--full-precision")
    short_val = short.splitlines()[1].split(",")[6]
    full_val = full.splitlines()[1].split(",")[6]
    assert len(full_val) > len(short_val)
    assert float(full_val) == pytest.approx(float(short_val), rel=1e-5)


def test_unknown_molecule_fails(capsys):
    code, _, err = run(capsys, "table", "--measure", "fisher", "--space", "position",
                       "--molecule", "Xe2")
    assert code == 2
    assert "unknown molecule" in err


def test_q_requirements(capsys):
    code, _, err = run(capsys, "table", "--measure", "renyi", "--space", "position")
    assert code == 2 and "requires --q" in err
    code, _, err = run(capsys, "table", "--measure", "fisher", "--space", "position",
                       "--q", "2")
    assert code == 2 and "does not take --q" in err


def test_molecule_file_override(capsys, tmp_path):
    path = tmp_path / "mols.txt"
    path.write_text("H2, 4.7446, 0.7416\n")
    code, out, _ = run(capsys, "table", "--measure", "fisher", "--space", "position",
                       "--molecule", "H2", "--n", "0", "--method", "analytic",
                       "--molecules", str(path))
    assert code == 0
    assert out.splitlines()[1].startswith("H2,0,0,")


def test_sweep_over_l(capsys):
    code, out, _ = run(capsys, "sweep", "--measure", "fisher", "--space", "position",
                       "--n", "0", "--l", "0..5", "--method", "analytic",
                       "--molecule", "Na2", "--molecule", "NO+")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["l", "Na2", "NO+"]
    assert len(rows) == 7
    values = [float(r[1]) for r in rows[1:]]
    assert all(a > b for a, b in zip(values, values[1:]))


def test_sweep_over_q(capsys):
    code, out, _ = run(capsys, "sweep", "--measure", "renyi", "--space", "position",
                       "--n", "0", "--q-range", "2..4", "--method", "analytic",
                       "--molecule", "Cl2")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["q", "Cl2"]
    assert len(rows) == 4


def test_sweep_variable_validation(capsys):
    code, _, err = run(capsys, "sweep", "--measure", "fisher", "--space", "position",
                       "--n", "0")
    assert code == 2 and "exactly one" in err
    code, _, err = run(capsys, "sweep", "--measure", "fisher", "--space", "position",
                       "--n", "0", "--l", "0..2", "--q-range", "2..3")
    assert code == 2 and "exactly one" in err
    code, _, err = run(capsys, "sweep", "--measure", "fisher", "--space", "position",
                       "--n", "0", "--q-range", "2..3")
    assert code == 2 and "does not take a q sweep" in err


def test_bad_range_syntax(capsys):
    code, _, err = run(capsys, "table", "--measure", "fisher", "--space", "position",
                       "--n", "3..1")
    assert code == 2 and "range" in err


def test_check_with_zero_tolerance_fails(capsys, tmp_path):
    ledger = tmp_path / "discrepancies.jsonl"
    code, out, _ = run(capsys, "check", "--tol-scale", "0", "--ledger", str(ledger))
    assert code == 1
    assert "FAIL" in out
    records = [json.loads(line) for line in ledger.read_text().splitlines()]
    assert records and all(r["deviation"] > 0 for r in records)
