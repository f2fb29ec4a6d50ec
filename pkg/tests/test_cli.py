"""Command-line interface: exit codes, output formats, determinism."""

import csv
import json

import pytest

from indcomplex.cli import (
    VerificationRecord,
    dump_records,
    main,
    run_suite,
)


def test_predict_command(capsys):
    assert main(["predict", "grid:9x5"]) == 0
    assert capsys.readouterr().out.strip() == "S^10"
    assert main(["predict", "grid:9x5", "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == {
        "shape": "wedge", "spheres": {"10": 1}}


def test_homology_command(capsys):
    assert main(["homology", "grid:4x4", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["betti"] == {"3": 2} and out["torsion"] == {}
    assert main(["homology", "cycle:6", "--coeff", "z2"]) == 0
    assert "{1: 2}" in capsys.readouterr().out


def test_euler_and_reduce_commands(capsys):
    assert main(["euler", "path:7"]) == 0
    assert capsys.readouterr().out.strip() == "1"
    assert main(["reduce", "grid:8x4"]) == 0
    assert "kernel" in capsys.readouterr().out


def test_bad_spec_exit_code(capsys):
    assert main(["predict", "nosuch:1"]) == 2
    assert main(["homology", "/no/such/file"]) == 2
    assert main(["predict", "grid:7x7"]) == 2  # no formula in scope
    capsys.readouterr()


def test_budget_exit_code(capsys):
    assert main(["homology", "grid:6x6", "--no-reduce", "--budget", "100"]) == 3
    assert main(["euler", "grid:6x6", "--budget", "100"]) == 3
    capsys.readouterr()


def test_graph_file_round_trip(tmp_path, capsys):
    path = tmp_path / "g.txt"
    assert main(["grid", "4", "4", "--out", str(path)]) == 0
    assert main(["homology", str(path), "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["betti"] == {"3": 2}


def test_reduce_trace_file(tmp_path, capsys):
    path = tmp_path / "trace.txt"
    assert main(["reduce", "grid:6x4", "--trace", str(path)]) == 0
    capsys.readouterr()
    assert path.read_text().startswith("k ")


def test_verify_suite_exit_codes(capsys):
    assert main(["verify", "--suite", "thm-2.4", "--range", "1..6"]) == 0
    capsys.readouterr()
    with pytest.raises(SystemExit):
        main(["verify", "--suite", "nosuch"])
    capsys.readouterr()
    assert main(["verify", "--suite", "thm-2.4", "--range", "bogus"]) == 2
    capsys.readouterr()


def test_verify_skip_exit_code(capsys):
    # a face budget of 10 cannot hold any instance: all skipped, exit 3
    assert main(["verify", "--suite", "thm-2.6", "--range", "6..6",
                 "--budget", "10"]) == 3
    capsys.readouterr()


def test_verify_json_and_csv_outputs(tmp_path, capsys):
    jpath = tmp_path / "records.json"
    cpath = tmp_path / "records.csv"
    assert main(["verify", "--suite", "thm-2.6", "--json", str(jpath),
                 "--csv", str(cpath)]) == 0
    capsys.readouterr()
    records = json.loads(jpath.read_text())
    assert len(records) == 10 and all(r["verdict"] == "match" for r in records)
    with open(cpath) as fh:
        rows = list(csv.reader(fh))
    assert rows[0][0] == "spec" and len(rows) == 11


def test_records_json_round_trip_byte_stable():
    records = run_suite("thm-2.6")
    parsed = [VerificationRecord.from_json(obj)
              for obj in json.loads(dump_records(records))]
    # wall times round-trip at ms precision; everything else exactly
    assert dump_records(parsed) == dump_records(records)


def test_jobs_determinism():
    serial = run_suite("lem-2.8", rng=(1, 6))
    parallel = run_suite("lem-2.8", rng=(1, 6), jobs=4)

    def stable(records):
        out = []
        for r in records:
            obj = r.to_json()
            obj.pop("ms")
            out.append(obj)
        return out

    assert stable(serial) == stable(parallel)


def test_formula_suites(capsys):
    assert main(["verify", "--suite", "cor-1.3", "--range", "1..500"]) == 0
    assert main(["verify", "--suite", "recursions"]) == 0
    capsys.readouterr()
