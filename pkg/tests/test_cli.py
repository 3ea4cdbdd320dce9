import csv
import io
import json

import pytest

from qhgb import bench
from qhgb.cli import PREDICT_KEYS, main
from qhgb.io import parse

RUNNING = "p 65521\nvars 2 x y\nweights 2 3\n1*1,1\n1*3,0 + 1*0,2\n"


def run(capsys, *argv):
    rc = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return rc, out, err


@pytest.fixture
def running(tmp_path):
    path = tmp_path / "running.txt"
    path.write_text(RUNNING)
    return path


def test_predict_json(capsys):
    rc, out, _ = run(capsys, "predict", "--weights", 2, 3, "--degrees", 6, 6)
    rep = json.loads(out)
    assert rc == 0 and list(rep) == PREDICT_KEYS
    assert (rep["degree"], rep["i_reg"], rep["dreg_bound"]) == (6, 7, 10)


def test_predict_table_row(capsys):
    rc, out, _ = run(capsys, "predict", "--weights", 1, 1, 1, 1, 2, 2, 2, "--degrees", *[4] * 7)
    assert json.loads(out)["degree"] == 2048


def test_predict_unit_weights(capsys):
    rc, out, _ = run(capsys, "predict", "--weights", 1, 1, 1, "--degrees", 2, 3, 4)
    rep = json.loads(out)
    assert rep["degree"] == 24 and rep["dreg_bound"] == 2 + 3 + 4 - 3 + 1


def test_predict_csv_and_file(capsys, running, tmp_path):
    rc, out, _ = run(capsys, "predict", running, "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == PREDICT_KEYS
    row = dict(zip(rows[0], rows[1]))
    assert row["weights"] == "2 3" and row["degree"] == "5"
    dest = tmp_path / "p.json"
    assert main(["predict", str(running), "-o", str(dest)]) == 0
    assert json.loads(dest.read_text())["dreg_bound"] == 9


def test_predict_needs_input(capsys):
    rc, _, err = run(capsys, "predict", "--weights", 2)
    assert rc == 2 and "error" in err


def test_gen_check_solve(capsys, tmp_path):
    sysf = tmp_path / "g.txt"
    assert main(["gen", "--weights", "3", "2", "1", "--degrees", "6", "6", "6", "--seed", "1", "-o", str(sysf)]) == 0
    rc, out, _ = run(capsys, "check", sysf)
    rep = json.loads(out)
    assert rep["whomogeneous"] and rep["regular"] and rep["noether"] and rep["witness"] is None
    assert rep["profile"]["degree"] == 36
    rc, out, err = run(capsys, "solve", sysf)
    basis = parse(out)
    assert basis.order == "lex" and basis.truncation is None
    assert json.loads(err)["degree"] == 36


def test_check_crafted_systems(capsys, tmp_path):
    f = tmp_path / "f.txt"
    f.write_text("p 65521\nvars 2\nweights 2 3\n1*3,0 + 1*0,2\n1*4,0 + 1*1,2\n")
    rep = json.loads(run(capsys, "check", f)[1])
    assert rep["regular"] is False and rep["witness"] == 8
    f.write_text("p 65521\nvars 2\nweights 2 3\n1*3,0 + 1*0,2 + 1*0,0\n1*1,1 + 5*0,0\n")
    rep = json.loads(run(capsys, "check", f)[1])
    assert not rep["whomogeneous"] and rep["affine_regular"]


def test_strategies_emit_identical_bases(capsys, running, tmp_path):
    outs = {}
    for order in ("lex", "wgrevlex"):
        for strategy in ("qh", "std"):
            rc, out, _ = run(capsys, "solve", running, "--order", order, "--strategy", strategy)
            assert rc == 0
            outs[order, strategy] = out
        assert outs[order, "qh"] == outs[order, "std"]
    assert parse(outs["lex", "qh"]).polys[0].terms == {(0, 3): 1}


def test_solve_outputs(capsys, running, tmp_path):
    basis, stats, report = tmp_path / "b.txt", tmp_path / "s.csv", tmp_path / "r.json"
    rc, out, err = run(capsys, "solve", running, "--order", "wgrevlex", "--dmax", 8,
                       "-o", basis, "--stats", stats, "--report", report)
    assert rc == 0 and out == "" and err == ""
    assert parse(basis.read_text()).truncation == 8
    assert stats.read_text().startswith("degree,rows,cols,ops,new_polys")
    assert json.loads(report.read_text())["reductions_to_zero"] == 0


def test_single_polynomial(capsys, tmp_path):
    f = tmp_path / "one.txt"
    f.write_text("p 65521\nvars 1\nweights 1\n1*3 + 2*0\n")
    rc, out, _ = run(capsys, "solve", f, "--affine")
    assert rc == 0 and parse(out).polys[0].terms == {(3,): 1, (0,): 2}


def test_refuses_positive_dimensional_lex(capsys, tmp_path):
    f = tmp_path / "pd.txt"
    f.write_text("p 65521\nvars 2\n1*1,1\n")
    rc, out, err = run(capsys, "solve", f)
    assert rc == 2 and out == "" and "positive dimensional" in err
    rc, out, _ = run(capsys, "solve", f, "--order", "wgrevlex")
    assert rc == 0


def test_affine_flag(capsys, tmp_path):
    f = tmp_path / "a.txt"
    f.write_text("p 65521\nvars 2\nweights 2 3\n1*1,1 + 65520*0,0\n1*3,0 + 1*0,2 + 65519*0,0\n")
    rc, _, err = run(capsys, "solve", f)
    assert rc == 2 and "--affine" in err
    rc, out, err = run(capsys, "solve", f, "--affine")
    assert rc == 0
    rep = json.loads(err)
    assert rep["degree"] == 5 and rep["degree_falls"] == 0


def test_bad_input_file(capsys, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("p 65521\nvars 2\n1*1\n")
    rc, _, err = run(capsys, "solve", f)
    assert rc == 2 and "line 3" in err
    rc, _, err = run(capsys, "check", tmp_path / "missing.txt")
    assert rc == 2


def test_gen_empty_degree(capsys):
    rc, _, err = run(capsys, "gen", "--weights", 2, 3, "--degrees", 1, 6)
    assert rc == 2


def test_bench_csv(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps([{"weights": [2, 3], "degrees": [6, 6]}, {"weights": [1, 1], "degrees": [2, 3]}]))
    rc, out, _ = run(capsys, "bench", "--config", cfg)
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rc == 0 and list(rows[0]) == bench.COLUMNS
    assert [r["deg_I"] for r in rows] == ["6", "6"]
    assert float(rows[0]["f5_speedup"]) > 1
    assert rows[1]["f5_speedup"] == "1.0"
    assert all(r["same_basis"] == "True" for r in rows)
    rc, out, _ = run(capsys, "bench", "--weights", 2, 1, "--degrees", 4, 4, "--seeds", 0, 1, "--no-std-fglm")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 2 and rows[0]["fglm_ops_std"] == "0"
