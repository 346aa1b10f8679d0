import json

import pytest

from graphsplines.cli import main
from conftest import GRAPHS_DIR

FIG2 = str(GRAPHS_DIR / "fig2.json")
FIG2_TEXT = str(GRAPHS_DIR / "fig2-text.json")
XY = str(GRAPHS_DIR / "xy.json")
SQUARES = str(GRAPHS_DIR / "squares.json")
ZX = str(GRAPHS_DIR / "zx-obstruction.json")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestVerify:
    def test_yes(self, capsys):
        code, out, _ = run(capsys, "verify", FIG2, "--spline", "3,15,5")
        assert code == 0
        assert "SPLINE: yes" in out

    def test_yes_text_reading(self, capsys):
        code, out, _ = run(capsys, "verify", FIG2_TEXT, "--spline", "3,15,5")
        assert code == 0

    def test_no_with_violations(self, capsys):
        code, out, _ = run(capsys, "verify", FIG2, "--spline", "0,1,0")
        assert code == 1
        assert "SPLINE: no" in out
        assert "v1~v2" in out and "v2~v3" in out

    def test_polynomial_spline(self, capsys):
        code, out, _ = run(capsys, "verify", XY, "--spline", "0,x,x+y")
        assert code == 0

    def test_json_report(self, capsys):
        code, out, _ = run(capsys, "verify", FIG2, "--spline", "0,1,0", "--json")
        report = json.loads(out)
        assert report["verdict"] == "no"
        assert len(report["violations"]) == 2

    def test_wrong_length(self, capsys):
        code, _, err = run(capsys, "verify", FIG2, "--spline", "1,2")
        assert code == 2
        assert "error" in err


class TestFlowup:
    def test_integer_graph(self, capsys):
        code, out, _ = run(capsys, "flowup", FIG2)
        assert code == 0
        assert "diagonal: (1, 4, 10)" in out
        assert "determinant: 40" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "flowup", FIG2, "--json")
        report = json.loads(out)
        assert report["diagonal"] == [1, 4, 10]
        assert report["columns"] == [[1, 1, 1], [0, 4, 4], [0, 0, 10]]

    def test_polynomial_graph_witness_table(self, capsys):
        code, out, _ = run(capsys, "flowup", XY)
        assert code == 0
        assert "witness" in out
        assert "class 2" in out


class TestQ:
    def test_integer(self, capsys):
        code, out, _ = run(capsys, "q", FIG2)
        assert code == 0
        assert "Q = 40" in out and "pid-diagonal" in out

    def test_coprime_product(self, capsys):
        code, out, _ = run(capsys, "q", XY)
        assert "coprime-product" in out

    def test_vertex_order_flag(self, capsys):
        code, out, _ = run(capsys, "q", FIG2, "--vertex-order", "v3,v2,v1")
        assert code == 0
        assert "Q = 40" in out


class TestCheckBasis:
    def test_accept(self, capsys):
        code, out, _ = run(
            capsys,
            "check-basis",
            FIG2,
            "--spline", "1,1,1",
            "--spline", "0,4,4",
            "--spline", "0,0,10",
        )
        assert code == 0
        assert "BASIS: yes" in out

    def test_reject(self, capsys):
        code, out, _ = run(
            capsys,
            "check-basis",
            FIG2,
            "--spline", "1,1,1",
            "--spline", "0,4,4",
            "--spline", "0,0,20",
        )
        assert code == 1
        assert "BASIS: no" in out

    def test_polynomial_accept(self, capsys):
        code, out, _ = run(
            capsys,
            "check-basis",
            XY,
            "--spline", "1,1,1",
            "--spline", "0,x,x+y",
            "--spline", "0,0,y*(x+y)",
        )
        assert code == 0
        assert "BASIS: yes" in out


class TestSearch:
    def test_xy_found(self, capsys):
        code, out, _ = run(capsys, "search", XY, "--factors", "x;y;x+y", "--degree", "2")
        assert code == 0
        assert "flow-up class basis found" in out

    def test_squares_nonexistent(self, capsys):
        code, out, _ = run(
            capsys, "search", SQUARES, "--factors", "x;x;y;y;x+y;x+y", "--degree", "6"
        )
        assert code == 1
        assert "NONEXISTENT(6)" in out
        assert "729" in out

    def test_json(self, capsys):
        code, out, _ = run(
            capsys, "search", XY, "--factors", "x;y;x+y", "--degree", "2", "--json"
        )
        report = json.loads(out)
        assert report["verdict"] == "yes"
        assert report["columns"][0] == ["1", "1", "1"]


class TestObstruct:
    def test_default_predicate(self, capsys):
        code, out, _ = run(capsys, "obstruct", ZX)
        assert code == 0
        assert "OBSTRUCTED: yes" in out
        assert "even-constant-term" in out

    def test_explicit_predicate(self, capsys):
        code, out, _ = run(capsys, "obstruct", ZX, "--ideal", "even-constant-term")
        assert code == 0

    def test_not_obstructed(self, capsys):
        # on the xy cycle, a = x has even constant term 0, so the predicate
        # accepts it and no obstruction is reported
        code, out, _ = run(capsys, "obstruct", XY, "--ideal", "even-constant-term")
        assert code == 1
        assert "OBSTRUCTED: no" in out

    def test_non_triangle_rejected(self, capsys, tmp_path):
        document = {
            "ring": {"kind": "poly", "coefficients": "rat", "variables": ["x"]},
            "vertices": ["v1", "v2"],
            "edges": [{"u": "v1", "v": "v2", "label": "x"}],
        }
        path = tmp_path / "path.json"
        path.write_text(json.dumps(document))
        code, _, err = run(capsys, "obstruct", str(path))
        assert code == 2
        assert "3-cycle" in err


class TestProbe:
    def test_default_q(self, capsys):
        code, out, _ = run(capsys, "probe", FIG2, "--trials", "50")
        assert code == 0
        assert "PROBE: ok" in out

    def test_explicit_q_failure(self, capsys):
        code, out, _ = run(capsys, "probe", FIG2, "--q", "80", "--trials", "200")
        assert code == 1
        assert "counterexample" in out

    def test_json_deterministic(self, capsys):
        code1, out1, _ = run(
            capsys, "probe", FIG2, "--q", "80", "--trials", "100", "--seed", "5", "--json"
        )
        code2, out2, _ = run(
            capsys, "probe", FIG2, "--q", "80", "--trials", "100", "--seed", "5", "--json"
        )
        assert out1 == out2 and code1 == code2


class TestErrors:
    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "q", "no-such-file.json")
        assert code == 2
        assert "error" in err

    def test_bad_label_text(self, capsys):
        code, _, err = run(capsys, "verify", FIG2, "--spline", "a,b,c")
        assert code == 2

    def test_bad_vertex_order(self, capsys):
        code, _, err = run(capsys, "q", FIG2, "--vertex-order", "v1,v2")
        assert code == 2
