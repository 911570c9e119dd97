import io
import json
import subprocess
import sys

from egstab.cli import main
from egstab.extremal.constructions import build_H
from egstab.formats import emit_graph6, parse_graph6


def run(argv, capsys, monkeypatch, stdin=""):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    out = capsys.readouterr()
    return code, out.out, out.err


class TestBound:
    def test_text(self, capsys, monkeypatch):
        code, out, _ = run(["bound", "20", "9"], capsys, monkeypatch)
        assert code == 0
        assert "h(20,9,2) = 47" in out and "stability_bound = 57" in out and "kopylov_bound = 70" in out

    def test_json(self, capsys, monkeypatch):
        code, out, _ = run(["--output", "json", "bound", "12", "11"], capsys, monkeypatch)
        d = json.loads(out)
        assert code == 0 and d["result"]["h"]["5"] == 45 and "crossover" in d["result"]

    def test_usage_error_names_argument(self, capsys, monkeypatch):
        code, _, err = run(["bound", "5", "9"], capsys, monkeypatch)
        assert code == 2 and "argument n" in err


class TestGen:
    def test_H(self, capsys, monkeypatch):
        code, out, _ = run(["gen", "H", "10", "9", "2"], capsys, monkeypatch)
        assert code == 0 and parse_graph6(out.strip()) == build_H(10, 9, 2)[0]

    def test_classes_and_F(self, capsys, monkeypatch):
        code, out, _ = run(["gen", "G3", "10", "10", "--b", "2", "--stars", "2,2"], capsys, monkeypatch)
        assert code == 0 and parse_graph6(out.strip()).n == 10
        code, out, _ = run(["gen", "F", "4", "--tag", "F0", "--delete", "0-4", "--graph-format", "edgelist"],
                           capsys, monkeypatch)
        assert code == 0 and out.startswith("n 9\n")

    def test_bad_flags(self, capsys, monkeypatch):
        code, _, err = run(["gen", "G3", "10", "10", "--stars", "2,x"], capsys, monkeypatch)
        assert code == 2 and "--stars" in err
        code, _, err = run(["gen", "F", "4", "--tag", "F9"], capsys, monkeypatch)
        assert code == 2 and "--tag" in err
        code, _, err = run(["gen", "G2", "9", "9", "--b", "4", "--c", "1"], capsys, monkeypatch)
        assert code == 2 and "k-parity" in err


class TestGraphCommands:
    def test_classify(self, capsys, monkeypatch):
        g6 = emit_graph6(build_H(10, 9, 4)[0])
        code, out, _ = run(["classify", "--k", "9"], capsys, monkeypatch, g6 + "\n")
        assert code == 0 and "verdict InClassWithWitness" in out and "class G1t" in out

    def test_classify_precondition(self, capsys, monkeypatch):
        code, _, err = run(["classify", "--k", "5"], capsys, monkeypatch, "C~\n")
        assert code == 2 and "--k" in err

    def test_circumference_edgelist(self, capsys, monkeypatch):
        code, out, _ = run(["circumference"], capsys, monkeypatch, "n 4\n0 1\n1 2\n2 3\n3 0\n")
        assert code == 0 and out.startswith("circumference 4")

    def test_several_graph6_lines(self, capsys, monkeypatch):
        code, out, _ = run(["--output", "json", "circumference"], capsys, monkeypatch, "C~\nBw\n")
        res = json.loads(out)["result"]
        assert [r["circumference"] for r in res] == [4, 3]

    def test_input_error_reports_line(self, capsys, monkeypatch):
        code, _, err = run(["circumference"], capsys, monkeypatch, "C~\nC\n")
        assert code == 2 and "line 2" in err
        code, _, err = run(["core", "--alpha", "1"], capsys, monkeypatch, "n 3\n0 1\n0 5\n")
        assert code == 2 and "line 3" in err

    def test_core_and_closure(self, capsys, monkeypatch):
        code, out, _ = run(["core", "--alpha", "1"], capsys, monkeypatch, "n 4\n0 1\n1 2\n2 0\n2 3\n")
        assert code == 0 and parse_graph6(out.strip()).n == 3
        code, out, _ = run(["closure", "--k", "6"], capsys, monkeypatch, "n 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
        assert code == 0 and parse_graph6(out.strip()).edge_count() == 10

    def test_run_bp(self, capsys, monkeypatch):
        g6 = emit_graph6(build_H(13, 11, 3)[0])
        code, out, _ = run(["run-bp", "--k", "11", "--variant", "mbp", "--relax"], capsys, monkeypatch, g6)
        assert code == 0 and out.splitlines()[-1].startswith("stop MBP1 m=11")

    def test_missing_file(self, capsys, monkeypatch):
        code, _, err = run(["circumference", "--input", "/nonexistent/x.g6"], capsys, monkeypatch)
        assert code == 2 and "--input" in err


class TestCensus:
    def test_confirmed(self, capsys, monkeypatch):
        code, out, _ = run(["census", "kopylov", "--n", "8", "--k", "7", "--no-timing"], capsys, monkeypatch)
        assert code == 0 and out.endswith("status = confirmed\n")

    def test_json_report(self, capsys, monkeypatch):
        code, out, _ = run(["--output", "json", "census", "chvatal", "--n", "6", "--no-timing"],
                           capsys, monkeypatch)
        d = json.loads(out)
        assert code == 0 and d["schema"] == "egstab.census/1" and d["scanned"] == 156

    def test_missing_flag(self, capsys, monkeypatch):
        code, _, err = run(["census", "hamiltonicity", "--n", "7"], capsys, monkeypatch)
        assert code == 2 and "--d" in err

    def test_out_of_range(self, capsys, monkeypatch):
        code, _, err = run(["census", "stability", "--n", "12", "--k", "9"], capsys, monkeypatch)
        assert code == 2

    def test_bad_workers(self, capsys, monkeypatch):
        code, _, err = run(["census", "chvatal", "--n", "5", "--workers", "0"], capsys, monkeypatch)
        assert code == 2 and "--workers" in err


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "egstab.cli", "bound", "9", "9"], capture_output=True, text=True)
    assert out.returncode == 0 and "t = 4" in out.stdout
