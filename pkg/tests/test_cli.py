import csv
import json
import subprocess
import sys

import pytest

from nestedtrees.chain_model import ChainSpec, expand, format_edge_list
from nestedtrees.cli import RunReport, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write


class TestCount:
    def test_json_spec(self, capsys):
        assert run(capsys, "count", "--spec", '{"m":[1,1],"n":[2,2]}')[:2] == (0, "4\n")

    def test_complete_bipartite(self, capsys):
        assert run(capsys, "count", "--spec", '{"m":[3],"n":[3]}')[:2] == (0, "81\n")

    def test_inline_and_file(self, capsys, write):
        assert run(capsys, "count", "--spec", "m=1,1,1;n=2,1,2")[:2] == (0, "36\n")
        path = write("spec.json", '{"m":[1,3],"n":[2,2]}')
        assert run(capsys, "count", "--spec", path)[:2] == (0, "32\n")

    def test_path_edge_list(self, capsys, write):
        path = write("p4.txt", "# path on four vertices\n0 1\n1 2\n2 3\n")
        assert run(capsys, "count", "--edges", path)[:2] == (0, "1\n")

    def test_json_report(self, capsys):
        code, out, _ = run(capsys, "count", "--json", "--spec", "m=20;n=30")
        report = RunReport.from_json(out)
        assert code == 0 and report.status == "success"
        assert report.result == str(20**29 * 30**19)
        assert "e" not in report.result
        assert report.ops > 0 and report.wall_ns >= 0
        assert RunReport.from_json(report.to_json()) == report

    def test_malformed(self, capsys, write):
        assert run(capsys, "count", "--spec", '{"m":[1,0],"n":[2,2]}')[0] == 1
        assert run(capsys, "count", "--spec", "garbage")[0] == 1
        assert run(capsys, "count", "--edges", write("bad.txt", "0 x\n"))[0] == 1
        assert run(capsys, "count", "--edges", "/nonexistent/file")[0] == 1
        assert run(capsys, "count")[0] == 1

    def test_recognition_failure(self, capsys, write):
        code, out, err = run(capsys, "count", "--edges", write("tri.txt", "0 1\n1 2\n2 0\n"))
        assert code == 2 and out == "" and "OddCycle" in err


class TestOracle:
    def test_oracle_matches(self, capsys):
        assert run(capsys, "oracle", "--spec", "m=1,1;n=4,4")[:2] == (0, "32\n")


class TestRecognize:
    def test_round_trip(self, capsys, write):
        path = write("g.txt", format_edge_list(expand(ChainSpec((1, 2), (2, 1))).edge_list()))
        code, out, _ = run(capsys, "recognize", path)
        assert code == 0 and out == '{"m":[1,2],"n":[2,1]}\n'

    def test_triangle(self, capsys, write):
        code, out, err = run(capsys, "recognize", "--json", write("tri.txt", "0 1\n1 2\n2 0\n"))
        assert code == 2 and "OddCycle" in err
        assert RunReport.from_json(out).status == "OddCycle"

    def test_empty_file(self, capsys, write):
        assert run(capsys, "recognize", write("empty.txt", ""))[0] == 1


class TestGenerate:
    def test_single_edge(self, capsys, tmp_path):
        out = tmp_path / "e.txt"
        assert run(capsys, "generate", "--spec", "m=1;n=1", "-o", str(out))[0] == 0
        assert out.read_text() == "0 1\n"

    def test_canonical_layout(self, capsys, tmp_path):
        out = tmp_path / "u.txt"
        run(capsys, "generate", "--spec", '{"m":[1,1],"n":[2,2]}', "-o", str(out))
        pairs = [tuple(map(int, line.split())) for line in out.read_text().splitlines()]
        assert len(pairs) == 6
        assert {u for u, _ in pairs} == {0, 1} and {v for _, v in pairs} == {2, 3, 4, 5}

    def test_large_and_deterministic(self, capsys, tmp_path):
        a, b = tmp_path / "a.txt", tmp_path / "b.txt"
        run(capsys, "generate", "--spec", "m=100;n=100", "-o", str(a))
        run(capsys, "generate", "--spec", "m=100;n=100", "-o", str(b))
        assert len(a.read_text().splitlines()) == 10000
        assert a.read_bytes() == b.read_bytes()

    def test_stdout_and_errors(self, capsys, tmp_path):
        assert run(capsys, "generate", "--spec", "m=1;n=2")[:2] == (0, "0 1\n0 2\n")
        assert run(capsys, "generate", "--spec", "m=0;n=2")[0] == 1
        assert run(capsys, "generate", "--spec", "m=1;n=2", "-o", str(tmp_path / "no" / "dir.txt"))[0] == 1

    def test_resource_cap(self, capsys, monkeypatch):
        monkeypatch.setenv("NESTEDTREES_MAX_EDGES", "10")
        assert run(capsys, "generate", "--spec", "m=5;n=5")[0] == 1


class TestVerify:
    def test_small_sweep(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-h", "2", "--max-cell", "2", "--trials", "5")
        assert code == 0 and "0 mismatches" in out

    def test_complete_bipartite_sweep(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-h", "1", "--max-cell", "8")
        assert code == 0 and "checked 64 specs" in out

    def test_deterministic(self, capsys):
        first = run(capsys, "verify", "--max-h", "1", "--max-cell", "2", "--trials", "30", "--seed", "7")
        second = run(capsys, "verify", "--max-h", "1", "--max-cell", "2", "--trials", "30", "--seed", "7")
        assert first == second

    def test_mismatch_exit_code(self, capsys, monkeypatch):
        import nestedtrees.harness as harness

        monkeypatch.setattr(harness, "run_counter", lambda s: type("R", (), {"tau": -1})())
        code, out, _ = run(capsys, "verify", "--max-h", "1", "--max-cell", "1")
        assert code == 3 and "MISMATCH" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "verify", "--json", "--max-h", "1", "--max-cell", "2")
        report = json.loads(out)
        assert code == 0 and report["detail"]["cases"] == 4 and report["detail"]["mismatches"] == []


class TestBench:
    def test_csv(self, capsys, tmp_path):
        path = tmp_path / "bench.csv"
        code, out, _ = run(capsys, "bench", "--sizes", "10,20,40", "--repetitions", "3",
                           "--families", "unicyclic", "--csv", str(path))
        assert code == 0 and "exponent" in out
        rows = list(csv.DictReader(path.open()))
        assert list(rows[0])[:4] == ["n", "algorithm", "wall_ns", "ops"]
        counters = [r for r in rows if r["algorithm"] == "counter"]
        assert [r["n"] for r in counters] == ["10"] * 3 + ["20"] * 3 + ["40"] * 3
        for n in ("10", "20", "40"):
            taus = {r["tau"] for r in rows if r["n"] == n}
            assert taus == {"4"}

    def test_invalid_sizes(self, capsys):
        assert run(capsys, "bench", "--sizes", "abc")[0] == 1
        assert run(capsys, "bench", "--sizes", "3")[0] == 1
        assert run(capsys, "bench", "--sizes", "10", "--families", "nope")[0] == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nestedtrees", "count", "--spec", "m=2;n=2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "4\n"
