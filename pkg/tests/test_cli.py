import json
import subprocess
import sys

import pytest

from icmkit import cli
from icmkit.document import ReportDocument
from icmkit.errors import InternalConsistencyError
from icmkit.fileformat import parse_facets


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def report_json(argv, capsys):
    code, out, _ = run(["report", *argv], capsys)
    assert code == 0
    return json.loads(out)


def test_report_cycle_seven(capsys):
    d = report_json(["--gen", "cycle:7", "--graph", "independence"], capsys)
    assert (d["icm"], d["depth"], d["indim_ring"]) == (False, 2, 3)
    assert d["schema"] == 1 and d["tool"] == "icmkit"


def test_report_path_six(capsys):
    d = report_json(["--gen", "path:6", "--graph", "independence"], capsys)
    assert (d["depth"], d["pdim"], d["icm"]) == (2, 4, True)


def test_report_field_flag(tmp_path, capsys):
    f = tmp_path / "facets.txt"
    f.write_text("1 2 3\n3 4\n")
    d = report_json([str(f), "--field", "Fp:2"], capsys)
    assert d["field"] == "F2"
    assert d["input"] == str(f)


def test_report_key_order_and_determinism(capsys):
    argv = ["report", "--gen", "dtree:3;3@0,1;2@2", "--graph", "clique", "--betti"]
    a = run(argv, capsys)[1]
    b = run(argv, capsys)[1]
    assert a == b
    keys = list(json.loads(a))
    assert keys[:5] == ["schema", "tool", "version", "input", "field"]
    assert keys[-1] == "betti" and "wall_time_s" not in keys


def test_report_document_roundtrip(capsys):
    out = run(["report", "--gen", "cycle:5", "--betti"], capsys)[1]
    doc = ReportDocument.from_json(out)
    assert doc.to_json() + "\n" == out


def test_report_text_and_timing(capsys):
    out = run(["report", "--gen", "simplex:3", "--format", "text"], capsys)[1]
    assert "icm: true" in out and "deg_ideal: -" in out
    d = report_json(["--gen", "path:4", "--timing"], capsys)
    assert d["wall_time_s"] >= 0


def test_stdin_input(capsys, monkeypatch):
    code, out, _ = run(["report"], capsys, stdin="a b\nc\n", monkeypatch=monkeypatch)
    assert code == 0 and json.loads(out)["pure"] is False


def test_dual_twice_is_identity(tmp_path, capsys):
    f = tmp_path / "c.txt"
    f.write_text("#vertices a b c d e\nb a\nc d e\n")
    _, once, _ = run(["dual", str(f)], capsys)
    g = tmp_path / "d.txt"
    g.write_text(once)
    _, twice, _ = run(["dual", str(g)], capsys)
    _, canon, _ = run(["skeleton", "-i", "10", str(f)], capsys)
    assert twice == canon


def test_skeleton_of_triangle(capsys):
    _, out, _ = run(["skeleton", "--gen", "simplex:3", "-i", "1"], capsys)
    body = [ln for ln in out.splitlines() if not ln.startswith("#")]
    assert len(body) == 3 and all(len(ln.split()) == 2 for ln in body)


def test_truncate_then_dual_is_dual_then_skeleton(tmp_path, capsys):
    src = tmp_path / "c.txt"
    src.write_text("#vertices 1 2 3 4 5 6\n1 2\n2 3 4\n4 5\n6\n")
    n, k = 6, 3
    _, trunc, _ = run(["truncate", "-k", str(k), str(src)], capsys)
    t = tmp_path / "t.txt"
    t.write_text(trunc)
    _, left, _ = run(["dual", str(t)], capsys)
    _, dual, _ = run(["dual", str(src)], capsys)
    d = tmp_path / "d.txt"
    d.write_text(dual)
    _, right, _ = run(["skeleton", "-i", str(n - k - 1), str(d)], capsys)
    assert left == right
    assert parse_facets(left) == parse_facets(right)


def test_betti_command(capsys):
    _, out, _ = run(["betti", "--gen", "cycle:5", "--format", "json"], capsys)
    d = json.loads(out)
    assert sorted(map(tuple, d["entries"])) == [(0, 0, 1), (1, 2, 5), (2, 3, 5), (3, 5, 1)]
    _, out, _ = run(["betti", "--gen", "cycle:5", "--side", "ideal", "--format", "json"], capsys)
    assert sorted(map(tuple, json.loads(out)["entries"])) == [(0, 2, 5), (1, 3, 5), (2, 5, 1)]
    _, text, _ = run(["betti", "--gen", "cycle:5"], capsys)
    assert "total" in text


def test_gen_command(capsys):
    _, out, _ = run(["gen", "path:3"], capsys)
    assert out == "#vertices x1 x2 x3\nx1 x2\nx2 x3\n"
    _, out, _ = run(["gen", "path:3", "--graph", "independence"], capsys)
    assert out == "#vertices x1 x2 x3\nx2\nx1 x3\n"


def test_graph_file_input(tmp_path, capsys):
    f = tmp_path / "g.txt"
    f.write_text("a b\nb c\nc d\nd a\n")
    d = report_json([str(f), "--graph", "independence"], capsys)
    assert d["icm"] is False and d["cm"] is False


class TestExitCodes:
    def test_parse_error(self, tmp_path, capsys):
        f = tmp_path / "bad.txt"
        f.write_text("#vertices a b\na z\n")
        code, _, err = run(["report", str(f)], capsys)
        assert code == 2 and f"{f}:2:3:" in err

    def test_bad_generator_and_precondition(self, capsys):
        assert run(["report", "--gen", "wheel:5"], capsys)[0] == 2
        assert run(["truncate", "--gen", "path:3", "--graph", "independence", "-k", "9"], capsys)[0] == 2
        assert run(["report", "--gen", "cycle:2"], capsys)[0] == 2
        assert run(["report", "missing-file.txt"], capsys)[0] == 2

    def test_void_report(self, tmp_path, capsys):
        f = tmp_path / "void.txt"
        f.write_text("#vertices a b\n")
        assert run(["report", str(f)], capsys)[0] == 2

    def test_guards(self, capsys):
        assert run(["atlas", "--nmax", "8"], capsys)[0] == 3
        assert run(["report", "--gen", "empty:26"], capsys)[0] == 3
        assert run(["report", "--gen", "empty:21", "--betti"], capsys)[0] == 3
        assert run(["betti", "--gen", "path:21"], capsys)[0] == 3

    def test_unsafe_lifts_guard(self, capsys, monkeypatch):
        monkeypatch.setattr(cli, "HOMOLOGY_LIMIT", 4)
        assert run(["report", "--gen", "path:5"], capsys)[0] == 3
        code, out, _ = run(["report", "--gen", "path:5", "--unsafe-n"], capsys)
        assert code == 0 and json.loads(out)["icm"] is True

    def test_internal_consistency(self, capsys, monkeypatch):
        def broken(*a, **k):
            raise InternalConsistencyError("pdim < bight")

        monkeypatch.setattr(cli, "report", broken)
        code, _, err = run(["report", "--gen", "path:3"], capsys)
        assert code == 4 and "pdim < bight" in err


class TestAtlasCommand:
    def test_csv(self, capsys):
        code, out, _ = run(["atlas", "--nmax", "4"], capsys)
        assert code == 0
        lines = out.splitlines()
        header = lines[0].split(",")
        rows = [dict(zip(header, ln.split(","))) for ln in lines[1:]]
        assert len(rows) == 1 + 2 + 4 + 11
        c4 = [r for r in rows if r["n"] == "4" and r["edges"].count("-") == 4 and r["chordal"] == "0"]
        assert len(c4) == 1 and c4[0]["ind_icm"] == "0"
        assert all(r["ind_icm"] == "1" for r in rows if r["chordal"] == "1")
        for r in rows:
            assert (r["pdim_eq_maxdeg"] == "1") == (r["ind_icm"] == "1" and r["free_vertex_min_facet"] == "1")

    def test_jsonl_matches_csv(self, capsys):
        out = run(["atlas", "--nmax", "3", "--format", "jsonl"], capsys)[1]
        rows = [json.loads(ln) for ln in out.splitlines()]
        assert [r["n"] for r in rows] == [1, 2, 2, 3, 3, 3, 3]

    def test_output_independent_of_workers(self, monkeypatch):
        monkeypatch.setenv("ICMKIT_THREADS", "1")
        serial = subprocess.run(
            [sys.executable, "-m", "icmkit.cli", "atlas", "--nmax", "5", "--threads", "1"],
            capture_output=True, text=True, check=True,
        ).stdout
        monkeypatch.setenv("ICMKIT_THREADS", "3")
        parallel = subprocess.run(
            [sys.executable, "-m", "icmkit.cli", "atlas", "--nmax", "5", "--threads", "3"],
            capture_output=True, text=True, check=True,
        ).stdout
        assert serial == parallel and serial.count("\n") == 1 + 1 + 2 + 4 + 11 + 34


def test_worker_cap(monkeypatch):
    from icmkit.atlas import worker_count

    monkeypatch.setenv("ICMKIT_THREADS", "2")
    assert worker_count(8) == 2
    monkeypatch.delenv("ICMKIT_THREADS")
    assert worker_count(3) == 3


def test_help_documents_columns(capsys):
    with pytest.raises(SystemExit):
        cli.main(["atlas", "--help"])
    assert "pdim_eq_maxdeg" in capsys.readouterr().out
