import json

import jsonschema
import pytest

from dicolor.cli import main
from dicolor.digraph import parse_digraph
from dicolor.verify import ClaimResult

DIGON_TEXT = "digraph 3\n0 1\n1 0\n1 2\n2 0\n"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_round_trip(tmp_path, capsys):
    out_file = tmp_path / "c7.dg"
    code, _, _ = run(capsys, "gen", "--circulant", "3", "--reversed", "3",
                     "-o", str(out_file))
    assert code == 0
    compact = parse_digraph(out_file.read_text())
    code, _, _ = run(capsys, "gen", "--circulant", "3", "--reversed", "3",
                     "--expand", "-o", str(out_file))
    assert code == 0
    expanded = parse_digraph(out_file.read_text())
    assert compact.arcs == expanded.arcs
    assert compact.num_vertices == expanded.num_vertices == 7


def test_gen_with_delete(tmp_path, capsys):
    out_file = tmp_path / "rev9del.dg"
    code, _, _ = run(capsys, "gen", "--circulant", "4", "--reversed", "4",
                     "--delete", "0", "--expand", "-o", str(out_file))
    assert code == 0
    d = parse_digraph(out_file.read_text())
    assert d.num_vertices == 8


def test_analyze_text_row(capsys):
    code, out, _ = run(capsys, "analyze", "--circulant", "3", "--reversed",
                       "3", "-k", "3", "--threads", "1")
    assert code == 0
    assert "504" in out and "1,512" in out


def test_analyze_json_schema(capsys):
    import importlib.resources as res
    code, out, _ = run(capsys, "analyze", "--circulant", "2", "-k", "2",
                       "--format", "json", "--threads", "1")
    assert code == 0
    data = json.loads(out)
    schema = json.loads(res.files("dicolor").joinpath(
        "schemas/report.schema.json").read_text())
    jsonschema.validate(data, schema)
    assert data["order"] == 10
    assert data["diameter"] == 5


def test_analyze_digon_file(tmp_path, capsys):
    f = tmp_path / "digon.dg"
    f.write_text(DIGON_TEXT)
    code, out, _ = run(capsys, "analyze", "--file", str(f), "-k", "2",
                       "--format", "json", "--threads", "1")
    assert code == 0
    data = json.loads(out)
    assert data["num_components"] == 2
    assert data["has_digons"]


def test_analyze_below_dichromatic_is_usage_error(capsys):
    code, _, err = run(capsys, "analyze", "--circulant", "2", "-k", "1")
    assert code == 2
    assert "dichromatic" in err
    code, out, _ = run(capsys, "analyze", "--circulant", "2", "-k", "1",
                       "--allow-empty", "--format", "json", "--threads", "1")
    assert code == 0
    assert json.loads(out)["order"] == 0


def test_analyze_budget_guard(capsys):
    code, _, err = run(capsys, "analyze", "--circulant", "3", "--reversed",
                       "3", "-k", "3", "--budget", "10")
    assert code == 3
    assert "budget" in err


def test_table_rows_and_skip_marker(capsys):
    code, out, _ = run(capsys, "table", "--circulant", "3", "--reversed", "3",
                       "--k-range", "3..4", "--threads", "1")
    assert code == 0
    assert "504" in out and "7,560" in out
    code, out, _ = run(capsys, "table", "--circulant", "3", "--reversed", "3",
                       "--k-range", "3..4", "--cap", "3000", "--threads", "1")
    assert code == 0
    assert "504" in out
    assert "k=4: skipped" in out


def test_dist_witness(capsys):
    code, out, _ = run(capsys, "dist", "--circulant", "3", "--reversed", "3",
                       "-k", "3", "-a", "1,1,1,2,2,2,3",
                       "-b", "2,2,2,3,1,1,1")
    assert code == 0
    assert out.strip() == "8"


def test_dist_identical(capsys):
    code, out, _ = run(capsys, "dist", "--circulant", "3", "--reversed", "3",
                       "-k", "3", "-a", "1,1,1,2,2,2,3",
                       "-b", "1,1,1,2,2,2,3")
    assert code == 0
    assert out.strip() == "0"


def test_dist_unreachable(capsys):
    code, out, _ = run(capsys, "dist", "--circulant", "4", "--reversed", "4",
                       "--delete", "0", "-k", "2",
                       "-a", "1,1,1,1,2,2,2,2", "-b", "2,2,2,2,1,1,1,1")
    assert code == 0
    assert out.strip() == "unreachable"


def test_dist_show_walk(capsys):
    code, out, _ = run(capsys, "dist", "--circulant", "3", "--reversed", "3",
                       "-k", "3", "-a", "1,1,1,2,2,2,3",
                       "-b", "2,2,2,3,1,1,1", "--show-walk")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "8"
    assert lines[1] == "1,1,1,2,2,2,3"
    assert len(lines) == 10  # distance, start, 8 moves


def test_dist_invalid_coloring_names_cycle(capsys):
    code, _, err = run(capsys, "dist", "--circulant", "3", "--reversed", "3",
                       "-k", "3", "-a", "1,1,1,1,1,1,1",
                       "-b", "2,2,2,3,1,1,1")
    assert code == 2
    assert "class 1" in err and "->" in err


def test_walk_extend_interval(capsys):
    code, out, _ = run(capsys, "walk", "--circulant", "4", "--reversed", "4",
                       "--builder", "extend-interval", "-k", "3",
                       "-a", "1,2,2,2,1,3,3,3,3", "--color", "1")
    assert code == 0
    assert "6 -> 1" in out
    assert "validation: ok" in out


def test_walk_extend_interval_frozen_input_precondition(capsys):
    code, _, err = run(capsys, "walk", "--circulant", "4", "--reversed", "4",
                       "--builder", "extend-interval", "-k", "3",
                       "-a", "1,2,2,3,1,1,2,3,3", "--color", "1")
    assert code == 2
    assert "forbidden triangle" in err


def test_walk_singletons_empty(capsys):
    code, out, _ = run(capsys, "walk", "--circulant", "1", "--builder",
                       "singletons", "-k", "3", "-a", "1,2,3", "-b", "1,2,3",
                       "--classes", "1,2,3")
    assert code == 0
    assert "length 0 (bound 3)" in out


def test_walk_singleton_pair(capsys):
    code, out, _ = run(capsys, "walk", "--circulant", "2", "--builder",
                       "singleton-pair", "-k", "4",
                       "-a", "1,1,3,2,4", "-b", "1,1,2,3,4",
                       "--pair-class", "1", "--classes", "2,3")
    assert code == 0
    assert "length 2 (bound 4)" in out
    assert "validation: ok" in out


def test_walk_frozen_builder(capsys):
    code, out, _ = run(capsys, "walk", "--builder", "frozen",
                       "--n-prime", "1")
    assert code == 0
    assert out.strip() == "1,2,2,3,1,1,2,3,3"


def test_walk_c_family_builder(capsys):
    code, out, _ = run(capsys, "walk", "--builder", "c-family",
                       "--circulant", "4", "--reversed", "4",
                       "--anchor", "0", "--cell-colors", "1,2,3")
    assert code == 0
    assert out.strip() == "1,2,2,2,2,3,3,3,3"


def test_export_dot(capsys):
    code, out, _ = run(capsys, "export", "--circulant", "2", "-k", "2",
                       "--format", "dot")
    assert code == 0
    assert out.count("--") == 10


def test_export_csv(capsys):
    code, out, _ = run(capsys, "export", "--circulant", "2", "-k", "2",
                       "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "source,target"


def test_export_cap_exceeded(capsys):
    code, _, err = run(capsys, "export", "--circulant", "3", "--reversed",
                       "3", "-k", "3", "--cap", "100")
    assert code == 3
    assert "cap" in err


def test_verify_list(capsys):
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0
    assert "reference-stats-k3" in out


def test_verify_selected_claims_json(tmp_path, capsys):
    import importlib.resources as res
    path = tmp_path / "claims.json"
    code, out, _ = run(capsys, "verify", "--claims",
                       "digon-disconnected,cycle-structure-n1",
                       "--json", str(path), "--threads", "1")
    assert code == 0
    assert "digon-disconnected: pass" in out
    schema = json.loads(res.files("dicolor").joinpath(
        "schemas/claims.schema.json").read_text())
    jsonschema.validate(json.loads(path.read_text()), schema)


def test_verify_exit_code_on_failure(capsys, monkeypatch):
    fake = [ClaimResult("made-up", {}, {"x": 1}, {"x": 2}, "fail", None, 0)]
    monkeypatch.setattr("dicolor.cli.run_all",
                        lambda **kw: fake)
    code, out, _ = run(capsys, "verify", "--claims", "made-up")
    assert code == 1
    assert "made-up: fail" in out


def test_usage_errors(capsys, tmp_path):
    code, _, err = run(capsys, "analyze", "-k", "2")
    assert code == 2
    code, _, err = run(capsys, "analyze", "--circulant", "2", "--file", "x",
                       "-k", "2")
    assert code == 2
    bad = tmp_path / "bad.dg"
    bad.write_text("digraph 2\n0 0\n")
    code, _, err = run(capsys, "analyze", "--file", str(bad), "-k", "2")
    assert code == 2
    assert "loop" in err
