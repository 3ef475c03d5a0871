import io
import json
import subprocess
import sys

import pytest

from surjtop.cli import main, parse_range


class TTY(io.StringIO):
    def isatty(self):
        return True


def run(*argv, stdout=None):
    out, err = stdout or io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv, "--format", "json")
    return code, (json.loads(out) if out else None), err


@pytest.fixture(autouse=True)
def no_env_format(monkeypatch):
    monkeypatch.delenv("SURJTOP_FORMAT", raising=False)


def test_classify_totals():
    code, doc, _ = run_json("classify", "<x,y | x^4 y x y>")
    assert code == 0
    assert doc["totals"] == {"free_classes": 3, "strongly_surjective": 1}
    assert [a["label"] for a in doc["alphas"]] == ["trivial", "beta2"]


def test_classify_is_byte_stable():
    first = run("classify", "<x,y | x^4 y x y>", "--format", "json")[1]
    assert all(run("classify", "<x,y | x^4 y x y>", "--format", "json")[1] == first for _ in range(3))


@pytest.mark.parametrize("text,h2", [
    ("<x | x^2>", {"torsion": [2], "free_rank": 0}),
    ("<x,y | x y x y^-1>", {"torsion": [2], "free_rank": 0}),
    ("<x,y | x y x^-1 y^-1>", {"torsion": [], "free_rank": 1}),
])
def test_classify_hypothesis_failures(text, h2):
    code, doc, err = run_json("classify", text, "--paranoid")
    assert code == 3
    assert doc["hypothesis_ok"] is False and doc["alphas"] == []
    assert doc["h2_untwisted"] == h2
    assert "hypothesis failed" in err


def test_h2_projective_plane_twisted():
    code, doc, _ = run_json("h2", "<x | x^2>", "--alpha", "x=-1")
    assert code == 0
    assert doc["h2"] == {"torsion": [], "free_rank": 1}
    assert doc["order"] is None
    assert doc["delta"] == [[2]] and doc["delta_alpha"] == [[0]]


def test_h2_default_trivial():
    code, doc, _ = run_json("h2", "<x,y | x^4 y x y>")
    assert doc["signs"] == {"x": 1, "y": 1}
    assert doc["snf_diagonal"] == [1] and doc["order"] == 1


def test_h2_invalid_alpha():
    code, _, err = run("h2", "<x,y | x^4 y x y>", "--alpha", "x=-1")
    assert code == 2 and "does not kill" in err


def test_parse_and_systems():
    code, doc, _ = run_json("parse", "<x,y|x^4*y*x*y>")
    assert doc == {"presentation": "< x, y | x^4 y x y >", "generators": ["x", "y"],
                   "relators": ["x^4 y x y"], "delta": [[5, 2]]}
    code, doc, _ = run_json("systems", "<x,y|x y>")
    assert doc["count"] == doc["expected_count"] == 2
    assert doc["systems"][1] == {"signs": {"x": -1, "y": -1}, "label": "beta3"}


def test_parse_error_reports_position():
    code, out, err = run("parse", "< x, y | x y x^-1 y^-1 z >")
    assert code == 2 and out == ""
    assert "unknown-generator at byte 23" in err


def test_file_input(tmp_path):
    f = tmp_path / "k3.pres"
    f.write_text("# K_3(1)\n< x, y | x^4 y x y >\n", encoding="utf-8")
    code, doc, _ = run_json("classify", str(f))
    assert code == 0 and doc["totals"]["free_classes"] == 3
    code, _, err = run("classify", str(tmp_path / "missing.pres"))
    assert code == 2


def test_family_and_realize():
    code, doc, _ = run_json("family", "case3", "--p", "0", "--q", "0", "--n", "2")
    assert code == 0
    assert doc["computed_order"] == doc["predicted_order"] == 3
    code, out, _ = run("realize", "--a", "3", "--b", "2", "--c", "5", "--format", "table")
    assert code == 0
    assert "order 5 under beta2, verified" in out
    code, _, err = run("realize", "--a", "2", "--b", "4", "--c", "3")
    assert code == 2 and "coprime" in err


def test_family_bad_params():
    assert run("family", "example-k1", "--k", "2")[0] == 2


def test_sweep_all_match():
    code, doc, _ = run_json("sweep", "--family", "example-k2", "--k", "1..5", "--l", "0..3")
    assert code == 0 and doc["all_match"]
    assert [tuple(r["params"].values()) for r in doc["rows"]][:3] == [(1, 0), (1, 1), (1, 2)]
    assert len(doc["rows"]) == 12 and doc["skipped"] == 8


def test_sweep_parallel_matches_serial():
    args = ("sweep", "--family", "realize", "--a", "2..5", "--b", "2..5", "--c", "1,3,5")
    serial = run(*args, "--format", "json")[1]
    parallel = run(*args, "--format", "json", "--jobs", "2")[1]
    assert serial == parallel


def test_sweep_missing_range():
    code, _, err = run("sweep", "--family", "case1", "--p", "0")
    assert code == 1 and "--q" in err


def test_usage_errors():
    assert run()[0] == 1
    assert run("nonsense")[0] == 1
    assert run("realize", "--a", "3")[0] == 1


def test_format_selection(monkeypatch):
    code, out, _ = run("parse", "<x|x^3>", stdout=TTY())
    assert out.startswith("presentation")
    code, out, _ = run("parse", "<x|x^3>")
    assert json.loads(out)["delta"] == [[3]]
    monkeypatch.setenv("SURJTOP_FORMAT", "table")
    assert run("parse", "<x|x^3>")[1].startswith("presentation")
    monkeypatch.setenv("SURJTOP_FORMAT", "yaml")
    assert run("parse", "<x|x^3>")[0] == 1


def test_out_file(tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run("classify", "<x,y|x^4 y x y>", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["totals"]["strongly_surjective"] == 1


def test_parse_range():
    assert parse_range("1..3") == [1, 2, 3]
    assert parse_range("1,4..5") == [1, 4, 5]
    assert parse_range("7") == [7]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "surjtop", "classify", "<x,y|x^3 y^2>", "--format", "json"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["alphas"][1]["c_star"] == 3
