import json
import os
import subprocess
import sys

import pytest

from fslab import cli, invariants
from fslab.results import CheckResult

Z12 = {"label": "Z12:R", "ring": {"kind": "cyclic", "n": 12}, "module": {"kind": "regular"}}
V22 = {"label": "Z2:R + R", "ring": {"kind": "cyclic", "n": 2},
       "module": {"kind": "direct_sum", "summands": [{"kind": "regular"}, {"kind": "regular"}]}}


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(p)


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_module_analyze_z12(tmp_path, capsys):
    code, out, _ = run(["module", "analyze", write(tmp_path, "z12.json", Z12)], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["schema_version"] == 1 and doc["kind"] == "module_analysis"
    inv = doc["invariants"]
    assert inv["fs_small_count"] == 1 and inv["goldie_dim"] == 2 and inv["hollow_dim"] == 2
    assert inv["radical"] == [0, 6]
    assert doc["legend"]["11"] == [11]


def test_module_analyze_is_deterministic(tmp_path, capsys):
    path = write(tmp_path, "z12.json", Z12)
    _, a, _ = run(["module", "analyze", path], capsys)
    _, b, _ = run(["module", "analyze", path], capsys)
    assert a == b


def test_text_format(tmp_path, capsys):
    code, out, _ = run(["module", "analyze", "--format", "text", write(tmp_path, "z12.json", Z12)], capsys)
    assert code == 0
    assert out.startswith("# module_analysis") and "goldie_dim: 2" in out


def test_module_decompose(tmp_path, capsys):
    code, out, _ = run(["module", "decompose", write(tmp_path, "z12.json", Z12)], capsys)
    doc = json.loads(out)
    assert code == 0
    assert doc["decomposition"]["semisimple_sum"] == [0, 4, 8]
    assert doc["decomposition"]["complement"] == [0, 3, 6, 9]
    assert doc["check"]["passed"]


def test_ring_analyze(tmp_path, capsys):
    code, out, _ = run(["ring", "analyze", write(tmp_path, "z9.json", {"kind": "cyclic", "n": 9})], capsys)
    doc = json.loads(out)
    assert code == 0
    assert doc["jacobson_radical"] == [0, 3, 6] and doc["flags"]["us_ring"]


def test_symmetry_check_v22(tmp_path, capsys):
    code, out, _ = run(["symmetry", "check", write(tmp_path, "v.json", V22)], capsys)
    doc = json.loads(out)
    assert code == 0
    assert doc["end_ring_order"] == 16 and not doc["end_ring_commutative"]
    assert doc["multiplication"]["value"] is False
    assert doc["self_generator"]["value"] is True
    assert doc["symmetry"]["s_lattice_nodes"] == 2 and doc["symmetry"]["r_lattice_nodes"] == 5


def test_catalog_show_q(capsys):
    code, out, _ = run(["catalog", "show", "Q"], capsys)
    doc = json.loads(out)
    assert code == 0
    assert doc["fs"]["value"] is False
    assert doc["hollow_dim"]["source"] == "disputed"


def test_catalog_checks(capsys):
    code, out, _ = run(["catalog", "show", "Z", "--checks"], capsys)
    assert code == 0 and all(c["passed"] for c in json.loads(out)["checks"])


def test_exit_parse_error(tmp_path, capsys):
    code, _, err = run(["module", "analyze", write(tmp_path, "bad.json", "{not json")], capsys)
    assert code == 2
    assert json.loads(err)["error"] == "ParseError"


def test_exit_parse_error_missing_field(tmp_path, capsys):
    code, _, err = run(["module", "analyze", write(tmp_path, "bad.json", {"label": "x"})], capsys)
    assert code == 2 and "ring" in json.loads(err)["message"]


def test_exit_validation_error(tmp_path, capsys):
    bad = {"label": "bad", "ring": {"kind": "cyclic", "n": 3},
           "module": {"kind": "explicit_action", "divisors": [2], "action": [[0, 1], [0, 1], [0, 1]]}}
    code, _, err = run(["module", "analyze", write(tmp_path, "bad.json", bad)], capsys)
    doc = json.loads(err)
    assert code == 3 and doc["error"] == "ValidationError" and "witness" in doc


def test_exit_ceiling(tmp_path, capsys):
    big = {"label": "big", "ring": {"kind": "cyclic", "n": 300}, "module": {"kind": "regular"}}
    code, _, err = run(["module", "analyze", write(tmp_path, "big.json", big)], capsys)
    doc = json.loads(err)
    assert code == 4 and doc["ceiling"] == 256 and doc["found"] == 300


def test_exit_theorem_failure(tmp_path, capsys, monkeypatch):
    def broken(M):
        return CheckResult("broken", False)

    monkeypatch.setattr(invariants, "MODULE_CHECKS", invariants.MODULE_CHECKS + (broken,))
    code, out, _ = run(["module", "analyze", write(tmp_path, "z12.json", Z12)], capsys)
    assert code == 5
    assert json.loads(out)["checks"][-1]["passed"] is False


def test_suite_single_instance(tmp_path, capsys):
    corpus = write(tmp_path, "corpus.json", [Z12])
    code, out, _ = run(["suite", "run", "--corpus", corpus], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["passed"]
    rec = doc["instances"][0]
    assert rec["invariants"]["radical"] == [0, 6]
    assert rec["invariants"]["socle"] == [0, 2, 4, 6, 8, 10]
    assert rec["checks"]["theorem_3_18"] == "pass"


def test_suite_empty_corpus_warns(tmp_path, capsys):
    code, out, _ = run(["suite", "run", "--corpus", write(tmp_path, "empty.json", [])], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["passed"] and doc["warnings"] and doc["corpus"]["count"] == 0


def test_suite_out_file_and_figures(tmp_path, capsys):
    out_file = tmp_path / "r.json"
    figs = tmp_path / "figs"
    code, out, err = run(["suite", "run", "--max-ring-order", "6", "--out", str(out_file),
                          "--figures", str(figs)], capsys)
    assert code == 0 and out == "" and "report written" in err
    doc = json.loads(out_file.read_text())
    assert doc["passed"]
    assert sorted(os.listdir(figs)) == ["suite_invariants.png", "suite_summary.png"]


def test_module_figure(tmp_path, capsys):
    figs = tmp_path / "figs"
    code, out, _ = run(["module", "analyze", "--figures", str(figs), write(tmp_path, "z12.json", Z12)], capsys)
    assert code == 0
    assert os.path.exists(json.loads(out)["figures"][0])


def test_entry_point_module(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "fslab", "catalog", "show", "Prufer:3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["hollow_dim"]["value"] == 1


@pytest.mark.parametrize("argv", [["suite"], ["bogus"]])
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as exc:
        cli.main(argv)
    assert exc.value.code == 2
