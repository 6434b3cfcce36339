import json
import subprocess
import sys

import pytest

from gogcalc.cli import main
from gogcalc.lab import build_gamma
from gogcalc.wordsyntax import dump_graph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


def test_equal(capsys):
    code, out, _ = run(capsys, "equal", "v3{g0}", "y[2->3] * v2{g0} * y[2->3]^-1", "--graph", "gamma4")
    assert (code, out) == (0, "true")
    code, out, _ = run(capsys, "equal", "v3{g2}", "y[2->3] * y[2->3]^-1", "--graph", "gamma4")
    assert (code, out) == (0, "false")


def test_reduce_and_normalize(capsys):
    assert run(capsys, "reduce", "y[3->2]^-1 * v2{g0} * y[3->2]", "--graph", "gamma4")[1] == "v3{g0}"
    assert run(capsys, "normalize", "y[4->3] * v4{g0 g3}", "--graph", "gamma6")[1] == "v3{g0} * y[4->3] * v4{g3}"


def test_retract_in_zy_passes_through(capsys):
    assert run(capsys, "retract", "y[3->4] * v3{g1} * y[2->3]")[1] == "y[3->4] * y[2->3]"
    assert run(capsys, "in-zy", "v3{g0}", "--graph", "gamma4")[1] == "none"
    assert run(capsys, "in-zy", "y[3->4] * v3{g1} * y[2->3] * v2{g1^-1}")[1] == "y[3->4] * y[2->3]"
    assert run(capsys, "passes-through", "y[3->5] * y[2->3]")[1] == "2 3 5"


def test_perm_commands(capsys):
    assert run(capsys, "perm", "conj-tau", "(0 1)", "--beta", "w")[1] == "(1 2)"
    assert run(capsys, "perm", "shift", "(w w+1)")[1] == "(w+1 w+2)"
    assert run(capsys, "perm", "tau", "0", "--beta", "w")[1] == "w"
    assert run(capsys, "perm", "tau", "w+3", "--beta", "w", "--inverse")[1] == "w+2"
    assert run(capsys, "perm", "in-image", "(w w*2)")[1] == "none"
    assert run(capsys, "perm", "in-image", "(1 2)")[1] == "(0 1)"
    assert run(capsys, "perm", "hom-check", "(0 1)", "(1 2)") == (0, "true", "")


def test_free_commands(capsys):
    assert run(capsys, "free", "reduce", "g0 g1 g1^-1 g0")[1] == "g0 g0"
    assert run(capsys, "free", "centralizes", "g0 g0", "--gens", "0")[1] == "true"
    assert run(capsys, "free", "conjugates-into", "g2", "g0")[1] == "false"
    assert run(capsys, "free", "conjugate", "g0 g1", "g1 g0")[1] == "true"


def test_json_output_has_schema_version(capsys):
    code, out, _ = run(capsys, "perm", "shift", "(0 1)", "--json")
    data = json.loads(out)
    assert data == {"schema_version": 1, "perm": "(1 2)"}
    code, out, _ = run(capsys, "lab", "cocone", "--n", "6", "--json")
    data = json.loads(out)
    assert code == 0 and data["ok"] and data["schema_version"] == 1


def test_lab_commands(capsys):
    code, out, _ = run(capsys, "lab", "crossing", "y[4->8] * y[6->4] * y[2->6]", "--delta", "5", "--n", "10")
    assert (code, out) == (0, "y[2->6]")
    code, out, _ = run(capsys, "lab", "horizontal", "y[3->5]", "--gamma", "3")
    assert out == "true"
    code, out, _ = run(capsys, "lab", "search", "--graph", "gamma4", "--gamma", "2", "--beta", "2",
                       "--alpha", "3", "--max-edges", "1", "--max-vertex-len", "1")
    assert code == 0 and "  y[2->3]" in out.splitlines()
    code, out, _ = run(capsys, "lab", "noys", "v4{}", "v4{}", "v4{}")
    assert code == 0 and "consistent=true" in out
    code, out, _ = run(capsys, "lab", "audit", "--family", "consecutive", "--n", "50", "--json")
    data = json.loads(out)
    assert code == 0 and data["details"]["length"] >= 5
    code, out, _ = run(capsys, "lab", "coherence", "--family", "canonical", "--n", "20")
    assert code == 0 and out.startswith("PASS")


def test_lab_build_json(capsys):
    code, out, _ = run(capsys, "lab", "build", "--n", "5", "--json")
    data = json.loads(out)
    assert len(data["graph"]["vertices"]) == 3 and len(data["graph"]["edges"]) == 6
    assert data["violations"] == []


def test_failing_verification_exits_1(capsys):
    code, out, _ = run(capsys, "lab", "coherence", "--family", "direct", "--n", "6")
    assert code == 1 and out.startswith("FAIL")
    # the canonical family passes below its source, so the audit precondition fails
    code, _, err = run(capsys, "lab", "audit", "--family", "canonical", "--n", "20", "--m", "1")
    assert code == 2 and "passes below" in err


@pytest.mark.parametrize("argv,fragment", [
    (["equal", "y[2->3] * y[4->5]", "v2{}"], "factor 1"),
    (["reduce", "v3{g0"], "column"),
    (["perm", "shift", "(0 x)"], "bad ordinal"),
    (["perm", "conj-tau", "(0 w)", "--beta", "w"], "at or above"),
    (["perm", "tau", "3", "--beta", "5"], "limit"),
    (["reduce", "v2{}", "--graph", "/nonexistent.json"], "cannot read"),
    (["lab", "cocone", "--n", "3"], "at least 4"),
])
def test_input_errors_exit_2(capsys, argv, fragment):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert fragment in err


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "perm", "conj-tau", "(0 1)")[0] == 2


def test_graph_file_option(tmp_path, capsys):
    path = tmp_path / "g.json"
    dump_graph(build_gamma(5).graph, path)
    assert run(capsys, "reduce", "y[2->4]^-1 * v4{g1} * y[2->4]", "--graph", str(path))[1] == "v2{g1}"
    path.write_text('{"vertices": [], "edges": 3}')
    code, _, err = run(capsys, "reduce", "v2{}", "--graph", str(path))
    assert code == 2 and "edges" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gogcalc", "perm", "conj-tau", "(0 1)", "--beta", "w"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "(1 2)"


def test_word_from_file(tmp_path, capsys):
    path = tmp_path / "w.txt"
    path.write_text("y[4->3] * v4{g0 g3}\n")
    assert run(capsys, "normalize", f"@{path}")[1] == "v3{g0} * y[4->3] * v4{g3}"
    code, _, err = run(capsys, "normalize", f"@{tmp_path}/missing")
    assert code == 2 and "cannot read" in err


def test_reports_are_deterministic(capsys):
    argv = ["lab", "noys", "y[3->4] * v3{g0} * y[4->3]", "v4{g1}", "y[4->5]", "--json"]
    first = run(capsys, *argv)
    assert run(capsys, *argv) == first
