import json
import subprocess
import sys

import jsonschema
import pydot
import pytest

from flagcat.cli import load_schema, main, run


def result(argv):
    status, envelope, _ = run(argv)
    assert status == 0
    jsonschema.validate(envelope, load_schema("envelope"))
    return envelope["result"]


@pytest.mark.parametrize("a, b, dim", [("2,0", "1,1", 2), ("1,1", "1,1", 1), ("1,1", "2,0", 0)])
def test_hom_dim(a, b, dim):
    out = result(["hom-dim", "--n", "2", "--a", a, "--b", b, "--oracle"])
    assert out["dimension"] == dim == out["brute_force"]
    assert out["agree"] is True


def test_ext1():
    out = result(["ext1", "--n", "2", "--lam", "1;1", "--mu", "2;-"])
    assert out["dimension"] == 1 and all(out["conditions"].values())
    out = result(["ext1", "--n", "2", "--lam", "1;1", "--mu", "1;1"])
    assert out["dimension"] == 0 and out["conditions"]["1_cover"] is False
    assert result(["ext1", "--n", "2", "--lam", "1;1", "--mu", "1,1;-"])["dimension"] == 1


def test_quiver_json_and_dot(capsys):
    out = result(["quiver", "--n", "2", "--max-degree", "2"])
    jsonschema.validate(out, load_schema("quiver"))
    assert len(out["nodes"]) == 8 and len(out["edges"]) == 5
    assert result(["quiver", "--n", "1", "--max-degree", "5"])["edges"] == []
    assert len(result(["quiver", "--n", "3", "--max-degree", "0"])["nodes"]) == 1
    assert main(["quiver", "--n", "2", "--max-degree", "2", "--format", "dot"]) == 0
    dot = capsys.readouterr().out
    (graph,) = pydot.graph_from_dot_data(dot)
    assert len(graph.get_edges()) == 5
    assert {n.get_name().strip('"') for n in graph.get_nodes()} >= set(out["nodes"])


def test_jh_commands():
    out = result(["jh", "--n", "2", "I[1;1]"])
    jsonschema.validate(out["class"], load_schema("grothclass"))
    assert out["class"] == {"2;-": 1, "1,1;-": 1, "1;1": 1}
    assert result(["jh", "--n", "2", "T(1,1)"])["class"] == {"1;1": 1, "-;2": 1, "-;1,1": 1}
    assert result(["jh", "--n", "2", "M[2,1;1]"])["class"] == {"2,1;1": 1}
    assert result(["jh", "--n", "2", "K(2,0)"])["class"] == {"2;-": 1, "1,1;-": 1}


def test_socle_and_jh_T():
    out = result(["socle-T", "--n", "2", "--a", "0,3"])
    assert out["class"] == {"-;3": 1, "-;2,1": 2, "-;1,1,1": 1}
    assert result(["jh-T", "--n", "2", "--a", "0,3"])["class"] == out["class"]


def test_tensor():
    assert result(["tensor", "--n", "2", "M[1;-]", "M[-;1]"])["class"] == {"1;1": 1}
    assert result(["tensor", "--n", "1", "S[1]", "S[1]"])["class"] == {"2": 1, "1,1": 1}
    out = result(["tensor", "--n", "2", "P(1,1)", "P(1,0)"])
    assert out["object"] == "P(2,1)" and out["audit_passed"] is True
    assert main(["tensor", "--n", "2", "M[1;-]", "P(1,0)"]) == 2


def test_decompose_and_eval():
    out = result(["decompose-principal", "--n", "2", "--kind", "injective", "--a", "3,0"])
    assert out["summands"] == {"3;-": 1, "2,1;-": 2, "1,1,1;-": 1}
    assert result(["eval-flag", "--n", "2", "--lam", "1;1", "--dims", "1,1", "--envelope", "injective"])["dimension"] == 2
    assert result(["eval-flag", "--n", "2", "--lam", "1,1;-", "--dims", "1,3"])["dimension"] == 0


def test_relabelling_commands():
    assert result(["dual", "--n", "2", "P(2,0)"])["output"] == "J(2,0)"
    assert result(["tau", "--n", "2", "P(2,0)"])["output"] == "Q(0,2)"
    assert result(["to-umod", "--n", "2", "T(2,0)"])["output"] == "I(0,2)"
    assert result(["from-umod", "--n", "2", "M[1;2]", "--model", "A"])["output"] == "F[2;1]"


@pytest.mark.parametrize(
    "argv, token",
    [
        (["hom-dim", "--n", "2", "--a", "2,x", "--b", "1,1"], "'x'"),
        (["ext1", "--n", "2", "--lam", "1;1;1", "--mu", "2;-"], "'1;1;1'"),
        (["jh", "--n", "2", "Z[1;1]"], "'Z'"),
        (["eval-flag", "--n", "2", "--lam", "1,2;-", "--dims", "1,1"], "'1,2'"),
    ],
)
def test_parse_errors_name_the_token(argv, token, capsys):
    assert main(argv) == 2
    assert token in capsys.readouterr().err


def test_missing_n_is_rejected():
    with pytest.raises(SystemExit) as info:
        main(["hom-dim", "--a", "1", "--b", "1"])
    assert info.value.code == 2


def test_text_format(capsys):
    assert main(["jh", "--n", "2", "I[1;1]", "--format", "text"]) == 0
    assert capsys.readouterr().out.startswith("class: M[2;-] + M[1,1;-] + M[1;1]")


def test_determinism():
    argv = ["jh", "--n", "3", "P[1;1;1]"]
    first, second = run(argv)[1], run(argv)[1]
    first.pop("elapsed_seconds"), second.pop("elapsed_seconds")
    assert json.dumps(first) == json.dumps(second)


def test_cache_on_off_identical(tmp_path):
    argv = ["jh", "--n", "2", "P(2,1)", "--cache", "--cache-dir", str(tmp_path)]
    plain = run(argv[:5])[1]
    cold = run(argv)[1]
    warm = run(argv)[1]
    assert not cold["cache_hit"] and warm["cache_hit"]
    assert plain["result"] == cold["result"] == warm["result"]


def test_cache_dir_from_environment(tmp_path, monkeypatch):
    monkeypatch.setenv("FLAGCAT_CACHE_DIR", str(tmp_path))
    run(["hom-dim", "--n", "2", "--a", "2,0", "--b", "1,1", "--cache"])
    assert list(tmp_path.rglob("*.json"))


def test_verify_command():
    status, envelope, _ = run(["verify", "duality", "--n", "2", "--max-degree", "3"])
    assert status == 0
    report = envelope["result"]
    jsonschema.validate(report, load_schema("verify"))
    assert report["passed"] and report["suites"][0]["params"] == {"n_max": 2, "max_degree": 3}


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "flagcat", "hom-dim", "--n", "3", "--a", "1,1,1", "--b", "0,1,2"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["result"]["dimension"] == 4
