"""End-to-end runs of the command line tool, checked against golden output."""

import json

import pytest

from quasitruth.cli import main


def as_json(result):
    return json.loads(result.stdout)


def test_classify_g(run_cli, scenario):
    r = run_cli("classify", scenario("g"), "Father(joseph, peter)", "--json")
    assert r.returncode == 0
    out = as_json(r)
    assert set(out) == {"command", "verdict", "evidence", "budget_used"}
    assert out["verdict"] == "QUASI-TRUE"
    assert out["evidence"]["witness"] == [
        {"predicate": "alpha", "tuple": [], "value": "in"},
        {"predicate": "Father", "tuple": ["Joseph", "Peter"], "value": "in"},
    ]


def test_classify_plain_text(run_cli, scenario):
    r = run_cli("classify", scenario("g"), "Father(joseph, peter)")
    assert r.returncode == 0
    assert r.stdout.splitlines()[0] == "QUASI-TRUE"


@pytest.mark.parametrize("name, text, verdict, code", [
    ("g_prime", "Father(joseph, peter)", "PRAGMATIC-NONSENSE", 5),
    ("g_prime_bare", "~Father(joseph, peter)", "QUASI-TRUE", 0),
    ("g_double_prime", "Father(joseph, peter)", "QUASI-FALSE", 1),
    ("g", "~alpha", "PRAGMATIC-NONSENSE", 5),
    ("g", "Father(joseph)", "FORMAL-NONSENSE", 3),
])
def test_classify_exit_codes(run_cli, scenario, name, text, verdict, code):
    r = run_cli("classify", scenario(name), text, "--json")
    assert (as_json(r)["verdict"], r.returncode) == (verdict, code)


def test_parse(run_cli, scenario):
    r = run_cli("parse", scenario("g"), "alpha->Father(joseph,peter)", "--json")
    assert r.returncode == 0
    assert as_json(r)["evidence"]["formula"] == "alpha -> Father(joseph, peter)"
    r = run_cli("parse", scenario("g"), "alpha ->", "--json")
    assert r.returncode == 3 and as_json(r)["evidence"]["position"] == 7


def test_expand_family(run_cli, scenario):
    r = run_cli("expand", scenario("family_f"), "--json", "--list")
    ev = as_json(r)["evidence"]
    assert r.returncode == 0
    assert (ev["k"], ev["expansions"], ev["a_normal_count"]) == (1, 2, 2)
    assert [row[0]["value"] for row in ev["a_normal"]] == ["out", "in"]


def test_audit(run_cli, scenario):
    r = run_cli("audit", scenario("g_prime"), "--json")
    assert r.returncode == 5 and as_json(r)["evidence"]["missing"] == ["alpha"]
    r = run_cli("audit", scenario("g"))
    assert r.returncode == 0
    r = run_cli("audit", scenario("g_double_prime"), "--mode", "strict", "--json")
    assert r.returncode == 5
    assert as_json(r)["evidence"]["strict_extras"] == ["~Father(joseph, peter)"]


def test_eval(tmp_path, run_cli, scenario):
    r = run_cli("eval", scenario("family_f"), "Married(joseph, mary)")
    assert r.returncode == 2 and "total" in r.stderr
    doc = json.loads(scenario("family_f").read_text())
    father = doc["relations"]["Father"]
    father["known_out"] += father.pop("unknown")
    father["unknown"] = []
    path = tmp_path / "total.kb.json"
    path.write_text(json.dumps(doc))
    assert run_cli("eval", path, "Married(joseph, mary)").returncode == 0
    r = run_cli("eval", path, "Father(joseph, peter)", "--json")
    assert r.returncode == 1 and as_json(r)["verdict"] == "FALSE"


def test_budget(run_cli, scenario):
    r = run_cli("classify", scenario("last_witness_k12"), "P(first)", "--budget", "1", "--json")
    out = as_json(r)
    assert r.returncode == 4
    assert out["verdict"] == "FORMAL-NONSENSE" and out["budget_used"] == 1


def test_input_errors(run_cli, scenario, tmp_path):
    assert run_cli("classify", tmp_path / "missing.json", "alpha").returncode == 2
    bad = tmp_path / "bad.kb.json"
    bad.write_text("{")
    r = run_cli("classify", bad, "alpha", "--json")
    assert r.returncode == 2 and as_json(r)["verdict"] == "ERROR"
    assert run_cli("classify", scenario("g")).returncode == 2
    assert run_cli("classify", scenario("g"), "alpha", "--budget", "0").returncode == 2
    assert run_cli("frobnicate", scenario("g")).returncode == 2


def test_pure_python_backend_gives_same_output(run_cli, scenario):
    args = ("classify", scenario("g_prime_bare"), "~Father(joseph, peter)", "--json")
    assert run_cli(*args).stdout == run_cli(*args, env={"QUASITRUTH_PURE_PYTHON": "1"}).stdout


def test_main_in_process(scenario, capsys):
    assert main(["classify", str(scenario("g")), "alpha", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["verdict"] == "QUASI-TRUE"
