import json

from subposet_lab.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_count_power_set(capsys):
    code, out, _ = call(capsys, "count", "--n", "2", "--family", "all", "--poset", "P2")
    assert code == 0 and json.loads(out) == {"value": "5"}


def test_la_exact(capsys):
    code, out, _ = call(capsys, "la", "exact", "--n", "3", "--forbid", "V2", "--count", "P2")
    data = json.loads(out)
    assert code == 0 and data["value"] == "3" and data["exact"] is True


def test_la_exact_budget_exit(capsys):
    code, out, _ = call(capsys, "la", "exact", "--n", "5", "--forbid", "P3", "--count", "P2", "--budget", "50")
    assert code == 2 and json.loads(out)["exact"] is False


def test_usage_errors(capsys):
    assert call(capsys, "count", "--n", "2", "--poset", "Q")[0] == 1
    assert call(capsys, "formula", "sperner-erdos", "--n", "2", "--k", "9")[0] == 1
    assert call(capsys, "no-such-command")[0] == 1
    assert call(capsys, "verify", "bogus")[0] == 1


def test_formula_and_constants(capsys):
    code, out, _ = call(capsys, "formula", "chain-chain", "--n", "4", "--k", "2")
    assert json.loads(out) == {"value": "12", "arg": ["1", "2"]}
    code, out, _ = call(capsys, "formula", "constants")
    consts = json.loads(out)["constants"]
    assert abs(float(consts["c0"]) - 0.69922) < 1e-4


def test_family_round_trip(tmp_path, capsys):
    code, out, _ = call(capsys, "construct", "kt", "--n", "4", "--text")
    assert code == 0
    path = tmp_path / "kt.txt"
    path.write_text(out)
    code, out, _ = call(capsys, "free", "--family", str(path), "--forbid", "V2,A2")
    assert json.loads(out) == {"free": True}
    code, out, _ = call(capsys, "count", "--family", str(path), "--poset", "P2")
    assert json.loads(out) == {"value": "3"}


def test_tsv_output(capsys):
    code, out, _ = call(capsys, "count", "--n", "3", "--family", "levels:1,2", "--poset", "V2", "--format", "tsv")
    assert code == 0 and out.strip().endswith("3")


def test_poset_and_profiles(capsys):
    _, out, _ = call(capsys, "poset", "iso", "K(1,2,1)", "D2")
    assert json.loads(out) == {"isomorphic": True}
    _, out, _ = call(capsys, "beta", "--n", "3", "--family", "levels:2", "--r", "2")
    assert json.loads(out) == {"beta": ["0", "3", "0"]}
    _, out, _ = call(capsys, "gamma-level", "--n", "4", "--m", "2", "--r", "2", "--i", "0", "--j", "4")
    assert json.loads(out) == {"value": "3"}
    _, out, _ = call(capsys, "level-opt", "--n", "4", "--k", "1", "--l", "1")
    assert json.loads(out)["value"] == "6"


def test_antichain_and_ratio(capsys):
    _, out, _ = call(capsys, "antichain-max", "beta", "--n", "3", "--r", "2")
    assert json.loads(out)["value"] == "3"
    _, out, _ = call(capsys, "ratio", "--n", "3", "--forbid", "V2", "--count", "P2")
    assert json.loads(out) == {"ratio": "1"}


def test_verify_subcommand(capsys):
    code, out, _ = call(capsys, "verify", "constants", "level-dp")
    assert code == 0
    assert "PASS constants" in out and "PASS level-dp" in out
