import json

from rorc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_running_example(capsys):
    code, out, _ = run(capsys, "analyze", "-d", "7,5,2,3,5,1,2,6,5")
    assert code == 0
    assert "lambda(d) = (9, 8, 6, 5, 5, 2, 1)" in out
    assert "(1,8)" in out and "(2,5)" in out and "(3,7)" in out and "(5,9)" in out
    assert "components: 4" in out


def test_analyze_json_schema(capsys):
    code, out, _ = run(capsys, "analyze", "-d", "2,1,2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["d"] == [2, 1, 2]
    assert data["lambda"] == [3, 2]
    assert len(data["components"]) == 1
    comp = data["components"][0]
    assert comp["pair"] == [1, 3]
    assert comp["kappa"] == 1 and comp["rank_threshold"] == 3 and comp["codim"] == 1


def test_analyze_single_block(capsys):
    code, out, _ = run(capsys, "analyze", "-d", "5")
    assert code == 0
    assert "components: 0" in out


def test_analyze_malformed_d(capsys):
    code, _, err = run(capsys, "analyze", "-d", "3,x")
    assert code == 2
    assert "error" in err
    code, _, _ = run(capsys, "analyze", "-d", "3,0,1")
    assert code == 2


def test_diagram_command(capsys):
    code, out, _ = run(capsys, "diagram", "-d", "3,1,2,4")
    assert code == 0
    assert "o---o---o---o" in out
    assert "chain lengths: (3, 2, 1, 0)" in out


def test_diagram_window(capsys):
    code, out, _ = run(capsys, "diagram", "-d", "7,5,2,3,5,1,2,6,5",
                       "--pair", "4,7", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["d"] == [3, 5, 1, 2]
    assert sorted(data["chain_lengths"], reverse=True) == [3, 2, 1, 0, 0]


def test_tableau_command(capsys):
    code, out, _ = run(capsys, "tableau", "-d", "1,1")
    assert code == 0
    assert out.strip() == "1 2"


def test_tableau_pair_json(capsys):
    code, out, _ = run(capsys, "tableau", "-d", "7,5,2,3,5,1,2,6,5",
                       "--pair", "2,5", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["shape"] == [9, 8, 6, 5, 4, 3, 1]
    assert data["rows"][5] == [1, 5, 8]
    assert set(data) == {"shape", "rows"}


def test_tableau_bad_pair(capsys):
    code, _, err = run(capsys, "tableau", "-d", "2,1,2", "--pair", "3,1")
    assert code == 2


def test_verify_exhaustive(capsys):
    code, out, _ = run(capsys, "verify", "-d", "2,1,2", "--mode", "exhaustive",
                       "--field", "2")
    assert code == 0
    assert "components = 1" in out
    assert "[pass] theorem_exhaustive" in out


def test_verify_exhaustive_112_1(capsys):
    code, out, _ = run(capsys, "verify", "-d", "1,1,2,1", "--mode", "exhaustive",
                       "--field", "2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["components"] == 2
    theorem = next(c for c in data["checks"] if c["name"] == "theorem_exhaustive")
    assert theorem["passed"]
    assert set(theorem["counts"]["per_stratum"]) == {"1,2", "2,4"}


def test_verify_sample_determinism(capsys):
    args = ("verify", "-d", "3,3,3", "--mode", "sample", "--trials", "200",
            "--seed", "7", "--json")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2


def test_verify_counts_check(capsys):
    code, out, _ = run(capsys, "verify", "-d", "1,1", "--checks", "counts",
                       "--trials", "100", "--seed", "1", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["checks"][0]["name"] == "component_count"


def test_verify_surfaces_false_lemma_findings(capsys):
    # the low-power containment is false; verify must exit 1 and report the
    # counterexamples while the decomposition check itself passes
    code, out, _ = run(capsys, "verify", "-d", "1,3,2", "--mode", "exhaustive",
                       "--field", "2", "--json")
    assert code == 1
    data = json.loads(out)
    low = next(c for c in data["checks"] if c["name"] == "lemma_below_threshold")
    assert not low["passed"]
    assert low["counts"]["violations"] > 0
    assert low["violations"][0]["matrix"]["n"] == 6
    theorem = next(c for c in data["checks"] if c["name"] == "theorem_exhaustive")
    assert theorem["passed"]


def test_verify_invalid_config(capsys):
    code, _, err = run(capsys, "verify", "-d", "2,1,2", "--field", "6")
    assert code == 2
    code, _, err = run(capsys, "verify", "-d", "2,1,2", "--checks", "bogus")
    assert code == 2
    code, _, err = run(capsys, "verify", "-d", "3,3,3", "--mode", "exhaustive",
                       "--field", "2")
    assert code == 2  # infeasible under the default budget


def test_witness_command(capsys, tmp_path):
    out_path = tmp_path / "w.json"
    code, out, _ = run(capsys, "witness", "-d", "1,1,1,1,1", "--pair", "1,2",
                       "--json", "--out", str(out_path))
    assert code == 0
    data = json.loads(out_path.read_text())
    assert data["pair"] == [1, 2]
    assert data["matrix"]["n"] == 5
    assert [1, 2, 1] in data["defect_profile"]

    # round-trip: the emitted matrix JSON is accepted back for verification
    matrix_path = tmp_path / "m.json"
    matrix_path.write_text(json.dumps(data["matrix"]))
    code, out, _ = run(capsys, "witness", "-d", "1,1,1,1,1", "--pair", "1,2",
                       "--verify-matrix", str(matrix_path))
    assert code == 0
    assert "separates" in out

    code, out, _ = run(capsys, "witness", "-d", "1,1,1,1,1", "--pair", "2,3",
                       "--verify-matrix", str(matrix_path))
    assert code == 1
    assert "does NOT separate" in out


def test_witness_pair_outside_lambda(capsys):
    code, _, err = run(capsys, "witness", "-d", "2,1,2", "--pair", "1,2")
    assert code == 2
    assert "Lambda" in err


def test_witness_requires_pair(capsys):
    code, _, err = run(capsys, "witness", "-d", "2,1,2")
    assert code == 2


def test_seed_env_fallback(capsys, monkeypatch):
    monkeypatch.setenv("RORC_SEED", "99")
    from rorc.cli import build_parser

    args = build_parser().parse_args(["verify", "-d", "1,1"])
    assert args.seed == 99
    monkeypatch.setenv("RORC_SEED", "not-an-int")
    args = build_parser().parse_args(["verify", "-d", "1,1"])
    assert args.seed == 0
