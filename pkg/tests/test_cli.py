import json

from gmspec.cli import run


def test_seq_command(capsys):
    assert run(["seq", "--k", "1,2,0", "--sigma", "id", "--t", "2/5"]) == 0
    assert capsys.readouterr().out.strip() == "5,1,3,3,1,5,4,1,3,4"


def test_lagrange_command(capsys):
    assert run(["lagrange", "--seq", "1,1,1,2,2,2"]) == 0
    assert capsys.readouterr().out.strip() == "(0 + 4√210)/19"


def test_distance_command(capsys):
    assert run(["distance", "--from", "0,0", "--to", "3,2", "--k", "1,2,0", "--sigma", "id"]) == 0
    assert capsys.readouterr().out.strip() == "373"


def test_alpha_command_via_label(capsys):
    assert run(["alpha", "--t", "1/2", "--k", "0,0,0"]) == 0
    assert capsys.readouterr().out.strip() == "(11 + 1√221)/10"


def test_cohn_command_json(capsys):
    assert run(["--format", "json", "cohn", "--t", "1/2", "--k", "0,0,0"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["matrix"] == [[13, 5], [5, 2]]


def test_node_command(capsys):
    assert run(["node", "--t", "2/3", "--k", "1,2,0"]) == 0
    assert capsys.readouterr().out.strip() == "((17,3),(373,1),(4,2))"


def test_spectrum_command_json(capsys):
    assert run(["--format", "json", "spectrum", "--k", "0,0,0", "--depth", "1"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert [(el["p"], el["q"], el["D"], el["r"]) for el in data[:2]] == [
        (0, 1, 5, 1),
        (0, 2, 2, 1),
    ]
    assert data[0]["decimal"].startswith("2.2360679")


def test_spectrum_csv_schema(capsys):
    assert run(["--format", "csv", "spectrum", "--k", "0,0,1", "--depth", "1"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    header = lines[0].split(",")
    assert header == ["k1", "k2", "k3", "sigma", "t", "n", "pos", "p", "q", "D", "r", "decimal"]
    assert len(lines) >= 4


def test_usage_error_exit_code(capsys):
    assert run(["frobnicate"]) == 1
    assert run(["seq", "--k", "1,2,0"]) == 1  # missing --t


def test_domain_error_exit_code(capsys):
    assert run(["seq", "--t", "2/4", "--k", "0,0,0"]) == 2
    assert run(["seq", "--t", "1/2", "--k", "0,0"]) == 2
    assert run(["lagrange", "--seq", "1,0,2"]) == 2


def test_tables_command(capsys):
    assert run(["tables"]) == 0
    out = capsys.readouterr().out
    assert "80/80 rows match" in out


def test_verify_snake_suite(capsys):
    assert run(["verify", "--suite", "snake"]) == 0
    assert "[pass] snake-oracle" in capsys.readouterr().out


def test_verify_unknown_suite(capsys):
    assert run(["verify", "--suite", "nope"]) == 1  # usage error


def test_surd_json_roundtrip(capsys):
    from gmspec.exact import QuadSurd
    from gmspec.spectrum import alpha_fixed_point

    assert run(["--format", "json", "alpha", "--seq", "2,1,1,2"]) == 0
    data = json.loads(capsys.readouterr().out)
    rebuilt = QuadSurd(data["p"], data["q"], data["D"], data["r"])
    assert rebuilt == alpha_fixed_point((2, 1, 1, 2))


def test_out_file(tmp_path):
    target = tmp_path / "out.json"
    assert run(["--format", "json", "--out", str(target), "seq", "--t", "1/2"]) == 0
    assert json.loads(target.read_text())["s"] == [2, 1, 1, 2]
