import json

import pytest

from colorlie import serialize
from colorlie.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture(scope="module")
def alg_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("cli") / "so4222.json"
    code = main(["generate", "--family", "so",
                 "--p", "4", "--q", "2", "--r", "2", "--s", "2",
                 "-o", str(path)])
    assert code == 0
    return path


@pytest.fixture(scope="module")
def rep_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("cli") / "defining.json"
    # the CLI-generated algebra basis coincides with so_pqrs; express the
    # defining rep against it
    from colorlie.families import SoParams, so_pqrs
    from colorlie.reps import defining_representation
    from colorlie.algebra import from_matrices

    real = so_pqrs(SoParams(4, 2, 2, 2))
    g = from_matrices(real)
    rep = defining_representation(g, real)
    path.write_text(json.dumps(serialize.representation_to_json(rep, "so4222")))
    return path


def test_generate_and_validate(capsys, alg_file):
    code, out, err = run(capsys, "validate", str(alg_file))
    assert code == 0
    doc = json.loads(out)
    assert doc["ok"] is True
    assert doc["basic"] is True
    assert doc["killingRadicalDim"] == 0


def test_generate_determinism(capsys, tmp_path):
    args = ["generate", "--family", "so", "--p", "4", "--q", "2", "--r", "1", "--s", "1"]
    code1 = main(args + ["-o", str(tmp_path / "a.json")])
    code2 = main(args + ["-o", str(tmp_path / "b.json")])
    assert code1 == code2 == 0
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()


def test_roots_report(capsys, alg_file):
    code, out, err = run(capsys, "roots", str(alg_file))
    assert code == 0
    doc = json.loads(out)
    assert len(doc["roots"]) == 40
    assert doc["selfCentralizing"] is True
    assert doc["dynkinType"] == "D5"
    assert doc["weylOrder"] == 1920


def test_dynkin_json_and_dot(capsys, alg_file):
    code, out, _ = run(capsys, "dynkin", str(alg_file), "--enhanced")
    assert code == 0
    doc = json.loads(out)
    assert doc["dynkinType"] == "D5"
    assert sorted(map(tuple, doc["nodeDegrees"])) == [
        (0, 0), (0, 1), (0, 1), (0, 1), (1, 1)]
    code, out, _ = run(capsys, "dynkin", str(alg_file), "--dot")
    assert code == 0
    assert out.startswith("graph dynkin {")


def test_rep_decompose(capsys, alg_file, rep_file):
    code, out, _ = run(capsys, "rep-decompose", str(rep_file),
                       "--algebra", str(alg_file))
    assert code == 0
    doc = json.loads(out)
    assert doc["totalDim"] == 10
    assert doc["components"][0]["highestWeight"] == ["1", "0", "0", "0", "0"]


def test_casimir(capsys, alg_file, rep_file):
    code, out, _ = run(capsys, "casimir", str(rep_file),
                       "--algebra", str(alg_file))
    assert code == 0
    doc = json.loads(out)
    assert doc["central"] is True
    assert doc["components"][0]["casimirValue"] == "9/16"


def test_corrupted_structure_exits_1(capsys, alg_file, tmp_path):
    doc = json.loads(alg_file.read_text())
    doc["structure"][0]["re"] = "17/3"  # corrupt one structure constant
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code, out, err = run(capsys, "validate", str(bad))
    assert code == 1
    assert "FAIL" in err


def test_parse_error_exits_2(capsys, tmp_path):
    bad = tmp_path / "notjson.json"
    bad.write_text("{nope")
    code, _, err = run(capsys, "validate", str(bad))
    assert code == 2
    assert err


def test_missing_file_exits_2(capsys, tmp_path):
    code, _, err = run(capsys, "roots", str(tmp_path / "absent.json"))
    assert code == 2


def test_degenerate_order_exits_1(capsys, alg_file):
    code, _, err = run(capsys, "roots", str(alg_file),
                       "--order", "1,1,0,0,0")
    assert code == 1
    assert "vanishes" in err
