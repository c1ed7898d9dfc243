import json

import pytest

import statesum as S
from statesum import io as sio
from statesum.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


@pytest.fixture()
def m23_file(tmp_path, capsys):
    path = str(tmp_path / "m23.json")
    code = main(["catalog", "algebra", "matsum", "2,3", "1,1", "rational", "-o", path])
    capsys.readouterr()
    assert code == 0
    return path


@pytest.fixture()
def z2_file(tmp_path, capsys):
    path = str(tmp_path / "z2.json")
    code = main(["catalog", "algebra", "group", "cyclic", "2", "rational", "-o", path])
    capsys.readouterr()
    assert code == 0
    return path


# -- round trips ----------------------------------------------------------------------


def test_algebra_file_roundtrip(m23_file):
    with open(m23_file) as fh:
        doc = sio.loads(fh.read())
    alg, F, blocks = sio.algebra_from_json(doc)
    assert alg.dim == 13 and blocks == {"sizes": [2, 3], "windows": [1, 1]}
    redumped = sio.algebra_to_json(alg, frobenius=doc["frobenius"], blocks=doc["blocks"])
    assert sio.dumps(redumped) == sio.dumps(doc)


def test_complex_file_roundtrip(tmp_path, capsys):
    path = str(tmp_path / "c.json")
    assert main(["catalog", "complex", "zipper", "-o", path]) == 0
    capsys.readouterr()
    with open(path) as fh:
        doc = sio.loads(fh.read())
    c = sio.complex_from_json(doc)
    assert c.validate().ok
    assert sio.dumps(sio.complex_to_json(c)) == sio.dumps(doc)


def test_complex_brane_colours_roundtrip():
    c = S.strip(1, 1)
    arcs = c.coloured_arcs()
    c = c.replaced(edge_colours={e: f"brane{i}" for i, arc in enumerate(arcs) for e in arc})
    doc = sio.complex_to_json(c)
    assert doc["brane_colours"] == {"0": "brane0", "1": "brane1"}
    c2 = sio.complex_from_json(doc)
    assert c2.edge_colours == c.edge_colours


def test_output_is_byte_stable(m23_file, tmp_path, capsys):
    other = str(tmp_path / "again.json")
    assert main(["catalog", "algebra", "matsum", "2,3", "1,1", "rational", "-o", other]) == 0
    capsys.readouterr()
    assert open(m23_file).read() == open(other).read()


# -- commands ---------------------------------------------------------------------------


def test_algebra_check_reports(z2_file, capsys):
    code, out = run(capsys, "algebra", "check", z2_file, "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["dim"] == 2 and doc["centre_dim"] == 2 and doc["strongly_separable"]
    assert doc["window"] == ["2", "0"]


def test_algebra_check_not_strongly_separable(tmp_path, capsys):
    path = str(tmp_path / "m2f2.json")
    assert main(["catalog", "algebra", "matsum", "2", "1", "prime:2", "-o", path]) == 0
    capsys.readouterr()
    code, out = run(capsys, "algebra", "check", path)
    assert code == 2
    doc = json.loads(out)
    assert doc["error"] == "NotStronglySeparableError"


def test_algebra_check_malformed_json(tmp_path, capsys):
    path = write(tmp_path, "bad.json", "{ not json")
    code, out = run(capsys, "algebra", "check", path)
    assert code == 1


def test_algebra_check_non_associative_file(tmp_path, capsys):
    # unit laws hold but (x x) x != x (x x); must exit 1 with the witness error
    doc = {
        "field": {"kind": "rational"}, "dim": 3,
        "mul": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"],
                [0, 2, 2, "1"], [2, 0, 2, "1"], [1, 1, 2, "1"], [2, 1, 2, "1"]],
        "unit": ["1", "0", "0"],
    }
    path = write(tmp_path, "assoc.json", sio.dumps(doc))
    code, out = run(capsys, "algebra", "check", path)
    assert code == 1
    assert json.loads(out)["error"] == "NotAssociativeError"


def test_frobenius_show(z2_file, capsys):
    code, out = run(capsys, "frobenius", "show", z2_file, "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["counit"] == ["1", "0"]
    assert doc["special"] is True


def test_knowledgeable_command(m23_file, capsys):
    code, out = run(capsys, "knowledgeable", m23_file, "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["closed_dim"] == 2
    assert all(r["ok"] for r in doc["axioms"])


def test_eval_full_strip_identity(m23_file, tmp_path, capsys):
    cpath = str(tmp_path / "strip.json")
    assert main(["catalog", "complex", "strip", "1", "1", "-o", cpath]) == 0
    capsys.readouterr()
    code, out = run(capsys, "eval", "--algebra", m23_file, "--complex", cpath,
                    "--mode", "full", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["domain"] == [{"kind": "full", "dim": 13}]
    n = 13
    for i in range(n):
        for j in range(n):
            assert doc["matrix"][i][j] == ("1" if i == j else "0")


def test_eval_full_annulus_identity_on_split(z2_file, tmp_path, capsys):
    cpath = str(tmp_path / "ann.json")
    assert main(["catalog", "complex", "annulus", "1", "1", "-o", cpath]) == 0
    capsys.readouterr()
    code, out = run(capsys, "eval", "--algebra", z2_file, "--complex", cpath,
                    "--mode", "full", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["domain"] == [{"kind": "split", "dim": 2}]
    assert doc["matrix"] == [["1", "0"], ["0", "1"]]


def test_eval_full_annulus_matrix_algebra_split_is_one_dim(tmp_path, capsys):
    apath = str(tmp_path / "m2.json")
    assert main(["catalog", "algebra", "matsum", "2", "1", "rational", "-o", apath]) == 0
    cpath = str(tmp_path / "ann.json")
    assert main(["catalog", "complex", "annulus", "1", "1", "-o", cpath]) == 0
    capsys.readouterr()
    code, out = run(capsys, "eval", "--algebra", apath, "--complex", cpath,
                    "--mode", "full", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["matrix"] == [["1"]]  # identity on the 1-dim split image


def test_eval_closed_torus_scalar(z2_file, tmp_path, capsys):
    cpath = str(tmp_path / "torus.json")
    assert main(["catalog", "complex", "closed_surface", "1", "0", "-o", cpath]) == 0
    capsys.readouterr()
    code, out = run(capsys, "eval", "--algebra", z2_file, "--complex", cpath, "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["domain"] == [] and doc["codomain"] == []
    assert doc["matrix"] == [["2"]]


def test_surface_command_matches_oracles(m23_file, capsys):
    code, out = run(capsys, "surface", "--algebra", m23_file,
                    "--genus", "1", "--windows", "0", "--oracle", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["contracted"] == "2" == doc["closed_form"] == doc["genus_window_operator"]
    assert doc["match"] is True


def test_surface_genus2(z2_file, capsys):
    code, out = run(capsys, "surface", "--algebra", z2_file,
                    "--genus", "2", "--windows", "0", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["contracted"] == "8"


def test_fuzz_command_all_equal(z2_file, tmp_path, capsys):
    cpath = str(tmp_path / "strip.json")
    assert main(["catalog", "complex", "strip", "1", "1", "-o", cpath]) == 0
    capsys.readouterr()
    code, out = run(capsys, "fuzz", "--algebra", z2_file, "--complex", cpath,
                    "--moves", "10", "--trials", "4", "--seed", "3", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["all_equal"] is True and len(doc["trials"]) == 4


def test_fuzz_seed_determinism(z2_file, tmp_path, capsys):
    cpath = str(tmp_path / "open_mult.json")
    assert main(["catalog", "complex", "open_mult", "-o", cpath]) == 0
    capsys.readouterr()
    _, out1 = run(capsys, "fuzz", "--algebra", z2_file, "--complex", cpath,
                  "--moves", "8", "--trials", "3", "--seed", "5", "--json")
    _, out2 = run(capsys, "fuzz", "--algebra", z2_file, "--complex", cpath,
                  "--moves", "8", "--trials", "3", "--seed", "5", "--json")
    assert out1 == out2


def test_fuzz_corrupt_negative_control(z2_file, tmp_path, capsys):
    cpath = str(tmp_path / "strip.json")
    assert main(["catalog", "complex", "strip", "1", "1", "-o", cpath]) == 0
    capsys.readouterr()
    code, out = run(capsys, "fuzz", "--algebra", z2_file, "--complex", cpath,
                    "--moves", "12", "--trials", "4", "--seed", "0", "--corrupt", "--json")
    assert code == 1
    doc = json.loads(out)
    assert doc["all_equal"] is False


def test_catalog_unknown_name(capsys):
    code, out = run(capsys, "catalog", "complex", "nonsense")
    assert code == 1
    code, out = run(capsys, "catalog", "algebra", "nonsense")
    assert code == 1


def test_eval_invalid_complex_file(z2_file, tmp_path, capsys):
    doc = {"vertices": 5, "triangles": [[0, 1, 2], [1, 0, 3], [0, 1, 4]],
           "coloured_edges": [], "black_in": [], "black_out": []}
    path = write(tmp_path, "bad_complex.json", sio.dumps(doc))
    code, out = run(capsys, "eval", "--algebra", z2_file, "--complex", path)
    assert code == 1


def test_missing_file(capsys):
    code, out = run(capsys, "algebra", "check", "/nonexistent/path.json")
    assert code == 1
