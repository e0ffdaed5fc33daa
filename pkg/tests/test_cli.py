import json

import pytest

from mustrata.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def curve(tmp_path, capsys):
    path = tmp_path / "curve.json"
    assert main(["sample", "--mu", "1,1,4", "--n", "6", "--d", "3", "--seed", "7", "-o", str(path)]) == 0
    capsys.readouterr()
    return path


def test_strata_dot(capsys):
    code, out, _ = run(capsys, "strata", "--n", "9", "--d", "3", "--format", "dot")
    assert code == 0
    assert out.count("dim=") == 7 and out.count("->") == 7
    assert '"(2,3,4)" -> "(2,2,5)";' in out and '"(2,3,4)" -> "(1,4,4)";' in out


def test_strata_json_tables(capsys):
    _, out, _ = run(capsys, "strata", "--n", "6", "--d", "3")
    assert {tuple(x["mu"]): x["dim"] for x in json.loads(out)["nodes"]} == {
        (2, 2, 2): 28, (1, 2, 3): 27, (1, 1, 4): 24}
    _, out, _ = run(capsys, "strata", "--n", "6", "--d", "3", "--with-common-factor")
    assert [x["dim"] for x in json.loads(out)["nodes"]] == [28, 27, 25, 24, 23, 22, 19]


def test_strata_single(capsys):
    code, out, err = run(capsys, "strata", "--n", "6", "--d", "3", "--mu", "4,1,1", "--A", "2,2")
    assert code == 0 and "not ascending" in err
    data = json.loads(out)
    assert data["dim"] == 24 and data["substratumDim"] == 24
    assert data["substratumClosure"] == [[1, 3], [2, 2]]


def test_nonproper_codim(capsys):
    code, out, _ = run(capsys, "nonproper-codim", "--mu", "3,3,3", "--k", "3", "--n", "9", "--d", "3")
    assert code == 0 and json.loads(out)["codim"] == 20
    _, out, _ = run(capsys, "nonproper-codim", "--mu", "3,3,3", "--k", "3", "--n", "9", "--d", "3",
                    "--format", "text")
    assert out == "20\n"


def test_missing_curve(capsys):
    code, _, err = run(capsys, "mutype", "--curve", "missing.json")
    assert code == 1 and "missing.json" in err


def test_usage_errors(capsys):
    assert run(capsys, "strata", "--n", "6")[0] == 2
    assert run(capsys, "strata", "--n", "6", "--d", "3", "--format", "svg")[0] == 2
    assert run(capsys, "strata", "--n", "6", "--d", "3", "--mu", "1,x")[0] == 2
    assert run(capsys, "hilbert", "--mu", "1,1,4")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_domain_errors(capsys):
    code, _, err = run(capsys, "nonproper-codim", "--mu", "2,3,4", "--k", "2", "--n", "9", "--d", "3")
    assert code == 1 and "does not divide" in err
    code, _, err = run(capsys, "strata", "--n", "6", "--d", "3", "--mu", "3,3,3")
    assert code == 1


def test_curve_commands(curve, capsys):
    code, out, _ = run(capsys, "mutype", "--curve", str(curve))
    assert code == 0 and json.loads(out) == {"mu": [1, 1, 4], "c": 0}
    _, out, _ = run(capsys, "mubasis", "--curve", str(curve))
    assert json.loads(out)["columnDegrees"] == [1, 1, 4]
    _, out, _ = run(capsys, "hilbert", "--curve", str(curve))
    assert json.loads(out)["values"] == [1, 2, 3, 4, 5, 6, 3, 2, 1, 0]
    _, out, _ = run(capsys, "properness", "--curve", str(curve), "--seed", "3")
    assert json.loads(out)["genericDegree"] == 1
    _, out, _ = run(capsys, "ancestor", "--curve", str(curve))
    data = json.loads(out)
    assert data["tau"] == 2 and data["containmentVerified"] is True
    assert data["scrollDim"] == 2 and data["scrollDegree"] == 2
    assert set(data) >= {"generators", "tau", "scrollPartition", "scrollDim", "scrollDegree", "containmentVerified"}


def test_field_flag_mismatch(curve, capsys):
    code, _, err = run(capsys, "mutype", "--curve", str(curve), "--field", "Fp:101")
    assert code == 1 and "Fp:101" in err


def test_sample_is_reproducible(capsys):
    args = ["sample", "--mu", "2,2,2", "--n", "6", "--seed", "9", "--field", "Fp:1000003"]
    first = run(capsys, *args)
    assert first[0] == 0 and "attempts:" in first[2]
    assert run(capsys, *args)[1] == first[1]
    assert json.loads(first[1])["field"] == "Fp:1000003"


def test_sample_variants(capsys):
    _, out, _ = run(capsys, "sample", "--kpu", "2", "--n", "5", "--seed", "1")
    assert json.loads(out)["n"] == 5
    _, out, _ = run(capsys, "sample", "--mu", "1,1,1", "--k", "3", "--seed", "1", "--field", "Fp")
    assert json.loads(out)["n"] == 9


def test_env_field(capsys, monkeypatch):
    monkeypatch.setenv("MUSTRATA_FIELD", "Fp:65537")
    _, out, _ = run(capsys, "sample", "--mu", "1,2,3", "--n", "6")
    assert json.loads(out)["field"] == "Fp:65537"
    monkeypatch.setenv("MUSTRATA_FIELD", "Fp:8")
    code, _, err = run(capsys, "sample", "--mu", "1,2,3", "--n", "6")
    assert code == 1 and "MUSTRATA_FIELD" in err


def test_hilbert_from_mu(capsys):
    _, out, _ = run(capsys, "hilbert", "--mu", "1,1,4", "--n", "6", "--d", "3")
    assert json.loads(out)["values"] == [1, 2, 3, 4, 5, 6, 3, 2, 1, 0]


def test_paper_check_table(capsys):
    code, out, _ = run(capsys, "paper-check")
    lines = out.splitlines()
    rows = [x for x in lines if x.startswith("[")]
    assert len(rows) == 10
    assert (code == 0) == all(x.startswith("[PASS]") for x in rows)
    assert lines[-1].endswith("passed")
