import json

import pytest

from brauer.cli import main
from brauer.diagrams import element_from_json, jucys_murphy, element_to_json


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_relations(capsys):
    code, out = run(capsys, "relations", "--n", "3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["all_ok"] and data["checked"] == 13


def test_mult(capsys):
    code, out = run(capsys, "mult", "--n", "2", "--word", "sbar1 sbar1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data) == 1 and data[0]["coeff"] == "N"


def test_mult_rejects_non_generators(capsys):
    with pytest.raises(SystemExit):
        main(["mult", "--n", "2", "--word", "y1"])


def test_shapes(capsys):
    code, out = run(capsys, "shapes", "--n", "3", "--N", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data == [{"diagram": [1], "paths": 3}, {"diagram": [3], "paths": 1}]


def test_paths(capsys):
    code, out = run(capsys, "paths", "--lambda", "1", "--n", "3", "--N", "3", "--format", "json")
    assert code == 0
    assert len(json.loads(out)) == 3


def test_central_example(capsys):
    # Z coefficients are N((N-1)/2)^i at mu = empty
    code, out = run(capsys, "central", "--mu", "", "--N", "3", "--order", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["Z"] == ["3", "3", "3"]
    code, out = run(capsys, "central", "--mu", "0", "--N", "5", "--order", "2", "--format", "json")
    assert json.loads(out)["Z"] == ["5", "10", "20"]


def test_rep(capsys):
    code, out = run(capsys, "rep", "--lambda", "", "--n", "2", "--N", "3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["matrices"]["sbar1"] == [[[[1, "3"]]]]
    assert data["matrices"]["s1"] == [[[[1, "1"]]]]


def test_rep_rational_N(capsys):
    code, out = run(capsys, "rep", "--lambda", "1", "--n", "3", "--N", "7/2", "--format", "json")
    assert code == 0
    assert json.loads(out)["N"] == "7/2"


def test_affine_nf(capsys):
    code, out = run(
        capsys, "affine", "nf", "--n", "2", "--word", "sbar1 y1 sbar1", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data[0]["coeff"] == "1/2*N^2 - 1/2*N"


def test_oracle(capsys):
    code, out = run(
        capsys,
        "oracle",
        "--n",
        "2",
        "--N",
        "3",
        "--suite",
        "rank",
        "--format",
        "json",
    )
    assert code == 0
    assert json.loads(out)[0]["ok"]


def test_bad_partition_is_usage_error(capsys):
    code = main(["paths", "--lambda", "1,2", "--n", "3", "--N", "3"])
    assert code == 2
    assert "error" in capsys.readouterr().err


def test_unknown_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_element_json_roundtrip_through_cli_format():
    e = jucys_murphy(2, 2)
    assert element_from_json(json.loads(json.dumps(element_to_json(e))), 2) == e
