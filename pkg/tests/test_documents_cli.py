import json

import pytest

from kirlie.catalog import catalog, catalog_list
from kirlie.cli import main
from kirlie.documents import (
    DocumentError,
    JacobiError,
    dumps_algebra,
    loads_algebra,
    loads_omega,
    loads_psi,
    omega_to_obj,
    psi_to_obj,
)
from kirlie.exactlin import GF, QQ
from kirlie.extend import PsiMap
from kirlie.liecore import center

BAD_DIAGONAL = """{
  "field": "Q",
  "dim": 3,
  "brackets": [
    {"i": 2, "j": 1, "terms": [[3, "1"]]},
    {"i": 3, "j": 3, "terms": [[1, "1"]]}
  ]
}"""


@pytest.mark.parametrize("name", catalog_list())
@pytest.mark.parametrize("F", [QQ, GF(7)])
def test_round_trip(name, F):
    g = catalog(name, F)
    text = dumps_algebra(g)
    h = loads_algebra(text)
    assert h.brackets == g.brackets and h.labels == g.labels and h.field == F
    assert dumps_algebra(h) == text


def test_error_carries_line():
    with pytest.raises(DocumentError) as err:
        loads_algebra(BAD_DIAGONAL)
    assert err.value.line == 6 and "itself" in str(err.value)


def test_empty_brackets_are_abelian():
    g = loads_algebra('{"field": "Q", "dim": 3, "brackets": []}')
    assert center(g) == g.whole


def test_jacobi_failure():
    doc = {
        "field": "Q",
        "dim": 3,
        "brackets": [
            {"i": 3, "j": 1, "terms": [[1, "1"]]},
            {"i": 3, "j": 2, "terms": [[2, "1"]]},
            {"i": 2, "j": 1, "terms": [[1, "1"]]},
        ],
    }
    with pytest.raises(JacobiError) as err:
        loads_algebra(json.dumps(doc))
    assert err.value.triple == (1, 2, 3)
    assert loads_algebra(json.dumps(doc), check=False).dim == 3


@pytest.mark.parametrize(
    "text",
    [
        '{"field": "Fp:2", "dim": 1, "brackets": []}',
        '{"field": "Fp:9", "dim": 1, "brackets": []}',
        '{"field": "R", "dim": 1, "brackets": []}',
        '{"field": "Q", "dim": 2, "brackets": [{"i": 2, "j": 1, "terms": [[1, 0.5]]}]}',
        '{"field": "Q", "dim": 2, "brackets": [{"i": 1, "j": 2, "terms": [[1, "1"]]}]}',
        '{"field": "Q", "dim": 2, "brackets": [{"i": 2, "j": 1, "terms": [[3, "1"]]}]}',
        '{"field": "Q", "dim": 2,',
    ],
)
def test_rejected_documents(text):
    with pytest.raises(DocumentError):
        loads_algebra(text)


def test_omega_and_psi_documents():
    omega = loads_omega('{"omega": [[2, 1, "1/2"]]}', 2, QQ)
    assert omega[1][0] == QQ("1/2") and omega[0][1] == -QQ("1/2")
    assert loads_omega(json.dumps(omega_to_obj(omega, QQ)), 2, QQ) == omega
    psi = PsiMap.from_values(GF(5), 2, {(1, 0): (1, 3)})
    assert loads_psi(json.dumps(psi_to_obj(psi))) == psi
    with pytest.raises(DocumentError):
        loads_omega('{"omega": [[1, 2, "1"]]}', 2, QQ)


# -- command line ----------------------------------------------------------


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cli_ok_and_input_errors(tmp_path, capsys):
    code, out, _ = run(capsys, "catalog", "--list")
    assert code == 0 and "n5n3" in out.split()
    bad = tmp_path / "bad.json"
    bad.write_text(BAD_DIAGONAL)
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 2 and "line 6" in err
    code, _, err = run(capsys, "analyze", str(tmp_path / "missing.json"))
    assert code == 2
    code, _, _ = run(capsys, "analyze", "-c", "nosuch")
    assert code == 2
    code, _, _ = run(capsys, "coadjoint", "-c", "n4n1", "--xi", "1,0")
    assert code == 2


def test_cli_analyze_is_deterministic(capsys):
    first = run(capsys, "analyze", "-c", "n6n1", "--format", "json")
    second = run(capsys, "analyze", "-c", "n6n1", "--format", "json")
    assert first == second and first[0] == 0


def test_cli_analyze_n5n3(tmp_path, capsys):
    path = tmp_path / "n5n3.json"
    path.write_text(dumps_algebra(catalog("n5n3")))
    code, out, _ = run(capsys, "analyze", str(path), "--format", "json")
    rep = json.loads(out)
    assert code == 0
    assert rep["type"]["label"] == "TYPE_A_PLUS" and rep["kirillov"]["m"] == 2
    assert rep["flatness"]["flat"] is True
    assert rep["flatness"]["polarization"] == ["X1", "X2", "X3"]


def test_cli_analyze_warnings(capsys):
    _, out, _ = run(capsys, "analyze", "-c", "abelian4", "--format", "json")
    rep = json.loads(out)
    assert "center not 1-dimensional" in rep["warnings"] and rep["kirillov"] is None
    _, out, _ = run(capsys, "analyze", "-c", "n6n1", "--format", "json")
    rep = json.loads(out)
    assert rep["type"]["label"] == "NOT_TYPE_A"
    assert rep["decomposition"]["stage1"]["g1"] == ["X1", "X2", "X3"]


def test_cli_extend_round_trip(tmp_path, capsys):
    omega = tmp_path / "omega.json"
    omega.write_text('{"omega": [[2, 1, "1"]]}')
    code, out, _ = run(capsys, "extend", "-c", "abelian2", "--cocycle", str(omega))
    assert code == 0 and loads_algebra(out).dim == 3
    omega.write_text('{"omega": [[2, 1, "1"]]}')
    code, _, err = run(capsys, "extend", "-c", "n4n1", "--cocycle", str(omega))
    assert code == 2 and "triple" in err
    code, out, _ = run(capsys, "extend", "-c", "n5n3")
    assert code == 0 and "omega" in json.loads(out)


def test_cli_psi(tmp_path, capsys):
    psi = tmp_path / "psi.json"
    psi.write_text(json.dumps(psi_to_obj(PsiMap.from_values(GF(5), 2, {(1, 0): (1, 2)}))))
    mat = tmp_path / "g.json"
    mat.write_text('{"field": "Fp:5", "rows": [["2", "0"], ["0", "1"]]}')
    code, out, _ = run(capsys, "psi", str(psi))
    assert code == 0 and loads_algebra(out).dim == 5
    code, out, _ = run(capsys, "psi", str(psi), "--action", str(mat), "--format", "json")
    assert code == 0 and json.loads(out)["n"] == 2


def test_cli_coadjoint(capsys):
    code, out, _ = run(capsys, "coadjoint", "-c", "n4n1", "--xi", "1,0,0,0", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["stabilizer"] == ["X1", "X3"] and rep["orbit_dim"] == 2
