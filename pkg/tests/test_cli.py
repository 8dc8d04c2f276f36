import io
import json

import pytest

from adelattice import cli
from adelattice.chevalley import ChevalleyAlgebra
from adelattice.picard import SurfaceLattice, intersect
from adelattice.roots import e8_affine_configuration, standard_root_system


def run(argv):
    buf = io.StringIO()
    code = cli.main(argv, out=buf)
    return code, buf.getvalue()


def test_roots_enumerate_type():
    code, out = run(["roots", "enumerate", "--type", "E6"])
    assert code == 0
    data = json.loads(out)
    assert len(data["roots"]) == 72
    assert len(data["base"]) == 6


def test_roots_enumerate_affine():
    code, out = run(["roots", "enumerate", "--n", "9", "--cap", "3"])
    assert code == 0
    data = json.loads(out)
    assert data["cap"] == 3
    assert data["l"] == [0] * 9 + [1]
    for entry in data["real_roots"]:
        assert abs(entry["class"][0]) <= 3


def test_roots_enumerate_requires_cap():
    code, _ = run(["roots", "enumerate", "--n", "9"])
    assert code == 1


def test_diagram_classify(tmp_path):
    cfg = e8_affine_configuration()
    matrix = [[intersect(a, b) for b in cfg.nodes] for a in cfg.nodes]
    path = tmp_path / "m.json"
    path.write_text(json.dumps(matrix))
    code, out = run(["diagram", "classify", "--matrix", str(path)])
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "affine"
    assert data["components"][0]["marks"] == [1, 2, 3, 4, 5, 6, 4, 2, 3]


def test_diagram_classify_roundtrip_from_enumerate(tmp_path):
    code, out = run(["roots", "enumerate", "--type", "E7"])
    cartan = json.loads(out)["cartan"]
    matrix = [[-v for v in row] for row in cartan]
    path = tmp_path / "e7.json"
    path.write_text(json.dumps(matrix))
    code, out = run(["diagram", "classify", "--matrix", str(path)])
    assert code == 0
    assert json.loads(out)["components"][0]["type"] == "E7"


def test_diagram_classify_rejects_tangency(tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps([[-2, 2], [2, -2]]))
    code, _ = run(["diagram", "classify", "--matrix", str(path)])
    assert code == 1


def test_chevalley_table_json_and_tsv(tmp_path):
    code, out = run(["chevalley", "table", "--type", "A2"])
    assert code == 0
    data = json.loads(out)
    assert data["dim"] == 8
    export = tmp_path / "table.tsv"
    code, _ = run(["chevalley", "table", "--type", "A2", "--format", "tsv",
                   "--export", str(export)])
    assert code == 0
    lines = export.read_text().strip().split("\n")
    assert all(len(l.split("\t")) == 3 for l in lines)


def test_chevalley_verify_suites():
    for suite in ("jacobi", "killing"):
        code, out = run(["chevalley", "verify", "--type", "A2", "--suite", suite])
        assert code == 0
        assert json.loads(out)["passed"]
    code, out = run(["chevalley", "verify", "--type", "A2", "--suite", "extroot",
                     "--affine-levels", "2", "--samples", str(10**9)])
    assert code == 0
    data = json.loads(out)
    assert data["passed"]
    assert len(data["reports"]) == 6  # three mark-1 nodes, two modes each


def test_chevalley_verify_seed_echoed():
    code, out = run(["chevalley", "verify", "--type", "A1", "--suite", "jacobi",
                     "--seed", "31337"])
    assert code == 0
    assert json.loads(out)["seed"] == 31337


def test_verify_failure_exits_two(monkeypatch):
    def corrupted(type_name):
        alg = ChevalleyAlgebra(standard_root_system(type_name))
        for i in range(alg.dim):
            for j, terms in alg.table[i].items():
                if len(terms) == 1 and alg.labels[terms[0][0]][0] == "x":
                    k, c = terms[0]
                    alg.table[i][j] = ((k, -c),)
                    return alg
        raise AssertionError("no root-root entry found")

    monkeypatch.setattr(cli, "_finite_algebra", corrupted)
    code, out = run(["chevalley", "verify", "--type", "A2", "--suite", "jacobi"])
    assert code == 2
    data = json.loads(out)
    assert not data["passed"]
    assert data["witness"]


def test_curves_negclasses():
    code, out = run(["curves", "negclasses", "--m", "10"])
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 0 and data["classes"] == []
    code, out = run(["curves", "negclasses", "--m", "3"])
    assert json.loads(out)["count"] == 423
    code, _ = run(["curves", "negclasses", "--m", "2"])
    assert code == 1
    code, out = run(["curves", "negclasses", "--m", "1", "--n", "8", "--cap", "1"])
    assert json.loads(out)["count"] == 36


def test_curves_perp_l(tmp_path):
    lat = SurfaceLattice(9)
    base = [lat.h - lat.l(1) - lat.l(2) - lat.l(3)] + [
        lat.l(i) - lat.l(i + 1) for i in range(1, 8)
    ]
    path = tmp_path / "base.json"
    path.write_text(json.dumps([list(b.coeffs) for b in base]))
    code, out = run(["curves", "perp-l", "--base", str(path)])
    assert code == 0
    assert json.loads(out) == [0, 0, 0, 0, 0, 0, 0, 0, 0, 1]


def test_perp_l_roundtrip_from_affine_enumeration(tmp_path):
    code, out = run(["roots", "enumerate", "--n", "9", "--cap", "2"])
    data = json.loads(out)
    path = tmp_path / "base.json"
    path.write_text(json.dumps(data["finite_base"]))
    code, out = run(["curves", "perp-l", "--base", str(path)])
    assert code == 0
    assert json.loads(out) == data["l"]


def test_deform_emit():
    code, out = run(["deform", "emit", "--type", "A2", "--loop", "1"])
    assert code == 0
    data = json.loads(out)
    assert len(data["unknowns"]) == 11
    assert data["order"][0].startswith("phi[")


def test_genpos_check(tmp_path):
    pts = [[-5, 0, 1], [6, -4, 1], [-8, -7, 1], [8, 3, 1], [-8, -2, 1],
           [2, -1, 1], [5, 4, 1], [-5, -8, 1], ["1/2", 2, 1]]
    path = tmp_path / "p.json"
    path.write_text(json.dumps(pts))
    code, out = run(["genpos", "check", "--points", str(path)])
    assert code == 0
    assert json.loads(out)["verdict"] is True


def test_genpos_rejects_bad_file(tmp_path):
    path = tmp_path / "p.json"
    path.write_text("not json")
    code, _ = run(["genpos", "check", "--points", str(path)])
    assert code == 1
    path.write_text(json.dumps([[1, 0, 0]] * 4))
    code, _ = run(["genpos", "check", "--points", str(path)])
    assert code == 1


def test_usage_error_exit_code():
    code, _ = run(["roots", "enumerate"])
    assert code == 1
    code, _ = run(["nonsense"])
    assert code == 1


GOLDEN_INVOCATIONS = [
    ["roots", "enumerate", "--type", "E6"],
    ["roots", "enumerate", "--n", "9", "--cap", "2"],
    ["curves", "negclasses", "--m", "3"],
    ["chevalley", "table", "--type", "A2"],
    ["deform", "emit", "--type", "A2", "--loop", "2"],
]


@pytest.mark.parametrize("argv", GOLDEN_INVOCATIONS, ids=lambda a: " ".join(a))
def test_byte_identical_reruns(argv):
    code1, out1 = run(argv)
    code2, out2 = run(argv)
    assert code1 == code2 == 0
    assert out1 == out2
    json.loads(out1)  # must be valid JSON


def test_export_honors_output_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("ADELATTICE_OUT", str(tmp_path))
    code, _ = run(["chevalley", "table", "--type", "A1", "--export", "t.json"])
    assert code == 0
    assert (tmp_path / "t.json").exists()
