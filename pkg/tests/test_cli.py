import json

import pytest

from fanoqh import cli, verify

from golden_mutations import mutated


def run(capsys, *argv):
    code = cli.run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gw_command(capsys):
    assert run(capsys, "gw", "--a", "c1", "--b", "c2^2", "--c", "c2^2", "--n", "1") == (0, "24\n", "")
    code, out, _ = run(capsys, "gw", "--a", "c1", "--b", "line", "--c", "pt", "--n", "2")
    assert (code, out) == (0, "2\n")


def test_gw_accepts_coordinates(capsys):
    coords = ",".join(["0"] * 8 + ["1"] + ["0"] * 4)
    code, out, _ = run(capsys, "gw", "--a", "c1", "--b", coords, "--c", "c2^2", "--n", "1")
    assert (code, out) == (0, "24\n")


@pytest.mark.parametrize(
    "argv",
    [
        ["gw", "--a", "c9", "--b", "c1", "--c", "c1", "--n", "1"],
        ["gw", "--a", "1,2", "--b", "c1", "--c", "c1", "--n", "1"],
        ["gw", "--a", "c1", "--b", "c1", "--c", "c1", "--n", "-1"],
        ["gw", "--a", "c1+c2", "--b", "c1", "--c", "c1", "--n", "1"],
        ["eigen", "--q", "x"],
        ["eigen", "--q", "1/0"],
        ["eigen", "--tol", "0"],
        ["quantize", "--class", "nope"],
        ["verify", "--golden", "/nonexistent/golden.json"],
        ["frobnicate"],
        [],
    ],
)
def test_bad_input_exits_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_eigen_json(capsys):
    code, out, _ = run(capsys, "eigen", "--q", "1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    roots = data["roots"]
    assert sum(r["mult"] for r in roots) == 13
    assert sorted(r["mult"] for r in roots) == [1] * 7 + [2] * 3
    assert data["semisimple"] is True


def test_eigen_text_and_svg(capsys, tmp_path):
    code, out, _ = run(capsys, "eigen", "--format", "text")
    assert code == 0 and "generalized 0-eigenspace dimension: 1" in out
    path = tmp_path / "roots.svg"
    code, out, _ = run(capsys, "eigen", "--format", "svg", "--out", str(path))
    assert code == 0 and out == ""
    svg = path.read_text()
    assert svg.count("<circle") == 7 and svg.count("<rect") == 4  # background plus 3 squares


def test_verify_pristine(capsys):
    code, out, _ = run(capsys, "verify")
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == len(verify.CHECKS) + 1
    assert all(line.startswith("PASS ") for line in lines[:-1])
    assert lines[-1] == f"{len(verify.CHECKS)}/{len(verify.CHECKS)} checks passed"


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--format", "json")
    data = json.loads(out)
    assert code == 0 and [d["check"] for d in data] == list(verify.CHECKS)


def test_verify_fault_injection_57(capsys, tmp_path):
    golden = verify.load_golden()
    assert golden["intersection_numbers"][0] == {"monomial": "c1^6", "value": 57}
    bad = mutated(golden, ("intersection_numbers", 0, "value"), 56)
    path = tmp_path / "golden.json"
    path.write_text(json.dumps(bad))
    code, out, _ = run(capsys, "verify", "--golden", str(path))
    assert code == 1
    assert "FAIL intersection_numbers" in out
    assert "failed: intersection_numbers" in out.splitlines()[-1]


def test_verify_reports_malformed_entries_as_failures(capsys, tmp_path):
    bad = mutated(verify.load_golden(), ("quantum_products", 0, 0), "c7")
    path = tmp_path / "golden.json"
    path.write_text(json.dumps(bad))
    code, out, _ = run(capsys, "verify", "--golden", str(path))
    assert code == 1 and "FAIL quantum_products" in out


def test_table_outputs(capsys, tmp_path):
    code, out, _ = run(capsys, "table", "--kind", "classical", "--format", "csv")
    rows = out.splitlines()
    assert code == 0 and len(rows) == 1 + 169
    assert rows[0].split(",")[:3] == ["left", "right", "1"]
    code, out, _ = run(capsys, "table", "--kind", "quantum", "--format", "json")
    data = json.loads(out)
    assert data["kind"] == "quantum" and len(data["products"]) == 169
    c1_pt = next(p for p in data["products"] if p["left"] == "c1" and p["right"] == "pt")
    assert c1_pt["coords"][1] == ["0", "0", "2"]  # 2 q^2 c1
    path = tmp_path / "t.csv"
    assert run(capsys, "table", "--out", str(path))[0] == 0
    assert path.read_text().startswith("left,right,")


def test_chevalley_command(capsys):
    code, out, _ = run(capsys, "chevalley")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 11
    assert "c1 * pt = 3 q h2 + 2 q^2 c1" in lines
    assert "c1 * f1 = h1 + 2 h2 + q c1" in lines
    code, out, _ = run(capsys, "chevalley", "--format", "json")
    assert json.loads(out)["e2"][-1] == ["3", 1, "[Y]"]


def test_quantize_command(capsys):
    code, out, _ = run(capsys, "quantize", "--class", "c1^3")
    assert code == 0 and out.strip() == "1 * c1^3 + -3 * q"
    code, out, _ = run(capsys, "quantize", "--class", "line")
    assert code == 0 and "q" in out


def test_poset_command(capsys):
    code, out, _ = run(capsys, "poset")
    assert code == 0 and out.startswith("dim 6: m\n") and "c1 diagram" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["eigen", "--q", "1", "--format", "json"],
        ["eigen", "--q", "1", "--format", "svg"],
        ["table", "--kind", "quantum", "--format", "csv"],
        ["chevalley"],
        ["verify"],
    ],
)
def test_output_is_byte_stable(capsys, argv):
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
