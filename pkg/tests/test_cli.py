import json
import subprocess
import sys

import pytest

from genericity.cli import main, run

from conftest import FIXTURES


def doc_of(argv):
    text, code = run(argv)
    return json.loads(text), code


def test_classify_s3_family():
    doc, code = doc_of(["classify", "Y^3+T*Y+T"])
    assert code == 0 and doc["schema"] == 1
    assert (doc["verdict"], doc["case"], doc["group"], doc["order"]) == ("Generic", "c", "S3", 6)
    assert sorted(doc["e"]) == [2, 2, 3] and doc["genus"] == 0 and doc["regular"] is True
    pts = doc["branch_points"]
    assert sorted(b["point"]["value"] for b in pts if "value" in b["point"]) == ["-27/4", "0"]
    assert pts[-1]["point"] == {"infinity": True}
    for b in pts[:-1]:
        assert {"min_poly", "rectangle", "index"} <= set(b["point"])
    for key in ("group", "order", "r", "e", "genus", "regular", "branch_points", "verdict", "case",
                "failures", "obstructions", "certified"):
        assert key in doc


def test_classify_kummer_quartic():
    doc, code = doc_of(["classify", "Y^4-T"])
    assert code == 0
    assert doc["verdict"] == "NotGeneric" and doc["case"] is None
    assert "a.cyclic_even_order" in doc["failures"]
    assert "NotParametricOver_KVU_for_alg_closed_K" in doc["obstructions"]


def test_approx_is_opt_in():
    plain, _ = doc_of(["classify", "Y^3 - T*Y^2 + (T - 3)*Y + 1"])
    assert all("approx" not in b["point"] for b in plain["branch_points"])
    approx, _ = doc_of(["classify", "Y^3 - T*Y^2 + (T - 3)*Y + 1", "--approx", "12"])
    values = sorted(b["point"]["approx"] for b in approx["branch_points"])
    assert values[0].startswith("(1.5 - 2.59807621135") or values[0].startswith("(1.5 + 2.59807621135")


def test_classify_over_field_flag():
    doc, _ = doc_of(["classify", "Y^4 - T", "--field", "Q(i)"])
    assert (doc["verdict"], doc["case"], doc["field"]) == ("Generic", "a", "Q(i)")


def test_batch_classify(fixture_file):
    doc, code = doc_of(["classify", "--file", str(fixture_file)])
    assert code == 0
    got = [(r["verdict"], r["case"]) for r in doc["results"]]
    assert got == [(v, c) for _, v, c in FIXTURES]


def test_batch_embeds_errors(tmp_path):
    f = tmp_path / "mixed.txt"
    f.write_text("Y^2 - T\n\n# comment\n2T\nY^2 - T^2\n", encoding="utf-8")
    doc, code = doc_of(["classify", "--file", str(f)])
    assert code == 3
    assert doc["results"][0]["verdict"] == "Generic"
    assert doc["results"][1]["error"]["type"] == "SyntaxError"
    assert doc["results"][2]["error"]["type"] == "Reducible"


def test_byte_stable_output():
    outs = {run(["classify", "Y^4 - T*Y - T"])[0] for _ in range(3)}
    assert len(outs) == 1


@pytest.mark.parametrize("argv,code,error", [
    (["classify", "2T"], 3, "SyntaxError"),
    (["classify", "Y^2 - Z"], 3, "UnknownVariable"),
    (["classify", "Y^2 - (T"], 3, "SyntaxError"),
    (["classify", "Y^2 - T^2"], 2, "Reducible"),
    (["classify", "2*Y^2 - T"], 2, "NotMonic"),
    (["classify", "Y^9 - T"], 2, "DegreeTooLarge"),
    (["classify", "Y^2 - T", "--field", "Q(j)"], 3, "SyntaxError"),
    (["classify", "--file", "/nonexistent/fixtures.txt"], 3, "InputError"),
    (["construct", "C4"], 2, "CyclotomicObstruction"),
    (["construct", "D5"], 2, "CyclotomicObstruction"),
    (["construct", "D4"], 2, "InadmissibleGroup"),
    (["construct", "C5", "--field", "Q(sqrt(5))"], 2, "Unsupported"),
    (["galois", "Y^3+T*Y+T", "--at=-27/4"], 2, "BranchPoint"),
    (["moebius", "apply", "Y^2-T", "--map", "1,2,2,4"], 2, "Degenerate"),
    (["schinzel", "--m", "7"], 2, "UnsupportedM"),
    (["schinzel", "--twist", "12"], 2, "NotSquarefree"),
    (["schinzel", "--curve", "x^2+1"], 2, "WrongDegree"),
])
def test_exit_codes(argv, code, error):
    doc, got = doc_of(argv)
    assert got == code
    assert doc["error"]["type"] == error


def test_usage_errors_exit_3(capsys):
    assert main(["frobnicate"]) == 3
    assert main(["classify", "Y^2-T", "--height", "3"]) == 3
    capsys.readouterr()


def test_parse_verb_round_trip():
    doc, _ = doc_of(["parse", "Y^3 - T*Y^2 + (T-3)*Y + 1"])
    assert doc["rendered"] == "Y^3 - T*Y^2 + T*Y - 3*Y + 1"
    again, _ = doc_of(["parse", doc["rendered"]])
    assert again["rendered"] == doc["rendered"]


def test_invariants_verb():
    doc, code = doc_of(["invariants", "Y^2 - (T^3 - T^2 - 7*T + 41/4)"])
    assert code == 0 and doc["r"] == 4 and doc["genus"] == 1


def test_galois_verb():
    doc, _ = doc_of(["galois", "Y^3+T*Y+T", "--at", "1"])
    assert doc["group"]["name"] == "S3"
    assert doc["specialization"]["defining_poly"] == "x^6 + 6*x^4 + 9*x^2 + 31"
    inf, _ = doc_of(["galois", "Y^3 - T*Y^2 + (T - 3)*Y + 1", "--at", "inf"])
    assert inf["specialization"]["group"]["name"] == "C1"


def test_construct_verb():
    doc, code = doc_of(["construct", "C3", "--check"])
    assert code == 0 and doc["polynomial"] == "Y^3 - T*Y^2 + T*Y - 3*Y + 1"
    assert doc["verdict"] == "Generic" and doc["case"] == "b"


def test_solve_verb():
    doc, _ = doc_of(["solve", "Y^3 - T*Y^2 + (T - 3)*Y + 1", "--target", "x^3 - 3*x - 1"])
    assert doc["t0"] == "0" and doc["exhausted"] is False
    none, code = doc_of(["solve", "Y^2 - T", "--target", "x^2 - 5", "--height", "3"])
    assert code == 0 and none["t0"] is None and none["exhausted"] is True


def test_moebius_verbs():
    doc, _ = doc_of(["moebius", "between", "0,inf", "1,inf"])
    assert doc["moebius"]["map"] == "T + 1"
    doc, _ = doc_of(["moebius", "between", "T^2+1", "0,inf"])
    assert doc["moebius"] is None
    doc, _ = doc_of(["moebius", "apply", "Y^2-T", "--map", "1,1,0,1"])
    assert doc["result"] == "Y^2 - T - 1"


def test_schinzel_verb():
    doc, _ = doc_of(["schinzel", "--m", "11", "--d-range", "30"])
    passing = [r["d"] for r in doc["lawful_evil"] if r["verdict"] == "passes"]
    assert passing == [1, 3, 5, 14, 15, 23, 26]
    doc, _ = doc_of(["schinzel", "--curve", "x^3 - x^2 - 7*x + 41/4", "--witness", "1"])
    assert doc["conductor"] == 121 and doc["witness"] is not None


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "genericity.cli", "classify", "Y^2 - T"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["case"] == "a"
    bad = subprocess.run([sys.executable, "-m", "genericity.cli", "classify", "2T"],
                         capture_output=True, text=True, check=False)
    assert bad.returncode == 3
