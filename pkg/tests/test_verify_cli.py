"""The verification suites, report formats, cache, and CLI surface."""

import json
import subprocess
import sys

import pytest

from descpoly.cli import main
from descpoly.families import derangement_poly, separable_poly
from descpoly.polynomials import IntPolynomial
from descpoly.verify import (
    DISCREPANCY,
    FAIL,
    PASS,
    PolyCache,
    tables_suite,
    verify_suite,
)


def run_cli(*argv, capsys=None):
    code = main(list(argv))
    return code


def test_tables_suite_passes_with_one_discrepancy():
    report = tables_suite()
    counts = report.counts()
    assert report.passed
    assert counts[FAIL] == 0
    assert counts[DISCREPANCY] == 1
    flagged = [r for r in report.records if r.status == DISCREPANCY]
    assert flagged[0].id == "tables.D.7.t2"


def test_verify_suite_dispatch_and_unknown():
    report = verify_suite("conjectures", 12)
    assert report.passed and report.suite == "conjectures"
    with pytest.raises(KeyError):
        verify_suite("nonsense")


def test_report_json_deterministic_and_time_free():
    a = verify_suite("tables").to_json_obj()
    b = verify_suite("tables").to_json_obj()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    assert "wall" not in json.dumps(a)


def test_report_csv_has_one_row_per_check():
    report = verify_suite("tables")
    lines = report.to_csv().splitlines()
    assert len(lines) == len(report.records) + 1
    assert lines[0] == "id,subject,status,expected,actual"


def test_cache_roundtrip(tmp_path):
    cache = PolyCache(tmp_path)
    p = cache.get("D", 7)
    assert p == derangement_poly(7)
    path = cache.path("D", 7)
    assert path.exists()
    data = json.loads(path.read_text())
    assert data["format_version"] == 1 and data["coeffs"] == [0, 32, 392, 896, 480, 54]
    # a second read comes from disk and must agree with a fresh computation
    again = PolyCache(tmp_path).get("D", 7)
    assert again == derangement_poly(7)
    for family in PolyCache.FAMILIES:
        for n in (1, 4, 6):
            assert PolyCache(tmp_path).get(family, n) == PolyCache.FAMILIES[family](n)


def test_cache_rejects_unknown_family(tmp_path):
    with pytest.raises(KeyError):
        PolyCache(tmp_path).get("Z", 3)


# ---------------------------------------------------------------------------
# CLI


def test_cli_sweep(capsys):
    assert main(["sweep", "9 8 4 1 3 2 7 5 6"]) == 0
    assert capsys.readouterr().out.strip() == "((1-1)-((1-(1+(1-1)))+(1-(1+1))))"
    assert main(["sweep", "2413"]) == 1
    out = capsys.readouterr().out
    assert "NotSeparable" in out and "2413" in out


def test_cli_sweep_json(capsys):
    assert main(["--format", "json", "sweep", "231"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data == {"separable": True, "word": "((1+1)-1)"}


def test_cli_tree(capsys):
    assert main(["tree", "984132756"]) == 0
    out = capsys.readouterr().out
    assert "(- (- _ _) (+ (- _ (+ _ (- _ _))) (- _ (+ _ _))))" in out
    assert "chains: 3 (odd 2, even 1)" in out


def test_cli_poly(capsys):
    assert main(["poly", "D", "6"]) == 0
    assert capsys.readouterr().out.strip() == "16t+104t^2+120t^3+24t^4+t^5"
    assert main(["poly", "S", "4", "--method", "enum"]) == 0
    assert capsys.readouterr().out.strip() == "1+10t+10t^2+t^3"
    assert main(["poly", "Gamma", "6"]) == 0
    assert capsys.readouterr().out.strip() == "1+30x+61x^2"
    assert main(["poly", "Dtilde", "4"]) == 0
    assert capsys.readouterr().out.strip() == "1+7t+7t^2"


def test_cli_poly_resource_cap(capsys):
    assert main(["poly", "S", "12", "--method", "enum"]) == 3


def test_cli_poly_cache(tmp_path, capsys):
    assert main(["--cache-dir", str(tmp_path), "poly", "A", "5"]) == 0
    assert capsys.readouterr().out.strip() == "1+26t+66t^2+26t^3+t^4"
    assert (tmp_path / "A_5.json").exists()


def test_cli_gamma(capsys):
    assert main(["gamma", "S", "5"]) == 0
    assert capsys.readouterr().out.strip() == "gamma_0=1 gamma_1=16 gamma_2=10"
    assert main(["gamma", "N", "4"]) == 0
    assert capsys.readouterr().out.strip() == "gamma_0=1 gamma_1=3"


def test_cli_rc_index(capsys):
    assert main(["rc-index", "4"]) == 0
    assert capsys.readouterr().out.strip() == "c_1^3 + c_1c_2 + 2c_2c_1 + c_3"
    assert main(["rc-index", "4", "--eval", "2"]) == 0
    assert capsys.readouterr().out.strip() == "22"
    assert main(["rc-index", "4", "--ab"]) == 0
    assert capsys.readouterr().out.strip() == "1+10t+10t^2+t^3"


def test_cli_bij(tmp_path, capsys):
    tree_file = tmp_path / "tree.txt"
    tree_file.write_text("(- (+ _ _) _)\n")
    assert main(["bij", "psi", "--tree", str(tree_file)]) == 0
    assert capsys.readouterr().out.strip() == "(- _ (+ _ _))"
    back = tmp_path / "back.txt"
    back.write_text("(- _ (+ _ _))")
    assert main(["bij", "phi", "--tree", str(back)]) == 0
    assert capsys.readouterr().out.strip() == "(- (+ _ _) _)"
    # JSON input form
    jf = tmp_path / "tree.json"
    jf.write_text(json.dumps({"label": "-", "left": {"label": "+", "left": None, "right": None}, "right": None}))
    assert main(["bij", "psi", "--tree", str(jf)]) == 0


def test_cli_bij_domain_error(tmp_path, capsys):
    tree_file = tmp_path / "bad.txt"
    tree_file.write_text("(- _ _)")  # in neither family at k=1
    assert main(["bij", "psi", "--tree", str(tree_file)]) == 2


def test_cli_verify_tables(capsys):
    assert main(["verify", "tables"]) == 0
    out = capsys.readouterr().out
    assert "documented-discrepancy" in out
    assert "suite tables:" in out and " 0 fail" in out


def test_cli_verify_json(capsys):
    assert main(["--format", "json", "verify", "conjectures", "--max-n", "6"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["suite"] == "conjectures" and data["passed"] is True


def test_cli_usage_error(capsys):
    # argparse exits with status 2 on malformed arguments
    with pytest.raises(SystemExit) as exc:
        main(["poly", "D", "notanumber"])
    assert exc.value.code == 2
    # a bad permutation is a domain error with the same exit code
    assert main(["sweep", "10 2"]) == 2


def test_cli_entry_point_subprocess():
    result = subprocess.run(
        [sys.executable, "-m", "descpoly", "poly", "D", "6"],
        capture_output=True, text=True,
    )
    assert result.returncode == 0
    assert result.stdout.strip() == "16t+104t^2+120t^3+24t^4+t^5"
