import io
import json

import pytest

from catkernel import instances
from catkernel.cli import main

from conftest import DATA

ZOO = instances.zoo_dir()


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv, "--json")
    return code, json.loads(text), text


def test_validate_ok():
    code, text = run("validate", str(ZOO / "walking_arrow.catspec"))
    assert code == 0 and "valid" in text


def test_validate_counterexample():
    code, doc, _ = run_json("validate", str(DATA / "nonassoc.catspec"))
    assert code == 1
    assert doc["results"][str(DATA / "nonassoc.catspec")]["error"] == "NonAssociative"


def test_unknown_flag_rejected():
    assert run("validate", "--frobnicate", "x")[0] == 2


def test_unknown_subcommand():
    assert run("explode")[0] == 2


def test_missing_file():
    assert run("analyze", str(DATA / "missing.catspec"))[0] == 2


def test_parse_error_exit_code(tmp_path):
    p = tmp_path / "bad.catspec"
    p.write_text("morphism f : a b\n")
    assert run("validate", str(p))[0] == 2


def test_schema_and_determinism():
    a = run_json("analyze", str(ZOO / "walking_arrow.catspec"))
    b = run_json("analyze", str(ZOO / "walking_arrow.catspec"))
    assert a[2] == b[2]
    assert a[1]["schema"] == 1
    f = a[1]["results"][str(ZOO / "walking_arrow.catspec")]["morphisms"]["f"]
    assert f["bimorphism"]["flag"] and not f["iso"]["flag"]


def test_laws_json_schema():
    code, doc, _ = run_json("laws", "--suite", "product", "--max-size", "2")
    assert code == 0
    assert {"suite", "label", "status", "checked"} <= set(doc)
    assert doc["suite"] == "product" and doc["status"] == "pass"


def test_laws_monad_suite():
    code, doc, _ = run_json("laws", "--suite", "monad", "--monad", "writer:c2", "--max-size", "2")
    assert code == 0
    assert doc["label"] == "writer[c2]"


def test_monad_command():
    code, doc, _ = run_json("monad", "--monad", "maybe", "--max-size", "3")
    assert code == 0
    assert doc["census_sizes"] == {"0": 0, "1": 1, "2": 2, "3": 3}
    assert doc["verdicts"]["em_product"]["anchor"] == "thm:alg-product"
    assert doc["verdicts"]["em_terminal"]["verdict"]["flag"]
    assert len(doc["conjecture_probe"]) >= 6


def test_bad_monad_is_usage_error():
    assert run("monad", "--monad", "state")[0] == 2


def test_slice_base():
    code, doc, _ = run_json("slice", "--max-size", "2", "--base", "2")
    assert code == 0
    assert list(doc["results"]) == ["2"]
    assert doc["results"]["2"]["ccc"]["ok"]
    assert doc["lcc"]["agree"]


def test_slice_crafted_reports_counterexample():
    code, doc, _ = run_json("slice", str(DATA / "cospan_plus_point.catspec"), "--base", "c")
    assert code == 1
    assert not doc["results"]["c"]["ccc"]["products"]["flag"]


def test_slice_unknown_base():
    assert run("slice", "--max-size", "2", "--base", "zz")[0] == 2


def test_fib_files():
    code, doc, _ = run_json("fib", str(DATA / "arrow_over_point.catspec"),
                            str(DATA / "point.catspec"))
    assert code == 0
    prof = doc["profile"]
    assert prof["fibration"] and prof["partial_order"]
    assert prof["fibration_exponent"] == "unsupported"


def test_fib_needs_functor_block():
    assert run("fib", str(DATA / "arrow.catspec"), str(DATA / "point.catspec"))[0] == 2


def test_fib_builtin_codomain():
    code, doc, _ = run_json("fib", "--builtin", "codomain", "--max-size", "1")
    assert code == 0 and doc["profile"]["fibration"]


def test_zoo():
    code, doc, _ = run_json("zoo")
    assert code == 0
    assert all(e["annotations_verified"] for e in doc["entries"].values())


def test_limits_on_file():
    code, doc, _ = run_json("limits", str(ZOO / "walking_arrow.catspec"))
    r = doc["results"][str(ZOO / "walking_arrow.catspec")]
    assert code == 0 and r["terminal"] == ["b"] and r["cartesian_closed"]


def test_text_mode_stable():
    assert run("zoo") == run("zoo")
