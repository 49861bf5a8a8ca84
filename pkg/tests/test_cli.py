from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from qjstirling.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_table_json():
    code, text = run("table", "qstirling-second", "3", "json")
    assert code == 0
    rows = {(r["n"], r["k"]): r["value"] for r in json.loads(text)["rows"]}
    assert rows[3, 2] == "2+q"


def test_table_csv_and_format_flag():
    code, text = run("table", "central-U", "3", "--format", "csv")
    assert code == 0
    rows = {(int(r["n"]), int(r["k"])): r["value"] for r in csv.DictReader(io.StringIO(text))}
    assert rows[3, 2] == "q^-1+3+q"
    assert run("table", "central-U", "3", "csv") == (code, text)


def test_table_latex():
    code, text = run("table", "qjs-second", "3", "latex")
    assert code == 0
    assert text.startswith(r"\begin{tabular}") and text.rstrip().endswith(r"\end{tabular}")
    assert "3 & 2 & $(q^{-1}+3+q)+(2+q)z$" in text


def test_table_output_is_deterministic():
    assert run("table", "askeywilson-first", "4", "json") == run("table", "askeywilson-first", "4", "json")


@pytest.mark.parametrize(
    "argv",
    [
        ("table", "bogus", "3"),
        ("table", "qjs-second", "99"),
        ("table", "qjs-second", "3", "xml"),
        ("enumerate", "js-partitions", "9", "2"),
        ("enumerate", "perm-pairs", "3", "5"),
        ("verify", "stirling", "--family", "nonsense"),
        ("frobnicate",),
    ],
)
def test_usage_errors(argv, capsys):
    assert run(*argv)[0] == 2


def test_enumerate_js_partitions():
    code, text = run("enumerate", "js-partitions", "3", "2")
    lines = [json.loads(s) for s in text.splitlines()]
    objects, summary = lines[:-1], lines[-1]["summary"]
    assert code == 0 and len(objects) == 8 == summary["count"]
    assert summary["polynomial"] == "q^-1+3+q | 2+q"
    assert {"object", "stats"} == set(objects[0])


def test_enumerate_small_cases():
    _, text = run("enumerate", "double-signed", "2", "1")
    assert json.loads(text.splitlines()[-1])["summary"]["count"] == 5
    _, text = run("enumerate", "js-partitions", "2", "2")
    lines = text.splitlines()
    assert len(lines) == 2 and json.loads(lines[-1])["summary"]["polynomial"] == "1"
    _, text = run("enumerate", "perm-pairs", "3", "2", "1")
    assert json.loads(text.splitlines()[-1])["summary"]["polynomial"] == "2+q"


def test_verify_passes_and_is_reproducible():
    args = ("verify", "combinatorics", "--n", "4")
    code, text = run(*args)
    assert code == 0
    report = json.loads(text)
    assert report["totals"]["fail"] == 0 and "seconds" not in report
    assert run(*args) == (code, text)
    assert run(*args, "--jobs", "3") == (code, text)


def test_verify_operators_on_one_family():
    code, text = run("verify", "operators", "--family", "asc:a=2", "--k", "2", "--deg", "4", "--n", "5")
    assert code == 0
    assert {c["params"]["family"] for c in json.loads(text)["cells"]} == {"asc:a=2"}


def test_family_description():
    code, text = run("family", "lqj:a=q,b=q^2", "--n", "2")
    doc = json.loads(text)
    assert code == 0 and doc["family"].startswith("little_q_jacobi") and len(doc["rows"]) == 3
    code, text = run("family", "sw", "--format", "latex")
    assert code == 0 and "eigenvalue" in text


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qjstirling", "table", "qjs-first", "2"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["table"] == "qjs-first"


def test_verify_failure_exit_code(monkeypatch):
    from qjstirling import cli
    from qjstirling.suites import Check

    def boom():
        raise ArithmeticError("forced")

    monkeypatch.setattr(cli, "build_suite", lambda name, **_: [Check("ok", {}, lambda: (True, None)), Check("bad", {"n": 1}, boom)])
    code, text = run("verify", "stirling")
    report = json.loads(text)
    assert code == 1 and report["totals"] == {"pass": 1, "fail": 1}
    assert report["cells"][1]["witness"] == "ArithmeticError: forced"
