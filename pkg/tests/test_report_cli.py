import csv
import io
import json
import subprocess
import sys

import pytest

from wecken.analyzer import GroupContext, MapFacts, analyze_self
from wecken.cli import main
from wecken.ehp import DimPair
from wecken.report import ReportDocument, analysis_document, render_markdown, table_rows
from wecken.selftest import run_selftest


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_kervaire(capsys):
    code, out, _ = run(capsys, "analyze", "--m", "30", "--n", "16", "--group", "z2",
                       "--double-zero", "true", "--kervaire-one", "true", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["results"]["nielsen"] == 0 and doc["results"]["mcc"] == 1
    assert doc["query"]["facts"] == {"double-zero": True, "kervaire-one": True}
    assert all(set(p) == {"rule_id", "anchor"} for p in doc["provenance"])


def test_analyze_odd_n(capsys):
    code, out, _ = run(capsys, "analyze", "--m", "13", "--n", "7", "--group", "z2", "--format", "json")
    res = json.loads(out)["results"]
    assert code == 0
    assert res["loose"]["value"] == "yes" and res["loose_by_small_deformation"]["value"] == "yes"


def test_analyze_unknown_exit(capsys):
    code, out, _ = run(capsys, "analyze", "--m", "30", "--n", "16", "--group", "z2", "--format", "json")
    assert code == 10
    assert json.loads(out)["results"]["nielsen"] == "unknown"


def test_exit_code_ignores_format(capsys):
    args = ["analyze", "--m", "30", "--n", "16", "--double-zero", "true"]
    assert run(capsys, *args, "--format", "json")[0] == run(capsys, *args, "--format", "text")[0]


def test_contradictory_flags(capsys):
    code, _, err = run(capsys, "analyze", "--m", "30", "--n", "16", "--boundary-zero", "true",
                       "--e-boundary-zero", "false")
    assert code == 2
    assert "--boundary-zero" in err and "--e-boundary-zero" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze", "--m", "0", "--n", "4"],
        ["analyze", "--m", "5", "--n", "4", "--group", "z7"],
        ["analyze", "--m", "5", "--n", "4", "--double-zero", "maybe"],
        ["ehp", "--m", "11", "--n", "7"],
        ["table", "--q-min", "3", "--q-max", "2"],
        ["table", "--q-min", "1", "--q-max", "9"],
        ["bogus"],
    ],
)
def test_input_errors(capsys, argv):
    with pytest.raises(SystemExit) as e:
        sys.exit(main(argv))
    assert e.value.code == 2


def test_wecken_exit_codes(capsys):
    assert run(capsys, "wecken", "--m", "30", "--n", "16")[0] == 0
    assert run(capsys, "wecken", "--m", "254", "--n", "128")[0] == 10
    assert run(capsys, "wecken", "--m", "24", "--n", "10")[0] == 10


def test_ehp_cmd(capsys):
    code, out, _ = run(capsys, "ehp", "--m", "20", "--n", "10", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["results"]["injective"]["value"] == "no"
    assert doc["results"]["kernel"] == "Z2([iota_9,eta2_9])"


def test_pair_cmd(capsys):
    code, out, _ = run(capsys, "pair", "--m", "11", "--n", "6", "--homotopic", "false", "--format", "json")
    assert code == 0 and json.loads(out)["results"]["outcome"] == "MccEqualsNielsen"


def test_table_csv_rows(capsys, table):
    code, out, _ = run(capsys, "table", "--q-min", "1", "--q-max", "8", "--n-min", "2", "--n-max", "64",
                       "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 8 * 32
    for r in rows:
        q, n = int(r["q"]), int(r["n"])
        assert r["injective"] == table.lookup(q, n, "INJ")
        assert r["surjective"] == table.lookup(q, n, "SURJ")
        assert r["wecken"] == table.lookup(q, n, "WEC")


def test_table_markdown_q2(capsys):
    code, out, _ = run(capsys, "table", "--q-min", "2", "--q-max", "2", "--format", "md")
    assert code == 0 and "fails iff n ≡ 2 (4), n ≥ 6" in out


def test_table_q0_holds():
    rows = table_rows(0, 0, 2, 100)
    assert rows and all(r["wecken"] == "HOLDS" and r["injective"] == "Y" for r in rows)


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "--q-min", "1", "--q-max", "1", "--n-max", "20", "--format", "json")
    assert code == 0 and len(json.loads(out)["rows"]) == 10


def test_markdown_without_transcription():
    assert "| m | n |" in render_markdown(table_rows(3, 3, 2, 10))


GRID = [(m, n) for n in (2, 3, 6, 10, 16) for m in range(max(1, 2 * n - 5), 2 * n + 8)]


@pytest.mark.parametrize("m, n", GRID)
@pytest.mark.parametrize("g", ["trivial", "z2", "other:3"])
def test_json_round_trip(m, n, g):
    doc = analysis_document(DimPair(m, n), g, {}, analyze_self(DimPair(m, n), GroupContext.parse(g), MapFacts()))
    text = doc.to_json()
    back = ReportDocument.from_json(text)
    assert back == doc
    assert back.to_json() == text


def test_selftest_clean(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0 and "passed" in out


def test_selftest_flipped_transcription(facts_copy, monkeypatch, capsys):
    p = facts_copy / "table.facts"
    text = p.read_text()
    assert "TAB\t2\tINJ\tn=2\tY" in text
    p.write_text(text.replace("TAB\t2\tINJ\tn=2\tY", "TAB\t2\tINJ\tn=2\tN"))
    monkeypatch.setenv("WECKEN_FACTS_DIR", str(facts_copy))
    code, out, _ = run(capsys, "selftest", "--only", "table")
    assert code == 1
    assert "(q=2, n=2)" in out and "table.inj" in out


def test_selftest_altered_sigma(facts_copy):
    p = facts_copy / "homotopy.facts"
    text = p.read_text()
    assert "STEM\t7\tsigma\t240" in text
    p.write_text(text.replace("STEM\t7\tsigma\t240", "STEM\t7\tsigma\t120"))
    failures = run_selftest(facts_copy)
    assert failures and failures[0].rule_id == "tables.order_divides"
    assert "sigma" in failures[0].where


def test_selftest_bad_fact_file(facts_copy, capsys):
    (facts_copy / "homotopy.facts").write_text("STEM\t3\tnu\n")
    code, _, err = run(capsys, "selftest", "--facts-dir", str(facts_copy))
    assert code == 2 and "homotopy.facts" in err


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "wecken", "wecken", "--m", "11", "--n", "6"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "wecken: no" in r.stdout
