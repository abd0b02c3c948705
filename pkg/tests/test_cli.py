import csv
import json
import re

from oopsie import cli
from oopsie.checker import AccessStats, Mode, check_program
from oopsie.report import write_report
from oopsie.schema import load_schema
from oopsie.typemap import load_conversion_table
from progen import GALLERY

SCHEMA = str(GALLERY / "schema.sql")
LINE = re.compile(r"^(\S+):(\d+):(\d+): (error|warning|info) (OOPS\d{3}): .+$")


def main(capsys, *argv):
    code = cli.main([*argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_exit_codes(capsys):
    assert main(capsys, "--schema", SCHEMA, str(GALLERY / "StockLoop.java"))[0] == 0
    assert main(capsys, "--schema", SCHEMA, str(GALLERY / "SalaryPipeline.java"))[0] == 1
    assert main(capsys, str(GALLERY / "StockLoop.java"))[0] == 2
    assert main(capsys, "--schema", "missing.sql", str(GALLERY))[0] == 2
    assert main(capsys, "--schema", SCHEMA, "no/such/dir")[0] == 2


def test_fail_on_warning(capsys):
    f = str(GALLERY / "BindParam.java")
    assert main(capsys, "--schema", SCHEMA, "--mode", "degraded", f)[0] == 0
    # OOPS014 is informational, so even --fail-on warning stays clean
    assert main(capsys, "--schema", SCHEMA, "--mode", "degraded", "--fail-on", "warning", f)[0] == 0
    count = str(GALLERY / "CountUsers.java")
    assert main(capsys, "--schema", SCHEMA, "--mode", "degraded", count)[0] == 0
    assert main(capsys, "--schema", SCHEMA, "--mode", "degraded", "--fail-on", "warning", count)[0] == 1


def test_text_format(capsys):
    code, out, _ = main(capsys, "--schema", SCHEMA, str(GALLERY))
    lines = out.splitlines()
    assert code == 1 and lines
    for ln in lines:
        assert LINE.match(ln), ln
    assert "\033[" not in out
    assert any("SalaryPipeline.java:12:" in ln and " error OOPS008: getInt" in ln for ln in lines)


def test_json_format(capsys):
    _, out, _ = main(capsys, "--schema", SCHEMA, "--format", "json", str(GALLERY / "StockLoop.java"))
    assert json.loads(out) == []
    _, out, _ = main(capsys, "--schema", SCHEMA, "--format", "json", str(GALLERY / "SalaryPipeline.java"))
    data = json.loads(out)
    assert [(d["code"], d["severity"], d["line"]) for d in data] == [("OOPS008", "error", 12)]
    assert data[0]["expected"] == "getString" and data[0]["actual"] == "getInt"


def test_json_matches_text(capsys):
    _, text, _ = main(capsys, "--schema", SCHEMA, str(GALLERY))
    _, js, _ = main(capsys, "--schema", SCHEMA, "--format", "json", str(GALLERY))
    rebuilt = [f"{d['file']}:{d['line']}:{d['column']}: {d['severity']} {d['code']}: {d['message']}"
               for d in json.loads(js)]
    assert rebuilt == text.splitlines()


def test_color(monkeypatch):
    catalog = load_schema((GALLERY / "schema.sql").read_text())
    r = check_program([("S.java", (GALLERY / "SalaryPipeline.java").read_text())], catalog,
                      load_conversion_table())
    assert "\033[31merror\033[0m" in cli.render_diagnostics(r.diagnostics, color=True)
    assert "\033[" not in cli.render_diagnostics(r.diagnostics, color=False)


def test_stats_to_stderr(capsys):
    _, out, err = main(capsys, "--schema", SCHEMA, "--stats", str(GALLERY / "GetterProblems.java"))
    assert "getters_checked: 3" in err
    assert "getters_checked" not in out


def test_supported_as_warning_flag(capsys):
    f = str(GALLERY / "SalaryPipeline.java")
    code, out, _ = main(capsys, "--schema", SCHEMA, "--supported-as-warning", f)
    assert code == 0 and " warning OOPS008" in out


def test_mapping_override(tmp_path, capsys):
    m = tmp_path / "map.txt"
    m.write_text("getter.recommended.VARCHAR = String,int\n")
    code, out, _ = main(capsys, "--schema", SCHEMA, "--mapping", str(m), str(GALLERY / "SalaryPipeline.java"))
    assert code == 0 and out == ""
    m.write_text("getter.recommended.NOPE = int\n")
    assert main(capsys, "--schema", SCHEMA, "--mapping", str(m), str(GALLERY))[0] == 2


def test_tool_error_exit(tmp_path, capsys):
    (tmp_path / "Bad.java").write_text("class {")
    code, _, err = main(capsys, "--schema", SCHEMA, str(tmp_path))
    assert code == 2 and "Bad.java" in err


def test_report_dir(tmp_path, capsys):
    out_dir = tmp_path / "rep"
    assert main(capsys, "--schema", SCHEMA, "--report-dir", str(out_dir), str(GALLERY))[0] == 1
    for name in ("diagnostics.csv", "stats.csv", "codes.png", "coverage.png"):
        assert (out_dir / name).stat().st_size > 0
    rows = list(csv.DictReader(open(out_dir / "diagnostics.csv")))
    assert {r["code"] for r in rows} >= {"OOPS001", "OOPS008"}


def test_write_report_empty(tmp_path):
    write_report(tmp_path, [], AccessStats())
    stats = list(csv.reader(open(tmp_path / "stats.csv")))
    assert stats[0] == ["bucket", "count"] and all(v == "0" for _, v in stats[1:])
    assert (tmp_path / "codes.png").read_bytes()[:4] == b"\x89PNG"
