import pytest

from oopsie import constprop as cp
from oopsie.checker import (AccessStats, Mode, check_program, introduce_statement_qualifier,
                            join_state)
from oopsie.diagnostics import Code, Severity
from oopsie.javafront import SourceSpan
from oopsie.schema import load_schema, scalar
from oopsie.sqltype import BOTTOM, UNKNOWN, UNSUPPORTED, Sql
from oopsie.typemap import load_conversion_table
from progen import CORPUS, GALLERY, corpus_sources, unextractable

TABLE = load_conversion_table()
GALLERY_SCHEMA = load_schema((GALLERY / "schema.sql").read_text())
CORPUS_SCHEMA = load_schema((CORPUS / "schema.sql").read_text())
SPAN = SourceSpan("T.java", 1, 1)


def run(text, mode=Mode.SOUND, catalog=GALLERY_SCHEMA, **kw):
    return check_program([("T.java", text)], catalog, TABLE, mode, **kw)


def codes(result):
    return [(d.code.value, d.span.line) for d in result.diagnostics]


def wrap(body, params="", extra=""):
    lines = ["import java.sql.*;", "class T {",
             f"  void m(Connection conn{params}) throws SQLException {{"]
    lines += ["    " + ln for ln in body.strip().splitlines()]
    lines += ["  }", extra, "}"]
    return "\n".join(lines) + "\n"


# line numbers inside wrap(): body starts on line 4
L = 4


def gallery(name, mode=Mode.SOUND):
    return check_program([(name, (GALLERY / name).read_text())], GALLERY_SCHEMA, TABLE, mode)


# --- statement qualifiers -----------------------------------------------------------------

def test_introduce_from_constant():
    q, ds = introduce_statement_qualifier(
        SPAN, cp.known("SELECT name FROM employee WHERE salary < ?"), GALLERY_SCHEMA, Mode.SOUND)
    assert q == Sql((scalar("INTEGER"),), (("name", scalar("VARCHAR")),))
    assert ds == []


def test_introduce_unknown_table():
    q, ds = introduce_statement_qualifier(SPAN, cp.known("Select * from employe"), GALLERY_SCHEMA,
                                          Mode.SOUND)
    assert q is UNSUPPORTED
    assert [d.code for d in ds] == [Code.MALFORMED_SQL]
    assert ds[0].severity is Severity.ERROR


@pytest.mark.parametrize("mode,severity", [(Mode.DEGRADED, Severity.WARNING), (Mode.SOUND, Severity.ERROR)])
def test_introduce_top(mode, severity):
    q, ds = introduce_statement_qualifier(SPAN, cp.TOP, GALLERY_SCHEMA, mode)
    assert q is UNSUPPORTED
    assert [(d.code, d.severity) for d in ds] == [(Code.UNEXTRACTABLE_SQL, severity)]


def test_introduce_bottom():
    assert introduce_statement_qualifier(SPAN, cp.BOTTOM, GALLERY_SCHEMA, Mode.SOUND) == (BOTTOM, [])


def test_introduce_several_candidates_lub():
    v = cp.known("SELECT name, salary FROM employee", "SELECT name FROM employee")
    q, ds = introduce_statement_qualifier(SPAN, v, GALLERY_SCHEMA, Mode.SOUND)
    assert q == Sql((), (("name", scalar("VARCHAR")),))
    assert ds == []


def test_placeholders_in_plain_statement():
    q, ds = introduce_statement_qualifier(SPAN, cp.known("SELECT name FROM employee WHERE id = ?"),
                                          GALLERY_SCHEMA, Mode.SOUND, prepared=False)
    assert q is UNSUPPORTED and ds[0].code is Code.MALFORMED_SQL


def test_join_state_prefix():
    c1, c2 = ("a", scalar("INTEGER")), ("b", scalar("VARCHAR"))
    joined = join_state({0: Sql((), (c1, c2))}, {0: Sql((), (c1,))})
    assert joined[0] == Sql((), (c1,))
    assert join_state({0: Sql((), (c1,))}, None) == {0: Sql((), (c1,))}


# --- gallery programs ------------------------------------------------------------------

def test_salary_pipeline():
    r = gallery("SalaryPipeline.java")
    assert codes(r) == [("OOPS008", 12)]
    assert r.diagnostics[0].severity is Severity.ERROR
    assert r.diagnostics[0].expected == "getString"
    assert r.diagnostics[0].actual == "getInt"


def test_insert_genre():
    assert codes(gallery("InsertGenre.java")) == [("OOPS007", 11), ("OOPS007", 12), ("OOPS004", 13)]


@pytest.mark.parametrize("name", ["StockLoop.java", "ReassignImage.java", "SequentialBinding.java",
                                  "ExecuteThenFetch.java"])
def test_clean_gallery_programs(name):
    for mode in Mode:
        assert codes(gallery(name, mode)) == []


def test_getter_problems():
    r = gallery("GetterProblems.java")
    assert codes(r) == [("OOPS008", 9), ("OOPS005", 10), ("OOPS006", 11)]


def test_setter_problems():
    assert codes(gallery("SetterProblems.java")) == [("OOPS007", 7), ("OOPS004", 8)]


def test_room_annotation():
    assert codes(gallery("RoomLookup.java")) == [("OOPS008", 21), ("OOPS008", 24)]


def test_generic_bind_param():
    assert codes(gallery("BindParam.java")) == [("OOPS009", 6)]
    r = gallery("BindParam.java", Mode.DEGRADED)
    assert [(d.code.value, d.severity) for d in r.diagnostics] == [("OOPS014", Severity.INFO)]


# --- annotations ---------------------------------------------------------------------------

HELPER = """
  void show(@Sql(out = {"VARCHAR name", "INTEGER salary"}) ResultSet rs) throws SQLException {
    String n = rs.getString("name");
  }"""


def test_annotation_accepts_longer_result():
    text = wrap("""
PreparedStatement ps = conn.prepareStatement("SELECT name, salary, dob FROM employee");
show(ps.executeQuery());""", extra=HELPER)
    assert codes(run(text)) == []


def test_annotation_rejects_mismatch():
    text = wrap("""
PreparedStatement ps = conn.prepareStatement("SELECT salary, name FROM employee");
show(ps.executeQuery());""", extra=HELPER)
    assert codes(run(text)) == [("OOPS012", L + 1)]


def test_annotation_unknown_argument():
    text = wrap("show(rs);", params=", ResultSet rs", extra=HELPER)
    assert ("OOPS012", L) in codes(run(text))
    assert ("OOPS012", L) in codes(run(text, Mode.DEGRADED))


def test_annotated_return():
    extra = """
  @Sql(out = {"VARCHAR name"})
  ResultSet fetch(Connection conn) throws SQLException {
    PreparedStatement ps = conn.prepareStatement("SELECT salary FROM employee");
    return ps.executeQuery();
  }"""
    text = wrap('ResultSet rs = fetch(conn);\nrs.next();\nString n = rs.getString("name");', extra=extra)
    assert codes(run(text)) == [("OOPS013", 12)]  # the return statement


def test_invalid_annotation_is_ignored():
    extra = """
  void show(@Sql(out = {"BLOB x"}) ResultSet rs) throws SQLException {
  }"""
    r = run(wrap("", extra=extra))
    assert [(d.code.value, d.severity) for d in r.diagnostics] == [("OOPS015", Severity.WARNING)]


# --- flow-sensitive refinement ---------------------------------------------------------

def test_reassignment_tracked():
    text = wrap("""
PreparedStatement ps = conn.prepareStatement("SELECT name FROM employee");
ps = conn.prepareStatement("SELECT name FROM employee WHERE id = ?");
ps.setInt(1, 3);""")
    assert codes(run(text)) == []


def test_branch_join_loses_extra_columns():
    text = wrap("""
String sql = "SELECT name FROM employee";
if (f) {
  sql = "SELECT name, salary FROM employee";
}
ResultSet rs = conn.createStatement().executeQuery(sql);
rs.next();
String n = rs.getString(1);
int s = rs.getInt(2);""", params=", boolean f")
    assert codes(run(text)) == [("OOPS005", L + 7)]


def test_unextractable_index():
    text = wrap("""
PreparedStatement ps = conn.prepareStatement("SELECT name FROM employee WHERE id = ?");
ps.setInt(i, 3);""", params=", int i")
    assert codes(run(text)) == [("OOPS011", L + 1)]
    r = run(text, Mode.DEGRADED)
    assert [(d.code.value, d.severity) for d in r.diagnostics] == [("OOPS011", Severity.WARNING)]


def test_unextractable_sql_degraded_silences_accesses():
    text = wrap("""
PreparedStatement ps = conn.prepareStatement(sql);
ps.setString(1, "x");
ResultSet rs = ps.executeQuery();
rs.next();
int v = rs.getInt(4);""", params=", String sql")
    sound = run(text)
    assert [d.code.value for d in sound.diagnostics] == ["OOPS003", "OOPS010", "OOPS010", "OOPS010"]
    degraded = run(text, Mode.DEGRADED)
    assert [(d.code.value, d.severity) for d in degraded.diagnostics] == [("OOPS003", Severity.WARNING)]


def test_statement_escaping_to_helper_becomes_unknown():
    text = wrap("""
Statement st = conn.createStatement();
helper(st);
ResultSet rs = st.getResultSet();
rs.next();
int x = rs.getInt(1);""", extra="  void helper(Statement s) { }")
    assert [c for c, _ in codes(run(text))] == ["OOPS009", "OOPS009"]


def test_supported_as_warning():
    text = wrap("""
ResultSet rs = conn.createStatement().executeQuery("SELECT name FROM employee");
rs.next();
int a = rs.getInt(1);
Date d = rs.getDate(1);""")
    r = run(text, supported_as_warning=True)
    got = [(d.code.value, d.severity) for d in r.diagnostics]
    assert got == [("OOPS008", Severity.WARNING), ("OOPS008", Severity.WARNING)]
    r = run(text)
    assert [d.severity for d in r.diagnostics] == [Severity.ERROR, Severity.ERROR]


def test_disallowed_stays_error_with_flag():
    text = wrap("""
ResultSet rs = conn.createStatement().executeQuery("SELECT dob FROM employee");
rs.next();
int a = rs.getInt(1);""")
    r = run(text, supported_as_warning=True)
    assert [(d.code.value, d.severity) for d in r.diagnostics] == [("OOPS008", Severity.ERROR)]
    assert "not supported" in r.diagnostics[0].message


def test_subset_violation_reported():
    r = run(wrap("for (;;) { }"))
    assert [(d.code.value, d.severity) for d in r.diagnostics] == [("OOPS015", Severity.WARNING)]


def test_unparsable_file_is_tool_error():
    r = check_program([("bad.java", "class {"), ("T.java", wrap(""))], GALLERY_SCHEMA, TABLE)
    assert len(r.tool_errors) == 1 and r.diagnostics == []


def test_stats():
    r = gallery("GetterProblems.java")
    assert r.stats.getters_checked == 3 and r.stats.getters_flagged == 3
    total = AccessStats(1, 0, 2, 1) + AccessStats(0, 0, 1, 1, 4, 5)
    assert total.as_dict() == {"getters_checked": 1, "getters_flagged": 0, "setters_checked": 3,
                               "setters_flagged": 2, "out_of_scope": 4, "unchecked": 5}


# --- whole-corpus properties -----------------------------------------------------------------

def _all_inputs():
    sources = corpus_sources()
    yield sources, CORPUS_SCHEMA
    yield [(p, unextractable(t)) for p, t in sources], CORPUS_SCHEMA
    yield [(p.name, p.read_text()) for p in sorted(GALLERY.glob("*.java"))], GALLERY_SCHEMA


def test_mode_monotonicity():
    for sources, catalog in _all_inputs():
        sound = check_program(sources, catalog, TABLE, Mode.SOUND)
        degraded = check_program(sources, catalog, TABLE, Mode.DEGRADED)
        assert set(degraded.errors) <= set(sound.errors)
        extra = {d.code for d in set(sound.errors) - set(degraded.errors)}
        assert extra <= {Code.UNEXTRACTABLE_SQL, Code.UNSUPPORTED_SQL, Code.NONLOCAL_ACCESS,
                         Code.UNCHECKED_ACCESS, Code.UNEXTRACTABLE_INDEX,
                         Code.ANNOTATION_ARG_MISMATCH, Code.ANNOTATION_RETURN_MISMATCH}


def test_deterministic_order():
    sources = corpus_sources()
    a = check_program(sources, CORPUS_SCHEMA, TABLE).diagnostics
    b = check_program(list(reversed(sources)), CORPUS_SCHEMA, TABLE, workers=3).diagnostics
    assert a == b
    keys = [d.sort_key() for d in a]
    assert keys == sorted(keys)


def test_block_revisits_bounded():
    from oopsie.checker import CheckContext, AnnotationIndex, check_method
    from oopsie.javafront import parse_java

    ctx = CheckContext(CORPUS_SCHEMA, TABLE, Mode.SOUND, AnnotationIndex())
    for path, text in corpus_sources():
        for m in parse_java(text, path).methods():
            res = check_method(m, ctx)
            if res.visits:
                assert max(res.visits.values()) <= 4 + 2 * len(m.slots), path
