import pytest
from hypothesis import given, settings, strategies as st

from oopsie.schema import load_schema, scalar
from oopsie.sqlfront import (ArityMismatch, InsertStmt, SelectStmt, SqlSyntaxError,
                             SqlUnsupportedConstruct, UnknownColumn, UnknownTable,
                             UntypablePlaceholder, analyze_query, parse_sql, placeholder_count,
                             placeholders, signature_of)
from test_schema import catalogs

WAREHOUSE = load_schema("CREATE TABLE warehouse (label VARCHAR(100), qty INTEGER);")
STOCK = load_schema("""
    CREATE TABLE stock (s_i_id INTEGER, s_w_id INTEGER, s_quantity SMALLINT,
                        s_dist_01 CHAR(24), s_dist_02 CHAR(24));""")


def kinds(ts):
    return [t.name for t in ts]


def test_select_with_placeholder():
    ast = parse_sql("SELECT label FROM warehouse WHERE qty = ?")
    assert isinstance(ast, SelectStmt)
    assert ast.placeholders == 1


def test_form_typo():
    with pytest.raises(SqlSyntaxError) as exc:
        parse_sql("SELECT * FORM warehouse")
    assert exc.value.found.upper() == "FORM"


def test_insert_with_columns():
    ast = parse_sql("INSERT INTO genre (id, name) VALUES (?,?)")
    assert isinstance(ast, InsertStmt)
    assert ast.placeholders == 2


def test_signature_select():
    sig = analyze_query(parse_sql("SELECT label FROM warehouse WHERE qty = ?"), WAREHOUSE)
    assert kinds(sig.params) == ["INTEGER"]
    assert [(n, t.name) for n, t in sig.out] == [("label", "VARCHAR")]


def test_select_star_stock():
    sig = signature_of("select * from stock where s_i_id = ? and s_w_id = ?", STOCK)
    assert [n for n, _ in sig.out] == [c.name for c in STOCK.get("stock").columns]
    assert kinds(sig.params) == ["INTEGER", "INTEGER"]


def test_insert_positional():
    sig = signature_of("INSERT INTO warehouse VALUES (?, ?)", WAREHOUSE)
    assert kinds(sig.params) == ["VARCHAR", "INTEGER"]
    assert sig.out == ()


@pytest.mark.parametrize("text,n", [("VALUES (?, ?, ?)", 3), ("WHERE a = '?'", 0), ("", 0),
                                    ("SELECT a FROM t WHERE b = ? -- ?", 1)])
def test_placeholder_count(text, n):
    assert placeholder_count(text) == n


@pytest.mark.parametrize("text,exc", [
    ("SELECT label FROM nowhere", UnknownTable),
    ("SELECT nope FROM warehouse", UnknownColumn),
    ("INSERT INTO warehouse VALUES (?)", ArityMismatch),
    ("INSERT INTO warehouse (label) VALUES (?, ?)", ArityMismatch),
    ("SELECT label FROM warehouse WHERE label LIKE ?", UntypablePlaceholder),
    ("SELECT count(*) FROM warehouse", SqlUnsupportedConstruct),
    ("SELECT label FROM warehouse GROUP BY label", SqlUnsupportedConstruct),
])
def test_analysis_errors(text, exc):
    with pytest.raises(exc):
        signature_of(text, WAREHOUSE)


def test_update_and_delete():
    sig = signature_of("UPDATE warehouse SET qty = ? WHERE label = ?", WAREHOUSE)
    assert kinds(sig.params) == ["INTEGER", "VARCHAR"]
    sig = signature_of("DELETE FROM warehouse WHERE qty BETWEEN ? AND ?", WAREHOUSE)
    assert kinds(sig.params) == ["INTEGER", "INTEGER"]
    sig = signature_of("DELETE FROM warehouse WHERE label IN (?, 'x', ?)", WAREHOUSE)
    assert kinds(sig.params) == ["VARCHAR", "VARCHAR"]


def test_alias_and_qualified_columns():
    sig = signature_of("SELECT w.label AS l, qty FROM warehouse w WHERE w.qty > ?", WAREHOUSE)
    assert [n for n, _ in sig.out] == ["l", "qty"]
    assert kinds(sig.params) == ["INTEGER"]


def test_placeholder_on_left():
    sig = signature_of("SELECT label FROM warehouse WHERE ? < qty", WAREHOUSE)
    assert kinds(sig.params) == ["INTEGER"]


def test_analyze_is_pure():
    ast = parse_sql("SELECT * FROM stock WHERE s_w_id = ?")
    assert analyze_query(ast, STOCK) == analyze_query(ast, STOCK)


@settings(max_examples=100, deadline=None)
@given(catalogs())
def test_select_star_matches_columns(cat):
    for t in cat:
        sig = signature_of(f"SELECT * FROM {t.name}", cat)
        assert [(n, ty) for n, ty in sig.out] == [(c.name, c.type) for c in t.columns]


@st.composite
def where_clauses(draw):
    cols = ["label", "qty"]
    n = draw(st.integers(1, 6))
    preds = []
    for _ in range(n):
        col = draw(st.sampled_from(cols))
        form = draw(st.sampled_from(["cmp", "rcmp", "between", "in", "lit"]))
        if form == "cmp":
            preds.append(f"{col} {draw(st.sampled_from(['=', '<', '>=', '<>']))} ?")
        elif form == "rcmp":
            preds.append(f"? = {col}")
        elif form == "between":
            preds.append(f"{col} BETWEEN ? AND ?")
        elif form == "in":
            preds.append(f"{col} IN ({', '.join(['?'] * draw(st.integers(1, 3)))})")
        else:
            preds.append(f"{col} = 'q?'" if col == "label" else f"{col} = 3")
    joiner = draw(st.sampled_from([" AND ", " OR "]))
    return "SELECT label FROM warehouse WHERE " + joiner.join(preds)


@settings(max_examples=200, deadline=None)
@given(where_clauses())
def test_placeholders_dense_and_counted(text):
    ast = parse_sql(text)
    ords = [p.ordinal for p in placeholders(ast)]
    assert sorted(ords) == list(range(1, len(ords) + 1))
    assert ords == sorted(ords)
    sig = analyze_query(ast, WAREHOUSE)
    assert len(sig.params) == placeholder_count(text) == len(ords)
    assert set(sig.params) <= {scalar("VARCHAR"), scalar("INTEGER")}
