import pytest

from oopsie.schema import SqlKind, scalar
from oopsie.typemap import (ConfigSyntaxError, Conversion, UnknownJavaAccessor, UnknownSqlKind,
                            accessor_method, classify_conversion, load_conversion_table)

TABLE = load_conversion_table()

# getter rows of the JDBC conversion table: recommended, and some supported ones
GETTER_ROWS = {
    "CHAR": ({"String"}, {"int", "long", "boolean"}),
    "VARCHAR": ({"String"}, {"int", "long", "boolean"}),
    "INTEGER": ({"int", "long"}, {"String", "boolean"}),
    "BIGINT": ({"long"}, {"String", "int", "boolean"}),
}

SNAPSHOT_RECOMMENDED = {
    "getter": {
        "CHAR": {"String"}, "VARCHAR": {"String"}, "INTEGER": {"int", "long"}, "BIGINT": {"long"},
        "SMALLINT": {"short"}, "BOOLEAN": {"boolean"}, "DATE": {"Date"}, "TIME": {"Time"},
        "TIMESTAMP": {"Timestamp"}, "DECIMAL": {"BigDecimal"}, "NUMERIC": {"BigDecimal"},
        "DOUBLE": {"double"}, "REAL": {"float"},
    },
    "setter": {
        "CHAR": {"String"}, "VARCHAR": {"String"}, "INTEGER": {"int"}, "BIGINT": {"long"},
        "SMALLINT": {"short"}, "BOOLEAN": {"boolean"}, "DATE": {"Date"}, "TIME": {"Time"},
        "TIMESTAMP": {"Timestamp"}, "DECIMAL": {"BigDecimal"}, "NUMERIC": {"BigDecimal"},
        "DOUBLE": {"double"}, "REAL": {"float"},
    },
}


@pytest.mark.parametrize("kind", sorted(GETTER_ROWS))
def test_getter_rows(kind):
    rec, sup = GETTER_ROWS[kind]
    assert TABLE.recommended("getter", scalar(kind)) == rec
    assert sup <= TABLE.supported("getter", scalar(kind))


def test_recommended_snapshot():
    for direction, rows in SNAPSHOT_RECOMMENDED.items():
        for kind in SqlKind:
            assert set(TABLE.recommended(direction, kind)) == rows[kind.value], (direction, kind)


def test_examples():
    assert classify_conversion(TABLE, "get", scalar("CHAR"), "String") is Conversion.RECOMMENDED
    assert classify_conversion(TABLE, "get", scalar("BIGINT"), "int") is Conversion.SUPPORTED_ONLY
    assert classify_conversion(TABLE, "get", scalar("INTEGER"), "Date") is Conversion.DISALLOWED


def test_override():
    t = load_conversion_table("getter.recommended.BIGINT = long,String")
    assert t.recommended("getter", SqlKind.BIGINT) == {"long", "String"}
    assert "String" not in t.supported("getter", SqlKind.BIGINT)


def test_disjoint():
    for t in (TABLE, load_conversion_table("setter.recommended.DATE = Date, String, Timestamp")):
        for direction in ("getter", "setter"):
            for kind in SqlKind:
                assert not t.recommended(direction, kind) & t.supported(direction, kind)


@pytest.mark.parametrize("text,exc", [
    ("getter.recommended.BIGINT long", ConfigSyntaxError),
    ("getter.liked.BIGINT = long", ConfigSyntaxError),
    ("getter.recommended.BLOB = long", UnknownSqlKind),
    ("getter.recommended.BIGINT = Long", UnknownJavaAccessor),
])
def test_config_errors(text, exc):
    with pytest.raises(exc):
        load_conversion_table(text)


def test_accessor_method():
    assert accessor_method("getter", "int") == "getInt"
    assert accessor_method("set", "BigDecimal") == "setBigDecimal"
