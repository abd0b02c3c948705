"""Database schema catalog loaded from a small CREATE TABLE dialect."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Optional


class SqlKind(enum.Enum):
    CHAR = "CHAR"
    VARCHAR = "VARCHAR"
    INTEGER = "INTEGER"
    BIGINT = "BIGINT"
    SMALLINT = "SMALLINT"
    BOOLEAN = "BOOLEAN"
    DATE = "DATE"
    TIME = "TIME"
    TIMESTAMP = "TIMESTAMP"
    DECIMAL = "DECIMAL"
    NUMERIC = "NUMERIC"
    DOUBLE = "DOUBLE"
    REAL = "REAL"


KIND_SYNONYMS = {"INT": SqlKind.INTEGER, "BOOL": SqlKind.BOOLEAN}

_LENGTH_KINDS = {SqlKind.CHAR, SqlKind.VARCHAR}
_PRECISION_KINDS = {SqlKind.DECIMAL, SqlKind.NUMERIC}


def parse_kind(token: str) -> Optional[SqlKind]:
    up = token.upper()
    if up in KIND_SYNONYMS:
        return KIND_SYNONYMS[up]
    try:
        return SqlKind(up)
    except ValueError:
        return None


@dataclass(frozen=True)
class SqlScalarType:
    """A column type. Equality and hashing only look at ``kind``."""

    kind: SqlKind
    length: Optional[int] = field(default=None, compare=False)
    precision: Optional[int] = field(default=None, compare=False)
    scale: Optional[int] = field(default=None, compare=False)

    def __post_init__(self):
        if self.length is not None:
            if self.kind not in _LENGTH_KINDS:
                raise ValueError(f"{self.kind.value} takes no length")
            if self.length <= 0:
                raise ValueError("length must be positive")
        if self.precision is not None or self.scale is not None:
            if self.kind not in _PRECISION_KINDS:
                raise ValueError(f"{self.kind.value} takes no precision")
            if (self.precision or 0) < 0 or (self.scale or 0) < 0:
                raise ValueError("precision/scale must be non-negative")

    @property
    def name(self) -> str:
        return self.kind.value

    def render(self) -> str:
        if self.length is not None:
            return f"{self.kind.value}({self.length})"
        if self.precision is not None:
            if self.scale is not None:
                return f"{self.kind.value}({self.precision}, {self.scale})"
            return f"{self.kind.value}({self.precision})"
        return self.kind.value

    def __str__(self) -> str:
        return self.kind.value


def scalar(kind: str | SqlKind) -> SqlScalarType:
    if isinstance(kind, SqlKind):
        return SqlScalarType(kind)
    k = parse_kind(kind)
    if k is None:
        raise ValueError(f"unknown SQL type {kind!r}")
    return SqlScalarType(k)


@dataclass(frozen=True)
class Column:
    name: str
    type: SqlScalarType
    nullable: bool = True

    def __post_init__(self):
        if not self.name:
            raise ValueError("column name must be non-empty")


@dataclass(frozen=True)
class Table:
    name: str
    columns: tuple[Column, ...]

    def __post_init__(self):
        if not self.columns:
            raise ValueError(f"table {self.name} has no columns")
        seen = set()
        for col in self.columns:
            key = col.name.lower()
            if key in seen:
                raise DuplicateColumn(self.name, col.name)
            seen.add(key)

    def column(self, name: str) -> Optional[Column]:
        key = name.lower()
        for col in self.columns:
            if col.name.lower() == key:
                return col
        return None


@dataclass(frozen=True)
class SchemaCatalog:
    _tables: Mapping[str, Table] = field(default_factory=dict)

    def __post_init__(self):
        # freeze a private copy
        object.__setattr__(self, "_tables", dict(self._tables))

    @classmethod
    def of(cls, tables) -> "SchemaCatalog":
        out: dict[str, Table] = {}
        for t in tables:
            key = t.name.lower()
            if key in out:
                raise DuplicateTable(t.name)
            out[key] = t
        return cls(out)

    @property
    def tables(self) -> list[Table]:
        return list(self._tables.values())

    def __iter__(self) -> Iterator[Table]:
        return iter(self._tables.values())

    def __len__(self) -> int:
        return len(self._tables)

    def get(self, name: str) -> Optional[Table]:
        return self._tables.get(name.lower())

    def __hash__(self):
        return hash(tuple(self._tables))


class SchemaError(Exception):
    pass


class DdlSyntaxError(SchemaError):
    def __init__(self, position: int, message: str):
        super().__init__(f"DDL syntax error at offset {position}: {message}")
        self.position = position


class DuplicateTable(SchemaError):
    def __init__(self, name: str):
        super().__init__(f"duplicate table {name!r}")
        self.name = name


class DuplicateColumn(SchemaError):
    def __init__(self, table: str, name: str):
        super().__init__(f"duplicate column {name!r} in table {table!r}")
        self.table = table
        self.name = name


class UnsupportedType(SchemaError):
    def __init__(self, token: str):
        super().__init__(f"unsupported column type {token!r}")
        self.token = token


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+|--[^\n]*)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<num>-?\d+(?:\.\d+)?)
  | (?P<str>'(?:[^']|'')*')
  | (?P<punct>[(),;])
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise DdlSyntaxError(pos, f"unexpected character {text[pos]!r}")
        kind = m.lastgroup
        if kind != "ws":
            toks.append((kind, m.group(), pos))
        pos = m.end()
    toks.append(("eof", "", len(text)))
    return toks


class _DdlParser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def next(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def at_word(self, word: str) -> bool:
        kind, val, _ = self.peek()
        return kind == "ident" and val.upper() == word

    def expect_word(self, word: str):
        kind, val, pos = self.next()
        if kind != "ident" or val.upper() != word:
            raise DdlSyntaxError(pos, f"expected {word}, got {val or 'end of input'!r}")

    def expect_punct(self, p: str):
        kind, val, pos = self.next()
        if val != p or kind != "punct":
            raise DdlSyntaxError(pos, f"expected {p!r}, got {val or 'end of input'!r}")

    def ident(self) -> str:
        kind, val, pos = self.next()
        if kind != "ident":
            raise DdlSyntaxError(pos, f"expected identifier, got {val or 'end of input'!r}")
        return val

    def integer(self) -> int:
        kind, val, pos = self.next()
        if kind != "num" or not val.lstrip("-").isdigit():
            raise DdlSyntaxError(pos, f"expected integer, got {val!r}")
        return int(val)

    def parse(self) -> SchemaCatalog:
        tables: dict[str, Table] = {}
        while self.peek()[0] != "eof":
            table = self.create_table()
            key = table.name.lower()
            if key in tables:
                raise DuplicateTable(table.name)
            tables[key] = table
        return SchemaCatalog(tables)

    def create_table(self) -> Table:
        self.expect_word("CREATE")
        self.expect_word("TABLE")
        name = self.ident()
        self.expect_punct("(")
        cols = [self.coldef()]
        while self.peek()[1] == ",":
            self.next()
            cols.append(self.coldef())
        self.expect_punct(")")
        self.expect_punct(";")
        seen = set()
        for col in cols:
            if col.name.lower() in seen:
                raise DuplicateColumn(name, col.name)
            seen.add(col.name.lower())
        return Table(name, tuple(cols))

    def coldef(self) -> Column:
        name = self.ident()
        kind_tok = self.peek()
        if kind_tok[0] != "ident":
            raise DdlSyntaxError(kind_tok[2], "expected column type")
        self.next()
        kind = parse_kind(kind_tok[1])
        if kind is None:
            raise UnsupportedType(kind_tok[1])
        args: list[int] = []
        if self.peek()[1] == "(":
            self.next()
            args.append(self.integer())
            if self.peek()[1] == ",":
                self.next()
                args.append(self.integer())
            self.expect_punct(")")
        sql_type = self._make_type(kind, args, kind_tok[2])
        nullable = True
        while True:
            if self.at_word("NOT"):
                self.next()
                self.expect_word("NULL")
                nullable = False
            elif self.at_word("PRIMARY"):
                self.next()
                self.expect_word("KEY")
            elif self.at_word("DEFAULT"):
                self.next()
                kind_, val, pos = self.next()
                if kind_ not in ("num", "str") and val.upper() not in ("NULL", "TRUE", "FALSE"):
                    raise DdlSyntaxError(pos, f"expected literal after DEFAULT, got {val!r}")
            else:
                break
        return Column(name, sql_type, nullable)

    @staticmethod
    def _make_type(kind: SqlKind, args: list[int], pos: int) -> SqlScalarType:
        if not args:
            return SqlScalarType(kind)
        if kind in _LENGTH_KINDS and len(args) == 1 and args[0] > 0:
            return SqlScalarType(kind, length=args[0])
        if kind in _PRECISION_KINDS and all(a >= 0 for a in args):
            return SqlScalarType(kind, precision=args[0], scale=args[1] if len(args) > 1 else None)
        raise DdlSyntaxError(pos, f"invalid type arguments for {kind.value}")


def load_schema(ddl_text: str) -> SchemaCatalog:
    """Parse ``CREATE TABLE`` statements into a catalog.

    Raises :class:`DdlSyntaxError`, :class:`DuplicateTable`,
    :class:`DuplicateColumn` or :class:`UnsupportedType`.
    """
    return _DdlParser(ddl_text).parse()


def lookup_table(catalog: SchemaCatalog, name: str) -> Optional[Table]:
    return catalog.get(name)


def render_schema(catalog: SchemaCatalog) -> str:
    """Canonical DDL for a catalog; reloads to an equal catalog."""
    out = []
    for table in catalog:
        cols = []
        for col in table.columns:
            text = f"{col.name} {col.type.render()}"
            if not col.nullable:
                text += " NOT NULL"
            cols.append(text)
        out.append(f"CREATE TABLE {table.name} ({', '.join(cols)});")
    return "\n".join(out) + ("\n" if out else "")


def catalogs_equal(a: SchemaCatalog, b: SchemaCatalog) -> bool:
    """Structural equality including lengths and precisions."""

    def key(cat):
        return [
            (t.name, [(c.name, c.type.kind, c.type.length, c.type.precision, c.type.scale, c.nullable)
                      for c in t.columns])
            for t in cat
        ]

    return key(a) == key(b)
