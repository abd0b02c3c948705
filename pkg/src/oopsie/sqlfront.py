"""Parser and schema-aware analyzer for CRUD SQL with ``?`` placeholders.

The accepted subset::

    select := SELECT (* | item (, item)*) FROM table [alias] [WHERE pred]
              [ORDER BY colref [ASC|DESC] (, ...)*]
    item   := colref [AS ident]
    insert := INSERT INTO table [(ident, ...)] VALUES row (, row)*
    update := UPDATE table [alias] SET colref = operand (, ...)* [WHERE pred]
    delete := DELETE FROM table [alias] [WHERE pred]
    pred   := pred OR pred | pred AND pred | NOT pred | ( pred )
            | operand cmp operand | operand [NOT] BETWEEN operand AND operand
            | operand [NOT] IN ( operand, ... ) | operand [NOT] LIKE operand
            | operand IS [NOT] NULL
    operand:= term ((+ | - | * | / | ||) term)*
    term   := colref | ? | number | 'string' | NULL | TRUE | FALSE | - term

Joins, grouping, aggregates, subqueries, set operations, LIMIT and WITH are
recognized and rejected with :class:`SqlUnsupportedConstruct`.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass, field
from typing import Optional, Union

from .schema import SchemaCatalog, SqlScalarType, Table


class SqlError(Exception):
    pass


class SqlSyntaxError(SqlError):
    def __init__(self, position: int, expected: str, found: str = ""):
        found_text = repr(found) if found else "end of input"
        super().__init__(f"expected {expected} at offset {position}, found {found_text}")
        self.position = position
        self.expected = expected
        self.found = found


class SqlUnsupportedConstruct(SqlError):
    def __init__(self, token: str, position: int = -1):
        super().__init__(f"unsupported SQL construct {token!r}")
        self.token = token
        self.position = position


class SqlAnalysisError(SqlError):
    """Statement parses but does not fit the schema."""


class UnknownTable(SqlAnalysisError):
    def __init__(self, name: str):
        super().__init__(f"unknown table {name!r}")
        self.name = name


class UnknownColumn(SqlAnalysisError):
    def __init__(self, table: str, name: str):
        super().__init__(f"unknown column {name!r} in table {table!r}")
        self.table = table
        self.name = name


class ArityMismatch(SqlAnalysisError):
    def __init__(self, expected: int, actual: int):
        super().__init__(f"{expected} target columns but {actual} values")
        self.expected = expected
        self.actual = actual


class DuplicateColumnRef(SqlAnalysisError):
    def __init__(self, name: str):
        super().__init__(f"column {name!r} listed more than once")
        self.name = name


class UntypablePlaceholder(SqlError):
    """No typing rule gives this placeholder a type; treated as unsupported."""

    def __init__(self, ordinal: int):
        super().__init__(f"cannot infer a type for placeholder {ordinal}")
        self.ordinal = ordinal


# --- tokens -----------------------------------------------------------------

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+|--[^\n]*)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_$]*)
  | (?P<num>\d+(?:\.\d+)?)
  | (?P<str>'(?:[^']|'')*')
  | (?P<qident>"[^"]*"|`[^`]*`)
  | (?P<op><>|!=|<=|>=|\|\||[=<>(),.*;?+\-/%])
    """,
    re.VERBOSE,
)

KEYWORDS = frozenset(
    """SELECT FROM WHERE INSERT INTO VALUES UPDATE SET DELETE AND OR NOT BETWEEN IN
    LIKE IS NULL AS TRUE FALSE ORDER BY ASC DESC""".split()
)

UNSUPPORTED_KEYWORDS = frozenset(
    """JOIN INNER LEFT RIGHT FULL OUTER CROSS NATURAL ON USING GROUP HAVING LIMIT
    OFFSET FETCH UNION INTERSECT EXCEPT MINUS WITH DISTINCT EXISTS CASE ALL ANY SOME
    RETURNING WINDOW OVER""".split()
)


@dataclass(frozen=True)
class Token:
    kind: str  # ident, num, str, op, eof
    text: str
    pos: int

    @property
    def upper(self) -> str:
        return self.text.upper()

    def is_kw(self, *words: str) -> bool:
        return self.kind == "ident" and self.text.upper() in words


def tokenize(text: str) -> list[Token]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise SqlSyntaxError(pos, "a SQL token", text[pos])
        kind = m.lastgroup
        if kind == "qident":
            raise SqlUnsupportedConstruct("quoted identifier", pos)
        if kind != "ws":
            toks.append(Token(kind, m.group(), pos))
        pos = m.end()
    toks.append(Token("eof", "", len(text)))
    return toks


def placeholder_count(text: str) -> int:
    """Number of ``?`` outside string literals and comments."""
    count = 0
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "'":
            j = i + 1
            while j < n:
                if text[j] == "'":
                    if j + 1 < n and text[j + 1] == "'":
                        j += 2
                        continue
                    break
                j += 1
            i = j + 1
        elif ch == "-" and text.startswith("--", i):
            nl = text.find("\n", i)
            i = n if nl < 0 else nl + 1
        elif ch == "?":
            count += 1
            i += 1
        else:
            i += 1
    return count


# --- AST --------------------------------------------------------------------

@dataclass(frozen=True)
class ColumnRef:
    name: str
    qualifier: Optional[str] = None
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class Placeholder:
    ordinal: int
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class Literal:
    value: object
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class Arith:
    op: str
    left: "Operand"
    right: "Operand"


@dataclass(frozen=True)
class Negate:
    operand: "Operand"


Operand = Union[ColumnRef, Placeholder, Literal, Arith, Negate]


@dataclass(frozen=True)
class Compare:
    op: str
    left: Operand
    right: Operand


@dataclass(frozen=True)
class Between:
    operand: Operand
    low: Operand
    high: Operand
    negated: bool = False


@dataclass(frozen=True)
class InList:
    operand: Operand
    items: tuple
    negated: bool = False


@dataclass(frozen=True)
class Like:
    operand: Operand
    pattern: Operand
    negated: bool = False


@dataclass(frozen=True)
class IsNull:
    operand: Operand
    negated: bool = False


@dataclass(frozen=True)
class And:
    left: "Pred"
    right: "Pred"


@dataclass(frozen=True)
class Or:
    left: "Pred"
    right: "Pred"


@dataclass(frozen=True)
class Not:
    operand: "Pred"


Pred = Union[Compare, Between, InList, Like, IsNull, And, Or, Not]


@dataclass(frozen=True)
class TableRef:
    name: str
    alias: Optional[str] = None
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class SelectItem:
    column: ColumnRef
    alias: Optional[str] = None


@dataclass(frozen=True)
class OrderItem:
    column: ColumnRef
    descending: bool = False


@dataclass(frozen=True)
class SelectStmt:
    items: Optional[tuple]  # None means ``*``
    table: TableRef
    where: Optional[Pred] = None
    order_by: tuple = ()
    placeholders: int = 0
    kind: str = "SELECT"


@dataclass(frozen=True)
class InsertStmt:
    table: TableRef
    columns: Optional[tuple]
    rows: tuple
    placeholders: int = 0
    kind: str = "INSERT"


@dataclass(frozen=True)
class UpdateStmt:
    table: TableRef
    assignments: tuple  # of (ColumnRef, Operand)
    where: Optional[Pred] = None
    placeholders: int = 0
    kind: str = "UPDATE"


@dataclass(frozen=True)
class DeleteStmt:
    table: TableRef
    where: Optional[Pred] = None
    placeholders: int = 0
    kind: str = "DELETE"


SqlAst = Union[SelectStmt, InsertStmt, UpdateStmt, DeleteStmt]

CMP_OPS = ("=", "<>", "!=", "<", "<=", ">", ">=")


# --- parser -----------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0
        self.ordinal = 0

    def peek(self, k: int = 0) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def advance(self) -> Token:
        tok = self.toks[self.i]
        if tok.kind != "eof":
            self.i += 1
        return tok

    def fail(self, expected: str):
        tok = self.peek()
        if tok.kind == "ident" and tok.upper in UNSUPPORTED_KEYWORDS:
            raise SqlUnsupportedConstruct(tok.upper, tok.pos)
        raise SqlSyntaxError(tok.pos, expected, tok.text)

    def accept_kw(self, *words: str) -> Optional[Token]:
        if self.peek().is_kw(*words):
            return self.advance()
        return None

    def expect_kw(self, word: str) -> Token:
        tok = self.accept_kw(word)
        if tok is None:
            self.fail(word)
        return tok

    def accept_op(self, *ops: str) -> Optional[Token]:
        tok = self.peek()
        if tok.kind == "op" and tok.text in ops:
            return self.advance()
        return None

    def expect_op(self, op: str) -> Token:
        tok = self.accept_op(op)
        if tok is None:
            self.fail(repr(op))
        return tok

    def ident(self, what: str = "identifier") -> Token:
        tok = self.peek()
        if tok.kind != "ident":
            self.fail(what)
        if tok.upper in KEYWORDS or tok.upper in UNSUPPORTED_KEYWORDS:
            self.fail(what)
        return self.advance()

    def parse(self) -> SqlAst:
        tok = self.peek()
        if tok.is_kw("SELECT"):
            stmt = self.select()
        elif tok.is_kw("INSERT"):
            stmt = self.insert()
        elif tok.is_kw("UPDATE"):
            stmt = self.update()
        elif tok.is_kw("DELETE"):
            stmt = self.delete()
        elif tok.is_kw("WITH"):
            raise SqlUnsupportedConstruct("WITH", tok.pos)
        elif tok.kind == "ident" and tok.upper in ("CREATE", "DROP", "ALTER", "TRUNCATE", "SHOW", "CALL"):
            raise SqlUnsupportedConstruct(tok.upper, tok.pos)
        else:
            self.fail("SELECT, INSERT, UPDATE or DELETE")
        self.accept_op(";")
        if self.peek().kind != "eof":
            self.fail("end of statement")
        return stmt

    # statements

    def select(self) -> SelectStmt:
        self.expect_kw("SELECT")
        if self.peek().is_kw("DISTINCT", "ALL"):
            raise SqlUnsupportedConstruct(self.peek().upper, self.peek().pos)
        items: Optional[list] = None
        if self.accept_op("*") is None:
            items = [self.select_item()]
            while self.accept_op(","):
                items.append(self.select_item())
        self.expect_kw("FROM")
        table = self.table_ref(allow_alias=True)
        if self.peek().kind == "op" and self.peek().text == ",":
            raise SqlUnsupportedConstruct("multiple tables", self.peek().pos)
        where = self.where()
        order = []
        if self.accept_kw("ORDER"):
            self.expect_kw("BY")
            order.append(self.order_item())
            while self.accept_op(","):
                order.append(self.order_item())
        return SelectStmt(tuple(items) if items is not None else None, table, where,
                          tuple(order), self.ordinal)

    def select_item(self) -> SelectItem:
        tok = self.peek()
        if tok.kind == "ident" and self.peek(1).kind == "op" and self.peek(1).text == "(":
            raise SqlUnsupportedConstruct(f"function {tok.text}", tok.pos)
        if tok.kind == "op" and tok.text == "(":
            raise SqlUnsupportedConstruct("expression in select list", tok.pos)
        if tok.kind in ("num", "str") or tok.is_kw("NULL", "TRUE", "FALSE", "CASE"):
            raise SqlUnsupportedConstruct("expression in select list", tok.pos)
        if tok.kind == "op" and tok.text == "?":
            raise SqlUnsupportedConstruct("placeholder in select list", tok.pos)
        col = self.colref()
        nxt = self.peek()
        if nxt.kind == "op" and nxt.text in ("+", "-", "*", "/", "||", "%"):
            raise SqlUnsupportedConstruct("expression in select list", nxt.pos)
        alias = None
        if self.accept_kw("AS"):
            alias = self.ident("alias").text
        return SelectItem(col, alias)

    def order_item(self) -> OrderItem:
        col = self.colref()
        desc = False
        if self.accept_kw("DESC"):
            desc = True
        else:
            self.accept_kw("ASC")
        return OrderItem(col, desc)

    def table_ref(self, allow_alias: bool) -> TableRef:
        if self.peek().kind == "op" and self.peek().text == "(":
            raise SqlUnsupportedConstruct("subquery", self.peek().pos)
        tok = self.ident("table name")
        alias = None
        if allow_alias:
            if self.accept_kw("AS"):
                alias = self.ident("alias").text
            elif self.peek().kind == "ident" and self.peek().upper not in KEYWORDS \
                    and self.peek().upper not in UNSUPPORTED_KEYWORDS:
                alias = self.advance().text
        return TableRef(tok.text, alias, tok.pos)

    def where(self) -> Optional[Pred]:
        if self.accept_kw("WHERE"):
            return self.pred()
        return None

    def insert(self) -> InsertStmt:
        self.expect_kw("INSERT")
        self.expect_kw("INTO")
        table = self.table_ref(allow_alias=False)
        cols = None
        if self.accept_op("("):
            cols = [self.colref_plain()]
            while self.accept_op(","):
                cols.append(self.colref_plain())
            self.expect_op(")")
        if self.peek().is_kw("SELECT"):
            raise SqlUnsupportedConstruct("INSERT ... SELECT", self.peek().pos)
        self.expect_kw("VALUES")
        rows = [self.value_row()]
        while self.accept_op(","):
            rows.append(self.value_row())
        return InsertStmt(table, tuple(cols) if cols is not None else None, tuple(rows), self.ordinal)

    def value_row(self) -> tuple:
        self.expect_op("(")
        vals = [self.operand()]
        while self.accept_op(","):
            vals.append(self.operand())
        self.expect_op(")")
        return tuple(vals)

    def update(self) -> UpdateStmt:
        self.expect_kw("UPDATE")
        table = self.table_ref(allow_alias=True)
        self.expect_kw("SET")
        assigns = [self.assignment()]
        while self.accept_op(","):
            assigns.append(self.assignment())
        if self.peek().is_kw("FROM"):
            raise SqlUnsupportedConstruct("UPDATE ... FROM", self.peek().pos)
        where = self.where()
        return UpdateStmt(table, tuple(assigns), where, self.ordinal)

    def assignment(self):
        col = self.colref()
        self.expect_op("=")
        return (col, self.operand())

    def delete(self) -> DeleteStmt:
        self.expect_kw("DELETE")
        self.expect_kw("FROM")
        table = self.table_ref(allow_alias=True)
        where = self.where()
        return DeleteStmt(table, where, self.ordinal)

    # predicates

    def pred(self) -> Pred:
        left = self.pred_and()
        while self.accept_kw("OR"):
            left = Or(left, self.pred_and())
        return left

    def pred_and(self) -> Pred:
        left = self.pred_not()
        while self.accept_kw("AND"):
            left = And(left, self.pred_not())
        return left

    def pred_not(self) -> Pred:
        if self.accept_kw("NOT"):
            return Not(self.pred_not())
        if self.peek().is_kw("EXISTS"):
            raise SqlUnsupportedConstruct("EXISTS", self.peek().pos)
        if self.peek().kind == "op" and self.peek().text == "(":
            if self.peek(1).is_kw("SELECT"):
                raise SqlUnsupportedConstruct("subquery", self.peek(1).pos)
            self.advance()
            inner = self.pred()
            self.expect_op(")")
            return inner
        return self.comparison()

    def comparison(self) -> Pred:
        left = self.operand()
        tok = self.peek()
        if tok.kind == "op" and tok.text in CMP_OPS:
            self.advance()
            op = "<>" if tok.text == "!=" else tok.text
            if self.peek().is_kw("ANY", "ALL", "SOME"):
                raise SqlUnsupportedConstruct(self.peek().upper, self.peek().pos)
            return Compare(op, left, self.operand())
        if self.accept_kw("IS"):
            neg = self.accept_kw("NOT") is not None
            self.expect_kw("NULL")
            return IsNull(left, neg)
        neg = self.accept_kw("NOT") is not None
        if self.accept_kw("BETWEEN"):
            low = self.operand()
            self.expect_kw("AND")
            return Between(left, low, self.operand(), neg)
        if self.accept_kw("IN"):
            self.expect_op("(")
            if self.peek().is_kw("SELECT"):
                raise SqlUnsupportedConstruct("subquery", self.peek().pos)
            items = [self.operand()]
            while self.accept_op(","):
                items.append(self.operand())
            self.expect_op(")")
            return InList(left, tuple(items), neg)
        if self.accept_kw("LIKE"):
            return Like(left, self.operand(), neg)
        self.fail("comparison operator")

    def operand(self) -> Operand:
        left = self.term()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in ("+", "-", "*", "/", "||", "%"):
                self.advance()
                left = Arith(tok.text, left, self.term())
            else:
                return left

    def term(self) -> Operand:
        tok = self.peek()
        if tok.kind == "op" and tok.text == "?":
            self.advance()
            self.ordinal += 1
            return Placeholder(self.ordinal, tok.pos)
        if tok.kind == "op" and tok.text == "-":
            self.advance()
            return Negate(self.term())
        if tok.kind == "num":
            self.advance()
            return Literal(float(tok.text) if "." in tok.text else int(tok.text), tok.pos)
        if tok.kind == "str":
            self.advance()
            return Literal(tok.text[1:-1].replace("''", "'"), tok.pos)
        if tok.is_kw("NULL"):
            self.advance()
            return Literal(None, tok.pos)
        if tok.is_kw("TRUE", "FALSE"):
            self.advance()
            return Literal(tok.upper == "TRUE", tok.pos)
        if tok.kind == "op" and tok.text == "(":
            if self.peek(1).is_kw("SELECT"):
                raise SqlUnsupportedConstruct("subquery", self.peek(1).pos)
            raise SqlUnsupportedConstruct("parenthesized expression", tok.pos)
        if tok.kind == "ident" and self.peek(1).kind == "op" and self.peek(1).text == "(":
            raise SqlUnsupportedConstruct(f"function {tok.text}", tok.pos)
        if tok.is_kw("CASE"):
            raise SqlUnsupportedConstruct("CASE", tok.pos)
        return self.colref()

    def colref(self) -> ColumnRef:
        first = self.ident("column name")
        if self.accept_op("."):
            if self.peek().kind == "op" and self.peek().text == "*":
                raise SqlUnsupportedConstruct("qualified *", self.peek().pos)
            second = self.ident("column name")
            return ColumnRef(second.text, first.text, first.pos)
        return ColumnRef(first.text, None, first.pos)

    def colref_plain(self) -> ColumnRef:
        tok = self.ident("column name")
        return ColumnRef(tok.text, None, tok.pos)


def parse_sql(text: str) -> SqlAst:
    """Parse one statement of the subset.

    Raises :class:`SqlSyntaxError` for text that is not SQL of the subset and
    :class:`SqlUnsupportedConstruct` for recognized SQL outside it.
    """
    return _Parser(text).parse()


# --- analysis ---------------------------------------------------------------

@dataclass(frozen=True)
class QuerySignature:
    params: tuple[SqlScalarType, ...]
    out: tuple[tuple[str, SqlScalarType], ...] = ()

    # ``in`` is a keyword; expose it under a readable alias too
    @property
    def in_types(self) -> tuple[SqlScalarType, ...]:
        return self.params


class _Scope:
    def __init__(self, table: Table, ref: TableRef):
        self.table = table
        self.ref = ref

    def resolve(self, col: ColumnRef):
        if col.qualifier is not None:
            names = {self.table.name.lower()}
            if self.ref.alias:
                names = {self.ref.alias.lower()}
            if col.qualifier.lower() not in names:
                raise UnknownTable(col.qualifier)
        c = self.table.column(col.name)
        if c is None:
            raise UnknownColumn(self.table.name, col.name)
        return c


def _placeholders_in(node) -> list[Placeholder]:
    out = []

    def walk(n):
        if isinstance(n, Placeholder):
            out.append(n)
        elif isinstance(n, tuple):
            for x in n:
                walk(x)
        elif hasattr(n, "__dataclass_fields__") and not isinstance(n, (ColumnRef, Literal)):
            for name in n.__dataclass_fields__:
                walk(getattr(n, name))

    walk(node)
    return out


def _type_predicate(pred, scope: _Scope, types: dict[int, SqlScalarType]):
    if pred is None:
        return
    if isinstance(pred, (And, Or)):
        _type_predicate(pred.left, scope, types)
        _type_predicate(pred.right, scope, types)
    elif isinstance(pred, Not):
        _type_predicate(pred.operand, scope, types)
    elif isinstance(pred, Compare):
        _check_operand(pred.left, scope)
        _check_operand(pred.right, scope)
        if isinstance(pred.left, ColumnRef) and isinstance(pred.right, Placeholder):
            types[pred.right.ordinal] = scope.resolve(pred.left).type
        elif isinstance(pred.left, Placeholder) and isinstance(pred.right, ColumnRef):
            types[pred.left.ordinal] = scope.resolve(pred.right).type
    elif isinstance(pred, Between):
        for o in (pred.operand, pred.low, pred.high):
            _check_operand(o, scope)
        if isinstance(pred.operand, ColumnRef):
            t = scope.resolve(pred.operand).type
            for o in (pred.low, pred.high):
                if isinstance(o, Placeholder):
                    types[o.ordinal] = t
    elif isinstance(pred, InList):
        _check_operand(pred.operand, scope)
        for o in pred.items:
            _check_operand(o, scope)
        if isinstance(pred.operand, ColumnRef):
            t = scope.resolve(pred.operand).type
            for o in pred.items:
                if isinstance(o, Placeholder):
                    types[o.ordinal] = t
    elif isinstance(pred, Like):
        _check_operand(pred.operand, scope)
        _check_operand(pred.pattern, scope)
    elif isinstance(pred, IsNull):
        _check_operand(pred.operand, scope)


def _check_operand(op, scope: _Scope):
    if isinstance(op, ColumnRef):
        scope.resolve(op)
    elif isinstance(op, Arith):
        _check_operand(op.left, scope)
        _check_operand(op.right, scope)
    elif isinstance(op, Negate):
        _check_operand(op.operand, scope)


def analyze_query(ast: SqlAst, catalog: SchemaCatalog) -> QuerySignature:
    """Derive the parameter types and result columns of ``ast``.

    Raises :class:`UnknownTable`, :class:`UnknownColumn`,
    :class:`ArityMismatch` or :class:`UntypablePlaceholder`.
    """
    table = catalog.get(ast.table.name)
    if table is None:
        raise UnknownTable(ast.table.name)
    scope = _Scope(table, ast.table)
    types: dict[int, SqlScalarType] = {}
    out: list[tuple[str, SqlScalarType]] = []

    if isinstance(ast, SelectStmt):
        if ast.items is None:
            out = [(c.name, c.type) for c in table.columns]
        else:
            seen = set()
            for item in ast.items:
                col = scope.resolve(item.column)
                name = item.alias or col.name
                if name.lower() in seen:
                    raise SqlUnsupportedConstruct(f"duplicate result column {name}")
                seen.add(name.lower())
                out.append((name, col.type))
        _type_predicate(ast.where, scope, types)
        for item in ast.order_by:
            scope.resolve(item.column)
    elif isinstance(ast, InsertStmt):
        if ast.columns is None:
            targets = list(table.columns)
        else:
            targets = []
            seen = set()
            for ref in ast.columns:
                col = scope.resolve(ref)
                if col.name.lower() in seen:
                    raise DuplicateColumnRef(col.name)
                seen.add(col.name.lower())
                targets.append(col)
        for row in ast.rows:
            if len(row) != len(targets):
                raise ArityMismatch(len(targets), len(row))
            for col, val in zip(targets, row):
                _check_operand(val, scope)
                if isinstance(val, Placeholder):
                    types[val.ordinal] = col.type
    elif isinstance(ast, UpdateStmt):
        for ref, val in ast.assignments:
            col = scope.resolve(ref)
            _check_operand(val, scope)
            if isinstance(val, Placeholder):
                types[val.ordinal] = col.type
        _type_predicate(ast.where, scope, types)
    elif isinstance(ast, DeleteStmt):
        _type_predicate(ast.where, scope, types)
    else:  # pragma: no cover
        raise TypeError(f"not a SQL AST: {ast!r}")

    params = []
    for ordinal in range(1, ast.placeholders + 1):
        if ordinal not in types:
            raise UntypablePlaceholder(ordinal)
        params.append(types[ordinal])
    return QuerySignature(tuple(params), tuple(out))


@functools.lru_cache(maxsize=4096)
def signature_of(text: str, catalog: SchemaCatalog) -> QuerySignature:
    """Parse and analyze ``text``; cached per (text, catalog)."""
    return analyze_query(parse_sql(text), catalog)


def placeholders(ast: SqlAst) -> list[Placeholder]:
    """All placeholder nodes of ``ast`` in textual order."""
    return sorted(_placeholders_in(ast), key=lambda p: p.ordinal)
