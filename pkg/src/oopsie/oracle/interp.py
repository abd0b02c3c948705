"""Path-exploring interpreter for subset programs against an in-memory database.

Every ``if`` is explored both ways and every ``while`` is unrolled up to a
budget, whatever the condition evaluates to.  Paths are enumerated by
replay: each run follows a recorded prefix of branch decisions and then
takes the first alternative, and untried alternatives are queued.  That
keeps the interpreter free of state copying.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from decimal import Decimal
from typing import Iterable, Optional

from ..javafront import nodes as N
from ..javafront.api import Receiver, Role
from ..javafront.lexer import SourceSpan
from ..schema import SchemaCatalog, SqlKind
from ..typemap import Conversion, ConversionTable, classify_conversion
from . import minisql


class Category(enum.IntEnum):
    MALFORMED_SQL = 1
    PARAM_INDEX = 2
    COLUMN_ACCESS = 3
    CONVERSION = 4


@dataclass(frozen=True)
class ModeledException:
    category: Category
    span: SourceSpan
    detail: str = field(default="", compare=False)


class InterpreterLimit(Exception):
    pass


class _Unknown:
    def __repr__(self):
        return "?"


UNKNOWN = _Unknown()


# --- the database ----------------------------------------------------------------

_PY_KINDS = {
    SqlKind.CHAR: str, SqlKind.VARCHAR: str, SqlKind.DATE: str, SqlKind.TIME: str,
    SqlKind.TIMESTAMP: str, SqlKind.INTEGER: int, SqlKind.BIGINT: int, SqlKind.SMALLINT: int,
    SqlKind.BOOLEAN: bool, SqlKind.DECIMAL: (int, Decimal), SqlKind.NUMERIC: (int, Decimal),
    SqlKind.DOUBLE: (int, Decimal), SqlKind.REAL: (int, Decimal),
}


class RowsError(ValueError):
    pass


@dataclass
class MiniDb:
    catalog: SchemaCatalog
    rows: dict = field(default_factory=dict)  # lower-case table name -> list of tuples

    def __post_init__(self):
        for t in self.catalog.tables:
            self.rows.setdefault(t.name.lower(), [])
        for name, tuples in self.rows.items():
            table = self.catalog.get(name)
            if table is None:
                raise RowsError(f"rows for unknown table {name}")
            for tup in tuples:
                _conform(table, tup)

    def fresh(self) -> "MiniDb":
        db = object.__new__(MiniDb)
        db.catalog = self.catalog
        db.rows = dict(self.rows)
        return db


def _conform(table, tup):
    if len(tup) != len(table.columns):
        raise RowsError(f"{table.name}: expected {len(table.columns)} values, got {len(tup)}")
    for col, v in zip(table.columns, tup):
        if v is None:
            if not col.nullable:
                raise RowsError(f"{table.name}.{col.name} is NOT NULL")
            continue
        want = _PY_KINDS[col.type.kind]
        if isinstance(v, bool) and want is not bool or not isinstance(v, want):
            raise RowsError(f"{table.name}.{col.name}: {v!r} does not fit {col.type.kind.name}")


def parse_rows(text: str, catalog: SchemaCatalog) -> MiniDb:
    """Read ``table: literal, literal, ...`` lines (``#`` starts a comment)."""
    rows: dict[str, list] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name, sep, rest = line.partition(":")
        if not sep:
            raise RowsError(f"line {lineno}: expected 'table: values'")
        toks = minisql.lex(rest)
        vals, expect_value = [], True
        for kind, v in toks:
            if expect_value:
                if kind == "num":
                    vals.append(Decimal(v) if "." in v else int(v))
                elif kind == "str":
                    vals.append(v[1:-1].replace("''", "'"))
                elif kind == "word" and v.upper() in ("NULL", "TRUE", "FALSE"):
                    vals.append({"NULL": None, "TRUE": True, "FALSE": False}[v.upper()])
                else:
                    raise RowsError(f"line {lineno}: bad literal {v!r}")
                expect_value = False
            elif v == ",":
                expect_value = True
            else:
                raise RowsError(f"line {lineno}: expected ','")
        rows.setdefault(name.strip().lower(), []).append(tuple(vals))
    return MiniDb(catalog, rows)


# --- runtime objects ---------------------------------------------------------------

class Conn:
    pass


class StmtObj:
    def __init__(self, prepared: bool, sql: Optional[minisql.Prepared] = None, opaque: bool = False):
        self.prepared = prepared
        self.sql = sql
        self.opaque = opaque
        self.args: dict[int, object] = {}
        self.current = None


class ResultObj:
    def __init__(self, columns, rows, opaque=False):
        self.columns = columns
        self.rows = rows
        self.pos = -1
        self.opaque = opaque


class _Abort(Exception):
    """The path ends with a runtime failure outside the modeled categories."""


class _Return(Exception):
    def __init__(self, value):
        self.value = value


class _Raise(Exception):
    def __init__(self, exc: ModeledException):
        self.exc = exc


_I64 = 1 << 64


def _wrap(v: int) -> int:
    v &= _I64 - 1
    return v - _I64 if v >= 1 << 63 else v


def java_str(v):
    if v is UNKNOWN:
        return UNKNOWN
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


_DEFAULTS = {"int": 0, "long": 0, "short": 0, "boolean": False, "double": 0, "float": 0}


@dataclass
class PathResult:
    entry: tuple
    choices: tuple
    exception: Optional[ModeledException] = None
    aborted: str = ""
    truncated: bool = False


class _Run:
    def __init__(self, program: "Program", db: MiniDb, table: ConversionTable, budget: int,
                 prefix: tuple):
        self.program = program
        self.db = db.fresh()
        self.table = table
        self.budget = budget
        self.prefix = prefix
        self.trace: list[tuple[bool, bool]] = []
        self.truncated = False
        self.depth = 0

    def choose(self, alt_allowed: bool) -> bool:
        i = len(self.trace)
        taken = self.prefix[i] if i < len(self.prefix) else False
        self.trace.append((taken, alt_allowed))
        return taken

    def fail(self, cat: Category, span, detail):
        raise _Raise(ModeledException(cat, span, detail))

    # --- statements --------------------------------------------------------------
    def invoke(self, method: N.Method, args: list):
        if self.depth > 32:
            raise _Abort("call depth")
        env = {}
        for p, a in zip(method.params, args):
            env[p.slot] = a
        self.depth += 1
        try:
            self.stmt(method.body, env)
        except _Return as r:
            return r.value
        finally:
            self.depth -= 1
        return None

    def stmt(self, s, env):
        if isinstance(s, N.Block):
            for inner in s.stmts:
                self.stmt(inner, env)
        elif isinstance(s, N.LocalDecl):
            env[s.slot] = self.eval(s.init, env) if s.init is not None else _DEFAULTS.get(s.type_name)
        elif isinstance(s, N.Assign):
            v = self.eval(s.value, env)
            if s.op != "=":
                old = env.get(s.target.slot)
                v = self.binary("+" if s.op == "+=" else "-", old, v, s.target.type)
            env[s.target.slot] = v
        elif isinstance(s, N.ExprStmt):
            self.eval(s.expr, env)
        elif isinstance(s, N.Return):
            raise _Return(self.eval(s.value, env) if s.value is not None else None)
        elif isinstance(s, N.If):
            self.eval(s.cond, env)
            if self.choose(True):
                self.stmt(s.then, env)
            elif s.orelse is not None:
                self.stmt(s.orelse, env)
        elif isinstance(s, N.While):
            n = 0
            while True:
                self.eval(s.cond, env)
                if n >= self.budget:
                    self.truncated = True
                if not self.choose(n < self.budget):
                    break
                self.stmt(s.body, env)
                n += 1
        else:
            raise _Abort(f"cannot execute {type(s).__name__}")

    # --- expressions ----------------------------------------------------------------
    def binary(self, op, a, b, type_name=None):
        if op == "+" and (isinstance(a, str) or isinstance(b, str) or type_name == "String"):
            a, b = java_str(a), java_str(b)
            return UNKNOWN if UNKNOWN in (a, b) else a + b
        if a is UNKNOWN or b is UNKNOWN:
            return UNKNOWN
        if op in ("==", "!="):
            eq = a is b if not isinstance(a, (int, str)) else a == b
            return eq if op == "==" else not eq
        if not isinstance(a, int) or not isinstance(b, int):
            return UNKNOWN
        if op == "+":
            return _wrap(a + b)
        if op == "-":
            return _wrap(a - b)
        if op == "*":
            return _wrap(a * b)
        if op in ("/", "%"):
            if b == 0:
                raise _Abort("division by zero")
            q = abs(a) // abs(b) * (1 if (a >= 0) == (b >= 0) else -1)
            return _wrap(q) if op == "/" else _wrap(a - q * b)
        return {"<": a < b, ">": a > b, "<=": a <= b, ">=": a >= b}.get(op, UNKNOWN)

    def eval(self, e, env):
        if isinstance(e, N.Literal):
            if e.type == "double":
                return UNKNOWN
            return e.value
        if isinstance(e, N.Name):
            return env.get(e.slot)
        if isinstance(e, N.ExternalRef):
            return UNKNOWN
        if isinstance(e, N.Binary):
            if e.op in ("&&", "||"):
                a = self.eval(e.left, env)
                if a is (e.op == "||"):
                    return a
                b = self.eval(e.right, env)
                if a is UNKNOWN or b is UNKNOWN:
                    return UNKNOWN
                return b
            return self.binary(e.op, self.eval(e.left, env), self.eval(e.right, env), e.type)
        if isinstance(e, N.Unary):
            v = self.eval(e.operand, env)
            if v is UNKNOWN:
                return UNKNOWN
            if e.op == "!":
                return not v if isinstance(v, bool) else UNKNOWN
            if e.op == "-":
                return _wrap(-v) if isinstance(v, int) else UNKNOWN
            return v
        if isinstance(e, N.IncDec):
            old = env.get(e.target.slot)
            new = _wrap(old + (1 if e.op == "++" else -1)) if isinstance(old, int) else UNKNOWN
            env[e.target.slot] = new
            return new if e.prefix else old
        if isinstance(e, N.New):
            for a in e.args:
                self.eval(a, env)
            return UNKNOWN
        if isinstance(e, N.Call):
            return self.call(e, env)
        return UNKNOWN

    def call(self, c: N.Call, env):
        recv = self.eval(c.receiver, env) if c.receiver is not None else None
        args = [self.eval(a, env) for a in c.args]
        if c.api is None:
            target = self.program.methods.get(c.target) if c.target is not None else None
            if target is not None and target.body is not None:
                return self.invoke(target, args)
            return UNKNOWN
        if recv is UNKNOWN:
            return UNKNOWN
        if recv is None:
            raise _Abort("null receiver")
        api = c.api
        role = api.role
        if isinstance(recv, Conn):
            if role is Role.CREATES_SQL_STATEMENT:
                return self.prepare(args[0] if args else UNKNOWN, c.span, prepared=True)
            if role is Role.NEW_STATEMENT:
                return StmtObj(False)
            return UNKNOWN
        if isinstance(recv, StmtObj):
            if role in (Role.CREATES_AND_RETRIEVES, Role.EXECUTES_WITH_SQL):
                new = self.prepare(args[0] if args else UNKNOWN, c.span, prepared=False)
                recv.sql, recv.opaque, recv.args = new.sql, new.opaque, {}
                res = self.execute(recv)
                if role is Role.CREATES_AND_RETRIEVES:
                    if res is None:
                        raise _Abort("executeQuery on a statement without results")
                    return res
                return UNKNOWN
            if api.method in ("executeQuery", "execute", "executeUpdate", "executeLargeUpdate") \
                    and api.receiver is Receiver.PREPARED_STATEMENT:
                res = self.execute(recv)
                if api.method == "executeQuery":
                    if res is None:
                        raise _Abort("executeQuery on a statement without results")
                    return res
                return UNKNOWN
            if role is Role.RETRIEVES_SQL_RESULT_SET:
                return recv.current
            if role is Role.SETTER:
                self.set_param(recv, c, args)
                return None
            return UNKNOWN
        if isinstance(recv, ResultObj):
            if role is Role.CURSOR_NEXT:
                if recv.opaque:
                    return UNKNOWN
                recv.pos += 1
                return recv.pos < len(recv.rows)
            if role is Role.GETTER:
                return self.get_column(recv, c, args)
            return UNKNOWN
        return UNKNOWN

    # --- JDBC semantics ------------------------------------------------------------------
    def prepare(self, sql, span, prepared: bool) -> StmtObj:
        if not isinstance(sql, str):
            return StmtObj(prepared, opaque=True)
        try:
            p = minisql.prepare(sql, self.db.catalog)
        except minisql.Opaque:
            return StmtObj(prepared, opaque=True)
        except minisql.Malformed as exc:
            self.fail(Category.MALFORMED_SQL, span, str(exc))
        if not prepared and p.holes:
            self.fail(Category.MALFORMED_SQL, span, "placeholder in a plain statement")
        return StmtObj(prepared, p)

    def execute(self, st: StmtObj):
        if st.opaque or st.sql is None:
            st.current = ResultObj(None, [], opaque=True) if st.opaque else None
            return st.current
        key = st.sql.table.name.lower()
        try:
            if st.sql.is_query:
                st.current = ResultObj(st.sql.columns, minisql.run_query(st.sql, self.db.rows[key], st.args))
            else:
                self.db.rows[key], _ = minisql.run_update(st.sql, self.db.rows[key], st.args)
                st.current = None
        except minisql.Opaque:
            st.current = ResultObj(None, [], opaque=True)
        return st.current

    def set_param(self, st: StmtObj, c: N.Call, args):
        if st.opaque or st.sql is None or not args or not isinstance(args[0], int) \
                or isinstance(args[0], bool):
            return
        i = args[0]
        if not 1 <= i <= st.sql.holes:
            self.fail(Category.PARAM_INDEX, c.span, f"parameter {i} of {st.sql.holes}")
        kind = st.sql.params[i - 1]
        if kind is not None and classify_conversion(self.table, "set", kind, c.api.java_type) \
                is not Conversion.RECOMMENDED:
            self.fail(Category.CONVERSION, c.span, f"{c.name} into {kind.name}")
        st.args[i] = args[1] if len(args) > 1 else None

    def get_column(self, rs: ResultObj, c: N.Call, args):
        if rs.opaque or not args:
            return UNKNOWN
        key = args[0]
        if isinstance(key, str):
            idx = next((j for j, (label, _) in enumerate(rs.columns) if label.lower() == key.lower()), None)
            if idx is None:
                self.fail(Category.COLUMN_ACCESS, c.span, f"no column labelled {key}")
        elif isinstance(key, int) and not isinstance(key, bool):
            if not 1 <= key <= len(rs.columns):
                self.fail(Category.COLUMN_ACCESS, c.span, f"column {key} of {len(rs.columns)}")
            idx = key - 1
        else:
            return UNKNOWN
        kind = rs.columns[idx][1]
        if classify_conversion(self.table, "get", kind, c.api.java_type) is not Conversion.RECOMMENDED:
            self.fail(Category.CONVERSION, c.span, f"{c.name} from {kind.name}")
        if 0 <= rs.pos < len(rs.rows):
            v = rs.rows[rs.pos][idx]
            return java_str(v) if c.api.java_type == "String" and v is not None else v
        return _DEFAULTS.get(c.api.java_type)


# --- programs ---------------------------------------------------------------------------

_CONJURE = {"int": 0, "long": 0, "short": 0, "Integer": 0, "Long": 0, "boolean": False,
            "String": ""}


class Program:
    def __init__(self, units: Iterable[N.CompilationUnit]):
        self.units = list(units)
        self.methods = {}
        for u in self.units:
            for m in u.methods():
                self.methods.setdefault(m.key, m)

    def entries(self) -> list[N.Method]:
        out = []
        for m in self.methods.values():
            if m.body is None:
                continue
            if all(p.type_name == "Connection" or p.type_name in _CONJURE for p in m.params):
                out.append(m)
        return out


@dataclass
class ProgramRun:
    paths: list[PathResult]

    def exceptions(self) -> list[ModeledException]:
        return [p.exception for p in self.paths if p.exception is not None]

    def labels(self) -> set[tuple[int, int]]:
        """Distinct (category, line) pairs observed on any path."""
        return {(int(e.category), e.span.line) for e in self.exceptions()}

    @property
    def truncated(self) -> bool:
        return any(p.truncated for p in self.paths)


def run_program(program, db: MiniDb, table: ConversionTable, path_budget: int = 4,
                max_paths: int = 50_000) -> ProgramRun:
    """Explore every entry method of ``program`` along all bounded paths.

    ``program`` is a compilation unit, a list of them, or a :class:`Program`.
    Raises :class:`InterpreterLimit` when more than ``max_paths`` paths
    would be needed.
    """
    if isinstance(program, N.CompilationUnit):
        program = Program([program])
    elif not isinstance(program, Program):
        program = Program(program)
    results = []
    for m in program.entries():
        stack = [()]
        while stack:
            prefix = stack.pop()
            if len(results) >= max_paths:
                raise InterpreterLimit(f"more than {max_paths} paths")
            run = _Run(program, db, table, path_budget, prefix)
            args = [Conn() if p.type_name == "Connection" else _CONJURE[p.type_name] for p in m.params]
            res = PathResult(m.key, ())
            try:
                run.invoke(m, args)
            except _Raise as r:
                res.exception = r.exc
            except _Abort as a:
                res.aborted = str(a)
            res.choices = tuple(t for t, _ in run.trace)
            res.truncated = run.truncated
            results.append(res)
            for j in range(len(run.trace) - 1, len(prefix) - 1, -1):
                taken, alt = run.trace[j]
                if not taken and alt:
                    stack.append(res.choices[:j] + (True,))
    return ProgramRun(results)


def parse_expect(text: str) -> set[tuple[int, int]]:
    """``category line`` pairs, one per line."""
    out = set()
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            cat, ln = line.split()
            out.add((int(cat), int(ln)))
    return out


def render_expect(labels: Iterable[tuple[int, int]]) -> str:
    return "".join(f"{c} {ln}\n" for c, ln in sorted(labels, key=lambda x: (x[1], x[0])))
