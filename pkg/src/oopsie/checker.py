"""Flow-sensitive checking of JDBC getter and setter calls.

Each method is checked on its own.  Constant propagation supplies the SQL
strings and index arguments; a second fixpoint tracks the ``@Sql``
qualifier of every Statement, PreparedStatement and ResultSet local.
Diagnostics are produced in a final pass over the solved states, so every
call is verified exactly once.
"""

from __future__ import annotations

import enum
import functools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, fields
from typing import Iterable, Mapping, Optional, Union

from . import constprop as cp
from .diagnostics import Code, Diagnostic, Severity
from .javafront import nodes as N
from .javafront.api import SQL_TYPES, Role
from .javafront.cfg import build_cfg
from .javafront.lexer import JavaSyntaxError, SourceSpan
from .javafront.parser import is_string_type, parse_java
from .schema import SchemaCatalog
from .sqlfront import (SqlError, SqlUnsupportedConstruct, UntypablePlaceholder,
                       placeholder_count, signature_of)
from .sqltype import (BOTTOM, UNKNOWN, UNSUPPORTED, AnnotationError, Sql,
                      SqlQualifier, is_subtype, lub, parse_sql_annotation)
from .typemap import Conversion, ConversionTable, accessor_method, classify_conversion


class Mode(enum.Enum):
    SOUND = "sound"
    DEGRADED = "degraded"


def sql_typed(type_name: Optional[str]) -> bool:
    return type_name is not None and type_name.rsplit(".", 1)[-1] in SQL_TYPES


# --- SQL strings -> qualifiers ------------------------------------------------

@dataclass(frozen=True)
class _SqlOutcome:
    qualifier: Optional[Sql]
    code: Optional[Code] = None
    reason: str = ""


@functools.lru_cache(maxsize=8192)
def _analyze_sql(text: str, catalog: SchemaCatalog, prepared: bool) -> _SqlOutcome:
    if not prepared and placeholder_count(text):
        return _SqlOutcome(None, Code.MALFORMED_SQL, "placeholders need a prepared statement")
    try:
        sig = signature_of(text, catalog)
    except (SqlUnsupportedConstruct, UntypablePlaceholder) as exc:
        return _SqlOutcome(None, Code.UNSUPPORTED_SQL, str(exc))
    except SqlError as exc:
        return _SqlOutcome(None, Code.MALFORMED_SQL, str(exc))
    return _SqlOutcome(Sql(tuple(sig.params), tuple(sig.out)))


def _mode_severity(mode: Mode) -> Severity:
    return Severity.ERROR if mode is Mode.SOUND else Severity.WARNING


def introduce_statement_qualifier(span: SourceSpan, value: cp.ConstValue, catalog: SchemaCatalog,
                                  mode: Mode, prepared: bool = True):
    """Qualifier for a statement created or executed with SQL ``value``.

    Returns ``(qualifier, diagnostics)``.
    """
    if value is cp.BOTTOM:
        return BOTTOM, []
    if value is cp.TOP or any(not isinstance(s, str) for s in value.values):
        d = Diagnostic(Code.UNEXTRACTABLE_SQL, _mode_severity(mode), span,
                       "SQL string is not a compile-time constant")
        return UNSUPPORTED, [d]
    outcomes = [(s, _analyze_sql(s, catalog, prepared)) for s in sorted(value.values)]
    failed = [(s, o) for s, o in outcomes if o.qualifier is None]
    if not failed:
        q = BOTTOM
        for _, o in outcomes:
            q = lub(q, o.qualifier)
        return q, []
    malformed = [(s, o) for s, o in failed if o.code is Code.MALFORMED_SQL]
    if malformed:
        s, o = malformed[0]
        d = Diagnostic(Code.MALFORMED_SQL, Severity.ERROR, span, f"malformed SQL: {o.reason}",
                       actual=s)
    else:
        s, o = failed[0]
        d = Diagnostic(Code.UNSUPPORTED_SQL, _mode_severity(mode), span,
                       f"unsupported SQL: {o.reason}", actual=s)
    return UNSUPPORTED, [d]


# --- access statistics ----------------------------------------------------------

@dataclass
class AccessStats:
    getters_checked: int = 0
    getters_flagged: int = 0
    setters_checked: int = 0
    setters_flagged: int = 0
    out_of_scope: int = 0
    unchecked: int = 0

    def __add__(self, other: "AccessStats") -> "AccessStats":
        return AccessStats(*(getattr(self, f.name) + getattr(other, f.name) for f in fields(self)))

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


# --- verification of accesses ---------------------------------------------------------

def _index_values(value: cp.ConstValue, want_str: bool):
    """Members of ``value`` usable as an index, or None when unextractable."""
    if value is cp.TOP:
        return None
    if value is cp.BOTTOM:
        return []
    ok = str if want_str else int
    vals = [v for v in value.values if isinstance(v, ok) and not isinstance(v, bool)]
    if len(vals) != len(value.values):
        return None
    return sorted(vals)


def _accessors(direction: str, names: Iterable[str]) -> str:
    return ", ".join(sorted(accessor_method(direction, j) for j in names))


def verify_access(call: N.Call, recv: SqlQualifier, index: cp.ConstValue, table: ConversionTable,
                  mode: Mode, supported_as_warning: bool = False) -> list[Diagnostic]:
    """Diagnostics for a getter or setter ``call`` on a receiver qualified ``recv``."""
    api = call.api
    span = call.span
    if recv is BOTTOM:
        return []
    if recv is UNSUPPORTED:
        if mode is Mode.SOUND:
            return [Diagnostic(Code.UNCHECKED_ACCESS, Severity.ERROR, span,
                               f"{call.name} on a statement whose SQL could not be checked")]
        return []
    if not isinstance(recv, Sql):
        if mode is Mode.SOUND:
            return [Diagnostic(Code.NONLOCAL_ACCESS, Severity.ERROR, span,
                               f"{call.name} on a receiver created outside this method")]
        return [Diagnostic(Code.OUT_OF_SCOPE, Severity.INFO, span,
                           f"{call.name} not checked: receiver created outside this method")]

    setter = api.role is Role.SETTER
    by_name = not setter and call.args and is_string_type(call.args[0].type)
    members = _index_values(index, bool(by_name))
    if members is None:
        what = "column label" if by_name else ("parameter index" if setter else "column index")
        return [Diagnostic(Code.UNEXTRACTABLE_INDEX, _mode_severity(mode), span,
                           f"{what} of {call.name} is not a compile-time constant")]

    out: dict[Code, Diagnostic] = {}

    def add(d: Diagnostic):
        out.setdefault(d.code, d)

    direction = "set" if setter else "get"
    for m in members:
        if setter:
            n = len(recv.params)
            if not 1 <= m <= n:
                add(Diagnostic(Code.PARAM_INDEX_OOB, Severity.ERROR, span,
                               f"parameter index {m} out of bounds (statement has {n} parameters)"))
                continue
            sql_t = recv.params[m - 1]
            where = f"parameter {m}"
        elif by_name:
            hit = recv.column(m)
            if hit is None:
                add(Diagnostic(Code.COLUMN_NAME_UNKNOWN, Severity.ERROR, span,
                               f"unknown column label '{m}'"))
                continue
            sql_t = hit[1]
            where = f"column '{m}'"
        else:
            n = len(recv.out)
            if not 1 <= m <= n:
                add(Diagnostic(Code.COLUMN_INDEX_OOB, Severity.ERROR, span,
                               f"column index {m} out of bounds (result has {n} columns)"))
                continue
            sql_t = recv.out[m - 1][1]
            where = f"column {m}"
        conv = classify_conversion(table, direction, sql_t, api.java_type)
        if conv is Conversion.RECOMMENDED:
            continue
        sev = Severity.WARNING if conv is Conversion.SUPPORTED_ONLY and supported_as_warning else Severity.ERROR
        code = Code.SETTER_TYPE_MISMATCH if setter else Code.GETTER_TYPE_MISMATCH
        level = "supported but not recommended" if conv is Conversion.SUPPORTED_ONLY else "not supported"
        add(Diagnostic(code, sev, span,
                       f"{call.name} on {where} of type {sql_t.kind.name}: conversion {level}",
                       expected=_accessors(direction, table.recommended(direction, sql_t)) or None,
                       actual=call.name))
    return list(out.values())


# --- manual annotations -----------------------------------------------------------------

@dataclass(frozen=True)
class MethodAnnotations:
    params: Mapping[int, Sql] = field(default_factory=dict)
    returns: Optional[Sql] = None


class AnnotationIndex:
    """Parsed ``@Sql`` annotations of every analyzed method, keyed by
    ``(class, name, arity)``."""

    def __init__(self):
        self._by_key: dict[tuple, MethodAnnotations] = {}
        self.problems: list[Diagnostic] = []

    @classmethod
    def build(cls, units: Iterable[N.CompilationUnit]) -> "AnnotationIndex":
        idx = cls()
        for unit in units:
            for m in unit.methods():
                idx._add(m)
        return idx

    def _parse(self, decl: N.SqlAnnotationDecl, type_name: str) -> Optional[Sql]:
        try:
            q = parse_sql_annotation(decl.qualifier_text)
        except AnnotationError as exc:
            self.problems.append(Diagnostic(Code.SUBSET_VIOLATION, Severity.WARNING, decl.span,
                                            f"invalid @Sql annotation ignored: {exc}"))
            return None
        if not sql_typed(type_name):
            self.problems.append(Diagnostic(Code.SUBSET_VIOLATION, Severity.WARNING, decl.span,
                                            f"@Sql annotation on type {type_name} ignored"))
            return None
        return q

    def _add(self, m: N.Method):
        params = {}
        for i, p in enumerate(m.params):
            if p.annotation is not None:
                q = self._parse(p.annotation, p.type_name)
                if q is not None:
                    params[i] = q
        ret = None
        if m.return_annotation is not None:
            ret = self._parse(m.return_annotation, m.return_type)
        if params or ret is not None:
            self._by_key[m.key] = MethodAnnotations(params, ret)

    def get(self, key) -> MethodAnnotations:
        return self._by_key.get(key, _NO_ANNOTATIONS)


_NO_ANNOTATIONS = MethodAnnotations()


# --- qualifier states ------------------------------------------------------------------------

# slot -> qualifier; a missing slot is Unknown; None marks unreached code
QualifierState = Optional[dict]


def join_state(a: QualifierState, b: QualifierState) -> QualifierState:
    if a is None:
        return b
    if b is None:
        return a
    out = {}
    for slot in a.keys() & b.keys():
        q = lub(a[slot], b[slot])
        if q is not UNKNOWN:
            out[slot] = q
    return out


@dataclass(frozen=True)
class CheckContext:
    catalog: SchemaCatalog
    table: ConversionTable
    mode: Mode = Mode.SOUND
    annotations: AnnotationIndex = field(default_factory=AnnotationIndex)
    supported_as_warning: bool = False


class _Transfer:
    """Qualifier transfer over one statement; collects diagnostics when
    ``emit`` is set."""

    def __init__(self, method: N.Method, ctx: CheckContext, values: cp.ValueSolution,
                 emit: bool, stats: Optional[AccessStats] = None):
        self.method = method
        self.ctx = ctx
        self.values = values
        self.emit = emit
        self.stats = stats
        self.diags: list[Diagnostic] = []
        self.declared_return = ctx.annotations.get(method.key).returns
        self.state: dict = {}

    def report(self, ds):
        if self.emit:
            self.diags.extend(ds)

    def slot_typed(self, slot: int) -> bool:
        return sql_typed(self.method.slots[slot].type_name)

    def set(self, slot: int, q):
        if q is None or q is UNKNOWN:
            self.state.pop(slot, None)
        else:
            self.state[slot] = q

    def run(self, stmt, state: dict) -> dict:
        self.state = dict(state)
        if isinstance(stmt, N.LocalDecl):
            if stmt.init is None:
                if self.slot_typed(stmt.slot):
                    self.set(stmt.slot, BOTTOM)
                return self.state
            q = self.eval(stmt.init)
            if self.slot_typed(stmt.slot):
                self.set(stmt.slot, q if q is not None else UNKNOWN)
        elif isinstance(stmt, N.Assign):
            q = self.eval(stmt.value)
            if self.slot_typed(stmt.target.slot):
                self.set(stmt.target.slot, q if q is not None else UNKNOWN)
        elif isinstance(stmt, N.Return):
            if stmt.value is not None:
                q = self.eval(stmt.value)
                want = self.declared_return
                quiet = q is UNSUPPORTED and self.ctx.mode is Mode.DEGRADED
                if want is not None and q is not None and not quiet and not is_subtype(q, want):
                    self.report([Diagnostic(
                        Code.ANNOTATION_RETURN_MISMATCH, Severity.ERROR, stmt.span,
                        f"returned {q.render()} is not a subtype of the declared {want.render()}",
                        expected=want.render(), actual=q.render())])
        else:
            for e in N.stmt_exprs(stmt):
                self.eval(e)
        return self.state

    def eval(self, e: N.Expr):
        """Evaluate ``e`` for effects; returns its qualifier when it is a
        Statement, PreparedStatement or ResultSet, else None."""
        if isinstance(e, N.Literal):
            return BOTTOM if e.type == "null" else None
        if isinstance(e, N.Name):
            if self.slot_typed(e.slot):
                return self.state.get(e.slot, UNKNOWN)
            return None
        if isinstance(e, N.Call):
            return self.call(e)
        if isinstance(e, N.New):
            self.escape_args(e.args)
            return UNKNOWN if sql_typed(e.type) else None
        if isinstance(e, N.Binary):
            self.eval(e.left)
            self.eval(e.right)
        elif isinstance(e, N.Unary):
            self.eval(e.operand)
        return None

    def escape_args(self, args) -> list:
        quals = [self.eval(a) for a in args]
        # a plain Statement handed to other code may be re-executed there
        for a in args:
            if isinstance(a, N.Name) and self.method.slots[a.slot].type_name.rsplit(".", 1)[-1] == "Statement":
                self.set(a.slot, UNKNOWN)
        return quals

    def call(self, c: N.Call):
        recv_q = self.eval(c.receiver) if c.receiver is not None else None
        api = c.api
        if api is None:
            quals = [self.eval(a) for a in c.args]
            ann = self.ctx.annotations.get(c.target) if c.target is not None else _NO_ANNOTATIONS
            for i, want in sorted(ann.params.items()):
                if i >= len(quals):
                    continue
                got = quals[i] if quals[i] is not None else UNKNOWN
                if got is UNSUPPORTED and self.ctx.mode is Mode.DEGRADED:
                    continue
                if not is_subtype(got, want):
                    self.report([Diagnostic(
                        Code.ANNOTATION_ARG_MISMATCH, Severity.ERROR, c.span,
                        f"argument {i + 1} of {c.name}: {got.render()} is not a subtype of {want.render()}",
                        expected=want.render(), actual=got.render())])
            for a in c.args:
                if isinstance(a, N.Name) and self.method.slots[a.slot].type_name.rsplit(".", 1)[-1] == "Statement":
                    self.set(a.slot, UNKNOWN)
            if ann.returns is not None:
                return ann.returns
            return UNKNOWN if sql_typed(c.type) else None

        args = self.values.args(c)
        for a in c.args:
            self.eval(a)
        role = api.role
        if role is Role.CREATES_SQL_STATEMENT:
            return self.introduce(c, args, prepared=True)
        if role is Role.NEW_STATEMENT:
            return BOTTOM
        if role in (Role.CREATES_AND_RETRIEVES, Role.EXECUTES_WITH_SQL):
            q = self.introduce(c, args, prepared=False)
            if isinstance(c.receiver, N.Name):
                self.set(c.receiver.slot, q)
            if role is Role.EXECUTES_WITH_SQL:
                return None
            return q.results_only() if isinstance(q, Sql) else q
        if role is Role.RETRIEVES_SQL_RESULT_SET:
            return self.retrieve(c, recv_q)
        if role in (Role.SETTER, Role.GETTER):
            self.access(c, recv_q if recv_q is not None else UNKNOWN, args)
            return None
        return None

    def introduce(self, c: N.Call, args, prepared: bool):
        idx = c.api.sql_arg_index
        value = args[idx] if idx is not None and idx < len(args) else cp.TOP
        q, ds = introduce_statement_qualifier(c.span, value, self.ctx.catalog, self.ctx.mode, prepared)
        self.report(ds)
        return q

    def retrieve(self, c: N.Call, recv_q):
        recv_q = recv_q if recv_q is not None else UNKNOWN
        if isinstance(recv_q, Sql):
            return recv_q.results_only()
        if recv_q is BOTTOM:
            return BOTTOM
        sound = self.ctx.mode is Mode.SOUND
        if recv_q is UNSUPPORTED:
            if sound:
                self.report([Diagnostic(Code.UNCHECKED_ACCESS, Severity.ERROR, c.span,
                                        f"{c.name} on a statement whose SQL could not be checked")])
            return UNSUPPORTED
        if sound:
            self.report([Diagnostic(Code.NONLOCAL_ACCESS, Severity.ERROR, c.span,
                                    f"{c.name} on a statement created outside this method")])
        return UNKNOWN

    def access(self, c: N.Call, recv_q, args):
        index = args[0] if args else cp.TOP
        ds = verify_access(c, recv_q, index, self.ctx.table, self.ctx.mode,
                           self.ctx.supported_as_warning)
        self.report(ds)
        if self.emit and self.stats is not None:
            st = self.stats
            getter = c.api.role is Role.GETTER
            if isinstance(recv_q, Sql):
                if getter:
                    st.getters_checked += 1
                else:
                    st.setters_checked += 1
                if any(d.is_error for d in ds):
                    if getter:
                        st.getters_flagged += 1
                    else:
                        st.setters_flagged += 1
            elif recv_q is UNSUPPORTED:
                st.unchecked += 1
            elif recv_q is UNKNOWN:
                st.out_of_scope += 1


@dataclass
class MethodResult:
    diagnostics: list[Diagnostic]
    stats: AccessStats
    visits: dict = field(default_factory=dict)


def entry_state(method: N.Method, ctx: CheckContext) -> dict:
    ann = ctx.annotations.get(method.key)
    return {method.params[i].slot: q for i, q in ann.params.items()}


def check_method(method: N.Method, ctx: CheckContext) -> MethodResult:
    stats = AccessStats()
    if method.violation is not None:
        span, construct = method.violation
        d = Diagnostic(Code.SUBSET_VIOLATION, Severity.WARNING, span,
                       f"method {method.name} uses {construct}, outside the analyzed subset; not checked")
        return MethodResult([d], stats)
    if method.body is None:
        return MethodResult([], stats)
    cfg = build_cfg(method)
    values = cp.solve_values(cfg)

    order = cfg.reverse_postorder()
    rank = {b.id: i for i, b in enumerate(order)}
    block_in: dict[int, QualifierState] = {b.id: None for b in cfg.blocks}
    block_out: dict[int, QualifierState] = {b.id: None for b in cfg.blocks}
    visits = {b.id: 0 for b in cfg.blocks}
    start = entry_state(method, ctx)
    tr = _Transfer(method, ctx, values, emit=False)
    pending = {cfg.entry.id}
    while pending:
        bid = min(pending, key=rank.__getitem__)
        pending.discard(bid)
        block = order[rank[bid]]
        in_state = start if block is cfg.entry else None
        for p in block.preds:
            in_state = join_state(in_state, block_out[p.id])
        if visits[bid] and in_state == block_in[bid]:
            continue
        visits[bid] += 1
        block_in[bid] = in_state
        out = in_state
        if out is not None:
            for stmt in block.stmts:
                out = tr.run(stmt, out)
        if out != block_out[bid] or visits[bid] == 1:
            block_out[bid] = out
            pending.update(s.id for s in block.succs)

    final = _Transfer(method, ctx, values, emit=True, stats=stats)
    for block in cfg.blocks:
        state = block_in[block.id]
        if state is None:
            continue
        for stmt in block.stmts:
            state = final.run(stmt, state)
    return MethodResult(final.diags, stats, visits)


# --- whole programs --------------------------------------------------------------------------

@dataclass
class CheckResult:
    diagnostics: list[Diagnostic]
    stats: AccessStats
    tool_errors: list[str] = field(default_factory=list)

    @property
    def errors(self) -> list[Diagnostic]:
        return [d for d in self.diagnostics if d.is_error]

    def __iter__(self):
        return iter(self.diagnostics)

    def __len__(self):
        return len(self.diagnostics)


Sources = Union[Mapping[str, str], Iterable[tuple[str, str]]]


def sort_diagnostics(ds: Iterable[Diagnostic]) -> list[Diagnostic]:
    return sorted(set(ds), key=Diagnostic.sort_key)


def check_program(sources: Sources, catalog: SchemaCatalog, table: ConversionTable,
                  mode: Mode = Mode.SOUND, *, supported_as_warning: bool = False,
                  workers: int = 1) -> CheckResult:
    """Check every method of every source file.

    ``sources`` holds ``(path, text)`` pairs.  Files that do not parse are
    reported in ``tool_errors`` and skipped; everything else is checked.
    """
    items = sorted(sources.items() if isinstance(sources, Mapping) else sources)
    units = []
    tool_errors = []
    for path, text in items:
        try:
            units.append(parse_java(text, path))
        except JavaSyntaxError as exc:
            tool_errors.append(f"{exc}")
    index = AnnotationIndex.build(units)
    ctx = CheckContext(catalog, table, mode, index, supported_as_warning)
    methods = [m for u in units for m in u.methods()]
    if workers > 1 and len(methods) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda m: check_method(m, ctx), methods))
    else:
        results = [check_method(m, ctx) for m in methods]
    diags = list(index.problems)
    stats = AccessStats()
    for r in results:
        diags.extend(r.diagnostics)
        stats = stats + r.stats
    return CheckResult(sort_diagnostics(diags), stats, tool_errors)
