"""A deliberately naive SQL engine for the oracle.

It shares nothing with the checker's SQL front end: statements are parsed
by a small hand-rolled reader into plain tuples, validated by walking the
schema directly, and executed over Python lists.
"""

from __future__ import annotations

import re
from decimal import Decimal
from typing import Optional

from ..schema import SchemaCatalog, SqlKind


class Malformed(Exception):
    """The statement is definitely invalid against the schema."""


class Opaque(Exception):
    """The statement uses SQL this engine does not model."""


_TOK = re.compile(r"""
    (?P<num>\d+(?:\.\d+)?)
  | (?P<str>'(?:[^']|'')*')
  | (?P<word>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op><>|!=|<=|>=|\|\||[=<>(),.*?+\-/%;])
  | (?P<other>\S)
""", re.X)

_OPAQUE_WORDS = {"JOIN", "GROUP", "HAVING", "LIMIT", "OFFSET", "DISTINCT", "UNION", "EXISTS",
                 "CASE", "INNER", "OUTER", "LEFT", "RIGHT", "CROSS", "INTERSECT", "EXCEPT",
                 "FETCH", "TOP", "WITH", "RETURNING", "ON", "USING"}
_VERBS = {"SELECT", "INSERT", "UPDATE", "DELETE"}
_RESERVED = {"SELECT", "FROM", "WHERE", "ORDER", "BY", "AND", "OR", "NOT", "IN", "LIKE", "IS",
             "NULL", "BETWEEN", "AS", "ASC", "DESC", "INSERT", "INTO", "VALUES", "UPDATE",
             "SET", "DELETE", "TRUE", "FALSE"} | _OPAQUE_WORDS


def lex(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            return out
        if text.startswith("--", pos):
            nl = text.find("\n", pos)
            pos = len(text) if nl < 0 else nl + 1
            continue
        m = _TOK.match(text, pos)
        pos = m.end()
        kind = m.lastgroup
        val = m.group(kind)
        if kind == "other":
            if val in ('"', "`", "["):
                raise Opaque("quoted identifier")
            raise Malformed(f"stray character {val!r}")
        out.append((kind, val))


class _Reader:
    def __init__(self, toks):
        self.toks = toks
        self.i = 0
        self.holes = 0

    def peek(self, k=0):
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else ("eof", "")

    def word(self, k=0) -> str:
        kind, v = self.peek(k)
        return v.upper() if kind == "word" else ""

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def want_word(self, w):
        if self.word() != w:
            raise Malformed(f"expected {w}")
        self.i += 1

    def want(self, v):
        if self.peek()[1] != v:
            raise Malformed(f"expected {v!r}")
        self.i += 1

    def ident(self) -> str:
        kind, v = self.peek()
        if kind != "word" or v.upper() in _RESERVED:
            raise Malformed("expected a name")
        self.i += 1
        return v

    def colref(self):
        name = self.ident()
        if self.peek()[1] == ".":
            self.i += 1
            return ("col", name, self.ident())
        return ("col", None, name)

    # expressions ------------------------------------------------------------
    def cond(self):
        left = self.conj()
        while self.word() == "OR":
            self.i += 1
            left = ("or", left, self.conj())
        return left

    def conj(self):
        left = self.neg()
        while self.word() == "AND":
            self.i += 1
            left = ("and", left, self.neg())
        return left

    def neg(self):
        if self.word() == "NOT":
            self.i += 1
            return ("not", self.neg())
        return self.pred()

    def pred(self):
        if self.peek()[1] == "(" and self.word(1) != "SELECT":
            # parenthesized condition or value; try condition first
            save = self.i, self.holes
            self.i += 1
            try:
                inner = self.cond()
                self.want(")")
                if self.peek()[1] in ("=", "<>", "!=", "<", ">", "<=", ">=", "+", "-", "*", "/", "%"):
                    raise Malformed("")
                return inner
            except Malformed:
                self.i, self.holes = save
        left = self.value()
        w = self.word()
        negate = False
        if w == "NOT":
            negate = True
            self.i += 1
            w = self.word()
        if w == "IS":
            self.i += 1
            neg = False
            if self.word() == "NOT":
                neg = True
                self.i += 1
            self.want_word("NULL")
            return ("isnull", left, neg)
        if w == "LIKE":
            self.i += 1
            return ("like", left, self.value(), negate)
        if w == "IN":
            self.i += 1
            self.want("(")
            if self.word() == "SELECT":
                raise Opaque("subquery")
            items = [self.value()]
            while self.peek()[1] == ",":
                self.i += 1
                items.append(self.value())
            self.want(")")
            return ("in", left, items, negate)
        if w == "BETWEEN":
            self.i += 1
            lo = self.value()
            self.want_word("AND")
            hi = self.value()
            return ("between", left, lo, hi, negate)
        if negate:
            raise Malformed("dangling NOT")
        op = self.peek()[1]
        if op in ("=", "<>", "!=", "<", ">", "<=", ">="):
            self.i += 1
            return ("cmp", op, left, self.value())
        # a bare boolean column or literal
        return ("truth", left)

    def value(self):
        left = self.term()
        while self.peek()[1] in ("+", "-", "||"):
            op = self.take()[1]
            left = ("arith", op, left, self.term())
        return left

    def term(self):
        left = self.unary()
        while self.peek()[1] in ("*", "/", "%"):
            op = self.take()[1]
            left = ("arith", op, left, self.unary())
        return left

    def unary(self):
        if self.peek()[1] == "-":
            self.i += 1
            return ("arith", "-", ("lit", 0), self.unary())
        return self.atom()

    def atom(self):
        kind, v = self.peek()
        if kind == "num":
            self.i += 1
            return ("lit", Decimal(v) if "." in v else int(v))
        if kind == "str":
            self.i += 1
            return ("lit", v[1:-1].replace("''", "'"))
        if v == "?":
            self.i += 1
            self.holes += 1
            return ("hole", self.holes)
        if v == "(":
            if self.word(1) == "SELECT":
                raise Opaque("subquery")
            self.i += 1
            e = self.value()
            self.want(")")
            return e
        if kind == "word":
            up = v.upper()
            if up == "NULL":
                self.i += 1
                return ("lit", None)
            if up in ("TRUE", "FALSE"):
                self.i += 1
                return ("lit", up == "TRUE")
            if self.peek(1)[1] == "(":
                raise Opaque("function call")
            return self.colref()
        raise Malformed("expected a value")


def _check_opaque(toks):
    for kind, v in toks:
        if kind == "word" and v.upper() in _OPAQUE_WORDS:
            raise Opaque(v.upper())
    for j in range(len(toks) - 1):
        if toks[j][0] == "word" and toks[j + 1][1] == "(" and toks[j][1].upper() not in _RESERVED:
            if j and toks[j - 1][0] == "word" and toks[j - 1][1].upper() == "INTO":
                continue  # INSERT INTO t (cols)
            raise Opaque("function call")


def parse(text: str):
    """Parse into a tuple tree; raises :class:`Malformed` or :class:`Opaque`."""
    toks = lex(text)
    if toks and toks[-1][1] == ";":
        toks = toks[:-1]
    if not toks or toks[0][0] != "word" or toks[0][1].upper() not in _VERBS:
        raise Malformed("not a SELECT, INSERT, UPDATE or DELETE statement")
    _check_opaque(toks)
    r = _Reader(toks)
    verb = r.word()
    r.i += 1
    if verb == "SELECT":
        items = []
        if r.peek()[1] == "*":
            r.i += 1
            items = None
        else:
            while True:
                kind, v = r.peek()
                if kind != "word" or v.upper() in _RESERVED:
                    raise Opaque("expression in select list") if kind in ("num", "str") or v in ("(", "-") else Malformed("bad select list")
                col = r.colref()
                if r.peek()[1] not in (",",) and r.word() not in ("FROM", "AS"):
                    raise Opaque("expression in select list")
                label = None
                if r.word() == "AS":
                    r.i += 1
                    label = r.ident()
                items.append((col, label))
                if r.peek()[1] != ",":
                    break
                r.i += 1
        r.want_word("FROM")
        table = r.ident()
        alias = None
        if r.word() == "AS":
            r.i += 1
            alias = r.ident()
        elif r.peek()[0] == "word" and r.word() not in _RESERVED:
            alias = r.ident()
        if r.peek()[1] == ",":
            raise Opaque("multiple tables")
        where = None
        if r.word() == "WHERE":
            r.i += 1
            where = r.cond()
        order = []
        if r.word() == "ORDER":
            r.i += 1
            r.want_word("BY")
            while True:
                c = r.colref()
                desc = False
                if r.word() in ("ASC", "DESC"):
                    desc = r.word() == "DESC"
                    r.i += 1
                order.append((c, desc))
                if r.peek()[1] != ",":
                    break
                r.i += 1
        tree = ("select", items, table, alias, where, order)
    elif verb == "INSERT":
        r.want_word("INTO")
        table = r.ident()
        cols = None
        if r.peek()[1] == "(":
            r.i += 1
            cols = [r.ident()]
            while r.peek()[1] == ",":
                r.i += 1
                cols.append(r.ident())
            r.want(")")
        if r.word() == "SELECT":
            raise Opaque("INSERT ... SELECT")
        r.want_word("VALUES")
        r.want("(")
        vals = [r.value()]
        while r.peek()[1] == ",":
            r.i += 1
            vals.append(r.value())
        r.want(")")
        if r.peek()[1] == ",":
            raise Opaque("multi-row insert")
        tree = ("insert", table, cols, vals)
    elif verb == "UPDATE":
        table = r.ident()
        r.want_word("SET")
        sets = []
        while True:
            c = r.ident()
            r.want("=")
            sets.append((c, r.value()))
            if r.peek()[1] != ",":
                break
            r.i += 1
        where = None
        if r.word() == "WHERE":
            r.i += 1
            where = r.cond()
        tree = ("update", table, sets, where)
    else:
        r.want_word("FROM")
        table = r.ident()
        where = None
        if r.word() == "WHERE":
            r.i += 1
            where = r.cond()
        tree = ("delete", table, where)
    if r.peek()[0] != "eof":
        raise Malformed(f"unexpected {r.peek()[1]!r}")
    return tree, r.holes


class Prepared:
    """A validated statement: parameter types (None when the engine cannot
    tell), result columns and the tree to execute."""

    def __init__(self, tree, holes: int, params: list, columns: list, table):
        self.tree = tree
        self.holes = holes
        self.params = params
        self.columns = columns  # [(label, SqlKind)]
        self.table = table

    @property
    def is_query(self) -> bool:
        return self.tree[0] == "select"


def _find_table(catalog: SchemaCatalog, name: str):
    for t in catalog.tables:
        if t.name.lower() == name.lower():
            return t
    raise Malformed(f"no table {name}")


def _find_col(table, name: str):
    for c in table.columns:
        if c.name.lower() == name.lower():
            return c
    raise Malformed(f"no column {name} in {table.name}")


def _colrefs(node):
    if isinstance(node, tuple) and len(node) == 3 and node[0] == "col":
        yield node
    elif isinstance(node, (tuple, list)):
        for x in node:
            yield from _colrefs(x)


def prepare(text: str, catalog: SchemaCatalog) -> Prepared:
    tree, holes = parse(text)
    kind = tree[0]
    table = _find_table(catalog, tree[2] if kind == "select" else tree[1])
    names = {table.name.lower()}
    if kind == "select" and tree[3]:
        names = {tree[3].lower()}

    def resolve(node):
        _, q, col = node
        if q is not None and q.lower() not in names:
            raise Malformed(f"unknown qualifier {q}")
        return _find_col(table, col)

    # every column mentioned must exist
    for node in _colrefs(tree[1:]):
        resolve(node)

    params: dict[int, SqlKind] = {}

    def typed(col_side, hole_side):
        if isinstance(hole_side, tuple) and hole_side[0] == "hole" and isinstance(col_side, tuple) \
                and col_side[0] == "col":
            params[hole_side[1]] = resolve(col_side).type.kind

    def visit(p):
        if not isinstance(p, tuple):
            return
        tag = p[0]
        if tag == "cmp":
            typed(p[2], p[3])
            typed(p[3], p[2])
        elif tag == "like":
            typed(p[1], p[2])
        elif tag == "in":
            for v in p[2]:
                typed(p[1], v)
        elif tag == "between":
            typed(p[1], p[2])
            typed(p[1], p[3])
        elif tag in ("and", "or"):
            visit(p[1])
            visit(p[2])
        elif tag == "not":
            visit(p[1])

    columns = []
    if kind == "select":
        items, _, _, where, order = tree[1], tree[2], tree[3], tree[4], tree[5]
        if items is None:
            columns = [(c.name, c.type.kind) for c in table.columns]
        else:
            for col, label in items:
                c = resolve(col)
                columns.append((label or col[2], c.type.kind))
        visit(where)
    elif kind == "insert":
        _, _, cols, vals = tree
        targets = [_find_col(table, c) for c in cols] if cols else list(table.columns)
        if len(targets) != len(vals):
            raise Malformed("INSERT value count does not match column count")
        for c, v in zip(targets, vals):
            if isinstance(v, tuple) and v[0] == "hole":
                params[v[1]] = c.type.kind
    elif kind == "update":
        for c, v in tree[2]:
            col = _find_col(table, c)
            if isinstance(v, tuple) and v[0] == "hole":
                params[v[1]] = col.type.kind
        visit(tree[3])
    else:
        visit(tree[2])
    return Prepared(tree, holes, [params.get(i) for i in range(1, holes + 1)], columns, table)


# --- execution ---------------------------------------------------------------

def _like(value, pattern) -> Optional[bool]:
    if value is None or pattern is None:
        return None
    rx = "".join(".*" if ch == "%" else "." if ch == "_" else re.escape(ch) for ch in str(pattern))
    return re.fullmatch(rx, str(value), re.S) is not None


def _num(v):
    return v if isinstance(v, (int, Decimal, float)) and not isinstance(v, bool) else None


def _cmp(op, a, b):
    if a is None or b is None:
        return None
    try:
        if isinstance(a, (int, Decimal, float)) and isinstance(b, (int, Decimal, float)):
            a, b = Decimal(str(a)), Decimal(str(b))
        elif isinstance(a, str) or isinstance(b, str):
            a, b = str(a), str(b)
        return {"=": a == b, "<>": a != b, "!=": a != b, "<": a < b, ">": a > b,
                "<=": a <= b, ">=": a >= b}[op]
    except TypeError:
        return None


def evaluate(e, row: dict, args: dict):
    tag = e[0]
    if tag == "lit":
        return e[1]
    if tag == "hole":
        return args.get(e[1])
    if tag == "col":
        return row[e[2].lower()]
    if tag == "arith":
        a, b = evaluate(e[2], row, args), evaluate(e[3], row, args)
        if e[1] == "||":
            return None if a is None or b is None else f"{a}{b}"
        a, b = _num(a), _num(b)
        if a is None or b is None:
            return None
        if e[1] == "+":
            return a + b
        if e[1] == "-":
            return a - b
        if e[1] == "*":
            return a * b
        if b == 0:
            return None
        if e[1] == "/":
            return a // b if isinstance(a, int) and isinstance(b, int) else a / b
        return a % b
    if tag == "cmp":
        return _cmp(e[1], evaluate(e[2], row, args), evaluate(e[3], row, args))
    if tag == "like":
        r = _like(evaluate(e[1], row, args), evaluate(e[2], row, args))
        return None if r is None else r != e[3]
    if tag == "in":
        v = evaluate(e[1], row, args)
        hits = [_cmp("=", v, evaluate(x, row, args)) for x in e[2]]
        r = True if True in hits else (None if None in hits else False)
        return None if r is None else r != e[3]
    if tag == "between":
        v = evaluate(e[1], row, args)
        lo, hi = _cmp(">=", v, evaluate(e[2], row, args)), _cmp("<=", v, evaluate(e[3], row, args))
        r = None if lo is None or hi is None else lo and hi
        return None if r is None else r != e[4]
    if tag == "isnull":
        return (evaluate(e[1], row, args) is None) != e[2]
    if tag == "and":
        a, b = evaluate(e[1], row, args), evaluate(e[2], row, args)
        if a is False or b is False:
            return False
        return None if a is None or b is None else True
    if tag == "or":
        a, b = evaluate(e[1], row, args), evaluate(e[2], row, args)
        if a is True or b is True:
            return True
        return None if a is None or b is None else False
    if tag == "not":
        a = evaluate(e[1], row, args)
        return None if a is None else not a
    if tag == "truth":
        v = evaluate(e[1], row, args)
        return None if v is None else bool(v)
    raise Opaque(tag)


def run_query(stmt: Prepared, rows: list[tuple], args: dict) -> list[tuple]:
    _, items, _, _, where, order = stmt.tree
    names = [c.name.lower() for c in stmt.table.columns]
    dicts = [dict(zip(names, r)) for r in rows]
    picked = [d for d in dicts if where is None or evaluate(where, d, args) is True]
    for col, desc in reversed(order):
        key = col[2].lower()
        picked.sort(key=lambda d: (d[key] is None, d[key] if d[key] is not None else 0), reverse=desc)
    if items is None:
        return [tuple(d[n] for n in names) for d in picked]
    return [tuple(d[col[2].lower()] for col, _ in items) for d in picked]


def run_update(stmt: Prepared, rows: list[tuple], args: dict) -> tuple[list[tuple], int]:
    """Apply a DML statement; returns the new rows and the update count."""
    names = [c.name.lower() for c in stmt.table.columns]
    tag = stmt.tree[0]
    if tag == "insert":
        _, _, cols, vals = stmt.tree
        targets = [c.lower() for c in cols] if cols else names
        new = dict.fromkeys(names)
        for c, v in zip(targets, vals):
            new[c] = evaluate(v, {}, args)
        return rows + [tuple(new[n] for n in names)], 1
    where = stmt.tree[-1]
    out, count = [], 0
    for r in rows:
        d = dict(zip(names, r))
        if where is None or evaluate(where, d, args) is True:
            count += 1
            if tag == "delete":
                continue
            for c, v in stmt.tree[2]:
                d[c.lower()] = evaluate(v, d, args)
            r = tuple(d[n] for n in names)
        out.append(r)
    return out, count
