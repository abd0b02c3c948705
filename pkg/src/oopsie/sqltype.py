"""The ``@Sql`` qualifier lattice.

``Bottom`` sits below everything and ``Unknown`` above everything.
``Unsupported`` marks statements that could not be analyzed; it is
incomparable with every ``Sql(in, out)`` value, so merging a checked and an
unchecked path yields ``Unknown``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Union

from .schema import SqlScalarType, parse_kind


class _Singleton:
    _name = ""

    def __repr__(self):
        return self._name

    def render(self) -> str:
        return "@" + self._name


class _Unknown(_Singleton):
    _name = "SqlUnknown"


class _Bottom(_Singleton):
    _name = "SqlBottom"


class _Unsupported(_Singleton):
    _name = "SqlUnsupported"


UNKNOWN = _Unknown()
BOTTOM = _Bottom()
UNSUPPORTED = _Unsupported()


OutColumn = tuple[Optional[str], SqlScalarType]


@dataclass(frozen=True)
class Sql:
    params: tuple[SqlScalarType, ...] = ()
    out: tuple[OutColumn, ...] = ()

    def __post_init__(self):
        seen = set()
        for name, _ in self.out:
            if name is None:
                continue
            if name.lower() in seen:
                raise ValueError(f"duplicate result column {name!r}")
            seen.add(name.lower())

    def column(self, name: str) -> Optional[tuple[int, SqlScalarType]]:
        key = name.lower()
        for i, (n, t) in enumerate(self.out):
            if n is not None and n.lower() == key:
                return i + 1, t
        return None

    def results_only(self) -> "Sql":
        return Sql((), self.out)

    def render(self) -> str:
        def q(s):
            return '"' + s + '"'

        outs = ", ".join(q(t.name if n is None else f"{t.name} {n}") for n, t in self.out)
        if self.params:
            ins = ", ".join(q(t.name) for t in self.params)
            return f"@Sql(in={{{ins}}}, out={{{outs}}})"
        return f"@Sql(out={{{outs}}})"

    def __str__(self):
        return self.render()


SqlQualifier = Union[Sql, _Unknown, _Bottom, _Unsupported]


def _name_eq(a: Optional[str], b: Optional[str]) -> bool:
    if a is None or b is None:
        return a is b
    return a.lower() == b.lower()


def _col_eq(a: OutColumn, b: OutColumn) -> bool:
    return _name_eq(a[0], b[0]) and a[1] == b[1]


def is_subtype(a: SqlQualifier, b: SqlQualifier) -> bool:
    if a is BOTTOM or b is UNKNOWN:
        return True
    if a is UNSUPPORTED or b is UNSUPPORTED:
        return a is b
    if isinstance(a, Sql) and isinstance(b, Sql):
        if a.params != b.params or len(b.out) > len(a.out):
            return False
        return all(_col_eq(x, y) for x, y in zip(a.out, b.out))
    return False


def _common_prefix(a, b):
    out = []
    for x, y in zip(a, b):
        if not _col_eq(x, y):
            break
        # keep the spelling of the left operand
        out.append(x)
    return tuple(out)


def lub(a: SqlQualifier, b: SqlQualifier) -> SqlQualifier:
    if a is BOTTOM:
        return b
    if b is BOTTOM:
        return a
    if a is UNKNOWN or b is UNKNOWN:
        return UNKNOWN
    if a is UNSUPPORTED and b is UNSUPPORTED:
        return UNSUPPORTED
    if isinstance(a, Sql) and isinstance(b, Sql) and a.params == b.params:
        return Sql(a.params, _common_prefix(a.out, b.out))
    return UNKNOWN


def qualifier_eq(a: SqlQualifier, b: SqlQualifier) -> bool:
    """Lattice equality (names compared case-insensitively)."""
    return is_subtype(a, b) and is_subtype(b, a)


# --- annotation syntax ------------------------------------------------------

class AnnotationError(Exception):
    pass


class AnnotationSyntaxError(AnnotationError):
    def __init__(self, position: int, message: str):
        super().__init__(f"@Sql syntax error at offset {position}: {message}")
        self.position = position


class UnknownSqlType(AnnotationError):
    def __init__(self, token: str):
        super().__init__(f"unknown SQL type {token!r}")
        self.token = token


_ANN_TOKEN = re.compile(r'\s*(?:(?P<str>"[^"]*")|(?P<word>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[@(){},=]))')
_ENTRY = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*)(?:\s+([A-Za-z_][A-Za-z0-9_$]*))?\s*$")


def _lex_annotation(text: str):
    toks = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _ANN_TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise AnnotationSyntaxError(pos, f"unexpected {text[pos]!r}")
        kind = m.lastgroup
        start = m.start(kind)
        toks.append((kind, m.group(kind), start))
        pos = m.end()
    toks.append(("eof", "", len(text)))
    return toks


def _entry(token: str, pos: int, allow_name: bool) -> OutColumn:
    m = _ENTRY.match(token[1:-1])
    if m is None:
        raise AnnotationSyntaxError(pos, f"malformed type entry {token}")
    kind = parse_kind(m.group(1))
    if kind is None:
        raise UnknownSqlType(m.group(1))
    name = m.group(2)
    if name is not None and not allow_name:
        raise AnnotationSyntaxError(pos, f"parameter types take no name: {token}")
    return name, SqlScalarType(kind)


def parse_sql_annotation(text: str) -> Sql:
    """Parse ``@Sql([in={...},] out={...})``.

    An empty ``out={}`` is accepted so statements without results (INSERT,
    UPDATE, DELETE) can be written down.
    """
    toks = _lex_annotation(text)
    i = 0

    def expect(val):
        nonlocal i
        kind, v, pos = toks[i]
        if v != val:
            raise AnnotationSyntaxError(pos, f"expected {val!r}, found {v or 'end of input'!r}")
        i += 1

    def type_list(allow_name):
        nonlocal i
        expect("{")
        items = []
        if toks[i][1] == "}":
            i += 1
            return items
        while True:
            kind, v, pos = toks[i]
            if kind != "str":
                raise AnnotationSyntaxError(pos, "expected quoted SQL type")
            items.append(_entry(v, pos, allow_name))
            i += 1
            if toks[i][1] == ",":
                i += 1
                continue
            expect("}")
            return items

    expect("@")
    kind, v, pos = toks[i]
    if v != "Sql":
        raise AnnotationSyntaxError(pos, "expected Sql")
    i += 1
    expect("(")
    params: list = []
    kind, v, pos = toks[i]
    if v == "in":
        i += 1
        expect("=")
        params = [t for _, t in type_list(allow_name=False)]
        expect(",")
        kind, v, pos = toks[i]
    if v != "out":
        raise AnnotationSyntaxError(pos, "expected out")
    i += 1
    expect("=")
    out = type_list(allow_name=True)
    expect(")")
    if toks[i][0] != "eof":
        raise AnnotationSyntaxError(toks[i][2], "trailing input")
    try:
        return Sql(tuple(params), tuple(out))
    except ValueError as exc:
        raise AnnotationSyntaxError(0, str(exc)) from None


def render(q: SqlQualifier) -> str:
    return q.render()
