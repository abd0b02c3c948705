"""AST for the analyzed Java subset.

Nodes compare by identity so they can key analysis maps; use
:func:`structure` for structural comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields
from typing import Optional

from .lexer import SourceSpan


@dataclass(eq=False)
class Node:
    span: SourceSpan = field(repr=False)


# --- expressions ------------------------------------------------------------

@dataclass(eq=False)
class Expr(Node):
    # static type name, None when unknown
    type: Optional[str] = field(default=None, repr=False, kw_only=True)


@dataclass(eq=False)
class Literal(Expr):
    value: object  # str, int, bool or None


@dataclass(eq=False)
class Name(Expr):
    ident: str
    slot: int


@dataclass(eq=False)
class ExternalRef(Expr):
    """A dotted name that is not a local, e.g. ``System.out``."""

    path: tuple[str, ...]


@dataclass(eq=False)
class Call(Expr):
    receiver: Optional[Expr]
    name: str
    args: list[Expr]
    # filled by the parser: ApiCall for modeled JDBC calls, or the target
    # method key for calls into analyzed code
    api: object = field(default=None, repr=False)
    target: Optional[tuple] = field(default=None, repr=False)


@dataclass(eq=False)
class New(Expr):
    class_name: str
    args: list[Expr]


@dataclass(eq=False)
class Binary(Expr):
    op: str
    left: Expr
    right: Expr


@dataclass(eq=False)
class Unary(Expr):
    op: str
    operand: Expr


@dataclass(eq=False)
class IncDec(Expr):
    op: str  # "++" or "--"
    prefix: bool
    target: Name


# --- statements -------------------------------------------------------------

@dataclass(eq=False)
class Stmt(Node):
    pass


@dataclass(eq=False)
class LocalDecl(Stmt):
    type_name: str
    name: str
    slot: int
    init: Optional[Expr]


@dataclass(eq=False)
class Assign(Stmt):
    target: Name
    op: str  # "=", "+=", "-="
    value: Expr


@dataclass(eq=False)
class ExprStmt(Stmt):
    expr: Expr


@dataclass(eq=False)
class Return(Stmt):
    value: Optional[Expr]


@dataclass(eq=False)
class If(Stmt):
    cond: Expr
    then: Stmt
    orelse: Optional[Stmt]


@dataclass(eq=False)
class While(Stmt):
    cond: Expr
    body: Stmt


@dataclass(eq=False)
class Block(Stmt):
    stmts: list[Stmt]


@dataclass(eq=False)
class Cond(Stmt):
    """Branch condition placed at the end of a CFG guard block."""

    expr: Expr


# --- declarations -----------------------------------------------------------

@dataclass
class SlotInfo:
    name: str
    type_name: str
    is_param: bool


@dataclass(eq=False)
class SqlAnnotationDecl(Node):
    target: str  # "param" or "return"
    index: int  # parameter index, -1 for return
    qualifier_text: str


@dataclass(eq=False)
class Param(Node):
    type_name: str
    name: str
    slot: int
    annotation: Optional[SqlAnnotationDecl] = None


@dataclass(eq=False)
class Method(Node):
    class_name: str
    name: str
    return_type: str
    params: list[Param]
    body: Optional[Block]
    slots: list[SlotInfo] = field(default_factory=list)
    return_annotation: Optional[SqlAnnotationDecl] = None
    # (span, construct) when the body leaves the subset
    violation: Optional[tuple[SourceSpan, str]] = None
    modifiers: tuple[str, ...] = ()

    @property
    def key(self) -> tuple[str, str, int]:
        return (self.class_name, self.name, len(self.params))

    @property
    def annotations(self) -> list[SqlAnnotationDecl]:
        out = [p.annotation for p in self.params if p.annotation is not None]
        if self.return_annotation is not None:
            out.append(self.return_annotation)
        return out


@dataclass(eq=False)
class ClassDecl(Node):
    name: str
    methods: list[Method]


@dataclass(eq=False)
class CompilationUnit(Node):
    file: str
    classes: list[ClassDecl]

    def methods(self):
        for cls in self.classes:
            yield from cls.methods


def structure(node):
    """Span- and identity-free nested tuple form of an AST."""
    if isinstance(node, list):
        return tuple(structure(n) for n in node)
    if isinstance(node, tuple):
        return tuple(structure(n) for n in node)
    if isinstance(node, Node):
        items = [type(node).__name__]
        for f in fields(node):
            if f.name in ("span", "api", "target", "type", "slots"):
                continue
            items.append((f.name, structure(getattr(node, f.name))))
        return tuple(items)
    if isinstance(node, SlotInfo):
        return (node.name, node.type_name, node.is_param)
    return node


def walk_expr(expr):
    """Pre-order traversal of an expression tree."""
    yield expr
    if isinstance(expr, Call):
        if expr.receiver is not None:
            yield from walk_expr(expr.receiver)
        for a in expr.args:
            yield from walk_expr(a)
    elif isinstance(expr, New):
        for a in expr.args:
            yield from walk_expr(a)
    elif isinstance(expr, Binary):
        yield from walk_expr(expr.left)
        yield from walk_expr(expr.right)
    elif isinstance(expr, Unary):
        yield from walk_expr(expr.operand)
    elif isinstance(expr, IncDec):
        yield from walk_expr(expr.target)


def stmt_exprs(stmt) -> list:
    if isinstance(stmt, LocalDecl):
        return [stmt.init] if stmt.init is not None else []
    if isinstance(stmt, Assign):
        return [stmt.value]
    if isinstance(stmt, ExprStmt):
        return [stmt.expr]
    if isinstance(stmt, Return):
        return [stmt.value] if stmt.value is not None else []
    if isinstance(stmt, Cond):
        return [stmt.expr]
    return []
