"""Pretty-printer for parsed compilation units."""

from __future__ import annotations

import json

from . import nodes as N

_PREC = {"||": 1, "&&": 2, "==": 3, "!=": 3, "<": 4, ">": 4, "<=": 4, ">=": 4,
         "+": 5, "-": 5, "*": 6, "/": 6, "%": 6}


def _java_string(s: str) -> str:
    # json escapes are a subset of Java's
    return json.dumps(s, ensure_ascii=True)


def render_expr(e: N.Expr, prec: int = 0) -> str:
    if isinstance(e, N.Literal):
        if isinstance(e.value, bool):
            return "true" if e.value else "false"
        if isinstance(e.value, str):
            return _java_string(e.value)
        if e.value is None:
            return "null" if e.type == "null" else "0.0"
        text = str(e.value) + ("L" if e.type == "long" else "")
        return f"({text})" if e.value < 0 and prec > 0 else text
    if isinstance(e, N.Name):
        return e.ident
    if isinstance(e, N.ExternalRef):
        return ".".join(e.path)
    if isinstance(e, N.Call):
        args = ", ".join(render_expr(a) for a in e.args)
        if e.receiver is None:
            return f"{e.name}({args})"
        return f"{render_expr(e.receiver, 10)}.{e.name}({args})"
    if isinstance(e, N.New):
        return f"new {e.class_name}({', '.join(render_expr(a) for a in e.args)})"
    if isinstance(e, N.Binary):
        p = _PREC[e.op]
        text = f"{render_expr(e.left, p)} {e.op} {render_expr(e.right, p + 1)}"
        return f"({text})" if p < prec else text
    if isinstance(e, N.Unary):
        text = f"{e.op}{render_expr(e.operand, 9)}"
        return f"({text})" if prec > 8 else text
    if isinstance(e, N.IncDec):
        return f"{e.op}{e.target.ident}" if e.prefix else f"{e.target.ident}{e.op}"
    raise TypeError(f"cannot render {e!r}")


def _stmt(s: N.Stmt, indent: int, out: list[str]):
    pad = "    " * indent
    if isinstance(s, N.Block):
        out.append(pad + "{")
        for inner in s.stmts:
            _stmt(inner, indent + 1, out)
        out.append(pad + "}")
    elif isinstance(s, N.LocalDecl):
        init = f" = {render_expr(s.init)}" if s.init is not None else ""
        out.append(f"{pad}{s.type_name} {s.name}{init};")
    elif isinstance(s, N.Assign):
        out.append(f"{pad}{s.target.ident} {s.op} {render_expr(s.value)};")
    elif isinstance(s, N.ExprStmt):
        out.append(f"{pad}{render_expr(s.expr)};")
    elif isinstance(s, N.Return):
        out.append(pad + ("return;" if s.value is None else f"return {render_expr(s.value)};"))
    elif isinstance(s, N.If):
        out.append(f"{pad}if ({render_expr(s.cond)})")
        _stmt(s.then, indent + 1, out)
        if s.orelse is not None:
            out.append(pad + "else")
            _stmt(s.orelse, indent + 1, out)
    elif isinstance(s, N.While):
        out.append(f"{pad}while ({render_expr(s.cond)})")
        _stmt(s.body, indent + 1, out)
    else:
        raise TypeError(f"cannot render {s!r}")


def render_java(unit: N.CompilationUnit) -> str:
    out: list[str] = []
    for cls in unit.classes:
        out.append(f"class {cls.name} {{")
        for m in cls.methods:
            if m.body is None:
                continue
            params = []
            for p in m.params:
                ann = p.annotation.qualifier_text + " " if p.annotation else ""
                params.append(f"{ann}{p.type_name} {p.name}")
            ret_ann = m.return_annotation.qualifier_text + " " if m.return_annotation else ""
            mods = " ".join(m.modifiers) + " " if m.modifiers else ""
            head = m.class_name if m.name == "<init>" else f"{m.return_type} {m.name}"
            out.append(f"    {ret_ann}{mods}{head}({', '.join(params)})")
            _stmt(m.body, 1, out)
        out.append("}")
    return "\n".join(out) + "\n"
