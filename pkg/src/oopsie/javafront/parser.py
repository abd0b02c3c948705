"""Recursive-descent parser for the analyzed Java subset.

Method bodies are parsed after all signatures of the compilation unit are
known, so calls into the same class get their declared return types.  A body
that leaves the subset is not parsed further; the method keeps its signature
and records the violation.
"""

from __future__ import annotations

from typing import Optional

from . import nodes as N
from .api import JDBC_TYPES, Receiver, classify_call, receiver_of, result_type
from .lexer import JavaSyntaxError, SourceSpan, Tok, tokenize, unescape


class SubsetViolation(Exception):
    def __init__(self, span: SourceSpan, construct: str):
        super().__init__(f"{span}: {construct} is outside the analyzed Java subset")
        self.span = span
        self.construct = construct


MODIFIERS = {"public", "private", "protected", "static", "final", "abstract",
             "synchronized", "native", "transient", "volatile", "strictfp", "default"}
PRIMITIVES = {"int", "long", "short", "byte", "boolean", "double", "float", "char", "void"}
INT_TYPES = {"int", "long", "short", "byte", "Integer", "Long", "Short"}
UNSUPPORTED_STMTS = {
    "for": "for-statement", "do": "do-statement", "switch": "switch-statement",
    "try": "try-statement", "throw": "throw-statement", "break": "break-statement",
    "continue": "continue-statement", "synchronized": "synchronized-statement",
    "assert": "assert-statement", "class": "local class", "yield": "yield-statement",
    "interface": "local interface", "enum": "local enum", "record": "local record",
}
BINARY_LEVELS = [
    ("||",),
    ("&&",),
    ("==", "!="),
    ("<", ">", "<=", ">="),
    ("+", "-"),
    ("*", "/", "%"),
]
UNSUPPORTED_OPS = {"&", "|", "^", "<<", ">>", ">>>", "?", "->", "::", "~", "instanceof",
                   "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>="}


def is_int_type(t: Optional[str]) -> bool:
    return t in INT_TYPES


def is_string_type(t: Optional[str]) -> bool:
    return t in ("String", "java.lang.String")


class _Cursor:
    def __init__(self, toks: list[Tok], file: str, source: str):
        self.toks = toks
        self.i = 0
        self.file = file
        self.source = source

    def peek(self, k: int = 0) -> Tok:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def advance(self) -> Tok:
        tok = self.toks[self.i]
        if tok.kind != "eof":
            self.i += 1
        return tok

    def span(self, tok: Optional[Tok] = None) -> SourceSpan:
        tok = tok or self.peek()
        return SourceSpan(self.file, tok.line, tok.col)

    def at(self, text: str, k: int = 0) -> bool:
        tok = self.peek(k)
        return tok.text == text and tok.kind in ("op", "ident")

    def accept(self, text: str) -> Optional[Tok]:
        if self.at(text):
            return self.advance()
        return None

    def expect(self, text: str) -> Tok:
        tok = self.peek()
        if not self.at(text):
            raise JavaSyntaxError(self.span(tok), f"expected {text!r}, found {tok.text or 'end of file'!r}")
        return self.advance()

    def ident(self) -> Tok:
        tok = self.peek()
        if tok.kind != "ident":
            raise JavaSyntaxError(self.span(tok), f"expected identifier, found {tok.text or 'end of file'!r}")
        return self.advance()

    def skip_balanced(self, open_: str, close: str) -> int:
        """Skip from an opening token to its partner; returns the closing index."""
        depth = 0
        while True:
            tok = self.advance()
            if tok.kind == "eof":
                raise JavaSyntaxError(self.span(tok), f"unbalanced {open_!r}")
            if tok.text == open_ and tok.kind == "op":
                depth += 1
            elif tok.text == close and tok.kind == "op":
                depth -= 1
                if depth == 0:
                    return self.i - 1


class _Sig:
    """A method signature with the token range of its body."""

    def __init__(self, method: N.Method, body_range: Optional[tuple[int, int]]):
        self.method = method
        self.body_range = body_range


def _annotation_text(cur: _Cursor) -> tuple[str, str, Tok]:
    """Consume ``@Name[(...)]``; returns (name, raw text, first token)."""
    at = cur.expect("@")
    name_tok = cur.ident()
    name = name_tok.text
    while cur.at(".") and cur.peek(1).kind == "ident":
        cur.advance()
        name = cur.advance().text
    end_offset = name_tok.offset + len(name_tok.text)
    if cur.at("("):
        close = cur.skip_balanced("(", ")")
        end_offset = cur.toks[close].offset + 1
    return name, cur.source[at.offset:end_offset], at


def _type_name(cur: _Cursor, allow_generics: bool) -> str:
    first = cur.ident()
    parts = [first.text]
    while cur.at(".") and cur.peek(1).kind == "ident":
        cur.advance()
        parts.append(cur.advance().text)
    text = ".".join(parts)
    if cur.at("<"):
        if not allow_generics:
            raise SubsetViolation(cur.span(), "generic type")
        start = cur.i
        depth = 0
        while True:
            tok = cur.advance()
            if tok.kind == "eof":
                raise JavaSyntaxError(cur.span(tok), "unterminated type arguments")
            if tok.text == "<":
                depth += 1
            elif tok.text == ">":
                depth -= 1
            elif tok.text == ">>":
                depth -= 2
            elif tok.text == ">>>":
                depth -= 3
            if depth <= 0:
                break
        text += "".join(t.text for t in cur.toks[start:cur.i])
    while cur.at("[") and cur.at("]", 1):
        if not allow_generics:
            raise SubsetViolation(cur.span(), "array type")
        cur.advance()
        cur.advance()
        text += "[]"
    return text


def _short(type_name: str) -> str:
    base = type_name.split("<", 1)[0]
    return base.rsplit(".", 1)[-1]


class _UnitParser:
    def __init__(self, source: str, file: str):
        self.source = source
        self.file = file
        self.cur = _Cursor(tokenize(source, file), file, source)
        self.sigs: list[_Sig] = []

    def parse(self) -> N.CompilationUnit:
        cur = self.cur
        start = cur.span()
        classes = []
        while cur.peek().kind != "eof":
            if cur.at("package") or cur.at("import"):
                while not cur.at(";"):
                    if cur.peek().kind == "eof":
                        raise JavaSyntaxError(cur.span(), "expected ';'")
                    cur.advance()
                cur.advance()
                continue
            if cur.accept(";"):
                continue
            cls = self.type_decl()
            if cls is not None:
                classes.append(cls)
        unit = N.CompilationUnit(start, self.file, classes)
        methods_by_class: dict[str, dict[tuple[str, int], N.Method]] = {}
        for sig in self.sigs:
            m = sig.method
            methods_by_class.setdefault(m.class_name, {})[(m.name, len(m.params))] = m
        for sig in self.sigs:
            if sig.body_range is not None:
                _BodyParser(self, sig, methods_by_class).run()
        return unit

    def modifiers(self):
        mods = []
        anns = []
        while True:
            tok = self.cur.peek()
            if tok.kind == "ident" and tok.text in MODIFIERS:
                mods.append(self.cur.advance().text)
            elif tok.text == "@" and not self.cur.at("interface", 1):
                anns.append(_annotation_text(self.cur))
            else:
                return mods, anns

    def type_decl(self) -> Optional[N.ClassDecl]:
        cur = self.cur
        self.modifiers()
        tok = cur.peek()
        if tok.text in ("interface", "enum", "record") or (tok.text == "@" and cur.at("interface", 1)):
            # other type declarations carry nothing we analyze
            while not cur.at("{"):
                if cur.peek().kind == "eof":
                    raise JavaSyntaxError(cur.span(), "expected '{'")
                cur.advance()
            cur.skip_balanced("{", "}")
            return None
        kw = cur.expect("class")
        name = cur.ident().text
        if cur.at("<"):
            cur.skip_balanced("<", ">")
        while not cur.at("{"):
            if cur.peek().kind == "eof":
                raise JavaSyntaxError(cur.span(), "expected '{'")
            cur.advance()
        cur.expect("{")
        methods = []
        while not cur.accept("}"):
            if cur.peek().kind == "eof":
                raise JavaSyntaxError(cur.span(), "expected '}'")
            m = self.member(name)
            if m is not None:
                methods.append(m)
        return N.ClassDecl(cur.span(kw), name, methods)

    def member(self, class_name: str) -> Optional[N.Method]:
        cur = self.cur
        if cur.accept(";"):
            return None
        start_tok = cur.peek()
        mods, anns = self.modifiers()
        if cur.at("class") or cur.at("interface") or cur.at("enum") or cur.at("record"):
            while not cur.at("{"):
                cur.advance()
            cur.skip_balanced("{", "}")
            return None
        if cur.at("{"):  # initializer block
            cur.skip_balanced("{", "}")
            return None
        if cur.at("<"):
            cur.skip_balanced("<", ">")
        first = cur.peek()
        span = cur.span(anns[0][2] if anns else start_tok)
        if first.kind == "ident" and first.text == class_name and cur.at("(", 1):
            cur.advance()
            ret_type, name = "void", "<init>"
        else:
            ret_type = _type_name(cur, allow_generics=True)
            name_tok = cur.ident()
            name = name_tok.text
            if not cur.at("("):
                # field declaration; skip its initializer
                depth = 0
                while True:
                    tok = cur.advance()
                    if tok.kind == "eof":
                        raise JavaSyntaxError(cur.span(tok), "expected ';'")
                    if tok.text in ("(", "{", "["):
                        depth += 1
                    elif tok.text in (")", "}", "]"):
                        depth -= 1
                    elif tok.text == ";" and depth == 0:
                        return None
        ret_ann = None
        for ann_name, text, tok in anns:
            if ann_name == "Sql":
                ret_ann = N.SqlAnnotationDecl(cur.span(tok), "return", -1, text)
        slots: list[N.SlotInfo] = []
        params = self.params(slots)
        while cur.at("[") and cur.at("]", 1):
            cur.advance()
            cur.advance()
        if cur.accept("throws"):
            _type_name(cur, allow_generics=True)
            while cur.accept(","):
                _type_name(cur, allow_generics=True)
        body_range = None
        if cur.at("{"):
            open_i = cur.i
            close_i = cur.skip_balanced("{", "}")
            body_range = (open_i, close_i)
        else:
            cur.expect(";")
        method = N.Method(span, class_name, name, ret_type, params, None,
                          slots=slots, return_annotation=ret_ann, modifiers=tuple(mods))
        self.sigs.append(_Sig(method, body_range))
        return method

    def params(self, slots: list[N.SlotInfo]) -> list[N.Param]:
        cur = self.cur
        cur.expect("(")
        params = []
        if cur.accept(")"):
            return params
        while True:
            ptok = cur.peek()
            ann = None
            while True:
                if cur.accept("final"):
                    continue
                if cur.at("@"):
                    name, text, at_tok = _annotation_text(cur)
                    if name == "Sql":
                        ann = N.SqlAnnotationDecl(cur.span(at_tok), "param", len(params), text)
                    continue
                break
            type_name = _type_name(cur, allow_generics=True)
            if cur.accept("..."):
                type_name += "..."
            name = cur.ident().text
            slot = len(slots)
            slots.append(N.SlotInfo(name, type_name, True))
            params.append(N.Param(cur.span(ptok), type_name, name, slot, ann))
            if cur.accept(")"):
                return params
            cur.expect(",")


class _BodyParser:
    def __init__(self, unit: _UnitParser, sig: _Sig, methods_by_class):
        self.unit = unit
        self.method = sig.method
        self.methods_by_class = methods_by_class
        open_i, close_i = sig.body_range
        toks = unit.cur.toks[open_i:close_i + 1] + [unit.cur.toks[-1]]
        self.cur = _Cursor(toks, unit.file, unit.source)
        self.scopes: list[dict[str, int]] = [{p.name: p.slot for p in self.method.params}]

    def run(self):
        try:
            self.method.body = self.block()
        except SubsetViolation as exc:
            self.method.body = None
            self.method.violation = (exc.span, exc.construct)

    # scopes

    def lookup(self, name: str) -> Optional[int]:
        for scope in reversed(self.scopes):
            if name in scope:
                return scope[name]
        return None

    def declare(self, name: str, type_name: str, tok: Tok) -> int:
        if self.lookup(name) is not None:
            raise JavaSyntaxError(self.cur.span(tok), f"variable {name!r} is already defined")
        slot = len(self.method.slots)
        self.method.slots.append(N.SlotInfo(name, type_name, False))
        self.scopes[-1][name] = slot
        return slot

    def slot_type(self, slot: int) -> str:
        return self.method.slots[slot].type_name

    # statements

    def block(self) -> N.Block:
        cur = self.cur
        open_tok = cur.expect("{")
        self.scopes.append({})
        stmts: list[N.Stmt] = []
        while not cur.at("}"):
            if cur.peek().kind == "eof":
                raise JavaSyntaxError(cur.span(), "expected '}'")
            stmts.extend(self.statement())
        cur.expect("}")
        self.scopes.pop()
        return N.Block(cur.span(open_tok), stmts)

    def sub_statement(self) -> N.Stmt:
        stmts = self.statement()
        if len(stmts) == 1:
            return stmts[0]
        raise SubsetViolation(self.cur.span(), "declaration as branch body")

    def statement(self) -> list[N.Stmt]:
        cur = self.cur
        tok = cur.peek()
        span = cur.span(tok)
        if tok.kind == "ident" and tok.text in UNSUPPORTED_STMTS:
            raise SubsetViolation(span, UNSUPPORTED_STMTS[tok.text])
        if tok.kind == "ident" and cur.at(":", 1):
            raise SubsetViolation(span, "labeled statement")
        if cur.at("{"):
            return [self.block()]
        if cur.accept(";"):
            return []
        if cur.accept("if"):
            cur.expect("(")
            cond = self.expr()
            cur.expect(")")
            self.scopes.append({})
            then = self.sub_statement()
            self.scopes.pop()
            orelse = None
            if cur.accept("else"):
                self.scopes.append({})
                orelse = self.sub_statement()
                self.scopes.pop()
            return [N.If(span, cond, then, orelse)]
        if cur.accept("while"):
            cur.expect("(")
            cond = self.expr()
            cur.expect(")")
            self.scopes.append({})
            body = self.sub_statement()
            self.scopes.pop()
            return [N.While(span, cond, body)]
        if cur.accept("return"):
            value = None
            if not cur.at(";"):
                value = self.expr()
            cur.expect(";")
            return [N.Return(span, value)]
        if self.looks_like_decl():
            return self.local_decl()
        return [self.expr_statement()]

    def looks_like_decl(self) -> bool:
        cur = self.cur
        tok = cur.peek()
        if tok.kind != "ident":
            return False
        if tok.text == "final":
            return True
        if tok.text == "var" and cur.peek(1).kind == "ident":
            return True
        if tok.text in PRIMITIVES:
            return True
        if self.lookup(tok.text) is not None:
            return False
        k = 1
        while cur.at(".", k) and cur.peek(k + 1).kind == "ident":
            k += 2
        nxt = cur.peek(k)
        if nxt.kind == "ident":
            return True
        if nxt.text == "<" or (nxt.text == "[" and cur.at("]", k + 1)):
            return True
        return False

    def local_decl(self) -> list[N.Stmt]:
        cur = self.cur
        while cur.accept("final"):
            pass
        if cur.at("@"):
            raise SubsetViolation(cur.span(), "annotated local variable")
        type_tok = cur.peek()
        type_name = _type_name(cur, allow_generics=False)
        out = []
        while True:
            name_tok = cur.ident()
            if cur.at("["):
                raise SubsetViolation(cur.span(), "array declarator")
            init = None
            if cur.accept("="):
                init = self.expr()
            decl_type = type_name
            if type_name == "var":
                if init is None or init.type in (None, "null"):
                    raise SubsetViolation(cur.span(name_tok), "var without a known initializer type")
                decl_type = init.type
            slot = self.declare(name_tok.text, decl_type, name_tok)
            out.append(N.LocalDecl(cur.span(type_tok), decl_type, name_tok.text, slot, init))
            if cur.accept(";"):
                return out
            cur.expect(",")

    def expr_statement(self) -> N.Stmt:
        cur = self.cur
        tok = cur.peek()
        span = cur.span(tok)
        if tok.kind == "ident" and cur.peek(1).text in ("=", "+=", "-=") and cur.peek(1).kind == "op":
            slot = self.lookup(tok.text)
            if slot is None:
                raise SubsetViolation(span, "field write")
            cur.advance()
            op = cur.advance().text
            value = self.expr()
            cur.expect(";")
            target = N.Name(span, tok.text, slot, type=self.slot_type(slot))
            if op != "=" and not (is_string_type(target.type) or is_int_type(target.type)):
                raise SubsetViolation(span, f"compound assignment on {target.type}")
            if op == "-=" and not is_int_type(target.type):
                raise SubsetViolation(span, "'-=' on a non-integer")
            return N.Assign(span, target, op, value)
        if tok.kind == "ident" and cur.peek(1).kind == "op" and cur.peek(1).text in UNSUPPORTED_OPS:
            raise SubsetViolation(cur.span(cur.peek(1)), f"operator {cur.peek(1).text}")
        expr = self.expr()
        if not isinstance(expr, (N.Call, N.New, N.IncDec)):
            if cur.peek().text in UNSUPPORTED_OPS or cur.peek().text == "[":
                raise SubsetViolation(cur.span(), f"operator {cur.peek().text}")
            raise JavaSyntaxError(span, "not a statement")
        cur.expect(";")
        return N.ExprStmt(span, expr)

    # expressions

    def expr(self) -> N.Expr:
        e = self.binary(0)
        tok = self.cur.peek()
        if tok.text in UNSUPPORTED_OPS and tok.kind in ("op", "ident"):
            raise SubsetViolation(self.cur.span(tok), f"operator {tok.text}")
        if tok.text == "=" or tok.text in ("+=", "-="):
            raise SubsetViolation(self.cur.span(tok), "assignment expression")
        return e

    def binary(self, level: int) -> N.Expr:
        if level == len(BINARY_LEVELS):
            return self.unary()
        cur = self.cur
        left = self.binary(level + 1)
        while cur.peek().kind == "op" and cur.peek().text in BINARY_LEVELS[level]:
            op_tok = cur.advance()
            right = self.binary(level + 1)
            left = N.Binary(left.span, op_tok.text, left, right, type=_binary_type(op_tok.text, left, right))
        return left

    def unary(self) -> N.Expr:
        cur = self.cur
        tok = cur.peek()
        if tok.kind == "op" and tok.text in ("!", "-", "+"):
            cur.advance()
            operand = self.unary()
            if tok.text == "-" and isinstance(operand, N.Literal) and isinstance(operand.value, int) \
                    and not isinstance(operand.value, bool):
                return N.Literal(cur.span(tok), -operand.value, type=operand.type)
            t = "boolean" if tok.text == "!" else operand.type
            return N.Unary(cur.span(tok), tok.text, operand, type=t)
        if tok.kind == "op" and tok.text in ("++", "--"):
            cur.advance()
            target = self.unary()
            if not isinstance(target, N.Name) or not is_int_type(target.type):
                raise SubsetViolation(cur.span(tok), f"{tok.text} on a non-local")
            return N.IncDec(cur.span(tok), tok.text, True, target, type=target.type)
        if tok.text in ("~",):
            raise SubsetViolation(cur.span(tok), f"operator {tok.text}")
        return self.postfix()

    def postfix(self) -> N.Expr:
        cur = self.cur
        e = self.primary()
        while True:
            if cur.at("."):
                cur.advance()
                if cur.at("<"):
                    raise SubsetViolation(cur.span(), "generic method call")
                name_tok = cur.ident()
                if cur.at("("):
                    args = self.arguments()
                    e = self.make_call(e, name_tok, args)
                elif isinstance(e, N.ExternalRef):
                    e = N.ExternalRef(e.span, e.path + (name_tok.text,))
                else:
                    raise SubsetViolation(cur.span(name_tok), "field access")
            elif cur.at("["):
                raise SubsetViolation(cur.span(), "array access")
            elif cur.peek().kind == "op" and cur.peek().text in ("++", "--"):
                tok = cur.advance()
                if not isinstance(e, N.Name) or not is_int_type(e.type):
                    raise SubsetViolation(cur.span(tok), f"{tok.text} on a non-local")
                e = N.IncDec(e.span, tok.text, False, e, type=e.type)
            elif cur.at("::"):
                raise SubsetViolation(cur.span(), "method reference")
            else:
                return e

    def arguments(self) -> list[N.Expr]:
        cur = self.cur
        cur.expect("(")
        args = []
        if cur.accept(")"):
            return args
        while True:
            args.append(self.expr())
            if cur.accept(")"):
                return args
            cur.expect(",")

    def primary(self) -> N.Expr:
        cur = self.cur
        tok = cur.peek()
        span = cur.span(tok)
        if tok.kind == "string":
            cur.advance()
            return N.Literal(span, unescape(tok.text[1:-1]), type="String")
        if tok.kind == "int":
            cur.advance()
            text = tok.text.replace("_", "")
            if "." in text or text[-1] in "fFdD" and not text.lower().startswith("0x"):
                return N.Literal(span, None, type="double")
            t = "long" if text[-1] in "lL" else "int"
            text = text.rstrip("lL")
            value = int(text, 16) if text.lower().startswith("0x") else int(text)
            return N.Literal(span, value, type=t)
        if tok.kind == "char":
            raise SubsetViolation(span, "char literal")
        if tok.kind == "ident":
            if tok.text in ("true", "false"):
                cur.advance()
                return N.Literal(span, tok.text == "true", type="boolean")
            if tok.text == "null":
                cur.advance()
                return N.Literal(span, None, type="null")
            if tok.text == "new":
                return self.new_expr()
            if tok.text == "this":
                cur.advance()
                if cur.at(".") and cur.peek(1).kind == "ident" and cur.at("(", 2):
                    cur.advance()
                    name_tok = cur.advance()
                    return self.make_call(None, name_tok, self.arguments(), span=span)
                raise SubsetViolation(span, "field access")
            if tok.text == "super":
                raise SubsetViolation(span, "super reference")
            if cur.at("->", 1):
                raise SubsetViolation(span, "lambda expression")
            cur.advance()
            slot = self.lookup(tok.text)
            if slot is not None:
                return N.Name(span, tok.text, slot, type=self.slot_type(slot))
            if cur.at("("):
                return self.make_call(None, tok, self.arguments())
            if cur.at("."):
                return N.ExternalRef(span, (tok.text,))
            raise SubsetViolation(span, "field access")
        if tok.text == "(":
            if self.looks_like_cast():
                raise SubsetViolation(span, "cast expression")
            cur.advance()
            if cur.peek().kind == "ident" and cur.at("->", 1) or cur.at(")") and cur.at("->", 1):
                raise SubsetViolation(span, "lambda expression")
            e = self.expr()
            cur.expect(")")
            if cur.at("->"):
                raise SubsetViolation(span, "lambda expression")
            return e
        if tok.text in UNSUPPORTED_OPS or tok.text == "{":
            raise SubsetViolation(span, f"operator {tok.text}")
        raise JavaSyntaxError(span, f"unexpected {tok.text or 'end of file'!r}")

    def looks_like_cast(self) -> bool:
        cur = self.cur
        if cur.peek(1).kind != "ident":
            return False
        k = 2
        while cur.at(".", k) and cur.peek(k + 1).kind == "ident":
            k += 2
        if cur.at("<", k) or (cur.at("[", k) and cur.at("]", k + 1)):
            return True
        if not cur.at(")", k):
            return False
        after = cur.peek(k + 1)
        first = cur.peek(1).text
        if first in PRIMITIVES:
            return True
        if self.lookup(first) is not None:
            return False
        return after.kind in ("ident", "string", "int", "char") or after.text in ("(", "!")

    def new_expr(self) -> N.Expr:
        cur = self.cur
        tok = cur.expect("new")
        span = cur.span(tok)
        type_name = _type_name(cur, allow_generics=True)
        if cur.at("["):
            raise SubsetViolation(span, "array creation")
        if "[]" in type_name:
            raise SubsetViolation(span, "array creation")
        args = self.arguments()
        if cur.at("{"):
            raise SubsetViolation(span, "anonymous class")
        return N.New(span, type_name, args, type=_short(type_name))

    def make_call(self, receiver: Optional[N.Expr], name_tok: Tok, args, span=None) -> N.Call:
        span = span or (receiver.span if receiver is not None else self.cur.span(name_tok))
        name = name_tok.text
        call = N.Call(span, receiver, name, args)
        if receiver is None:
            cls = self.method.class_name
            target = self.methods_by_class.get(cls, {}).get((name, len(args)))
            call.target = (cls, name, len(args))
            call.type = target.return_type if target is not None else None
            if call.type == "void":
                call.type = "void"
            return call
        if isinstance(receiver, N.ExternalRef):
            cls = receiver.path[-1]
            target = self.methods_by_class.get(cls, {}).get((name, len(args)))
            if target is not None:
                call.target = (cls, name, len(args))
                call.type = target.return_type
            elif len(receiver.path) == 1:
                # calls into classes outside this file are resolved by the checker
                call.target = (cls, name, len(args))
            return call
        rtype = receiver.type
        if rtype is not None and _short(rtype) in JDBC_TYPES:
            api = classify_call(receiver_of(_short(rtype)), name)
            call.api = api
            call.type = result_type(api)
        return call


def _binary_type(op: str, left: N.Expr, right: N.Expr) -> Optional[str]:
    if op in ("==", "!=", "<", ">", "<=", ">=", "&&", "||"):
        return "boolean"
    lt, rt = left.type, right.type
    if op == "+" and (is_string_type(lt) or is_string_type(rt)):
        return "String"
    if is_int_type(lt) and is_int_type(rt):
        return "long" if "long" in (lt, rt) or "Long" in (lt, rt) else "int"
    if lt in ("double", "float") or rt in ("double", "float"):
        return "double"
    return None


def parse_java(source: str, file: str = "<input>") -> N.CompilationUnit:
    """Parse a compilation unit of the subset.

    Raises :class:`JavaSyntaxError` for text that is not Java.  Subset
    violations do not raise; they are recorded on the enclosing method.
    """
    return _UnitParser(source, file).parse()
