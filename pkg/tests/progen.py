"""Shared helpers for the test suite: corpus loading, random programs and a
brute-force path enumerator used as the constant-propagation oracle."""

import random
import re
from pathlib import Path

from oopsie.javafront import nodes as N
from oopsie.javafront.parser import is_string_type

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"
GALLERY = ROOT / "gallery"

# PASS/FAIL lines collected by the acceptance tests
ACCEPTANCE = []

# diagnostic code -> oracle exception category
CODE_CATEGORY = {"OOPS001": 1, "OOPS004": 2, "OOPS005": 3, "OOPS006": 3, "OOPS007": 4, "OOPS008": 4}


def corpus_programs():
    return sorted((CORPUS / "programs").glob("*.java"))


def corpus_sources():
    return [(str(p.relative_to(ROOT)), p.read_text()) for p in corpus_programs()]


# --- mutation used by the locality check ------------------------------------------

_SQL_LITERAL = re.compile(r'"\s*(?:SELECT|INSERT|UPDATE|DELETE)\b(?:[^"\\]|\\.)*"', re.IGNORECASE)


def unextractable(source: str) -> str:
    """Replace the first SQL string literal with a value no analysis can know."""
    m = _SQL_LITERAL.search(source)
    if m is None:
        raise ValueError("no SQL literal to replace")
    return source[:m.start()] + 'System.getenv("SQL")' + source[m.end():]


# --- random loop-free methods for constant propagation ------------------------------

INT_VARS = ("a", "b", "c")
STR_VARS = ("s", "t")
FLAGS = ("f0", "f1", "f2")


class MethodGen:
    def __init__(self, rng: random.Random):
        self.rng = rng
        self.ifs = 0

    def int_lit(self):
        return str(self.rng.randint(-5, 9))

    def str_lit(self):
        return '"' + self.rng.choice(["x", "y", "SELECT ", "id", "", "7"]) + '"'

    def int_expr(self):
        r = self.rng
        v = r.choice(INT_VARS)
        return r.choice([
            self.int_lit(), v, f"{v} + {self.int_lit()}", f"{v} - {r.choice(INT_VARS)}",
            f"{v} * {self.int_lit()}", f"-{v}", f"{v}++", f"{r.choice(INT_VARS)} + {v}",
        ])

    def str_expr(self):
        r = self.rng
        s = r.choice(STR_VARS)
        return r.choice([
            self.str_lit(), s, f"{s} + {self.str_lit()}", f"{s} + {r.choice(INT_VARS)}",
            f"{self.str_lit()} + {r.choice(STR_VARS)}", f"{r.choice(INT_VARS)} + {self.str_lit()}",
        ])

    def stmt(self, depth):
        r = self.rng
        k = r.random()
        if k < 0.2 and depth < 2 and self.ifs < 5:
            self.ifs += 1
            cond = r.choice([r.choice(FLAGS), f"{r.choice(INT_VARS)} < {self.int_lit()}"])
            then = self.stmts(depth + 1)
            if r.random() < 0.6:
                return [f"if ({cond}) {{"] + then + ["} else {"] + self.stmts(depth + 1) + ["}"]
            return [f"if ({cond}) {{"] + then + ["}"]
        if k < 0.45:
            return [f"{r.choice(INT_VARS)} = {self.int_expr()};"]
        if k < 0.55:
            return [f"{r.choice(INT_VARS)} {r.choice(['+=', '-='])} {self.int_lit()};"]
        if k < 0.62:
            return [f"{r.choice(INT_VARS)}{r.choice(['++', '--'])};"]
        if k < 0.8:
            return [f"{r.choice(STR_VARS)} = {self.str_expr()};"]
        if k < 0.88:
            return [f"{r.choice(STR_VARS)} += {r.choice([self.str_lit(), r.choice(INT_VARS)])};"]
        v = r.choice(INT_VARS + STR_VARS)
        return [f"sink({v});"]

    def stmts(self, depth):
        out = []
        for _ in range(self.rng.randint(1, 3)):
            out += self.stmt(depth)
        return out

    def method(self) -> str:
        body = [f"int {v} = {self.int_lit()};" for v in INT_VARS]
        body += [f"String {v} = {self.str_lit()};" for v in STR_VARS]
        for _ in range(self.rng.randint(2, 6)):
            body += self.stmt(0)
        body.append("sink(a + b + c + s + t);")
        params = ", ".join(f"boolean {f}" for f in FLAGS)
        lines = ["class R {", f"    void m({params}) {{"]
        lines += ["        " + ln for ln in body]
        lines += ["    }", "}"]
        return "\n".join(lines) + "\n"


_I64 = 1 << 64


def _w(v):
    v &= _I64 - 1
    return v - _I64 if v >= 1 << 63 else v


def _text(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


class PathEnumerator:
    """Concrete execution of a loop-free method along every branch combination.

    Works on the statement tree, not on the CFG, and records the environment
    seen before every simple statement.
    """

    def __init__(self):
        self.seen = []  # (stmt, env)

    def run(self, method: N.Method):
        self.block(method.body.stmts, [{}])

    def block(self, stmts, envs):
        for s in stmts:
            envs = [out for env in envs for out in self.stmt(s, env)]
        return envs

    def stmt(self, s, env):
        if isinstance(s, N.Block):
            return self.block(s.stmts, [env])
        if isinstance(s, N.If):
            out = self.block([s.then], [dict(env)])
            out += self.block([s.orelse], [dict(env)]) if s.orelse is not None else [dict(env)]
            return out
        self.seen.append((s, dict(env)))
        env = dict(env)
        if isinstance(s, N.LocalDecl):
            env[s.slot] = self.eval(s.init, env)
        elif isinstance(s, N.Assign):
            v = self.eval(s.value, env)
            if s.op == "=":
                env[s.target.slot] = v
            elif is_string_type(s.target.type):
                env[s.target.slot] = _text(env[s.target.slot]) + _text(v)
            elif s.op == "+=":
                env[s.target.slot] = _w(env[s.target.slot] + v)
            else:
                env[s.target.slot] = _w(env[s.target.slot] - v)
        elif isinstance(s, N.ExprStmt):
            self.eval(s.expr, env)
        return [env]

    def eval(self, e, env):
        if isinstance(e, N.Literal):
            return e.value
        if isinstance(e, N.Name):
            return env.get(e.slot)
        if isinstance(e, N.IncDec):
            old = env[e.target.slot]
            new = _w(old + (1 if e.op == "++" else -1))
            env[e.target.slot] = new
            return new if e.prefix else old
        if isinstance(e, N.Unary):
            return _w(-self.eval(e.operand, env))
        if isinstance(e, N.Binary):
            x = self.eval(e.left, env)
            y = self.eval(e.right, env)
            if e.op == "+" and is_string_type(e.type):
                return _text(x) + _text(y)
            if e.op == "+":
                return _w(x + y)
            if e.op == "-":
                return _w(x - y)
            if e.op == "*":
                return _w(x * y)
            return None
        if isinstance(e, N.Call):
            for a in e.args:
                self.eval(a, env)
            return None
        raise AssertionError(f"unexpected expression {e!r}")


# --- bulk subset code for throughput ------------------------------------------------

def bulk_sources(min_lines: int):
    """Renamed copies of the corpus programs until ``min_lines`` is reached."""
    originals = [(p.stem, p.read_text()) for p in corpus_programs()]
    out, total, k = [], 0, 0
    while total < min_lines:
        stem, text = originals[k % len(originals)]
        name = f"{stem}{k}"
        body = re.sub(rf"\b{stem}\b", name, text)
        out.append((f"bulk/{name}.java", body))
        total += body.count("\n")
        k += 1
    return out, total
