import random

from oopsie import constprop as cp
from oopsie.javafront import build_cfg, parse_java
from oopsie.javafront import nodes as N
from progen import GALLERY, MethodGen, PathEnumerator, corpus_sources


def method_of(text):
    return next(parse_java(text, "T.java").methods())


def body(stmts, params=""):
    return method_of("class T { void m(" + params + ") { " + stmts + " } }")


def slot(m, name):
    return next(i for i, s in enumerate(m.slots) if s.name == name)


def simple_stmts(stmt):
    if isinstance(stmt, N.Block):
        for s in stmt.stmts:
            yield from simple_stmts(s)
    elif isinstance(stmt, N.If):
        yield from simple_stmts(stmt.then)
        if stmt.orelse is not None:
            yield from simple_stmts(stmt.orelse)
    elif isinstance(stmt, N.While):
        yield from simple_stmts(stmt.body)
    else:
        yield stmt


def call_named(m, name):
    for stmt in simple_stmts(m.body):
        for e in N.stmt_exprs(stmt):
            for x in N.walk_expr(e):
                if isinstance(x, N.Call) and x.name == name:
                    return x
    raise KeyError(name)


def test_string_append():
    m = body('String sql = "SELECT name FROM "; sql += "employee WHERE salary < ?";')
    s = slot(m, "sql")
    state = cp.transfer_value(m.body.stmts[0], {})
    state = cp.transfer_value(m.body.stmts[1], state)
    assert state[s] == cp.known("SELECT name FROM employee WHERE salary < ?")


def test_post_increment_argument():
    m = body("int ctr = 1; sink(ctr++, q);", "int q")
    ctr = slot(m, "ctr")
    seen = []
    state = cp.transfer_value(m.body.stmts[0], {})
    state = cp.transfer_value(m.body.stmts[1], state, on_call=lambda c, a: seen.append(a))
    assert seen[0][0] == cp.known(1)
    assert seen[0][1] is cp.TOP
    assert state[ctr] == cp.known(2)


def test_top_absorbs():
    m = body('String y = x + "a";', "String x")
    state = cp.transfer_value(m.body.stmts[0], {})
    assert cp.get(state, slot(m, "y")) is cp.TOP


def test_join_examples():
    a, b = cp.known("A"), cp.known("B")
    assert cp.join_value({0: a}, {0: b}) == {0: cp.known("A", "B")}
    assert cp.join_value({0: a}, None) == {0: a}
    assert cp.get(cp.join_value({0: a}, {}), 0) is cp.TOP


def test_cap_collapses_to_top():
    v = cp.from_set(range(cp.CAP))
    assert isinstance(v, cp.Known)
    assert cp.join(v, cp.known(cp.CAP)) is cp.TOP


def test_wrap64():
    assert cp.wrap64(2 ** 63) == -(2 ** 63)
    assert cp.wrap64(-(2 ** 63) - 1) == 2 ** 63 - 1
    m = body("long x = 9223372036854775807L; x += 1;")
    state = cp.transfer_value(m.body.stmts[0], {})
    state = cp.transfer_value(m.body.stmts[1], state)
    assert state[slot(m, "x")] == cp.known(-(2 ** 63))


def test_solve_salary_pipeline():
    m = method_of((GALLERY / "SalaryPipeline.java").read_text())
    sol = cp.solve_values(build_cfg(m))
    args = sol.args(call_named(m, "prepareStatement"))
    assert args[0] == cp.known("SELECT name FROM employee WHERE salary < ?")


def test_solve_loop_is_stable():
    m = method_of((GALLERY / "StockLoop.java").read_text())
    sol = cp.solve_values(build_cfg(m))
    args = sol.args(call_named(m, "prepareStatement"))
    assert args[0] == cp.known("select * from stock where s_i_id = ? and s_w_id = ?")


def test_if_else_join():
    m = body('String s; if (f) { s = "A"; } else { s = "B"; } sink(s);', "boolean f")
    sol = cp.solve_values(build_cfg(m))
    assert sol.args(call_named(m, "sink"))[0] == cp.known("A", "B")


def test_loop_counter_goes_top():
    m = body("int i = 0; while (i < n) { i++; } sink(i);", "int n")
    sol = cp.solve_values(build_cfg(m))
    assert sol.args(call_named(m, "sink"))[0] is cp.TOP


_INT_POOL = [cp.BOTTOM, cp.TOP, cp.known(0), cp.known(1), cp.known(0, 1), cp.known(2, 5)]
_STR_POOL = [cp.BOTTOM, cp.TOP, cp.known(""), cp.known("x"), cp.known("x", "y")]


def _rand_state(rng, m):
    state = {}
    for s, info in enumerate(m.slots):
        if not cp.tracked(info.type_name):
            continue
        v = rng.choice(_INT_POOL if info.type_name == "int" else _STR_POOL)
        if v is not cp.TOP:
            state[s] = v
    return state


def test_monotone_transfer_and_join():
    rng = random.Random(11)
    for _ in range(150):
        m = method_of(MethodGen(rng).method())
        cfg = build_cfg(m)
        stmts = list(cfg.statements())
        for _ in range(10):
            lo = _rand_state(rng, m)
            hi = cp.join_value(lo, _rand_state(rng, m))
            other = _rand_state(rng, m)
            assert cp.state_leq(lo, hi)
            assert cp.state_leq(cp.join_value(lo, other), cp.join_value(hi, other))
            stmt = rng.choice(stmts)
            # arguments stay inside the value lattice too
            assert cp.state_leq(cp.transfer_value(stmt, lo), cp.transfer_value(stmt, hi))


def test_visit_bound():
    sources = corpus_sources() + [("L.java", """
        class L { void m(int n, boolean f) {
            int i = 0; String s = "a";
            while (i < n) { if (f) { s = s + "b"; } i = i + 1; }
            sink(s, i);
        } }""")]
    for path, text in sources:
        for m in parse_java(text, path).methods():
            if m.violation or m.body is None:
                continue
            sol = cp.solve_values(build_cfg(m))
            bound = cp.CAP * max(1, len(m.slots)) + 2
            assert max(sol.visits.values()) <= bound, path


def test_paths_within_known_sets():
    rng = random.Random(3)
    for _ in range(200):
        m = method_of(MethodGen(rng).method())
        cfg = build_cfg(m)
        sol = cp.solve_values(cfg)
        paths = PathEnumerator()
        paths.run(m)
        for stmt, env in paths.seen:
            for s, value in env.items():
                v = cp.get(sol.before[stmt], s)
                assert v is cp.TOP or (v is not cp.BOTTOM and value in v.values)
