import random

import pytest

from oopsie.javafront import (JavaSyntaxError, Receiver, Role, build_cfg, classify_call,
                              parse_java, render_java)
from oopsie.javafront import nodes as N
from progen import GALLERY, MethodGen, corpus_sources

SALARY = (GALLERY / "SalaryPipeline.java").read_text()
STOCK = (GALLERY / "StockLoop.java").read_text()
IMAGE = (GALLERY / "ReassignImage.java").read_text()


def method_of(text, name=None):
    unit = parse_java(text, "T.java")
    for m in unit.methods():
        if name is None or m.name == name:
            return m
    raise KeyError(name)


def wrap(body, params=""):
    return ("import java.sql.*;\nclass T {\n  void m(Connection conn" + params + ") throws SQLException {\n"
            + body + "\n  }\n}\n")


def api_calls(method):
    out = []
    for stmt in flatten(method.body):
        for e in N.stmt_exprs(stmt):
            out += [x for x in N.walk_expr(e) if isinstance(x, N.Call) and x.api is not None
                    and x.api.role is not Role.OTHER]
    return out


def flatten(stmt):
    if isinstance(stmt, N.Block):
        for s in stmt.stmts:
            yield from flatten(s)
    elif isinstance(stmt, N.If):
        yield N.Cond(stmt.span, stmt.cond)
        yield from flatten(stmt.then)
        if stmt.orelse is not None:
            yield from flatten(stmt.orelse)
    elif isinstance(stmt, N.While):
        yield N.Cond(stmt.span, stmt.cond)
        yield from flatten(stmt.body)
    else:
        yield stmt


def test_salary_pipeline_shape():
    m = method_of(SALARY)
    assert len(m.body.stmts) == 6
    roles = [c.api.role for c in api_calls(m)]
    assert roles == [Role.CREATES_SQL_STATEMENT, Role.SETTER, Role.RETRIEVES_SQL_RESULT_SET, Role.GETTER]


def test_for_is_outside_subset():
    m = method_of(wrap("for (;;) {}"))
    assert m.violation is not None
    assert "for" in m.violation[1]


@pytest.mark.parametrize("body", [
    "try { conn.close(); } catch (SQLException e) { }",
    "Runnable r = () -> {};",
    "int[] xs = new int[3];",
])
def test_other_subset_violations(body):
    m = method_of(wrap(body))
    assert m.violation is not None


def test_not_java():
    with pytest.raises(JavaSyntaxError):
        parse_java("class { void", "bad.java")


def test_stock_loop_cfg():
    m = method_of(STOCK)
    cfg = build_cfg(m)
    ids = {b.id: i for i, b in enumerate(cfg.reverse_postorder())}
    back_edges = [(b.id, s.id) for b in cfg.blocks for s in b.succs if ids[s.id] <= ids[b.id]]
    assert back_edges
    joins = [b for b in cfg.blocks if len(b.preds) >= 2]
    assert len(joins) >= 2  # loop head and branch join


def test_empty_method_single_block():
    cfg = build_cfg(method_of("class T { void m() { } }"))
    assert len(cfg.blocks) == 1
    assert cfg.entry is cfg.exit


def test_if_else_diamond():
    cfg = build_cfg(method_of("class T { void m(boolean f) { int x; if (f) { x = 1; } else { x = 2; } } }"))
    assert len(cfg.blocks) == 4
    join = cfg.exit
    assert len(join.preds) == 2


def test_straight_line_single_block():
    m = method_of(IMAGE)
    cfg = build_cfg(m)
    assert len(cfg.blocks) == 1
    assert cfg.blocks[0].stmts == list(m.body.stmts)


def test_classify_call():
    assert classify_call("Connection", "prepareStatement").role is Role.CREATES_SQL_STATEMENT
    assert classify_call("Connection", "prepareStatement").sql_arg_index == 0
    assert classify_call("PreparedStatement", "executeQuery").role is Role.RETRIEVES_SQL_RESULT_SET
    assert classify_call("ResultSet", "getClass").role is Role.OTHER
    assert classify_call("java.sql.ResultSet", "getInt").java_type == "int"
    assert classify_call("Statement", "execute").role is Role.EXECUTES_WITH_SQL
    assert classify_call(None, "getInt").receiver is Receiver.OTHER


def test_classify_is_pure():
    for t in ("Connection", "Statement", "PreparedStatement", "ResultSet", "Object"):
        for name in ("prepareStatement", "executeQuery", "getString", "setInt", "next", "close"):
            assert classify_call(t, name) == classify_call(t, name)


def test_receiver_resolution_through_locals():
    m = method_of(wrap('PreparedStatement ps = conn.prepareStatement("x");\n ps.setInt(1, 2);'))
    call = m.body.stmts[1].expr
    assert call.api.role is Role.SETTER and call.api.java_type == "int"


def test_var_takes_api_type():
    m = method_of(wrap('var st = conn.prepareStatement("x");\n st.setLong(1, 2L);'))
    assert m.body.stmts[1].expr.api.role is Role.SETTER


def test_source_order_in_blocks():
    for path, text in corpus_sources():
        for m in parse_java(text, path).methods():
            if m.violation is not None or m.body is None:
                continue
            for b in build_cfg(m).blocks:
                lines = [(s.span.line, s.span.column) for s in b.stmts]
                assert lines == sorted(lines), path


def topological(cfg):
    """Kahn's algorithm, lowest block id first."""
    indeg = {b.id: len(b.preds) for b in cfg.blocks}
    ready = [b for b in cfg.blocks if indeg[b.id] == 0]
    order = []
    while ready:
        ready.sort(key=lambda b: b.id)
        b = ready.pop(0)
        order.append(b)
        for s in b.succs:
            indeg[s.id] -= 1
            if indeg[s.id] == 0:
                ready.append(s)
    assert len(order) == len(cfg.blocks)
    return order


def test_loop_free_relinearization():
    rng = random.Random(7)
    for _ in range(200):
        m = method_of(MethodGen(rng).method())
        cfg = build_cfg(m)
        linear = [s for b in topological(cfg) for s in b.stmts if not isinstance(s, N.Cond)]
        source = [s for s in flatten(m.body) if not isinstance(s, N.Cond)]
        assert linear == source


def test_round_trip_on_corpus():
    for path, text in corpus_sources() + [(str(p), p.read_text()) for p in sorted(GALLERY.glob("*.java"))]:
        first = parse_java(text, path)
        again = parse_java(render_java(first), path)
        assert N.structure(first) == N.structure(again), path
        assert render_java(again) == render_java(first)
