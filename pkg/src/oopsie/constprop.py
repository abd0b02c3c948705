"""Constant propagation of String and integer locals over a method CFG.

Each tracked slot holds a :class:`ConstValue`: ``BOTTOM`` (no value yet),
a bounded set of possible values, or ``TOP``.  Sets larger than :data:`CAP`
collapse to ``TOP``, which bounds the lattice height.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Union

from .javafront import nodes as N
from .javafront.cfg import Cfg
from .javafront.parser import is_int_type, is_string_type

CAP = 10

_I64 = 1 << 64


def wrap64(v: int) -> int:
    v &= _I64 - 1
    return v - _I64 if v >= 1 << 63 else v


class _Top:
    def __repr__(self):
        return "Top"


class _Bottom:
    def __repr__(self):
        return "Bottom"


TOP = _Top()
BOTTOM = _Bottom()


@dataclass(frozen=True)
class Known:
    values: frozenset

    def __post_init__(self):
        if not self.values or len(self.values) > CAP:
            raise ValueError("Known needs 1..CAP values")

    def __repr__(self):
        return f"Known({sorted(self.values, key=repr)!r})"

    @property
    def single(self):
        if len(self.values) == 1:
            return next(iter(self.values))
        return None


ConstValue = Union[Known, _Top, _Bottom]


def known(*values) -> ConstValue:
    return from_set(frozenset(values))


def from_set(values: Iterable) -> ConstValue:
    vs = frozenset(values)
    if not vs:
        return BOTTOM
    if len(vs) > CAP:
        return TOP
    return Known(vs)


def join(a: ConstValue, b: ConstValue) -> ConstValue:
    if a is BOTTOM:
        return b
    if b is BOTTOM:
        return a
    if a is TOP or b is TOP:
        return TOP
    return from_set(a.values | b.values)


def leq(a: ConstValue, b: ConstValue) -> bool:
    if a is BOTTOM or b is TOP:
        return True
    if a is TOP or b is BOTTOM:
        return False
    return a.values <= b.values


# A state maps slot -> ConstValue; a missing slot is TOP.  ``None`` is the
# state of unreached code (bottom of the state lattice).
ValueState = Optional[Mapping[int, ConstValue]]


def get(state: ValueState, slot: int) -> ConstValue:
    if state is None:
        return BOTTOM
    return state.get(slot, TOP)


def join_value(a: ValueState, b: ValueState) -> ValueState:
    if a is None:
        return b
    if b is None:
        return a
    out = {}
    for slot in a.keys() & b.keys():
        v = join(a[slot], b[slot])
        if v is not TOP:
            out[slot] = v
    return out


def state_leq(a: ValueState, b: ValueState) -> bool:
    if a is None:
        return True
    if b is None:
        return False
    for slot, bv in b.items():
        if not leq(a.get(slot, TOP), bv):
            return False
    return True


def tracked(type_name: Optional[str]) -> bool:
    return is_string_type(type_name) or is_int_type(type_name)


def _to_text(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "null"
    return str(v)


def _lift2(a: ConstValue, b: ConstValue, fn) -> ConstValue:
    if a is BOTTOM or b is BOTTOM:
        return BOTTOM
    if a is TOP or b is TOP:
        return TOP
    if len(a.values) * len(b.values) > CAP * CAP:
        return TOP
    return from_set(fn(x, y) for x in a.values for y in b.values)


class Evaluator:
    """Abstract evaluation of expressions against a mutable state dict.

    ``on_call`` is invoked for every call with the abstract values of its
    arguments, in evaluation order.
    """

    def __init__(self, state: dict, on_call=None):
        self.state = state
        self.on_call = on_call

    def eval(self, e: N.Expr) -> ConstValue:
        if isinstance(e, N.Literal):
            if e.type == "String":
                return known(e.value)
            if e.type in ("int", "long") and isinstance(e.value, int):
                return known(wrap64(e.value))
            if e.type == "boolean":
                return known(e.value)
            if e.type == "null":
                return known(None)
            return TOP
        if isinstance(e, N.Name):
            if tracked(e.type):
                return self.state.get(e.slot, TOP)
            return TOP
        if isinstance(e, N.IncDec):
            old = self.state.get(e.target.slot, TOP)
            delta = 1 if e.op == "++" else -1
            new = _lift2(old, known(delta), lambda x, y: wrap64(x + y))
            self._set(e.target.slot, new)
            return new if e.prefix else old
        if isinstance(e, N.Binary):
            left = self.eval(e.left)
            right = self.eval(e.right)
            if e.op == "+" and is_string_type(e.type):
                return _lift2(left, right, lambda x, y: _to_text(x) + _to_text(y))
            if e.op in ("+", "-") and is_int_type(e.type):
                if e.op == "+":
                    return _lift2(left, right, lambda x, y: wrap64(x + y))
                return _lift2(left, right, lambda x, y: wrap64(x - y))
            return TOP
        if isinstance(e, N.Unary):
            v = self.eval(e.operand)
            if e.op == "-" and is_int_type(e.type):
                return _lift2(v, known(0), lambda x, _: wrap64(-x))
            return TOP
        if isinstance(e, N.Call):
            if e.receiver is not None:
                self.eval(e.receiver)
            args = [self.eval(a) for a in e.args]
            if self.on_call is not None:
                self.on_call(e, args)
            return TOP
        if isinstance(e, N.New):
            for a in e.args:
                self.eval(a)
            return TOP
        return TOP

    def _set(self, slot: int, v: ConstValue):
        if v is TOP:
            self.state.pop(slot, None)
        else:
            self.state[slot] = v

    def assign(self, slot: int, type_name: str, v: ConstValue):
        if tracked(type_name):
            self._set(slot, v)

    def exec(self, stmt) -> None:
        if isinstance(stmt, N.LocalDecl):
            if stmt.init is None:
                if tracked(stmt.type_name):
                    self.state[stmt.slot] = BOTTOM
                return
            self.assign(stmt.slot, stmt.type_name, self.eval(stmt.init))
        elif isinstance(stmt, N.Assign):
            value = self.eval(stmt.value)
            if stmt.op == "=":
                new = value
            else:
                old = self.state.get(stmt.target.slot, TOP)
                if is_string_type(stmt.target.type):
                    new = _lift2(old, value, lambda x, y: _to_text(x) + _to_text(y))
                elif stmt.op == "+=":
                    new = _lift2(old, value, lambda x, y: wrap64(x + y))
                else:
                    new = _lift2(old, value, lambda x, y: wrap64(x - y))
            self.assign(stmt.target.slot, stmt.target.type, new)
        else:
            for e in N.stmt_exprs(stmt):
                self.eval(e)


def transfer_value(stmt, state: ValueState, on_call=None) -> ValueState:
    if state is None:
        return None
    work = dict(state)
    Evaluator(work, on_call).exec(stmt)
    return work


def _transfer_block(block, state: ValueState) -> ValueState:
    for stmt in block.stmts:
        state = transfer_value(stmt, state)
    return state


@dataclass
class ValueSolution:
    block_in: dict[int, ValueState]
    # pre-state of every statement, keyed by the statement node
    before: dict = field(default_factory=dict)
    # abstract argument values at every reached call, keyed by the call node
    call_args: dict = field(default_factory=dict)
    visits: dict[int, int] = field(default_factory=dict)

    def args(self, call) -> list[ConstValue]:
        return self.call_args.get(call, [BOTTOM] * len(call.args))


def solve_values(cfg: Cfg, entry: Optional[dict] = None) -> ValueSolution:
    """Least fixpoint by a worklist in reverse postorder.

    ``entry`` is the state at method entry; by default every slot is Top
    (parameters are unknown; locals are set by their declarations).
    """
    order = cfg.reverse_postorder()
    rank = {b.id: i for i, b in enumerate(order)}
    block_in: dict[int, ValueState] = {b.id: None for b in cfg.blocks}
    block_out: dict[int, ValueState] = {b.id: None for b in cfg.blocks}
    visits = {b.id: 0 for b in cfg.blocks}
    start = dict(entry or {})
    pending = {cfg.entry.id}
    while pending:
        bid = min(pending, key=rank.__getitem__)
        pending.discard(bid)
        block = order[rank[bid]]
        if block is cfg.entry:
            in_state: ValueState = start
            for p in block.preds:
                in_state = join_value(in_state, block_out[p.id])
        else:
            in_state = None
            for p in block.preds:
                in_state = join_value(in_state, block_out[p.id])
        if visits[bid] and in_state == block_in[bid]:
            continue
        visits[bid] += 1
        block_in[bid] = in_state
        out = _transfer_block(block, in_state)
        if out != block_out[bid] or visits[bid] == 1:
            block_out[bid] = out
            pending.update(s.id for s in block.succs)

    sol = ValueSolution(block_in, visits=visits)

    def record(call, args):
        sol.call_args[call] = args

    for block in cfg.blocks:
        state = block_in[block.id]
        for stmt in block.stmts:
            sol.before[stmt] = state
            state = transfer_value(stmt, state, on_call=record) if state is not None else None
    return sol
