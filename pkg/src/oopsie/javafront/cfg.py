"""Per-method control-flow graphs.

Straight-line code shares one block.  ``if`` ends the current block with a
:class:`~oopsie.javafront.nodes.Cond` and continues in a join block; ``while``
gets its own guard block that the body loops back to.  Unreachable blocks are
dropped.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import nodes as N


@dataclass(eq=False)
class BasicBlock:
    id: int
    stmts: list = field(default_factory=list)
    succs: list["BasicBlock"] = field(default_factory=list)
    preds: list["BasicBlock"] = field(default_factory=list)

    def __repr__(self):
        return f"B{self.id}({len(self.stmts)} stmts -> {[s.id for s in self.succs]})"


@dataclass
class Cfg:
    entry: BasicBlock
    exit: BasicBlock
    blocks: list[BasicBlock]

    def statements(self):
        for b in self.blocks:
            yield from b.stmts

    def reverse_postorder(self) -> list[BasicBlock]:
        seen = set()
        order = []
        stack = [(self.entry, iter(self.entry.succs))]
        seen.add(self.entry.id)
        while stack:
            block, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                stack.pop()
                order.append(block)
            elif nxt.id not in seen:
                seen.add(nxt.id)
                stack.append((nxt, iter(nxt.succs)))
        order.reverse()
        return order


class _Builder:
    def __init__(self):
        self.blocks: list[BasicBlock] = []
        self.returns: list[BasicBlock] = []

    def new(self) -> BasicBlock:
        b = BasicBlock(len(self.blocks))
        self.blocks.append(b)
        return b

    @staticmethod
    def link(a: BasicBlock, b: BasicBlock):
        a.succs.append(b)
        b.preds.append(a)

    def stmt(self, s, cur: BasicBlock | None) -> BasicBlock | None:
        """Add ``s`` starting in ``cur``; returns the fall-through block."""
        if cur is None:
            # dead code after return still needs a home
            cur = self.new()
        if isinstance(s, N.Block):
            for inner in s.stmts:
                cur = self.stmt(inner, cur)
                if cur is None:
                    cur = self.new()
            return cur
        if isinstance(s, N.If):
            cur.stmts.append(N.Cond(s.span, s.cond))
            then_b = self.new()
            self.link(cur, then_b)
            then_end = self.stmt(s.then, then_b)
            else_end = cur
            if s.orelse is not None:
                else_b = self.new()
                self.link(cur, else_b)
                else_end = self.stmt(s.orelse, else_b)
            join = self.new()
            if then_end is not None:
                self.link(then_end, join)
            if else_end is not None:
                self.link(else_end, join)
            return join
        if isinstance(s, N.While):
            guard = self.new()
            self.link(cur, guard)
            guard.stmts.append(N.Cond(s.span, s.cond))
            body = self.new()
            self.link(guard, body)
            body_end = self.stmt(s.body, body)
            if body_end is not None:
                self.link(body_end, guard)
            after = self.new()
            self.link(guard, after)
            return after
        cur.stmts.append(s)
        if isinstance(s, N.Return):
            self.returns.append(cur)
            return None
        return cur


def build_cfg(method: N.Method) -> Cfg:
    """CFG of ``method``'s body; requires a method without subset violations."""
    if method.body is None:
        raise ValueError(f"method {method.name} has no analyzable body")
    b = _Builder()
    entry = b.new()
    end = b.stmt(method.body, entry)
    if b.returns:
        exit_ = b.new()
        for r in b.returns:
            b.link(r, exit_)
        if end is not None:
            b.link(end, exit_)
    else:
        exit_ = end
    # prune blocks unreachable from entry, then renumber densely
    reach = set()
    stack = [entry]
    while stack:
        blk = stack.pop()
        if blk.id in reach:
            continue
        reach.add(blk.id)
        stack.extend(blk.succs)
    if exit_.id not in reach:
        # every path returns; keep a reachable exit if there is one
        exit_ = None
    kept = [blk for blk in b.blocks if blk.id in reach]
    for blk in kept:
        blk.preds = [p for p in blk.preds if p.id in reach]
    mapping = {}
    for i, blk in enumerate(kept):
        mapping[blk.id] = i
    for blk in kept:
        blk.id = mapping[blk.id]
    if exit_ is None:
        exit_ = kept[-1]
    return Cfg(entry, exit_, kept)
