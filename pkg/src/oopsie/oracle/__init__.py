"""Ground truth for the checker: run subset programs against a mini database
and record the JDBC failures they would raise."""

from .interp import (UNKNOWN, Category, InterpreterLimit, MiniDb, ModeledException, PathResult,
                     Program, ProgramRun, RowsError, parse_expect, parse_rows, render_expect,
                     run_program)

__all__ = [
    "UNKNOWN", "Category", "InterpreterLimit", "MiniDb", "ModeledException", "PathResult",
    "Program", "ProgramRun", "RowsError", "parse_expect", "parse_rows", "render_expect",
    "run_program",
]
