"""Command-line driver: ``oopsie --schema schema.sql src/``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from .checker import Mode, check_program
from .diagnostics import Diagnostic, Severity
from .schema import SchemaError, load_schema
from .typemap import MappingError, load_conversion_table

EXIT_CLEAN, EXIT_FINDINGS, EXIT_TOOL = 0, 1, 2

_COLORS = {Severity.ERROR: "\033[31m", Severity.WARNING: "\033[33m", Severity.INFO: "\033[36m"}


def diagnostic_dict(d: Diagnostic) -> dict:
    out = {"code": d.code.value, "severity": d.severity.label, "file": d.span.file,
           "line": d.span.line, "column": d.span.column, "message": d.message}
    if d.expected is not None:
        out["expected"] = d.expected
    if d.actual is not None:
        out["actual"] = d.actual
    return out


def render_diagnostics(diags: Sequence[Diagnostic], fmt: str = "text", color: bool = False) -> str:
    if fmt == "json":
        return json.dumps([diagnostic_dict(d) for d in diags], indent=2)
    lines = []
    for d in diags:
        sev = d.severity.label
        if color:
            sev = f"{_COLORS[d.severity]}{sev}\033[0m"
        lines.append(f"{d.span}: {sev} {d.code.value}: {d.message}")
    return "\n".join(lines)


def exit_code(diags: Sequence[Diagnostic], fail_on: str = "error") -> int:
    floor = Severity.ERROR if fail_on == "error" else Severity.WARNING
    return EXIT_FINDINGS if any(d.severity >= floor for d in diags) else EXIT_CLEAN


def collect_sources(paths: Sequence[str]) -> list[tuple[str, str]]:
    """``(path, text)`` for every ``.java`` file named or found below a directory."""
    files = []
    for p in paths:
        path = Path(p)
        if path.is_dir():
            files.extend(sorted(str(f) for f in path.rglob("*.java") if f.is_file()))
        elif path.is_file():
            files.append(str(path))
        else:
            raise OSError(f"no such file or directory: {p}")
    return [(f, Path(f).read_text()) for f in files]


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="oopsie", description="Check JDBC getter and setter calls against a SQL schema.")
    ap.add_argument("sources", nargs="*", help="Java files or directories (searched recursively)")
    ap.add_argument("--schema", required=True, help="CREATE TABLE script describing the database")
    ap.add_argument("--mode", choices=["sound", "degraded"], default="sound")
    ap.add_argument("--mapping", help="conversion table overrides")
    ap.add_argument("--format", choices=["text", "json"], default="text")
    ap.add_argument("--supported-as-warning", action="store_true",
                    help="report supported but non-recommended conversions as warnings")
    ap.add_argument("--fail-on", choices=["error", "warning"], default="error")
    ap.add_argument("--stats", action="store_true", help="print access tallies to stderr")
    ap.add_argument("--report-dir", help="write CSV tables and figures to this directory")
    ap.add_argument("--workers", type=int, default=1)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_TOOL if exc.code else EXIT_CLEAN
    try:
        catalog = load_schema(Path(args.schema).read_text())
        mapping = Path(args.mapping).read_text() if args.mapping else None
        table = load_conversion_table(mapping)
        sources = collect_sources(args.sources)
    except (OSError, SchemaError, MappingError) as exc:
        print(f"oopsie: {exc}", file=sys.stderr)
        return EXIT_TOOL

    result = check_program(sources, catalog, table, Mode(args.mode),
                           supported_as_warning=args.supported_as_warning,
                           workers=max(1, args.workers))
    for err in result.tool_errors:
        print(f"oopsie: {err}", file=sys.stderr)

    color = args.format == "text" and sys.stdout.isatty() and os.environ.get("OOPSIE_COLOR", "1") != "0"
    text = render_diagnostics(result.diagnostics, args.format, color)
    if text:
        print(text)
    if args.stats:
        for k, v in result.stats.as_dict().items():
            print(f"{k}: {v}", file=sys.stderr)
    if args.report_dir:
        from .report import write_report
        write_report(args.report_dir, result.diagnostics, result.stats)
    if result.tool_errors:
        return EXIT_TOOL
    return exit_code(result.diagnostics, args.fail_on)


if __name__ == "__main__":
    sys.exit(main())
