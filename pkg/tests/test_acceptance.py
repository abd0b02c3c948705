"""Acceptance criteria, one test per criterion.

Each test prints a single PASS/FAIL line; the lines are repeated in the
pytest terminal summary.  ``python3 tests/test_acceptance.py`` runs them
without pytest.
"""

import contextlib
import io
import itertools
import random
import sys
import time
from pathlib import Path

if __name__ == "__main__":
    sys.path.insert(0, str(Path(__file__).resolve().parent))

import numpy as np

import progen
from progen import CODE_CATEGORY, CORPUS, GALLERY, MethodGen, PathEnumerator
from oopsie import cli
from oopsie import constprop as cp
from oopsie.checker import Mode, check_program
from oopsie.diagnostics import Severity
from oopsie.javafront import build_cfg, parse_java
from oopsie.oracle import Program, parse_expect, parse_rows, run_program
from oopsie.schema import load_schema, scalar
from oopsie.sqltype import BOTTOM, UNKNOWN, UNSUPPORTED, Sql, is_subtype, lub
from oopsie.typemap import load_conversion_table


def report(n, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {title} ({detail})"
    progen.ACCEPTANCE.append(line)
    print(line)
    assert ok, line


def _corpus():
    catalog = load_schema((CORPUS / "schema.sql").read_text())
    return catalog, load_conversion_table(), progen.corpus_sources()


def _by_file(diags):
    out = {}
    for d in diags:
        out.setdefault(d.span.file, []).append(d)
    return out


def test_confusion_matrix():
    catalog, table, sources = _corpus()
    start = time.perf_counter()
    result = check_program(sources, catalog, table, Mode.SOUND)
    elapsed = time.perf_counter() - start
    found = _by_file(result.diagnostics)
    tp = fn = fp = tn = 0
    misses = []
    for path, _ in sources:
        labels = parse_expect(Path(progen.ROOT, path).with_suffix(".expect").read_text())
        diags = found.get(path, [])
        flagged = {(CODE_CATEGORY[d.code.value], d.span.line) for d in diags
                   if d.code.value in CODE_CATEGORY}
        errors = [d for d in diags if d.severity == Severity.ERROR]
        if labels:
            if flagged == labels:
                tp += 1
            else:
                fn += 1
                misses.append(Path(path).stem)
        elif errors:
            fp += 1
            misses.append(Path(path).stem)
        else:
            tn += 1
    ok = fn == 0 and fp == 0 and tp >= 31 and tn >= 40 and elapsed < 10 and not result.tool_errors
    detail = f"TP={tp} FN={fn} FP={fp} TN={tn}, {elapsed:.2f}s"
    if misses:
        detail += ", mismatched: " + ", ".join(misses)
    report(1, "confusion-matrix corpus", ok, detail)


def test_differential_soundness():
    catalog, table, sources = _corpus()
    found = _by_file(check_program(sources, catalog, table, Mode.SOUND).diagnostics)
    clean = bad = 0
    offenders = []
    for path, text in sources:
        if any(d.severity == Severity.ERROR for d in found.get(path, [])):
            continue
        clean += 1
        src = Path(progen.ROOT, path)
        db = parse_rows(src.with_suffix(".rows").read_text(), catalog)
        run = run_program(Program([parse_java(text, path)]), db, table, path_budget=4)
        if run.exceptions():
            bad += 1
            offenders.append(src.stem)
    detail = f"{clean} programs with zero errors, {bad} with modeled exceptions"
    if offenders:
        detail += ": " + ", ".join(offenders)
    report(2, "differential soundness", bad == 0 and clean > 0, detail)


def test_degraded_locality():
    catalog, table, sources = _corpus()
    base = _by_file(check_program(sources, catalog, table, Mode.DEGRADED).diagnostics)
    base_text = {p: cli.render_diagnostics(ds) for p, ds in base.items()}
    negatives = [p for p, _ in sources
                 if not parse_expect(Path(progen.ROOT, p).with_suffix(".expect").read_text())]
    failures = []
    for target in negatives:
        mutated = [(p, progen.unextractable(t) if p == target else t) for p, t in sources]
        got = _by_file(check_program(mutated, catalog, table, Mode.DEGRADED).diagnostics)
        mine = got.pop(target, [])
        single = (len(mine) == 1 and mine[0].code.value == "OOPS003"
                  and mine[0].severity == Severity.WARNING)
        others = {p: cli.render_diagnostics(ds) for p, ds in got.items()}
        expected_others = {p: t for p, t in base_text.items() if p != target}
        if not single or others != expected_others:
            failures.append(Path(target).stem)
    detail = f"{len(negatives)} mutated programs, {len(failures)} failures"
    if failures:
        detail += ": " + ", ".join(failures)
    report(3, "degraded-mode locality", not failures and negatives, detail)


def test_gallery():
    import json

    catalog = load_schema((GALLERY / "schema.sql").read_text())
    table = load_conversion_table()
    expected = json.loads((GALLERY / "expected.json").read_text())
    failures = []
    for name, modes in sorted(expected.items()):
        path = GALLERY / name
        for mode_name, want in modes.items():
            result = check_program([(name, path.read_text())], catalog, table, Mode(mode_name))
            got = [[d.code.value, d.span.line] for d in result.diagnostics]
            if got != want or result.tool_errors:
                failures.append(f"{name}/{mode_name}: got {got}")
    detail = f"{len(expected)} programs in both modes"
    if failures:
        detail += "; " + "; ".join(failures)
    report(4, "gallery reproduction", not failures, detail)


# --- lattice laws -----------------------------------------------------------------

_TYPES = ("INTEGER", "VARCHAR", "DATE")
_NAMES = ("a", "b", "c")


def lattice_family():
    types = [scalar(k) for k in _TYPES]
    ins = [()] + [(x,) for x in types] + [(x, y) for x in types for y in types]
    cols = [(n, t) for n in _NAMES for t in types]
    outs = [()]
    for k in (1, 2, 3):
        outs += [c for c in itertools.product(cols, repeat=k) if len({n for n, _ in c}) == k]
    return [BOTTOM, UNKNOWN, UNSUPPORTED] + [Sql(i, o) for i in ins for o in outs]


def _rename(q, names, types):
    if not isinstance(q, Sql):
        return q
    t = {scalar(a): scalar(b) for a, b in zip(_TYPES, types)}
    n = dict(zip(_NAMES, names))
    return Sql(tuple(t[x] for x in q.params), tuple((n[c], t[x]) for c, x in q.out))


def check_lattice_laws():
    """Return (family size, violation messages)."""
    family = lattice_family()
    index = {q: i for i, q in enumerate(family)}
    n = len(family)
    sub = np.zeros((n, n), dtype=bool)
    join = np.zeros((n, n), dtype=np.int32)
    for i, a in enumerate(family):
        row_s = sub[i]
        row_j = join[i]
        for j, b in enumerate(family):
            row_s[j] = is_subtype(a, b)
            r = lub(a, b)
            k = index.get(r)
            if k is None:
                return n, [f"lub({a}, {b}) = {r} leaves the family"]
            row_j[j] = k
    problems = []
    idx = np.arange(n)

    # partial order
    if not sub[idx, idx].all():
        problems.append("is_subtype not reflexive")
    both = sub & sub.T
    both[idx, idx] = False
    if both.any():
        problems.append("is_subtype not antisymmetric")
    f = sub.astype(np.float32)
    if ((f @ f > 0) & ~sub).any():
        problems.append("is_subtype not transitive")

    # pairwise lub laws
    if not (join == join.T).all():
        problems.append("lub not commutative")
    if not (join[idx, idx] == idx).all():
        problems.append("lub not idempotent")
    if not (sub[idx[:, None], join] & sub[idx[None, :], join]).all():
        problems.append("lub is not an upper bound")

    # Both relations commute with renaming columns and permuting types, so
    # checking triples whose first element is an orbit representative
    # covers every triple.
    perms = []
    for names in itertools.permutations(_NAMES):
        for types in itertools.permutations(_TYPES):
            p = np.array([index[_rename(q, names, types)] for q in family], dtype=np.int32)
            perms.append(p)
            if not (sub[np.ix_(p, p)] == sub).all() or not (join[np.ix_(p, p)] == p[join]).all():
                problems.append(f"relations not invariant under renaming {names} {types}")
    reps = np.unique(np.min(np.stack(perms), axis=0))

    for a in reps:
        # associativity: (a v b) v c == a v (b v c)
        if not (join[join[a]] == join[a][join]).all():
            problems.append(f"lub not associative for a={family[a]}")
        # least: a <= c and b <= c implies (a v b) <= c
        upper = sub[a][None, :] & sub
        if (upper & ~sub[join[a]]).any():
            problems.append(f"lub not least for a={family[a]}")
    return n, problems


def test_lattice_laws():
    start = time.perf_counter()
    n, problems = check_lattice_laws()
    elapsed = time.perf_counter() - start
    detail = f"{n} qualifiers, {len(problems)} violations, {elapsed:.1f}s"
    if problems:
        detail += ": " + "; ".join(problems[:5])
    report(5, "lattice laws", not problems and elapsed < 60, detail)


# --- constant propagation against path enumeration -----------------------------------

def random_loop_free(rng):
    while True:
        text = MethodGen(rng).method()
        method = parse_java(text, "R.java").classes[0].methods[0]
        cfg = build_cfg(method)
        if len(cfg.blocks) <= 12:
            return text, method, cfg


def path_violations(method, cfg):
    sol = cp.solve_values(cfg)
    paths = PathEnumerator()
    paths.run(method)
    bad = []
    for stmt, env in paths.seen:
        state = sol.before.get(stmt)
        for slot, value in env.items():
            abstract = cp.get(state, slot) if state is not None else cp.BOTTOM
            if abstract is cp.TOP:
                continue
            if abstract is cp.BOTTOM or value not in abstract.values:
                bad.append((stmt.span.line, method.slots[slot].name, value, abstract))
    return bad


def test_constprop_paths():
    rng = random.Random(20240607)
    failures = []
    for _ in range(1000):
        text, method, cfg = random_loop_free(rng)
        bad = path_violations(method, cfg)
        if bad:
            failures.append((text, bad[0]))
    detail = f"1000 programs, {len(failures)} violations"
    if failures:
        detail += f"; first: {failures[0][1]}"
    report(6, "constprop path soundness", not failures, detail)


def _cli_run(workers, fmt):
    out = io.StringIO()
    argv = ["--schema", str(CORPUS / "schema.sql"), "--format", fmt, "--workers", str(workers),
            str(CORPUS / "programs")]
    with contextlib.redirect_stdout(out):
        cli.main(argv)
    return out.getvalue()


def test_determinism():
    outputs = {(w, f): _cli_run(w, f) for w in (1, 4) for f in ("text", "json")}
    same = all(outputs[(1, f)] == outputs[(4, f)] for f in ("text", "json"))
    nonempty = all(outputs.values())
    report(7, "determinism across worker counts", same and nonempty,
           f"text {len(outputs[(1, 'text')])} bytes, json {len(outputs[(1, 'json')])} bytes")


def test_throughput():
    catalog = load_schema((CORPUS / "schema.sql").read_text())
    table = load_conversion_table()
    sources, lines = progen.bulk_sources(5000)
    start = time.perf_counter()
    result = check_program(sources, catalog, table, Mode.SOUND)
    elapsed = time.perf_counter() - start
    ok = lines >= 5000 and elapsed < 5 and not result.tool_errors
    report(8, "throughput", ok, f"{lines} lines in {len(sources)} files, {elapsed:.2f}s")


if __name__ == "__main__":
    failed = 0
    for fn in (test_confusion_matrix, test_differential_soundness, test_degraded_locality,
               test_gallery, test_lattice_laws, test_constprop_paths, test_determinism,
               test_throughput):
        try:
            fn()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
