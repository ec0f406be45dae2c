"""Acceptance criteria, one check per criterion, exact set equality throughout.

Each check prints a single ``PASS``/``FAIL`` line. Run directly for the
summary only:

    python tests/test_acceptance.py
"""

from __future__ import annotations

import contextlib
import io
import pathlib
import sys

import numpy as np
import pytest

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent))

from hansarg.argumentation import (  # noqa: E402
    LAST,
    WEAKEST,
    build_af,
    cmp_last_link,
    cmp_weakest_link,
    expand_af,
    sub_arguments,
)
from hansarg.cli import main as cli_main  # noqa: E402
from hansarg.core import (  # noqa: E402
    _candidate_extensions,
    greedy,
    greedy_preorder,
    is_consistent,
    is_totally_ordered,
    max_obeyable,
    optimization,
    reachable,
    reduce_system,
    reduction,
    sort_family,
)
from hansarg.dsl import canonical_hans, parse_hans, render_hans  # noqa: E402
from hansarg.fixtures import FIXTURES, fixture  # noqa: E402
from hansarg.semantics import conclusions, extensions, outfamily  # noqa: E402
from hansarg.verify import random_trials, verify_all, verify_reduction  # noqa: E402

RANDOM_SEED = 2024
RANDOM_COUNT = 200


def fam(family) -> list[list[str]]:
    return sort_family(family)


def edges(graph, es) -> set[tuple[str, str]]:
    return {(graph.name(a), graph.name(b)) for a, b in es}


def members(graph, ext) -> set[str]:
    return {graph.name(a) for a in ext}


def c1():
    h = fixture("order")
    got = (fam([greedy(h)]), fam(reduction(h)), fam([optimization(h)]))
    want = ([["h", "~o"]], [["h", "o"]], [["~o"]])
    return got == want, f"greedy/reduction/optimization = {got}"


def c2():
    h = fixture("order")
    last, weak = build_af(h, LAST), build_af(h, WEAKEST)
    got = (
        len(last.arguments),
        edges(last, last.defeats),
        edges(weak, weak.defeats),
        fam(outfamily(last)),
        fam(outfamily(weak)),
    )
    want = (4, {("A2", "A3")}, {("A3", "A2")}, [["h", "o"]], [["h", "~o"]])
    return got == want, f"args={got[0]} last={sorted(got[1])} weakest={sorted(got[2])} outfamilies={got[3]} {got[4]}"


def c3():
    h = fixture("twofold")
    red, out = fam(reduction(h)), fam(outfamily(build_af(h, LAST)))
    want = [["b", "c"], ["~b"]]
    return red == want and out == want, f"reduction={red} last-link stable={out}"


def c4():
    h = fixture("oddcycle")
    stable = extensions(build_af(h, LAST), "stable")
    report = verify_reduction(h)
    path = pathlib.Path(__file__).resolve().parent.parent / "fixtures" / "oddcycle.hans"
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli_main(["extensions", "--lift", "last", "--semantics", "stable", str(path)])
    cli_zero = code == 0 and buf.getvalue().startswith("0 stable extensions")
    ok = stable == [] and cli_zero and report.passed and report.lhs == report.rhs == frozenset()
    return ok, f"stable extensions={len(stable)} cli={buf.getvalue().splitlines()[0]!r} verify_reduction={report.passed}"


def c5():
    g = expand_af(build_af(fixture("revised")))
    exts = extensions(g, "stable")
    ok = (
        len(exts) == 1
        and members(g, exts[0]) == {"aux", "A0", "A5"}
        and fam([conclusions(exts[0])]) == [["~o"]]
        and edges(g, g.phi1) == {("A5", "A1"), ("A5", "A2")}
    )
    return ok, f"extensions={[sorted(members(g, e)) for e in exts]} phi1={sorted(edges(g, g.phi1))}"


def c6():
    g = expand_af(build_af(fixture("branching")))
    exts = extensions(g, "stable")
    ok = (
        len(exts) == 1
        and members(g, exts[0]) == {"aux", "A0"}
        and conclusions(exts[0]) == frozenset()
        and optimization(fixture("branching")) == frozenset()
        and edges(g, g.phi2) == {("aux", "A1"), ("aux", "A2"), ("aux", "A3")}
    )
    return ok, f"extensions={[sorted(members(g, e)) for e in exts]} phi2={sorted(edges(g, g.phi2))}"


def c7():
    h = fixture("preorder")
    pre = fam(greedy_preorder(h))
    weak = fam(outfamily(build_af(h, WEAKEST, allow_ties=True)))
    ok = pre == [["b", "~c"], ["c", "~b"]] and weak == [["b", "c"], ["b", "~c"], ["c", "~b"]]
    return ok, f"greedy_preorder={pre} weakest-link stable={weak}"


def random_cases():
    return [(label, h) for _, h, label in random_trials(RANDOM_COUNT, RANDOM_SEED, 5, 7)]


def c8():
    failures = []
    for label, h in random_cases():
        failures += [r.line() for r in verify_all(h, "random", label) if not r.passed]
    detail = f"{3 * RANDOM_COUNT - len(failures)}/{3 * RANDOM_COUNT} checks over {RANDOM_COUNT} instances"
    if failures:
        detail += "; " + " | ".join(failures[:5])
    return not failures, detail


def _properties(h, rng) -> list[str]:
    bad = []
    text = render_hans(h)
    if parse_hans(text).hans != canonical_hans(h):
        bad.append("round-trip")
    if not is_totally_ordered(h):
        return bad
    for lifting in (WEAKEST, LAST):
        g = build_af(h, lifting)
        for e in extensions(g, "complete"):
            if any(s not in e for a in e for s in sub_arguments(a)):
                bad.append(f"sub-closure/{lifting}")
        for out in outfamily(g, "stable") | outfamily(g, "complete"):
            if not is_consistent(out):
                bad.append(f"direct-consistency/{lifting}")
            if not is_consistent(out | h.context):
                bad.append(f"contextual-consistency/{lifting}")
        ords = [a for a in g.arguments if a.is_ordinary]
        for a, b in g.defeats:
            for x in ords:
                if x.norms[: len(b.norms)] == b.norms and (a, x) not in g.defeats:
                    bad.append(f"super-defeat/{lifting}")
        cmp = cmp_weakest_link if lifting == WEAKEST else cmp_last_link
        if ords:
            for _ in range(60):
                a, b, c = (ords[i] for i in rng.integers(len(ords), size=3))
                if cmp(a, b) and cmp(b, c) and not cmp(a, c):
                    bad.append(f"transitivity/{lifting}")
    kept = max_obeyable(h)
    for u in set(h.norms) - kept:
        if is_consistent(h.context | reachable(h, kept | {u}, consistent=True)):
            bad.append("max_obeyable")
    for cand in _candidate_extensions(h):
        if not is_totally_ordered(reduce_system(h, cand)):
            bad.append("reduce_system order")
    return bad


def c9():
    rng = np.random.default_rng(RANDOM_SEED)
    cases = [(name, parse_hans(text).hans) for name, text in FIXTURES.items()] + random_cases()
    bad = []
    for label, h in cases:
        bad += [f"{label}:{p}" for p in _properties(h, rng)]
    detail = f"{len(cases)} systems, {len(bad)} violations"
    if bad:
        detail += ": " + ", ".join(sorted(set(bad))[:8])
    return not bad, detail


CRITERIA = [
    (1, "Order puzzle detachment", c1),
    (2, "Order puzzle argumentation", c2),
    (3, "Two Reduction extensions", c3),
    (4, "No stable extension", c4),
    (5, "Revised puzzle expanded framework", c5),
    (6, "Branching expanded framework", c6),
    (7, "Preorder divergence", c7),
    (8, "Randomized theorem suite", c8),
    (9, "Property suites", c9),
]


def line(num: int, title: str, ok: bool, detail: str) -> str:
    return f"{'PASS' if ok else 'FAIL'} criterion {num} ({title}): {detail}"


@pytest.mark.parametrize("num, title, check", CRITERIA, ids=[f"c{n}" for n, _, _ in CRITERIA])
def test_criterion(num, title, check, capsys):
    ok, detail = check()
    with capsys.disabled():
        print("\n" + line(num, title, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = [(n, t, *check()) for n, t, check in CRITERIA]
    for n, t, ok, detail in results:
        print(line(n, t, ok, detail))
    sys.exit(0 if all(r[2] for r in results) else 1)
