"""Command-line front end.

Exit codes: 0 success, 1 parse error, 2 validation or precondition error,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import core
from .argumentation import LIFTINGS, WEAKEST, build_af, expand_af
from .dsl import ParseError, load_hans
from .render import (
    braces,
    detachment_payload,
    extensions_payload,
    graph_payload,
    render_dot,
    render_json,
)
from .semantics import SEMANTICS, conclusions, extensions
from .verify import exploratory, random_trials, verify_all

EXIT_OK, EXIT_PARSE, EXIT_INVALID, EXIT_VERIFY = 0, 1, 2, 3

METHODS = {
    "greedy": lambda h: {core.greedy(h)},
    "greedy-preorder": core.greedy_preorder,
    "reduction": core.reduction,
    "optimization": lambda h: {core.optimization(h)},
}


def _load(path: str):
    doc = load_hans(path)
    for w in doc.warnings:
        print(f"warning: {w}", file=sys.stderr)
    return doc.hans


def _graph(args, hans):
    graph = build_af(hans, args.lift, allow_ties=args.allow_ties)
    if args.expand:
        if args.lift != WEAKEST:
            raise core.HansError("--expand needs --lift weakest")
        graph = expand_af(graph)
    return graph


def cmd_detach(args) -> int:
    hans = _load(args.file)
    family = METHODS[args.method](hans)
    payload = detachment_payload(args.method.replace("-", "_"), family)
    if args.format == "json":
        print(render_json(payload))
    else:
        exts = payload["extensions"]
        if not exts:
            print("no extensions")
        for ext in exts:
            print("{" + ", ".join(ext) + "}")
    return EXIT_OK


def cmd_af(args) -> int:
    graph = _graph(args, _load(args.file))
    if args.format == "json":
        print(render_json(graph_payload(graph)))
    else:
        sys.stdout.write(render_dot(graph))
    return EXIT_OK


def cmd_show(args) -> int:
    hans = _load(args.file)
    sys.stdout.write(render_dot(hans))
    return EXIT_OK


def cmd_extensions(args) -> int:
    graph = _graph(args, _load(args.file))
    exts = extensions(graph, args.semantics)
    if args.format == "json":
        print(render_json(extensions_payload(graph, args.semantics, exts)))
        return EXIT_OK
    print(f"{len(exts)} {args.semantics} extension{'s' if len(exts) != 1 else ''}")
    pos = graph.index()
    for ext in exts:
        names = ", ".join(graph.name(a) for a in sorted(ext, key=pos.__getitem__))
        print(f"{{{names}}} -> {braces(conclusions(ext))}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.file:
        hans = _load(args.file)
        cases = [(hans, args.file, None)]
    else:
        cases = [
            (hans, f"trial {i}", label)
            for i, hans, label in random_trials(args.trials, args.seed, args.atoms, args.norms)
        ]
    failed = 0
    for hans, name, label in cases:
        for report in verify_all(hans, name, label):
            failed += not report.passed
            if args.file or not report.passed:
                print(report.line())
        if args.exploratory:
            print(f"exploratory {name}: {json.dumps(exploratory(hans), sort_keys=True)}")
    if not args.file:
        total = 3 * len(cases)
        print(f"{total - failed}/{total} checks passed over {len(cases)} instances (seed {args.seed})")
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hansarg", description="Prioritized norms and their argumentation frameworks.")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("detach", help="run a detachment procedure")
    d.add_argument("--method", choices=list(METHODS), default="greedy")
    d.add_argument("--format", choices=["text", "json"], default="text")
    d.add_argument("file")
    d.set_defaults(func=cmd_detach)

    a = sub.add_parser("af", help="print the argumentation framework")
    a.add_argument("--lift", choices=LIFTINGS, default=WEAKEST)
    a.add_argument("--expand", action="store_true", help="add the auxiliary argument and its defeats")
    a.add_argument("--allow-ties", action="store_true", help="accept equal norm ranks")
    a.add_argument("--format", choices=["dot", "json"], default="dot")
    a.add_argument("file")
    a.set_defaults(func=cmd_af)

    e = sub.add_parser("extensions", help="enumerate Dung extensions")
    e.add_argument("--lift", choices=LIFTINGS, default=WEAKEST)
    e.add_argument("--semantics", choices=SEMANTICS, default="stable")
    e.add_argument("--expand", action="store_true")
    e.add_argument("--allow-ties", action="store_true", help="accept equal norm ranks")
    e.add_argument("--format", choices=["text", "json"], default="text")
    e.add_argument("file")
    e.set_defaults(func=cmd_extensions)

    s = sub.add_parser("show", help="print the normative system as DOT")
    s.add_argument("file")
    s.set_defaults(func=cmd_show)

    v = sub.add_parser("verify", help="check the representation theorems")
    v.add_argument("--trials", type=int, default=200)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--atoms", type=int, default=5, help="maximum atoms per random instance")
    v.add_argument("--norms", type=int, default=7, help="maximum norms per random instance")
    v.add_argument("--exploratory", action="store_true", help="also print outfamilies under all semantics")
    v.add_argument("file", nargs="?")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (core.HansError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
