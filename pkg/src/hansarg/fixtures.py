"""Worked examples as DSL text, loadable by name."""

from __future__ import annotations

from .core import Hans
from .dsl import parse_hans

__all__ = ["FIXTURES", "fixture", "names"]

FIXTURES: dict[str, str] = {
    "order": """\
# Order puzzle: the Colonel outranks the Major, who outranks the Captain
context w
norm w -> h rank 1
norm h -> o rank 3
norm w -> ~o rank 2
""",
    "revised": """\
# Order puzzle with a second, conflicting order about the heating
context w
norm w -> h rank 1
norm w -> ~h rank 0
norm h -> o rank 3
norm ~h -> o rank 4
norm w -> ~o rank 2
""",
    "branching": """\
# Optimization disobeys (a, b): both of its continuations conflict
context a
norm a -> b rank 1
norm b -> c rank 2
norm b -> ~c rank 3
""",
    "twofold": """\
# Reduction with two extensions, {b, c} and {~b}.
# The smallest norm set whose two reduced systems give exactly these.
context a
norm a -> b rank 1
norm a -> ~b rank 2
norm b -> c rank 3
norm c -> b rank 4
""",
    "oddcycle": """\
# Reduction without any extension; the last-link framework has an odd cycle
context b, r, p
norm c -> d rank 5
norm p -> ~d rank 4
norm z -> ~c rank 6
norm ~d -> ~z rank 2
norm r -> z rank 1
norm b -> c rank 0
""",
    "preorder": """\
# Equal ranks: greedy branches two ways, weakest link finds three extensions
context a
norm a -> b rank 1
norm a -> c rank 1
norm b -> ~c rank 2
norm c -> ~b rank 2
""",
}


def names() -> list[str]:
    return list(FIXTURES)


def fixture(name: str) -> Hans:
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}")
    return parse_hans(FIXTURES[name], name).hans
