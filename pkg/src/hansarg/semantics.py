"""Dung semantics over a ``DefeatGraph`` and conclusion extraction."""

from __future__ import annotations

import graphlib
from typing import Iterable

from . import _kernels
from .argumentation import Argument, DefeatGraph
from .core import Literal

__all__ = [
    "SEMANTICS",
    "is_conflict_free",
    "defends",
    "grounded",
    "extensions",
    "conclusions",
    "outfamily",
    "is_acyclic",
]

SEMANTICS = ("complete", "grounded", "preferred", "stable")


def is_conflict_free(graph: DefeatGraph, members: Iterable[Argument]) -> bool:
    members = set(members)
    return not any(a in members and b in members for a, b in graph.defeats)


def defends(graph: DefeatGraph, members: Iterable[Argument], arg: Argument) -> bool:
    members = set(members)
    countered = {b for a, b in graph.defeats if a in members}
    return all(a in countered for a in graph.defeaters(arg))


def _masks(graph: DefeatGraph) -> tuple[list[int], list[int]]:
    pos = graph.index()
    out = [0] * len(pos)
    into = [0] * len(pos)
    for a, b in graph.defeats:
        out[pos[a]] |= 1 << pos[b]
        into[pos[b]] |= 1 << pos[a]
    return out, into


def _attacked_by(out: list[int], mask: int) -> int:
    hit, i = 0, 0
    while mask:
        if mask & 1:
            hit |= out[i]
        mask >>= 1
        i += 1
    return hit


def _grounded_mask(out: list[int], into: list[int]) -> int:
    mask = 0
    while True:
        hit = _attacked_by(out, mask)
        nxt = sum(1 << j for j, d in enumerate(into) if d & ~hit == 0)
        if nxt == mask:
            return mask
        mask = nxt


def _members(graph: DefeatGraph, mask: int) -> frozenset[Argument]:
    return frozenset(a for i, a in enumerate(graph.arguments) if mask >> i & 1)


def _canonical(graph: DefeatGraph, masks: Iterable[int]) -> list[frozenset[Argument]]:
    def key(m: int):
        return [i for i in range(len(graph.arguments)) if m >> i & 1]

    return [_members(graph, m) for m in sorted(set(masks), key=key)]


def grounded(graph: DefeatGraph) -> frozenset[Argument]:
    out, into = _masks(graph)
    return _members(graph, _grounded_mask(out, into))


def extensions(graph: DefeatGraph, kind: str = "stable") -> list[frozenset[Argument]]:
    """All extensions of ``graph`` under ``kind``, in canonical order.

    Every complete extension contains the grounded one and avoids what it
    defeats, so only the remaining arguments are searched.
    """
    if kind not in SEMANTICS:
        raise ValueError(f"unknown semantics {kind!r}")
    out, into = _masks(graph)
    ground = _grounded_mask(out, into)
    if kind == "grounded":
        return [_members(graph, ground)]
    settled = ground | _attacked_by(out, ground)
    free = [i for i in range(len(out)) if not settled >> i & 1]
    code = _kernels.STABLE if kind == "stable" else _kernels.COMPLETE
    found = _kernels.search(out, into, free, ground, code)
    if kind == "preferred":
        found = [m for m in found if not any(o != m and o & m == m for o in found)]
    return _canonical(graph, found)


def conclusions(members: Iterable[Argument]) -> frozenset[Literal]:
    """Conclusions of the ordinary arguments among ``members``."""
    return frozenset(
        a.conclusion for a in members if a.is_ordinary and not a.conclusion.is_top
    )


def outfamily(graph: DefeatGraph, kind: str = "stable") -> frozenset[frozenset[Literal]]:
    return frozenset(conclusions(e) for e in extensions(graph, kind))


def is_acyclic(graph: DefeatGraph) -> bool:
    sorter = graphlib.TopologicalSorter({a: () for a in graph.arguments})
    for a, b in graph.defeats:
        if a == b:
            return False
        sorter.add(b, a)
    try:
        sorter.prepare()
    except graphlib.CycleError:
        return False
    return True
