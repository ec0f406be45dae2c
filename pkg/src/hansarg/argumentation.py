"""Arguments over a normative system and the defeat graphs built from them.

An ordinary argument is a context-rooted, non-redundant chain of norms whose
traversed literals are consistent; a context argument is a non-top fact.
Norm priorities are lifted to arguments by weakest link or last link, and
the weakest-link graph can be expanded with one auxiliary argument that
knocks out arguments resting on a disobeyed norm.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .core import (
    TOP,
    Hans,
    HansError,
    Literal,
    Norm,
    NotTotallyOrderedError,
    complement,
    consistent_paths,
    is_totally_ordered,
)

__all__ = [
    "Argument",
    "AUX",
    "DefeatGraph",
    "WEAKEST",
    "LAST",
    "enumerate_arguments",
    "sub_arguments",
    "proper_sub_arguments",
    "weakest_norm",
    "weakest_sub_argument",
    "warg",
    "cmp_weakest_link",
    "cmp_last_link",
    "attacks",
    "defeats",
    "build_af",
    "expand_af",
]

WEAKEST = "weakest"
LAST = "last"
LIFTINGS = (WEAKEST, LAST)


@dataclass(frozen=True)
class Argument:
    kind: str  # "context" | "ordinary" | "auxiliary"
    literal: Literal | None = None
    norms: tuple[Norm, ...] = ()

    @classmethod
    def context(cls, lit: Literal) -> "Argument":
        return cls("context", literal=lit)

    @classmethod
    def ordinary(cls, norms: Sequence[Norm]) -> "Argument":
        if not norms:
            raise HansError("an ordinary argument needs at least one norm")
        return cls("ordinary", norms=tuple(norms))

    @property
    def is_ordinary(self) -> bool:
        return self.kind == "ordinary"

    @property
    def is_context(self) -> bool:
        return self.kind == "context"

    @property
    def is_auxiliary(self) -> bool:
        return self.kind == "auxiliary"

    @property
    def conclusion(self) -> Literal | None:
        if self.kind == "context":
            return self.literal
        if self.kind == "ordinary":
            return self.norms[-1].consequent
        return None

    @property
    def top_norm(self) -> Norm:
        return self.norms[-1]

    def path(self) -> list[str]:
        if self.kind == "context":
            return [str(self.literal)]
        return [f"{u.antecedent}->{u.consequent}" for u in self.norms]

    def __str__(self):
        if self.kind == "context":
            return str(self.literal)
        if self.kind == "auxiliary":
            return "aux"
        return "".join(str(u) for u in self.norms)


AUX = Argument("auxiliary")


def _sort_key(arg: Argument):
    if arg.kind == "context":
        return (0, str(arg.literal), 0, ())
    if arg.kind == "ordinary":
        # numbered by the declaration position of the top norm
        return (1, arg.top_norm.id, len(arg.norms), tuple(u.id for u in arg.norms))
    return (2, "", 0, ())


def enumerate_arguments(hans: Hans) -> tuple[Argument, ...]:
    """All arguments of ``hans`` in canonical order.

    Context arguments come first (sorted by literal), then ordinary arguments
    ordered by the declaration index of their top norm, then length. Ordinary
    arguments are the paths of ``consistent_paths``: no norm is used twice and
    no literal is passed through twice, though the conclusion may close a loop.
    """
    found = [Argument.context(c) for c in hans.context if c != TOP]
    found.extend(Argument.ordinary(path) for path in consistent_paths(hans))
    return tuple(sorted(found, key=_sort_key))


def sub_arguments(arg: Argument) -> list[Argument]:
    """Prefixes of an ordinary argument, itself included; nothing for the others."""
    if not arg.is_ordinary:
        return []
    return [Argument.ordinary(arg.norms[:i]) for i in range(1, len(arg.norms) + 1)]


def proper_sub_arguments(arg: Argument) -> list[Argument]:
    return sub_arguments(arg)[:-1]


def _require_ordinary(arg: Argument) -> None:
    if not arg.is_ordinary:
        raise HansError(f"{arg.kind} argument {arg} has no norms")


def weakest_norm(arg: Argument) -> Norm:
    _require_ordinary(arg)
    low = min(u.rank for u in arg.norms)
    hits = [u for u in arg.norms if u.rank == low]
    if len(hits) > 1:
        raise NotTotallyOrderedError(f"argument {arg} has no unique weakest norm")
    return hits[0]


def weakest_sub_argument(arg: Argument) -> Argument:
    u = weakest_norm(arg)
    return Argument.ordinary(arg.norms[: arg.norms.index(u) + 1])


def warg(arg: Argument, universe: Iterable[Argument]) -> list[Argument]:
    """Super-arguments (within ``universe``) of the weakest sub-argument of ``arg``."""
    prefix = weakest_sub_argument(arg).norms
    k = len(prefix)
    return [g for g in universe if g.is_ordinary and g.norms[:k] == prefix]


def cmp_weakest_link(a: Argument, b: Argument) -> bool:
    """Some norm only in ``b`` is no stronger than every norm only in ``a``."""
    mine, theirs = set(a.norms), set(b.norms)
    only_mine = mine - theirs
    return any(
        all(v.rank <= u.rank for u in only_mine) for v in theirs - mine
    )


def cmp_last_link(a: Argument, b: Argument) -> bool:
    return a.top_norm.rank >= b.top_norm.rank


_COMPARE = {WEAKEST: cmp_weakest_link, LAST: cmp_last_link}


def _attacked_subs(a: Argument, b: Argument) -> list[Argument]:
    concl = a.conclusion
    if concl is None or concl.is_top:
        return []
    target = complement(concl)
    return [s for s in sub_arguments(b) if s.conclusion == target]


def attacks(a: Argument, b: Argument) -> bool:
    return bool(_attacked_subs(a, b))


def defeats(a: Argument, b: Argument, lifting: str = WEAKEST, target: str = "sub") -> bool:
    """Whether ``a`` defeats ``b`` under ``lifting``.

    ``target="sub"`` compares ``a`` with the attacked sub-argument, which is
    what super-argument closure of defeat needs. ``target="whole"`` compares
    with ``b`` itself; it is kept for experiments and breaks that closure
    under last link.
    """
    subs = _attacked_subs(a, b)
    if not subs:
        return False
    if a.is_context:
        return True
    cmp = _COMPARE[lifting]
    if target == "whole":
        return cmp(a, b)
    return any(cmp(a, s) for s in subs)


@dataclass(frozen=True)
class DefeatGraph:
    """An argumentation framework.

    ``defeats`` holds every edge, auxiliary ones included. For an expanded
    graph ``phi1``/``phi2`` are the two families of newly added edges; the
    auxiliary argument sits last in ``arguments``.
    """

    arguments: tuple[Argument, ...]
    defeats: frozenset[tuple[Argument, Argument]]
    lifting: str
    expanded: bool = False
    phi1: frozenset[tuple[Argument, Argument]] = frozenset()
    phi2: frozenset[tuple[Argument, Argument]] = frozenset()
    base_defeats: frozenset[tuple[Argument, Argument]] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.base_defeats is None:
            object.__setattr__(self, "base_defeats", self.defeats)
        known = set(self.arguments)
        for a, b in self.defeats:
            if a not in known or b not in known:
                raise HansError(f"defeat ({a}, {b}) leaves the argument set")
        if (AUX in known) != self.expanded:
            raise HansError("auxiliary argument present iff the graph is expanded")

    def index(self) -> dict[Argument, int]:
        return {a: i for i, a in enumerate(self.arguments)}

    def name(self, arg: Argument) -> str:
        if arg.is_auxiliary:
            return "aux"
        return f"A{self.arguments.index(arg)}"

    def by_name(self, name: str) -> Argument:
        if name == "aux":
            return AUX
        return self.arguments[int(name[1:])]

    @property
    def auxiliary(self) -> frozenset[tuple[Argument, Argument]]:
        """Edges added by the expansion."""
        return self.phi1 | self.phi2

    def sorted_edges(self, edges: Iterable[tuple[Argument, Argument]]) -> list[tuple[Argument, Argument]]:
        pos = self.index()
        return sorted(edges, key=lambda e: (pos[e[0]], pos[e[1]]))

    def defeaters(self, arg: Argument) -> list[Argument]:
        return [a for a, b in self.defeats if b == arg]


def build_af(
    hans: Hans, lifting: str = WEAKEST, target: str = "sub", allow_ties: bool = False
) -> DefeatGraph:
    """The defeat graph of ``hans`` under ``lifting``.

    Ranks must be pairwise distinct unless ``allow_ties`` is set; both
    comparisons are still defined on ties, but the expansion is not.
    """
    if lifting not in LIFTINGS:
        raise HansError(f"unknown lifting {lifting!r}")
    if not allow_ties and not is_totally_ordered(hans):
        raise NotTotallyOrderedError("argument lifting needs pairwise distinct norm ranks")
    args = enumerate_arguments(hans)
    edges = frozenset(
        (a, b)
        for a in args
        for b in args
        if b.is_ordinary and defeats(a, b, lifting, target)
    )
    return DefeatGraph(args, edges, lifting)


def expand_af(graph: DefeatGraph, psub_only: bool = False) -> DefeatGraph:
    """Add the auxiliary argument and the defeats on weakest arguments.

    For a defeat of ``b`` by some ``a`` outside ``warg(b)``, ``a`` defeats
    every member of ``warg(b)``. With ``psub_only`` only the members that are
    proper sub-arguments of ``b`` are targeted; that misses members branching
    off ``b`` above its weakest norm. A defeat by a member of ``warg(b)`` makes
    the auxiliary argument defeat all of ``warg(b)``.

    ``phi1``/``phi2`` record the edges that were not already defeats.
    """
    if graph.lifting != WEAKEST:
        raise HansError("only weakest-link graphs can be expanded")
    if graph.expanded:
        raise HansError("graph is already expanded")
    args = graph.arguments
    used = {u for a in args if a.is_ordinary for u in a.norms}
    if len({u.rank for u in used}) != len(used):
        raise NotTotallyOrderedError("the expansion needs pairwise distinct norm ranks")
    phi1: set[tuple[Argument, Argument]] = set()
    phi2: set[tuple[Argument, Argument]] = set()
    wargs: dict[Argument, list[Argument]] = {}
    for a, b in graph.defeats:
        if b not in wargs:
            wargs[b] = warg(b, args)
        weakest = wargs[b]
        if a in weakest:
            phi2.update((AUX, g) for g in weakest)
        else:
            if psub_only:
                proper = set(proper_sub_arguments(b))
                weakest = [g for g in weakest if g in proper]
            phi1.update((a, g) for g in weakest)
    phi1 -= graph.defeats
    return DefeatGraph(
        args + (AUX,),
        graph.defeats | phi1 | phi2,
        graph.lifting,
        expanded=True,
        phi1=frozenset(phi1),
        phi2=frozenset(phi2),
        base_defeats=graph.defeats,
    )
