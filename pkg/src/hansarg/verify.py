"""Executable checks of the three representation theorems, plus random instances.

Each check computes the detachment side and the argumentation side
independently and compares them as sets of literal sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .argumentation import LAST, WEAKEST, build_af, expand_af
from .core import (
    TOP,
    Hans,
    HansError,
    Literal,
    NotTotallyOrderedError,
    greedy,
    is_totally_ordered,
    optimization,
    reduction,
    sort_family,
)
from .semantics import SEMANTICS, conclusions, extensions, outfamily

__all__ = [
    "VerifyReport",
    "verify_greedy",
    "verify_reduction",
    "verify_optimization",
    "verify_all",
    "random_hans",
    "random_trials",
    "exploratory",
    "MAX_ATOMS",
    "MAX_NORMS",
]

MAX_ATOMS = 8
MAX_NORMS = 12
_ATOM_NAMES = "abcdefgh"

Family = frozenset[frozenset[Literal]]


@dataclass(frozen=True)
class VerifyReport:
    theorem: str
    instance: str
    lhs: Family
    rhs: Family
    seed: str | None = None
    note: str = ""
    passed: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "passed", self.lhs == self.rhs and not self.note)

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        text = f"{verdict} {self.theorem} {self.instance}"
        if self.seed is not None:
            text += f" seed={self.seed}"
        if not self.passed:
            text += f" lhs={sort_family(self.lhs)} rhs={sort_family(self.rhs)}"
            if self.note:
                text += f" ({self.note})"
        return text


def _require_total(hans: Hans) -> None:
    if not is_totally_ordered(hans):
        raise NotTotallyOrderedError("the theorems need pairwise distinct norm ranks")


def verify_greedy(hans: Hans, instance: str = "", seed: str | None = None) -> VerifyReport:
    """{greedy(H)} against the stable outfamily of the weakest-link framework."""
    _require_total(hans)
    lhs = frozenset({greedy(hans)})
    rhs = outfamily(build_af(hans, WEAKEST), "stable")
    return VerifyReport("greedy", instance, lhs, rhs, seed)


def verify_reduction(hans: Hans, instance: str = "", seed: str | None = None) -> VerifyReport:
    """reduction(H) against the stable outfamily of the last-link framework."""
    _require_total(hans)
    lhs = reduction(hans)
    rhs = outfamily(build_af(hans, LAST), "stable")
    return VerifyReport("reduction", instance, lhs, rhs, seed)


def verify_optimization(hans: Hans, instance: str = "", seed: str | None = None) -> VerifyReport:
    """optimization(H) against the unique stable extension of the expanded framework."""
    _require_total(hans)
    lhs = frozenset({optimization(hans)})
    exts = extensions(expand_af(build_af(hans, WEAKEST)), "stable")
    rhs = frozenset(conclusions(e) for e in exts)
    note = "" if len(exts) == 1 else f"{len(exts)} stable extensions, expected exactly one"
    return VerifyReport("optimization", instance, lhs, rhs, seed, note)


def verify_all(hans: Hans, instance: str = "", seed: str | None = None) -> list[VerifyReport]:
    return [f(hans, instance, seed) for f in (verify_greedy, verify_reduction, verify_optimization)]


def _rng(seed) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_hans(atoms: int, norms: int, seed) -> Hans:
    """A random totally ordered system with exactly ``atoms`` atoms and ``norms`` norms.

    Norm pairs are drawn without replacement from (body, head) with a literal or
    top as body and a literal as head; ranks are a permutation of
    ``0..norms-1``. The context is consistent and holds at least one body.
    ``seed`` is anything ``numpy.random.default_rng`` accepts.
    """
    if not 0 <= atoms <= MAX_ATOMS:
        raise HansError(f"atoms must lie in 0..{MAX_ATOMS}, got {atoms}")
    if not 0 <= norms <= MAX_NORMS:
        raise HansError(f"norms must lie in 0..{MAX_NORMS}, got {norms}")
    lits = [Literal(a) for a in _ATOM_NAMES[:atoms]]
    lits += [Literal(l.atom, True) for l in lits]
    bodies = [TOP] + lits
    n_pairs = len(bodies) * len(lits)
    if norms > n_pairs:
        raise HansError(f"{norms} norms do not fit in {n_pairs} distinct pairs")
    rng = _rng(seed)
    picks = rng.choice(n_pairs, size=norms, replace=False) if norms else []
    pairs = [(bodies[i // len(lits)], lits[i % len(lits)]) for i in picks]
    ranks = rng.permutation(norms)

    context: dict[str, Literal] = {}
    anchors = [b for b, _ in pairs if not b.is_top]
    if anchors:
        first = anchors[int(rng.integers(len(anchors)))]
        context[first.atom] = first
    for a in _ATOM_NAMES[:atoms]:
        roll = int(rng.integers(3))
        if a not in context and roll < 2:
            context[a] = Literal(a, bool(roll))
    return Hans.build(
        [(b, x, int(r)) for (b, x), r in zip(pairs, ranks)],
        context.values(),
        atoms=_ATOM_NAMES[:atoms],
    )


def random_trials(
    trials: int, seed: int, max_atoms: int = 5, max_norms: int = 7
) -> Iterator[tuple[int, Hans, str]]:
    """Yield ``(index, hans, seed_label)``; trial ``i`` depends only on ``seed`` and ``i``."""
    for i, child in enumerate(np.random.SeedSequence(seed).spawn(trials)):
        rng = _rng(child)
        atoms = int(rng.integers(1, max_atoms + 1))
        norms = int(rng.integers(0, min(max_norms, 2 * atoms * (2 * atoms + 1)) + 1))
        yield i, random_hans(atoms, norms, rng), f"{seed}/{i}"


def exploratory(hans: Hans) -> dict[str, dict[str, list[list[str]]]]:
    """Outfamilies of both liftings under every semantics. Informational only."""
    out = {}
    for lifting in (WEAKEST, LAST):
        graph = build_af(hans, lifting)
        out[lifting] = {kind: sort_family(outfamily(graph, kind)) for kind in SEMANTICS}
    graph = expand_af(build_af(hans, WEAKEST))
    out["weakest+aux"] = {kind: sort_family(outfamily(graph, kind)) for kind in SEMANTICS}
    return out
