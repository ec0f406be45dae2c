"""Hierarchical abstract normative systems and their detachment procedures.

A system is a set of ranked conditional norms ``(a, x)`` over literals plus a
context of facts. Three procedures compute what is detached from it:

* ``greedy``        -- apply the best applicable norm until nothing applies;
* ``reduction``     -- guess an extension, make the norms it triggers
                       body-free, and keep the guess if Greedy returns it;
* ``optimization``  -- collect a maximal obeyable set of norms in rank order,
                       then detach along it.

All values are immutable; every function here is pure.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

__all__ = [
    "Literal",
    "TOP",
    "Norm",
    "Hans",
    "HansError",
    "ValidationError",
    "NotTotallyOrderedError",
    "TopComplementError",
    "parse_literal",
    "complement",
    "is_consistent",
    "is_totally_ordered",
    "reachable",
    "consistent_paths",
    "active_norms",
    "applicable",
    "greedy_norms",
    "greedy",
    "greedy_preorder",
    "reduce_system",
    "reduction",
    "max_obeyable",
    "optimization",
    "sort_family",
]


class HansError(ValueError):
    """Base class for errors raised on normative systems."""


class ValidationError(HansError):
    pass


class NotTotallyOrderedError(HansError):
    pass


class TopComplementError(HansError):
    pass


@dataclass(frozen=True)
class Literal:
    """An atom, a negated atom, or top (``atom is None``)."""

    atom: str | None
    negated: bool = False

    def __post_init__(self):
        if self.atom is None:
            if self.negated:
                raise ValidationError("top cannot be negated")
        elif not self.atom:
            raise ValidationError("atom identifiers must be nonempty")

    @property
    def kind(self) -> str:
        if self.atom is None:
            return "top"
        return "negated" if self.negated else "positive"

    @property
    def is_top(self) -> bool:
        return self.atom is None

    def __str__(self):
        if self.atom is None:
            return "top"
        return ("~" if self.negated else "") + self.atom

    def __repr__(self):
        return f"Literal({str(self)!r})"

    def __lt__(self, other):
        if not isinstance(other, Literal):
            return NotImplemented
        return str(self) < str(other)


TOP = Literal(None)


def parse_literal(text: str) -> Literal:
    """``"w"`` -> w, ``"~w"`` -> not-w, ``"top"`` -> top."""
    text = text.strip()
    if text == "top":
        return TOP
    if text.startswith("~"):
        return Literal(text[1:], True)
    return Literal(text)


def _lit(value) -> Literal:
    return value if isinstance(value, Literal) else parse_literal(value)


def complement(lit: Literal) -> Literal:
    if lit.atom is None:
        raise TopComplementError("top has no complement")
    return Literal(lit.atom, not lit.negated)


def is_consistent(literals: Iterable[Literal]) -> bool:
    seen = set(literals)
    return not any(
        not l.is_top and Literal(l.atom, not l.negated) in seen for l in seen
    )


@dataclass(frozen=True)
class Norm:
    id: int
    antecedent: Literal
    consequent: Literal
    rank: int

    def __post_init__(self):
        if self.rank < 0:
            raise ValidationError(f"norm {self} has negative rank")

    @property
    def pair(self) -> tuple[Literal, Literal]:
        return (self.antecedent, self.consequent)

    def __str__(self):
        return f"({self.antecedent},{self.consequent})"

    def __repr__(self):
        return f"Norm({self.id}: {self.antecedent}->{self.consequent}@{self.rank})"


@dataclass(frozen=True)
class Hans:
    """A hierarchical abstract normative system.

    ``norms`` keeps declaration order (ids ``0..n-1`` for parsed systems);
    the rank function lives on each norm. ``top`` is always in ``context``.
    When ``atoms`` is omitted it is the set of atoms the norms and context
    mention.
    """

    norms: tuple[Norm, ...] = ()
    context: frozenset[Literal] = frozenset({TOP})
    atoms: frozenset[str] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        object.__setattr__(self, "norms", tuple(self.norms))
        object.__setattr__(self, "context", frozenset(self.context) | {TOP})
        mentioned = {
            l.atom
            for l in itertools.chain(
                self.context, *((u.antecedent, u.consequent) for u in self.norms)
            )
            if l.atom is not None
        }
        if self.atoms is None:
            object.__setattr__(self, "atoms", frozenset(mentioned))
        else:
            object.__setattr__(self, "atoms", frozenset(self.atoms))
            stray = mentioned - self.atoms
            if stray:
                raise ValidationError(f"literals over unknown atoms: {sorted(stray)}")
        if not is_consistent(self.context):
            raise ValidationError("context contains a literal and its complement")
        pairs = [u.pair for u in self.norms]
        if len(set(pairs)) != len(pairs):
            raise ValidationError("two norms share the same (antecedent, consequent)")
        ids = [u.id for u in self.norms]
        if len(set(ids)) != len(ids):
            raise ValidationError("norm ids must be unique")

    @classmethod
    def build(
        cls,
        norms: Iterable[tuple] = (),
        context: Iterable = (),
        atoms: Iterable[str] | None = None,
    ) -> "Hans":
        """Build from ``(body, head, rank)`` triples and context literals.

        Literals may be given as strings (``"~o"``) or ``Literal`` values.
        """
        built = tuple(
            Norm(i, _lit(a), _lit(x), int(r)) for i, (a, x, r) in enumerate(norms)
        )
        ctx = frozenset(_lit(c) for c in context)
        return cls(built, ctx, None if atoms is None else frozenset(atoms))

    def norm(self, body, head) -> Norm:
        pair = (_lit(body), _lit(head))
        for u in self.norms:
            if u.pair == pair:
                return u
        raise KeyError(f"no norm {pair}")

    def ranks(self) -> Mapping[Norm, int]:
        return {u: u.rank for u in self.norms}


def is_totally_ordered(hans: Hans) -> bool:
    ranks = [u.rank for u in hans.norms]
    return len(set(ranks)) == len(ranks)


def _require_total(hans: Hans, what: str) -> None:
    if not is_totally_ordered(hans):
        raise NotTotallyOrderedError(f"{what} needs pairwise distinct norm ranks")


def reachable(hans: Hans, norms: Iterable[Norm], consistent: bool = False) -> frozenset[Literal]:
    """Literals at the end of some path along ``norms`` that starts in the context.

    With ``consistent=True`` only consistent paths count.
    """
    if consistent:
        found = {path[-1].consequent for path in consistent_paths(hans, norms)}
        found.discard(TOP)
        return frozenset(found)
    by_body: dict[Literal, list[Norm]] = defaultdict(list)
    for u in norms:
        by_body[u.antecedent].append(u)
    found: set[Literal] = set()
    expanded = set(hans.context)
    stack = list(hans.context)
    while stack:
        a = stack.pop()
        for u in by_body.get(a, ()):
            x = u.consequent
            found.add(x)
            if x not in expanded:
                expanded.add(x)
                stack.append(x)
    found.discard(TOP)
    return frozenset(found)


def consistent_paths(hans: Hans, norms: Iterable[Norm] | None = None) -> Iterator[tuple[Norm, ...]]:
    """Non-redundant consistent paths from the context, depth first.

    A path starts at a context literal and its literals are pairwise
    consistent. It never passes through a context literal or an earlier
    literal of its own; only its last literal may repeat one of those (a loop
    closed at the end). Any literal reachable by a consistent path is the end
    of such a path.
    """
    by_body: dict[Literal, list[Norm]] = defaultdict(list)
    for u in hans.norms if norms is None else norms:
        by_body[u.antecedent].append(u)
    path: list[Norm] = []

    def extend(tip: Literal, lits: set[Literal], blocked: frozenset[Literal]):
        for u in by_body.get(tip, ()):
            x = u.consequent
            if not x.is_top and complement(x) in lits:
                continue
            path.append(u)
            yield tuple(path)
            if x not in blocked:
                lits.add(x)
                yield from extend(x, lits, blocked | {x})
                lits.discard(x)
            path.pop()

    for c in sorted(hans.context):
        yield from extend(c, {c}, hans.context)


def active_norms(hans: Hans) -> frozenset[Norm]:
    """Norms lying on some consistent path from the context."""
    return frozenset(path[-1] for path in consistent_paths(hans))


def applicable(hans: Hans, selected: Iterable[Norm]) -> frozenset[Norm]:
    """Norms outside ``selected`` that may be applied next.

    A norm applies when its body is in the context or already produced, its
    head has not been produced yet, and the complement of its head is neither
    a fact nor produced. A head that is merely a fact does not block the norm.
    """
    selected = frozenset(selected)
    produced = {u.consequent for u in selected}
    known = hans.context | produced
    out = []
    for u in hans.norms:
        if u in selected or u.antecedent not in known:
            continue
        x = u.consequent
        if x in produced:
            continue
        if not x.is_top and complement(x) in known:
            continue
        out.append(u)
    return frozenset(out)


def greedy_norms(hans: Hans) -> frozenset[Norm]:
    """The fixpoint norm set of the Greedy construction."""
    _require_total(hans, "greedy")
    chosen: frozenset[Norm] = frozenset()
    while True:
        cands = applicable(hans, chosen)
        if not cands:
            return chosen
        chosen = chosen | {max(cands, key=lambda u: u.rank)}


def greedy(hans: Hans) -> frozenset[Literal]:
    return reachable(hans, greedy_norms(hans))


def greedy_preorder(hans: Hans) -> frozenset[frozenset[Literal]]:
    """Greedy with rank ties resolved in every possible way.

    Each step branches over all applicable norms of maximal rank. On a
    totally ordered system this is ``{greedy(hans)}``.
    """
    results: set[frozenset[Literal]] = set()
    visited: set[frozenset[Norm]] = set()
    stack: list[frozenset[Norm]] = [frozenset()]
    while stack:
        chosen = stack.pop()
        if chosen in visited:
            continue
        visited.add(chosen)
        cands = applicable(hans, chosen)
        if not cands:
            results.add(reachable(hans, chosen))
            continue
        best = max(u.rank for u in cands)
        stack.extend(chosen | {u} for u in cands if u.rank == best)
    return frozenset(results)


def reduce_system(hans: Hans, assumed: Iterable[Literal]) -> Hans:
    """Make every norm triggered by the context or ``assumed`` body-free.

    Norms sharing a head collapse into one ``(top, head)`` norm carrying the
    highest contributing rank.
    """
    bodies = hans.context | frozenset(assumed)
    best: dict[Literal, int] = {}
    for u in hans.norms:
        if u.antecedent in bodies:
            x = u.consequent
            best[x] = max(best.get(x, u.rank), u.rank)
    norms = tuple(
        Norm(i, TOP, x, best[x]) for i, x in enumerate(sorted(best))
    )
    return Hans(norms, hans.context, hans.atoms)


def _candidate_extensions(hans: Hans) -> Iterable[frozenset[Literal]]:
    # every fixpoint is a subset of the heads, consistent with the context
    heads = {u.consequent for u in hans.norms if not u.consequent.is_top}
    options = []
    for atom in sorted({l.atom for l in heads}):
        choice: list[tuple[Literal, ...]] = [()]
        for lit in (Literal(atom), Literal(atom, True)):
            if lit in heads and complement(lit) not in hans.context:
                choice.append((lit,))
        options.append(choice)
    for combo in itertools.product(*options):
        yield frozenset(itertools.chain.from_iterable(combo))


def _grounded(hans: Hans, cand: frozenset[Literal]) -> bool:
    # every literal of the guess must be the end of a consistent path using
    # only norms that the guess itself triggers and produces
    support = [u for u in hans.norms if u.antecedent in hans.context | cand and u.consequent in cand]
    return reachable(hans, support, consistent=True) >= cand


def reduction(hans: Hans, literal: bool = False) -> frozenset[frozenset[Literal]]:
    """All guesses ``U`` with ``greedy(reduce_system(H, U)) == U``.

    By default inert norms (on no consistent path) are dropped first and a
    guess must be grounded in consistent paths it triggers itself. Pass
    ``literal=True`` for the bare fixpoint test.
    """
    _require_total(hans, "reduction")
    if not literal:
        active = active_norms(hans)
        hans = Hans(tuple(u for u in hans.norms if u in active), hans.context, hans.atoms)
    return frozenset(
        cand
        for cand in _candidate_extensions(hans)
        if greedy(reduce_system(hans, cand)) == cand
        and (literal or _grounded(hans, cand))
    )


def max_obeyable(hans: Hans, literal: bool = False) -> frozenset[Norm]:
    """Norms kept when scanning by descending rank while the output stays consistent.

    Output is what consistent paths reach unless ``literal`` asks for plain
    reachability.
    """
    _require_total(hans, "optimization")
    kept: frozenset[Norm] = frozenset()
    for u in sorted(hans.norms, key=lambda u: -u.rank):
        trial = kept | {u}
        if is_consistent(hans.context | reachable(hans, trial, consistent=not literal)):
            kept = trial
    return kept


def optimization(hans: Hans, literal: bool = False) -> frozenset[Literal]:
    return reachable(hans, max_obeyable(hans, literal), consistent=not literal)


def sort_family(family: Iterable[Iterable[Literal]]) -> list[list[str]]:
    """Canonical rendering of a family of literal sets: sorted strings, sorted lists."""
    return sorted(sorted(str(l) for l in ext) for ext in family)
