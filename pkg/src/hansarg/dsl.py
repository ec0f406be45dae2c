"""A small line-oriented text format for normative systems.

::

    # the Order puzzle
    context w
    norm w -> h rank 1
    norm h -> o rank 3
    norm w -> ~o rank 2

Lines are ``context <lit>[, <lit>...]``, ``norm <lit> -> <lit> rank <nat>``,
comments starting with ``#`` and blank lines. A literal is ``top`` or an
identifier with an optional leading ``~``. Norms get ids in file order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .core import TOP, Hans, HansError, Literal, Norm, ValidationError

__all__ = ["ParseError", "HansDocument", "parse_hans", "load_hans", "render_hans", "canonical_hans"]

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<arrow>->)|(?P<comma>,)|(?P<num>-?\d+)"
    r"|(?P<word>~?[A-Za-z_][A-Za-z0-9_]*)|(?P<bad>\S)"
)


class ParseError(HansError):
    """Malformed input; carries a 1-based line and column."""

    def __init__(self, message: str, line: int, column: int, source: str = "<string>"):
        super().__init__(f"{source}:{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column
        self.source = source


@dataclass(frozen=True)
class HansDocument:
    name: str
    hans: Hans
    # norm id -> (line, column); context literal -> (line, column)
    norm_spans: dict[int, tuple[int, int]] = field(default_factory=dict)
    context_spans: dict[Literal, tuple[int, int]] = field(default_factory=dict)
    warnings: tuple[str, ...] = ()


def _tokens(text: str, lineno: int, source: str) -> list[tuple[str, str, int]]:
    out = []
    for m in _TOKEN.finditer(text):
        kind = m.lastgroup
        if kind == "ws":
            continue
        if kind == "bad":
            raise ParseError(f"unexpected character {m.group()!r}", lineno, m.start() + 1, source)
        out.append((kind, m.group(), m.start() + 1))
    return out


class _Line:
    def __init__(self, toks, lineno: int, width: int, source: str):
        self.toks = toks
        self.pos = 0
        self.lineno = lineno
        self.width = width
        self.source = source

    def error(self, message: str, col: int | None = None) -> ParseError:
        if col is None:
            col = self.toks[self.pos][2] if self.pos < len(self.toks) else self.width + 1
        return ParseError(message, self.lineno, col, self.source)

    def take(self, kind: str, what: str):
        if self.pos >= len(self.toks) or self.toks[self.pos][0] != kind:
            found = "end of line" if self.pos >= len(self.toks) else repr(self.toks[self.pos][1])
            raise self.error(f"expected {what}, found {found}")
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def literal(self) -> tuple[Literal, int]:
        _, text, col = self.take("word", "a literal")
        if text == "~top":
            raise self.error("top cannot be negated", col)
        if text.startswith("~"):
            return Literal(text[1:], True), col
        if text == "top":
            return TOP, col
        return Literal(text), col

    def done(self) -> None:
        if self.pos < len(self.toks):
            raise self.error(f"unexpected {self.toks[self.pos][1]!r}")


def parse_hans(text: str, name: str = "<string>") -> HansDocument:
    """Parse ``text``; raises ``ParseError`` or ``ValidationError``."""
    context: list[Literal] = []
    context_spans: dict[Literal, tuple[int, int]] = {}
    norms: list[Norm] = []
    norm_spans: dict[int, tuple[int, int]] = {}
    pairs: dict[tuple[Literal, Literal], int] = {}
    warnings: list[str] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        toks = _tokens(body, lineno, name)
        if not toks:
            continue
        line = _Line(toks, lineno, len(body.rstrip()), name)
        _, keyword, kcol = line.take("word", "'context' or 'norm'")
        if keyword == "context":
            while True:
                lit, col = line.literal()
                if lit not in context_spans:
                    context.append(lit)
                    context_spans[lit] = (lineno, col)
                if line.pos == len(line.toks):
                    break
                line.take("comma", "','")
        elif keyword == "norm":
            a, _ = line.literal()
            line.take("arrow", "'->'")
            x, xcol = line.literal()
            _, kw, _ = line.take("word", "'rank'")
            if kw != "rank":
                raise line.error(f"expected 'rank', found {kw!r}", line.toks[line.pos - 1][2])
            _, num, ncol = line.take("num", "a rank")
            line.done()
            rank = int(num)
            if rank < 0:
                raise ValidationError(f"{name}:{lineno}:{ncol}: negative rank {rank}")
            if (a, x) in pairs:
                first = norm_spans[pairs[(a, x)]][0]
                raise ValidationError(
                    f"{name}:{lineno}:{kcol}: duplicate norm {a} -> {x} (first on line {first})"
                )
            if x.is_top:
                warnings.append(f"{name}:{lineno}:{xcol}: norm {a} -> top has no effect")
            nid = len(norms)
            norms.append(Norm(nid, a, x, rank))
            pairs[(a, x)] = nid
            norm_spans[nid] = (lineno, kcol)
        else:
            raise ParseError(f"unknown keyword {keyword!r}", lineno, kcol, name)

    for lit in context:
        if not lit.is_top and Literal(lit.atom, not lit.negated) in context_spans:
            line, col = context_spans[lit]
            raise ValidationError(f"{name}:{line}:{col}: context contains both {lit.atom} and ~{lit.atom}")
    hans = Hans(tuple(norms), frozenset(context))
    return HansDocument(name, hans, norm_spans, context_spans, tuple(warnings))


def load_hans(path) -> HansDocument:
    with open(path, encoding="utf-8") as fh:
        return parse_hans(fh.read(), str(path))


def render_hans(hans: Hans) -> str:
    """Canonical text for ``hans``: sorted context line, then norms by id."""
    lines = []
    ctx = sorted(str(c) for c in hans.context if not c.is_top)
    if ctx:
        lines.append("context " + ", ".join(ctx))
    for u in sorted(hans.norms, key=lambda u: u.id):
        lines.append(f"norm {u.antecedent} -> {u.consequent} rank {u.rank}")
    return "\n".join(lines) + ("\n" if lines else "")


def canonical_hans(hans: Hans) -> Hans:
    """What the text format can express: ids renumbered in id order, only mentioned atoms.

    ``parse_hans(render_hans(h)).hans == canonical_hans(h)`` for every ``h``.
    """
    norms = sorted(hans.norms, key=lambda u: u.id)
    return Hans(
        tuple(Norm(i, u.antecedent, u.consequent, u.rank) for i, u in enumerate(norms)),
        hans.context,
    )
