"""JSON, DOT and plain-text renderings. Output is deterministic byte for byte."""

from __future__ import annotations

import json
from typing import Iterable

from .argumentation import Argument, DefeatGraph
from .core import TOP, Hans, Literal, sort_family
from .semantics import conclusions

__all__ = [
    "render_json",
    "detachment_payload",
    "graph_payload",
    "extensions_payload",
    "render_dot",
    "braces",
]


def render_json(payload: dict) -> str:
    return json.dumps(payload, separators=(",", ":"), sort_keys=False, ensure_ascii=True)


def detachment_payload(method: str, family: Iterable[Iterable[Literal]]) -> dict:
    return {"method": method, "extensions": sort_family(family)}


def _arg_entry(graph: DefeatGraph, arg: Argument) -> dict:
    return {"id": graph.name(arg), "kind": arg.kind, "path": arg.path() if not arg.is_auxiliary else []}


def _edges(graph: DefeatGraph, edges) -> list[list[str]]:
    return [[graph.name(a), graph.name(b)] for a, b in graph.sorted_edges(edges)]


def graph_payload(graph: DefeatGraph) -> dict:
    return {
        "lifting": graph.lifting,
        "expanded": graph.expanded,
        "arguments": [_arg_entry(graph, a) for a in graph.arguments],
        "defeats": _edges(graph, graph.defeats),
        "auxiliary": _edges(graph, graph.auxiliary),
    }


def _member_names(graph: DefeatGraph, ext) -> list[str]:
    pos = graph.index()
    return [graph.name(a) for a in sorted(ext, key=pos.__getitem__)]


def extensions_payload(graph: DefeatGraph, kind: str, exts) -> dict:
    return {
        "lifting": graph.lifting,
        "expanded": graph.expanded,
        "semantics": kind,
        "extensions": [_member_names(graph, e) for e in exts],
        "conclusions": [sorted(str(l) for l in conclusions(e)) for e in exts],
    }


def braces(literals: Iterable[Literal]) -> str:
    return "{" + ", ".join(sorted(str(l) for l in literals if not l.is_top)) + "}"


def _q(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _hans_dot(hans: Hans) -> str:
    mentioned = {l for u in hans.norms for l in (u.antecedent, u.consequent)}
    ctx = sorted(c for c in hans.context if not c.is_top or TOP in mentioned)
    others = sorted(mentioned - set(ctx))
    out = ["digraph hans {", "  rankdir=LR;", "  subgraph cluster_context {", '    label="context";']
    out += [f"    {_q(str(c))} [shape=box];" for c in ctx]
    out.append("  }")
    out += [f"  {_q(str(l))} [shape=ellipse];" for l in others]
    for u in sorted(hans.norms, key=lambda u: u.id):
        out.append(
            f"  {_q(str(u.antecedent))} -> {_q(str(u.consequent))} [style=dashed, label={_q(str(u.rank))}];"
        )
    out.append("}")
    return "\n".join(out) + "\n"


def _af_dot(graph: DefeatGraph) -> str:
    out = ["digraph af {"]
    for a in graph.arguments:
        name = graph.name(a)
        label = name if a.is_auxiliary else f"{name}: {' '.join(a.path())}"
        shape = "box" if a.is_context else ("diamond" if a.is_auxiliary else "ellipse")
        out.append(f"  {_q(name)} [shape={shape}, label={_q(label)}];")
    aux = graph.auxiliary
    for a, b in graph.sorted_edges(graph.defeats):
        style = "dashed" if (a, b) in aux else "solid"
        out.append(f"  {_q(graph.name(a))} -> {_q(graph.name(b))} [style={style}];")
    out.append("}")
    return "\n".join(out) + "\n"


def render_dot(obj: Hans | DefeatGraph) -> str:
    if isinstance(obj, DefeatGraph):
        return _af_dot(obj)
    return _hans_dot(obj)
