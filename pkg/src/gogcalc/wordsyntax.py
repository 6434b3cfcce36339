"""Text forms: the K-word grammar and the graph-of-groups instance file.

Word grammar (factors written leftmost-applied-last)::

    word   := factor ("*" factor)*
    factor := edge | vert
    edge   := "y[" id "->" id "]" ("^-1")?
    vert   := "v" id "{" genword "}"

Canonical output omits identity vertex factors, except that a zero-length
identity word prints as ``v<id>{}``; edges always print in their
``y[s->t]`` orientation.

Graph files are JSON objects ``{"vertices": [{"id", "rank"}], "edges":
[{"name", "source", "target", "edge_indices", "inverse"}]}`` with ordinals
written as strings (bare integers are accepted too).
"""

from __future__ import annotations

import json
from pathlib import Path

from .freegroup import IDENTITY, WordSyntaxError, fg_multiply, format_freeword, parse_freeword
from .gog import EdgeWord, GraphError, GraphOfGroups, KWord, WordError, check_word, embed, validate_graph
from .ordinal import Ordinal, OrdinalError, format_ordinal, parse_ordinal


class EndpointMismatch(WordSyntaxError):
    def __init__(self, message: str, text: str, pos: int, factor: int):
        self.factor = factor
        super().__init__(f"factor {factor}: {message}", text, pos)


class GraphFileError(ValueError):
    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


def _skip_ws(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _ordinal_at(text: str, start: int, end: int) -> Ordinal:
    body = text[start:end]
    try:
        return parse_ordinal(body)
    except OrdinalError as exc:
        lead = len(body) - len(body.lstrip())
        raise WordSyntaxError(f"bad vertex id {body.strip()!r}: {exc}", text, start + lead) from None


def _scan_factors(text: str) -> list:
    """Tokenize into ``(kind, pos, payload)`` factors in textual order."""
    factors = []
    pos = _skip_ws(text, 0)
    if pos == len(text):
        raise WordSyntaxError("empty word", text, pos)
    while True:
        start = pos
        if text.startswith("y[", pos):
            close = text.find("]", pos)
            if close < 0:
                raise WordSyntaxError("unterminated edge, expected ']'", text, pos)
            arrow = text.find("->", pos + 2, close)
            if arrow < 0:
                raise WordSyntaxError("edge needs 'source->target'", text, pos + 2)
            src = _ordinal_at(text, pos + 2, arrow)
            dst = _ordinal_at(text, arrow + 2, close)
            pos = _skip_ws(text, close + 1)
            inverted = False
            if text.startswith("^-1", pos):
                inverted = True
                pos = _skip_ws(text, pos + 3)
            factors.append(("edge", start, (src, dst, inverted)))
        elif text.startswith("v", pos):
            brace = text.find("{", pos)
            if brace < 0:
                raise WordSyntaxError("vertex factor needs '{'", text, pos)
            vid = _ordinal_at(text, pos + 1, brace)
            close = text.find("}", brace)
            if close < 0:
                raise WordSyntaxError("unterminated vertex element, expected '}'", text, brace)
            body = text[brace + 1:close]
            try:
                elem = parse_freeword(body)
            except WordSyntaxError as exc:
                raise WordSyntaxError(exc.message, text, brace + 1 + exc.pos) from None
            pos = _skip_ws(text, close + 1)
            factors.append(("vert", start, (vid, elem)))
        else:
            raise WordSyntaxError("expected 'y[' or 'v'", text, pos)
        if pos == len(text):
            return factors
        if text[pos] != "*":
            raise WordSyntaxError("expected '*' between factors", text, pos)
        pos = _skip_ws(text, pos + 1)
        if pos == len(text):
            raise WordSyntaxError("dangling '*'", text, pos)


def parse_word(g: GraphOfGroups, text: str) -> KWord:
    factors = _scan_factors(text)
    elements = [IDENTITY]
    edges = []
    source = current = None
    for k in range(len(factors) - 1, -1, -1):
        kind, pos, payload = factors[k]
        index = k + 1
        if kind == "vert":
            vid, elem = payload
            if vid not in g.vertices:
                raise WordSyntaxError(f"unknown vertex {vid}", text, pos)
            if current is None:
                source = current = vid
            elif vid != current:
                raise EndpointMismatch(f"vertex {vid} does not match the current endpoint {current}", text, pos, index)
            elements[-1] = fg_multiply(elem, elements[-1])
        else:
            src, dst, inverted = payload
            try:
                name = g.edge_between(src, dst)
            except GraphError as exc:
                raise WordSyntaxError(str(exc), text, pos) from None
            if inverted:
                name = g.edges[name].inverse
                src, dst = dst, src
            if current is None:
                source = current = src
            elif src != current:
                raise EndpointMismatch(f"edge starts at {src} but the word is at {current}", text, pos, index)
            edges.append(name)
            elements.append(IDENTITY)
            current = dst
    w = KWord(source, current, tuple(elements), tuple(edges))
    try:
        check_word(g, w)
    except WordError as exc:
        raise WordSyntaxError(str(exc), text, 0) from None
    return w


def format_word(g: GraphOfGroups, w: KWord) -> str:
    parts = []
    path = [w.source] + [g.edges[n].target for n in w.edges]
    for k in range(len(w.edges), -1, -1):
        if w.elements[k]:
            parts.append(f"v{format_ordinal(path[k])}{{{format_freeword(w.elements[k])}}}")
        if k > 0:
            e = g.edges[w.edges[k - 1]]
            parts.append(f"y[{format_ordinal(e.source)}->{format_ordinal(e.target)}]")
    if not parts:
        return f"v{format_ordinal(w.source)}{{}}"
    return " * ".join(parts)


def format_edgeword(g: GraphOfGroups, u: EdgeWord) -> str:
    return format_word(g, embed(u))


# -- graph files --------------------------------------------------------------

def _ord_field(value, path: str) -> Ordinal:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise GraphFileError(path, f"expected an ordinal string, got {type(value).__name__}")
    try:
        return Ordinal.of(value)
    except (OrdinalError, TypeError) as exc:
        raise GraphFileError(path, str(exc)) from None


def graph_from_dict(data, validate: bool = True) -> GraphOfGroups:
    if not isinstance(data, dict):
        raise GraphFileError("", "top level must be an object")
    for key in ("vertices", "edges"):
        if not isinstance(data.get(key), list):
            raise GraphFileError(key, "missing or not a list")
    g = GraphOfGroups()
    for k, v in enumerate(data["vertices"]):
        path = f"vertices[{k}]"
        if not isinstance(v, dict):
            raise GraphFileError(path, "expected an object")
        for key in ("id", "rank"):
            if key not in v:
                raise GraphFileError(f"{path}.{key}", "missing")
        vid = _ord_field(v["id"], f"{path}.id")
        if vid in g.vertices:
            raise GraphFileError(f"{path}.id", f"duplicate vertex {vid}")
        g.add_vertex(vid, _ord_field(v["rank"], f"{path}.rank"))
    for k, e in enumerate(data["edges"]):
        path = f"edges[{k}]"
        if not isinstance(e, dict):
            raise GraphFileError(path, "expected an object")
        for key in ("name", "source", "target", "edge_indices", "inverse"):
            if key not in e:
                raise GraphFileError(f"{path}.{key}", "missing")
        for key in ("name", "inverse"):
            if not isinstance(e[key], str):
                raise GraphFileError(f"{path}.{key}", "expected a string")
        if e["name"] in g.edges:
            raise GraphFileError(f"{path}.name", f"duplicate edge {e['name']!r}")
        if not isinstance(e["edge_indices"], list):
            raise GraphFileError(f"{path}.edge_indices", "expected a list")
        indices = [_ord_field(x, f"{path}.edge_indices[{j}]") for j, x in enumerate(e["edge_indices"])]
        src = _ord_field(e["source"], f"{path}.source")
        dst = _ord_field(e["target"], f"{path}.target")
        for key, v in (("source", src), ("target", dst)):
            if v not in g.vertices:
                raise GraphFileError(f"{path}.{key}", f"unknown vertex {v}")
        g.add_edge(e["name"], src, dst, indices, e["inverse"])
    if validate:
        problems = validate_graph(g)
        if problems:
            raise GraphFileError("edges", "; ".join(problems))
    return g


def graph_to_dict(g: GraphOfGroups) -> dict:
    return {
        "vertices": [{"id": format_ordinal(v), "rank": format_ordinal(r)} for v, r in sorted(g.vertices.items())],
        "edges": [
            {
                "name": e.name,
                "source": format_ordinal(e.source),
                "target": format_ordinal(e.target),
                "edge_indices": [format_ordinal(i) for i in sorted(e.edge_indices)],
                "inverse": e.inverse,
            }
            for e in sorted(g.edges.values(), key=lambda e: (e.source, e.target, e.name))
        ],
    }


def load_graph(path) -> GraphOfGroups:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise GraphFileError("", f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return graph_from_dict(data)


def dump_graph(g: GraphOfGroups, path) -> None:
    Path(path).write_text(json.dumps(graph_to_dict(g), indent=2) + "\n")
