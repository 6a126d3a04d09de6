"""File formats: graph JSON, edge-list text, DOT, coloring JSON."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Optional

from .coloring import EdgeColoring
from .errors import InvalidParameter
from .graph import Graph


def graph_to_json(G: Graph, metadata: Optional[dict] = None) -> dict:
    out = {"n": G.n, "edges": [list(e) for e in G.edges]}
    if metadata:
        out.update(metadata)
    return out


def graph_from_json(data: dict) -> Graph:
    try:
        return Graph(int(data["n"]), [tuple(e) for e in data["edges"]])
    except (KeyError, TypeError, IndexError) as exc:
        raise InvalidParameter(f"graph JSON needs 'n' and 'edges' as [[u, v], ...]: {exc}") from None


def graph_from_edge_list(text: str) -> Graph:
    """``u v`` per line; ``#`` starts a comment; n is one more than the largest label."""
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InvalidParameter(f"line {lineno}: expected 'u v', got {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    n = 1 + max((max(e) for e in edges), default=-1)
    return Graph(n, edges)


def parse_graph(text: str) -> Graph:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidParameter(f"malformed JSON: {exc}") from None
        return graph_from_json(data)
    return graph_from_edge_list(text)


def read_graph(path: "str | Path") -> Graph:
    return parse_graph(Path(path).read_text())


def read_json(path: "str | Path") -> dict:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InvalidParameter(f"{path}: malformed JSON: {exc}") from None


def coloring_to_json(c: EdgeColoring) -> dict:
    return {"k": c.palette_size, "colors": list(c.colors)}


def coloring_from_json(data: dict) -> EdgeColoring:
    try:
        return EdgeColoring.from_colors(data["colors"], int(data["k"]))
    except (KeyError, TypeError) as exc:
        raise InvalidParameter(f"coloring JSON needs 'k' and 'colors': {exc}") from None


def to_dot(G: Graph, c: Optional[EdgeColoring] = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(G.n)]
    for i, (u, v) in enumerate(G.edges):
        label = f' [label="{c[i]}"]' if c is not None else ""
        lines.append(f"  {u} -- {v}{label};")
    lines.append("}")
    return "\n".join(lines) + "\n"
