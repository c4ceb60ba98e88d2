"""Edge-list text format and DOT export.

Format: the first non-comment line holds the order ``n``; every following
non-empty line holds one arc (or undirected edge) ``u v``, 0-indexed and
whitespace-separated. Lines starting with ``#`` are comments.
"""

from __future__ import annotations

from .core import Digraph, Graph, build_digraph, build_graph


def _parse_pairs(text: str) -> tuple[int, list[tuple[int, int]]]:
    order: int | None = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if order is None:
            if len(tokens) != 1:
                raise ValueError(f"line {lineno}: expected the order alone, got {line!r}")
            try:
                order = int(tokens[0])
            except ValueError:
                raise ValueError(f"line {lineno}: order is not an integer: {line!r}") from None
            continue
        if len(tokens) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ValueError(f"line {lineno}: endpoints are not integers: {line!r}") from None
        pairs.append((u, v))
    if order is None:
        raise ValueError("empty edge list: missing order line")
    return order, pairs


def digraph_from_edge_list(text: str) -> Digraph:
    order, pairs = _parse_pairs(text)
    return build_digraph(order, pairs)


def graph_from_edge_list(text: str) -> Graph:
    order, pairs = _parse_pairs(text)
    return build_graph(order, pairs)


def digraph_to_edge_list(D: Digraph) -> str:
    lines = [str(D.order)]
    lines.extend(f"{u} {v}" for u, v in sorted(D.arcs))
    return "\n".join(lines) + "\n"


def graph_to_edge_list(G: Graph) -> str:
    lines = [str(G.order)]
    lines.extend(f"{u} {v}" for u, v in sorted(G.edges))
    return "\n".join(lines) + "\n"


def digraph_to_dot(D: Digraph, name: str = "D") -> str:
    """DOT form; a bidirected pair is rendered as two separate arcs."""
    lines = [f"digraph {name} {{"]
    lines.extend(f"  {v};" for v in range(D.order))
    lines.extend(f"  {u} -> {v};" for u, v in sorted(D.arcs))
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_dot(G: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(G.order))
    lines.extend(f"  {u} -- {v};" for u, v in sorted(G.edges))
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_digraph(path: str) -> Digraph:
    with open(path, "r", encoding="utf-8") as f:
        return digraph_from_edge_list(f.read())


def load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as f:
        return graph_from_edge_list(f.read())
