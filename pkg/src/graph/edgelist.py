# src/graph/edgelist.py

from typing import List

from src.errors import EdgeListParseError
from src.graph.multigraph import Multigraph


def parse_edge_list(text: str) -> Multigraph:
    """One `u v` pair per line; `#` starts a comment; `u u` is a loop. Edge ids follow line order."""
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(f"line {lineno}: expected two vertex ids, got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(f"line {lineno}: vertex ids must be integers") from None
        if u < 0 or v < 0:
            raise EdgeListParseError(f"line {lineno}: vertex ids must be non-negative")
        pairs.append((u, v))
    if not pairs:
        raise EdgeListParseError("edge list is empty")
    return Multigraph.from_edges(pairs)


def format_edge_list(g: Multigraph) -> str:
    lines: List[str] = []
    for e in g.sorted_edges():
        u, v = g.endpoints(e)
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def read_edge_list(path: str) -> Multigraph:
    with open(path, encoding="utf-8") as f:
        return parse_edge_list(f.read())
