# graph_io.py
"""Text formats for LabeledGraph: graph6, DOT and adjacency lists."""

from __future__ import annotations

from pathlib import Path

import networkx as nx

from .exceptions import GraphFormatError
from .graph_core import LabeledGraph

GRAPH6_MAX_ORDER = 258047


def to_graph6(g):
    """graph6 string (no header, no newline) with vertices in index order."""
    if g.order > GRAPH6_MAX_ORDER:
        raise GraphFormatError(
            f"graph6 supports at most {GRAPH6_MAX_ORDER} vertices, {g.name} has {g.order}."
        )
    data = nx.to_graph6_bytes(g.to_networkx(), nodes=list(range(g.order)), header=False)
    return data.decode("ascii").strip()


def from_graph6(text, *, name="graph6"):
    line = text.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise GraphFormatError("Empty graph6 input.")
    try:
        G = nx.from_graph6_bytes(line.encode("ascii"))
    except (ValueError, nx.NetworkXError) as exc:
        raise GraphFormatError(f"Invalid graph6 string {line!r}: {exc}") from exc
    return LabeledGraph.from_networkx(G, name=name)


def to_dot(g):
    """DOT text; subset labels render as ``{1,2}``, parts as a ``part`` attribute."""
    lines = [f'graph "{g.name}" {{']
    for v in range(g.order):
        attrs = [f'label="{g.label_of(v)}"']
        if g.bipartition is not None:
            attrs.append(f"part={g.bipartition[v]}")
        lines.append(f"  {v} [{', '.join(attrs)}];")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_adjacency_text(g):
    """One line per vertex: ``v: n1 n2 ...`` (0-based vertex indices)."""
    return "".join(
        f"{v}: {' '.join(map(str, nbrs))}".rstrip() + "\n"
        for v, nbrs in enumerate(g.neighbors)
    )


def from_adjacency_text(text, *, name="adjacency"):
    rows = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, tail = line.partition(":")
        if not sep:
            raise GraphFormatError(f"Line {lineno}: expected 'v: n1 n2 ...', got {raw!r}.")
        try:
            rows[int(head)] = [int(x) for x in tail.split()]
        except ValueError as exc:
            raise GraphFormatError(f"Line {lineno}: {exc}") from exc
    order = len(rows)
    if sorted(rows) != list(range(order)):
        raise GraphFormatError("Adjacency lines must cover vertices 0..n-1 exactly once.")
    edges = set()
    for v, nbrs in rows.items():
        for w in nbrs:
            if not 0 <= w < order:
                raise GraphFormatError(f"Vertex {v} lists unknown neighbour {w}.")
            if v not in rows[w]:
                raise GraphFormatError(f"Adjacency is not symmetric: {v} lists {w} but not vice versa.")
            edges.add((min(v, w), max(v, w)))
    return LabeledGraph(order, sorted(edges), name=name)


FORMATS = {
    "graph6": to_graph6,
    "dot": to_dot,
    "adj": to_adjacency_text,
}


def render(g, fmt):
    try:
        writer = FORMATS[fmt]
    except KeyError:
        raise GraphFormatError(f"Unknown format {fmt!r}; choose from {', '.join(FORMATS)}.")
    text = writer(g)
    return text if text.endswith("\n") else text + "\n"


def read_graph_file(path):
    """Load a graph from ``.g6`` (graph6) or any other extension (adjacency text)."""
    path = Path(path)
    try:
        text = path.read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as exc:
        raise GraphFormatError(f"Cannot read graph file {path}: {exc}") from exc
    if path.suffix in (".g6", ".graph6"):
        return from_graph6(text.splitlines()[0] if text.strip() else "", name=path.stem)
    return from_adjacency_text(text, name=path.stem)
