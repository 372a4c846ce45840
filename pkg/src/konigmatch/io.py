"""Reading and writing graphs, matchings, and covers.

Two graph formats are supported:

* JSON: ``{"left": ["a1", ...], "right": ["b1", ...],
  "edges": [["a1", "b1"], ...]}``
* plain edge list: one ``u v`` pair per line; sides are inferred by
  two-coloring and an error is raised if the graph is not bipartite.

Matchings and covers serialize as JSON arrays of external labels.
"""

from __future__ import annotations

import json
from collections import deque
from collections.abc import Iterable

from .errors import InputError, NotBipartite, UnknownVertex
from .graph import BipartiteGraph, build_graph
from .matching import Matching


def graph_from_json_dict(data: dict) -> BipartiteGraph:
    try:
        left = list(data["left"])
        right = list(data["right"])
        edges = [tuple(e) for e in data["edges"]]
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed graph JSON: {exc}") from exc
    label_to_index = {}
    for idx, lab in enumerate(left):
        label_to_index[lab] = ("left", idx)
    for idx, lab in enumerate(right):
        label_to_index[lab] = ("right", idx)
    if len(label_to_index) != len(left) + len(right):
        raise InputError("duplicate vertex labels in graph JSON")
    index_edges = []
    for a, b in edges:
        if a not in label_to_index or b not in label_to_index:
            raise InputError(f"edge ({a!r}, {b!r}) uses unknown labels")
        sa, ia = label_to_index[a]
        sb, ib = label_to_index[b]
        if sa == sb:
            raise InputError(f"edge ({a!r}, {b!r}) joins one side to itself")
        if sa == "left":
            index_edges.append((ia, ib))
        else:
            index_edges.append((ib, ia))
    return build_graph(len(left), len(right), index_edges,
                       left_labels=left, right_labels=right)


def graph_from_edge_list(text: str) -> BipartiteGraph:
    """Parse a plain edge list, inferring sides by two-coloring."""
    adjacency: dict[str, set[str]] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected 'u v', got {line!r}")
        a, b = parts
        if a == b:
            raise InputError(f"line {lineno}: self-loop on {a!r}")
        adjacency.setdefault(a, set()).add(b)
        adjacency.setdefault(b, set()).add(a)
    color: dict[str, int] = {}
    for root in sorted(adjacency):
        if root in color:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in sorted(adjacency[x]):
                if y not in color:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    raise NotBipartite(
                        f"edge ({x!r}, {y!r}) closes an odd cycle")
    left = sorted(v for v in adjacency if color[v] == 0)
    right = sorted(v for v in adjacency if color[v] == 1)
    left_index = {lab: i for i, lab in enumerate(left)}
    right_index = {lab: i for i, lab in enumerate(right)}
    edges = set()
    for a, ns in adjacency.items():
        for b in ns:
            if color[a] == 0:
                edges.add((left_index[a], right_index[b]))
    return build_graph(len(left), len(right), edges,
                       left_labels=left, right_labels=right)


def load_graph(path: str) -> BipartiteGraph:
    """Load a graph file, trying JSON first, then the edge-list format."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        return graph_from_edge_list(text)
    if not isinstance(data, dict):
        raise InputError("graph JSON must be an object")
    return graph_from_json_dict(data)


def graph_to_json_dict(g: BipartiteGraph) -> dict:
    return {
        "left": [g.labels[v] for v in sorted(g.left)],
        "right": [g.labels[v] for v in sorted(g.right)],
        "edges": [[g.labels[u], g.labels[v]] for u, v in sorted(g.edges)],
    }


def matching_from_json(g: BipartiteGraph, data: list) -> Matching:
    edges = []
    for pair in data:
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise InputError(f"matching entry {pair!r} is not a pair")
        try:
            a = g.vertex_by_label(pair[0])
            b = g.vertex_by_label(pair[1])
        except UnknownVertex as exc:
            raise InputError(str(exc)) from exc
        edges.append((a, b))
    return Matching(g, edges)


def load_matching(g: BipartiteGraph, path: str) -> Matching:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputError(f"malformed matching JSON: {exc}") from exc
    if not isinstance(data, list):
        raise InputError("matching JSON must be an array of edge pairs")
    return matching_from_json(g, data)


def matching_to_json(m: Matching) -> list:
    g = m.graph
    return [[g.labels[u], g.labels[v]] for u, v in sorted(m.edges)]


def load_vertex_set(g: BipartiteGraph, path: str) -> frozenset[int]:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputError(f"malformed vertex-set JSON: {exc}") from exc
    if not isinstance(data, list):
        raise InputError("vertex-set JSON must be an array of labels")
    try:
        return frozenset(g.vertex_by_label(lab) for lab in data)
    except UnknownVertex as exc:
        raise InputError(str(exc)) from exc


def vertex_set_to_json(g: BipartiteGraph, vertices: Iterable[int]) -> list:
    return [g.labels[v] for v in sorted(vertices)]
