"""Bipartite graph representation, validation, and basic queries.

Vertices are identified by dense non-negative integers.  A graph keeps a
designated *left* side (the set searched from by Kőnig's procedure) and a
*right* side.  ``build_graph`` normalizes inputs so that the left side is
never larger than the right side; induced subgraphs keep their parent's
vertex ids and side designation.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Mapping, Sequence

from .errors import (
    DuplicateVertex,
    IndexOutOfRange,
    SameSideEdge,
    UnknownVertex,
)

Edge = tuple[int, int]


class BipartiteGraph:
    """An immutable bipartite graph with a designated left/right bipartition.

    Edges are stored as ``(u, v)`` pairs with ``u`` on the left side.
    Equality and hashing consider only the structure (sides and edges),
    not the labels.
    """

    __slots__ = ("left", "right", "edges", "labels", "sides_swapped",
                 "left_is_smaller", "_adjacency", "_hash")

    def __init__(
        self,
        left: Iterable[int],
        right: Iterable[int],
        edges: Iterable[Edge],
        labels: Mapping[int, str] | None = None,
        sides_swapped: bool = False,
    ):
        left_set = frozenset(left)
        right_set = frozenset(right)
        if left_set & right_set:
            raise DuplicateVertex(
                f"vertices on both sides: {sorted(left_set & right_set)}")
        normalized = set()
        for a, b in edges:
            if a in left_set and b in right_set:
                normalized.add((a, b))
            elif b in left_set and a in right_set:
                normalized.add((b, a))
            elif a in left_set and b in left_set or (
                    a in right_set and b in right_set):
                raise SameSideEdge(f"edge ({a}, {b}) joins one side to itself")
            else:
                raise UnknownVertex(f"edge ({a}, {b}) uses unknown vertices")
        self.left = left_set
        self.right = right_set
        self.edges = frozenset(normalized)
        if labels is None:
            self.labels = {v: str(v) for v in left_set | right_set}
        else:
            self.labels = {v: labels[v] for v in left_set | right_set}
        self.sides_swapped = sides_swapped
        self.left_is_smaller = len(left_set) <= len(right_set)
        adjacency: dict[int, set[int]] = {v: set() for v in left_set | right_set}
        for u, v in self.edges:
            adjacency[u].add(v)
            adjacency[v].add(u)
        self._adjacency = {v: frozenset(ns) for v, ns in adjacency.items()}
        self._hash = hash((self.left, self.right, self.edges))

    # -- basic queries -------------------------------------------------

    @property
    def vertices(self) -> frozenset[int]:
        return self.left | self.right

    def __contains__(self, v: int) -> bool:
        return v in self._adjacency

    def neighbors(self, v: int) -> frozenset[int]:
        """Exact adjacency set of ``v``."""
        try:
            return self._adjacency[v]
        except KeyError:
            raise UnknownVertex(f"vertex {v} not in graph") from None

    def side(self, v: int) -> str:
        if v in self.left:
            return "left"
        if v in self.right:
            return "right"
        raise UnknownVertex(f"vertex {v} not in graph")

    def edge_key(self, a: int, b: int) -> Edge:
        """Normalize an endpoint pair to the stored ``(left, right)`` order."""
        if a in self.left:
            return (a, b)
        return (b, a)

    def has_edge(self, a: int, b: int) -> bool:
        return self.edge_key(a, b) in self.edges

    def label_of(self, v: int) -> str:
        return self.labels[v]

    def vertex_by_label(self, label: str) -> int:
        for v, lab in self.labels.items():
            if lab == label:
                return v
        raise UnknownVertex(f"no vertex labeled {label!r}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return (self.left == other.left and self.right == other.right
                and self.edges == other.edges)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return (f"BipartiteGraph(|left|={len(self.left)}, "
                f"|right|={len(self.right)}, |edges|={len(self.edges)})")


class ComponentDecomposition:
    """Connected components of a graph, each keeping the parent's vertex ids.

    ``to_parent`` maps each component vertex back to the parent graph;
    because ids are preserved the maps are identities, kept so callers can
    relabel uniformly.
    """

    def __init__(self, parent: BipartiteGraph,
                 components: Sequence[BipartiteGraph]):
        self.parent = parent
        self.components = list(components)
        self.to_parent = [{v: v for v in comp.vertices}
                          for comp in self.components]

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)


def build_graph(
    left_count: int,
    right_count: int,
    edges: Iterable[tuple[int, int]],
    left_labels: Sequence[str] | None = None,
    right_labels: Sequence[str] | None = None,
) -> BipartiteGraph:
    """Build a normalized graph from per-side indices.

    Edge ``(i, j)`` joins the i-th left vertex to the j-th right vertex.
    Left vertices get ids ``0 .. left_count-1`` and right vertices
    ``left_count .. left_count+right_count-1``.  If the left side is
    larger than the right, the side roles are swapped (ids are unchanged)
    and the swap is recorded on the result.
    """
    if left_count < 0 or right_count < 0:
        raise IndexOutOfRange("vertex counts must be non-negative")
    edge_ids = set()
    for i, j in edges:
        if not (0 <= i < left_count):
            raise IndexOutOfRange(f"left index {i} out of range")
        if not (0 <= j < right_count):
            raise IndexOutOfRange(f"right index {j} out of range")
        edge_ids.add((i, left_count + j))
    if left_labels is None:
        left_labels = [f"u{i}" for i in range(left_count)]
    if right_labels is None:
        right_labels = [f"v{j}" for j in range(right_count)]
    if len(left_labels) != left_count or len(right_labels) != right_count:
        raise IndexOutOfRange("label sequences must match vertex counts")
    all_labels = list(left_labels) + list(right_labels)
    if len(set(all_labels)) != len(all_labels):
        raise DuplicateVertex("vertex labels must be unique")
    labels = dict(enumerate(all_labels))
    left_ids = range(left_count)
    right_ids = range(left_count, left_count + right_count)
    if left_count > right_count:
        return BipartiteGraph(right_ids, left_ids, edge_ids, labels,
                              sides_swapped=True)
    return BipartiteGraph(left_ids, right_ids, edge_ids, labels)


def neighbors(g: BipartiteGraph, v: int) -> frozenset[int]:
    return g.neighbors(v)


def induced_subgraph(g: BipartiteGraph,
                     vertices: Iterable[int]) -> BipartiteGraph:
    """Subgraph induced by ``vertices``, preserving parent ids and sides."""
    vset = set(vertices)
    unknown = vset - g.vertices
    if unknown:
        raise UnknownVertex(f"vertices not in graph: {sorted(unknown)}")
    return BipartiteGraph(
        g.left & vset,
        g.right & vset,
        {(u, v) for (u, v) in g.edges if u in vset and v in vset},
        g.labels,
    )


def subgraph_from_edges(g: BipartiteGraph, vertices: Iterable[int],
                        edges: Iterable[Edge]) -> BipartiteGraph:
    """Non-induced subgraph on the given vertices and edges of ``g``."""
    vset = set(vertices)
    eset = {g.edge_key(a, b) for a, b in edges}
    for u, v in eset:
        if u not in vset or v not in vset:
            raise UnknownVertex(f"edge ({u}, {v}) leaves the vertex set")
        if (u, v) not in g.edges:
            raise UnknownVertex(f"edge ({u}, {v}) not in parent graph")
    return BipartiteGraph(g.left & vset, g.right & vset, eset, g.labels)


def connected_components(g: BipartiteGraph) -> ComponentDecomposition:
    """Partition ``g`` into connected components (BFS)."""
    seen: set[int] = set()
    comps = []
    for start in sorted(g.vertices):
        if start in seen:
            continue
        queue = deque([start])
        comp = {start}
        seen.add(start)
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y not in comp:
                    comp.add(y)
                    seen.add(y)
                    queue.append(y)
        comps.append(induced_subgraph(g, comp))
    return ComponentDecomposition(g, comps)


def procedure_sides(g: BipartiteGraph) -> tuple[frozenset[int], frozenset[int]]:
    """Effective (U, V) sides for Kőnig's procedure, chosen per component.

    Within each connected component the smaller of the two sides plays the
    role of U; ties keep the graph's designated left side.
    """
    u_side: set[int] = set()
    v_side: set[int] = set()
    for comp in connected_components(g):
        if len(comp.left) <= len(comp.right):
            u_side |= comp.left
            v_side |= comp.right
        else:
            u_side |= comp.right
            v_side |= comp.left
    return frozenset(u_side), frozenset(v_side)
