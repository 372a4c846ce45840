"""Augmenting-path structures and the classification of maximal matchings.

For an augmenting path P, the structure graph collects every augmenting
path (from an unsaturated U-vertex) sharing at least one vertex with P.
Two truncations isolate the part responsible for cover-size loss: the
"hat" cuts away everything below the highest point where a path from a
different root first joins P, and the "check" keeps the part of the
structure that is still reachable by alternating paths once P has been
augmented.  A maximal matching maps to a minimum vertex cover exactly
when no structure minus its check part retains two unsaturated
V-vertices; equivalently, no single augmentation strands a second
endpoint.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .errors import (
    NotAugmenting,
    NotMaximal,
    PathExplosion,
)
from .graph import BipartiteGraph, Edge, procedure_sides, subgraph_from_edges
from .konig import konig_cover, z_set
from .matching import (
    AlternatingPath,
    Matching,
    _require_same_graph,
    is_maximal,
)

DEFAULT_PATH_LIMIT = 10 ** 6


@dataclass(frozen=True)
class PathOrder:
    """Vertex positions along a path, from its first vertex to its last."""

    path: AlternatingPath
    rank: dict[int, int]

    def __contains__(self, v: int) -> bool:
        return v in self.rank


def path_order(p: AlternatingPath) -> PathOrder:
    return PathOrder(p, {v: i for i, v in enumerate(p.vertices)})


@dataclass(frozen=True)
class PathStructure:
    """The union of all augmenting paths vertex-wise intersecting a base path.

    ``hat_cut_vertex`` is the V-vertex bounding the hat truncation (None
    when no path from a different root reaches the base path's endpoint).
    ``check_vertices`` is the surviving region: the structure vertices
    still reachable by alternating paths from unsaturated U-vertices
    after augmenting along the base path.  ``check_cut_vertex`` is the
    matched U-vertex on the boundary of that region, when one exists.
    """

    base_path: AlternatingPath
    family: tuple[AlternatingPath, ...]
    subgraph: BipartiteGraph
    hat_cut_vertex: int | None
    check_cut_vertex: int | None
    check_vertices: frozenset[int]


@dataclass(frozen=True)
class ClassificationVerdict:
    """Outcome of the maximal-matching classification.

    When ``is_minimum`` is false, ``witness`` holds an augmenting path and
    the (≥ 2) unsaturated V-vertices left outside the check part of its
    structure.
    """

    is_minimum: bool
    witness: tuple[AlternatingPath, frozenset[int]] | None


def enumerate_augmenting_paths(
    g: BipartiteGraph,
    m: Matching,
    limit: int = DEFAULT_PATH_LIMIT,
) -> list[AlternatingPath]:
    """All simple augmenting paths starting at unsaturated U-vertices.

    Depth-first with per-path visited sets; results are deduplicated and
    returned in lexicographic vertex-sequence order.  More than ``limit``
    paths raises ``PathExplosion``.
    """
    _require_same_graph(g, m)
    if limit <= 0:
        raise PathExplosion("limit must be positive")
    u_side, _ = procedure_sides(g)
    found: list[tuple[int, ...]] = []

    def walk(path: list[int], on_path: set[int]) -> None:
        x = path[-1]
        for y in sorted(g.neighbors(x)):
            if y in on_path or (x, y) in m:
                continue
            if not m.saturates(y):
                found.append(tuple(path) + (y,))
                if len(found) > limit:
                    raise PathExplosion(
                        f"more than {limit} augmenting paths")
                continue
            z = m.partner(y)
            if z in on_path:
                continue
            path.extend((y, z))
            on_path.update((y, z))
            walk(path, on_path)
            del path[-2:]
            on_path.difference_update((y, z))

    for u in m.unsaturated(u_side):
        walk([u], {u})
    return [AlternatingPath(vs, m) for vs in sorted(set(found))]


def path_structure(
    g: BipartiteGraph,
    m: Matching,
    p: AlternatingPath,
    limit: int = DEFAULT_PATH_LIMIT,
) -> PathStructure:
    """Build the structure graph of ``p``: the union of every augmenting
    path sharing at least one vertex with it (including ``p`` itself)."""
    _require_same_graph(g, m)
    if not p.augmenting or p.matching != m:
        raise NotAugmenting("base path is not augmenting for this matching")
    return _structure_from_paths(g, m, p, enumerate_augmenting_paths(g, m, limit))


def _structure_from_paths(
    g: BipartiteGraph,
    m: Matching,
    p: AlternatingPath,
    all_paths: Sequence[AlternatingPath],
) -> PathStructure:
    p_vertices = set(p.vertices)
    family = [q for q in all_paths if p_vertices & set(q.vertices)]
    if p not in family:
        raise NotAugmenting("base path is not a path of this matching")
    vertices: set[int] = set()
    edges: set[Edge] = set()
    for q in family:
        vertices.update(q.vertices)
        edges.update(q.edges)
    sub = subgraph_from_edges(g, vertices, edges)
    hat_v = _hat_cut_vertex(p, family)
    check_set = _check_vertices(g, m, p, vertices)
    check_u = _check_cut_vertex(m, p, vertices, check_set)
    return PathStructure(p, tuple(family), sub, hat_v, check_u, check_set)


def meet_join(p: AlternatingPath,
              q: AlternatingPath) -> tuple[int | None, int | None]:
    """First and last common vertex of two paths, under p's order.

    Returns ``(join, meet)``; both are ``None`` when the paths are
    vertex-disjoint.  The operations are not symmetric in general: the
    two induced orders can disagree on the intersection (though never as
    exact reverses), so the first argument fixes the order used.
    """
    if p.matching != q.matching:
        raise NotAugmenting("paths alternate against different matchings")
    common = set(p.vertices) & set(q.vertices)
    if not common:
        return (None, None)
    rank = {v: i for i, v in enumerate(p.vertices)}
    return (min(common, key=rank.__getitem__),
            max(common, key=rank.__getitem__))


def _representatives(p: AlternatingPath,
                     family: Sequence[AlternatingPath],
                     ) -> list[AlternatingPath]:
    """Family paths sharing p's final (unsaturated V) endpoint."""
    end = p.vertices[-1]
    return [q for q in family if q.vertices[-1] == end]


def _hat_cut_vertex(p: AlternatingPath,
                    family: Sequence[AlternatingPath]) -> int | None:
    """v̂: the highest first-intersection with p over family paths that
    run from a different unsaturated root to p's endpoint.

    ``None`` when every such path starts at p's own root.
    """
    root = p.vertices[0]
    others = [q for q in _representatives(p, family)
              if q.vertices[0] != root]
    if not others:
        return None
    rank = {v: i for i, v in enumerate(p.vertices)}
    joins = [meet_join(p, q)[0] for q in others]
    return max(joins, key=rank.__getitem__)


def _check_vertices(g: BipartiteGraph, m: Matching, p: AlternatingPath,
                    structure_vertices: set[int]) -> frozenset[int]:
    """The surviving region: structure vertices still reachable by
    alternating paths from unsaturated U-vertices after augmenting p."""
    augmented = Matching(g, m.edges ^ p.edges)
    return frozenset(structure_vertices & z_set(g, augmented).vertices)


def _check_cut_vertex(m: Matching, p: AlternatingPath,
                      structure_vertices: set[int],
                      check_set: frozenset[int]) -> int | None:
    """ǔ: the matched U-vertex just outside the surviving region whose
    partner v̌ lies inside it, taken as low as possible along p."""
    rank = {v: i for i, v in enumerate(p.vertices)}
    candidates = []
    for x, y in sorted(m.edges):
        for inside, outside in ((x, y), (y, x)):
            if (inside in check_set and outside in structure_vertices
                    and outside not in check_set):
                candidates.append((rank.get(inside, len(rank)), inside,
                                   outside))
    if not candidates:
        return None
    return min(candidates)[2]


def hat_subgraph(ps: PathStructure) -> BipartiteGraph:
    """Ĝ: the structure with everything up to v̂ removed.

    The prefixes cut away run along the paths into p's endpoint that pass
    through v̂.  With no path from a second root the structure is returned
    unchanged.
    """
    if ps.hat_cut_vertex is None:
        return ps.subgraph
    bound = ps.hat_cut_vertex
    selected: set[int] = set()
    for q in _representatives(ps.base_path, ps.family):
        if bound in q.vertices:
            cut = q.vertices.index(bound)
            selected.update(q.vertices[:cut + 1])
    vertices = set(ps.subgraph.vertices) - selected
    edges = {(u, v) for u, v in ps.subgraph.edges
             if u in vertices and v in vertices}
    return subgraph_from_edges(ps.subgraph, vertices, edges)


def check_subgraph(ps: PathStructure) -> BipartiteGraph:
    """Ǧ: the induced part of the structure that stays reachable by
    alternating paths once the base path has been augmented.

    Everything outside it is consumed by the augmentation; counting the
    unsaturated V-vertices left outside drives the classification.
    """
    vertices = set(ps.check_vertices)
    edges = {(u, v) for u, v in ps.subgraph.edges
             if u in vertices and v in vertices}
    return subgraph_from_edges(ps.subgraph, vertices, edges)


def classify_matching(
    g: BipartiteGraph,
    m: Matching,
    limit: int = DEFAULT_PATH_LIMIT,
) -> ClassificationVerdict:
    """Decide whether Kőnig's procedure on the maximal matching ``m``
    yields a minimum vertex cover, without computing cover sizes.

    The matching fails exactly when some augmenting path's structure,
    minus its check part, keeps two or more unsaturated V-vertices.
    """
    if not is_maximal(g, m):
        raise NotMaximal("classification applies to maximal matchings only")
    _, v_side = procedure_sides(g)
    paths = enumerate_augmenting_paths(g, m, limit)
    for p in paths:
        ps = _structure_from_paths(g, m, p, paths)
        outside = set(ps.subgraph.vertices) - ps.check_vertices
        unsat = frozenset(v for v in outside & v_side
                          if not m.saturates(v))
        if len(unsat) >= 2:
            return ClassificationVerdict(False, (p, unsat))
    return ClassificationVerdict(True, None)


def cover_delta_under_augment(
    g: BipartiteGraph,
    m: Matching,
    p: AlternatingPath,
) -> int:
    """|K(m)| − |K(m △ p)| for an augmenting path ``p``."""
    _require_same_graph(g, m)
    if not p.augmenting or p.matching != m:
        raise NotAugmenting("path is not augmenting for this matching")
    before = konig_cover(g, m)
    after = konig_cover(g, Matching(g, m.edges ^ p.edges))
    return len(before.vertices) - len(after.vertices)
