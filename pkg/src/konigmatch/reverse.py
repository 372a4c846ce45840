"""Recovering a matching from a minimum vertex cover.

The cover splits the graph into an *up* part (cover vertices on the V
side together with the uncovered U vertices), a *down* part (cover
vertices on the U side together with the uncovered V vertices), and the
cut edges with both endpoints in the cover.  A saturating matching is
found on the down part; on the up part a recursive procedure grows a
matching while keeping each visited root unsaturated.  Applying Kőnig's
procedure to the union reproduces the input cover; this is asserted and
a violation raises ``RoundTripFailed``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .errors import (
    NotMinimumCover,
    RoundTripFailed,
    SaturationImpossible,
)
from .graph import BipartiteGraph, Edge, induced_subgraph, procedure_sides
from .konig import VertexCover, is_minimum_cover, konig_cover
from .matching import Matching, maximum_matching


@dataclass(frozen=True)
class CoverSplit:
    """The up/down/cut decomposition induced by a minimum cover."""

    parent: BipartiteGraph
    up: BipartiteGraph
    down: BipartiteGraph
    cut_edges: frozenset[Edge]
    up_roots: frozenset[int]       # U \ C, the up part's non-cover side
    down_cover_side: frozenset[int]  # U ∩ C, must end up saturated


@dataclass(frozen=True)
class ReverseResult:
    """Output of the reverse procedure."""

    m_up: Matching
    m_down: Matching
    combined: Matching
    visit_order: tuple[int, ...]


def _cover_vertices(c: VertexCover | Iterable[int]) -> frozenset[int]:
    if isinstance(c, VertexCover):
        return c.vertices
    return frozenset(c)


def split_by_cover(g: BipartiteGraph,
                   c: VertexCover | Iterable[int]) -> CoverSplit:
    """Split ``g`` along a minimum cover.

    U here is the procedure side (smaller side per component), matching
    the convention ``konig_cover`` uses, so the round trip is consistent.
    """
    cset = _cover_vertices(c)
    if not is_minimum_cover(g, cset):
        raise NotMinimumCover("input set is not a minimum vertex cover")
    u_side, v_side = procedure_sides(g)
    up = induced_subgraph(g, (v_side & cset) | (u_side - cset))
    down = induced_subgraph(g, (u_side & cset) | (v_side - cset))
    cut = frozenset((u, v) for u, v in g.edges if u in cset and v in cset)
    return CoverSplit(g, up, down, cut,
                      up_roots=frozenset(u_side - cset),
                      down_cover_side=frozenset(u_side & cset))


def saturating_matching_down(split: CoverSplit,
                             c: VertexCover | Iterable[int]) -> Matching:
    """Matching on the down part saturating every cover vertex of U.

    Existence follows from Hall's condition when the cover is minimum;
    failure therefore signals a non-minimum input.
    """
    cset = _cover_vertices(c)
    m = maximum_matching(split.down)
    must_saturate = split.down_cover_side & cset
    missed = [v for v in must_saturate if not m.saturates(v)]
    if missed:
        raise SaturationImpossible(
            f"down part cannot saturate {sorted(missed)}; "
            "cover was not minimum")
    return m


def reverse_procedure_up(split: CoverSplit,
                         c: VertexCover | Iterable[int],
                         visit_order: Sequence[int] | None = None,
                         ) -> Matching:
    """Grow a matching on the up part, keeping each visited root unsaturated.

    Roots (the uncovered U vertices) are visited in ``visit_order``
    (default ascending id).  From a root ``u``, each unsaturated neighbor
    ``v`` is matched to one of its own unsaturated neighbors ``w`` other
    than the root, and the walk recurses from ``w``.  Saturation is
    re-checked immediately before every insertion.
    """
    up = split.up
    roots = split.up_roots
    if visit_order is None:
        order = sorted(roots)
    else:
        order = list(visit_order)
        if set(order) != set(roots):
            raise NotMinimumCover(
                "visit_order must be a permutation of the uncovered U side")
    partner: dict[int, int] = {}

    def extend(u: int, root: int) -> None:
        for v in sorted(up.neighbors(u)):
            if v in partner:
                continue
            for w in sorted(up.neighbors(v)):
                if v in partner:
                    break
                if w == root or w in partner:
                    continue
                partner[v] = w
                partner[w] = v
                extend(w, root)

    for root in order:
        if root not in partner:
            extend(root, root)
    edges = {(min(a, b), max(a, b)) for a, b in partner.items()}
    return Matching(up, {tuple(up.edge_key(a, b)) for a, b in edges})


def reverse_konig(g: BipartiteGraph,
                  c: VertexCover | Iterable[int],
                  visit_order: Sequence[int] | None = None) -> ReverseResult:
    """Recover a matching whose Kőnig cover is exactly ``c``.

    The round trip is verified before returning; a mismatch raises
    ``RoundTripFailed`` (a defect, never expected on valid input).
    """
    cset = _cover_vertices(c)
    split = split_by_cover(g, cset)
    m_down = saturating_matching_down(split, cset)
    m_up = reverse_procedure_up(split, cset, visit_order)
    combined = Matching(g, m_up.edges | m_down.edges)
    produced = konig_cover(g, combined)
    if produced.vertices != cset:
        raise RoundTripFailed(
            f"expected cover {sorted(cset)}, procedure gave "
            f"{sorted(produced.vertices)}")
    order = tuple(visit_order) if visit_order is not None \
        else tuple(sorted(split.up_roots))
    return ReverseResult(m_up, m_down, combined, order)
