from pathlib import Path

import pytest

from konigmatch import Matching, build_graph

FIXTURES = Path(__file__).parent / "fixtures"


def labeled(g, *labels):
    """Vertex ids for the given labels, as a frozenset."""
    return frozenset(g.vertex_by_label(lab) for lab in labels)


def matching_by_labels(g, pairs):
    return Matching(g, [(g.vertex_by_label(a), g.vertex_by_label(b))
                        for a, b in pairs])


@pytest.fixture
def p4():
    """The path 1-2-3-4 with odd labels on the left."""
    return build_graph(2, 2, [(0, 0), (1, 0), (1, 1)],
                       ["1", "3"], ["2", "4"])


@pytest.fixture
def fork():
    """Two pendant vertices a1, a2 meeting b1, which joins c1 and its
    three pendant neighbors d1, d2, d3."""
    return build_graph(3, 4,
                       [(0, 0), (1, 0), (2, 0), (2, 1), (2, 2), (2, 3)],
                       ["a1", "a2", "c1"], ["b1", "d1", "d2", "d3"])


@pytest.fixture
def c4():
    """The four-cycle."""
    return build_graph(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)])
