import numpy as np
import pytest

from cliqueperc import Graph

# Golden graph A: 8 nodes / 17 edges, the edge union of four 4-cliques that
# form two communities ({1,3,4,6,8,9} and {4,6,7,10}, overlapping on {4,6}).
TWO_COMMUNITY_CLIQUES = [(1, 3, 4, 6), (3, 6, 8, 9), (4, 6, 7, 10), (1, 3, 6, 9)]

# Golden graph B: 10 nodes / 27 edges. The first seven 4-cliques chain into
# one community covering {1..9}; {4,6,7} is not itself inside any of them but
# all three of its edges are. Streaming {4,6,7,10} last makes the relaxed
# algorithm merge everything into {1..10}, while the exact result is
# {1..9} plus {4,6,7,10}.
FALSE_MERGE_CLIQUES = [
    (1, 3, 4, 6), (1, 3, 6, 9), (3, 6, 8, 9), (6, 7, 8, 9),
    (5, 7, 8, 9), (2, 5, 7, 8), (2, 4, 5, 7), (4, 6, 7, 10),
]


def clique_union_edges(cliques):
    return sorted({tuple(sorted((a, b)))
                   for c in cliques
                   for i, a in enumerate(c) for b in c[i + 1:]})


def clique_union_graph(cliques) -> Graph:
    return Graph.from_edges(clique_union_edges(cliques))


def er_graph(n: int, p: float, seed: int) -> Graph:
    rng = np.random.default_rng(seed)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    keep = rng.random(len(pairs)) < p
    edges = [e for e, k in zip(pairs, keep) if k]
    return Graph.from_edges(edges)


def to_internal(g: Graph, cliques):
    """Map external-id cliques to canonical internal keys."""
    return [tuple(sorted(g.label_map[x] for x in c)) for c in cliques]


@pytest.fixture
def two_community_graph() -> Graph:
    return clique_union_graph(TWO_COMMUNITY_CLIQUES)


@pytest.fixture
def false_merge_graph() -> Graph:
    return clique_union_graph(FALSE_MERGE_CLIQUES)
