import io

import pytest

from cliqueperc import (Graph, GraphParseError, build_dag, degeneracy_ordering,
                        load_edgelist, write_edgelist)

from conftest import TWO_COMMUNITY_CLIQUES, clique_union_edges, er_graph


def as_stream(text: str):
    return io.StringIO(text)


def independent_core_value(g: Graph) -> int:
    """Smallest c such that repeatedly deleting vertices of degree <= c
    empties the graph (order-free restatement, used as the oracle)."""
    for c in range(g.n + 1):
        alive = set(range(g.n))
        changed = True
        while changed:
            changed = False
            for u in list(alive):
                if sum(1 for v in g.neighbors(u) if int(v) in alive) <= c:
                    alive.discard(u)
                    changed = True
        if not alive:
            return c
    raise AssertionError("unreachable")


class TestLoad:
    def test_path_of_length_two(self):
        g = load_edgelist(as_stream("1 2\n2 3\n"))
        assert (g.n, g.m) == (3, 2)

    def test_self_loop_and_duplicate_removed(self):
        g = load_edgelist(as_stream("1 1\n1 2\n2 1\n"))
        assert (g.n, g.m) == (2, 1)

    def test_golden_union_graph(self):
        lines = "".join(f"{a} {b}\n" for a, b in clique_union_edges(TWO_COMMUNITY_CLIQUES))
        assert lines.count("\n") == 17
        g = load_edgelist(as_stream(lines))
        assert (g.n, g.m) == (8, 17)

    def test_comments_and_blank_lines(self):
        g = load_edgelist(as_stream("# header\n\n% other\n5 7\n"))
        assert (g.n, g.m) == (2, 1)

    def test_empty_input(self):
        g = load_edgelist(as_stream(""))
        assert (g.n, g.m) == (0, 0)

    def test_binary_stream(self):
        g = load_edgelist(io.BytesIO(b"10 20\n20 30\n"))
        assert (g.n, g.m) == (3, 2)

    @pytest.mark.parametrize("text,line", [
        ("1 2\n1 x\n", 2),
        ("1 2 3\n", 1),
        ("1\n", 1),
        ("1 2\n\n-1 4\n", 3),
    ])
    def test_malformed(self, text, line):
        with pytest.raises(GraphParseError) as e:
            load_edgelist(as_stream(text))
        assert e.value.line_no == line

    def test_first_appearance_remap(self):
        g = load_edgelist(as_stream("42 7\n7 1000000000000\n"))
        assert list(g.ext_ids) == [42, 7, 1000000000000]
        assert g.label_map == {42: 0, 7: 1, 1000000000000: 2}


class TestAdjacency:
    @pytest.mark.parametrize("seed", range(5))
    def test_invariants_random(self, seed):
        g = er_graph(20, 0.3, seed)
        assert int(g.indptr[-1]) == 2 * g.m
        for u in range(g.n):
            nbrs = g.neighbors(u)
            assert all(nbrs[i] < nbrs[i + 1] for i in range(len(nbrs) - 1))
            assert u not in set(map(int, nbrs))
            for v in map(int, nbrs):
                assert g.has_edge(v, u)

    def test_roundtrip_preserves_graph(self):
        # The id remap is pinned to first appearance and the writer to sorted
        # internal order, so reloading can relabel; the graph itself, read
        # through the external labels, must survive exactly.
        def ext_edges(h):
            return {tuple(sorted((int(h.ext_ids[a]), int(h.ext_ids[b]))))
                    for a, b in h.edges()}

        for seed in range(4):
            g = er_graph(15, 0.3, seed)
            buf = io.StringIO()
            write_edgelist(g, buf)
            g1 = load_edgelist(as_stream(buf.getvalue()))
            assert (g1.n, g1.m) == (g.n, g.m)
            assert ext_edges(g1) == ext_edges(g)
            assert sorted(g1.label_map.values()) == list(range(g1.n))

    def test_writer_is_deterministic(self):
        g = er_graph(15, 0.3, 1)
        a, b = io.StringIO(), io.StringIO()
        write_edgelist(g, a)
        write_edgelist(g, b)
        assert a.getvalue() == b.getvalue()

    def test_path_object_io(self, tmp_path):
        g = er_graph(10, 0.4, 2)
        p = tmp_path / "g.txt"  # pathlib.Path, not str
        write_edgelist(g, p)
        g1 = load_edgelist(p)
        assert (g1.n, g1.m) == (g.n, g.m)


class TestDegeneracy:
    def test_triangle(self):
        g = Graph.from_edges([(0, 1), (1, 2), (0, 2)])
        assert degeneracy_ordering(g).core == 2

    def test_star(self):
        g = Graph.from_edges([(0, i) for i in range(1, 6)])
        assert degeneracy_ordering(g).core == 1

    def test_golden_graph_core(self, two_community_graph):
        o = degeneracy_ordering(two_community_graph)
        assert o.core == 3
        assert o.core == independent_core_value(two_community_graph)

    @pytest.mark.parametrize("seed", range(6))
    def test_core_matches_oracle(self, seed):
        g = er_graph(18, 0.35, seed)
        o = degeneracy_ordering(g)
        assert o.core == independent_core_value(g)
        maxdeg = max((g.degree(u) for u in range(g.n)), default=0)
        assert o.core <= maxdeg

    def test_rank_is_inverse_of_order(self):
        g = er_graph(20, 0.3, 3)
        o = degeneracy_ordering(g)
        for i in range(g.n):
            assert o.rank[o.order[i]] == i

    def test_peeling_bound(self):
        g = er_graph(20, 0.4, 1)
        o = degeneracy_ordering(g)
        removed = set()
        for u in map(int, o.order):
            remaining = sum(1 for v in g.neighbors(u) if int(v) not in removed)
            assert remaining <= o.core
            removed.add(u)

    def test_deterministic_tiebreak(self):
        # 4-cycle: all degrees equal, vertex 0 must be peeled first
        g = Graph.from_edges([(0, 1), (1, 2), (2, 3), (3, 0)])
        o = degeneracy_ordering(g)
        assert int(o.order[0]) == 0


class TestDag:
    def test_triangle_out_degrees(self):
        g = Graph.from_edges([(0, 1), (1, 2), (0, 2)])
        o = degeneracy_ordering(g)
        d = build_dag(g, o)
        degs = sorted(d.out_degree(u) for u in range(3))
        assert degs == [0, 1, 2]

    def test_golden_total_out_edges(self, two_community_graph):
        d = build_dag(two_community_graph, degeneracy_ordering(two_community_graph))
        assert d.total_out_edges == 17

    @pytest.mark.parametrize("seed", range(5))
    def test_out_degree_bounded_by_core(self, seed):
        g = er_graph(25, 0.3, seed)
        o = degeneracy_ordering(g)
        d = build_dag(g, o)
        assert d.total_out_edges == g.m
        for u in range(g.n):
            assert d.out_degree(u) <= o.core

    def test_acyclic_and_sorted_by_rank(self):
        g = er_graph(25, 0.3, 9)
        d = build_dag(g, degeneracy_ordering(g))
        for r in range(d.n):
            targets = d.indices[d.indptr[r]:d.indptr[r + 1]]
            assert all(t > r for t in targets)
            assert all(targets[i] < targets[i + 1] for i in range(len(targets) - 1))

    def test_out_neighbors_in_id_space(self):
        g = er_graph(15, 0.4, 2)
        d = build_dag(g, degeneracy_ordering(g))
        for u in range(g.n):
            outs = list(map(int, d.out_neighbors(u)))
            assert all(d.rank[v] > d.rank[u] for v in outs)
            assert set(outs) <= set(map(int, g.neighbors(u)))

    def test_mismatched_ordering_rejected(self):
        g1 = er_graph(10, 0.4, 0)
        g2 = er_graph(12, 0.4, 0)
        with pytest.raises(ValueError):
            build_dag(g2, degeneracy_ordering(g1))
