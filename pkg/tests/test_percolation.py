from itertools import combinations
from math import comb

import pytest

from cliqueperc import (MemoryBudgetError, brute_force_cpm, build_dag,
                        degeneracy_ordering, extract, iter_kcliques, run_cpm,
                        run_cpmz)

from conftest import (FALSE_MERGE_CLIQUES, TWO_COMMUNITY_CLIQUES, er_graph,
                      to_internal)


def dag_of(g):
    return build_dag(g, degeneracy_ordering(g))


def cover_sets(cover):
    return set(cover.as_sets())


class TestExact:
    def test_single_clique(self):
        res = run_cpm([(0, 1, 2, 3)], 4)
        assert res.stats.n_k == 1
        assert set(res.membership) == set(combinations((0, 1, 2, 3), 3))
        roots = {res.uf.find(p) for p in res.membership.values()}
        assert len(roots) == 1
        assert extract(res).communities == ((0, 1, 2, 3),)

    def test_two_community_graph(self, two_community_graph):
        g = two_community_graph
        res = run_cpm(iter_kcliques(dag_of(g), 4), 4)
        assert extract(res, g).communities == ((1, 3, 4, 6, 8, 9), (4, 6, 7, 10))

    def test_false_merge_graph_stays_exact(self, false_merge_graph):
        g = false_merge_graph
        res = run_cpm(iter_kcliques(dag_of(g), 4), 4)
        assert extract(res, g).communities == (tuple(range(1, 10)), (4, 6, 7, 10))

    def test_duplicates_in_stream_are_idempotent(self, two_community_graph):
        g = two_community_graph
        once = list(iter_kcliques(dag_of(g), 4))
        r1 = run_cpm(iter(once), 4)
        r2 = run_cpm(iter(once + once[:2]), 4)
        assert extract(r1, g) == extract(r2, g)

    def test_k2_gives_connected_components(self):
        res = run_cpm([(0, 1), (1, 2), (5, 6)], 2)
        assert extract(res).communities == ((0, 1, 2), (5, 6))

    def test_k_too_small(self):
        with pytest.raises(ValueError):
            run_cpm([], 1)

    def test_stream_validation(self):
        with pytest.raises(ValueError):
            run_cpm([(1, 2, 3)], 4)
        with pytest.raises(ValueError):
            run_cpm([(3, 2, 1, 4)], 4)

    def test_operation_count_law(self, two_community_graph):
        g = two_community_graph
        res = run_cpm(iter_kcliques(dag_of(g), 4), 4)
        assert res.stats.finds + res.stats.makesets == 4 * res.stats.n_k

    def test_membership_keys_are_covered_subcliques(self):
        g = er_graph(20, 0.35, 3)
        k = 4
        res = run_cpm(iter_kcliques(dag_of(g), k), k)
        adj = [set(map(int, g.neighbors(u))) for u in range(g.n)]
        kcl = [c for c in combinations(range(g.n), k)
               if all(b in adj[a] for a, b in combinations(c, 2))]
        expected = {sub for c in kcl for sub in combinations(c, k - 1)}
        assert set(res.membership) == expected

    def test_budget_abort(self, two_community_graph):
        g = two_community_graph
        with pytest.raises(MemoryBudgetError):
            run_cpm(iter_kcliques(dag_of(g), 4), 4, key_budget_bytes=24)


class TestRelaxed:
    def test_single_clique_k4_z2(self):
        res = run_cpmz([(0, 1, 2, 3)], 4, 2)
        root = res.uf.find(0)
        assert set(res.membership) == set(combinations((0, 1, 2, 3), 2))
        for nodes in res.membership.values():
            assert {res.uf.find(p) for p in nodes} == {root}
        assert extract(res).communities == ((0, 1, 2, 3),)

    def test_false_merge_when_trigger_arrives_last(self, false_merge_graph):
        g = false_merge_graph
        stream = to_internal(g, FALSE_MERGE_CLIQUES)
        res = run_cpmz(stream, 4, 2)
        assert extract(res, g).communities == (tuple(range(1, 11)),)

    def test_matches_exact_on_two_community_graph(self, two_community_graph):
        g = two_community_graph
        stream = to_internal(g, TWO_COMMUNITY_CLIQUES)
        res = run_cpmz(stream, 4, 2)
        assert extract(res, g).communities == ((1, 3, 4, 6, 8, 9), (4, 6, 7, 10))

    def test_final_state_of_caption_order_run(self, two_community_graph):
        # With make_set handing out 0,1,2 for the three cliques that found
        # nothing to merge, the fourth clique unions {0,1} (0 survives) and
        # the per-edge node sets land in a fully known final state.
        g = two_community_graph
        res = run_cpmz(to_internal(g, TWO_COMMUNITY_CLIQUES), 4, 2)
        a, b, c = 0, 1, 2
        expected_ext = {
            (1, 3): {a}, (1, 4): {a}, (1, 6): {a}, (1, 9): {a},
            (3, 4): {a}, (3, 6): {a, b}, (3, 8): {b}, (3, 9): {a, b},
            (4, 6): {a, c}, (4, 7): {c}, (4, 10): {c},
            (6, 7): {c}, (6, 8): {b}, (6, 9): {a, b}, (6, 10): {c},
            (7, 10): {c}, (8, 9): {b},
        }
        expected = {tuple(sorted(g.label_map[x] for x in key)): nodes
                    for key, nodes in expected_ext.items()}
        assert res.membership == expected
        assert res.uf.parent == [a, a, c]  # second set absorbed into the first
        assert res.uf.count_roots == 2

    def test_first_clique_takes_makeset_path(self):
        res = run_cpmz([(0, 1, 2, 3)], 4, 2)
        assert res.stats.makesets == 1
        assert res.stats.unions == 0

    def test_duplicates_in_stream_are_idempotent(self, false_merge_graph):
        g = false_merge_graph
        stream = to_internal(g, FALSE_MERGE_CLIQUES)
        base = extract(run_cpmz(stream, 4, 2), g)
        doubled = extract(run_cpmz(stream + stream[:3], 4, 2), g)
        assert doubled == base

    def test_adjacent_clique_joins_through_shared_subclique(self):
        res = run_cpmz([(0, 1, 2, 3), (0, 1, 2, 4)], 4, 2)
        assert res.stats.makesets == 1  # second clique found a non-empty merge set
        assert extract(res).communities == ((0, 1, 2, 3, 4),)

    def test_strict_and_default_modes_agree(self, false_merge_graph):
        g = false_merge_graph
        stream = to_internal(g, FALSE_MERGE_CLIQUES)
        lax = run_cpmz(stream, 4, 2)
        strict = run_cpmz(stream, 4, 2, strict_reduce=True)
        assert extract(lax, g) == extract(strict, g)
        assert strict.stats.line8_execs == lax.stats.n_k * 4 * comb(3, 2)
        assert lax.stats.line8_execs <= strict.stats.line8_execs

    @pytest.mark.parametrize("k,z", [(3, 2), (4, 1), (4, 3), (5, 4), (2, 2)])
    def test_z_range_rejected(self, k, z):
        with pytest.raises(ValueError):
            run_cpmz([], k, z)

    def test_budget_abort(self, false_merge_graph):
        g = false_merge_graph
        stream = to_internal(g, FALSE_MERGE_CLIQUES)
        with pytest.raises(MemoryBudgetError):
            run_cpmz(stream, 4, 2, key_budget_bytes=40)

    def test_setz_members_are_distinct_roots_at_end_reduction(self):
        # after any run, entries are non-empty and re-reducing must not grow
        g = er_graph(18, 0.4, 8)
        res = run_cpmz(iter_kcliques(dag_of(g), 4), 4, 2)
        assert res.membership
        for nodes in res.membership.values():
            assert nodes
            assert len({res.uf.find(p) for p in nodes}) <= len(nodes)


def sweep_graphs():
    cases = []
    for seed in range(10):
        for p in (0.2, 0.3, 0.4):
            cases.append(er_graph(25, p, 1000 + seed))
    return cases


class TestAgainstOracle:
    @pytest.mark.parametrize("k", [3, 4, 5])
    def test_exact_matches_brute_force(self, k):
        for g in sweep_graphs():
            res = run_cpm(iter_kcliques(dag_of(g), k), k)
            assert cover_sets(extract(res, g)) == cover_sets(brute_force_cpm(g, k))

    def test_node_covered_iff_in_some_kclique(self):
        k = 4
        for g in sweep_graphs()[:12]:
            res = run_cpm(iter_kcliques(dag_of(g), k), k)
            covered = extract(res, g).node_set()
            in_clique = {int(g.ext_ids[v]) for c in iter_kcliques(dag_of(g), k) for v in c}
            assert covered == in_clique


def assert_coarsening(exact, relaxed):
    """Relaxed communities must be agglomerations of exact ones: never more
    of them, never a split exact community, and every relaxed community the
    union of the exact communities inside it. Exact covers can contain
    nested node sets (a small community whose nodes all reappear in a big
    one), so containment in several relaxed communities is only legal when
    they nest; the minimal container must be unique."""
    assert len(relaxed) <= len(exact)
    for c in exact:
        containers = [r for r in relaxed if c <= r]
        assert containers, f"exact community {sorted(c)} was split"
        minimal = [r for r in containers
                   if not any(q < r for q in containers)]
        assert len(minimal) == 1, f"ambiguous home for {sorted(c)}"
    for r in relaxed:
        parts = [c for c in exact if c <= r]
        assert parts and frozenset().union(*parts) == r


class TestCoarsening:
    @pytest.mark.parametrize("k,z", [(4, 2), (5, 2), (5, 3), (6, 2), (6, 3), (6, 4)])
    def test_relaxed_communities_are_unions_of_exact_ones(self, k, z):
        for g in sweep_graphs()[:15]:
            d = dag_of(g)
            exact = extract(run_cpm(iter_kcliques(d, k), k), g).as_sets()
            relaxed = extract(run_cpmz(iter_kcliques(d, k), k, z), g).as_sets()
            assert_coarsening(exact, relaxed)
