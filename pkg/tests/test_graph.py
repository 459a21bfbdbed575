import math
import random

import pytest
from hypothesis import given, strategies as st

from dirhopset.graph import (EdgeSet, Graph, GraphFormatError, augment,
                             induce, load_graph, merge_min, save_graph,
                             transpose_view)

from oracles import all_pairs, dijkstra, random_edges


def write(tmp_path, text, name="g.txt"):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


class TestLoadGraph:
    def test_basic(self, tmp_path):
        g = load_graph(write(tmp_path, "3 2\n0 1 1.0\n1 2 2.0\n"))
        assert g.n == 3 and g.m == 2
        assert g.edge_weight(1, 2) == 2.0

    def test_default_weight_and_comments(self, tmp_path):
        g = load_graph(write(tmp_path, "# hdr\n2 1\n# edge\n0 1\n"))
        assert g.edge_weight(0, 1) == 1.0

    def test_normalization(self, tmp_path):
        g = load_graph(write(tmp_path, "3 2\n0 1 0.5\n1 2 2.0\n"))
        assert g.scale == 2.0
        assert g.edge_weight(0, 1) == 1.0
        assert g.edge_weight(1, 2) == 4.0

    def test_negative_weight(self, tmp_path):
        with pytest.raises(GraphFormatError):
            load_graph(write(tmp_path, "2 1\n0 1 -3\n"))

    def test_bad_header(self, tmp_path):
        with pytest.raises(GraphFormatError):
            load_graph(write(tmp_path, "2\n"))

    def test_edge_count_mismatch(self, tmp_path):
        with pytest.raises(GraphFormatError):
            load_graph(write(tmp_path, "2 2\n0 1 1\n"))

    def test_out_of_range_vertex(self, tmp_path):
        with pytest.raises(GraphFormatError):
            load_graph(write(tmp_path, "2 1\n0 5 1\n"))

    def test_save_roundtrip(self, tmp_path):
        g = Graph(4, [(0, 1, 1.0), (1, 2, 3.5), (2, 3, 1.0)])
        path = str(tmp_path / "out.txt")
        save_graph(g, path)
        g2 = load_graph(path)
        assert sorted(g.iter_edges()) == sorted(g2.iter_edges())


class TestGraph:
    def test_parallel_edges_collapse(self):
        g = Graph(2, [(0, 1, 5.0), (0, 1, 2.0)])
        assert g.m == 1
        assert g.edge_weight(0, 1) == 2.0

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Graph(2, [(0, 3, 1.0)])

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            Graph(2, [(0, 1, -1.0)])

    def test_weight_stats(self):
        g = Graph(3, [(0, 1, 0.0), (1, 2, 4.0), (0, 2, 2.0)])
        assert g.max_weight == 4.0
        assert g.min_positive_weight == 2.0


class TestTranspose:
    def test_edge_flipped(self):
        t = transpose_view(Graph(2, [(0, 1, 1.0)]))
        assert t.edge_weight(1, 0) == 1.0
        assert t.edge_weight(0, 1) is None

    def test_involution(self):
        g = Graph(4, [(0, 1, 1.0), (2, 3, 2.0), (3, 0, 1.0)])
        tt = transpose_view(transpose_view(g))
        assert tt.fwd == g.fwd and tt.rev == g.rev

    def test_distances_reverse(self):
        rng = random.Random(7)
        edges = random_edges(30, 90, 5, rng)
        g = Graph(30, edges)
        t = transpose_view(g)
        rev_edges = [(v, u, w) for u, v, w in edges]
        for s in range(30):
            want = dijkstra(30, rev_edges, s)
            got = dijkstra(30, list(t.iter_edges()), s)
            assert got == want


class TestInduce:
    def test_path_gap(self):
        sub = induce(Graph(3, [(0, 1, 1.0), (1, 2, 1.0)]), {0, 2})
        assert sub.graph.m == 0
        assert sub.global_ids == [0, 2]

    def test_full_subset_identity(self):
        g = Graph(4, [(0, 1, 1.0), (2, 3, 2.0)])
        sub = induce(g, range(4))
        assert sorted(sub.graph.iter_edges()) == sorted(g.iter_edges())
        assert sub.is_full

    def test_roundtrip_ids(self):
        g = Graph(10, [(1, 5, 1.0)])
        sub = induce(g, [5, 1, 8])
        for local in range(len(sub)):
            assert sub.to_local(sub.to_global(local)) == local

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            induce(Graph(3, []), [0, 7])

    def test_against_filter_oracle(self):
        rng = random.Random(11)
        edges = random_edges(40, 160, 4, rng)
        g = Graph(40, edges)
        subset = sorted(rng.sample(range(40), 17))
        sub = induce(g, subset)
        want = sorted((u, v, w) for u, v, w in edges
                      if u in set(subset) and v in set(subset))
        got = sorted((sub.to_global(u), sub.to_global(v), w)
                     for u, v, w in sub.graph.iter_edges())
        assert got == want

    def test_empty_subset(self):
        sub = induce(Graph(3, [(0, 1, 1.0)]), [])
        assert sub.graph.n == 0 and sub.graph.m == 0


edge_sets = st.dictionaries(
    st.tuples(st.integers(0, 5), st.integers(0, 5)),
    st.floats(0, 100, allow_nan=False),
    max_size=12,
).map(EdgeSet)


class TestMergeMin:
    def test_keeps_minimum(self):
        a = EdgeSet({(0, 1): 3.0})
        b = EdgeSet({(0, 1): 2.0})
        assert merge_min(a, b).entries == {(0, 1): 2.0}

    @given(edge_sets)
    def test_identity(self, x):
        assert merge_min(x, EdgeSet()) == x
        assert merge_min(EdgeSet(), x) == x

    @given(edge_sets)
    def test_idempotent(self, x):
        assert merge_min(x, x) == x

    @given(edge_sets, edge_sets)
    def test_commutative(self, a, b):
        assert merge_min(a, b) == merge_min(b, a)

    @given(edge_sets, edge_sets, edge_sets)
    def test_associative(self, a, b, c):
        assert merge_min(merge_min(a, b), c) == merge_min(a, merge_min(b, c))

    @given(edge_sets, edge_sets)
    def test_matches_naive(self, a, b):
        want = dict(a.entries)
        for k, w in b.entries.items():
            want[k] = min(w, want.get(k, math.inf))
        assert merge_min(a, b).entries == want


class TestAugment:
    def test_shortcut_used(self):
        g = Graph(3, [(0, 1, 1.0), (1, 2, 1.0)])
        aug = augment(g, EdgeSet({(0, 2): 2.0}))
        assert aug.edge_weight(0, 2) == 2.0
        assert dijkstra(3, list(aug.iter_edges()), 0)[2] == 2.0

    def test_empty_hopset_identity(self):
        g = Graph(3, [(0, 1, 1.0), (1, 2, 1.0)])
        aug = augment(g, EdgeSet())
        assert sorted(aug.iter_edges()) == sorted(g.iter_edges())

    def test_original_unmodified(self):
        g = Graph(2, [(0, 1, 5.0)])
        augment(g, EdgeSet({(0, 1): 1.0}))
        assert g.edge_weight(0, 1) == 5.0

    def test_out_of_range_endpoint(self):
        with pytest.raises(ValueError):
            augment(Graph(2, []), EdgeSet({(0, 9): 1.0}))

    def test_valid_hopset_preserves_distances(self):
        # any hopset whose weights dominate true distances cannot change
        # any shortest path
        rng = random.Random(3)
        edges = random_edges(25, 80, 6, rng)
        g = Graph(25, edges)
        dist = all_pairs(25, edges)
        h = EdgeSet()
        for _ in range(40):
            u, v = rng.randrange(25), rng.randrange(25)
            if u != v and dist[u][v] < math.inf:
                h.add(u, v, dist[u][v] + rng.choice([0.0, 1.0, 3.0]))
        aug_dist = all_pairs(25, list(augment(g, h).iter_edges()))
        assert aug_dist == dist
