import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from augtree.core import ShortcutSet, Tree, binarize, path_tree, star_tree
from augtree.diameter import (
    dijkstra,
    ecc_from_source,
    graph_diameter,
    naive_all_pairs,
    naive_diameter,
    naive_eccentricity,
    path_diameter,
    path_order,
    tree_diameter,
)
from augtree.exceptions import NotAPathError
from augtree.farthest import FarthestStructure
from augtree.lowerbound import gen_lb, lb_vertex_classes
from augtree.schemas import LowerBoundParams
from tests.reference import nx_diameter, nx_distances
from tests.strategies import augmented_trees, trees


def _random_case(rng, n_max: int = 300, k_max: int = 10, path: bool = False, n_min: int = 2):
    n = int(rng.integers(n_min, n_max + 1))
    if path:
        t = path_tree(rng.integers(0, 20, size=n - 1).tolist())
    else:
        shape = rng.integers(0, 3)
        edges = []
        for i in range(1, n):
            if shape == 0:
                p = int(rng.integers(0, i))
            elif shape == 1:
                p = int(rng.integers(0, min(i, 3)))
            else:
                p = i - 1 if i % 2 else int(rng.integers(0, i))
            edges.append((p, i, int(rng.integers(0, 20))))
        t = Tree(n, edges)
    k = int(rng.integers(0, k_max + 1))
    pairs = set()
    for _ in range(k):
        u, v = rng.choice(n, size=2, replace=False).tolist()
        pairs.add((min(u, v), max(u, v)))
    S = ShortcutSet((u, v, int(rng.integers(0, 30))) for u, v in sorted(pairs))
    return t, S


class TestDijkstra:

    def test_sparse_labels(self):
        adj = {10: [(20, 3), (30, 9)], 20: [(30, 4)], 30: []}
        assert dijkstra(adj, 10) == {10: 0, 20: 3, 30: 7}

    def test_naive_helpers(self, unit_path):
        S = ShortcutSet([(0, 4, 1)])
        assert naive_eccentricity(unit_path, S, 0) == 2
        rows = naive_all_pairs(unit_path, S)
        assert rows[1][4] == 2
        assert naive_diameter(unit_path) == 4


class TestTreeDiameter:

    def test_path(self):
        assert tree_diameter(path_tree([1, 1, 1])) == (3, (0, 3))

    @given(trees(max_n=40))
    def test_matches_networkx(self, tree):
        d, (u, v) = tree_diameter(tree)
        assert d == nx_diameter(tree)
        assert nx_distances(tree)[u][v] == d

    def test_empty_shortcuts_fall_back(self):
        t = star_tree(4, cost=5)
        assert graph_diameter(t, ShortcutSet())[0] == 10
        assert graph_diameter(Tree(2, [(0, 1, 5)]))[0] == 5


class TestPathDiameter:

    def test_small_cases(self):
        assert path_diameter(path_tree([1, 1, 1])) == 3
        assert path_diameter(path_tree([1, 1, 1, 1]), ShortcutSet([(0, 4, 1)])) == 2

    def test_zero_cost_closing_shortcut(self):
        t = path_tree([3, 1, 2, 5])
        assert path_diameter(t, ShortcutSet([(0, 4, 0)])) == naive_diameter(t, ShortcutSet([(0, 4, 0)]))

    def test_relabelled_path(self):
        t = Tree(4, [(2, 0, 1), (0, 3, 2), (3, 1, 3)])
        assert path_order(t) == [1, 3, 0, 2]
        S = ShortcutSet([(1, 2, 1)])
        assert path_diameter(t, S) == naive_diameter(t, S)

    def test_rejects_non_path(self):
        with pytest.raises(NotAPathError):
            path_diameter(star_tree(3), ShortcutSet([(1, 2, 1)]))

    def test_random_paths(self, debug_checks):
        rng = np.random.default_rng(21)
        for _ in range(300):
            t, S = _random_case(rng, n_max=60, k_max=8, path=True)
            expected = naive_diameter(t, S)
            assert path_diameter(t, S) == expected
            assert graph_diameter(t, S)[0] == expected

    @pytest.mark.slow
    def test_many_long_paths(self):
        rng = np.random.default_rng(22)
        for i in range(500):
            t, S = _random_case(rng, n_max=300, k_max=10, path=True, n_min=250 if i % 10 == 0 else 2)
            expected = naive_diameter(t, S)
            assert path_diameter(t, S) == expected
            assert graph_diameter(t, S)[0] == expected


class TestGraphDiameter:

    def test_lower_bound_instance(self):
        params = LowerBoundParams(n_star=4)
        inst = gen_lb(params)
        cls = lb_vertex_classes(params)
        x1, x4, a, b = cls["x1"][0], cls["x4"][0], cls["a"][0], cls["b"][0]
        S = ShortcutSet.from_pairs([(x1, a), (a, b), (b, x4)], inst.oracle)
        assert graph_diameter(inst.tree, S)[0] == 9
        assert naive_diameter(inst.tree, S) == 9

    @settings(max_examples=200, deadline=None)
    @given(augmented_trees(max_n=40, max_k=6))
    def test_matches_networkx(self, case):
        tree, S = case
        d, (s, w) = graph_diameter(tree, S)
        assert d == nx_diameter(tree, S)
        assert naive_eccentricity(tree, S, s) == d
        assert naive_all_pairs(tree, S)[s][w] == d

    def test_random_instances(self):
        rng = np.random.default_rng(11)
        for _ in range(80):
            t, S = _random_case(rng, n_max=100)
            assert graph_diameter(t, S)[0] == naive_diameter(t, S)

    @pytest.mark.slow
    def test_many_random_instances(self):
        rng = np.random.default_rng(16)
        for i in range(1000):
            t, S = _random_case(rng, n_max=300, n_min=250 if i % 10 == 0 else 2)
            d, (s, w) = graph_diameter(t, S)
            dist = naive_all_pairs(t, S)
            assert d == max(max(row) for row in dist)
            assert dist[s][w] == d

    def test_threads_agree(self):
        rng = np.random.default_rng(12)
        for _ in range(10):
            t, S = _random_case(rng, n_max=120, k_max=6)
            assert graph_diameter(t, S, threads=3)[0] == graph_diameter(t, S, threads=1)[0]

    def test_reference_structures(self, reference_structures):
        rng = np.random.default_rng(13)
        for _ in range(20):
            t, S = _random_case(rng, n_max=60, k_max=5)
            assert graph_diameter(t, S)[0] == naive_diameter(t, S)


class TestEccFromSource:

    def test_path_end_without_shortcuts(self):
        fs = FarthestStructure(path_tree([2, 3, 4]))
        assert ecc_from_source(fs, ShortcutSet(), 0) == (9, 3)

    def test_zero_cost_shortcut_to_far_end(self):
        t = path_tree([2, 3, 4])
        fs = FarthestStructure(t)
        S = ShortcutSet([(0, 3, 0)])
        value, witness = ecc_from_source(fs, S, 0)
        assert value == naive_eccentricity(t, S, 0) == 4
        assert witness == 2

    def test_leaves_structure_untouched(self):
        rng = np.random.default_rng(14)
        t, S = _random_case(rng, n_max=80, k_max=5)
        b, owner = binarize(t)
        fs = FarthestStructure(b, owner=owner)
        before = fs.shrink()
        ecc_from_source(fs, S, 0)
        assert fs.shrink() == before
        assert fs.terminals() == []

    def test_random_sources(self):
        rng = np.random.default_rng(15)
        for _ in range(100):
            t, S = _random_case(rng, n_max=150)
            b, owner = binarize(t)
            fs = FarthestStructure(b, owner=owner)
            s = int(rng.integers(0, t.n))
            value, witness = ecc_from_source(fs, S, s)
            dist = naive_all_pairs(t, S)[s]
            assert value == max(dist)
            assert dist[witness] == value
