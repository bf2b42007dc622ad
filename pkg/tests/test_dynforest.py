import numpy as np
import pytest
from augtree.core import Tree, path_tree
from augtree.dynforest import (
    EccForest,
    LinkCutForest,
    MarkedAncestorStructure,
    NaiveEccForest,
    NaiveForest,
    NaiveMarkedAncestor,
)
from augtree.exceptions import ForestError


def _random_tree(n: int, seed: int) -> Tree:
    rng = np.random.default_rng(seed)
    return Tree(n, [(int(rng.integers(0, i)), i, int(rng.integers(0, 10))) for i in range(1, n)])


class TestLinkCutForest:

    def test_link_export_cut(self):
        f = LinkCutForest()
        f.add_vertex(1)
        f.add_vertex(2, payload="x")
        f.link(1, 2)
        assert f.export() == [(1, 2)]
        assert f.payload(2) == "x"
        assert f.connected(1, 2)
        f.cut(2, 1)
        assert f.export() == []
        assert not f.connected(1, 2)

    def test_errors(self):
        f = LinkCutForest()
        for v in range(3):
            f.add_vertex(v)
        f.link(0, 1)
        f.link(1, 2)
        with pytest.raises(ForestError):
            f.link(0, 2)
        with pytest.raises(ForestError):
            f.cut(0, 2)
        with pytest.raises(ForestError):
            f.remove_vertex(1)
        with pytest.raises(ForestError):
            f.add_vertex(0)
        with pytest.raises(ForestError):
            f.find_root(7)

    def test_shadow_script(self):
        rng = np.random.default_rng(0)
        fast, slow = LinkCutForest(), NaiveForest()
        pool = list(range(40))
        for v in pool[:30]:
            fast.add_vertex(v)
            slow.add_vertex(v)
        for _ in range(10_000):
            op = rng.integers(0, 10)
            live = slow.vertices()
            if op < 4 and len(live) >= 2:
                u, v = rng.choice(live, size=2, replace=False).tolist()
                if not slow.connected(u, v):
                    fast.link(u, v)
                    slow.link(u, v)
            elif op < 7:
                edges = slow.export()
                if edges:
                    u, v = edges[int(rng.integers(0, len(edges)))]
                    fast.cut(u, v)
                    slow.cut(u, v)
            elif op < 8:
                missing = [v for v in pool if v not in slow]
                if missing:
                    v = missing[int(rng.integers(0, len(missing)))]
                    fast.add_vertex(v)
                    slow.add_vertex(v)
            elif op < 9:
                isolated = [v for v in live if not slow.neighbors(v)]
                if isolated:
                    v = isolated[int(rng.integers(0, len(isolated)))]
                    fast.remove_vertex(v)
                    slow.remove_vertex(v)
            else:
                if len(live) >= 2:
                    u, v = rng.choice(live, size=2, replace=False).tolist()
                    assert fast.connected(u, v) == slow.connected(u, v)
                    assert fast.find_root(u) in slow.component(u)
            assert fast.export() == slow.export()
            assert fast.vertices() == slow.vertices()


class TestMarkedAncestor:

    def test_root_only(self):
        t = _random_tree(30, 1)
        kids = t.children()
        m = MarkedAncestorStructure(0, kids)
        assert m.closest_marked_ancestor(5) is None
        m.mark(0)
        assert all(m.closest_marked_ancestor(v) == 0 for v in range(1, 30))
        assert m.closest_marked_ancestor(0) is None

    def test_shadow_script(self):
        t = _random_tree(1000, 2)
        kids = t.children()
        fast, slow = MarkedAncestorStructure(0, kids), NaiveMarkedAncestor(0, kids)
        rng = np.random.default_rng(3)
        for _ in range(10_000):
            v = int(rng.integers(0, 1000))
            op = rng.integers(0, 3)
            if op == 0:
                fast.mark(v)
                slow.mark(v)
            elif op == 1:
                fast.unmark(v)
                slow.unmark(v)
            else:
                assert fast.closest_marked_ancestor(v) == slow.closest_marked_ancestor(v)
            assert fast.is_marked(v) == slow.is_marked(v)


class TestEccForest:

    def test_singleton(self):
        f = EccForest(3)
        assert f.eccentricity(1) == (0, 1)

    def test_small_path(self):
        f = EccForest.from_tree(path_tree([3, 4]))
        assert f.eccentricity(1) == (4, 2)
        assert f.eccentricity(0) == (7, 2)

    def test_witness_is_smallest_id(self):
        t = Tree(4, [(3, 0, 2), (3, 1, 2), (3, 2, 1)])
        assert EccForest.from_tree(t).eccentricity(3) == (2, 0)

    def test_cut_returns_weight(self):
        f = EccForest.from_tree(path_tree([3, 4]))
        assert f.cut(2, 1) == 4
        assert f.eccentricity(0) == (3, 1)
        assert not f.connected(0, 2)
        f.link(2, 0, 5)
        assert f.eccentricity(1) == (8, 2)
        with pytest.raises(ForestError):
            f.cut(1, 2)
        with pytest.raises(ForestError):
            f.link(1, 2, 1)
        with pytest.raises(ForestError):
            f.diameter(0)

    @pytest.mark.parametrize("track", [False, True])
    def test_shadow_script(self, track):
        n = 120 if track else 300
        rng = np.random.default_rng(5)
        tree = _random_tree(n, 6)
        fast = EccForest.from_tree(tree, track_diameter=track)
        slow = NaiveEccForest.from_tree(tree, track_diameter=track)
        for _ in range(2000):
            if rng.integers(0, 2) == 0:
                edges = slow.edges()
                if edges:
                    u, v, w = edges[int(rng.integers(0, len(edges)))]
                    assert fast.cut(v, u) == w
                    slow.cut(u, v)
            else:
                u, v = rng.choice(n, size=2, replace=False).tolist()
                if not slow.connected(u, v):
                    w = int(rng.integers(0, 20))
                    fast.link(u, v, w)
                    slow.link(u, v, w)
            x = int(rng.integers(0, n))
            assert fast.eccentricity(x) == slow.eccentricity(x)
            if track:
                assert fast.diameter(x) == slow.diameter(x)
                assert fast.eccentricity_via_diameter(x) == slow.eccentricity(x)[0]
        assert fast.edges() == slow.edges()
