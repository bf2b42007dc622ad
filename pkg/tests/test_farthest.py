import itertools
import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from augtree.core import Tree, binarize, path_tree
from augtree.exceptions import NonBinaryTreeError, RollbackError, TerminalError
from augtree.farthest import FarthestReport, FarthestStructure
from tests.reference import nx_graph
from tests.strategies import trees


def _binary_tree(n: int, seed: int) -> Tree:
    rng = np.random.default_rng(seed)
    t = Tree(n, [(int(rng.integers(0, i)), i, int(rng.integers(0, 12))) for i in range(1, n)])
    return binarize(t)[0]


def _expected_tm(fs: FarthestStructure):
    """按定义重建 T(M)：根、终端及两两 LCA；父亲为最近的 T(M) 真祖先"""
    idx = fs.index
    terms = fs.terminals()
    verts = {fs.root} | set(terms) | {idx.lca(a, b) for a, b in itertools.combinations(terms, 2)}
    parent = {}
    for v in verts:
        x = idx.parent[v]
        while x >= 0 and x not in verts:
            x = idx.parent[x]
        parent[v] = x
    return sorted(verts), parent


def _assert_tm(fs: FarthestStructure):
    verts, parent = _expected_tm(fs)
    assert fs.tm_vertices() == verts
    assert {v: fs.tm_parent(v) for v in verts} == parent
    snap = fs.shrink()
    assert snap.edge_pairs() == sorted((min(v, p), max(v, p)) for v, p in parent.items() if p >= 0)
    for e in snap.edges:
        assert e.cost == fs.index.dist(e.parent, e.child)


def _brute_report(tree: Tree, alpha: dict) -> FarthestReport:
    g = nx_graph(tree)
    dist = dict(nx.all_pairs_dijkstra_path_length(g))
    hops = dict(nx.all_pairs_shortest_path_length(g))
    value, witness = -1, -1
    for u in range(tree.n):
        near = min(a + dist[v][u] for v, a in alpha.items())
        if near > value:
            value, witness = near, u
    terminal = min(alpha, key=lambda v: (alpha[v] + dist[v][witness], hops[v][witness], v))
    return FarthestReport(value, terminal, witness)


class TestConstruction:

    def test_single_edge(self):
        fs = FarthestStructure(Tree(2, [(0, 1, 4)]))
        assert fs.shrink().vertex_ids() == [0]
        assert fs.shrink().edges == []

    def test_rejects_non_binary(self):
        with pytest.raises(NonBinaryTreeError):
            FarthestStructure(Tree(4, [(0, 1, 1), (0, 2, 1), (0, 3, 1)]))

    def test_report_without_terminals(self):
        with pytest.raises(TerminalError):
            FarthestStructure(path_tree([1, 1])).report_farthest()


class TestMakeTerminal:

    def test_mark_root_flips_flag_only(self):
        fs = FarthestStructure(path_tree([1, 1, 1]))
        fs.make_terminal(0)
        assert fs.tm_vertices() == [0]
        assert fs.terminals() == [0]

    def test_leaf_then_inner_vertex_of_path(self):
        fs = FarthestStructure(path_tree([1, 1, 1, 1]))
        fs.make_terminal(4)
        assert fs.tm_parent(4) == 0
        fs.make_terminal(2)
        assert fs.tm_parent(2) == 0
        assert fs.tm_parent(4) == 2
        _assert_tm(fs)

    def test_two_leaves_of_balanced_tree(self):
        t = Tree(7, [((i - 1) // 2, i, 1) for i in range(1, 7)])
        fs = FarthestStructure(t)
        fs.make_terminal(3)
        fs.make_terminal(4)
        assert fs.tm_vertices() == [0, 1, 3, 4]
        assert fs.is_terminal(3) and not fs.is_terminal(1)

    def test_double_mark(self):
        fs = FarthestStructure(path_tree([1, 1]))
        fs.make_terminal(1)
        with pytest.raises(TerminalError):
            fs.make_terminal(1)

    @pytest.mark.parametrize("reference", [False, True])
    def test_random_marks_match_definition(self, reference):
        t = _binary_tree(500, 1)
        fs = FarthestStructure(t, reference=reference)
        rng = np.random.default_rng(2)
        for v in rng.choice(t.n, size=50, replace=False).tolist():
            fs.make_terminal(v)
            _assert_tm(fs)


class TestAlpha:

    def test_set_and_overwrite(self):
        fs = FarthestStructure(path_tree([1, 1]))
        fs.make_terminal(2)
        fs.set_alpha(2, 5)
        fs.set_alpha(2, 3)
        assert fs.alpha(2) == 3

    def test_errors(self):
        t = Tree(7, [((i - 1) // 2, i, 1) for i in range(1, 7)])
        fs = FarthestStructure(t)
        fs.make_terminal(3)
        fs.make_terminal(4)
        with pytest.raises(TerminalError):
            fs.set_alpha(1, 2)
        with pytest.raises(TerminalError):
            fs.set_alpha(3, -1)
        with pytest.raises(TerminalError):
            fs.alpha(5)


class TestReportFarthest:

    def test_path_from_one_end(self):
        fs = FarthestStructure(path_tree([1, 1]))
        fs.make_terminal(0)
        assert fs.report_farthest() == FarthestReport(2, 0, 2)

    def test_all_terminals(self):
        t = _binary_tree(20, 3)
        fs = FarthestStructure(t)
        for v in range(t.n):
            fs.make_terminal(v)
        assert fs.report_farthest().value == 0

    def test_alpha_shifts_witness(self):
        fs = FarthestStructure(path_tree([1, 1, 1, 1]))
        fs.make_terminal(0)
        fs.make_terminal(4)
        fs.set_alpha(4, 2)
        # u=3 处两个终端同为 3，跳数少的 4 胜出
        assert fs.report_farthest() == FarthestReport(3, 4, 3)

    def test_structure_is_unchanged_by_queries(self):
        t = _binary_tree(60, 4)
        fs = FarthestStructure(t)
        for v in (5, 17, 40):
            fs.make_terminal(v)
        before = fs.shrink()
        first = fs.report_farthest()
        assert fs.report_farthest() == first
        assert fs.shrink() == before

    @settings(max_examples=150, deadline=None)
    @given(trees(min_n=2, max_n=50), st.data())
    def test_matches_brute_force(self, tree, data):
        tree, _ = binarize(tree)
        size = data.draw(st.integers(1, min(tree.n, 8)))
        terms = data.draw(st.lists(st.integers(0, tree.n - 1), min_size=size, max_size=size, unique=True))
        alphas = data.draw(st.lists(st.integers(0, 40), min_size=size, max_size=size))
        fs = FarthestStructure(tree, reference=data.draw(st.booleans()))
        for v, a in zip(terms, alphas):
            fs.make_terminal(v)
            fs.set_alpha(v, a)
        assert fs.report_farthest() == _brute_report(tree, dict(zip(terms, alphas)))

    def test_random_configurations_with_checks(self, debug_checks):
        rng = np.random.default_rng(9)
        for trial in range(40):
            t = _binary_tree(int(rng.integers(2, 400)), 100 + trial)
            fs = FarthestStructure(t)
            size = int(rng.integers(1, min(t.n, 12) + 1))
            alpha = {}
            for v in rng.choice(t.n, size=size, replace=False).tolist():
                fs.make_terminal(v)
                alpha[v] = int(rng.integers(0, 30))
                fs.set_alpha(v, alpha[v])
            assert fs.report_farthest() == _brute_report(t, alpha)


class TestRollback:

    def test_restores_snapshot(self):
        t = _binary_tree(80, 5)
        fs = FarthestStructure(t)
        fs.make_terminal(3)
        before = fs.shrink()
        token = fs.checkpoint()
        for v in (10, 20, 30, 40, 50):
            fs.make_terminal(v)
        fs.set_alpha(3, 7)
        fs.rollback(token)
        assert fs.shrink() == before
        assert fs.alpha(3) == 0
        assert fs.terminals() == [3]

    def test_nested_and_out_of_order(self):
        t = _binary_tree(50, 6)
        fs = FarthestStructure(t)
        outer = fs.checkpoint()
        fs.make_terminal(4)
        snap = fs.shrink()
        inner = fs.checkpoint()
        fs.make_terminal(9)
        with pytest.raises(RollbackError):
            fs.rollback(outer)
        fs.rollback(inner)
        assert fs.shrink() == snap
        fs.rollback(outer)
        assert fs.terminals() == []
        assert fs.tm_vertices() == [fs.root]

    def test_random_script_matches_definition(self):
        t = _binary_tree(200, 7)
        fs = FarthestStructure(t)
        rng = np.random.default_rng(8)
        tokens = []
        for _ in range(300):
            op = rng.integers(0, 4)
            if op == 0:
                tokens.append(fs.checkpoint())
            elif op == 1 and tokens:
                fs.rollback(tokens.pop())
            else:
                free = [v for v in range(t.n) if not fs.is_terminal(v)]
                if free:
                    fs.make_terminal(free[int(rng.integers(0, len(free)))])
            _assert_tm(fs)

    def test_clone_is_independent(self):
        t = _binary_tree(40, 10)
        fs = FarthestStructure(t)
        fs.make_terminal(2)
        fs.make_terminal(11)
        fs.set_alpha(11, 4)
        twin = fs.clone()
        assert twin.index is fs.index
        assert twin.report_farthest() == fs.report_farthest()
        twin.make_terminal(30)
        assert not fs.is_terminal(30)


def _index_report(fs: FarthestStructure, alpha: dict) -> FarthestReport:
    """O(n·|M|) 暴力：直接用静态索引的树距离"""
    idx = fs.index
    value, witness = -1, -1
    for u in range(fs.n):
        near = min(a + idx.dist(v, u) for v, a in alpha.items())
        if near > value:
            value, witness = near, u

    def tie(v):
        d, h = idx.dist_hops(v, witness)
        return (alpha[v] + d, h, v)

    return FarthestReport(value, min(alpha, key=tie), witness)


def _classify(fs: FarthestStructure, alpha: dict) -> dict:
    """每个顶点归到 (β_u + d(u, v), hops(u, v), u) 最小的 T(M) 顶点 u"""
    idx = fs.index
    beta = {u: min(a + idx.dist(t, u) for t, a in alpha.items()) for u in fs.tm_vertices()}
    blocks = {u: [] for u in beta}
    for v in range(fs.n):
        def key(u):
            d, h = idx.dist_hops(u, v)
            return (beta[u] + d, h, u)
        blocks[min(beta, key=key)].append(v)
    return blocks


def _random_structure(seed: int, max_n: int, max_terms: int, reference: bool = False):
    rng = np.random.default_rng(seed)
    t = _binary_tree(int(rng.integers(2, max_n + 1)), seed)
    fs = FarthestStructure(t, reference=reference)
    size = int(rng.integers(1, min(t.n, max_terms) + 1))
    alpha = {}
    for v in rng.choice(t.n, size=size, replace=False).tolist():
        fs.make_terminal(v)
        alpha[v] = int(rng.integers(0, 30))
        fs.set_alpha(v, alpha[v])
    return fs, alpha


class TestPartition:

    def test_path_split_at_midpoint(self):
        fs = FarthestStructure(path_tree([1, 1, 1, 1]))
        fs.make_terminal(0)
        fs.make_terminal(4)
        assert fs.partition() == {0: [0, 1, 2], 4: [3, 4]}

    @pytest.mark.parametrize("reference", [False, True])
    def test_blocks_match_classification(self, reference):
        for seed in range(60):
            fs, alpha = _random_structure(300 + seed, 120, 10, reference)
            blocks = fs.partition()
            assert sorted(v for b in blocks.values() for v in b) == list(range(fs.n))
            assert set(blocks) == set(fs.tm_vertices())
            assert blocks == _classify(fs, alpha)

    def test_partition_keeps_forest(self):
        fs, _ = _random_structure(7, 80, 6)
        before = fs._ecc.edges()
        fs.partition()
        assert fs._ecc.edges() == before

    def test_forest_restored_when_query_fails(self, monkeypatch):
        fs, alpha = _random_structure(11, 80, 6)
        before = fs._ecc.edges()

        def broken(v):
            raise RuntimeError("boom")

        monkeypatch.setattr(fs._ecc, "eccentricity", broken)
        with pytest.raises(RuntimeError):
            fs.report_farthest()
        monkeypatch.undo()
        assert fs._ecc.edges() == before
        assert fs.report_farthest() == _index_report(fs, alpha)


@pytest.mark.slow
def test_many_random_configurations():
    for seed in range(400):
        fs, alpha = _random_structure(1000 + seed, 400, 12, reference=seed % 5 == 0)
        assert fs.report_farthest() == _index_report(fs, alpha)
