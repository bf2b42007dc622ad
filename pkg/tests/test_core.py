import pytest
from hypothesis import given, settings
from augtree.core import (
    Instance,
    L1Oracle,
    MatrixOracle,
    ShortcutSet,
    SubsetOracle,
    Tree,
    gen_random,
    path_tree,
    star_tree,
    tree_distances,
    verify_metric,
)
from augtree.exceptions import CostFormatError, ShortcutError, TreeError
from augtree.schemas import Family, OracleKind
from tests.reference import nx_distances
from tests.strategies import trees


class TestTree:

    def test_rejects_wrong_edge_count(self):
        with pytest.raises(TreeError):
            Tree(3, [(0, 1, 1)])

    def test_rejects_cycle(self):
        with pytest.raises(TreeError):
            Tree(4, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])

    def test_rejects_duplicate_and_negative(self):
        with pytest.raises(TreeError):
            Tree(3, [(0, 1, 1), (1, 0, 2)])
        with pytest.raises(TreeError):
            Tree(2, [(0, 1, -1)])

    def test_rejects_cost_overflow(self):
        with pytest.raises(TreeError):
            Tree(3, [(0, 1, 1 << 61), (1, 2, 1 << 61)])

    def test_queries(self):
        t = star_tree(5)
        assert t.leaves() == [1, 2, 3, 4, 5]
        assert t.branch_vertices() == [0]
        assert not t.is_path()
        assert not t.is_binary()
        assert t.has_edge(3, 0)
        assert t.edge_cost(0, 3) == 1
        assert t.total_cost() == 5
        with pytest.raises(TreeError):
            t.edge_cost(1, 2)

    def test_single_vertex(self):
        t = Tree(1, [])
        assert t.leaves() == [0]
        assert t.is_path()
        assert tree_distances(t, 0) == [0]

    def test_equality_ignores_edge_order(self):
        a = Tree(3, [(0, 1, 2), (1, 2, 3)])
        b = Tree(3, [(2, 1, 3), (1, 0, 2)])
        assert a == b
        assert a != Tree(3, [(0, 1, 2), (1, 2, 4)])

    @given(trees(max_n=30))
    def test_distances_match_networkx(self, tree):
        ref = nx_distances(tree)
        for s in range(tree.n):
            assert tree_distances(tree, s) == [ref[s][v] for v in range(tree.n)]

    @given(trees(max_n=30))
    def test_rooted_order_lists_parents_first(self, tree):
        parent, order = tree.rooted()
        seen = set()
        for v in order:
            assert parent[v] == -1 or parent[v] in seen
            seen.add(v)
        assert len(order) == tree.n


class TestShortcutSet:

    def test_parse_with_and_without_costs(self):
        oracle = MatrixOracle([[0, 4, 7], [4, 0, 5], [7, 5, 0]])
        S = ShortcutSet.parse("0-2:3, 1-2", oracle)
        assert S.triples() == [(0, 2, 3), (1, 2, 5)]
        assert oracle.query_count == 1
        assert S.endpoints() == [0, 1, 2]

    def test_parse_errors(self):
        with pytest.raises(ShortcutError):
            ShortcutSet.parse("0-x")
        with pytest.raises(ShortcutError):
            ShortcutSet.parse("0-1")
        with pytest.raises(ShortcutError):
            ShortcutSet.parse("1-1:2")
        with pytest.raises(ShortcutError):
            ShortcutSet.parse("0-1:2,1-0:3")
        assert len(ShortcutSet.parse("")) == 0

    def test_parse_out_of_range_endpoint(self):
        oracle = MatrixOracle([[0, 4, 7], [4, 0, 5], [7, 5, 0]])
        for text in ("0-99", "3-1", "1-2,2-5"):
            with pytest.raises(ShortcutError):
                ShortcutSet.parse(text, oracle)
        assert oracle.query_count <= 1

    def test_validate(self, unit_path):
        S = ShortcutSet([(0, 4, 1), (1, 3, 1)])
        S.validate(unit_path, k=2)
        with pytest.raises(ShortcutError):
            S.validate(unit_path, k=1)
        with pytest.raises(ShortcutError):
            ShortcutSet([(0, 1, 1)]).validate(unit_path)
        ShortcutSet([(0, 1, 1)]).validate(unit_path, generalized=True)
        with pytest.raises(ShortcutError):
            ShortcutSet([(0, 9, 1)]).validate(unit_path)

    def test_equality_is_orientation_free(self):
        assert ShortcutSet([(0, 3, 2)]) == ShortcutSet([(3, 0, 2)])


class TestOracles:

    def test_counts_every_query(self):
        oracle = L1Oracle([(0, 0), (3, 4), (1, 1)])
        assert oracle.cost(0, 1) == 7
        assert oracle.cost(0, 1) == 7
        assert oracle.cost(2, 2) == 0
        assert oracle.query_count == 3

    def test_track_queries(self):
        oracle = L1Oracle([(0, 0), (3, 4), (1, 1)])
        oracle.track_queries()
        oracle.cost(1, 0)
        oracle.cost(2, 1)
        assert oracle.queried_pairs == {(0, 1), (1, 2)}
        oracle.reset_queries()
        assert oracle.query_count == 0
        assert oracle.queried_pairs == set()

    def test_matrix_validation(self):
        with pytest.raises(CostFormatError):
            MatrixOracle([[0, 1], [2, 0]])
        with pytest.raises(CostFormatError):
            MatrixOracle([[1, 1], [1, 0]])
        with pytest.raises(CostFormatError):
            MatrixOracle([[0, 1, 2], [1, 0, 2]])

    def test_subset_view_advances_both_counters(self):
        base = L1Oracle([(0, 0), (5, 0), (0, 9), (2, 2)])
        view = SubsetOracle(base, [3, 1])
        assert view.n == 2
        assert view.cost(0, 1) == base.cost(3, 1)
        assert view.query_count == 1
        assert base.query_count == 2
        assert view.kind == OracleKind.L1

    def test_clone_resets_counter(self):
        oracle = L1Oracle([(0, 0), (1, 1)])
        oracle.cost(0, 1)
        twin = oracle.clone()
        assert twin == oracle
        assert twin.query_count == 0


class TestInstance:

    def test_check_embedding(self):
        oracle = MatrixOracle([[0, 2, 5], [2, 0, 3], [5, 3, 0]])
        good = Instance(path_tree([2, 3]), oracle, 1)
        assert good.check_embedding() == []
        bad = Instance(path_tree([2, 4]), oracle.clone(), 1)
        assert bad.check_embedding() == [(1, 2)]

    def test_size_mismatch(self):
        with pytest.raises(ShortcutError):
            Instance(path_tree([1]), L1Oracle([(0, 0), (1, 1), (2, 2)]), 1)


class TestGenerators:

    def test_two_vertices(self):
        inst = gen_random(2, 1, 0)
        (u, v, c), = inst.tree.edges
        assert c == inst.oracle.cost(u, v)

    def test_deterministic(self):
        assert gen_random(30, 3, 5) == gen_random(30, 3, 5)
        assert gen_random(30, 3, 5) != gen_random(30, 3, 6)

    def test_path_family(self):
        inst = gen_random(20, 2, 3, Family.PATH_L1)
        assert inst.tree.is_path()
        assert inst.check_embedding() == []

    def test_embedding_and_metric(self):
        inst = gen_random(100, 3, 1)
        assert inst.check_embedding() == []
        ok, violation = verify_metric(inst.oracle, inst.n, mode="full")
        assert ok and violation is None

    def test_rejects_bad_family(self):
        with pytest.raises(TreeError):
            gen_random(10, 1, 0, Family.LB3)
        with pytest.raises(TreeError):
            gen_random(1, 1, 0)


class TestVerifyMetric:

    def test_reports_first_violation(self, violating_oracle):
        assert verify_metric(violating_oracle, 3) == (False, (0, 1, 2))

    def test_sampled_mode_finds_violation(self, violating_oracle):
        ok, triple = verify_metric(violating_oracle, 3, mode="sampled", samples=200, seed=1)
        assert not ok
        u, w, v = triple
        assert {u, v} == {0, 2} and w == 1

    def test_l1_points_are_metric(self):
        inst = gen_random(64, 1, 11)
        assert verify_metric(inst.oracle, 64, mode="full")[0]
        assert verify_metric(inst.oracle, 64, mode="sampled", samples=500)[0]
