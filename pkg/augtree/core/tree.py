import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple
from augtree.exceptions import TreeError


logger = logging.getLogger(__name__)

# 距离运算上限：所有边代价之和必须小于 2^62
COST_LIMIT = 1 << 62

Edge = Tuple[int, int, int]


class Tree:
    """
    边带权的无向树，顶点编号 0..n-1

    构造后不可变；root 仅作为默认的定根顶点。
    """

    __slots__ = ("n", "edges", "root", "_adj", "_edge_cost", "_total")

    def __init__(self, n: int, edges: Iterable[Sequence[int]], root: Optional[int] = None):
        if n < 1:
            raise TreeError(f"顶点数必须至少为 1，实际: {n}")
        edge_list: List[Edge] = []
        for e in edges:
            if len(e) != 3:
                raise TreeError(f"边必须是 (u, v, cost) 三元组: {e!r}")
            u, v, c = int(e[0]), int(e[1]), int(e[2])
            edge_list.append((u, v, c))
        if len(edge_list) != n - 1:
            raise TreeError(f"边数必须为 n-1={n - 1}，实际: {len(edge_list)}")

        adj: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
        edge_cost: Dict[Tuple[int, int], int] = {}
        total = 0
        for u, v, c in edge_list:
            if not (0 <= u < n and 0 <= v < n):
                raise TreeError(f"顶点编号越界: ({u}, {v})，n={n}")
            if u == v:
                raise TreeError(f"不允许自环: ({u}, {v})")
            if c < 0:
                raise TreeError(f"边代价必须非负: ({u}, {v}) cost={c}")
            key = (u, v) if u < v else (v, u)
            if key in edge_cost:
                raise TreeError(f"重复边: {key}")
            edge_cost[key] = c
            total += c
            adj[u].append((v, c))
            adj[v].append((u, c))
        if total >= COST_LIMIT:
            raise TreeError(f"边代价总和超过 2^62: {total}")

        # 连通性检查
        seen = [False] * n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            x = stack.pop()
            for y, _ in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    count += 1
                    stack.append(y)
        if count != n:
            raise TreeError(f"图不连通: 只能到达 {count}/{n} 个顶点")

        if root is None:
            root = 0
        if not 0 <= root < n:
            raise TreeError(f"根编号越界: {root}")

        self.n = n
        self.edges: Tuple[Edge, ...] = tuple(edge_list)
        self.root = root
        self._adj = adj
        self._edge_cost = edge_cost
        self._total = total

    # ---- 基本查询 ----

    def adjacency(self) -> List[List[Tuple[int, int]]]:
        return self._adj

    def neighbors(self, v: int) -> List[Tuple[int, int]]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_cost

    def edge_cost(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        if key not in self._edge_cost:
            raise TreeError(f"不是树边: ({u}, {v})")
        return self._edge_cost[key]

    def total_cost(self) -> int:
        return self._total

    def leaves(self) -> List[int]:
        """度为 1 的顶点（单顶点树视为 1 个叶子）"""
        if self.n == 1:
            return [0]
        return [v for v in range(self.n) if len(self._adj[v]) == 1]

    def branch_vertices(self) -> List[int]:
        """度 >= 3 的内部顶点集合 B"""
        return [v for v in range(self.n) if len(self._adj[v]) >= 3]

    def is_path(self) -> bool:
        return all(len(a) <= 2 for a in self._adj)

    def rooted(self, root: Optional[int] = None) -> Tuple[List[int], List[int]]:
        """返回 (parent, order)：parent[root] = -1，order 为先序（父在子前）"""
        r = self.root if root is None else root
        parent = [-1] * self.n
        order = []
        seen = [False] * self.n
        seen[r] = True
        stack = [r]
        while stack:
            x = stack.pop()
            order.append(x)
            for y, _ in self._adj[x]:
                if not seen[y]:
                    seen[y] = True
                    parent[y] = x
                    stack.append(y)
        return parent, order

    def children(self, root: Optional[int] = None) -> List[List[int]]:
        parent, order = self.rooted(root)
        kids: List[List[int]] = [[] for _ in range(self.n)]
        for v in order:
            if parent[v] >= 0:
                kids[parent[v]].append(v)
        return kids

    def is_binary(self, root: Optional[int] = None) -> bool:
        """以 root 定根后每个顶点至多 2 个孩子"""
        r = self.root if root is None else root
        for v in range(self.n):
            limit = 2 if v == r else 3
            if len(self._adj[v]) > limit:
                return False
        return True

    def normalized_edges(self) -> List[Edge]:
        return sorted((min(u, v), max(u, v), c) for u, v, c in self.edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tree):
            return NotImplemented
        return (
            self.n == other.n
            and self.root == other.root
            and self.normalized_edges() == other.normalized_edges()
        )

    def __hash__(self):
        return hash((self.n, self.root, tuple(self.normalized_edges())))

    def __repr__(self) -> str:
        return f"Tree(n={self.n}, root={self.root}, cost={self._total})"


def tree_distances(tree: Tree, source: int) -> List[int]:
    """单源树上距离（一次遍历）"""
    dist = [-1] * tree.n
    dist[source] = 0
    stack = [source]
    adj = tree.adjacency()
    while stack:
        x = stack.pop()
        dx = dist[x]
        for y, c in adj[x]:
            if dist[y] < 0:
                dist[y] = dx + c
                stack.append(y)
    return dist


def path_tree(costs: Sequence[int]) -> Tree:
    """0-1-2-...-m 的路径，第 i 条边代价为 costs[i]"""
    return Tree(len(costs) + 1, [(i, i + 1, c) for i, c in enumerate(costs)])


def star_tree(leaves: int, cost: int = 1) -> Tree:
    """中心为 0 的星"""
    return Tree(leaves + 1, [(0, i, cost) for i in range(1, leaves + 1)])
