import logging
from typing import Dict, List, Optional, Tuple
import numpy as np
from augtree.config import get_settings
from augtree.core.instance import Instance
from augtree.core.oracle import CostOracle
from augtree.core.tree import Tree
from augtree.diameter.dijkstra import sssp
from augtree.exceptions import AugTreeError, InvalidLowerBoundParams
from augtree.schemas import Family, LowerBoundParams, Variant


logger = logging.getLogger(__name__)

TREE_COST = 2
REWIRED_COST = 9


class LbLayout:
    """
    四星构造的顶点编号

    星 i (1..4) 的中心 x_i = (i-1)s，叶子 (i-1)s+1 .. (i-1)s+s-1；
    连接 x_i 与 x_{i+1} 的路径 x_i - v_i - u_{i+1} - x_{i+1}，v_i = 4s + 2(i-1)，u_{i+1} = v_i + 1。
    k > 3 时 Z 取 L_1 的前 k-3 个叶子，y 取 L_4 的第一个叶子。
    """

    def __init__(self, params: LowerBoundParams):
        self.s = s = params.n_star
        self.k = params.k
        self.n = 4 * s + 6
        self.a = params.a
        self.b = params.b
        self.variant = params.variant
        self.Z = list(range(1, 1 + max(0, params.k - 3)))
        self.y = 3 * s + 1

    def center(self, i: int) -> int:
        return (i - 1) * self.s

    def leaves(self, i: int) -> List[int]:
        return list(range((i - 1) * self.s + 1, i * self.s))

    def path_v(self, i: int) -> int:
        return 4 * self.s + 2 * (i - 1)

    def path_u(self, i: int) -> int:
        return 4 * self.s + 2 * (i - 2) + 1

    def leaf_class(self, v: int) -> int:
        """v 所在叶子集合的下标 1..4，非叶子返回 0"""
        if v >= 4 * self.s or v % self.s == 0:
            return 0
        return v // self.s + 1


def family_k(family: Family, k: Optional[int]) -> int:
    """族对应的捷径预算：lb3 固定为 3，lbk 必须显式给出 k > 3"""
    if family == Family.LB3:
        if k is not None and k != 3:
            logger.warning(f"⚠️ lb3 族固定 k=3，忽略 --k {k}")
        return 3
    if k is None or k <= 3:
        raise InvalidLowerBoundParams(f"lbk 族需要显式指定 --k 且 k > 3 (k=3 请使用 lb3)，实际: {k}")
    return k


def resolve_params(params: LowerBoundParams) -> LowerBoundParams:
    """补全默认的 a, b 并校验参数"""
    s, k = params.n_star, params.k
    if k < 3:
        raise InvalidLowerBoundParams(f"下界构造要求 k >= 3，实际: {k}")
    if s < max(2, k - 1):
        raise InvalidLowerBoundParams(f"n_star={s} 过小：k={k} 时至少需要 {max(2, k - 1)}")
    a = s + 1 if params.a is None else params.a
    b = 2 * s + 1 if params.b is None else params.b
    if not (s + 1 <= a <= 2 * s - 1):
        raise InvalidLowerBoundParams(f"a={a} 不在 L_2 = [{s + 1}, {2 * s - 1}] 中")
    if not (2 * s + 1 <= b <= 3 * s - 1):
        raise InvalidLowerBoundParams(f"b={b} 不在 L_3 = [{2 * s + 1}, {3 * s - 1}] 中")
    return params.model_copy(update={"a": a, "b": b})


def lb_vertex_classes(params: LowerBoundParams) -> Dict[str, List[int]]:
    p = resolve_params(params)
    lay = LbLayout(p)
    classes: Dict[str, List[int]] = {}
    for i in range(1, 5):
        classes[f"x{i}"] = [lay.center(i)]
        classes[f"L{i}"] = lay.leaves(i)
    for i in range(1, 4):
        classes[f"v{i}"] = [lay.path_v(i)]
        classes[f"u{i + 1}"] = [lay.path_u(i + 1)]
    classes["a"] = [p.a]
    classes["b"] = [p.b]
    classes["Z"] = list(lay.Z)
    classes["y"] = [lay.y] if p.k > 3 else []
    return classes


def _g_edges(lay: LbLayout, keep: Optional[set] = None) -> List[Tuple[int, int, int]]:
    """图 G / G_{a,b} 的边（限制在 keep 顶点集上）"""
    inside = (lambda v: True) if keep is None else (lambda v: v in keep)
    L = {i: [v for v in lay.leaves(i) if inside(v)] for i in range(1, 5)}
    x = {i: lay.center(i) for i in range(1, 5)}
    edges = []
    for i in range(1, 5):
        edges.extend((x[i], v, TREE_COST) for v in L[i])
    for i in range(1, 4):
        edges.append((x[i], lay.path_v(i), TREE_COST))
        edges.append((lay.path_v(i), lay.path_u(i + 1), TREE_COST))
        edges.append((lay.path_u(i + 1), x[i + 1], TREE_COST))

    edges.extend((x[1], v, 2) for v in L[2])
    edges.extend((x[4], v, 2) for v in L[3])
    for y in L[2]:
        for z in L[3]:
            special = y == lay.a and z == lay.b and lay.variant == Variant.IAB
            edges.append((y, z, 1 if special else 2))
    for i in (2, 3):
        group = L[i]
        edges.extend((group[p], group[q], 3) for p in range(len(group)) for q in range(p + 1, len(group)))
    edges.extend((x[2], v, 3) for v in L[3])
    edges.extend((x[3], v, 3) for v in L[2])
    edges.extend((x[1], v, 3) for v in L[3])
    edges.extend((x[4], v, 3) for v in L[2])
    return edges


def _all_pairs(vertices: List[int], edges: List[Tuple[int, int, int]]) -> np.ndarray:
    local = {v: i for i, v in enumerate(vertices)}
    adj: List[List[Tuple[int, int]]] = [[] for _ in vertices]
    for u, v, c in edges:
        adj[local[u]].append((local[v], c))
        adj[local[v]].append((local[u], c))
    return np.asarray([sssp(adj, i) for i in range(len(vertices))], dtype=np.int64)


def lb_full_graph_costs(params: LowerBoundParams) -> np.ndarray:
    """在完整的 G / G_{a,b} 上跑全源 Dijkstra（校验用）"""
    lay = LbLayout(resolve_params(params))
    return _all_pairs(list(range(lay.n)), _g_edges(lay))


class _ClassTable:
    """每个叶子类只保留少量代表顶点的距离表"""

    def __init__(self, lay: LbLayout, reps: int):
        if reps < 2:
            raise InvalidLowerBoundParams(f"每类代表数至少为 2，实际: {reps}")
        self.lay = lay
        special = {lay.a, lay.b}
        self.generic: Dict[int, List[int]] = {}
        keep = set()
        for i in range(1, 5):
            leaves = lay.leaves(i)
            keep.update(v for v in leaves if v in special)
            generic = [v for v in leaves if v not in special]
            if len(generic) <= reps + 2:
                keep.update(generic)
                self.generic[i] = []
            else:
                self.generic[i] = generic[:reps]
                keep.update(self.generic[i])
        for i in range(1, 5):
            keep.add(lay.center(i))
        for i in range(1, 4):
            keep.add(lay.path_v(i))
            keep.add(lay.path_u(i + 1))
        self.keep = keep
        vertices = sorted(keep)
        self.local = {v: i for i, v in enumerate(vertices)}
        self.rows = _all_pairs(vertices, _g_edges(lay, keep)).tolist()

    def _map(self, v: int, exclude: int) -> int:
        for r in self.generic[self.lay.leaf_class(v)]:
            if r != exclude:
                return r
        raise AugTreeError(f"代表顶点不足: v={v}")

    def distance(self, u: int, v: int) -> int:
        if v in self.keep:
            ru = u if u in self.keep else self._map(u, v)
            rv = v
        else:
            ru = u if u in self.keep else self._map(u, -1)
            rv = self._map(v, ru)
        return self.rows[self.local[ru]][self.local[rv]]


class LowerBoundOracle(CostOracle):
    """
    下界实例的计数预言机：cost(u, v) = d_G(u, v)（变体 I）或 d_{G_{a,b}}(u, v)

    距离来自代表顶点上的类距离表，每次查询 O(1)。
    """

    metric = True

    def __init__(self, params: LowerBoundParams, table: Optional[_ClassTable] = None):
        self.params = resolve_params(params)
        self.kind = self.params.kind
        self.layout = LbLayout(self.params)
        super().__init__(self.layout.n)
        if table is None:
            table = _ClassTable(self.layout, get_settings().lb_representatives)
        self._table = table

    def _lookup(self, u: int, v: int) -> int:
        return self._table.distance(u, v)

    def payload(self):
        p = self.params
        return (p.n_star, p.k, p.variant.value, p.a, p.b)

    def clone(self) -> "LowerBoundOracle":
        return LowerBoundOracle(self.params, table=self._table)


def lb_tree(params: LowerBoundParams) -> Tree:
    lay = LbLayout(resolve_params(params))
    rewired = set(lay.Z)
    edges = []
    for i in range(1, 5):
        x = lay.center(i)
        for v in lay.leaves(i):
            if v in rewired:
                edges.append((lay.y, v, REWIRED_COST))
            else:
                edges.append((x, v, TREE_COST))
    for i in range(1, 4):
        edges.append((lay.center(i), lay.path_v(i), TREE_COST))
        edges.append((lay.path_v(i), lay.path_u(i + 1), TREE_COST))
        edges.append((lay.path_u(i + 1), lay.center(i + 1), TREE_COST))
    return Tree(lay.n, edges)


def gen_lb(params: LowerBoundParams) -> Instance:
    """
    生成下界实例 I / I_{a,b}

    n <= lb_validate_max_vertices 时用完整图上的 Dijkstra 校验类距离表。
    """
    settings = get_settings()
    params = resolve_params(params)
    oracle = LowerBoundOracle(params)
    tree = lb_tree(params)
    n = oracle.n

    if n <= settings.lb_validate_max_vertices:
        full = lb_full_graph_costs(params)
        table = oracle._table
        for u in range(n):
            for v in range(u + 1, n):
                if table.distance(u, v) != full[u, v]:
                    raise AugTreeError(f"类距离表与 Dijkstra 不一致: ({u}, {v}) {table.distance(u, v)} != {full[u, v]}")
        logger.debug(f"下界实例距离表校验通过: n={n}")

    logger.info(
        f"🧩 生成下界实例: kind={params.kind.value}, variant={params.variant.value}, "
        f"n_star={params.n_star}, k={params.k}, a={params.a}, b={params.b}, n={n}"
    )
    return Instance(tree, oracle, params.k)
