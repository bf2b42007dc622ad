import logging
from bisect import bisect_left
from collections import defaultdict
from typing import Dict, List, Optional, Tuple
from augtree.config import get_settings
from augtree.core.instance import ShortcutSet
from augtree.core.tree import Tree
from augtree.diameter.dijkstra import dijkstra
from augtree.exceptions import NotAPathError


logger = logging.getLogger(__name__)


def path_order(tree: Tree) -> List[int]:
    """路径顶点按从一端到另一端的顺序排列（从编号较小的端点出发）"""
    if not tree.is_path():
        raise NotAPathError("输入不是路径: 存在度数 > 2 的顶点")
    if tree.n == 1:
        return [0]
    start = min(tree.leaves())
    order = [start]
    prev = -1
    x = start
    while len(order) < tree.n:
        for y, _ in tree.neighbors(x):
            if y != prev:
                prev, x = x, y
                break
        order.append(x)
    return order


def _subpath_max(
    pos: List[int],
    lo: int,
    hi: int,
    d_lo: int,
    d_hi: int,
    debug_checks: bool,
) -> int:
    """
    子路径 x_1 = 位置 lo, ..., x_m = 位置 hi 上 min(ℓ, r) 的最大值

    ℓ(j) = d_lo + 距 x_1 的距离（非降），r(j) = d_hi + 距 x_m 的距离（非增）；
    取最小的 j >= 2 使 ℓ(j) >= r(j)，结果为 max(ℓ(j-1), r(j))。
    """
    left = lambda i: d_lo + pos[i] - pos[lo]
    right = lambda i: d_hi + pos[hi] - pos[i]
    a, b = lo + 1, hi
    while a < b:
        mid = (a + b) >> 1
        if left(mid) >= right(mid):
            b = mid
        else:
            a = mid + 1
    if debug_checks:
        assert left(a) >= right(a), f"子路径二分失败: [{lo}, {hi}] j={a}"
        assert a == lo + 1 or left(a - 1) < right(a - 1), f"ℓ/r 单调性被破坏: [{lo}, {hi}] j={a}"
    return max(left(a - 1), right(a))


def path_diameter(tree: Tree, shortcuts: Optional[ShortcutSet] = None) -> int:
    """
    路径 P 加捷径 S 后的精确直径

    对每个源点 s：终端 = {s, 两个端点, S 的端点}，在收缩图 G'（相邻终端之间的路径段 + S）
    上跑 Dijkstra，再对每个相邻终端之间的子路径二分求最远距离。
    """
    settings = get_settings()
    order = path_order(tree)
    n = tree.n
    if n == 1:
        return 0
    at = {v: i for i, v in enumerate(order)}
    pos = [0] * n
    for i in range(1, n):
        pos[i] = pos[i - 1] + tree.edge_cost(order[i - 1], order[i])
    if not shortcuts:
        return pos[-1]

    base_idx = sorted({0, n - 1} | {at[v] for v in shortcuts.endpoints()})
    best = 0
    for s in range(n):
        si = at[s]
        j = bisect_left(base_idx, si)
        if j < len(base_idx) and base_idx[j] == si:
            idx = base_idx
        else:
            idx = base_idx[:j] + [si] + base_idx[j:]

        adj: Dict[int, List[Tuple[int, int]]] = defaultdict(list)
        for a, b in zip(idx, idx[1:]):
            w = pos[b] - pos[a]
            adj[a].append((b, w))
            adj[b].append((a, w))
        for sc in shortcuts:
            a, b = at[sc.u], at[sc.v]
            adj[a].append((b, sc.cost))
            adj[b].append((a, sc.cost))
        dist = dijkstra(adj, si)

        ecc = 0
        for a, b in zip(idx, idx[1:]):
            val = _subpath_max(pos, a, b, dist[a], dist[b], settings.debug_checks)
            if val > ecc:
                ecc = val
        if ecc > best:
            best = ecc
    logger.debug(f"path_diameter: n={n}, k={len(shortcuts)}, diam={best}")
    return best
