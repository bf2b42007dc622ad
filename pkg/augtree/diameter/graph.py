import logging
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Sequence, Tuple
from augtree.config import get_settings
from augtree.core.binarize import binarize
from augtree.core.instance import ShortcutSet
from augtree.core.tree import Tree, tree_distances
from augtree.diameter.dijkstra import dijkstra
from augtree.farthest import FarthestStructure


logger = logging.getLogger(__name__)

Witness = Tuple[int, int]


def tree_diameter(tree: Tree) -> Tuple[int, Witness]:
    """两次遍历求树直径，见证点取编号最小的最远点"""
    d0 = tree_distances(tree, 0)
    u = d0.index(max(d0))
    du = tree_distances(tree, u)
    best = max(du)
    v = du.index(best)
    return best, (min(u, v), max(u, v))


def condensed_graph(fs: FarthestStructure, shortcuts: ShortcutSet) -> Dict[int, List[Tuple[int, int]]]:
    """收缩图 G'：T(M) 的边（权为树上距离）加上全部捷径，允许重边"""
    adj: Dict[int, List[Tuple[int, int]]] = defaultdict(list)
    for e in fs.shrink().edges:
        adj[e.parent].append((e.child, e.cost))
        adj[e.child].append((e.parent, e.cost))
    for s in shortcuts:
        adj[s.u].append((s.v, s.cost))
        adj[s.v].append((s.u, s.cost))
    return adj


def ecc_from_source(fs: FarthestStructure, shortcuts: ShortcutSet, source: int) -> Tuple[int, int]:
    """
    T+S 中 source 的离心率

    标记 source 与所有捷径端点为终端，在 G' 上跑 Dijkstra 得到 α，
    report_farthest 给出离心率，最后回滚到调用前的状态。

    Returns:
        (离心率, 最远顶点)；最远顶点已映射回原树编号
    """
    token = fs.checkpoint()
    try:
        for v in [source] + shortcuts.endpoints():
            if not fs.is_terminal(v):
                fs.make_terminal(v)
        dist = dijkstra(condensed_graph(fs, shortcuts), source)
        for v in fs.terminals():
            fs.set_alpha(v, dist[v])
        report = fs.report_farthest()
    finally:
        fs.rollback(token)
    return report.value, fs.owner[report.witness]


def _scan_sources(fs: FarthestStructure, shortcuts: ShortcutSet, sources: Sequence[int]) -> Tuple[int, Witness]:
    best, pair = -1, (0, 0)
    for s in sources:
        val, w = ecc_from_source(fs, shortcuts, s)
        if val > best:
            best, pair = val, (s, w)
    return best, pair


def graph_diameter(
    tree: Tree,
    shortcuts: Optional[ShortcutSet] = None,
    threads: Optional[int] = None,
) -> Tuple[int, Witness]:
    """
    T+S 的精确直径，O(n k log n)

    S 为空时退化为两次遍历；否则（必要时先二叉化）建一个 FarthestStructure，
    对每个原顶点 s 调用 ecc_from_source 取最大值。threads > 1 时按源点分片，
    每片使用独立的结构副本，同值取最先出现的源点。

    Returns:
        (直径, (s, w))：d(s, w) 等于直径
    """
    if not shortcuts:
        return tree_diameter(tree)
    settings = get_settings()
    threads = settings.threads if threads is None else threads

    if tree.is_binary():
        work, owner = tree, None
    else:
        work, owner = binarize(tree)
    fs = FarthestStructure(work, owner=owner)

    n = tree.n
    if threads <= 1 or n < 2 * threads:
        best, pair = _scan_sources(fs, shortcuts, range(n))
    else:
        step = (n + threads - 1) // threads
        shards = [range(i, min(n, i + step)) for i in range(0, n, step)]
        structures = [fs] + [fs.clone() for _ in shards[1:]]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda job: _scan_sources(job[0], shortcuts, job[1]), zip(structures, shards)))
        best, pair = -1, (0, 0)
        for val, p in results:
            if val > best:
                best, pair = val, p

    logger.debug(f"graph_diameter: n={n}, k={len(shortcuts)}, diam={best}, witness={pair}")
    return best, pair
