import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations
from typing import List, Optional, Sequence, Tuple
import numpy as np
from augtree.config import get_settings
from augtree.core.instance import Instance, ShortcutSet
from augtree.core.tree import Tree, tree_distances
from augtree.diameter.graph import graph_diameter
from augtree.exceptions import WorkBudgetExceeded
from augtree.schemas import Algo, SolveResult


logger = logging.getLogger(__name__)

Pair = Tuple[int, int]
Best = Tuple[float, Tuple[int, ...]]

INT64_MAX = int(np.iinfo(np.int64).max)


def candidate_pairs(tree: Tree, generalized: bool = False) -> List[Pair]:
    """候选捷径端点对（字典序）；普通模式排除树边"""
    n = tree.n
    return [(u, v) for u in range(n) for v in range(u + 1, n) if generalized or not tree.has_edge(u, v)]


def estimated_work(n: int, pairs: int, k: int) -> int:
    kk = min(k, pairs)
    return math.comb(pairs, kk) * n * max(kk, 1) * max(1, math.ceil(math.log2(max(n, 2))))


def dense_fits_int64(tree: Tree, costs: Sequence[int]) -> bool:
    """稠密评估的最大中间和 D[u, a] + c + D[b, v] <= 2 * 树总代价 + max c 不超出 int64"""
    return 2 * tree.total_cost() + max(costs, default=0) <= INT64_MAX


def _tree_apsp(tree: Tree) -> np.ndarray:
    return np.asarray([tree_distances(tree, s) for s in range(tree.n)], dtype=np.int64)


def _add_edge(D: np.ndarray, a: int, b: int, c: int) -> np.ndarray:
    """加入边 (a, b, c) 后的全源最短路增量更新"""
    via_ab = D[:, a, None] + c + D[None, b, :]
    return np.minimum(D, np.minimum(via_ab, via_ab.T))


class _DenseSearch:
    """稠密 APSP 上的字典序 DFS，最后一层按块向量化"""

    def __init__(self, tree: Tree, pairs: List[Pair], costs: List[int], kk: int, chunk: int):
        self.D0 = _tree_apsp(tree)
        self.a = np.asarray([p[0] for p in pairs], dtype=np.int64)
        self.b = np.asarray([p[1] for p in pairs], dtype=np.int64)
        self.c = np.asarray(costs, dtype=np.int64)
        self.P = len(pairs)
        self.kk = kk
        self.chunk = chunk

    def _scan(self, D: np.ndarray, idx: np.ndarray, best: Best, prefix: Tuple[int, ...]) -> Best:
        """对 idx 中的每个候选对计算 D + 该边后的直径，保留严格更优者"""
        for s in range(0, len(idx), self.chunk):
            part = idx[s:s + self.chunk]
            A = D[:, self.a[part]].T
            B = D[:, self.b[part]].T
            t = A[:, :, None] + self.c[part, None, None] + B[:, None, :]
            M = np.minimum(D[None, :, :], np.minimum(t, t.transpose(0, 2, 1)))
            diam = M.reshape(len(part), -1).max(axis=1)
            j = int(np.argmin(diam))
            if diam[j] < best[0]:
                best = (int(diam[j]), prefix + (int(part[j]),))
        return best

    def search(self, firsts: Sequence[int], best: Best) -> Best:
        P, kk = self.P, self.kk
        if kk == 1:
            return self._scan(self.D0, np.asarray(firsts, dtype=np.int64), best, ())

        def dfs(D: np.ndarray, start: int, prefix: Tuple[int, ...], best: Best) -> Best:
            depth = len(prefix)
            if depth == kk - 1:
                return self._scan(D, np.arange(start, P, dtype=np.int64), best, prefix)
            for i in range(start, P - (kk - depth) + 1):
                D2 = _add_edge(D, int(self.a[i]), int(self.b[i]), int(self.c[i]))
                best = dfs(D2, i + 1, prefix + (i,), best)
            return best

        for i in firsts:
            D1 = _add_edge(self.D0, int(self.a[i]), int(self.b[i]), int(self.c[i]))
            best = dfs(D1, i + 1, (i,), best)
        return best


def _sparse_search(tree: Tree, pairs: List[Pair], costs: List[int], kk: int, firsts: Sequence[int], best: Best) -> Best:
    P = len(pairs)
    for i in firsts:
        for rest in combinations(range(i + 1, P), kk - 1):
            combo = (i,) + rest
            S = ShortcutSet((pairs[j][0], pairs[j][1], costs[j]) for j in combo)
            d, _ = graph_diameter(tree, S, threads=1)
            if d < best[0]:
                best = (d, combo)
    return best


def exact_doat(
    instance: Instance,
    generalized: bool = False,
    budget: Optional[int] = None,
    threads: Optional[int] = None,
) -> SolveResult:
    """
    穷举求解 k-DOAT

    枚举候选对的全部 min(k, P) 元子集（更多捷径不会使直径变大），同值取字典序最小的边表。
    n <= dense_eval_max_n 且代价不会使 int64 溢出时用稠密增量 APSP 评估，否则逐个调用 graph_diameter。
    每个候选对的代价只查询一次。

    Raises:
        WorkBudgetExceeded: C(P, k) * n * k * log n 超过预算
    """
    settings = get_settings()
    budget = settings.exact_budget if budget is None else budget
    threads = settings.threads if threads is None else threads
    tree, oracle, k = instance.tree, instance.oracle, instance.k
    began = time.perf_counter()
    q0 = oracle.query_count

    pairs = candidate_pairs(tree, generalized)
    kk = min(k, len(pairs))
    work = estimated_work(tree.n, len(pairs), k)
    if work > budget:
        raise WorkBudgetExceeded(f"枚举工作量 {work:.3e} 超过预算 {budget:.3e} (n={tree.n}, 候选对={len(pairs)}, k={k})")
    logger.info(f"🔍 exact_doat 开始: n={tree.n}, k={k}, 候选对={len(pairs)}, generalized={generalized}, 工作量估计={work:.3e}")

    if kk == 0:
        S = ShortcutSet()
    else:
        costs = [oracle.cost(u, v) for u, v in pairs]
        firsts = list(range(len(pairs) - kk + 1))
        dense = tree.n <= settings.dense_eval_max_n and dense_fits_int64(tree, costs)
        if tree.n <= settings.dense_eval_max_n and not dense:
            logger.info(f"📉 代价过大，int64 可能溢出，改用逐个 graph_diameter 评估 (树总代价={tree.total_cost()})")
        searcher = _DenseSearch(tree, pairs, costs, kk, settings.exact_chunk) if dense else None

        def run(shard: Sequence[int]) -> Best:
            start: Best = (math.inf, ())
            if dense:
                return searcher.search(shard, start)
            return _sparse_search(tree, pairs, costs, kk, shard, start)

        if threads <= 1 or len(firsts) < threads:
            best = run(firsts)
        else:
            shards = [firsts[t::threads] for t in range(threads)]
            with ThreadPoolExecutor(max_workers=threads) as pool:
                results = list(pool.map(run, shards))
            best = min(results)
        S = ShortcutSet((pairs[j][0], pairs[j][1], costs[j]) for j in best[1])

    diam, _ = graph_diameter(tree, S, threads=1)
    if kk and settings.debug_checks:
        assert diam == best[0], f"稠密评估与 graph_diameter 不一致: {best[0]} != {diam}"

    elapsed = time.perf_counter() - began
    logger.info(f"✅ exact_doat 完成: diam={diam}, S={S.triples()}, 耗时 {elapsed:.3f}s")
    return SolveResult(
        algo=Algo.EXACT.value,
        shortcuts=S.triples(),
        diam=diam,
        oracle_queries=oracle.query_count - q0,
        elapsed=elapsed,
    )
