import logging
import math
import time
from typing import Optional
from augtree.core.instance import Instance, ShortcutSet
from augtree.diameter.graph import graph_diameter
from augtree.schemas import Algo, SolveResult
from augtree.solvers.gonzalez import farthest_first


logger = logging.getLogger(__name__)


def approx4(instance: Instance, start: Optional[int] = None) -> SolveResult:
    """
    4-近似：Gonzalez 选出 x_1..x_{k+1}，返回以 x_1 为中心的星

    只为星边查询预言机（与树边重合的星边直接跳过，不查询）。
    """
    tree, oracle, k = instance.tree, instance.oracle, instance.k
    n = tree.n
    began = time.perf_counter()
    q0 = oracle.query_count

    if n >= 3 and k > math.sqrt(n / math.log2(n)):
        logger.warning(f"⚠️ k={k} 超出 O(sqrt(n / log n)) 的适用范围 (n={n})，继续运行")

    h = min(k + 1, n)
    picks = farthest_first(tree, h, start).picks
    x1 = picks[0]
    star = [(x1, x) for x in picks[1:] if not tree.has_edge(x1, x)]
    S = ShortcutSet.from_pairs(star, oracle)
    diam, _ = graph_diameter(tree, S)

    elapsed = time.perf_counter() - began
    logger.info(f"✅ star4 完成: picks={picks}, diam={diam}, 查询 {oracle.query_count - q0} 次")
    return SolveResult(
        algo=Algo.STAR4.value,
        shortcuts=S.triples(),
        diam=diam,
        oracle_queries=oracle.query_count - q0,
        elapsed=elapsed,
    )
