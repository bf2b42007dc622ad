import logging
from typing import Optional, Tuple
import numpy as np
from augtree.core.oracle import CostOracle
from augtree.exceptions import AugTreeError


logger = logging.getLogger(__name__)

Triple = Tuple[int, int, int]


def cost_matrix(oracle: CostOracle, n: int) -> np.ndarray:
    """通过预言机构造完整代价矩阵（C(n,2) 次查询）"""
    D = np.zeros((n, n), dtype=np.int64)
    for u in range(n):
        for v in range(u + 1, n):
            c = oracle.cost(u, v)
            D[u, v] = c
            D[v, u] = c
    return D


def verify_metric(
    oracle: CostOracle,
    n: int,
    mode: str = "full",
    samples: Optional[int] = None,
    seed: int = 0,
) -> Tuple[bool, Optional[Triple]]:
    """
    检查三角不等式 cost(u,v) <= cost(u,w) + cost(w,v)

    Args:
        mode: "full" 检查全部三元组；"sampled" 随机检查 samples 个三元组

    Returns:
        (是否满足, 第一个违例 (u, w, v))
    """
    if n < 3:
        raise AugTreeError(f"verify_metric 要求 n >= 3，实际: {n}")

    if mode == "full":
        D = cost_matrix(oracle, n)
        for u in range(n):
            # viol[w, v] = D[u, v] > D[u, w] + D[w, v]
            viol = D[u][None, :] > D[u][:, None] + D
            if viol.any():
                w, v = np.argwhere(viol)[0].tolist()
                logger.info(f"❌ 三角不等式违例: ({u}, {w}, {v})")
                return False, (u, w, v)
        logger.info(f"✅ 全量三角不等式检查通过, n={n}")
        return True, None

    if mode != "sampled":
        raise AugTreeError(f"未知的检查模式: {mode}")

    m = samples if samples is not None else 10000
    rng = np.random.default_rng(seed)
    for _ in range(m):
        u, w, v = rng.choice(n, size=3, replace=False).tolist()
        if oracle.cost(u, v) > oracle.cost(u, w) + oracle.cost(w, v):
            logger.info(f"❌ 三角不等式违例: ({u}, {w}, {v})")
            return False, (u, w, v)
    logger.info(f"✅ 抽样三角不等式检查通过, 样本数={m}")
    return True, None
