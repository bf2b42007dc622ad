import logging
from typing import Union
import numpy as np
from augtree.core.instance import Instance
from augtree.core.oracle import L1Oracle
from augtree.core.tree import Tree
from augtree.exceptions import TreeError
from augtree.schemas import Family


logger = logging.getLogger(__name__)

GRID = 1 << 16


def gen_random(n: int, k: int, seed: int, family: Union[Family, str] = Family.RANDOM_L1) -> Instance:
    """
    随机度量实例

    n 个点均匀取自整数网格 [0, 2^16)^2，代价为 L1 距离；
    random-l1 的树为随机递归树（顶点 i 的父亲均匀取自 0..i-1），path-l1 为路径 0-1-...-(n-1)。
    树边代价取自同一度量，结果只由 seed 决定。
    """
    family = Family(family)
    if n < 2:
        raise TreeError(f"随机实例要求 n >= 2，实际: {n}")
    if family not in (Family.RANDOM_L1, Family.PATH_L1):
        raise TreeError(f"gen_random 不支持的族: {family.value}")

    rng = np.random.default_rng(seed)
    points = rng.integers(0, GRID, size=(n, 2), dtype=np.int64)

    if family == Family.PATH_L1:
        parents = np.arange(-1, n - 1, dtype=np.int64)
    else:
        parents = np.full(n, -1, dtype=np.int64)
        for i in range(1, n):
            parents[i] = rng.integers(0, i)

    child = np.arange(1, n)
    par = parents[1:]
    costs = np.abs(points[child] - points[par]).sum(axis=1)
    edges = list(zip(par.tolist(), child.tolist(), costs.tolist()))

    tree = Tree(n, edges)
    logger.debug(f"生成随机实例: family={family.value}, n={n}, k={k}, seed={seed}")
    return Instance(tree, L1Oracle(points.tolist()), k)
