import logging
import time
from itertools import combinations
from typing import List, Optional, Sequence
from augtree.config import get_settings
from augtree.core.binarize import binarize
from augtree.core.tree import Tree
from augtree.exceptions import AugTreeError
from augtree.farthest import FarthestStructure
from augtree.oracles import StaticTreeIndex
from augtree.schemas import GonzalezResult


logger = logging.getLogger(__name__)


def spread_radius(tree: Tree, picks: Sequence[int], index: Optional[StaticTreeIndex] = None) -> Optional[int]:
    """选点两两之间的最小树上距离 D（少于 2 个点时为 None）"""
    if len(picks) < 2:
        return None
    index = index or StaticTreeIndex(tree)
    return min(index.dist(a, b) for a, b in combinations(picks, 2))


def farthest_first(tree: Tree, h: int, start: Optional[int] = None) -> GonzalezResult:
    """
    最远点优先遍历（Gonzalez）

    x_1 = start，此后每步选取到已选点最小距离最大的顶点。最远点由 FarthestStructure
    给出（所有终端 α = 0）；最大最小距离为 0 时改选编号最小的未选顶点。

    Returns:
        GonzalezResult: picks, radii[i] 为选 x_{i+2} 时的最大最小距离, spread = D
    """
    n = tree.n
    if h < 1 or h > n:
        raise AugTreeError(f"Gonzalez 选点数必须满足 1 <= h <= n={n}，实际: {h}")
    if start is None:
        start = get_settings().gonzalez_start
    if not 0 <= start < n:
        raise AugTreeError(f"起点越界: {start}，n={n}")

    began = time.perf_counter()
    if tree.is_binary():
        work, owner = tree, None
    else:
        work, owner = binarize(tree)
    fs = FarthestStructure(work, owner=owner)

    picks: List[int] = [start]
    picked = [False] * n
    picked[start] = True
    radii: List[int] = []
    fs.make_terminal(start)
    cursor = 0
    while len(picks) < h:
        report = fs.report_farthest()
        x = fs.owner[report.witness]
        if report.value == 0 or picked[x]:
            while picked[cursor]:
                cursor += 1
            x = cursor
        picks.append(x)
        picked[x] = True
        radii.append(report.value)
        fs.make_terminal(x)

    spread = spread_radius(tree, picks, fs.index)
    elapsed = time.perf_counter() - began
    logger.debug(f"farthest_first: n={n}, h={h}, start={start}, spread={spread}, 耗时 {elapsed:.3f}s")
    return GonzalezResult(picks=picks, radii=radii, spread=spread, elapsed=elapsed)


def gonzalez(tree: Tree, h: int, start: Optional[int] = None) -> List[int]:
    return farthest_first(tree, h, start).picks
