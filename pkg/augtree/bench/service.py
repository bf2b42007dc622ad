import csv
import logging
import time
from pathlib import Path
from typing import List, Optional, Sequence, Union
import numpy as np
from augtree.core.generators import gen_random
from augtree.core.instance import Instance, ShortcutSet
from augtree.diameter.graph import graph_diameter
from augtree.diameter.naive import naive_diameter
from augtree.diameter.path import path_diameter
from augtree.exceptions import AugTreeError
from augtree.schemas import BENCH_CSV_FIELDS, BenchRow, Family
from augtree.solvers.approx import approx4
from augtree.solvers.exact import exact_doat
from augtree.solvers.gonzalez import farthest_first
from augtree.solvers.ptas import ptas


logger = logging.getLogger(__name__)

BENCH_ALGOS = ["diam", "naive", "path", "star4", "ptas", "exact", "gonzalez"]
SHORTCUT_ALGOS = {"diam", "naive", "path"}


def random_shortcuts(instance: Instance, k: int, seed: int) -> ShortcutSet:
    """从非树边点对中均匀抽取 k 条捷径，代价查询预言机"""
    tree = instance.tree
    n = tree.n
    rng = np.random.default_rng(seed)
    chosen = set()
    limit = n * (n - 1) // 2 - (n - 1)
    target = min(k, limit)
    while len(chosen) < target:
        u, v = sorted(rng.choice(n, size=2, replace=False).tolist())
        if not tree.has_edge(u, v):
            chosen.add((u, v))
    return ShortcutSet.from_pairs(sorted(chosen), instance.oracle)


class BenchService:

    def _measure(self, algo: str, instance: Instance, k: int, seed: int, eps: float) -> int:
        if algo in SHORTCUT_ALGOS:
            S = random_shortcuts(instance, k, seed)
            if algo == "diam":
                return graph_diameter(instance.tree, S)[0]
            if algo == "naive":
                return naive_diameter(instance.tree, S)
            return path_diameter(instance.tree, S)
        if algo == "star4":
            return approx4(instance).diam
        if algo == "ptas":
            return ptas(instance, eps).diam
        if algo == "exact":
            return exact_doat(instance).diam
        result = farthest_first(instance.tree, min(instance.n, k + 1))
        return result.spread if result.spread is not None else 0

    def run_bench(
        self,
        algo: str,
        sizes: Sequence[int],
        k: int,
        reps: int = 1,
        seed: int = 0,
        family: Union[Family, str, None] = None,
        eps: float = 0.5,
    ) -> List[BenchRow]:
        """
        在随机实例上计时

        Args:
            algo: diam / naive / path / star4 / ptas / exact / gonzalez
            sizes: 顶点数列表
            k: 捷径数（diam/naive/path 为随机捷径数）
            reps: 每个规模重复次数，第 r 次用 seed + r 生成实例
            family: 实例族，path 固定用 path-l1

        Returns:
            每次运行一行 BenchRow
        """
        if algo not in BENCH_ALGOS:
            raise AugTreeError(f"未知的 bench 算法: {algo}")
        if reps < 1:
            raise AugTreeError(f"reps 必须为正: {reps}")
        if algo == "path":
            family = Family.PATH_L1
        family = Family(family or Family.RANDOM_L1)

        rows = []
        logger.info(f"🚀 bench 开始: algo={algo}, sizes={list(sizes)}, k={k}, reps={reps}, family={family.value}")
        for n in sizes:
            for rep in range(reps):
                instance = gen_random(n, k, seed + rep, family)
                began = time.perf_counter()
                value = self._measure(algo, instance, k, seed + rep, eps)
                seconds = time.perf_counter() - began
                rows.append(BenchRow(
                    algo=algo, n=n, k=k, rep=rep, seconds=seconds, value=value,
                    queries=instance.oracle.query_count,
                ))
                logger.debug(f"bench: n={n}, rep={rep}, {seconds:.4f}s, value={value}")
        logger.info(f"✅ bench 完成: {len(rows)} 行")
        return rows

    def write_csv(self, rows: List[BenchRow], path: Optional[Union[str, Path]]) -> None:
        path = Path(path)
        with path.open("w", newline="", encoding="utf-8") as f:
            writer = csv.DictWriter(f, fieldnames=BENCH_CSV_FIELDS)
            writer.writeheader()
            for row in rows:
                writer.writerow(row.model_dump())
        logger.info(f"结果已写入 {path}")


# 全局实例
bench_service = BenchService()
