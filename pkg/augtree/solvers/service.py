import logging
from typing import Optional, Union
from augtree.config import get_settings
from augtree.core.instance import Instance
from augtree.schemas import Algo, GonzalezResult, SolveResult
from augtree.solvers.approx import approx4
from augtree.solvers.exact import exact_doat
from augtree.solvers.gonzalez import farthest_first
from augtree.solvers.ptas import ptas


logger = logging.getLogger(__name__)


class SolverService:

    def solve(
        self,
        instance: Instance,
        algo: Union[Algo, str],
        eps: Optional[float] = None,
        h: Optional[int] = None,
        budget: Optional[int] = None,
        threads: Optional[int] = None,
        start: Optional[int] = None,
        generalized: bool = False,
    ) -> Union[SolveResult, GonzalezResult]:
        """
        按算法名分派求解

        Args:
            instance: k-DOAT 实例
            algo: exact / star4 / ptas / gonzalez
            eps: ptas 的 ε（默认 0.5）
            h: gonzalez 的选点数（默认 k+1）
            budget: exact 枚举工作量预算
            threads: 并行线程数
            start: Gonzalez 起点

        Returns:
            SolveResult，gonzalez 返回 GonzalezResult
        """
        algo = Algo(algo)
        settings = get_settings()
        logger.info(f"🚀 开始求解: algo={algo.value}, {instance!r}")

        if algo == Algo.EXACT:
            return exact_doat(instance, generalized=generalized, budget=budget, threads=threads)
        if algo == Algo.STAR4:
            return approx4(instance, start=start)
        if algo == Algo.PTAS:
            return ptas(instance, 0.5 if eps is None else eps, budget=budget, threads=threads)

        h = min(instance.n, instance.k + 1) if h is None else h
        start = settings.gonzalez_start if start is None else start
        return farthest_first(instance.tree, h, start)


# 全局实例
solver_service = SolverService()
