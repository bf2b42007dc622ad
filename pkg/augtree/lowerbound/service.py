import csv
import logging
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple, Union
import numpy as np
from augtree.config import get_settings
from augtree.core.instance import Instance, ShortcutSet
from augtree.diameter.graph import graph_diameter
from augtree.exceptions import AugTreeError
from augtree.lowerbound.construction import LbLayout, gen_lb, resolve_params
from augtree.schemas import (
    Algo,
    FactReport,
    LowerBoundParams,
    QUERY_CSV_FIELDS,
    QueryReport,
    QueryRow,
    SolveResult,
    Variant,
)
from augtree.solvers.approx import approx4
from augtree.solvers.exact import exact_doat
from augtree.solvers.ptas import ptas


logger = logging.getLogger(__name__)

SHORTCUT_DIAM_BOUND = 9
PLAIN_OPTIMUM_BOUND = 10


class LowerBoundService:

    def _runner(self, algo: Union[Algo, str], eps: float, budget: Optional[int]) -> Callable[[Instance], SolveResult]:
        algo = Algo(algo)
        if algo == Algo.STAR4:
            return lambda inst: approx4(inst)
        if algo == Algo.PTAS:
            return lambda inst: ptas(inst, eps, budget=budget)
        if algo == Algo.EXACT:
            return lambda inst: exact_doat(inst, budget=budget)
        raise AugTreeError(f"对抗实验不支持的算法: {algo.value}")

    def check_facts(self, params: LowerBoundParams, with_optimum: bool = True, budget: Optional[int] = None) -> FactReport:
        """
        校验下界构造的三条性质

        1. I_{a,b} 上 S = {(x1,a),(a,b),(b,x4)} ∪ {(x1,z): z∈Z} 的直径 <= 9
        2. I 的最优值 >= 10（穷举，with_optimum=False 时跳过）
        3. I 与 I_{a,b} 的代价只在 (a, b) 上不同

        Raises:
            WorkBudgetExceeded: 第 2 条的穷举超出预算
        """
        params = resolve_params(params)
        inst_ab = gen_lb(params.model_copy(update={"variant": Variant.IAB}))
        inst_i = gen_lb(params.model_copy(update={"variant": Variant.I}))
        lay = LbLayout(params)
        x1, x4 = lay.center(1), lay.center(4)
        a, b = params.a, params.b

        pairs = [(x1, a), (a, b), (b, x4)] + [(x1, z) for z in lay.Z]
        S = ShortcutSet.from_pairs(pairs, inst_ab.oracle)
        shortcut_diam, _ = graph_diameter(inst_ab.tree, S)
        logger.info(f"🔍 捷径集直径: S={S.triples()}, diam={shortcut_diam}")

        plain_optimum = None
        plain_bound_holds = None
        if with_optimum:
            plain_optimum = exact_doat(inst_i, budget=budget).diam
            plain_bound_holds = plain_optimum >= PLAIN_OPTIMUM_BOUND
            logger.info(f"🔍 I 的最优值={plain_optimum}")

        n = inst_i.n
        differing: List[Tuple[int, int]] = []
        for u in range(n):
            for v in range(u + 1, n):
                if inst_i.oracle.cost(u, v) != inst_ab.oracle.cost(u, v):
                    differing.append((u, v))
        expected = [(min(a, b), max(a, b))]

        report = FactReport(
            n_star=params.n_star,
            k=params.k,
            a=a,
            b=b,
            shortcut_diam=shortcut_diam,
            shortcut_bound_holds=shortcut_diam <= SHORTCUT_DIAM_BOUND,
            plain_optimum=plain_optimum,
            plain_bound_holds=plain_bound_holds,
            differing_pairs=differing,
            single_pair_holds=differing == expected,
        )
        if report.shortcut_bound_holds and report.single_pair_holds and plain_bound_holds is not False:
            logger.info(f"✅ 下界性质校验通过: n_star={params.n_star}, k={params.k}")
        else:
            logger.warning(f"⚠️ 下界性质不成立: {report.model_dump()}")
        return report

    def adversary_experiment(
        self,
        params: LowerBoundParams,
        algo: Union[Algo, str],
        samples: Optional[int] = None,
        seed: int = 0,
        eps: float = 0.5,
        budget: Optional[int] = None,
    ) -> QueryReport:
        """
        对抗实验：在 I 与若干 I_{a,b} 上运行算法并统计预言机查询

        Args:
            params: 下界参数（variant/a/b 忽略）
            algo: star4 / ptas / exact
            samples: 抽样的 (a, b) 对数（默认 adversary_samples）
            seed: 抽样种子

        Returns:
            QueryReport，unqueried_pairs 为 I 上运行时未被查询的 L_2 × L_3 点对数
        """
        settings = get_settings()
        samples = settings.adversary_samples if samples is None else samples
        run = self._runner(algo, eps, budget)
        algo_name = Algo(algo).value
        base = resolve_params(params)
        lay = LbLayout(base)
        L2, L3 = lay.leaves(2), lay.leaves(3)
        cross = {(a, b) for a in L2 for b in L3}

        inst_i = gen_lb(base.model_copy(update={"variant": Variant.I}))
        inst_i.oracle.track_queries()
        res_i = run(inst_i)
        queried = len(inst_i.oracle.queried_pairs & cross)

        rng = np.random.default_rng(seed)
        grid = sorted(cross)
        chosen = rng.choice(len(grid), size=min(samples, len(grid)), replace=False)

        rows = []
        for idx in sorted(chosen.tolist()):
            a, b = grid[idx]
            inst_ab = gen_lb(base.model_copy(update={"variant": Variant.IAB, "a": a, "b": b}))
            res_ab = run(inst_ab)
            rows.append(QueryRow(
                variant=f"Iab[{a}-{b}]",
                n_star=base.n_star,
                k=base.k,
                algo=algo_name,
                queries=inst_ab.oracle.query_count,
                diam=res_ab.diam,
                distinguished=res_ab.diam != res_i.diam,
            ))

        head = QueryRow(
            variant=Variant.I.value,
            n_star=base.n_star,
            k=base.k,
            algo=algo_name,
            queries=inst_i.oracle.query_count,
            diam=res_i.diam,
            distinguished=any(r.distinguished for r in rows),
        )
        report = QueryReport(
            rows=[head] + rows,
            unqueried_pairs=len(cross) - queried,
            queried_pairs=queried,
            total_pairs=len(cross),
        )
        logger.info(
            f"📊 对抗实验: algo={algo_name}, n_star={base.n_star}, k={base.k}, 查询 {head.queries} 次, "
            f"L2×L3 未查询 {report.unqueried_pairs}/{report.total_pairs}"
        )
        return report

    def write_csv(self, report: QueryReport, path: Union[str, Path]) -> None:
        path = Path(path)
        with path.open("w", newline="", encoding="utf-8") as f:
            writer = csv.DictWriter(f, fieldnames=QUERY_CSV_FIELDS)
            writer.writeheader()
            for row in report.rows:
                record: Dict[str, object] = row.model_dump()
                record["distinguished"] = int(row.distinguished)
                writer.writerow(record)
        logger.info(f"结果已写入 {path}")


# 全局实例
lowerbound_service = LowerBoundService()
