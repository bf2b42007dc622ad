import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Union
from augtree.config import get_settings
from augtree.core.instance import Instance, ShortcutSet
from augtree.core.oracle import MatrixOracle, SubsetOracle
from augtree.core.tree import Tree
from augtree.diameter.graph import graph_diameter
from augtree.exceptions import ReductionError
from augtree.schemas import Algo, SolveResult
from augtree.solvers.approx import approx4
from augtree.solvers.exact import exact_doat
from augtree.solvers.gonzalez import farthest_first


logger = logging.getLogger(__name__)

Number = Union[int, float, Fraction]


def eta_for(n: int, k: int) -> int:
    """η = ⌈2 · n^{1/(2k+2)}⌉，整数精确计算"""
    p = 2 * k + 2
    target = n << p
    eta = max(1, int(round(2 * n ** (1.0 / p))))
    while eta ** p < target:
        eta += 1
    while eta > 1 and (eta - 1) ** p >= target:
        eta -= 1
    return eta


def _exact(x: Number) -> Fraction:
    return Fraction(str(x)) if isinstance(x, float) else Fraction(x)


def size_premise_holds(n: int, leaves: int, k: int, eps: Number) -> bool:
    """规模前提 n > (12 λ (k+2)^2 / ε)^(2k+2)，有理数精确比较"""
    p = 2 * k + 2
    return n * _exact(eps) ** p > Fraction(12 * leaves * (k + 2) ** 2) ** p


@dataclass
class ReducedInstance:
    """
    约简实例：V' = B ∪ {x_1..x_{η-|B|}} 上的树 T'，边权为原树距离

    vertex_map[i] 为局部顶点 i 的原编号；oracle 是原预言机在 V' 上的计数视图。
    """

    tree: Tree
    vertex_map: List[int]
    oracle: SubsetOracle
    k: int
    eta: int
    epsilon: float
    branch: List[int] = field(default_factory=list)
    picks: List[int] = field(default_factory=list)
    leaves: int = 0
    premise: bool = False
    generalized: bool = True


def build_reduced(instance: Instance, eps: Number) -> ReducedInstance:
    tree, k = instance.tree, instance.k
    n = tree.n
    if eps <= 0:
        raise ReductionError(f"ε 必须为正: {eps}")
    eta = eta_for(n, k)
    if eta > n:
        raise ReductionError(f"η={eta} 超过顶点数 n={n}，无法约简")

    branch = tree.branch_vertices()
    leaves = len(tree.leaves())
    h = min(n, max(1, eta - len(branch)))
    picks = farthest_first(tree, h).picks
    vset = sorted(set(branch) | set(picks))
    local = {v: i for i, v in enumerate(vset)}

    # 以 x_1 定根，一次遍历：每个 V' 顶点连向最近的 V' 真祖先
    root = picks[0]
    parent, order = tree.rooted(root)
    dist = [0] * n
    up = [-1] * n
    edges = []
    for v in order:
        p = parent[v]
        nearest = -1
        if p >= 0:
            dist[v] = dist[p] + tree.edge_cost(p, v)
            nearest = up[p]
        if v in local:
            if nearest >= 0:
                edges.append((local[nearest], local[v], dist[v] - dist[nearest]))
            up[v] = v
        else:
            up[v] = nearest
    reduced_tree = Tree(len(vset), edges, root=local[root])

    premise = size_premise_holds(n, leaves, k, eps)
    logger.info(
        f"📉 约简实例: n={n}, k={k}, ε={eps}, η={eta}, |B|={len(branch)}, λ={leaves}, "
        f"n^(1/(2k+2)^2)={n ** (1.0 / (2 * k + 2) ** 2):.3f}, |V'|={len(vset)}, 规模前提={premise}"
    )
    return ReducedInstance(
        tree=reduced_tree,
        vertex_map=vset,
        oracle=SubsetOracle(instance.oracle, vset),
        k=k,
        eta=eta,
        epsilon=float(eps),
        branch=branch,
        picks=picks,
        leaves=leaves,
        premise=premise,
    )


def split_generalized(reduced: ReducedInstance) -> Instance:
    """
    广义实例转普通实例：T' 的每条边 (u, v, χ) 拆成 (u, s, 0) + (s, v, χ)

    与拆分顶点相关的代价取 BIG = 全部 c' 代价 + T' 总代价 + 1。
    """
    t = reduced.tree
    m = t.n
    n2 = m + len(t.edges)
    edges = []
    for i, (u, v, chi) in enumerate(t.edges):
        s = m + i
        edges.append((u, s, 0))
        edges.append((s, v, chi))

    matrix = [[0] * n2 for _ in range(m)]
    total = 0
    for u in range(m):
        for v in range(u + 1, m):
            c = reduced.oracle.cost(u, v)
            matrix[u][v] = matrix[v][u] = c
            total += c
    big = total + t.total_cost() + 1
    for u in range(m):
        for v in range(m, n2):
            matrix[u][v] = big
    for s in range(m, n2):
        matrix.append([big] * n2)
        matrix[s][s] = 0

    return Instance(Tree(n2, edges, root=t.root), MatrixOracle(matrix), reduced.k)


def ptas(
    instance: Instance,
    eps: Number,
    budget: Optional[int] = None,
    threads: Optional[int] = None,
) -> SolveResult:
    """
    (1+ε)-近似方案

    build_reduced → split_generalized → exact_doat，再把解映射回原顶点
    （丢弃拆分顶点上的边与和树边重合的边）。规模前提不成立时仍然运行，结果标记为未认证。
    η > n 时直接在原实例上精确求解。
    """
    settings = get_settings()
    tree, oracle, k = instance.tree, instance.oracle, instance.k
    began = time.perf_counter()
    q0 = oracle.query_count
    leaves = len(tree.leaves())
    premise = size_premise_holds(tree.n, leaves, k, eps)

    try:
        reduced = build_reduced(instance, eps)
    except ReductionError as e:
        logger.warning(f"⚠️ {e}，改为在原实例上精确求解（未认证）")
        sol = exact_doat(instance, budget=budget, threads=threads)
        return sol.model_copy(update=dict(
            algo=Algo.PTAS.value,
            oracle_queries=oracle.query_count - q0,
            elapsed=time.perf_counter() - began,
            epsilon=float(eps),
            eta=eta_for(tree.n, k),
            branch_count=len(tree.branch_vertices()),
            leaves=leaves,
            reduced_vertices=tree.n,
            size_premise_holds=premise,
            certified=premise,
        ))

    split = split_generalized(reduced)
    sol = exact_doat(split, budget=budget, threads=threads)

    m = reduced.tree.n
    lifted = []
    for u, v, c in sol.shortcuts:
        if u >= m or v >= m:
            continue
        ou, ov = reduced.vertex_map[u], reduced.vertex_map[v]
        if tree.has_edge(ou, ov):
            continue
        lifted.append((ou, ov, c))
    S = ShortcutSet(lifted)
    diam, _ = graph_diameter(tree, S, threads=threads)

    if not reduced.premise:
        logger.warning(f"⚠️ 规模前提不成立 (n={tree.n}, λ={leaves}, k={k}, ε={eps})，(1+ε) 保证未认证")
    if settings.ptas_compare_star4:
        star = approx4(instance.clone())
        logger.info(f"📊 ptas 与 star4 对比: ptas={diam}, star4={star.diam}, 比值={diam / max(star.diam, 1):.3f}")

    elapsed = time.perf_counter() - began
    logger.info(f"✅ ptas 完成: diam={diam}, S={S.triples()}, 查询 {oracle.query_count - q0} 次, 耗时 {elapsed:.3f}s")
    return SolveResult(
        algo=Algo.PTAS.value,
        shortcuts=S.triples(),
        diam=diam,
        oracle_queries=oracle.query_count - q0,
        elapsed=elapsed,
        epsilon=float(eps),
        eta=reduced.eta,
        branch_count=len(reduced.branch),
        leaves=leaves,
        reduced_vertices=m,
        size_premise_holds=reduced.premise,
        certified=reduced.premise,
    )
