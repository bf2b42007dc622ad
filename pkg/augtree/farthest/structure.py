import logging
from dataclasses import dataclass, field
from typing import Dict, List, NamedTuple, Optional, Sequence, Set, Tuple
from augtree.config import get_settings
from augtree.core.tree import Tree
from augtree.dynforest import (
    EccForest,
    LinkCutForest,
    MarkedAncestorStructure,
    NaiveEccForest,
    NaiveForest,
    NaiveMarkedAncestor,
)
from augtree.exceptions import NonBinaryTreeError, RollbackError, TerminalError
from augtree.oracles import StaticTreeIndex


logger = logging.getLogger(__name__)

TieDist = Tuple[int, int, int]


class FarthestReport(NamedTuple):
    value: int
    terminal: int
    witness: int


class ShrunkVertex(NamedTuple):
    id: int
    terminal: bool
    original: int


class ShrunkEdge(NamedTuple):
    parent: int
    child: int
    cost: int
    hops: int


@dataclass
class ShrunkTree:
    """T(M) 的快照：顶点带终端/Steiner 标记，边权为树上距离"""

    root: int
    vertices: List[ShrunkVertex] = field(default_factory=list)
    edges: List[ShrunkEdge] = field(default_factory=list)

    def vertex_ids(self) -> List[int]:
        return [x.id for x in self.vertices]

    def terminal_ids(self) -> List[int]:
        return [x.id for x in self.vertices if x.terminal]

    def edge_pairs(self) -> List[Tuple[int, int]]:
        return sorted((min(e.parent, e.child), max(e.parent, e.child)) for e in self.edges)


class FarthestStructure:
    """
    终端集合 M 上的最远点结构

    维护：
      - 终端标记与 α 值
      - T(M)：根、终端及其两两 LCA 构成的收缩树（link-cut 森林 + 父指针）
      - 标记祖先结构：标记集合恰为 V(T(M))
      - 离心率森林：查询之间恰好保存 T 的全部边

    report_farthest() 返回 max_u min_{v in M} (α_v + d(v, u))，
    见证点取达到最大值的编号最小顶点，终端取 (α_v + d(v, w), hops(v, w), v) 最小者。
    所有结构修改记入逆操作日志，checkpoint/rollback 按 LIFO 撤销。
    """

    def __init__(
        self,
        tree: Tree,
        reference: Optional[bool] = None,
        index: Optional[StaticTreeIndex] = None,
        owner: Optional[Sequence[int]] = None,
    ):
        if not tree.is_binary():
            raise NonBinaryTreeError(f"FarthestStructure 需要二叉树（根 {tree.root}），请先调用 binarize")
        settings = get_settings()
        self.tree = tree
        self.n = tree.n
        self.index = index if index is not None else StaticTreeIndex(tree)
        self.root = self.index.root
        self.owner = list(owner) if owner is not None else list(range(tree.n))
        self.reference = settings.reference_structures if reference is None else reference
        self.debug_checks = settings.debug_checks

        if self.reference:
            self._lcf = NaiveForest()
            self._marks = NaiveMarkedAncestor(self.root, self.index.kids)
            self._ecc = NaiveEccForest.from_tree(tree)
        else:
            self._lcf = LinkCutForest()
            self._marks = MarkedAncestorStructure(self.root, self.index.kids)
            self._ecc = EccForest.from_tree(tree)

        self._terminal = [False] * self.n
        self._alpha: Dict[int, int] = {}
        self._tm_parent: Dict[int, int] = {}
        self._tm_children: Dict[int, Set[int]] = {}
        self._journal: List[tuple] = []
        self._checkpoints: List[Tuple[int, int]] = []
        self._token_seq = 0

        self._tm_add(self.root)
        self._journal.clear()

    # ---------- T(M) 原语（均记入日志） ----------

    def _tm_add(self, v: int) -> None:
        self._lcf.add_vertex(v, payload=self.owner[v])
        self._marks.mark(v)
        self._tm_parent[v] = -1
        self._tm_children[v] = set()
        self._journal.append(("add", v))

    def _tm_remove(self, v: int) -> None:
        self._lcf.remove_vertex(v)
        self._marks.unmark(v)
        del self._tm_parent[v]
        del self._tm_children[v]

    def _tm_link(self, parent: int, child: int) -> None:
        self._lcf.link(child, parent)
        self._tm_parent[child] = parent
        self._tm_children[parent].add(child)
        self._journal.append(("link", parent, child))

    def _tm_cut(self, parent: int, child: int) -> None:
        self._lcf.cut(child, parent)
        self._tm_parent[child] = -1
        self._tm_children[parent].discard(child)
        self._journal.append(("cut", parent, child))

    def _set_terminal(self, v: int) -> None:
        self._terminal[v] = True
        self._journal.append(("terminal", v, self._alpha.get(v)))
        self._alpha[v] = 0

    # ---------- 对外操作 ----------

    def make_terminal(self, v: int) -> None:
        if self._terminal[v]:
            raise TerminalError(f"顶点 {v} 已经是终端")
        if self._marks.is_marked(v):
            self._set_terminal(v)
            return

        z = self._marks.closest_marked_ancestor(v)
        index = self.index
        case = "i"
        for u in list(self._tm_children[z]):
            y = index.lca(v, u)
            if y == z:
                continue
            if y == v:
                # (ii) v 落在边 z-u 的内部
                self._tm_cut(z, u)
                self._tm_add(v)
                self._tm_link(z, v)
                self._tm_link(v, u)
                case = "ii"
            else:
                # (iii) 新 Steiner 顶点 y 分裂边 z-u，v 挂在 y 下
                self._tm_cut(z, u)
                self._tm_add(y)
                self._tm_link(z, y)
                self._tm_link(y, u)
                self._tm_add(v)
                self._tm_link(y, v)
                case = "iii"
            break
        else:
            self._tm_add(v)
            self._tm_link(z, v)
        self._set_terminal(v)
        logger.debug(f"make_terminal({v}): case {case}, z={z}")

    def set_alpha(self, v: int, alpha: int) -> None:
        if not self._terminal[v]:
            raise TerminalError(f"顶点 {v} 不是终端，不能设置 α")
        if alpha < 0:
            raise TerminalError(f"α 必须非负: {alpha}")
        self._journal.append(("alpha", v, self._alpha[v]))
        self._alpha[v] = alpha

    def checkpoint(self) -> int:
        self._token_seq += 1
        token = self._token_seq
        self._checkpoints.append((token, len(self._journal)))
        return token

    def rollback(self, token: int) -> None:
        if not self._checkpoints or self._checkpoints[-1][0] != token:
            raise RollbackError(f"回滚令牌 {token} 不是最近的检查点")
        _, mark = self._checkpoints.pop()
        journal = self._journal
        while len(journal) > mark:
            op = journal.pop()
            kind = op[0]
            if kind == "add":
                self._tm_remove(op[1])
            elif kind == "link":
                _, parent, child = op
                self._lcf.cut(child, parent)
                self._tm_parent[child] = -1
                self._tm_children[parent].discard(child)
            elif kind == "cut":
                _, parent, child = op
                self._lcf.link(child, parent)
                self._tm_parent[child] = parent
                self._tm_children[parent].add(child)
            elif kind == "terminal":
                _, v, old = op
                self._terminal[v] = False
                if old is None:
                    self._alpha.pop(v, None)
                else:
                    self._alpha[v] = old
            elif kind == "alpha":
                self._alpha[op[1]] = op[2]

    # ---------- 访问器 ----------

    def is_terminal(self, v: int) -> bool:
        return self._terminal[v]

    def terminals(self) -> List[int]:
        return sorted(self._alpha)

    def alpha(self, v: int) -> int:
        if not self._terminal[v]:
            raise TerminalError(f"顶点 {v} 不是终端")
        return self._alpha[v]

    def tm_vertices(self) -> List[int]:
        return sorted(self._tm_parent)

    def tm_parent(self, v: int) -> int:
        return self._tm_parent[v]

    def shrink(self) -> ShrunkTree:
        index = self.index
        vertices = [ShrunkVertex(v, self._terminal[v], self.owner[v]) for v in self.tm_vertices()]
        edges = []
        for a, b in self._lcf.export():
            parent, child = (a, b) if self._tm_parent.get(b) == a else (b, a)
            edges.append(ShrunkEdge(
                parent,
                child,
                index.dtr[child] - index.dtr[parent],
                index.depth[child] - index.depth[parent],
            ))
        return ShrunkTree(self.root, vertices, edges)

    def clone(self) -> "FarthestStructure":
        """共享静态索引的独立副本（重放终端与 α）"""
        other = FarthestStructure(self.tree, reference=self.reference, index=self.index, owner=self.owner)
        for v in self.terminals():
            other.make_terminal(v)
        for v in self.terminals():
            if self._alpha[v]:
                other.set_alpha(v, self._alpha[v])
        other._journal.clear()
        return other

    # ---------- 查询 ----------

    def _tm_order(self) -> List[int]:
        order = [self.root]
        children = self._tm_children
        i = 0
        while i < len(order):
            order.extend(children[order[i]])
            i += 1
        return order

    def _phase1(self, order: List[int]) -> Dict[int, TieDist]:
        """β_u 与 ν_u：两遍扫描 T(M)，元组 (α_v + d, hops, v) 字典序最小"""
        dtr, depth = self.index.dtr, self.index.depth
        inf = (float("inf"), 0, -1)
        best: Dict[int, TieDist] = {}
        for u in order:
            best[u] = (self._alpha[u], 0, u) if self._terminal[u] else inf
        parent = self._tm_parent
        for c in reversed(order):
            p = parent[c]
            if p < 0:
                continue
            bc = best[c]
            cand = (bc[0] + dtr[c] - dtr[p], bc[1] + depth[c] - depth[p], bc[2])
            if cand < best[p]:
                best[p] = cand
        for c in order:
            p = parent[c]
            if p < 0:
                continue
            bp = best[p]
            cand = (bp[0] + dtr[c] - dtr[p], bp[1] + depth[c] - depth[p], bp[2])
            if cand < best[c]:
                best[c] = cand
        return best

    def _split_point(self, p: int, c: int, beta_p: int, beta_c: int) -> int:
        """
        c 到 p 的路径 x_1 = p, ..., x_m = c 上最小的 i ∈ [2, m]，
        使 (β_p + d(p, x_i), i - 1, p) > (β_c + d(c, x_i), m - i, c)
        """
        index = self.index
        dtr = index.dtr
        m = index.depth[c] - index.depth[p] + 1

        def p_loses(i: int) -> bool:
            x = index.level_ancestor(c, m - i)
            return (beta_p + dtr[x] - dtr[p], i - 1, p) > (beta_c + dtr[c] - dtr[x], m - i, c)

        lo, hi = 2, m
        while lo < hi:
            mid = (lo + hi) >> 1
            if p_loses(mid):
                hi = mid
            else:
                lo = mid + 1
        if self.debug_checks:
            assert p_loses(lo), f"Phase 2 单调性被破坏: 边 ({p}, {c}) i={lo}"
            assert lo == 2 or not p_loses(lo - 1), f"Phase 2 单调性被破坏: 边 ({p}, {c}) i={lo - 1}"
        return lo

    def _phase2(self, order: List[int], best: Dict[int, TieDist], cuts: List[Tuple[int, int, int]]) -> None:
        """每条 T(M) 边上二分出分界点并在离心率森林中切断，切掉的边追加到 cuts"""
        index = self.index
        ecc = self._ecc
        for c in order[1:]:
            p = self._tm_parent[c]
            m = index.depth[c] - index.depth[p] + 1
            i = self._split_point(p, c, best[p][0], best[c][0])
            a = index.level_ancestor(c, m - i + 1)
            b = index.level_ancestor(c, m - i)
            w = ecc.cut(a, b)
            cuts.append((a, b, w))

    def _relink(self, cuts: List[Tuple[int, int, int]]) -> None:
        for a, b, w in reversed(cuts):
            self._ecc.link(a, b, w)

    def partition(self) -> Dict[int, List[int]]:
        """
        Phase 2 切分出的各块：T(M) 顶点 u -> 块 T_u 的顶点（升序）

        T_u 恰为 (β_u + d(u, v), hops(u, v), u) 在全部 T(M) 顶点上取最小的那些 v。
        只用于检查，O(n)。
        """
        if not self._alpha:
            raise TerminalError("终端集合为空，无法切分")
        order = self._tm_order()
        best = self._phase1(order)
        cuts: List[Tuple[int, int, int]] = []
        try:
            self._phase2(order, best, cuts)
            adj: Dict[int, List[int]] = {v: [] for v in range(self.n)}
            for u, v, _ in self._ecc.edges():
                adj[u].append(v)
                adj[v].append(u)
        finally:
            self._relink(cuts)

        blocks: Dict[int, List[int]] = {}
        for u in order:
            seen = {u}
            stack = [u]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            blocks[u] = sorted(seen)
        return blocks

    def report_farthest(self) -> FarthestReport:
        if not self._alpha:
            raise TerminalError("终端集合为空，无法查询最远点")
        index = self.index
        order = self._tm_order()
        best = self._phase1(order)

        cuts: List[Tuple[int, int, int]] = []
        value, witness = -1, -1
        try:
            self._phase2(order, best, cuts)
            # Phase 3：每块内的离心率
            for u in order:
                e, x = self._ecc.eccentricity(u)
                cand = best[u][0] + e
                if cand > value or (cand == value and x < witness):
                    value, witness = cand, x
        finally:
            self._relink(cuts)

        def tie(v: int) -> TieDist:
            d, h = index.dist_hops(v, witness)
            return (self._alpha[v] + d, h, v)

        terminal = min(self._alpha, key=tie)
        return FarthestReport(value, terminal, witness)
