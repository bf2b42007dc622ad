import logging
from typing import List, Optional, Tuple
import numpy as np
from augtree.core.tree import Tree
from augtree.exceptions import RangeQueryError


logger = logging.getLogger(__name__)


class StaticTreeIndex:
    """
    静态树索引：LCA、level ancestor、距离+跳数、路径第 i 个顶点

    - LCA: Euler 序 + 稀疏表（键为 depth << bits | vertex）
    - level ancestor: 跳指针 + 长路径梯子（ladder）
    预处理 O(n log n)，查询 O(1)。构造后只读，可被多线程共享。
    """

    def __init__(self, tree: Tree, root: Optional[int] = None):
        self.tree = tree
        self.n = n = tree.n
        self.root = r = tree.root if root is None else root

        # 1. 定根：父亲、深度、到根距离
        parent = [-1] * n
        depth = [0] * n
        dtr = [0] * n
        kids: List[List[int]] = [[] for _ in range(n)]
        order = [r]
        seen = [False] * n
        seen[r] = True
        adj = tree.adjacency()
        i = 0
        while i < len(order):
            x = order[i]
            i += 1
            for y, c in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    parent[y] = x
                    depth[y] = depth[x] + 1
                    dtr[y] = dtr[x] + c
                    kids[x].append(y)
                    order.append(y)
        self.parent = parent
        self.depth = depth
        self.dtr = dtr
        self.order = order
        self.kids = kids

        self._build_lca()
        self._build_level_ancestor()
        logger.debug(f"StaticTreeIndex 构建完成: n={n}, root={r}, 稀疏表层数={len(self._table)}")

    # ---------- 构建 ----------

    def _build_lca(self) -> None:
        n, kids, depth = self.n, self.kids, self.depth
        first = [0] * n
        euler = [self.root]
        stack = [[self.root, 0]]
        while stack:
            top = stack[-1]
            v, i = top
            if i < len(kids[v]):
                top[1] = i + 1
                c = kids[v][i]
                first[c] = len(euler)
                euler.append(c)
                stack.append([c, 0])
            else:
                stack.pop()
                if stack:
                    euler.append(stack[-1][0])

        self._bits = max(1, n.bit_length())
        self._mask = (1 << self._bits) - 1
        ev = np.asarray(euler, dtype=np.int64)
        dv = np.asarray(depth, dtype=np.int64)
        keys = (dv[ev] << self._bits) | ev

        table = [keys]
        span = 2
        while span <= len(keys):
            prev = table[-1]
            half = span >> 1
            table.append(np.minimum(prev[:-half], prev[half:]))
            span <<= 1
        self._first = first
        self._table = table

    def _build_level_ancestor(self) -> None:
        n, parent, depth, kids = self.n, self.parent, self.depth, self.kids

        # 跳指针：jump[j][v] 为 v 的第 2^j 个祖先（根的祖先取根自身）
        up = np.asarray(parent, dtype=np.int64)
        up[self.root] = self.root
        levels = max(1, max(depth).bit_length())
        jump = [up]
        for _ in range(1, levels):
            jump.append(jump[-1][jump[-1]])
        self._jump = jump

        # 长路径分解
        height = [0] * n
        long_child = [-1] * n
        for v in reversed(self.order):
            best = -1
            for c in kids[v]:
                if height[c] + 1 > best:
                    best = height[c] + 1
                    long_child[v] = c
            height[v] = max(best, 0)

        flat: List[int] = []
        lad_pos = [0] * n
        for head in self.order:
            if head != self.root and long_child[parent[head]] == head:
                continue
            path = [head]
            while long_child[path[-1]] >= 0:
                path.append(long_child[path[-1]])
            ext = []
            x = parent[head]
            while x >= 0 and len(ext) < len(path):
                ext.append(x)
                x = parent[x]
            base = len(flat) + len(ext)
            flat.extend(reversed(ext))
            flat.extend(path)
            for idx, v in enumerate(path):
                lad_pos[v] = base + idx
        self._ladder = flat
        self._lad_pos = lad_pos

    # ---------- 查询 ----------

    def lca(self, u: int, v: int) -> int:
        l, r = self._first[u], self._first[v]
        if l > r:
            l, r = r, l
        j = (r - l + 1).bit_length() - 1
        t = self._table[j]
        a = t[l]
        b = t[r - (1 << j) + 1]
        return int(a if a < b else b) & self._mask

    def level_ancestor(self, v: int, hops: int) -> int:
        """v 上方跳数为 hops 的祖先"""
        if hops < 0 or hops > self.depth[v]:
            raise RangeQueryError(f"level_ancestor 越界: v={v}, hops={hops}, depth={self.depth[v]}")
        if hops == 0:
            return v
        j = hops.bit_length() - 1
        w = int(self._jump[j][v])
        rest = hops - (1 << j)
        return self._ladder[self._lad_pos[w] - rest]

    def dist(self, u: int, v: int) -> int:
        w = self.lca(u, v)
        return self.dtr[u] + self.dtr[v] - 2 * self.dtr[w]

    def dist_hops(self, u: int, v: int) -> Tuple[int, int]:
        w = self.lca(u, v)
        return (
            self.dtr[u] + self.dtr[v] - 2 * self.dtr[w],
            self.depth[u] + self.depth[v] - 2 * self.depth[w],
        )

    def path_vertex(self, u: int, v: int, i: int) -> int:
        """u->v 路径上的第 i 个顶点（从 1 开始，x_1 = u）"""
        w = self.lca(u, v)
        du = self.depth[u] - self.depth[w]
        hops = du + self.depth[v] - self.depth[w]
        if i < 1 or i > hops + 1:
            raise RangeQueryError(f"path_vertex 越界: i={i}, 路径顶点数={hops + 1}")
        t = i - 1
        if t <= du:
            return self.level_ancestor(u, t)
        return self.level_ancestor(v, hops - t)

    def is_ancestor(self, a: int, v: int) -> bool:
        return self.depth[a] <= self.depth[v] and self.level_ancestor(v, self.depth[v] - self.depth[a]) == a
